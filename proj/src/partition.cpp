#include "partq/partition.hpp"

#include "partq/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace partq {

namespace {

void require_same_universe(const Partition& a, const Partition& b) {
    if (a.universe() != b.universe()) {
        throw UniverseMismatch("partitions live on different universes");
    }
}

}  // namespace

Partition::Partition(Universe universe, std::vector<std::vector<int>> blocks)
    : universe_(std::move(universe)) {
    const int n = universe_.size();
    block_of_.assign(n, -1);
    for (auto& block : blocks) {
        if (block.empty()) {
            throw EmptyBlockError("partition blocks must be non-empty");
        }
        std::sort(block.begin(), block.end());
        for (std::size_t m = 0; m < block.size(); ++m) {
            const int atom = block[m];
            if (atom < 0 || atom >= n) {
                throw AtomNotInUniverse("atom index " + std::to_string(atom) + " out of range");
            }
            if (m > 0 && block[m] == block[m - 1]) {
                throw OverlapError("atom '" + universe_.label(atom) +
                                   "' listed twice in one block");
            }
            if (block_of_[atom] != -1) {
                throw OverlapError("atom '" + universe_.label(atom) + "' appears in two blocks");
            }
            block_of_[atom] = 0;  // mark seen; real ids assigned below
        }
    }
    for (int atom = 0; atom < n; ++atom) {
        if (block_of_[atom] == -1) {
            throw CoverError("atom '" + universe_.label(atom) + "' is not covered by any block");
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
        for (int atom : blocks_[b]) block_of_[atom] = b;
    }
}

Partition Partition::discrete(const Universe& universe) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(universe.size());
    for (int i = 0; i < universe.size(); ++i) blocks.push_back({i});
    return Partition(universe, std::move(blocks));
}

Partition Partition::indiscrete(const Universe& universe) {
    std::vector<int> all(universe.size());
    std::iota(all.begin(), all.end(), 0);
    return Partition(universe, {std::move(all)});
}

std::string Partition::notation() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) out += ", ";
        for (int atom : blocks_[b]) out += universe_.label(atom);
    }
    out += "}";
    return out;
}

std::vector<std::vector<std::string>> Partition::block_names() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(blocks_.size());
    for (const auto& block : blocks_) {
        std::vector<std::string> names;
        names.reserve(block.size());
        for (int atom : block) names.push_back(universe_.label(atom));
        out.push_back(std::move(names));
    }
    return out;
}

bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
}

Partition make_partition(const Universe& universe,
                         const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<int>> idx_blocks;
    idx_blocks.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<int> idx;
        idx.reserve(block.size());
        for (const auto& name : block) idx.push_back(universe.index_of(name));
        idx_blocks.push_back(std::move(idx));
    }
    return Partition(universe, std::move(idx_blocks));
}

PairRelation dit_set(const Partition& pi) {
    PairRelation r(pi.universe());
    const int n = pi.universe().size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pi.block_of(i) != pi.block_of(j)) {
                r.set(i, j);
                r.set(j, i);
            }
        }
    }
    return r;
}

PairRelation indit_set(const Partition& pi) { return complement_of(dit_set(pi)); }

Partition join(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    const int n = pi.universe().size();
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int atom = 0; atom < n; ++atom) {
        cells[{pi.block_of(atom), sigma.block_of(atom)}].push_back(atom);
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(cells.size());
    for (auto& [key, atoms] : cells) blocks.push_back(std::move(atoms));
    return Partition(pi.universe(), std::move(blocks));
}

Partition meet(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    const int n = pi.universe().size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto* part : {&pi, &sigma}) {
        for (const auto& block : part->blocks()) {
            for (std::size_t m = 1; m < block.size(); ++m) unite(block[0], block[m]);
        }
    }
    std::map<int, std::vector<int>> components;
    for (int atom = 0; atom < n; ++atom) components[find(atom)].push_back(atom);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(components.size());
    for (auto& [root, atoms] : components) blocks.push_back(std::move(atoms));
    return Partition(pi.universe(), std::move(blocks));
}

bool refines(const Partition& sigma, const Partition& pi) {
    require_same_universe(sigma, pi);
    for (const auto& block : pi.blocks()) {
        const int home = sigma.block_of(block.front());
        for (int atom : block) {
            if (sigma.block_of(atom) != home) return false;
        }
    }
    return true;
}

Partition implies(const Partition& sigma, const Partition& pi) {
    require_same_universe(sigma, pi);
    std::vector<std::vector<int>> blocks;
    for (const auto& block : pi.blocks()) {
        const int home = sigma.block_of(block.front());
        bool contained = true;
        for (int atom : block) {
            if (sigma.block_of(atom) != home) {
                contained = false;
                break;
            }
        }
        if (contained) {
            for (int atom : block) blocks.push_back({atom});
        } else {
            blocks.push_back(block);
        }
    }
    return Partition(pi.universe(), std::move(blocks));
}

}  // namespace partq

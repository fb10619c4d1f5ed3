#include "partq/lattice.hpp"

#include "partq/errors.hpp"

#include <algorithm>
#include <map>

namespace partq {

namespace {

void check_cap(int n, int cap) {
    if (n > cap) {
        throw SizeCapExceeded("universe size " + std::to_string(n) +
                              " exceeds the enumeration cap of " + std::to_string(cap));
    }
}

Partition partition_from_rgs(const Universe& universe, const std::vector<int>& rgs) {
    std::vector<std::vector<int>> blocks;
    for (int atom = 0; atom < static_cast<int>(rgs.size()); ++atom) {
        const int b = rgs[atom];
        if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
        blocks[b].push_back(atom);
    }
    return Partition(universe, std::move(blocks));
}

}  // namespace

BigInt bell_number(int n) {
    if (n < 0) throw InvalidArgument("bell_number needs n >= 0");
    // Bell triangle
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

void for_each_partition(const Universe& universe,
                        const std::function<void(const Partition&)>& fn, int cap) {
    const int n = universe.size();
    check_cap(n, cap);
    // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(rgs[0..i-1]) + 1.
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);
    while (true) {
        fn(partition_from_rgs(universe, rgs));
        int i = n - 1;
        for (; i > 0; --i) {
            if (rgs[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

std::vector<Partition> enumerate_partitions(const Universe& universe, int cap) {
    std::vector<Partition> out;
    for_each_partition(universe, [&out](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

LatticeGraph lattice_graph(const Universe& universe, int cap) {
    LatticeGraph g{universe, {}, {}};
    const int n = universe.size();
    const Rational atom_prob(1, n);
    std::vector<Partition> all = enumerate_partitions(universe, cap);
    g.nodes.reserve(all.size());
    std::map<int, std::vector<int>> by_block_count;
    for (int id = 0; id < static_cast<int>(all.size()); ++id) {
        const Partition& p = all[id];
        Rational sum_sq = 0;
        for (const auto& block : p.blocks()) {
            const Rational pr = Rational(static_cast<int>(block.size()), n);
            sum_sq += pr * pr;
        }
        g.nodes.push_back(LatticeNode{p, p.notation(), 1 - sum_sq, p.is_discrete()});
        by_block_count[p.block_count()].push_back(id);
    }
    // Covers in the refinement order are exactly "split one block in two":
    // sigma is covered by pi iff sigma <= pi and pi has one more block.
    for (const auto& [m, coarser_ids] : by_block_count) {
        auto finer = by_block_count.find(m + 1);
        if (finer == by_block_count.end()) continue;
        for (int cid : coarser_ids) {
            for (int fid : finer->second) {
                if (refines(all[cid], all[fid])) {
                    g.edges.emplace_back(cid, fid);
                }
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace partq

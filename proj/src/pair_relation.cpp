#include "partq/pair_relation.hpp"

#include "partq/errors.hpp"

#include <utility>

namespace partq {

namespace {

void require_same_universe(const PairRelation& a, const PairRelation& b) {
    if (a.universe() != b.universe()) {
        throw UniverseMismatch("relations live on different universes");
    }
}

}  // namespace

PairRelation::PairRelation(Universe universe)
    : universe_(std::move(universe)),
      bits_(static_cast<std::size_t>(universe_.size()) * universe_.size(), false) {}

PairRelation PairRelation::diagonal(const Universe& universe) {
    PairRelation r(universe);
    for (int i = 0; i < universe.size(); ++i) r.set(i, i);
    return r;
}

PairRelation PairRelation::full(const Universe& universe) {
    PairRelation r(universe);
    r.bits_.assign(r.bits_.size(), true);
    return r;
}

int PairRelation::count() const {
    int c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
}

bool PairRelation::is_reflexive() const {
    for (int i = 0; i < dim(); ++i) {
        if (!contains(i, i)) return false;
    }
    return true;
}

bool PairRelation::is_irreflexive() const {
    for (int i = 0; i < dim(); ++i) {
        if (contains(i, i)) return false;
    }
    return true;
}

bool PairRelation::is_symmetric() const {
    for (int i = 0; i < dim(); ++i) {
        for (int j = i + 1; j < dim(); ++j) {
            if (contains(i, j) != contains(j, i)) return false;
        }
    }
    return true;
}

bool PairRelation::is_transitive() const {
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (!contains(i, j)) continue;
            for (int k = 0; k < dim(); ++k) {
                if (contains(j, k) && !contains(i, k)) return false;
            }
        }
    }
    return true;
}

bool PairRelation::is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
}

bool PairRelation::is_subset_of(const PairRelation& other) const {
    require_same_universe(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

bool operator==(const PairRelation& a, const PairRelation& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
}

PairRelation union_of(const PairRelation& a, const PairRelation& b) {
    require_same_universe(a, b);
    PairRelation out(a.universe());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.set(i, j, a.contains(i, j) || b.contains(i, j));
        }
    }
    return out;
}

PairRelation intersection_of(const PairRelation& a, const PairRelation& b) {
    require_same_universe(a, b);
    PairRelation out(a.universe());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.set(i, j, a.contains(i, j) && b.contains(i, j));
        }
    }
    return out;
}

PairRelation difference_of(const PairRelation& a, const PairRelation& b) {
    require_same_universe(a, b);
    PairRelation out(a.universe());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.set(i, j, a.contains(i, j) && !b.contains(i, j));
        }
    }
    return out;
}

PairRelation complement_of(const PairRelation& a) {
    PairRelation out(a.universe());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.set(i, j, !a.contains(i, j));
        }
    }
    return out;
}

PairRelation equivalence_closure(const PairRelation& r) {
    PairRelation out = r;
    const int n = out.dim();
    for (int i = 0; i < n; ++i) out.set(i, i);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (out.contains(i, j)) out.set(j, i);
        }
    }
    // Warshall
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!out.contains(i, k)) continue;
            for (int j = 0; j < n; ++j) {
                if (out.contains(k, j)) out.set(i, j);
            }
        }
    }
    return out;
}

}  // namespace partq

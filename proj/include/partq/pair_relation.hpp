#pragma once

#include "partq/universe.hpp"

#include <vector>

namespace partq {

/// A binary relation on U x U stored as an n x n bit grid. Both (u,v) and
/// (v,u) are stored explicitly; all counts are over ordered pairs.
class PairRelation {
public:
    explicit PairRelation(Universe universe);

    static PairRelation diagonal(const Universe& universe);
    static PairRelation full(const Universe& universe);

    const Universe& universe() const { return universe_; }
    int dim() const { return universe_.size(); }

    bool contains(int i, int j) const { return bits_[index(i, j)]; }
    void set(int i, int j, bool value = true) { bits_[index(i, j)] = value; }

    /// Number of ordered pairs in the relation.
    int count() const;

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const;
    bool is_subset_of(const PairRelation& other) const;

    friend bool operator==(const PairRelation& a, const PairRelation& b);
    friend bool operator!=(const PairRelation& a, const PairRelation& b) { return !(a == b); }

private:
    int index(int i, int j) const { return i * universe_.size() + j; }

    Universe universe_;
    std::vector<bool> bits_;
};

PairRelation union_of(const PairRelation& a, const PairRelation& b);
PairRelation intersection_of(const PairRelation& a, const PairRelation& b);
PairRelation difference_of(const PairRelation& a, const PairRelation& b);
PairRelation complement_of(const PairRelation& a);

/// Least reflexive-symmetric-transitive relation containing `r`
/// (Warshall closure; used to verify the union-find meet).
PairRelation equivalence_closure(const PairRelation& r);

}  // namespace partq

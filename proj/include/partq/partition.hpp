#pragma once

#include "partq/pair_relation.hpp"
#include "partq/universe.hpp"

#include <string>
#include <vector>

namespace partq {

/// A partition of a universe: disjoint non-empty blocks covering every atom.
/// Canonical form: block members sorted ascending, blocks sorted by their
/// smallest member, so equality is structural.
class Partition {
public:
    /// Validates and canonicalizes. Throws OverlapError, CoverError,
    /// EmptyBlockError.
    Partition(Universe universe, std::vector<std::vector<int>> blocks);

    /// All singletons (the top of the refinement order).
    static Partition discrete(const Universe& universe);
    /// Single block (the bottom).
    static Partition indiscrete(const Universe& universe);

    const Universe& universe() const { return universe_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_of(int atom) const { return block_of_.at(atom); }

    bool is_discrete() const { return block_count() == universe_.size(); }
    bool is_indiscrete() const { return block_count() == 1; }

    /// Figure-style rendering with inner braces elided: "{ab, c}".
    std::string notation() const;
    std::vector<std::vector<std::string>> block_names() const;

    friend bool operator==(const Partition& a, const Partition& b);
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.blocks_ < b.blocks_; }

private:
    Universe universe_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Builds a partition from atom names. Throws AtomNotInUniverse on unknown
/// names plus the Partition constructor errors.
Partition make_partition(const Universe& universe,
                         const std::vector<std::vector<std::string>>& blocks);

/// Ordered pairs of atoms lying in different blocks.
PairRelation dit_set(const Partition& pi);
/// Complement of the ditset: the equivalence relation of the partition.
PairRelation indit_set(const Partition& pi);

/// Blocks are all non-empty pairwise intersections.
Partition join(const Partition& pi, const Partition& sigma);
/// Least upper closure: merge blocks sharing atoms until fixpoint (union-find).
Partition meet(const Partition& pi, const Partition& sigma);

/// sigma <= pi in the refinement order: every block of pi lies inside a
/// block of sigma. Equivalent to dit(sigma) being a subset of dit(pi).
bool refines(const Partition& sigma, const Partition& pi);

/// Blockwise indicator: pi-blocks contained in a sigma-block are replaced by
/// their singletons, the rest stay whole. Equals the discrete partition
/// exactly when refines(sigma, pi).
Partition implies(const Partition& sigma, const Partition& pi);

}  // namespace partq

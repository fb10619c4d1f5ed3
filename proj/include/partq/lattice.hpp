#pragma once

#include "partq/partition.hpp"
#include "partq/rational.hpp"
#include "partq/universe.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace partq {

inline constexpr int kDefaultEnumerationCap = 12;

BigInt bell_number(int n);

/// All partitions of the universe in restricted-growth-string order
/// (indiscrete first, discrete last). Throws SizeCapExceeded when
/// n exceeds the cap.
std::vector<Partition> enumerate_partitions(const Universe& universe,
                                            int cap = kDefaultEnumerationCap);

/// Memory-light variant of enumerate_partitions, same order.
void for_each_partition(const Universe& universe,
                        const std::function<void(const Partition&)>& fn,
                        int cap = kDefaultEnumerationCap);

struct LatticeNode {
    Partition partition;
    std::string label;      // "{ab, c}"
    Rational entropy;       // logical entropy under equiprobable atoms
    bool classical = false; // true only for the discrete partition
};

/// Hasse diagram of the refinement order. Edges run coarser -> finer and are
/// exactly the covering pairs.
struct LatticeGraph {
    Universe universe;
    std::vector<LatticeNode> nodes;
    std::vector<std::pair<int, int>> edges;
};

LatticeGraph lattice_graph(const Universe& universe, int cap = kDefaultEnumerationCap);

}  // namespace partq

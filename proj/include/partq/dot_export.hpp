#pragma once

#include "partq/lattice.hpp"
#include "partq/logical_entropy.hpp"
#include "partq/qmsets.hpp"

#include <string>
#include <vector>

namespace partq {

/// Hasse diagram, bottom-to-top. The discrete partition (the classical node)
/// is drawn filled; all other nodes are dashed.
std::string to_dot(const LatticeGraph& g);

/// The p_i x p_j grid as a single HTML-table node; diagonal cells shaded.
std::string to_dot(const BoxDiagram& b);

/// Slit-scenario trace overlaid on the 3-atom partition lattice: evolutions
/// as solid arrows, reductions as dashed arrows labeled with probabilities.
std::string trace_to_dot(const Universe& universe,
                         const std::vector<qmsets::TraceEvent>& trace);

}  // namespace partq

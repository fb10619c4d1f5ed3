#pragma once

#include "partq/pair_relation.hpp"
#include "partq/partition.hpp"
#include "partq/prob_dist.hpp"
#include "partq/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace partq {

/// Product measure (p x p)(R) = sum of p_i * p_j over ordered pairs in R.
Rational product_measure(const PairRelation& r, const ProbDist& p);

/// h(pi) = 1 - sum Pr(B_j)^2. Equals the product measure of dit(pi).
Rational logical_entropy(const Partition& pi, const ProbDist& p);

/// h(p) = 1 - sum p_i^2: the logical entropy of the discrete partition.
Rational logical_entropy(const ProbDist& p);

enum class CompoundKind { joint, difference, mutual };

/// Product-measure value of dit(pi) u dit(sigma), dit(pi) - dit(sigma) or
/// dit(pi) n dit(sigma). The difference kind reads "dits of pi minus dits of
/// sigma", i.e. h(pi | sigma).
Rational compound_entropy(CompoundKind kind, const Partition& pi, const Partition& sigma,
                          const ProbDist& p);

/// Sparse symmetric-agnostic distance table with zero diagonal. Lookups off
/// the diagonal must be present (MissingDistance otherwise).
class DistanceFunction {
public:
    explicit DistanceFunction(Universe universe);

    /// 1 - delta_jk: distance 1 between distinct atoms, 0 on the diagonal.
    static DistanceFunction logical(const Universe& universe);

    const Universe& universe() const { return universe_; }
    void set(int i, int j, const Rational& d);
    Rational at(int i, int j) const;

private:
    Universe universe_;
    std::map<std::pair<int, int>, Rational> d_;
};

/// sum over j,k of p_j * p_k * d_jk.
Rational quadratic_entropy(const ProbDist& p, const DistanceFunction& d);

struct BoxCell {
    int row = 0;
    int col = 0;
    Rational value;        // p_row * p_col
    bool on_block = false; // diagonal cell
};

struct BoxDiagram {
    Universe universe;
    std::vector<BoxCell> cells;     // row-major order
    Rational off_block_total;       // equals h(p)
};

BoxDiagram box_diagram(const ProbDist& p);

}  // namespace partq

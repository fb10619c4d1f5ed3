#pragma once

#include "partq/rational.hpp"
#include "partq/universe.hpp"

#include <vector>

namespace partq {

/// Exact rational point probabilities on a universe. The values must be
/// non-negative and sum to 1 exactly.
class ProbDist {
public:
    ProbDist(Universe universe, std::vector<Rational> p);

    static ProbDist uniform(const Universe& universe);

    const Universe& universe() const { return universe_; }
    const Rational& p(int atom) const { return p_.at(atom); }
    const std::vector<Rational>& values() const { return p_; }
    bool strictly_positive() const;

private:
    Universe universe_;
    std::vector<Rational> p_;
};

/// Pr(S) as an exact rational sum. Throws UniverseMismatch when the subset
/// and distribution disagree on the universe.
Rational prob_of_subset(const AtomSet& subset, const ProbDist& p);

}  // namespace partq

#include "partq/prob_dist.hpp"

#include "partq/errors.hpp"

#include <utility>

namespace partq {

ProbDist::ProbDist(Universe universe, std::vector<Rational> p)
    : universe_(std::move(universe)), p_(std::move(p)) {
    if (static_cast<int>(p_.size()) != universe_.size()) {
        throw InvalidDistribution("distribution has " + std::to_string(p_.size()) +
                                  " entries for a universe of size " +
                                  std::to_string(universe_.size()));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) {
            throw InvalidDistribution("negative probability at atom '" +
                                      universe_.label(static_cast<int>(i)) + "'");
        }
        total += p_[i];
    }
    if (total != 1) {
        throw InvalidDistribution("probabilities sum to " + to_string(total) + ", expected 1");
    }
}

ProbDist ProbDist::uniform(const Universe& universe) {
    std::vector<Rational> p(universe.size(), Rational(1, universe.size()));
    return ProbDist(universe, std::move(p));
}

bool ProbDist::strictly_positive() const {
    for (const auto& v : p_) {
        if (v == 0) return false;
    }
    return true;
}

Rational prob_of_subset(const AtomSet& subset, const ProbDist& p) {
    if (subset.universe() != p.universe()) {
        throw UniverseMismatch("subset and distribution live on different universes");
    }
    Rational total = 0;
    for (int atom : subset.indices()) total += p.p(atom);
    return total;
}

}  // namespace partq

#include "partq/logical_entropy.hpp"

#include "partq/errors.hpp"

#include <utility>

namespace partq {

namespace {

void require_same_universe(const Universe& a, const Universe& b, const char* what) {
    if (a != b) {
        throw UniverseMismatch(std::string(what) + " live on different universes");
    }
}

}  // namespace

Rational product_measure(const PairRelation& r, const ProbDist& p) {
    require_same_universe(r.universe(), p.universe(), "relation and distribution");
    Rational total = 0;
    const int n = r.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (r.contains(i, j)) total += p.p(i) * p.p(j);
        }
    }
    return total;
}

Rational logical_entropy(const Partition& pi, const ProbDist& p) {
    require_same_universe(pi.universe(), p.universe(), "partition and distribution");
    Rational sum_sq = 0;
    for (const auto& block : pi.blocks()) {
        Rational pr = 0;
        for (int atom : block) pr += p.p(atom);
        sum_sq += pr * pr;
    }
    return 1 - sum_sq;
}

Rational logical_entropy(const ProbDist& p) {
    Rational sum_sq = 0;
    for (const auto& v : p.values()) sum_sq += v * v;
    return 1 - sum_sq;
}

Rational compound_entropy(CompoundKind kind, const Partition& pi, const Partition& sigma,
                          const ProbDist& p) {
    require_same_universe(pi.universe(), sigma.universe(), "partitions");
    const PairRelation dp = dit_set(pi);
    const PairRelation ds = dit_set(sigma);
    switch (kind) {
        case CompoundKind::joint:
            return product_measure(union_of(dp, ds), p);
        case CompoundKind::difference:
            return product_measure(difference_of(dp, ds), p);
        case CompoundKind::mutual:
            return product_measure(intersection_of(dp, ds), p);
    }
    throw InvalidArgument("unknown compound kind");
}

DistanceFunction::DistanceFunction(Universe universe) : universe_(std::move(universe)) {}

DistanceFunction DistanceFunction::logical(const Universe& universe) {
    DistanceFunction d(universe);
    for (int i = 0; i < universe.size(); ++i) {
        for (int j = 0; j < universe.size(); ++j) {
            if (i != j) d.set(i, j, 1);
        }
    }
    return d;
}

void DistanceFunction::set(int i, int j, const Rational& d) {
    if (i == j) {
        if (d != 0) throw InvalidArgument("diagonal distances must be zero");
        return;
    }
    if (d < 0) throw InvalidArgument("distances must be non-negative");
    d_[{i, j}] = d;
}

Rational DistanceFunction::at(int i, int j) const {
    if (i == j) return 0;
    auto it = d_.find({i, j});
    if (it == d_.end()) {
        throw MissingDistance("no distance defined for (" + universe_.label(i) + ", " +
                              universe_.label(j) + ")");
    }
    return it->second;
}

Rational quadratic_entropy(const ProbDist& p, const DistanceFunction& d) {
    require_same_universe(p.universe(), d.universe(), "distribution and distance function");
    Rational total = 0;
    const int n = p.universe().size();
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            total += p.p(j) * p.p(k) * d.at(j, k);
        }
    }
    return total;
}

BoxDiagram box_diagram(const ProbDist& p) {
    BoxDiagram out{p.universe(), {}, 0};
    const int n = p.universe().size();
    out.cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool on_block = (i == j);
            const Rational value = p.p(i) * p.p(j);
            if (!on_block) out.off_block_total += value;
            out.cells.push_back(BoxCell{i, j, value, on_block});
        }
    }
    return out;
}

}  // namespace partq

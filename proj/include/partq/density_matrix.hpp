#pragma once

#include "partq/pair_relation.hpp"
#include "partq/partition.hpp"
#include "partq/prob_dist.hpp"
#include "partq/universe.hpp"

#include <complex>
#include <vector>

namespace partq {

/// Incidence matrices of binary relations share the bit-grid representation.
using RelationMatrix = PairRelation;

/// Diagonal 0/1 matrix with ones exactly at the members of S.
RelationMatrix rel_delta(const AtomSet& s);

/// Full 1-block on S x S; equals the outer product of the 0/1 indicator
/// column of S with its transpose.
RelationMatrix rel_full(const AtomSet& s);

/// Exact rank over the rationals.
int relation_rank(const RelationMatrix& r);

inline constexpr double kDefaultEps = 1e-12;

/// Unit-trace positive-semidefinite Hermitian matrix over a labeled basis.
/// Construction from raw entries validates all three properties within eps
/// (the PSD check runs an explicit eigenvalue decomposition; fine at desk
/// scale, guards hand-entered matrices).
class DensityMatrix {
public:
    DensityMatrix(Universe basis, std::vector<std::complex<double>> row_major,
                  double eps = kDefaultEps);

    /// Pure state of the superposition event on S: entries
    /// sqrt(p_j p_k)/Pr(S) on S x S. Throws EmptySupport / ZeroProbability.
    static DensityMatrix superposition(const AtomSet& s, const ProbDist& p,
                                       double eps = kDefaultEps);

    /// Mixed state of a partition: the Pr(B_j)-weighted sum of the block
    /// superposition states; block-diagonal with entries sqrt(p_j p_k).
    /// Requires a strictly positive distribution.
    static DensityMatrix mixture(const Partition& pi, const ProbDist& p,
                                 double eps = kDefaultEps);

    const Universe& basis() const { return basis_; }
    int dim() const { return basis_.size(); }
    double eps() const { return eps_; }
    std::complex<double> at(int i, int j) const { return m_[i * dim() + j]; }
    const std::vector<std::complex<double>>& entries() const { return m_; }

    /// tr[rho^2] = sum |rho_jk|^2 for Hermitian rho.
    double purity() const;
    bool is_pure() const;

private:
    struct Unchecked {};
    DensityMatrix(Universe basis, std::vector<std::complex<double>> row_major, double eps,
                  Unchecked);
    void validate() const;

    Universe basis_;
    std::vector<std::complex<double>> m_;
    double eps_;
};

struct AmplitudeVector {
    Universe basis;
    std::vector<std::complex<double>> amplitudes;
};

/// Eigenvector for the eigenvalue 1 of a pure state, canonicalized so the
/// first non-zero amplitude is real positive. Throws NotPureState otherwise.
AmplitudeVector extract_amplitudes(const DensityMatrix& rho);

/// 0/1 pattern of entries with |rho_jk| > eps.
RelationMatrix support_matrix(const DensityMatrix& rho);

/// Total real-valued function on the basis; its level sets define the
/// projective measurement context.
class EigenvalueFunction {
public:
    EigenvalueFunction(Universe universe, std::vector<double> values);

    const Universe& universe() const { return universe_; }
    double at(int atom) const { return values_.at(atom); }
    const std::vector<double>& values() const { return values_; }

    /// Inverse-image partition {f^-1(r)}.
    Partition induced_partition() const;
    /// Distinct eigenvalues, ascending.
    std::vector<double> distinct_values() const;

private:
    Universe universe_;
    std::vector<double> values_;
};

struct MeasurementOutcome {
    double eigenvalue = 0.0;
    double probability = 0.0;
    DensityMatrix post_state;
};

struct MeasurementResult {
    DensityMatrix state;  // the projected mixture
    std::vector<MeasurementOutcome> outcomes;  // zero-probability outcomes omitted
};

/// Projective measurement: keeps entries whose row and column carry the same
/// eigenvalue, zeroes the rest, and decomposes the result per outcome.
MeasurementResult lueders_measure(const DensityMatrix& rho, const EigenvalueFunction& f);

/// h(rho) = 1 - tr[rho^2].
double quantum_logical_entropy(const DensityMatrix& rho);

struct EntropyIncrease {
    double increase = 0.0;    // h after measurement minus h before
    double zeroed_sum = 0.0;  // sum of |rho_jk|^2 over the zeroed entries
};

EntropyIncrease measurement_entropy_increase(const DensityMatrix& rho,
                                             const EigenvalueFunction& f);

}  // namespace partq

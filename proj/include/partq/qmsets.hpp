#pragma once

#include "partq/rational.hpp"
#include "partq/universe.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace partq::qmsets {

/// A subset of the universe treated as a vector over the two-element field:
/// addition is symmetric difference, the zero vector is the empty set.
class SubsetVector {
public:
    SubsetVector(Universe universe, std::uint64_t mask);
    static SubsetVector from_names(const Universe& universe,
                                   const std::vector<std::string>& names);
    static SubsetVector zero(const Universe& universe);

    const Universe& universe() const { return universe_; }
    std::uint64_t mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }
    bool contains(int atom) const { return (mask_ >> atom) & 1u; }
    int size() const;
    std::vector<int> members() const;
    std::vector<std::string> names() const;
    std::string notation() const;  // "{a,c}", "{}" for the zero vector

    friend bool operator==(const SubsetVector& a, const SubsetVector& b) {
        return a.universe_ == b.universe_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const SubsetVector& a, const SubsetVector& b) { return !(a == b); }

private:
    Universe universe_;
    std::uint64_t mask_;
};

/// Mod-2 addition (symmetric difference). Throws UniverseMismatch.
SubsetVector add_vectors(const SubsetVector& x, const SubsetVector& y);

/// Images of the universe atoms under a basis change / linear evolution map.
/// The images must be linearly independent over the two-element field
/// (checked by elimination; RankDeficientBasis otherwise).
class BasisTable {
public:
    BasisTable(Universe universe, std::string name, std::vector<SubsetVector> images,
               std::vector<std::string> vector_names);

    /// Identity images, vector names equal to the atom labels.
    static BasisTable standard(const Universe& universe);

    const Universe& universe() const { return universe_; }
    const std::string& name() const { return name_; }
    const SubsetVector& image(int atom) const { return images_.at(atom); }
    const std::vector<SubsetVector>& images() const { return images_; }
    const std::string& vector_name(int i) const { return vector_names_.at(i); }
    const std::vector<std::string>& vector_names() const { return vector_names_; }

private:
    Universe universe_;
    std::string name_;
    std::vector<SubsetVector> images_;
    std::vector<std::string> vector_names_;
};

/// Unique basis-index set J with sum over J of the images equal to v.
std::vector<int> express_in_basis(const SubsetVector& v, const BasisTable& basis);

/// Linear extension of the atom images: the image of v is the mod-2 sum of
/// the images of its members.
SubsetVector apply_evolution(const SubsetVector& v, const BasisTable& basis);

/// The spreading map a -> {a,b}, b -> {a,b,c}, c -> {b,c} with primed names.
BasisTable prime_basis(const Universe& universe);
/// A second alternative basis: a -> {a}, b -> {a,b}, c -> {a,c}.
BasisTable double_prime_basis(const Universe& universe);
/// Standard, primed and double-primed bases of the 3-atom universe.
std::vector<BasisTable> reference_bases(const Universe& universe);

/// All 2^n abstract vectors, each expressed in every basis. Row r holds the
/// coefficient index set of the vector with mask r per basis; the row set is
/// closed under mod-2 addition.
struct KetTable {
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::string>> vector_names;  // per basis
    std::vector<std::vector<std::vector<int>>> rows;     // rows[r][b] = sorted indices
};

KetTable ket_table(const std::vector<BasisTable>& bases);

/// Two-stage slit topology on a 3-atom universe: emitter at the middle atom,
/// slits at the outer two, followed by a detection wall. The evolution table
/// may be replaced by any non-singular map; the default reproduces the
/// spreading dynamics.
struct SlitScenario {
    Universe universe;
    BasisTable evolution;
    bool detection = false;

    SlitScenario(Universe universe, BasisTable evolution, bool detection);
    static SlitScenario standard(bool detection);
};

/// Exact outcome distribution over {screen:<mid>, wall:<atom>...}. Reductions
/// are equiprobable over the support of the reducing vector; with detection
/// the slit alternatives multiply-and-add probabilities, without it the
/// superposition evolves linearly and reduces only at the wall.
struct OutcomeDist {
    std::map<std::string, Rational> outcomes;
};

OutcomeDist run_double_slit(const SlitScenario& scenario);

enum class StepKind { evolution, reduction };

struct TraceEvent {
    int step = 0;
    StepKind kind = StepKind::evolution;
    SubsetVector from;
    SubsetVector to;
    Rational probability;  // 1 for evolutions
};

/// Ordered event list for rendering the lattice-path figures. Outgoing
/// reduction probabilities sum to 1 per (step, from) group.
std::vector<TraceEvent> trace_lattice_path(const SlitScenario& scenario);

}  // namespace partq::qmsets

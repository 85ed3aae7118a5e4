#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdesign/clifford.hpp"
#include "qdesign/matrix.hpp"
#include "qdesign/weyl_heisenberg.hpp"

namespace qdesign {

/// A finite group is a unitary 2-design exactly when its frame potential
/// hits this floor.
inline constexpr double kFramePotentialFloor = 2.0;

/// |frame potential - 2| at or below this counts as a positive verdict.
inline constexpr double kTwoDesignFpTol = 1e-6;

/// Commutant computations are refused above this total dimension; the dense
/// nullspace problem has dim^4 unknowns.
inline constexpr std::int64_t kCommutantDimensionCap = 12;

/// (1/|G|) sum over g of |Tr g|^4. Phase-independent, so projective
/// representatives are enough.
double frame_potential_single_sum(const std::vector<ProjectiveUnitary>& group,
                                  unsigned threads = 1);

/// (1/|G|^2) double sum over (g, h) of |Tr(g^dagger h)|^4. For a group this
/// agrees with the single sum; both are exposed so that the equality can be
/// checked numerically.
double frame_potential_double_sum(const std::vector<ProjectiveUnitary>& group,
                                  unsigned threads = 1);

/// Dimension of the algebra commuting with g (x) conj(g) for every generator
/// g, computed as the nullspace dimension of the stacked linear constraints
/// K X - X K = 0 in vec form. Equals the sum of squared multiplicities of
/// the irreducible components, hence the exact frame potential of the
/// generated group. Throws ResourceLimitError above kCommutantDimensionCap.
std::size_t commutant_dimension(const GroupSpec& spec, double rank_tol = kRankTol);

/// Displacement index vectors on dims grouped by their order modulo phase.
struct OrderClassPartition {
  std::vector<std::int64_t> dims;
  std::map<std::int64_t, std::vector<MultiWHIndex>> classes;

  std::size_t class_count() const { return classes.size(); }
  std::map<std::int64_t, std::size_t> class_sizes() const;
};

OrderClassPartition order_class_partition(const std::vector<std::int64_t>& dims);

/// Verifies that conjugation by every generator of the spec maps each
/// displacement into the span of the displacements of the same order, with
/// Frobenius residual at most tol. This invariance holds for any operator
/// that normalizes the displacement group, whatever generating set is
/// chosen, which is what makes order-class counting a generator-independent
/// argument.
bool order_class_invariance_check(const GroupSpec& spec, double tol = 1e-8);

/// |Tr(u (x) conj(u)) - sum_{r,s} <E_rs, u E_rs u^dagger>|. Both sides equal
/// |Tr u|^2, so the returned difference is numerical noise.
double adjoint_trace_identity_check(const ComplexMatrix& u);

/// (1/n) sum_g conj(chi_a(g)) chi_b(g) for two character value lists over a
/// common group element order.
Complex character_inner_product(const std::vector<Complex>& chi_a,
                                const std::vector<Complex>& chi_b);

enum class Verdict { two_design, not_two_design, subgroup_inconclusive };

const char* to_string(Verdict v);

struct DesignReport {
  std::string label;
  std::optional<std::size_t> group_size;
  std::optional<double> frame_potential;
  std::optional<std::size_t> commutant_dimension;
  std::size_t order_class_count = 0;  // 0 when not applicable
  std::map<std::int64_t, std::size_t> order_class_sizes;
  Verdict verdict = Verdict::subgroup_inconclusive;
};

/// How the verdict may use structural arguments about the spec.
///  - clifford_normalizer: the spec stands for the full normalizer group;
///    three or more order classes force not-two-design regardless of what
///    the generators enumerate to.
///  - wh_structured: order classes are reported but the verdict rests on
///    the enumerated group itself.
///  - plain: generators with no displacement structure attached.
enum class GroupKind { clifford_normalizer, wh_structured, plain };

struct DesignOptions {
  double fp_tol = kTwoDesignFpTol;
  double rank_tol = kRankTol;
  double equality_tol = kEqualityTol;
  std::size_t closure_limit = kDefaultClosureLimit;
  unsigned threads = 1;
  bool enumerate = true;
  bool compute_commutant = true;
};

/// Full analysis: enumerates the closure when feasible, computes the frame
/// potential and commutant dimension, partitions displacement orders, and
/// combines them into a verdict. Positive verdicts from a generated
/// subgroup are sound for any supergroup because the frame potential never
/// rises when a group grows and 2 is its floor.
DesignReport is_two_design(const GroupSpec& spec, GroupKind kind, const DesignOptions& opt = {});

/// Multiplicity bookkeeping for the order-4 cyclic group demo: the defining
/// two-dimensional representation diag(1, i^g) is squared both plainly and
/// against its conjugate, and each square is decomposed into the four
/// one-dimensional characters chi_k(g) = i^(kg).
struct CyclicSquareDemo {
  std::array<std::int64_t, 4> square_multiplicities;
  std::array<std::int64_t, 4> conjugate_square_multiplicities;
  bool components_differ;
  std::string note;
};

CyclicSquareDemo cyclic_square_demo();

}  // namespace qdesign

#pragma once

#include <cstdint>
#include <vector>

#include "qdesign/clifford.hpp"
#include "qdesign/matrix.hpp"

namespace qdesign {

inline constexpr double kChoiHermitianTol = 1e-9;
inline constexpr double kChoiEigenvalueFloor = -1e-8;
inline constexpr double kChoiTraceTol = 1e-8;

/// Choi matrix of a channel on a d-dimensional system, stored with the
/// input factor first: C = sum_ij E_ij (x) channel(E_ij). Normalization is
/// Tr C = d; trace preservation reads as partial trace over the output
/// factor equal to the identity.
struct ChoiMatrix {
  std::int64_t d = 0;
  ComplexMatrix matrix;
};

/// Throws std::invalid_argument unless the matrix is d^2 x d^2, Hermitian to
/// kChoiHermitianTol, has eigenvalues above kChoiEigenvalueFloor, and is
/// trace preserving to kChoiTraceTol.
void validate_choi(const ChoiMatrix& c);

/// SWAP |a, b> = |b, a> on a two-fold product.
ComplexMatrix swap_operator(std::int64_t d);

/// Partial trace over the second (output) factor of a d^2 x d^2 matrix.
ComplexMatrix partial_trace_output(const ComplexMatrix& m, std::int64_t d);

/// Orthogonal projection of x onto span{I, SWAP} in the Hilbert-Schmidt
/// inner product. This is exactly the two-fold Haar twirl
/// integral dU (U (x) U) x (U (x) U)^dagger. Requires d >= 2.
ComplexMatrix haar_twirl2(const ComplexMatrix& x);

/// (1/|G|) sum_g (g (x) g) x (g (x) g)^dagger. Phase choices cancel, so
/// projective representatives are enough.
ComplexMatrix group_twirl2(const std::vector<ProjectiveUnitary>& group, const ComplexMatrix& x,
                           unsigned threads = 1);

/// Largest Frobenius deviation between the group twirl and the Haar twirl
/// over all d^4 matrix units on the doubled space. Zero exactly when the
/// group is a 2-design.
double max_matrix_unit_twirl_deviation(const std::vector<ProjectiveUnitary>& group,
                                       std::int64_t d, unsigned threads = 1);

/// Choi matrix of rho -> (1/|G|) sum_g g^dagger channel(g rho g^dagger) g.
ChoiMatrix channel_twirl(const std::vector<ProjectiveUnitary>& group, const ChoiMatrix& c,
                         unsigned threads = 1);

/// Depolarizing channel rho -> p rho + (1 - p) Tr(rho) I / d.
ChoiMatrix depolarizing_choi(std::int64_t d, double p);

/// Choi matrix of the unitary conjugation channel rho -> v rho v^dagger.
ChoiMatrix conjugation_choi(const ComplexMatrix& v);

/// Choi matrix assembled from Kraus operators (completeness is validated).
ChoiMatrix choi_from_kraus(std::int64_t d, const std::vector<ComplexMatrix>& kraus);

struct DepolarizingFit {
  bool is_depolarizing;
  double p;
  double residual;
};

/// Least-squares fit of the one-parameter depolarizing family, decided by
/// the Frobenius residual against tol.
DepolarizingFit depolarizing_fit(const ChoiMatrix& c, double tol);

/// <Phi| C |Phi> / d for the maximally entangled |Phi>.
double entanglement_fidelity(const ChoiMatrix& c);

/// (d * F_entanglement + 1) / (d + 1).
double average_fidelity(const ChoiMatrix& c);

}  // namespace qdesign

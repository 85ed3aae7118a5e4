#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdesign/matrix.hpp"
#include "qdesign/weyl_heisenberg.hpp"

namespace qdesign {

/// Modulus below which an entry is skipped when choosing the phase pivot.
inline constexpr double kPivotTol = 1e-8;

/// Quantization grid for projective fingerprints.
inline constexpr double kKeyGrid = 1e-6;

/// Matrices whose fingerprints collide are confirmed equal only if their
/// Frobenius distance stays below this.
inline constexpr double kKeyFrobeniusTol = 1e-6;

inline constexpr std::size_t kDefaultClosureLimit = 200000;

/// A unitary considered modulo global phase. The stored matrix is
/// phase-canonical: the first entry in row-major order with modulus above
/// kPivotTol is real and positive. The key is the canonical matrix with
/// every real and imaginary part rounded to the kKeyGrid lattice; equal
/// group elements reached along different multiplication paths agree to
/// far better than half a grid step, so they share a key.
struct ProjectiveUnitary {
  ComplexMatrix matrix;
  std::vector<std::int64_t> key;
};

ProjectiveUnitary canonicalize(const ComplexMatrix& u, double tol = kEqualityTol);

bool same_projective_element(const ProjectiveUnitary& a, const ProjectiveUnitary& b);

/// A matrix group given by generators on a tensor product of qudit factors.
struct GroupSpec {
  std::vector<std::int64_t> dims;
  std::vector<ProjectiveUnitary> generators;
  std::string label;
};

std::int64_t total_dimension(const std::vector<std::int64_t>& dims);

/// Discrete Fourier matrix, entries omega^(jk) / sqrt(d).
ComplexMatrix fourier_matrix(std::int64_t d);

/// Quadratic phase gate diag(tau^(j^2)).
ComplexMatrix quadratic_phase(std::int64_t d);

/// Places a local operator at one tensor slot, identity elsewhere.
ComplexMatrix embed_operator(const std::vector<std::int64_t>& dims, std::size_t slot,
                             const ComplexMatrix& local);

/// Exchange of two equal-dimension factors.
ComplexMatrix swap_factors_operator(const std::vector<std::int64_t>& dims, std::size_t j,
                                    std::size_t k);

/// diag exp(2 pi i * a * b / g) on factors j and k, where a and b are the
/// local basis labels and g = gcd(d_j, d_k). Requires g > 1.
ComplexMatrix controlled_phase_operator(const std::vector<std::int64_t>& dims, std::size_t j,
                                        std::size_t k);

/// True iff conjugation by u sends every generating displacement of the
/// Weyl-Heisenberg group on dims to a phase times a single displacement,
/// with off-line residual at most tol and the phase an f-period root of
/// unity. Conjugation is multiplicative, so this certifies that u
/// normalizes the whole group.
bool normalizer_check(const ComplexMatrix& u, const std::vector<std::int64_t>& dims,
                      double tol = 1e-8);

/// Single-system candidate generators: Fourier, quadratic phase, and the two
/// unit displacements. Label "clifford:d".
GroupSpec clifford_generators(std::int64_t d);

/// Local generators embedded at every slot, plus SWAP for every pair of
/// equal-dimension factors and a controlled phase for every pair with
/// gcd(d_j, d_k) > 1. Coprime pairs need no joint generator.
GroupSpec multipartite_clifford_generators(const std::vector<std::int64_t>& dims);

/// The two unit displacements of a single system. Label "wh:d". Their
/// closure is the Weyl-Heisenberg group modulo phase (d^2 elements).
GroupSpec wh_generators(std::int64_t d);

/// Thrown when a closure would exceed its element limit. partial_count is
/// the number of distinct elements found before giving up.
class GroupTooLargeError : public ResourceLimitError {
 public:
  GroupTooLargeError(std::size_t limit, std::size_t partial);
  std::size_t partial_count;
};

/// Breadth-first closure of the generators under multiplication in the
/// projective quotient. Deterministic: the seed list is sorted by key, the
/// frontier is processed in insertion order, and the result is sorted by
/// key. Throws GroupTooLargeError beyond limit elements. tol bounds the
/// unitarity drift tolerated in products.
std::vector<ProjectiveUnitary> closure_enumerate(const GroupSpec& spec,
                                                 std::size_t limit = kDefaultClosureLimit,
                                                 double tol = kEqualityTol);

/// Index of the element of a key-sorted closure equal to x, or npos.
std::size_t find_element(const std::vector<ProjectiveUnitary>& sorted_closure,
                         const ProjectiveUnitary& x);

inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

}  // namespace qdesign

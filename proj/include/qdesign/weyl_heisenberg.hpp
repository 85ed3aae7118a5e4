#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qdesign/matrix.hpp"

namespace qdesign {

/// Phase period of the displacement algebra: f(d) = d for odd d, 2d for even d.
/// tau = -exp(i*pi/d) has multiplicative order exactly f(d), and omega = tau^2.
std::int64_t f_of(std::int64_t d);

/// tau = -exp(i*pi/d).
Complex tau_of(std::int64_t d);

/// tau^k with the exponent reduced mod f(d), evaluated from a single
/// polar form so that equal exponents give bit-identical values.
Complex tau_power(std::int64_t d, std::int64_t k);

/// Label of one Weyl-Heisenberg element tau^k D_p in dimension d.
/// Canonical form keeps 0 <= k < f(d) and 0 <= p1, p2 < d.
struct WHIndex {
  std::int64_t d = 2;
  std::int64_t k = 0;
  std::array<std::int64_t, 2> p = {0, 0};
};

bool is_canonical(const WHIndex& a);

/// Canonicalizes arbitrary integer labels into the fundamental domain.
/// Reducing p mod d is not free of charge: for even d the wraparound
/// contributes extra tau phases, which this function folds into k.
WHIndex make_canonical(std::int64_t d, std::int64_t k, std::array<std::int64_t, 2> p);

/// Diagonal phase operator T = diag(omega^0, ..., omega^(d-1)).
ComplexMatrix phase_operator(std::int64_t d);

/// Cyclic shift S: e_r -> e_(r+1 mod d); ones sit on the subdiagonal and in
/// the top-right corner.
ComplexMatrix shift_operator(std::int64_t d);

/// Displacement D_p = tau^(p1*p2) S^p1 T^p2. Accepts arbitrary integer index
/// pairs; the matrix depends on p only through the algebra relations, so
/// D over unreduced indices satisfies D_p D_q = tau^(p2*q1 - p1*q2) D_(p+q)
/// with plain integer vector addition.
ComplexMatrix displacement(std::int64_t d, std::array<std::int64_t, 2> p);

/// (p2*q1 - p1*q2) mod f(d), the phase exponent of the displacement product.
std::int64_t symplectic_form(std::int64_t d, std::array<std::int64_t, 2> p,
                             std::array<std::int64_t, 2> q);

/// Matrix realization tau^k D_p of a canonical index.
ComplexMatrix realization(const WHIndex& a);

/// Exact index-form product: realization(compose_indices(a, b)) equals
/// realization(a) * realization(b) to floating-point accuracy.
WHIndex compose_indices(const WHIndex& a, const WHIndex& b);

/// Index-form inverse; compose_indices(a, invert_index(a)) is the identity label.
WHIndex invert_index(const WHIndex& a);

/// Smallest r >= 1 with r*p = 0 mod d, i.e. d / gcd(p1, p2, d).
/// This is the order of the displacement modulo phases.
std::int64_t projective_order(const WHIndex& a);

/// Smallest r >= 1 with (tau^k D_p)^r equal to the identity matrix, found by
/// iterating compose_indices. Bounded by the group order d^2 f(d).
std::int64_t unitary_order(const WHIndex& a);

/// All d^2 f(d) canonical labels, ordered with k major, then p1, then p2.
std::vector<WHIndex> enumerate_wh(std::int64_t d);

/// Label of a tensor product of local Weyl-Heisenberg elements, one factor
/// per subsystem.
struct MultiWHIndex {
  std::vector<std::int64_t> dims;
  std::vector<WHIndex> locals;
};

void validate_multi_index(const MultiWHIndex& a);

/// Tensor product of the local realizations, factors in dims order.
ComplexMatrix multi_displacement(const MultiWHIndex& a);

/// lcm over factors of the local projective orders.
std::int64_t projective_order(const MultiWHIndex& a);

/// All prod(d_j^2) multipartite displacement labels with zero phase
/// exponents, enumerated with the last factor fastest. Their realizations
/// form an orthogonal basis of the matrix algebra on the product space:
/// Tr(D_q^dagger D_r) = n * delta_qr with n = prod(d_j).
std::vector<MultiWHIndex> displacement_index_vectors(const std::vector<std::int64_t>& dims);

}  // namespace qdesign

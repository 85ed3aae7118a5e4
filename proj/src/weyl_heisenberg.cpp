#include "qdesign/weyl_heisenberg.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qdesign {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void validate_dimension(std::int64_t d) {
  require(d >= 2 && d <= 4096, "weyl-heisenberg: dimension must be in [2, 4096]");
}

// Index components are kept small enough that every phase-exponent product
// below stays far from int64 overflow.
void validate_index_range(std::array<std::int64_t, 2> p) {
  require(std::llabs(p[0]) <= (1 << 20) && std::llabs(p[1]) <= (1 << 20),
          "weyl-heisenberg: index component out of range");
}

}  // namespace

std::int64_t f_of(std::int64_t d) {
  require(d >= 1, "f_of: dimension must be positive");
  return (d % 2 == 0) ? 2 * d : d;
}

Complex tau_of(std::int64_t d) { return tau_power(d, 1); }

Complex tau_power(std::int64_t d, std::int64_t k) {
  validate_dimension(d);
  // tau = -exp(i pi/d) = exp(i pi (d+1)/d). Reducing the angle numerator
  // mod 2d keeps the argument in [0, 2 pi) and makes equal exponents hit
  // the same code path bit for bit.
  const std::int64_t e = mod_floor(k, f_of(d));
  const std::int64_t m = mod_floor((d + 1) * e, 2 * d);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
}

bool is_canonical(const WHIndex& a) {
  return a.d >= 2 && a.k >= 0 && a.k < f_of(a.d) && a.p[0] >= 0 && a.p[0] < a.d && a.p[1] >= 0 &&
         a.p[1] < a.d;
}

WHIndex make_canonical(std::int64_t d, std::int64_t k, std::array<std::int64_t, 2> p) {
  validate_dimension(d);
  validate_index_range(p);
  const std::array<std::int64_t, 2> r = {mod_floor(p[0], d), mod_floor(p[1], d)};
  const std::array<std::int64_t, 2> c = {(p[0] - r[0]) / d, (p[1] - r[1]) / d};
  // D over integer labels is periodic only up to phase: shifting an index by
  // d in one slot multiplies the operator by tau^(d * other-slot). tau^(d^2)
  // is always 1, so the cross-carry term drops out.
  const std::int64_t k_adj = k + d * (c[0] * r[1] + c[1] * r[0]);
  return WHIndex{d, mod_floor(k_adj, f_of(d)), r};
}

ComplexMatrix phase_operator(std::int64_t d) {
  validate_dimension(d);
  ComplexMatrix t(d, d);
  for (std::int64_t j = 0; j < d; ++j) t(j, j) = tau_power(d, 2 * j);
  return t;
}

ComplexMatrix shift_operator(std::int64_t d) {
  validate_dimension(d);
  ComplexMatrix s(d, d);
  for (std::int64_t r = 0; r < d; ++r) s((r + 1) % d, r) = Complex(1.0, 0.0);
  return s;
}

ComplexMatrix displacement(std::int64_t d, std::array<std::int64_t, 2> p) {
  validate_dimension(d);
  validate_index_range(p);
  // Column r of tau^(p1 p2) S^p1 T^p2 has its only entry in row r + p1 mod d,
  // with value tau^(p1 p2 + 2 p2 r).
  ComplexMatrix m(d, d);
  const std::int64_t row_shift = mod_floor(p[0], d);
  for (std::int64_t r = 0; r < d; ++r) {
    m((r + row_shift) % d, r) = tau_power(d, p[0] * p[1] + 2 * p[1] * r);
  }
  return m;
}

std::int64_t symplectic_form(std::int64_t d, std::array<std::int64_t, 2> p,
                             std::array<std::int64_t, 2> q) {
  validate_dimension(d);
  validate_index_range(p);
  validate_index_range(q);
  return mod_floor(p[1] * q[0] - p[0] * q[1], f_of(d));
}

ComplexMatrix realization(const WHIndex& a) {
  require(is_canonical(a), "realization: index not canonical");
  ComplexMatrix m = displacement(a.d, a.p);
  const Complex phase = tau_power(a.d, a.k);
  for (auto& x : m.data()) x *= phase;
  return m;
}

WHIndex compose_indices(const WHIndex& a, const WHIndex& b) {
  require(a.d == b.d, "compose_indices: mixed dimensions");
  require(is_canonical(a) && is_canonical(b), "compose_indices: index not canonical");
  const std::int64_t sym = a.p[1] * b.p[0] - a.p[0] * b.p[1];
  return make_canonical(a.d, a.k + b.k + sym, {a.p[0] + b.p[0], a.p[1] + b.p[1]});
}

WHIndex invert_index(const WHIndex& a) {
  require(is_canonical(a), "invert_index: index not canonical");
  // (tau^k D_p)^dagger = tau^(-k) D_(-p).
  return make_canonical(a.d, -a.k, {-a.p[0], -a.p[1]});
}

std::int64_t projective_order(const WHIndex& a) {
  require(is_canonical(a), "projective_order: index not canonical");
  return a.d / std::gcd(std::gcd(a.p[0], a.p[1]), a.d);
}

std::int64_t unitary_order(const WHIndex& a) {
  require(is_canonical(a), "unitary_order: index not canonical");
  const std::int64_t bound = a.d * a.d * f_of(a.d);
  WHIndex acc = a;
  for (std::int64_t r = 1; r <= bound; ++r) {
    if (acc.k == 0 && acc.p[0] == 0 && acc.p[1] == 0) return r;
    acc = compose_indices(acc, a);
  }
  throw std::runtime_error("unitary_order: no order found within the group bound");
}

std::vector<WHIndex> enumerate_wh(std::int64_t d) {
  validate_dimension(d);
  std::vector<WHIndex> out;
  out.reserve(static_cast<std::size_t>(d * d * f_of(d)));
  for (std::int64_t k = 0; k < f_of(d); ++k)
    for (std::int64_t p1 = 0; p1 < d; ++p1)
      for (std::int64_t p2 = 0; p2 < d; ++p2) out.push_back(WHIndex{d, k, {p1, p2}});
  return out;
}

void validate_multi_index(const MultiWHIndex& a) {
  require(!a.dims.empty(), "multi index: no factors");
  require(a.dims.size() == a.locals.size(), "multi index: dims and locals length differ");
  for (std::size_t j = 0; j < a.dims.size(); ++j) {
    require(a.locals[j].d == a.dims[j], "multi index: local dimension mismatch");
    require(is_canonical(a.locals[j]), "multi index: local index not canonical");
  }
}

ComplexMatrix multi_displacement(const MultiWHIndex& a) {
  validate_multi_index(a);
  ComplexMatrix m = realization(a.locals[0]);
  for (std::size_t j = 1; j < a.locals.size(); ++j) m = kron(m, realization(a.locals[j]));
  return m;
}

std::int64_t projective_order(const MultiWHIndex& a) {
  validate_multi_index(a);
  std::int64_t l = 1;
  for (const auto& loc : a.locals) l = std::lcm(l, projective_order(loc));
  return l;
}

std::vector<MultiWHIndex> displacement_index_vectors(const std::vector<std::int64_t>& dims) {
  require(!dims.empty(), "displacement_index_vectors: no factors");
  for (std::int64_t d : dims) validate_dimension(d);
  MultiWHIndex cur;
  cur.dims = dims;
  for (std::int64_t d : dims) cur.locals.push_back(WHIndex{d, 0, {0, 0}});
  std::int64_t count = 1;
  for (std::int64_t d : dims) count *= d * d;
  std::vector<MultiWHIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  while (true) {
    out.push_back(cur);
    std::size_t j = dims.size();
    while (true) {
      if (j == 0) return out;
      --j;
      WHIndex& loc = cur.locals[j];
      if (++loc.p[1] < loc.d) break;
      loc.p[1] = 0;
      if (++loc.p[0] < loc.d) break;
      loc.p[0] = 0;
    }
  }
}

}  // namespace qdesign

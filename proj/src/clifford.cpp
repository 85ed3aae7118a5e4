#include "qdesign/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace qdesign {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void validate_dims(const std::vector<std::int64_t>& dims) {
  require(!dims.empty(), "group dims: empty factor list");
  for (std::int64_t d : dims) require(d >= 2, "group dims: every factor must be at least 2");
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : key) {
      auto u = static_cast<std::uint64_t>(v);
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (u >> (8 * byte)) & 0xffull;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::int64_t> quantized_key(const ComplexMatrix& m) {
  std::vector<std::int64_t> key;
  key.reserve(2 * m.data().size());
  for (const Complex& x : m.data()) {
    key.push_back(std::llround(x.real() / kKeyGrid));
    key.push_back(std::llround(x.imag() / kKeyGrid));
  }
  return key;
}

}  // namespace

std::int64_t total_dimension(const std::vector<std::int64_t>& dims) {
  validate_dims(dims);
  std::int64_t n = 1;
  for (std::int64_t d : dims) {
    require(n <= 4096 / d, "group dims: total dimension too large");
    n *= d;
  }
  return n;
}

ProjectiveUnitary canonicalize(const ComplexMatrix& u, double tol) {
  require(u.rows() == u.cols() && u.rows() > 0, "canonicalize: matrix not square");
  validate_finite(u, "canonicalize");
  if (!is_unitary(u, tol)) throw std::invalid_argument("canonicalize: matrix not unitary");
  ProjectiveUnitary out;
  out.matrix = u;
  for (const Complex& x : u.data()) {
    const double mod = std::abs(x);
    if (mod > kPivotTol) {
      const Complex adjust = std::conj(x) / mod;
      for (auto& e : out.matrix.data()) e *= adjust;
      break;
    }
  }
  out.key = quantized_key(out.matrix);
  return out;
}

bool same_projective_element(const ProjectiveUnitary& a, const ProjectiveUnitary& b) {
  return a.key == b.key && frobenius_distance(a.matrix, b.matrix) <= kKeyFrobeniusTol;
}

ComplexMatrix fourier_matrix(std::int64_t d) {
  const double root = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (std::int64_t j = 0; j < d; ++j)
    for (std::int64_t k = 0; k < d; ++k) f(j, k) = root * tau_power(d, 2 * j * k);
  return f;
}

ComplexMatrix quadratic_phase(std::int64_t d) {
  ComplexMatrix p(d, d);
  for (std::int64_t j = 0; j < d; ++j) p(j, j) = tau_power(d, j * j);
  return p;
}

ComplexMatrix embed_operator(const std::vector<std::int64_t>& dims, std::size_t slot,
                             const ComplexMatrix& local) {
  validate_dims(dims);
  require(slot < dims.size(), "embed_operator: slot out of range");
  require(local.rows() == static_cast<std::size_t>(dims[slot]),
          "embed_operator: local operator has wrong dimension");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t j = 0; j < dims.size(); ++j) {
    out = kron(out, j == slot ? local : ComplexMatrix::identity(dims[j]));
  }
  return out;
}

ComplexMatrix swap_factors_operator(const std::vector<std::int64_t>& dims, std::size_t j,
                                    std::size_t k) {
  const std::int64_t n = total_dimension(dims);
  require(j < k && k < dims.size(), "swap_factors_operator: bad slot pair");
  require(dims[j] == dims[k], "swap_factors_operator: factors have different dimensions");
  ComplexMatrix s(n, n);
  std::vector<std::int64_t> digits(dims.size(), 0);
  for (std::int64_t col = 0; col < n; ++col) {
    std::int64_t rest = col;
    for (std::size_t t = dims.size(); t > 0; --t) {
      digits[t - 1] = rest % dims[t - 1];
      rest /= dims[t - 1];
    }
    std::swap(digits[j], digits[k]);
    std::int64_t row = 0;
    for (std::size_t t = 0; t < dims.size(); ++t) row = row * dims[t] + digits[t];
    s(row, col) = Complex(1.0, 0.0);
  }
  return s;
}

ComplexMatrix controlled_phase_operator(const std::vector<std::int64_t>& dims, std::size_t j,
                                        std::size_t k) {
  const std::int64_t n = total_dimension(dims);
  require(j < k && k < dims.size(), "controlled_phase_operator: bad slot pair");
  const std::int64_t g = std::gcd(dims[j], dims[k]);
  require(g > 1, "controlled_phase_operator: factors are coprime");
  ComplexMatrix c(n, n);
  for (std::int64_t idx = 0; idx < n; ++idx) {
    std::int64_t rest = idx;
    std::int64_t a = 0, b = 0;
    for (std::size_t t = dims.size(); t > 0; --t) {
      const std::int64_t digit = rest % dims[t - 1];
      rest /= dims[t - 1];
      if (t - 1 == j) a = digit;
      if (t - 1 == k) b = digit;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((a * b) % g) /
                         static_cast<double>(g);
    c(idx, idx) = std::polar(1.0, angle);
  }
  return c;
}

bool normalizer_check(const ComplexMatrix& u, const std::vector<std::int64_t>& dims, double tol) {
  const std::int64_t n = total_dimension(dims);
  require(u.rows() == static_cast<std::size_t>(n) && u.cols() == u.rows(),
          "normalizer_check: operator does not match dims");
  if (!is_unitary(u, kEqualityTol)) return false;

  const std::vector<MultiWHIndex> basis = displacement_index_vectors(dims);
  std::vector<ComplexMatrix> basis_mats;
  basis_mats.reserve(basis.size());
  for (const auto& q : basis) basis_mats.push_back(multi_displacement(q));

  // The phases occurring in the multipartite group form the cyclic group of
  // order lcm_j f(d_j).
  std::int64_t phase_period = 1;
  for (std::int64_t d : dims) phase_period = std::lcm(phase_period, f_of(d));

  const ComplexMatrix udag = dagger(u);
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    for (int which = 0; which < 2; ++which) {
      MultiWHIndex gen;
      gen.dims = dims;
      for (std::int64_t d : dims) gen.locals.push_back(WHIndex{d, 0, {0, 0}});
      gen.locals[slot].p = which == 0 ? std::array<std::int64_t, 2>{1, 0}
                                      : std::array<std::int64_t, 2>{0, 1};
      const ComplexMatrix conj_gen = multiply(multiply(u, multi_displacement(gen)), udag);

      std::size_t best = 0;
      double best_mod = -1.0;
      std::vector<Complex> coeff(basis_mats.size());
      for (std::size_t q = 0; q < basis_mats.size(); ++q) {
        coeff[q] = trace(multiply(dagger(basis_mats[q]), conj_gen)) / static_cast<double>(n);
        if (std::abs(coeff[q]) > best_mod) {
          best_mod = std::abs(coeff[q]);
          best = q;
        }
      }
      const ComplexMatrix residual =
          subtract(conj_gen, scale(coeff[best], basis_mats[best]));
      if (frobenius_norm(residual) > tol) return false;
      if (std::abs(best_mod - 1.0) > tol) return false;

      // Phase must be a root of unity of the group's phase period.
      const double angle = std::arg(coeff[best]);
      const double steps = angle * static_cast<double>(phase_period) / (2.0 * std::numbers::pi);
      if (std::abs(steps - std::llround(steps)) >
          tol * static_cast<double>(phase_period))
        return false;
    }
  }
  return true;
}

GroupSpec clifford_generators(std::int64_t d) {
  GroupSpec spec;
  spec.dims = {d};
  spec.label = "clifford:" + std::to_string(d);
  spec.generators.push_back(canonicalize(fourier_matrix(d)));
  spec.generators.push_back(canonicalize(quadratic_phase(d)));
  spec.generators.push_back(canonicalize(displacement(d, {1, 0})));
  spec.generators.push_back(canonicalize(displacement(d, {0, 1})));
  return spec;
}

GroupSpec multipartite_clifford_generators(const std::vector<std::int64_t>& dims) {
  total_dimension(dims);
  GroupSpec spec;
  spec.dims = dims;
  spec.label = "clifford:";
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (j > 0) spec.label += 'x';
    spec.label += std::to_string(dims[j]);
  }
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const std::int64_t d = dims[j];
    for (const ComplexMatrix& local :
         {fourier_matrix(d), quadratic_phase(d), displacement(d, {1, 0}),
          displacement(d, {0, 1})}) {
      spec.generators.push_back(canonicalize(embed_operator(dims, j, local)));
    }
  }
  for (std::size_t j = 0; j < dims.size(); ++j) {
    for (std::size_t k = j + 1; k < dims.size(); ++k) {
      if (dims[j] == dims[k])
        spec.generators.push_back(canonicalize(swap_factors_operator(dims, j, k)));
      if (std::gcd(dims[j], dims[k]) > 1)
        spec.generators.push_back(canonicalize(controlled_phase_operator(dims, j, k)));
    }
  }
  return spec;
}

GroupSpec wh_generators(std::int64_t d) {
  GroupSpec spec;
  spec.dims = {d};
  spec.label = "wh:" + std::to_string(d);
  spec.generators.push_back(canonicalize(displacement(d, {1, 0})));
  spec.generators.push_back(canonicalize(displacement(d, {0, 1})));
  return spec;
}

GroupTooLargeError::GroupTooLargeError(std::size_t limit, std::size_t partial)
    : ResourceLimitError("group too large: closure exceeded " + std::to_string(limit) +
                         " elements (partial count " + std::to_string(partial) + ")"),
      partial_count(partial) {}

std::vector<ProjectiveUnitary> closure_enumerate(const GroupSpec& spec, std::size_t limit,
                                                 double tol) {
  require(!spec.generators.empty(), "closure_enumerate: no generators");
  require(limit > 0, "closure_enumerate: limit must be positive");
  const std::size_t n = spec.generators.front().matrix.rows();
  for (const auto& g : spec.generators)
    require(g.matrix.rows() == n && g.matrix.cols() == n,
            "closure_enumerate: generator shapes differ");

  std::vector<ProjectiveUnitary> gens = spec.generators;
  std::sort(gens.begin(), gens.end(),
            [](const ProjectiveUnitary& a, const ProjectiveUnitary& b) { return a.key < b.key; });

  std::vector<ProjectiveUnitary> elements;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, KeyHash> index;

  const auto try_insert = [&](ProjectiveUnitary&& candidate) -> bool {
    auto& bucket = index[candidate.key];
    for (std::size_t i : bucket) {
      if (frobenius_distance(candidate.matrix, elements[i].matrix) <= kKeyFrobeniusTol)
        return false;
    }
    if (elements.size() >= limit) throw GroupTooLargeError(limit, elements.size());
    bucket.push_back(elements.size());
    elements.push_back(std::move(candidate));
    return true;
  };

  try_insert(canonicalize(ComplexMatrix::identity(n), tol));
  for (const auto& g : gens) {
    ProjectiveUnitary copy = g;
    try_insert(std::move(copy));
  }

  // elements only grows, so plain index iteration doubles as the BFS queue.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      try_insert(canonicalize(multiply(elements[head].matrix, g.matrix), tol));
    }
  }

  std::sort(elements.begin(), elements.end(),
            [](const ProjectiveUnitary& a, const ProjectiveUnitary& b) { return a.key < b.key; });
  index.clear();
  return elements;
}

std::size_t find_element(const std::vector<ProjectiveUnitary>& sorted_closure,
                         const ProjectiveUnitary& x) {
  auto it = std::lower_bound(
      sorted_closure.begin(), sorted_closure.end(), x,
      [](const ProjectiveUnitary& a, const ProjectiveUnitary& b) { return a.key < b.key; });
  for (; it != sorted_closure.end() && it->key == x.key; ++it) {
    if (frobenius_distance(it->matrix, x.matrix) <= kKeyFrobeniusTol)
      return static_cast<std::size_t>(it - sorted_closure.begin());
  }
  return kNotFound;
}

}  // namespace qdesign

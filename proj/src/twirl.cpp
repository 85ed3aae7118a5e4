#include "qdesign/twirl.hpp"

#include <cmath>

#include "qdesign/detail/sum.hpp"

namespace qdesign {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::int64_t doubled_side(const ComplexMatrix& x) {
  require(x.rows() == x.cols() && x.rows() > 0, "twirl: matrix not square");
  const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x.rows()))));
  require(static_cast<std::size_t>(d) * static_cast<std::size_t>(d) == x.rows(),
          "twirl: side is not a perfect square");
  require(d >= 2, "twirl: single-system dimension must be at least 2");
  return d;
}

/// Tree sum of equally shaped matrices; the reduction order depends only on
/// the count, so results do not depend on who filled the terms.
ComplexMatrix tree_sum(const std::vector<ComplexMatrix>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return add(tree_sum(terms, lo, mid), tree_sum(terms, mid, hi));
}

ComplexMatrix mean_of(const std::vector<ComplexMatrix>& terms) {
  ComplexMatrix s = tree_sum(terms, 0, terms.size());
  const Complex inv(1.0 / static_cast<double>(terms.size()), 0.0);
  for (auto& v : s.data()) v *= inv;
  return s;
}

ComplexMatrix depolarizing_choi_matrix(std::int64_t d, double p) {
  ComplexMatrix c(d * d, d * d);
  const double off = (1.0 - p) / static_cast<double>(d);
  for (std::int64_t i = 0; i < d * d; ++i) c(i, i) = Complex(off, 0.0);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) c(i * d + i, j * d + j) += Complex(p, 0.0);
  return c;
}

}  // namespace

void validate_choi(const ChoiMatrix& c) {
  require(c.d >= 2, "choi: dimension must be at least 2");
  const auto n = static_cast<std::size_t>(c.d) * static_cast<std::size_t>(c.d);
  require(c.matrix.rows() == n && c.matrix.cols() == n, "choi: matrix must be d^2 x d^2");
  validate_finite(c.matrix, "choi");
  if (frobenius_distance(c.matrix, dagger(c.matrix)) > kChoiHermitianTol)
    throw std::invalid_argument("choi: matrix not Hermitian");
  const std::vector<double> eig = hermitian_eigenvalues(c.matrix);
  if (eig.front() < kChoiEigenvalueFloor)
    throw std::invalid_argument("choi: matrix not positive semidefinite");
  const ComplexMatrix reduced = partial_trace_output(c.matrix, c.d);
  if (frobenius_distance(reduced, ComplexMatrix::identity(c.d)) > kChoiTraceTol)
    throw std::invalid_argument("choi: channel not trace preserving");
}

ComplexMatrix swap_operator(std::int64_t d) {
  require(d >= 2, "swap_operator: dimension must be at least 2");
  ComplexMatrix s(d * d, d * d);
  for (std::int64_t a = 0; a < d; ++a)
    for (std::int64_t b = 0; b < d; ++b) s(b * d + a, a * d + b) = Complex(1.0, 0.0);
  return s;
}

ComplexMatrix partial_trace_output(const ComplexMatrix& m, std::int64_t d) {
  require(m.rows() == static_cast<std::size_t>(d * d) && m.rows() == m.cols(),
          "partial_trace_output: shape mismatch");
  ComplexMatrix out(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j)
      for (std::int64_t k = 0; k < d; ++k) out(i, j) += m(i * d + k, j * d + k);
  return out;
}

ComplexMatrix haar_twirl2(const ComplexMatrix& x) {
  const std::int64_t d = doubled_side(x);
  const ComplexMatrix swap = swap_operator(d);
  const Complex t1 = trace(x);
  const Complex t2 = trace(multiply(swap, x));
  // Gram system for the basis {I, SWAP}: <I,I> = <S,S> = d^2, <I,S> = d.
  const double dd = static_cast<double>(d) * static_cast<double>(d);
  const double det = dd * dd - dd;
  const Complex a = (dd * t1 - static_cast<double>(d) * t2) / det;
  const Complex b = (dd * t2 - static_cast<double>(d) * t1) / det;
  ComplexMatrix out = scale(b, swap);
  for (std::int64_t i = 0; i < d * d; ++i) out(i, i) += a;
  return out;
}

ComplexMatrix group_twirl2(const std::vector<ProjectiveUnitary>& group, const ComplexMatrix& x,
                           unsigned threads) {
  require(!group.empty(), "group_twirl2: empty group");
  doubled_side(x);
  std::vector<ComplexMatrix> terms(group.size());
  detail::parallel_for(group.size(), threads, [&](std::size_t i) {
    const ComplexMatrix k = kron(group[i].matrix, group[i].matrix);
    terms[i] = multiply(multiply(k, x), dagger(k));
  });
  return mean_of(terms);
}

double max_matrix_unit_twirl_deviation(const std::vector<ProjectiveUnitary>& group,
                                       std::int64_t d, unsigned threads) {
  require(!group.empty(), "max_matrix_unit_twirl_deviation: empty group");
  require(d >= 2, "max_matrix_unit_twirl_deviation: dimension must be at least 2");
  const std::size_t n2 = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<ComplexMatrix> doubled(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    require(group[i].matrix.rows() == static_cast<std::size_t>(d),
            "max_matrix_unit_twirl_deviation: element dimension mismatch");
    doubled[i] = kron(group[i].matrix, group[i].matrix);
  }
  const double inv = 1.0 / static_cast<double>(group.size());
  std::vector<double> deviations(n2 * n2);
  // The twirl of the matrix unit E_ab is the averaged outer product of
  // columns a and b of each doubled element.
  detail::parallel_for(n2 * n2, threads, [&](std::size_t unit) {
    const std::size_t a = unit / n2;
    const std::size_t b = unit % n2;
    ComplexMatrix avg(n2, n2);
    for (const ComplexMatrix& k : doubled) {
      for (std::size_t r = 0; r < n2; ++r) {
        const Complex kra = k(r, a);
        if (kra == Complex(0.0, 0.0)) continue;
        for (std::size_t c = 0; c < n2; ++c) avg(r, c) += kra * std::conj(k(c, b));
      }
    }
    for (auto& v : avg.data()) v *= inv;
    ComplexMatrix unit_mat(n2, n2);
    unit_mat(a, b) = Complex(1.0, 0.0);
    deviations[unit] = frobenius_distance(avg, haar_twirl2(unit_mat));
  });
  double best = 0.0;
  for (double dev : deviations) best = std::max(best, dev);
  return best;
}

ChoiMatrix channel_twirl(const std::vector<ProjectiveUnitary>& group, const ChoiMatrix& c,
                         unsigned threads) {
  require(!group.empty(), "channel_twirl: empty group");
  validate_choi(c);
  std::vector<ComplexMatrix> terms(group.size());
  detail::parallel_for(group.size(), threads, [&](std::size_t i) {
    const ComplexMatrix& g = group[i].matrix;
    // Choi matrix of rho -> g^dagger channel(g rho g^dagger) g.
    const ComplexMatrix a = kron(transpose(g), dagger(g));
    terms[i] = multiply(multiply(a, c.matrix), dagger(a));
  });
  ChoiMatrix out{c.d, mean_of(terms)};
  validate_choi(out);
  return out;
}

ChoiMatrix depolarizing_choi(std::int64_t d, double p) {
  require(d >= 2, "depolarizing_choi: dimension must be at least 2");
  ChoiMatrix c{d, depolarizing_choi_matrix(d, p)};
  validate_choi(c);
  return c;
}

ChoiMatrix conjugation_choi(const ComplexMatrix& v) {
  require(v.rows() == v.cols() && v.rows() >= 2, "conjugation_choi: matrix not square");
  if (!is_unitary(v, kEqualityTol))
    throw std::invalid_argument("conjugation_choi: matrix not unitary");
  const auto d = static_cast<std::int64_t>(v.rows());
  ComplexMatrix w(d * d, 1);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t a = 0; a < d; ++a) w(i * d + a, 0) = v(a, i);
  ChoiMatrix c{d, multiply(w, dagger(w))};
  validate_choi(c);
  return c;
}

ChoiMatrix choi_from_kraus(std::int64_t d, const std::vector<ComplexMatrix>& kraus) {
  require(d >= 2, "choi_from_kraus: dimension must be at least 2");
  require(!kraus.empty(), "choi_from_kraus: no Kraus operators");
  ComplexMatrix acc(d * d, d * d);
  for (const ComplexMatrix& b : kraus) {
    require(b.rows() == static_cast<std::size_t>(d) && b.cols() == b.rows(),
            "choi_from_kraus: Kraus operator shape mismatch");
    ComplexMatrix w(d * d, 1);
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t a = 0; a < d; ++a) w(i * d + a, 0) = b(a, i);
    acc = add(acc, multiply(w, dagger(w)));
  }
  ChoiMatrix c{d, std::move(acc)};
  validate_choi(c);
  return c;
}

DepolarizingFit depolarizing_fit(const ChoiMatrix& c, double tol) {
  validate_choi(c);
  const std::int64_t d = c.d;
  Complex s(0.0, 0.0);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) s += c.matrix(i * d + i, j * d + j);
  const double p = (s.real() - 1.0) / (static_cast<double>(d * d) - 1.0);
  const double residual = frobenius_distance(c.matrix, depolarizing_choi_matrix(d, p));
  return DepolarizingFit{residual <= tol, p, residual};
}

double entanglement_fidelity(const ChoiMatrix& c) {
  validate_choi(c);
  const std::int64_t d = c.d;
  Complex s(0.0, 0.0);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) s += c.matrix(i * d + i, j * d + j);
  return s.real() / static_cast<double>(d * d);
}

double average_fidelity(const ChoiMatrix& c) {
  const double fe = entanglement_fidelity(c);
  return (static_cast<double>(c.d) * fe + 1.0) / (static_cast<double>(c.d) + 1.0);
}

}  // namespace qdesign

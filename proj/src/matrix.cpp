#include "qdesign/matrix.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qdesign {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "multiply: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Complex aik = a(i, l);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &b.data()[l * m];
      Complex* crow = &c.data()[i * m];
      for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.same_shape(b), "add: shapes differ");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.same_shape(b), "subtract: shapes differ");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

ComplexMatrix scale(Complex s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& x : c.data()) x = std::conj(x);
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

Complex trace(const ComplexMatrix& a) {
  require(a.rows() == a.cols(), "trace: matrix not square");
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix vec(const ComplexMatrix& x) {
  ComplexMatrix v(x.rows() * x.cols(), 1);
  v.data() = x.data();
  return v;
}

ComplexMatrix unvec(const ComplexMatrix& v) {
  require(v.cols() == 1, "unvec: input must be a column vector");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.rows()))));
  require(n * n == v.rows(), "unvec: length is not a perfect square");
  ComplexMatrix m(n, n);
  m.data() = v.data();
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.same_shape(b), "frobenius_distance: shapes differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  require(a.rows() == a.cols(), "is_unitary: matrix not square");
  const ComplexMatrix g = multiply(dagger(a), a);
  return frobenius_distance(g, ComplexMatrix::identity(a.rows())) <= tol;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  require(a.rows() > 0 && a.cols() > 0, "singular_values: empty matrix");
  validate_finite(a, "singular_values");
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  std::vector<Complex> work = a.data();
  std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_ROW_MAJOR, 'N', m, n, reinterpret_cast<lapack_complex_double*>(work.data()), n,
      s.data(), nullptr, std::max<lapack_int>(1, m), nullptr, std::max<lapack_int>(1, n));
  if (info != 0) throw std::runtime_error("singular_values: zgesdd failed to converge");
  return s;
}

std::size_t nullspace_dimension(const ComplexMatrix& a, double tol) {
  const std::vector<double> s = singular_values(a);
  const double cutoff = tol * s.front();
  std::size_t rank = 0;
  for (double sv : s)
    if (sv > cutoff) ++rank;
  return a.cols() - rank;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  require(a.rows() == a.cols() && a.rows() > 0, "hermitian_eigenvalues: matrix not square");
  validate_finite(a, "hermitian_eigenvalues");
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<Complex> work = a.data();
  std::vector<double> w(a.rows());
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_ROW_MAJOR, 'N', 'U', n, reinterpret_cast<lapack_complex_double*>(work.data()), n,
      w.data());
  if (info != 0) throw std::runtime_error("hermitian_eigenvalues: zheevd failed");
  return w;
}

void validate_finite(const ComplexMatrix& a, const char* context) {
  for (const auto& x : a.data()) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument(std::string(context) + ": non-finite matrix entry");
    }
  }
}

void write_matrix_dump(std::ostream& out, const ComplexMatrix& a) {
  validate_finite(a, "write_matrix_dump");
  out << a.rows() << ' ' << a.cols() << '\n';
  char buf[96];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex& x = a(i, j);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", x.real(), x.imag());
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

namespace {

Complex parse_dump_entry(const std::string& tok) {
  require(tok.size() >= 2 && tok.back() == 'j', "read_matrix_dump: malformed entry");
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
    if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') split = i;
  }
  require(split != std::string::npos, "read_matrix_dump: entry lacks imaginary part");
  std::size_t pos = 0;
  const double re = std::stod(tok.substr(0, split), &pos);
  require(pos == split, "read_matrix_dump: trailing characters in real part");
  const std::string imtok = tok.substr(split, tok.size() - 1 - split);
  const double im = std::stod(imtok, &pos);
  require(pos == imtok.size(), "read_matrix_dump: trailing characters in imaginary part");
  return {re, im};
}

}  // namespace

ComplexMatrix read_matrix_dump(std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
    throw std::invalid_argument("read_matrix_dump: bad header");
  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (auto& entry : m.data()) {
    if (!(in >> tok)) throw std::invalid_argument("read_matrix_dump: truncated matrix body");
    entry = parse_dump_entry(tok);
  }
  validate_finite(m, "read_matrix_dump");
  return m;
}

}  // namespace qdesign

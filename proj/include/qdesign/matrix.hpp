#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdesign {

using Complex = std::complex<double>;

/// Default absolute tolerance for matrix equality and unitarity checks.
inline constexpr double kEqualityTol = 1e-9;

/// Default relative tolerance for rank decisions. Singular values are
/// compared against kRankTol times the largest singular value.
inline constexpr double kRankTol = 1e-7;

/// Thrown when a computation would exceed a hard resource bound
/// (closure size caps, commutant dimension caps). Callers that map
/// errors to process exit codes treat this class separately from
/// invalid-input errors.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense complex matrix with row-major storage. Entries are expected to be
/// finite; operations that ingest external data validate this explicitly.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Flat row-major entry access, used by kernels that do not care about shape.
  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex s, const ComplexMatrix& a);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix dagger(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// Kronecker product with a's indices major:
/// result((i*rb + k), (j*cb + l)) = a(i, j) * b(k, l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-major flattening of a matrix into an (rows*cols) x 1 column vector.
/// Compatible with kron in the sense vec(a * x * transpose(b)) = kron(a, b) * vec(x).
ComplexMatrix vec(const ComplexMatrix& x);

/// Inverse of vec for square targets. The input must be an n^2 x 1 column
/// vector for some integer n.
ComplexMatrix unvec(const ComplexMatrix& v);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_entry(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& a, double tol = kEqualityTol);

/// Dimension of the (right) nullspace: cols minus the number of singular
/// values exceeding tol * sigma_max. The zero matrix has full nullspace.
std::size_t nullspace_dimension(const ComplexMatrix& a, double tol = kRankTol);

/// Singular values in descending order (LAPACK zgesdd).
std::vector<double> singular_values(const ComplexMatrix& a);

/// Eigenvalues of a Hermitian matrix in ascending order (LAPACK zheevd).
/// Hermiticity is the caller's responsibility; only the upper triangle is read.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Throws std::invalid_argument if any entry is NaN or infinite.
void validate_finite(const ComplexMatrix& a, const char* context);

/// Text dump: first line "rows cols", then one line per row with entries
/// formatted as re+imj at 17 significant digits, single-space separated.
/// The format round-trips doubles exactly.
void write_matrix_dump(std::ostream& out, const ComplexMatrix& a);
ComplexMatrix read_matrix_dump(std::istream& in);

}  // namespace qdesign

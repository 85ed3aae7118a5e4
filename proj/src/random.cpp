#include "qdesign/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qdesign {

ComplexMatrix random_unitary(std::int64_t d, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("random_unitary: dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (auto& x : m.data()) x = Complex(gauss(rng), gauss(rng));
  // Modified Gram-Schmidt on columns, with one re-orthogonalization pass.
  for (std::int64_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::int64_t i = 0; i < j; ++i) {
        Complex proj(0.0, 0.0);
        for (std::int64_t r = 0; r < d; ++r) proj += std::conj(m(r, i)) * m(r, j);
        for (std::int64_t r = 0; r < d; ++r) m(r, j) -= proj * m(r, i);
      }
    }
    double norm = 0.0;
    for (std::int64_t r = 0; r < d; ++r) norm += std::norm(m(r, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw std::runtime_error("random_unitary: degenerate draw");
    for (std::int64_t r = 0; r < d; ++r) m(r, j) /= norm;
  }
  return m;
}

ChoiMatrix random_channel(std::int64_t d, std::int64_t kraus_count, std::mt19937_64& rng) {
  if (d < 2) throw std::invalid_argument("random_channel: dimension must be at least 2");
  if (kraus_count < 1) throw std::invalid_argument("random_channel: need at least one Kraus term");
  const ComplexMatrix u = random_unitary(d * kraus_count, rng);
  // Kraus operator l is the (row block l, column block 0) slice of the
  // dilation, with the environment index minor.
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_count));
  for (std::int64_t l = 0; l < kraus_count; ++l) {
    ComplexMatrix b(d, d);
    for (std::int64_t a = 0; a < d; ++a)
      for (std::int64_t i = 0; i < d; ++i) b(a, i) = u(a * kraus_count + l, i * kraus_count);
    kraus.push_back(std::move(b));
  }
  return choi_from_kraus(d, kraus);
}

}  // namespace qdesign

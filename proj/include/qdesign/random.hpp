#pragma once

#include <cstdint>
#include <random>

#include "qdesign/matrix.hpp"
#include "qdesign/twirl.hpp"

namespace qdesign {

/// Haar-distributed unitary: Gaussian matrix orthonormalized column by
/// column (two passes for stability). The positive normalization makes the
/// distribution exactly Haar.
ComplexMatrix random_unitary(std::int64_t d, std::mt19937_64& rng);

/// Random channel on a d-dimensional system with kraus_count Kraus
/// operators, obtained as blocks of a Haar unitary on the dilated space.
/// Trace preservation is exact by construction.
ChoiMatrix random_channel(std::int64_t d, std::int64_t kraus_count, std::mt19937_64& rng);

}  // namespace qdesign

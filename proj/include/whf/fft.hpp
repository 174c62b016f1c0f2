#pragma once

#include "whf/polynomial.hpp"

#include <vector>

namespace whf {

// Unnormalised in-place DFT: X_k = sum_j x_j exp(sign * 2 pi i j k / N).
void fft_inplace(std::vector<cplx>& data, int sign);

} // namespace whf

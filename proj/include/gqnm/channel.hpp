#pragma once

#include <span>

#include "gqnm/modem.hpp"
#include "gqnm/rng.hpp"

namespace gqnm {

/// Memoryless AWGN channel: adds i.i.d. zero-mean Gaussian noise of
/// standard deviation sigma_w to every sample. sigma_w == 0 is the exact
/// identity and consumes no stream draws, so noiseless runs replay the
/// same way regardless of channel placement.
Symbol awgn(const Symbol& tx, double sigma_w, RngStream& rng);

/// In-place variant for hot loops.
void awgn_inplace(std::span<double> samples, double sigma_w, RngStream& rng);

} // namespace gqnm

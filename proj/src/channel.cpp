#include "gqnm/channel.hpp"

#include <cmath>

#include "gqnm/errors.hpp"

namespace gqnm {

void awgn_inplace(std::span<double> samples, double sigma_w, RngStream& rng) {
    if (!(std::isfinite(sigma_w) && sigma_w >= 0.0)) {
        throw InvalidInput("awgn: sigma_w must be finite and >= 0");
    }
    if (sigma_w == 0.0) {
        return;
    }
    for (double& r : samples) {
        r += sigma_w * rng.next_normal();
    }
}

Symbol awgn(const Symbol& tx, double sigma_w, RngStream& rng) {
    Symbol rx = tx;
    awgn_inplace(rx, sigma_w, rng);
    return rx;
}

} // namespace gqnm

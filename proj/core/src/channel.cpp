#include "gic/channel.hpp"

#include <cmath>

namespace gic {

void validate(const ChannelParams& params) {
    if (!(std::isfinite(params.p1) && params.p1 > 0.0) ||
        !(std::isfinite(params.p2) && params.p2 > 0.0)) {
        throw PreconditionError("transmit powers must be positive finite");
    }
    if (!std::isfinite(params.h12) || !std::isfinite(params.h21)) {
        throw PreconditionError("cross-gains must be finite");
    }
}

ChannelParams make_params(double p1, double p2, double h12, double h21) {
    ChannelParams params{p1, p2, h12, h21};
    validate(params);
    return params;
}

ChannelParams make_symmetric(double p, double h) { return make_params(p, p, h, h); }

bool symmetric(const ChannelParams& params) {
    return params.p1 == params.p2 && params.h12 == params.h21;
}

void require_symmetric(const ChannelParams& params) {
    if (!symmetric(params)) {
        throw UnsupportedConfigError(
            "operation is defined for the symmetric channel only");
    }
}

double db_to_linear(double x_db) {
    if (!std::isfinite(x_db)) throw PreconditionError("dB value must be finite");
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double p) {
    if (!(std::isfinite(p) && p > 0.0)) {
        throw PreconditionError("linear power must be positive finite");
    }
    return 10.0 * std::log10(p);
}

}  // namespace gic

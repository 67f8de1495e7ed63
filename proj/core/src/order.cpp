#include "guesslab/order.hpp"

#include <stdexcept>

namespace guesslab {

OrderParam OrderParam::from_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("order: alpha must be finite, > 0 and != 1");
    }
    return OrderParam{alpha, (1.0 - alpha) / alpha};
}

OrderParam OrderParam::from_rho(double rho) {
    if (!(rho > -1.0) || rho == 0.0 || !std::isfinite(rho)) {
        throw std::invalid_argument("order: rho must be finite, > -1 and != 0");
    }
    return OrderParam{1.0 / (1.0 + rho), rho};
}

}  // namespace guesslab

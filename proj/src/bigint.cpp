#include "subthresh/bigint.hpp"

#include <cmath>
#include <limits>

namespace subthresh {

double log_of(const BigInt& x) {
    if (x.is_zero()) return -std::numeric_limits<double>::infinity();
    const auto& backend = x.backend();
    const std::size_t size = backend.size();
    const auto* limbs = backend.limbs();
    if (size <= 15) return std::log(x.convert_to<double>());
    constexpr int kLimbBits = std::numeric_limits<boost::multiprecision::limb_type>::digits;
    const double top = static_cast<double>(limbs[size - 1]) * std::ldexp(1.0, kLimbBits) +
                       static_cast<double>(limbs[size - 2]);
    return std::log(top) + static_cast<double>(size - 2) * kLimbBits * std::log(2.0);
}

} // namespace subthresh

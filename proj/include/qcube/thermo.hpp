#pragma once

// Entropy as the log of baobab multiplicity, and the heat released by the
// baobab -> adinkra surjection at fixed temperature.

#include "qcube/counting.hpp"
#include "qcube/error.hpp"

#include <cmath>

namespace qcube {

/// ln(x) for an exact positive integer. Large values are split as
/// x = m * 2^e with m holding the top 62 bits.
inline double natural_log(const BigCount& x) {
    if (x <= 0) throw Error(Errc::NonPositiveBound, "logarithm of a non-positive count");
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 62) return std::log(static_cast<double>(x.convert_to<std::uint64_t>()));
    const std::size_t shift = bits - 62;
    const BigCount top = x >> static_cast<unsigned>(shift);
    return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
           static_cast<double>(shift) * std::log(2.0);
}

inline double natural_log(const ExactRational& q) {
    if (q <= 0) throw Error(Errc::NonPositiveBound, "logarithm of a non-positive bound");
    return natural_log(BigCount(boost::multiprecision::numerator(q))) -
           natural_log(BigCount(boost::multiprecision::denominator(q)));
}

struct EntropyReport {
    double k_b = 1.0;
    double s_lower = 0.0;
    double s_upper = 0.0;
    /// k_b ln(tree count)
    double s_approx = 0.0;
};

inline double entropy_approx(const BigCount& trees, double k_b = 1.0) { return k_b * natural_log(trees); }

inline EntropyReport entropy_bounds(const BaobabBounds& b, double k_b = 1.0) {
    EntropyReport r;
    r.k_b = k_b;
    r.s_lower = k_b * natural_log(b.lower);
    r.s_upper = k_b * natural_log(b.upper);
    r.s_approx = entropy_approx(b.trees, k_b);
    return r;
}

/// delta Q >= delta S * T.
struct LatentHeat {
    double temperature = 0.0;
    double delta_q = 0.0;
    bool lower_bound = true;
};

inline LatentHeat latent_heat(double delta_s, double temperature) {
    if (temperature < 0) throw Error(Errc::NegativeTemperature, "temperature must be non-negative");
    return {temperature, delta_s * temperature, true};
}

} // namespace qcube

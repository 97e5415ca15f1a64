#pragma once

#include <cmath>

namespace riposte {

/// Rounds to the nearest integer, halves away from zero (so -54.67 -> -55).
/// This is the display convention; internal arithmetic stays unrounded.
inline double round_half_away(double x) {
    double r = std::round(x);
    return r == 0.0 ? 0.0 : r;  // normalize -0
}

/// Rounds to `decimals` fractional digits, halves away from zero.
inline double round_to_decimals(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    return round_half_away(x * scale) / scale;
}

}  // namespace riposte

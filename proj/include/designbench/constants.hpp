#pragma once

#include <array>

// Published constants of the two benchmark problems. These are the exact
// printed values; validators and certificates depend on them bit-for-bit,
// so do not "tidy" them.

namespace designbench {

// Pressure vessel cost model:
//   f = 0.6224 d1 r L + 1.7781 d2 r^2 + 3.1661 d1^2 L + 19.84 d1^2 r
inline constexpr double kShellCost = 0.6224;
inline constexpr double kHeadCost = 1.7781;
inline constexpr double kShellLengthCost = 3.1661;
inline constexpr double kShellRadiusCost = 19.84;

// Stress constraints: d1 >= 0.0193 r, d2 >= 0.00954 r
inline constexpr double kShellStressRatio = 0.0193;
inline constexpr double kHeadStressRatio = 0.00954;

// Required enclosed volume (cubic inches): pi r^2 L + (4 pi / 3) r^3 >= K
inline constexpr double kRequiredVolume = 1296000.0;

// Rolled-plate thickness quantum (inches) and its multiple range
inline constexpr double kThicknessStep = 0.0625;
inline constexpr int kMinThicknessMultiple = 1;
inline constexpr int kMaxThicknessMultiple = 99;

// Simple bounds
inline constexpr double kRadiusLo = 10.0;
inline constexpr double kRadiusHi = 200.0;
inline constexpr double kLengthLo = 10.0;
inline constexpr double kLengthHi = 200.0;
// g4: structural length limit, redundant given kLengthHi
inline constexpr double kLengthStructuralMax = 240.0;

// Cantilever beam: f = 0.0624 sum(x_i), g = sum(a_i / x_i^3) - 1 <= 0
inline constexpr double kCantileverWeight = 0.0624;
inline constexpr std::array<double, 5> kCantileverLoads{61.0, 37.0, 19.0, 7.0, 1.0};
inline constexpr double kCantileverLo = 0.01;
inline constexpr double kCantileverHi = 100.0;

}  // namespace designbench

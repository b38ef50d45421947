#pragma once

namespace explicitlb {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn10 = 2.30258509299404568401799145468436421;
inline constexpr double kLnPi = 1.14472988584940017414342735135305871;
inline constexpr double kLn2Pi = 1.83787706640934548356065947281123527;

inline constexpr const char* kVersion = "1.0.0";

}  // namespace explicitlb

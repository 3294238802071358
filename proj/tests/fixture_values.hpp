#pragma once

// Frozen from tests/oracles/square_fixture.py (symbolic piecewise integration,
// independent of the library). Unit square [-1/2, 1/2]^2, plane x = 0.
namespace fixture::square {
inline constexpr double t = 0.5;
inline constexpr double gap = 0.055555555555555556;            // 1/18
inline constexpr double d = 0.040440114519880858;              // sqrt(2)/2 - 2/3
inline constexpr double b_prime = 1.0;
inline constexpr double a_prime = -0.41421356237309505;        // 1 - sqrt(2)
inline constexpr double int_abs_h = 0.42157287525380990;       // 13/4 - 2 sqrt(2)
inline constexpr double int_abs_cs = 0.33578643762690495;      // 7/4 - sqrt(2)
inline constexpr double witness_sym_diff = 0.50735931288071485;  // 19/4 - 3 sqrt(2)
inline constexpr double moment_c = 0.057190958417936634;       // 1 - 2 sqrt(2)/3
inline constexpr double int_abs_h1 = 0.17157287525380990;      // 3 - 2 sqrt(2)
inline constexpr double int_x_h1 = 0.015524291751269967;       // 23/24 - 2 sqrt(2)/3
inline constexpr double rhs_main = 152894.95268024395;         // 52488 2^(3/4) sqrt(3)
inline constexpr double base_length = 1.8284271247461901;      // 2 sqrt(2) - 1
}  // namespace fixture::square

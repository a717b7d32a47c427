#pragma once

#include <cmath>

#include "sppn/closed_form.hpp"

// Closed forms specialized to the quarter-, half- and three-quarter-turn
// rotations and to the 1/2/4-section overlap probabilities. Each expression
// is written out literally, section by section, independently of the general
// formulas in closed_form.hpp, and serves as a cross-check of those general
// forms on its stated alpha sections.
namespace sppn::special {

// |<M(0)|M(alpha)>|^2 for the plain fractional vortex (one section).
inline double vortex_overlap_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s = std::sin(M.value() * pi);
    const double c = std::cos(M.value() * pi);
    const double lever = 1.0 - a / pi;
    return lever * lever * s * s + c * c;
}

// |<M2(0)|M2(alpha)>|^2: two parabola sections.
inline double two_section_overlap_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s = std::sin(M.value() * pi / 2.0);
    const double c = std::cos(M.value() * pi / 2.0);
    const double lever = (a < pi) ? 1.0 - 2.0 * a / pi : 3.0 - 2.0 * a / pi;
    return lever * lever * s * s + c * c;
}

// |<M4(0)|M4(alpha)>|^2: four parabola sections.
inline double four_section_overlap_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s = std::sin(M.value() * pi / 4.0);
    const double c = std::cos(M.value() * pi / 4.0);
    double lever;
    if (a < pi / 2.0)
        lever = 1.0 - 4.0 * a / pi;
    else if (a < pi)
        lever = 3.0 - 4.0 * a / pi;
    else if (a < 3.0 * pi / 2.0)
        lever = 5.0 - 4.0 * a / pi;
    else
        lever = 7.0 - 4.0 * a / pi;
    return lever * lever * s * s + c * c;
}

// |<M(0)|U(pi)|M(alpha)>|^2.
inline double half_turn_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s2 = std::pow(std::sin(M.value() * pi), 2);
    double poly;
    if (a < pi)
        poly = (a * a - pi * pi) * s2 + pi * pi;
    else
        poly = (a - pi) * (a - 3.0 * pi) * s2 + pi * pi;
    return poly / (pi * pi);
}

// |<M(0)|U(pi/2)|M(alpha)>|^2.
inline double quarter_turn_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s2 = std::pow(std::sin(M.value() * pi), 2);
    double poly;
    if (a < 3.0 * pi / 2.0)
        poly = (a + pi / 2.0) * (a - 3.0 * pi / 2.0) * s2 + pi * pi;
    else
        poly = (a - 3.0 * pi / 2.0) * (a - 7.0 * pi / 2.0) * s2 + pi * pi;
    return poly / (pi * pi);
}

// |<M(0)|U(3*pi/2)|M(alpha)>|^2.
inline double three_quarter_turn_probability(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double s2 = std::pow(std::sin(M.value() * pi), 2);
    double poly;
    if (a < pi / 2.0)
        poly = (a + 3.0 * pi / 2.0) * (a - pi / 2.0) * s2 + pi * pi;
    else
        poly = (a - pi / 2.0) * (a - 5.0 * pi / 2.0) * s2 + pi * pi;
    return poly / (pi * pi);
}

// Re[<M(0)|M(alpha)> <M(0)|U(pi)|M(alpha)>*].
inline double base_half_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    double r;
    if (a < pi)
        r = a * (pi - a) * std::cos(3.0 * Mv * pi) +
            (4.0 * pi * pi - pi * a + a * a) * std::cos(Mv * pi);
    else
        r = (two_pi - a) * (a - pi) * std::cos(3.0 * Mv * pi) +
            (6.0 * pi * pi - 3.0 * pi * a + a * a) * std::cos(Mv * pi);
    return r / (4.0 * pi * pi);
}

// Re[<M(0)|M(alpha)> <M(0)|U(pi/2)|M(alpha)>*].
inline double base_quarter_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    const double s2 = std::pow(std::sin(Mv * pi), 2);
    double r;
    if (a < 3.0 * pi / 2.0)
        r = (2.0 * (2.0 * a * a - 3.0 * pi * a - pi * pi) * s2 + 4.0 * pi * pi) *
                std::cos(Mv * pi / 2.0) +
            pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi / 2.0);
    else
        r = (2.0 * a * a - 7.0 * pi * a + 7.0 * pi * pi) * std::cos(3.0 * Mv * pi / 2.0) +
            (7.0 * pi * a / 2.0 - a * a - 3.0 * pi * pi) * std::cos(7.0 * Mv * pi / 2.0) +
            a * (7.0 * pi / 2.0 - a) * std::cos(Mv * pi / 2.0);
    return r / (4.0 * pi * pi);
}

// Re[<M(0)|M(alpha)> <M(0)|U(3*pi/2)|M(alpha)>*].
inline double base_three_quarter_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    const double s2 = std::pow(std::sin(Mv * pi), 2);
    double r;
    if (a < pi / 2.0)
        r = (2.0 * (2.0 * a * a - pi * a - 3.0 * pi * pi) * s2 + 4.0 * pi * pi) *
                std::cos(3.0 * Mv * pi / 2.0) +
            3.0 * pi * pi * std::sin(2.0 * Mv * pi) * std::sin(3.0 * Mv * pi / 2.0);
    else
        r = (2.0 * a * a - 5.0 * pi * a + 5.0 * pi * pi) * std::cos(Mv * pi / 2.0) +
            (5.0 * pi * a / 2.0 - a * a - pi * pi) * std::cos(5.0 * Mv * pi / 2.0) +
            a * (5.0 * pi / 2.0 - a) * std::cos(3.0 * Mv * pi / 2.0);
    return r / (4.0 * pi * pi);
}

// Re[<M(0)|U(pi)|M(alpha)> <M(0)|U(pi/2)|M(alpha)>*].
inline double half_quarter_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    const double s2 = std::pow(std::sin(Mv * pi), 2);
    double r;
    if (a < pi)
        r = (4.0 * s2 * (a * a - pi * a / 2.0 - pi * pi) + 4.0 * pi * pi) *
                std::cos(Mv * pi / 2.0) +
            pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi / 2.0);
    else if (a < 3.0 * pi / 2.0)
        r = (2.0 * a * a + 4.0 * pi * pi - 5.0 * pi * a) * std::cos(3.0 * Mv * pi / 2.0) +
            (a - pi) * (3.0 * pi / 2.0 - a) * std::cos(7.0 * Mv * pi / 2.0) +
            (3.0 * pi - a) * (a + pi / 2.0) * std::cos(Mv * pi / 2.0);
    else
        r = (4.0 * s2 * (a * a - 9.0 * pi * a / 2.0 + 4.0 * pi * pi) + 4.0 * pi * pi) *
                std::cos(Mv * pi / 2.0) +
            pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi / 2.0);
    return r / (4.0 * pi * pi);
}

// Re[<M(0)|U(pi)|M(alpha)> <M(0)|U(3*pi/2)|M(alpha)>*].
inline double half_three_quarter_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    const double s2 = std::pow(std::sin(Mv * pi), 2);
    double r;
    if (a < pi / 2.0)
        r = (4.0 * s2 * (a * a + pi * a / 2.0 - pi * pi) + 4.0 * pi * pi) *
                std::cos(Mv * pi / 2.0) +
            pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi / 2.0);
    else if (a < pi)
        r = (2.0 * a * a + 2.0 * pi * pi - 3.0 * pi * a) * std::cos(3.0 * Mv * pi / 2.0) +
            (pi - a) * (a - pi / 2.0) * std::cos(7.0 * Mv * pi / 2.0) +
            (a + pi) * (5.0 * pi / 2.0 - a) * std::cos(Mv * pi / 2.0);
    else
        r = (4.0 * s2 * (a * a - 7.0 * pi * a / 2.0 + 2.0 * pi * pi) + 4.0 * pi * pi) *
                std::cos(Mv * pi / 2.0) +
            pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi / 2.0);
    return r / (4.0 * pi * pi);
}

// Re[<M(0)|U(pi/2)|M(alpha)> <M(0)|U(3*pi/2)|M(alpha)>*].
inline double quarter_three_quarter_turn_product_real(FractionalCharge M, Angle alpha) {
    const double a = alpha.radians();
    const double Mv = M.value();
    const double s2 = std::pow(std::sin(Mv * pi), 2);
    double r;
    if (a < pi / 2.0)
        r = (4.0 * s2 * (a * a - 5.0 * pi * pi / 4.0) + 4.0 * pi * pi) * std::cos(Mv * pi) +
            2.0 * pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi);
    else if (a < 3.0 * pi / 2.0)
        r = (a * a - 2.0 * pi * a + 19.0 * pi * pi / 4.0) * std::cos(Mv * pi) +
            (3.0 * pi / 2.0 - a) * (a - pi / 2.0) * std::cos(3.0 * Mv * pi);
    else
        r = (4.0 * s2 * (a * a - 4.0 * pi * a + 11.0 * pi * pi / 4.0) + 4.0 * pi * pi) *
                std::cos(Mv * pi) +
            2.0 * pi * pi * std::sin(2.0 * Mv * pi) * std::sin(Mv * pi);
    return r / (4.0 * pi * pi);
}

}  // namespace sppn::special

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sppn/angle.hpp"
#include "sppn/charge.hpp"

// Piecewise analytic overlap amplitudes and probabilities between
// fractional-vortex states and their n-fold symmetric superpositions. Every
// formula here is checked against the exact-integration oracle by the verify
// grid and the acceptance suite.
namespace sppn {

// Raised when an n-fold superposition has (near-)zero norm, e.g. n = 2 with
// an odd integer charge. The sector-profile construction provides the
// physical state for those charges.
class DegenerateSuperposition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Threshold below which a superposition normalization denominator is treated
// as degenerate rather than amplified into noise.
inline constexpr double degeneracy_threshold = 1e-9;

struct OverlapResult {
    complexd amplitude;
    double probability;  // |amplitude|^2
    int branch;          // 1-based section index of the piecewise form used
};

// <M(0)|M(alpha)>: overlap of a fractional vortex with its rotated copy.
inline complexd overlap_amplitude_base(FractionalCharge M, Angle alpha) {
    const double mu = M.fractional_part();
    const double a = alpha.radians();
    return (a * std::polar(1.0, (two_pi - a) * mu) +
            (two_pi - a) * std::polar(1.0, -a * mu)) /
           two_pi;
}

// <M(0)|U(beta)|M(alpha)>: two sections split at alpha + beta = 2*pi.
// beta = 0 reduces to overlap_amplitude_base.
inline OverlapResult overlap_amplitude_rotated(FractionalCharge M, Angle alpha, Angle beta) {
    const double mu = M.fractional_part();
    const double a = alpha.radians();
    const double b = beta.radians();
    const double x = a + b;
    const complexd pref =
        std::polar(1.0, -static_cast<double>(M.integer_part()) * b) / two_pi;
    complexd amp;
    int branch;
    if (x <= two_pi + angle_snap) {
        amp = pref * (x * std::polar(1.0, (two_pi - x) * mu) +
                      (two_pi - x) * std::polar(1.0, -x * mu));
        branch = 1;
    } else {
        amp = pref * ((x - two_pi) * std::polar(1.0, (2.0 * two_pi - x) * mu) +
                      (2.0 * two_pi - x) * std::polar(1.0, -(x - two_pi) * mu));
        branch = 2;
    }
    return {amp, std::norm(amp), branch};
}

// |<M(0)|U(beta)|M(alpha)>|^2 in closed form, same two sections.
inline OverlapResult rotated_overlap_probability(FractionalCharge M, Angle alpha, Angle beta) {
    const double s2 = std::pow(std::sin(pi * M.value()), 2);
    const double x = alpha.radians() + beta.radians();
    double p;
    int branch;
    if (x <= two_pi + angle_snap) {
        p = (4.0 * x * (x - two_pi) * s2 + 4.0 * pi * pi) / (4.0 * pi * pi);
        branch = 1;
    } else {
        p = (4.0 * (x - 2.0 * two_pi) * (x - two_pi) * s2 + 4.0 * pi * pi) / (4.0 * pi * pi);
        branch = 2;
    }
    return {complexd(std::sqrt(std::max(p, 0.0)), 0.0), p, branch};
}

// <M(alpha)|U(beta)|M(alpha)>: self-overlap under rotation. Independent of
// alpha, which the test suite checks.
inline complexd self_rotation_amplitude(FractionalCharge M, Angle beta) {
    const double mu = M.fractional_part();
    const double b = beta.radians();
    return std::polar(1.0, -static_cast<double>(M.integer_part()) * b) *
           (b * std::polar(1.0, (two_pi - b) * mu) +
            (two_pi - b) * std::polar(1.0, -b * mu)) /
           two_pi;
}

// Real part of the self-overlap, as an independent closed form.
inline double self_rotation_real(FractionalCharge M, Angle beta) {
    const double mu = M.fractional_part();
    const double b = beta.radians();
    return (b * std::cos(two_pi * mu - b * M.value()) +
            (two_pi - b) * std::cos(b * M.value())) /
           two_pi;
}

// <M(0)|U(beta1)|M(alpha)> * conj(<M(0)|U(beta2)|M(alpha)>): four sections
// split by whether alpha + beta1 and alpha + beta2 exceed 2*pi.
inline complexd product_amplitude(FractionalCharge M, Angle alpha, Angle beta1, Angle beta2) {
    const double Mv = M.value();
    const double a = alpha.radians();
    const double b1 = beta1.radians();
    const double b2 = beta2.radians();
    const double x1 = a + b1;
    const double x2 = a + b2;
    const double s2 = std::pow(std::sin(pi * Mv), 2);
    const double s2m = std::sin(2.0 * pi * Mv);
    const complexd pref = std::polar(1.0, -(b1 - b2) * Mv) / (4.0 * pi * pi);
    const bool lo1 = x1 <= two_pi + angle_snap;
    const bool lo2 = x2 <= two_pi + angle_snap;
    complexd body;
    if (lo1 && lo2) {
        body = complexd(4.0 * s2 * (x1 * x2 - pi * (x1 + x2)) + 4.0 * pi * pi,
                        2.0 * pi * (b1 - b2) * s2m);
    } else if (lo1 && !lo2) {
        body = (x1 * (x2 - two_pi) + (two_pi - x1) * (2.0 * two_pi - x2)) *
                   std::polar(1.0, -two_pi * Mv) +
               (two_pi - x1) * (x2 - two_pi) * std::polar(1.0, -2.0 * two_pi * Mv) +
               x1 * (2.0 * two_pi - x2);
    } else if (!lo1 && lo2) {
        body = ((x1 - two_pi) * x2 + (2.0 * two_pi - x1) * (two_pi - x2)) *
                   std::polar(1.0, two_pi * Mv) +
               (x1 - two_pi) * (two_pi - x2) * std::polar(1.0, 2.0 * two_pi * Mv) +
               (2.0 * two_pi - x1) * x2;
    } else {
        body = complexd(4.0 * s2 * (x1 * x2 - pi * (3.0 * (x1 + x2) - 8.0 * pi)) + 4.0 * pi * pi,
                        2.0 * pi * (b1 - b2) * s2m);
    }
    return pref * body;
}

// Real part of the product above, as an independent four-section closed form.
inline double product_amplitude_real(FractionalCharge M, Angle alpha, Angle beta1, Angle beta2) {
    const double Mv = M.value();
    const double a = alpha.radians();
    const double b1 = beta1.radians();
    const double b2 = beta2.radians();
    const double x1 = a + b1;
    const double x2 = a + b2;
    const double d = b1 - b2;
    const double s2 = std::pow(std::sin(pi * Mv), 2);
    const double s2m = std::sin(2.0 * pi * Mv);
    const bool lo1 = x1 <= two_pi + angle_snap;
    const bool lo2 = x2 <= two_pi + angle_snap;
    double r;
    if (lo1 && lo2) {
        r = (4.0 * s2 * (x1 * x2 - pi * (x1 + x2)) + 4.0 * pi * pi) * std::cos(d * Mv) +
            2.0 * pi * d * s2m * std::sin(d * Mv);
    } else if (lo1 && !lo2) {
        r = (x1 * (x2 - two_pi) + (two_pi - x1) * (2.0 * two_pi - x2)) *
                std::cos((d + two_pi) * Mv) +
            (two_pi - x1) * (x2 - two_pi) * std::cos((d + 2.0 * two_pi) * Mv) +
            x1 * (2.0 * two_pi - x2) * std::cos(d * Mv);
    } else if (!lo1 && lo2) {
        r = ((x1 - two_pi) * x2 + (2.0 * two_pi - x1) * (two_pi - x2)) *
                std::cos((d - two_pi) * Mv) +
            (x1 - two_pi) * (two_pi - x2) * std::cos((d - 2.0 * two_pi) * Mv) +
            (2.0 * two_pi - x1) * x2 * std::cos(d * Mv);
    } else {
        r = (4.0 * s2 * (x1 * x2 - pi * (3.0 * (x1 + x2) - 8.0 * pi)) + 4.0 * pi * pi) *
                std::cos(d * Mv) +
            2.0 * pi * d * s2m * std::sin(d * Mv);
    }
    return r / (4.0 * pi * pi);
}

// 1-based section index t of alpha within the n equal sections of [0, 2*pi),
// lower bound inclusive after the angle_snap boundary snap.
inline int section_index(int n, Angle alpha) {
    const double width = two_pi / n;
    const double a = alpha.radians();
    int t = static_cast<int>(std::floor(a / width));
    if ((t + 1) * width - a <= angle_snap) ++t;
    if (t >= n) t = n - 1;
    return t + 1;
}

// Overlap probability |<Mn(0)|Mn(alpha)>|^2 between an n-fold superposed
// state and its rotation: an n-section parabola in alpha, constant when
// M mod n = 0. Valid for every (n, M) including the charges where the
// superposition route is degenerate.
inline OverlapResult overlap_probability_n(int n, FractionalCharge M, Angle alpha) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    const int t = section_index(n, alpha);
    const double lever = pi * (2.0 * t - 1.0) - n * alpha.radians();
    const double s = std::sin(M.value() * pi / n);
    const double c = std::cos(M.value() * pi / n);
    const double p = lever * lever / (pi * pi) * s * s + c * c;
    return {complexd(std::sqrt(std::max(p, 0.0)), 0.0), p, t};
}

// Sum over the n-fold rotation grid of Re<M|U(2*pi*k/n)|M>; the
// normalization denominator of the superposed overlap. Vanishes exactly for
// integer M with M mod n != 0.
inline double rotation_overlap_sum(int n, FractionalCharge M) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    double total = 0.0;
    for (int k = 0; k < n; ++k)
        total += std::real(self_rotation_amplitude(M, Angle(two_pi * k / n)));
    return total;
}

// <Mn(0)|Mn(alpha)>: the superposed overlap assembled from the n rotated
// overlap amplitudes over their normalization sum. Throws
// DegenerateSuperposition when the denominator is below threshold.
inline complexd superposed_overlap_amplitude(int n, FractionalCharge M, Angle alpha) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    complexd numerator = 0.0;
    for (int k = 0; k < n; ++k)
        numerator += overlap_amplitude_rotated(M, alpha, Angle(two_pi * k / n)).amplitude;
    const double denominator = rotation_overlap_sum(n, M);
    if (std::abs(denominator) < degeneracy_threshold)
        throw DegenerateSuperposition("superposition norm vanishes for this charge");
    return numerator / denominator;
}

}  // namespace sppn

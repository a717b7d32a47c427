#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace sppn {

using complexd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Tolerance for snapping an azimuth onto a segment boundary. Values within
// this distance of 2*pi canonicalize to 0 so that piecewise branch selection
// stays deterministic at boundaries.
inline constexpr double angle_snap = 1e-12;

// Azimuthal angle, always canonicalized into [0, 2*pi).
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : radians_(canonicalize(radians)) {}

    double radians() const { return radians_; }

    static double canonicalize(double x) {
        double r = std::fmod(x, two_pi);
        if (r < 0.0) r += two_pi;
        if (two_pi - r <= angle_snap) r = 0.0;
        return r;
    }

private:
    double radians_ = 0.0;
};

// (a + b) mod 2*pi
inline Angle canonical_add(Angle a, Angle b) {
    return Angle(a.radians() + b.radians());
}

// (a - b) mod 2*pi
inline Angle canonical_sub(Angle a, Angle b) {
    return Angle(a.radians() - b.radians());
}

}  // namespace sppn

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sppn/field.hpp"

// Brute-force engine: exact inner products of piecewise-exponential fields by
// closed-form per-piece antiderivatives. Deliberately independent of every
// analytic overlap formula in the library; the only shared code is the field
// representation itself.
namespace sppn::oracle {

namespace detail {

// Sorted union of both segment partitions' boundaries, boundaries closer than
// angle_snap merged, 2*pi appended as the closing edge.
inline std::vector<double> merged_boundaries(const PiecewiseExpField& a,
                                             const PiecewiseExpField& b) {
    std::vector<double> cuts;
    cuts.reserve(a.size() + b.size() + 1);
    for (const Segment& s : a.segments()) cuts.push_back(s.start);
    for (const Segment& s : b.segments()) cuts.push_back(s.start);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> out;
    for (double c : cuts)
        if (out.empty() || c - out.back() > angle_snap) out.push_back(c);
    out.push_back(two_pi);
    return out;
}

// Integral of e^{i g phi} over [lo, hi], with the g -> 0 limit taken
// explicitly. The difference of exponentials is formed as
// e^{i g lo} (e^{i g (hi-lo)} - 1) to avoid cancellation.
inline complexd exp_integral(double gradient, double lo, double hi) {
    if (std::abs(gradient) < 1e-12) return complexd(hi - lo, 0.0);
    const double w = gradient * (hi - lo);
    const complexd expm1(-2.0 * std::sin(0.5 * w) * std::sin(0.5 * w), std::sin(w));
    return std::polar(1.0, gradient * lo) * expm1 / complexd(0.0, gradient);
}

}  // namespace detail

// (1/2*pi) * integral over [0, 2*pi) of conj(bra(phi)) * ket(phi), evaluated
// exactly: on each piece of the intersected partition the integrand is a
// single complex exponential.
inline complexd inner_product(const PiecewiseExpField& bra, const PiecewiseExpField& ket) {
    const std::vector<double> cuts = detail::merged_boundaries(bra, ket);
    complexd total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const double mid = 0.5 * (lo + hi);
        const Segment& sb = bra.segment_at(mid);
        const Segment& sk = ket.segment_at(mid);
        const complexd factor =
            std::conj(sb.amplitude) * sk.amplitude * std::polar(1.0, sk.offset - sb.offset);
        total += factor * detail::exp_integral(sk.gradient - sb.gradient, lo, hi);
    }
    return total / two_pi;
}

// Squared norm (1/2*pi) * integral |psi|^2, by the same exact integration.
inline double norm_squared(const PiecewiseExpField& psi) {
    return std::real(inner_product(psi, psi));
}

}  // namespace sppn::oracle

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sppn/closed_form.hpp"
#include "sppn/field.hpp"
#include "sppn/oracle.hpp"

namespace sppn {

enum class Construction {
    EqOneSuperposition,  // normalized sum of the n rotated vortex copies
    SectorProfile        // direct n-sector phase ramp of the plate
};

// An n-fold rotationally symmetric plate state |Mn(alpha)>, carried as a
// piecewise-exponential field together with how it was built. The two
// constructions agree up to one global phase wherever the superposition is
// non-degenerate; the sector profile also covers the charges where the
// superposition norm vanishes.
struct SuperposedState {
    int n;
    FractionalCharge M;
    Angle alpha;
    Construction construction;
    PiecewiseExpField field;
};

// n * sum_k Re<M|U(2*pi*k/n)|M>: the squared norm of the unnormalized n-fold
// superposition. Zero is a legal return value here (the degenerate charges).
inline double unnormalized_norm(int n, FractionalCharge M) {
    return n * rotation_overlap_sum(n, M);
}

namespace detail {

// Collapse a sum of same-gradient piecewise fields onto the union partition:
// on each piece every summand is a constant times e^{i*gradient*phi}, so the
// sum is one complex coefficient. Adjacent pieces whose coefficients agree are
// merged; those boundaries are bookkeeping artifacts, not value jumps.
inline PiecewiseExpField collapse_sum(const std::vector<PiecewiseExpField>& terms,
                                      double gradient) {
    std::vector<double> cuts;
    for (const PiecewiseExpField& f : terms)
        for (const Segment& s : f.segments()) cuts.push_back(s.start);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> starts;
    for (double c : cuts)
        if (starts.empty() || c - starts.back() > angle_snap) starts.push_back(c);

    std::vector<Segment> pieces;
    pieces.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const double lo = starts[i];
        const double hi = (i + 1 < starts.size()) ? starts[i + 1] : two_pi;
        const double mid = 0.5 * (lo + hi);
        complexd coeff = 0.0;
        for (const PiecewiseExpField& f : terms) {
            const Segment& s = f.segment_at(mid);
            coeff += s.amplitude * std::polar(1.0, s.offset);
        }
        if (!pieces.empty() &&
            std::abs(coeff - pieces.back().amplitude) <=
                1e-10 * (1.0 + std::abs(coeff))) {
            pieces.back().end = hi;
        } else {
            pieces.push_back({lo, hi, gradient, 0.0, coeff});
        }
    }
    return PiecewiseExpField(std::move(pieces));
}

}  // namespace detail

// |Mn(alpha)>: normalized sum of the n rotated copies of the fractional
// vortex at alpha. Throws DegenerateSuperposition when the norm of the sum is
// below threshold (any integer M with M mod n != 0). The degeneracy gate and
// the normalization both use the exact-integration norm, keeping this route
// independent of the analytic overlap formulas.
inline SuperposedState build_superposed(int n, FractionalCharge M, Angle alpha) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    std::vector<PiecewiseExpField> terms;
    terms.reserve(n);
    const PiecewiseExpField base = fractional_vortex_field(M, alpha);
    for (int k = 0; k < n; ++k)
        terms.push_back(rotate_field(base, Angle(two_pi * k / n)));
    PiecewiseExpField sum = detail::collapse_sum(terms, M.value());

    const double norm2 = oracle::norm_squared(sum);
    if (norm2 < degeneracy_threshold)
        throw DegenerateSuperposition("superposition norm vanishes for this charge");

    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Segment> segs = sum.segments();
    for (Segment& s : segs) s.amplitude *= scale;
    return {n, M, alpha, Construction::EqOneSuperposition,
            PiecewiseExpField(std::move(segs))};
}

// |Mn(alpha)> as the direct plate profile: n sectors of width 2*pi/n, each a
// phase ramp of gradient M restarting at the sector edge. Unit modulus by
// construction, defined for every (n, M) including the degenerate charges.
inline SuperposedState build_spp_profile(int n, FractionalCharge M, Angle alpha) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    const double width = two_pi / n;
    const double a = alpha.radians();

    std::vector<double> cuts;
    cuts.reserve(n + 1);
    for (int k = 0; k < n; ++k) cuts.push_back(canonical_add(alpha, Angle(width * k)).radians());
    cuts.push_back(0.0);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> starts;
    for (double c : cuts)
        if (starts.empty() || c - starts.back() > angle_snap) starts.push_back(c);

    std::vector<Segment> segs;
    segs.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const double lo = starts[i];
        const double hi = (i + 1 < starts.size()) ? starts[i + 1] : two_pi;
        const double mid = 0.5 * (lo + hi);
        double saw = std::fmod(mid - a, width);
        if (saw < 0.0) saw += width;
        const double sector_origin = mid - saw;
        segs.push_back({lo, hi, M.value(), -M.value() * sector_origin, 1.0});
    }
    return {n, M, alpha, Construction::SectorProfile, PiecewiseExpField(std::move(segs))};
}

// Worst pointwise deviation of the field from its n-fold rotated copies:
// max over t in {1..n} and 1024 azimuths of |psi(phi) - psi(phi - 2*pi*t/n)|.
// Zero (to rounding) exactly when the state has the n-fold symmetry.
inline double symmetry_residual(const PiecewiseExpField& field, int n) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    constexpr int samples = 1024;
    double worst = 0.0;
    for (int t = 1; t <= n; ++t) {
        const PiecewiseExpField rotated = rotate_field(field, Angle(two_pi * t / n));
        for (int i = 0; i < samples; ++i) {
            const double phi = (i + 0.5) * two_pi / samples;
            worst = std::max(worst, std::abs(field(phi) - rotated(phi)));
        }
    }
    return worst;
}

inline double symmetry_residual(const SuperposedState& state) {
    return symmetry_residual(state.field, state.n);
}

// Truncated integer-OAM spectrum of a state: coefficient per mode index over
// [m_min, m_max].
struct ModeSpectrum {
    long m_min;
    long m_max;
    std::vector<complexd> coefficients;

    complexd at(long m) const { return coefficients.at(static_cast<std::size_t>(m - m_min)); }
    double weight(long m) const { return std::norm(at(m)); }
    double total_weight() const {
        double w = 0.0;
        for (const complexd& c : coefficients) w += std::norm(c);
        return w;
    }
};

// c_m = (1/2*pi) * integral e^{-i m phi} psi(phi), each coefficient by exact
// per-segment integration.
inline ModeSpectrum decompose_field(const PiecewiseExpField& field, long m_min, long m_max) {
    if (m_min > m_max) throw std::invalid_argument("mode range is empty");
    ModeSpectrum spec{m_min, m_max, {}};
    spec.coefficients.reserve(static_cast<std::size_t>(m_max - m_min + 1));
    for (long m = m_min; m <= m_max; ++m) {
        const PiecewiseExpField mode(
            {{0.0, two_pi, static_cast<double>(m), 0.0, 1.0}});
        spec.coefficients.push_back(oracle::inner_product(mode, field));
    }
    return spec;
}

inline ModeSpectrum decompose_superposed(const SuperposedState& state, long m_min, long m_max) {
    return decompose_field(state.field, m_min, m_max);
}

namespace oracle {

// Brute-force overlap probability: build the two states at orientations 0 and
// alpha with the requested construction and integrate their inner product
// exactly. Propagates DegenerateSuperposition from the superposition route.
inline double overlap_probability_oracle(int n, FractionalCharge M, Angle alpha,
                                         Construction construction) {
    const auto build = (construction == Construction::EqOneSuperposition)
                           ? build_superposed
                           : build_spp_profile;
    const SuperposedState at_zero = build(n, M, Angle(0.0));
    const SuperposedState at_alpha = build(n, M, alpha);
    return std::norm(inner_product(at_zero.field, at_alpha.field));
}

}  // namespace oracle

}  // namespace sppn

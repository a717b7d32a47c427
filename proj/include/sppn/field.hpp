#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sppn/angle.hpp"
#include "sppn/charge.hpp"

namespace sppn {

// One angular segment [start, end) on which the field equals
// amplitude * exp(i * (gradient * phi + offset)).
struct Segment {
    double start;
    double end;  // exclusive; the final segment ends at 2*pi
    double gradient;
    double offset;
    complexd amplitude;

    complexd value(double phi) const {
        return amplitude * std::polar(1.0, gradient * phi + offset);
    }
};

// A field on the unit circle that is a complex exponential on each segment of
// a partition of [0, 2*pi). Immutable after construction; every operation on
// fields returns a new value.
class PiecewiseExpField {
public:
    explicit PiecewiseExpField(std::vector<Segment> segments)
        : segments_(std::move(segments)) {
        if (segments_.empty())
            throw std::invalid_argument("field needs at least one segment");
        if (segments_.front().start != 0.0)
            throw std::invalid_argument("first segment must start at 0");
        for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
            if (!(segments_[i].start < segments_[i + 1].start))
                throw std::invalid_argument("segment starts must be strictly increasing");
            if (segments_[i].end != segments_[i + 1].start)
                throw std::invalid_argument("segments must tile [0, 2*pi) without gaps");
        }
        if (segments_.back().end != two_pi)
            throw std::invalid_argument("last segment must end at 2*pi");
    }

    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }

    // Segment containing phi, with azimuths within angle_snap of a boundary
    // resolved to the segment that starts there (lower bound inclusive).
    const Segment& segment_at(double phi) const {
        double p = Angle::canonicalize(phi);
        std::size_t lo = 0, hi = segments_.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (segments_[mid].start <= p)
                lo = mid;
            else
                hi = mid;
        }
        if (lo + 1 < segments_.size() && segments_[lo + 1].start - p <= angle_snap)
            ++lo;
        return segments_[lo];
    }

    complexd operator()(double phi) const {
        return segment_at(phi).value(Angle::canonicalize(phi));
    }

private:
    std::vector<Segment> segments_;
};

// Field of the fractional-vortex state <phi|M(alpha)>: a phase ramp of
// gradient M with an edge dislocation at azimuth alpha. The arc [0, alpha)
// carries the extra 2*pi*mu offset; for alpha = 0 or integer M the field is a
// single pure exponential.
inline PiecewiseExpField fractional_vortex_field(FractionalCharge M, Angle alpha) {
    const double mu = M.fractional_part();
    const double a = alpha.radians();
    if (a == 0.0 || mu == 0.0)
        return PiecewiseExpField({{0.0, two_pi, M.value(), 0.0, 1.0}});
    return PiecewiseExpField({{0.0, a, M.value(), mu * (two_pi - a), 1.0},
                              {a, two_pi, M.value(), -mu * a, 1.0}});
}

// Rotated field phi -> psi(phi - beta mod 2*pi). Segment boundaries shift by
// beta; the segment straddling the wrap splits at 0, so the count grows by at
// most one. For psi = <phi|M(alpha)> the result is exactly
// e^{-i m beta} <phi|M(alpha+beta)>.
inline PiecewiseExpField rotate_field(const PiecewiseExpField& psi, Angle beta) {
    const double b = beta.radians();
    if (b == 0.0) return psi;

    std::vector<Segment> pieces;
    pieces.reserve(psi.size() + 1);
    for (const Segment& s : psi.segments()) {
        const double ns = s.start + b;
        const double ne = s.end + b;
        // argument phi - b stays in the segment: offset shifts by -gradient*b;
        // after wrapping, phi - b + 2*pi hits it: shift by +gradient*(2*pi - b)
        const double off_lo = s.offset - s.gradient * b;
        const double off_hi = s.offset + s.gradient * (two_pi - b);
        if (ne <= two_pi + angle_snap) {
            pieces.push_back({Angle::canonicalize(ns), 0.0, s.gradient, off_lo, s.amplitude});
        } else if (ns >= two_pi - angle_snap) {
            pieces.push_back({Angle::canonicalize(ns), 0.0, s.gradient, off_hi, s.amplitude});
        } else {
            pieces.push_back({ns, 0.0, s.gradient, off_lo, s.amplitude});
            pieces.push_back({0.0, 0.0, s.gradient, off_hi, s.amplitude});
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Segment& x, const Segment& y) { return x.start < y.start; });
    std::vector<Segment> out;
    out.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        double end = (i + 1 < pieces.size()) ? pieces[i + 1].start : two_pi;
        if (end - pieces[i].start <= angle_snap) continue;  // zero-width artifact
        Segment s = pieces[i];
        s.end = end;
        out.push_back(s);
    }
    return PiecewiseExpField(std::move(out));
}

// Coefficient <m'|U(beta)|M(alpha)> of the integer-OAM eigenmode m' in the
// rotated fractional-vortex state. Integer charges reduce to a Kronecker
// delta; the (M - m') denominator is never evaluated at its removable
// singularity.
inline complexd mode_coefficient(FractionalCharge M, Angle alpha, long m_prime, Angle beta) {
    const double mu = M.fractional_part();
    const long m = M.integer_part();
    const double b = beta.radians();
    if (mu == 0.0) {
        complexd delta = (m_prime == m) ? 1.0 : 0.0;
        return std::polar(1.0, -static_cast<double>(m) * b) * delta;
    }
    const double shifted = canonical_add(alpha, beta).radians();
    const complexd one_minus = 1.0 - std::polar(1.0, two_pi * mu);
    return std::polar(1.0, -static_cast<double>(m) * b) * complexd(0.0, 1.0) *
           std::polar(1.0, static_cast<double>(m - m_prime) * shifted) * one_minus /
           (two_pi * (M.value() - static_cast<double>(m_prime)));
}

}  // namespace sppn

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sppn/closed_form.hpp"

// The proposed coincidence experiment: two n-section plates in the signal and
// idler arms, coincidence fringes given by the n-section overlap probability
// of the relative plate angle, CHSH correlations built from orthogonal
// analyzer pairs, and a shot-noise sampler for synthetic count tables.
namespace sppn {

struct AnalyzerSettings {
    int n;
    Angle alpha_s;
    Angle alpha_s_prime;
    Angle alpha_i;
    Angle alpha_i_prime;
    int t_perp;  // which of the n orthogonal pairs, 1-based
};

struct BellResult {
    // E(a_s, a_i), E(a_s', a_i), E(a_s, a_i'), E(a_s', a_i')
    std::array<double, 4> correlations;
    double S;  // correlations[0] - correlations[1] + correlations[2] + correlations[3]
    bool in_orthogonal_class;
};

struct FringeRow {
    double alpha_rad;
    double probability;
    std::uint64_t counts;
};

struct FringeTable {
    std::vector<FringeRow> rows;
    bool has_counts = false;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

// Name of the sampler's pseudo-random scheme, recorded in output metadata.
inline constexpr const char* sampler_generator_name = "splitmix64-mt19937_64-bernoulli";

// Coincidence probability of the two detections with plate orientations
// alpha_s and alpha_i: depends only on the wrapped difference alpha_s -
// alpha_i.
inline double coincidence_probability(int n, FractionalCharge M, Angle alpha_s, Angle alpha_i) {
    return overlap_probability_n(n, M, canonical_sub(alpha_s, alpha_i)).probability;
}

// The charges whose fringe minima reach zero: (M - n/2) mod n = 0 within
// tolerance. Out-of-class charges still yield finite correlations but
// sub-maximal visibility.
inline bool in_orthogonal_class(int n, FractionalCharge M, double tol = 1e-9) {
    double r = std::fmod(M.value() - 0.5 * n, static_cast<double>(n));
    if (r < 0.0) r += n;
    return std::min(r, n - r) <= tol;
}

// Correlation of the four coincidence rates at (alpha_s, alpha_i) and their
// orthogonal partner angles alpha + pi*(2*t_perp - 1)/n.
inline double correlation_E(int n, FractionalCharge M, Angle alpha_s, Angle alpha_i,
                            int t_perp) {
    if (t_perp < 1 || t_perp > n)
        throw std::invalid_argument("t_perp must lie in {1..n}");
    const Angle perp_shift(pi * (2.0 * t_perp - 1.0) / n);
    const Angle as_perp = canonical_add(alpha_s, perp_shift);
    const Angle ai_perp = canonical_add(alpha_i, perp_shift);
    const double p_both = coincidence_probability(n, M, alpha_s, alpha_i);
    const double p_perp = coincidence_probability(n, M, as_perp, ai_perp);
    const double p_si = coincidence_probability(n, M, alpha_s, ai_perp);
    const double p_is = coincidence_probability(n, M, as_perp, alpha_i);
    const double denom = p_both + p_perp + p_si + p_is;
    if (!(denom > 0.0))
        throw std::runtime_error("correlation denominator is not positive");
    return (p_both + p_perp - p_si - p_is) / denom;
}

// The two-polarizer standard analyzer angles scaled down by 2n:
// (-pi/4n, pi/4n, -pi/2n, 0), canonicalized into [0, 2*pi).
inline AnalyzerSettings standard_settings(int n) {
    if (n < 1) throw std::invalid_argument("section count n must be >= 1");
    return {n,
            Angle(-pi / (4.0 * n)),
            Angle(pi / (4.0 * n)),
            Angle(-pi / (2.0 * n)),
            Angle(0.0),
            1};
}

inline BellResult chsh_parameter(int n, FractionalCharge M, const AnalyzerSettings& settings) {
    const std::array<double, 4> e = {
        correlation_E(n, M, settings.alpha_s, settings.alpha_i, settings.t_perp),
        correlation_E(n, M, settings.alpha_s_prime, settings.alpha_i, settings.t_perp),
        correlation_E(n, M, settings.alpha_s, settings.alpha_i_prime, settings.t_perp),
        correlation_E(n, M, settings.alpha_s_prime, settings.alpha_i_prime, settings.t_perp)};
    return {e, e[0] - e[1] + e[2] + e[3], in_orthogonal_class(n, M)};
}

// Analytic fringe: the n-section overlap probability sampled on `points`
// uniform angles of [0, 2*pi).
inline FringeTable fringe_scan(int n, FractionalCharge M, int points) {
    if (points < 2) throw std::invalid_argument("a scan needs at least 2 points");
    FringeTable table;
    table.rows.reserve(points);
    for (int j = 0; j < points; ++j) {
        const double a = two_pi * j / points;
        table.rows.push_back({a, overlap_probability_n(n, M, Angle(a)).probability, 0});
    }
    return table;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent generator per fringe row so rows can be sampled in any order
// with identical output.
inline std::mt19937_64 row_generator(std::uint64_t seed, std::uint64_t row) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (row + 1));
    const std::uint64_t a = splitmix64(state);
    return std::mt19937_64(a);
}

inline double next_unit(std::mt19937_64& gen) {
    return (gen() >> 11) * 0x1.0p-53;
}

// Bernoulli-count binomial draw; fully specified, so identical seeds give
// identical counts on any platform.
inline std::uint64_t binomial_draw(std::mt19937_64& gen, std::uint64_t trials, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
        if (next_unit(gen) < p) ++count;
    return count;
}

}  // namespace detail

// Synthetic coincidence counting: for each of `points` angles, draw counts
// from Binomial(shots, p) with p the analytic coincidence probability. The
// probability column holds counts/shots (0 when shots = 0).
inline FringeTable sample_fringe(int n, FractionalCharge M, int points, std::uint64_t shots,
                                 std::uint64_t seed) {
    if (points < 2) throw std::invalid_argument("a scan needs at least 2 points");
    FringeTable table;
    table.has_counts = true;
    table.shots = shots;
    table.seed = seed;
    table.rows.reserve(points);
    for (int j = 0; j < points; ++j) {
        const double a = two_pi * j / points;
        const double p = overlap_probability_n(n, M, Angle(a)).probability;
        std::mt19937_64 gen = detail::row_generator(seed, static_cast<std::uint64_t>(j));
        const std::uint64_t counts =
            detail::binomial_draw(gen, shots, std::min(std::max(p, 0.0), 1.0));
        const double rate = (shots == 0) ? 0.0 : static_cast<double>(counts) / shots;
        table.rows.push_back({a, rate, counts});
    }
    return table;
}

}  // namespace sppn

// Command-line front end: fringe tables, Bell evaluation, mode spectra,
// symmetry audits, closed-form-vs-oracle verification, and shot-noise
// sampling, emitted as CSV or JSON with full round-trip float precision.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error,
// 4 degenerate superposition construction.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sppn/sppn.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_degenerate = 4;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_or_null(double v) {
    return std::isnan(v) ? std::string("null") : fmt(v);
}

// Minimal JSON writer: keys stay in insertion order and every float goes
// through the same %.17g formatting as the CSV path.
class JsonWriter {
public:
    std::string str() const { return out_; }

    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(const std::string& k) {
        comma();
        out_ += '"';
        out_ += k;
        out_ += "\":";
        pending_value_ = true;
    }

    void value_raw(const std::string& v) {
        comma();
        out_ += v;
    }
    void value(double v) { value_raw(fmt_or_null(v)); }
    void value(std::int64_t v) { value_raw(std::to_string(v)); }
    void value(std::uint64_t v) { value_raw(std::to_string(v)); }
    void value(int v) { value_raw(std::to_string(v)); }
    void value(bool v) { value_raw(v ? "true" : "false"); }
    void value(const std::string& v) {
        comma();
        out_ += '"';
        out_ += v;  // emitted strings are plain identifiers, no escaping needed
        out_ += '"';
    }
    void value_complex(sppn::complexd v) {
        comma();
        out_ += '[';
        out_ += fmt(v.real());
        out_ += ',';
        out_ += fmt(v.imag());
        out_ += ']';
    }

private:
    void open(char c) {
        comma();
        out_ += c;
        fresh_ = true;
    }
    void close(char c) {
        out_ += c;
        fresh_ = false;
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!fresh_ && !out_.empty() && out_.back() != '{' && out_.back() != '[') out_ += ',';
        fresh_ = false;
    }

    std::string out_;
    bool fresh_ = true;
    bool pending_value_ = false;
};

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return exit_ok;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path '" << out_path << "'\n";
        return exit_io;
    }
    f << payload;
    if (!f) {
        std::cerr << "error: failed writing to '" << out_path << "'\n";
        return exit_io;
    }
    return exit_ok;
}

enum class ConstructionChoice { Auto, Superposition, Sector };

struct RunConfig {
    int n = 1;
    double charge = 0.5;
    double alpha = 0.0;
    int points = 721;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    ConstructionChoice construction = ConstructionChoice::Auto;
    bool degrees = false;
    std::string range = "-50:50";
    // bell overrides
    std::optional<double> alpha_s, alpha_s_prime, alpha_i, alpha_i_prime;
    int t_perp = 1;
    // verify knobs
    double tolerance = 1e-10;
    std::uint64_t max_cases = 200;
    bool inject_fault = false;
};

double to_radians(const RunConfig& cfg, double angle) {
    return cfg.degrees ? angle * sppn::pi / 180.0 : angle;
}

// auto resolves to the sector profile exactly when the superposition norm is
// degenerate for this charge.
sppn::Construction resolve_state_construction(const RunConfig& cfg) {
    if (cfg.construction == ConstructionChoice::Superposition)
        return sppn::Construction::EqOneSuperposition;
    if (cfg.construction == ConstructionChoice::Sector)
        return sppn::Construction::SectorProfile;
    const double norm = sppn::unnormalized_norm(cfg.n, cfg.charge);
    return (std::abs(norm) < sppn::degeneracy_threshold)
               ? sppn::Construction::SectorProfile
               : sppn::Construction::EqOneSuperposition;
}

std::string construction_name(sppn::Construction c) {
    return c == sppn::Construction::SectorProfile ? "sector-profile" : "superposition";
}

int run_fringe(const RunConfig& cfg) {
    std::string method;
    sppn::FringeTable table;
    if (cfg.construction == ConstructionChoice::Auto) {
        method = "n-section-closed-form";
        table = sppn::fringe_scan(cfg.n, cfg.charge, cfg.points);
    } else {
        const sppn::Construction c = resolve_state_construction(cfg);
        method = construction_name(c) + "-oracle";
        table.rows.reserve(cfg.points);
        for (int j = 0; j < cfg.points; ++j) {
            const double a = sppn::two_pi * j / cfg.points;
            table.rows.push_back(
                {a, sppn::oracle::overlap_probability_oracle(cfg.n, cfg.charge,
                                                             sppn::Angle(a), c),
                 0});
        }
    }

    std::string payload;
    if (cfg.format == "csv") {
        payload += "# method=" + method + "\n";
        payload += "alpha_rad,probability\n";
        for (const auto& row : table.rows)
            payload += fmt(row.alpha_rad) + "," + fmt(row.probability) + "\n";
    } else {
        JsonWriter w;
        w.begin_object();
        w.key("subcommand"), w.value(std::string("fringe"));
        w.key("n"), w.value(cfg.n);
        w.key("charge"), w.value(cfg.charge);
        w.key("points"), w.value(cfg.points);
        w.key("method"), w.value(method);
        w.key("rows"), w.begin_array();
        for (const auto& row : table.rows) {
            w.begin_object();
            w.key("alpha_rad"), w.value(row.alpha_rad);
            w.key("probability"), w.value(row.probability);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        payload = w.str() + "\n";
    }
    return write_output(payload, cfg.out_path);
}

int run_bell(const RunConfig& cfg) {
    sppn::AnalyzerSettings settings = sppn::standard_settings(cfg.n);
    if (cfg.alpha_s) settings.alpha_s = sppn::Angle(to_radians(cfg, *cfg.alpha_s));
    if (cfg.alpha_s_prime)
        settings.alpha_s_prime = sppn::Angle(to_radians(cfg, *cfg.alpha_s_prime));
    if (cfg.alpha_i) settings.alpha_i = sppn::Angle(to_radians(cfg, *cfg.alpha_i));
    if (cfg.alpha_i_prime)
        settings.alpha_i_prime = sppn::Angle(to_radians(cfg, *cfg.alpha_i_prime));
    settings.t_perp = cfg.t_perp;
    if (cfg.t_perp < 1 || cfg.t_perp > cfg.n) {
        std::cerr << "error: --t-perp must lie in 1.." << cfg.n << "\n";
        return exit_usage;
    }

    const sppn::BellResult result = sppn::chsh_parameter(cfg.n, cfg.charge, settings);

    JsonWriter w;
    w.begin_object();
    w.key("n"), w.value(cfg.n);
    w.key("M"), w.value(cfg.charge);
    w.key("settings"), w.begin_object();
    w.key("alpha_s"), w.value(settings.alpha_s.radians());
    w.key("alpha_s_prime"), w.value(settings.alpha_s_prime.radians());
    w.key("alpha_i"), w.value(settings.alpha_i.radians());
    w.key("alpha_i_prime"), w.value(settings.alpha_i_prime.radians());
    w.key("t_perp"), w.value(settings.t_perp);
    w.end_object();
    w.key("E"), w.begin_array();
    for (double e : result.correlations) w.value(e);
    w.end_array();
    w.key("S"), w.value(result.S);
    w.key("in_orthogonal_class"), w.value(result.in_orthogonal_class);
    w.end_object();
    return write_output(w.str() + "\n", cfg.out_path);
}

void write_case(JsonWriter& w, const sppn::verify::Case& c) {
    w.begin_object();
    w.key("formula"), w.value(c.formula);
    w.key("n"), w.value_raw(c.n == 0 ? "null" : std::to_string(c.n));
    w.key("M"), w.value(c.M);
    w.key("alpha"), w.value(c.alpha);
    w.key("beta"), w.value(c.beta);
    w.key("beta2"), w.value(c.beta2);
    w.key("closed"), w.value_complex(c.closed);
    w.key("oracle"), w.value_complex(c.oracle);
    w.key("abs_err"), w.value(c.abs_err);
    w.end_object();
}

int run_verify(const RunConfig& cfg) {
    sppn::verify::Options options;
    options.tolerance = cfg.tolerance;
    options.max_recorded_failures = cfg.max_cases;
    options.inject_fault = cfg.inject_fault;
    const sppn::verify::Report report = sppn::verify::run_verification(options);

    JsonWriter w;
    w.begin_object();
    w.key("tolerance"), w.value(report.tolerance);
    w.key("summary"), w.begin_object();
    w.key("max_abs_err"), w.value(report.max_abs_err);
    w.key("cases"), w.value(std::int64_t(report.cases));
    w.key("failures"), w.value(std::int64_t(report.failures));
    w.end_object();
    w.key("formulas"), w.begin_array();
    for (const auto& f : report.formulas) {
        w.begin_object();
        w.key("formula"), w.value(f.formula);
        w.key("cases"), w.value(std::int64_t(f.cases));
        w.key("max_abs_err"), w.value(f.max_abs_err);
        w.key("worst");
        write_case(w, f.worst);
        w.end_object();
    }
    w.end_array();
    w.key("failing_cases"), w.begin_array();
    for (const auto& c : report.failing_cases) write_case(w, c);
    w.end_array();
    w.key("passed"), w.value(report.passed());
    w.end_object();
    const int io = write_output(w.str() + "\n", cfg.out_path);
    if (io != exit_ok) return io;
    return report.passed() ? exit_ok : exit_verify_failed;
}

int parse_range(const std::string& text, long& lo, long& hi) {
    const auto colon = text.find(':', 1);  // a leading '-' is a sign, not a separator
    if (colon == std::string::npos) return 1;
    try {
        lo = std::stol(text.substr(0, colon));
        hi = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
        return 1;
    }
    return lo > hi ? 1 : 0;
}

int run_decompose(const RunConfig& cfg) {
    long m_min = 0, m_max = 0;
    if (parse_range(cfg.range, m_min, m_max) != 0) {
        std::cerr << "error: --range expects MIN:MAX with MIN <= MAX\n";
        return exit_usage;
    }
    const sppn::Construction c = resolve_state_construction(cfg);
    const sppn::SuperposedState state =
        (c == sppn::Construction::SectorProfile)
            ? sppn::build_spp_profile(cfg.n, cfg.charge,
                                      sppn::Angle(to_radians(cfg, cfg.alpha)))
            : sppn::build_superposed(cfg.n, cfg.charge,
                                     sppn::Angle(to_radians(cfg, cfg.alpha)));
    const sppn::ModeSpectrum spectrum = sppn::decompose_superposed(state, m_min, m_max);

    std::string payload;
    if (cfg.format == "csv") {
        payload += "# construction=" + construction_name(c) + "\n";
        payload += "m_prime,re,im,weight\n";
        for (long m = m_min; m <= m_max; ++m) {
            const sppn::complexd v = spectrum.at(m);
            payload += std::to_string(m) + "," + fmt(v.real()) + "," + fmt(v.imag()) +
                       "," + fmt(std::norm(v)) + "\n";
        }
    } else {
        JsonWriter w;
        w.begin_object();
        w.key("subcommand"), w.value(std::string("decompose"));
        w.key("n"), w.value(cfg.n);
        w.key("charge"), w.value(cfg.charge);
        w.key("alpha"), w.value(to_radians(cfg, cfg.alpha));
        w.key("construction"), w.value(construction_name(c));
        w.key("m_min"), w.value(std::int64_t(m_min));
        w.key("m_max"), w.value(std::int64_t(m_max));
        w.key("rows"), w.begin_array();
        for (long m = m_min; m <= m_max; ++m) {
            const sppn::complexd v = spectrum.at(m);
            w.begin_object();
            w.key("m_prime"), w.value(std::int64_t(m));
            w.key("re"), w.value(v.real());
            w.key("im"), w.value(v.imag());
            w.key("weight"), w.value(std::norm(v));
            w.end_object();
        }
        w.end_array();
        w.end_object();
        payload = w.str() + "\n";
    }
    return write_output(payload, cfg.out_path);
}

int run_symmetry(const RunConfig& cfg) {
    const sppn::Construction c = resolve_state_construction(cfg);
    const sppn::SuperposedState state =
        (c == sppn::Construction::SectorProfile)
            ? sppn::build_spp_profile(cfg.n, cfg.charge,
                                      sppn::Angle(to_radians(cfg, cfg.alpha)))
            : sppn::build_superposed(cfg.n, cfg.charge,
                                     sppn::Angle(to_radians(cfg, cfg.alpha)));
    const double residual = sppn::symmetry_residual(state);

    std::string payload;
    if (cfg.format == "csv") {
        payload += "# construction=" + construction_name(c) + "\n";
        payload += "residual\n" + fmt(residual) + "\n";
    } else {
        JsonWriter w;
        w.begin_object();
        w.key("subcommand"), w.value(std::string("symmetry"));
        w.key("n"), w.value(cfg.n);
        w.key("charge"), w.value(cfg.charge);
        w.key("alpha"), w.value(to_radians(cfg, cfg.alpha));
        w.key("construction"), w.value(construction_name(c));
        w.key("residual"), w.value(residual);
        w.end_object();
        payload = w.str() + "\n";
    }
    return write_output(payload, cfg.out_path);
}

int run_sample(const RunConfig& cfg) {
    const sppn::FringeTable table =
        sppn::sample_fringe(cfg.n, cfg.charge, cfg.points, cfg.shots, cfg.seed);

    std::string payload;
    if (cfg.format == "csv") {
        payload += std::string("# generator=") + sppn::sampler_generator_name +
                   " seed=" + std::to_string(cfg.seed) +
                   " shots=" + std::to_string(cfg.shots) + "\n";
        payload += "alpha_rad,counts,rate\n";
        for (const auto& row : table.rows)
            payload += fmt(row.alpha_rad) + "," + std::to_string(row.counts) + "," +
                       fmt(row.probability) + "\n";
    } else {
        JsonWriter w;
        w.begin_object();
        w.key("subcommand"), w.value(std::string("sample"));
        w.key("n"), w.value(cfg.n);
        w.key("charge"), w.value(cfg.charge);
        w.key("points"), w.value(cfg.points);
        w.key("shots"), w.value(cfg.shots);
        w.key("seed"), w.value(cfg.seed);
        w.key("generator"), w.value(std::string(sppn::sampler_generator_name));
        w.key("rows"), w.begin_array();
        for (const auto& row : table.rows) {
            w.begin_object();
            w.key("alpha_rad"), w.value(row.alpha_rad);
            w.key("counts"), w.value(row.counts);
            w.key("rate"), w.value(row.probability);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        payload = w.str() + "\n";
    }
    return write_output(payload, cfg.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-section spiral-phase-plate state toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;

    const std::map<std::string, ConstructionChoice> construction_map{
        {"auto", ConstructionChoice::Auto},
        {"superposition", ConstructionChoice::Superposition},
        {"sector", ConstructionChoice::Sector}};

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
        if (with_format)
            cmd->add_option("--format", cfg.format, "Output format")
                ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "Number of plate sections")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--charge", cfg.charge, "Step index M")->required();
    };

    CLI::App* fringe = app.add_subcommand("fringe", "Overlap probability vs rotation angle");
    add_state_opts(fringe);
    fringe->add_option("--points", cfg.points, "Scan points on [0, 2*pi)")
        ->check(CLI::Range(2, 10000000));
    fringe->add_option("--construction", cfg.construction, "State construction route")
        ->transform(CLI::CheckedTransformer(construction_map, CLI::ignore_case));
    add_common(fringe);

    CLI::App* bell = app.add_subcommand("bell", "CHSH correlations and Bell parameter");
    add_state_opts(bell);
    bell->add_option("--alpha-s", cfg.alpha_s, "Signal analyzer angle");
    bell->add_option("--alpha-s-prime", cfg.alpha_s_prime, "Alternate signal angle");
    bell->add_option("--alpha-i", cfg.alpha_i, "Idler analyzer angle");
    bell->add_option("--alpha-i-prime", cfg.alpha_i_prime, "Alternate idler angle");
    bell->add_option("--t-perp", cfg.t_perp, "Orthogonal pair index (1..n)");
    bell->add_flag("--degrees", cfg.degrees, "Interpret angle flags in degrees");
    add_common(bell, false);

    CLI::App* decompose = app.add_subcommand("decompose", "Integer-OAM mode spectrum");
    add_state_opts(decompose);
    decompose->add_option("--alpha", cfg.alpha, "Dislocation angle (radians)");
    decompose->add_option("--range", cfg.range, "Mode range MIN:MAX (default -50:50)");
    decompose->add_option("--construction", cfg.construction, "State construction route")
        ->transform(CLI::CheckedTransformer(construction_map, CLI::ignore_case));
    decompose->add_flag("--degrees", cfg.degrees, "Interpret --alpha in degrees");
    add_common(decompose);

    CLI::App* symmetry = app.add_subcommand("symmetry", "n-fold symmetry residual");
    add_state_opts(symmetry);
    symmetry->add_option("--alpha", cfg.alpha, "Dislocation angle (radians)");
    symmetry->add_option("--construction", cfg.construction, "State construction route")
        ->transform(CLI::CheckedTransformer(construction_map, CLI::ignore_case));
    symmetry->add_flag("--degrees", cfg.degrees, "Interpret --alpha in degrees");
    add_common(symmetry);

    CLI::App* verify = app.add_subcommand("verify", "Closed forms vs exact-integration oracle");
    verify->add_option("--tolerance", cfg.tolerance, "Failure threshold on |closed - oracle|");
    verify->add_option("--max-cases", cfg.max_cases, "Cap on recorded failing cases");
    verify->add_flag("--inject-fault", cfg.inject_fault)->group("");  // self-test hook
    add_common(verify, false);

    CLI::App* sample = app.add_subcommand("sample", "Shot-noise sampled coincidence fringe");
    add_state_opts(sample);
    sample->add_option("--points", cfg.points, "Scan points on [0, 2*pi)")
        ->check(CLI::Range(2, 10000000));
    sample->add_option("--shots", cfg.shots, "Trials per angle");
    sample->add_option("--seed", cfg.seed, "Sampler seed");
    add_common(sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (app.got_subcommand(fringe)) return run_fringe(cfg);
        if (app.got_subcommand(bell)) return run_bell(cfg);
        if (app.got_subcommand(decompose)) return run_decompose(cfg);
        if (app.got_subcommand(symmetry)) return run_symmetry(cfg);
        if (app.got_subcommand(verify)) return run_verify(cfg);
        if (app.got_subcommand(sample)) return run_sample(cfg);
    } catch (const sppn::DegenerateSuperposition& e) {
        std::cerr << "error: " << e.what() << "; use --construction sector\n";
        return exit_degenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

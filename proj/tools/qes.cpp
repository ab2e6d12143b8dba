// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Command-line front end. One subcommand per task:
//
//   solve     run the algebraic pipeline, write a result document
//   verify    cross-check algebraic levels against the numeric oracle
//   classify  report the algebraic lines through a pair of labels
//   sample    write plot-ready samples of the potential and its states
//
// Exit codes: 0 on success, 1 on usage errors, 2 when the requested
// computation is rejected (critical labels, failed verification, root
// isolation trouble and similar).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qes.hpp"

namespace {

struct CliConfig {
    std::string family = "associated-lame";
    std::string m_text, l_text, k2_text;
    int n = 0;
    double root_tol = 1e-12;
    double residual_tol = 1e-8;
    double oracle_tol = 1e-3;
    int grid_n = 2048;
    int samples = 512;
    std::string out_path;
    std::string format = "json";
    bool no_verify = false;
};

struct BuiltSpec {
    qes::PotentialSpec spec;
    std::vector<std::string> warnings;
};

// Modulus text is kept exact when it reads as a ratio; a decimal is
// honored bit for bit but drops the exact layer, so downstream output
// carries no certified rationals and says why.
BuiltSpec build_spec(const CliConfig& cfg) {
    const auto parsed_k2 = qes::parse_rational(cfg.k2_text);
    std::vector<std::string> warnings;
    std::optional<qes::Modulus> mod;
    if (parsed_k2.was_decimal) {
        mod.emplace(qes::to_double(parsed_k2.value));
        warnings.push_back("modulus supplied as a decimal; results are floating point only");
    } else {
        mod.emplace(parsed_k2.value);
    }
    if (cfg.family == "associated-lame") {
        if (cfg.m_text.empty() || cfg.l_text.empty())
            throw qes::Error("the two-parameter family needs --m and --l");
        const qes::Rational m = qes::parse_rational(cfg.m_text).value;
        const qes::Rational l = qes::parse_rational(cfg.l_text).value;
        return {qes::associated_lame_spec(m, l, *mod), std::move(warnings)};
    }
    if (cfg.family == "tan") return {qes::tan_spec(cfg.n, *mod), std::move(warnings)};
    return {qes::cot_spec(cfg.n, *mod), std::move(warnings)};
}

qes::RunConfig run_config(const CliConfig& cfg) {
    qes::RunConfig rc;
    rc.root_tol = cfg.root_tol;
    rc.residual_tol = cfg.residual_tol;
    rc.oracle_tol = cfg.oracle_tol;
    rc.grid_n = cfg.grid_n;
    return rc;
}

// Window on which states are realized, sampled and residual-checked.
// The singular families stay two percent clear of their walls.
void state_window(const qes::PotentialSpec& spec, double& a, double& b) {
    const double K = spec.modulus.K();
    switch (spec.family) {
    case qes::Family::AssociatedLame: {
        const bool doubled = !qes::is_integer(spec.m) || !qes::is_integer(spec.l);
        a = 0.0;
        b = (doubled ? 4.0 : 2.0) * K;
        break;
    }
    case qes::Family::Tan:
        a = -0.98 * K;
        b = 0.98 * K;
        break;
    case qes::Family::Cot:
        a = 0.04 * K;
        b = 1.96 * K;
        break;
    }
}

struct VerifyOutcome {
    qes::VerificationReport report;
    std::vector<qes::NumericLevel> numeric;
    double max_residual = 0.0;
};

// Self-check of a solved spectrum: realize every state, measure its
// wave-equation residual on a fine grid, and match every algebraic level
// to the nearest level of the discretized operator.
VerifyOutcome verify_spectrum(const qes::PotentialSpec& spec, qes::BandEdgeSpectrum& spectrum,
                              const CliConfig& cfg) {
    VerifyOutcome out;
    const auto states = qes::realize_band_states(spec, spectrum);

    double a = 0.0, b = 0.0;
    state_window(spec, a, b);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const double energy = spectrum.energies[i].value;
        for (const auto& f : states[i].states) {
            const auto grid =
                qes::sample_function([&f](double x) { return f(x); }, a, b, 4097);
            const double r = qes::residual_norm(spec, energy, grid);
            out.report.residuals.push_back(r);
            out.max_residual = std::max(out.max_residual, r);
        }
    }

    int count = std::max<int>(8, 2 * static_cast<int>(spectrum.energies.size()) + 4);
    const double top = spectrum.energies.back().value;
    auto numeric = qes::band_edges_for_spec(spec, count, cfg.grid_n);
    while (numeric.back().value < top && count < 128) {
        count *= 2;
        numeric = qes::band_edges_for_spec(spec, count, cfg.grid_n);
    }
    out.report.oracle_levels.reserve(numeric.size());
    for (const auto& lvl : numeric) out.report.oracle_levels.push_back(lvl.value);
    for (const auto& level : spectrum.energies) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& lvl : numeric) best = std::min(best, std::abs(lvl.value - level.value));
        out.report.max_mismatch = std::max(out.report.max_mismatch, best);
    }
    out.numeric = std::move(numeric);
    return out;
}

// Temp-and-rename write so readers never observe a partial file.
void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw qes::Error("cannot open '" + tmp + "' for writing");
    const bool ok = std::fwrite(content.data(), 1, content.size(), f) == content.size();
    const bool closed = std::fclose(f) == 0;
    if (!ok || !closed) {
        std::remove(tmp.c_str());
        throw qes::Error("short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw qes::Error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

void emit(const CliConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty())
        std::cout << content;
    else
        write_atomic(cfg.out_path, content);
}

std::string sample_document(const qes::PotentialSpec& spec, qes::BandEdgeSpectrum& spectrum,
                            const CliConfig& cfg) {
    const auto states = qes::realize_band_states(spec, spectrum);
    double a = 0.0, b = 0.0;
    state_window(spec, a, b);
    std::vector<std::function<double(double)>> fns;
    std::vector<double> labels;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (const auto& f : states[i].states) {
            fns.push_back([f](double x) { return f(x); });
            labels.push_back(spectrum.energies[i].value);
        }
    return qes::sample_csv(spec, fns, labels, a, b, cfg.samples);
}

int run_solve(const CliConfig& cfg) {
    auto built = build_spec(cfg);
    auto spectrum = qes::solve_spec(built.spec, run_config(cfg));

    std::optional<qes::VerificationReport> report;
    if (!cfg.no_verify) {
        const auto outcome = verify_spectrum(built.spec, spectrum, cfg);
        report = outcome.report;
        if (outcome.max_residual > cfg.oracle_tol ||
            outcome.report.max_mismatch > cfg.oracle_tol) {
            std::fprintf(stderr,
                         "error: verification failed: residual %.3g, oracle mismatch %.3g, "
                         "tolerance %.3g\n",
                         outcome.max_residual, outcome.report.max_mismatch, cfg.oracle_tol);
            return 2;
        }
    }

    if (cfg.format == "csv") {
        emit(cfg, sample_document(built.spec, spectrum, cfg));
        return 0;
    }
    emit(cfg, qes::render_json(qes::solution_document(built.spec, spectrum,
                                                      report ? &*report : nullptr,
                                                      std::move(built.warnings))));
    return 0;
}

int run_verify(const CliConfig& cfg) {
    auto built = build_spec(cfg);
    auto spectrum = qes::solve_spec(built.spec, run_config(cfg));
    const auto outcome = verify_spectrum(built.spec, spectrum, cfg);

    std::size_t state = 0;
    for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
        const auto& level = spectrum.energies[i];
        double best = std::numeric_limits<double>::infinity();
        for (const auto& lvl : outcome.numeric) best = std::min(best, std::abs(lvl.value - level.value));
        for (int d = 0; d < level.degeneracy; ++d, ++state)
            std::printf("level %zu state %d: E = %.12g  residual = %.3g  oracle distance = %.3g\n",
                        i, d, level.value, outcome.report.residuals[state], best);
    }
    std::printf("max residual %.3g, max oracle mismatch %.3g, tolerance %.3g\n",
                outcome.max_residual, outcome.report.max_mismatch, cfg.oracle_tol);
    for (const auto& w : spectrum.warnings) std::printf("warning: %s\n", w.c_str());
    if (outcome.max_residual > cfg.oracle_tol || outcome.report.max_mismatch > cfg.oracle_tol) {
        std::printf("verdict: disagree\n");
        return 2;
    }
    std::printf("verdict: agree\n");
    return 0;
}

int run_classify(const CliConfig& cfg) {
    if (cfg.m_text.empty() || cfg.l_text.empty())
        throw qes::Error("classify needs --m and --l");
    const qes::Rational m = qes::parse_rational(cfg.m_text).value;
    const qes::Rational l = qes::parse_rational(cfg.l_text).value;
    const auto cls = qes::classify(m, l);
    std::printf("labels: m = %s, l = %s\n", qes::to_string(m).c_str(),
                qes::to_string(l).c_str());
    std::printf("canonical: m = %s, l = %s%s\n", qes::to_string(cls.labels.m).c_str(),
                qes::to_string(cls.labels.l).c_str(),
                cls.labels.swapped ? " (labels swapped; spectra agree, states shift by K)" : "");
    if (cls.critical()) {
        std::printf("critical point: no algebraic line passes through these labels\n");
        return 2;
    }
    for (const auto& line : cls.lines) {
        std::string ids;
        for (std::size_t i = 0; i < line.case_ids.size(); ++i) {
            if (i) ids += ", ";
            ids += std::to_string(line.case_ids[i]);
        }
        std::printf("line: case%s {%s}, spin n = %d, %d state%s%s\n",
                    line.case_ids.size() > 1 ? "s" : "", ids.c_str(), line.n, line.n + 1,
                    line.n ? "s" : "", line.case_ids.size() > 1 ? " (doublets)" : "");
    }
    return 0;
}

int run_sample(const CliConfig& cfg) {
    auto built = build_spec(cfg);
    auto spectrum = qes::solve_spec(built.spec, run_config(cfg));
    emit(cfg, sample_document(built.spec, spectrum, cfg));
    return 0;
}

int grid_default() {
    const char* env = std::getenv("QES_SEED_GRID_N");
    if (!env || !*env) return 2048;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 64 || v > (1 << 22))
        throw qes::Error("QES_SEED_GRID_N must be an integer in [64, 4194304]");
    return static_cast<int>(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Band-edge spectra of quasi-exactly solvable elliptic potentials"};
    app.require_subcommand(1);

    CliConfig cfg;
    try {
        cfg.grid_n = grid_default();
    } catch (const qes::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const auto add_family = [&cfg](CLI::App* cmd, bool with_format) {
        cmd->add_option("--family", cfg.family, "potential family")
            ->check(CLI::IsMember({"associated-lame", "tan", "cot"}))
            ->capture_default_str();
        cmd->add_option("--m", cfg.m_text, "first label, rational like 3 or 5/2");
        cmd->add_option("--l", cfg.l_text, "second label, rational like 1 or 3/2");
        cmd->add_option("--n", cfg.n, "degree of the tan or cot family")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--k2", cfg.k2_text,
                        "elliptic modulus squared in (0,1); a ratio like 1/2 stays exact")
            ->required();
        cmd->add_option("--root-tol", cfg.root_tol, "relative root polish tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--residual-tol", cfg.residual_tol,
                        "allowed disagreement between roots and matrix eigenvalues")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--oracle-tol", cfg.oracle_tol,
                        "allowed wave-equation residual and numeric level mismatch")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--grid-n", cfg.grid_n,
                        "base oracle grid (env QES_SEED_GRID_N overrides the default)")
            ->check(CLI::Range(64, 1 << 22))
            ->capture_default_str();
        cmd->add_option("--out", cfg.out_path, "output path (stdout when omitted)");
        if (with_format) {
            cmd->add_option("--format", cfg.format, "output format")
                ->check(CLI::IsMember({"json", "csv"}))
                ->capture_default_str();
            cmd->add_option("--samples", cfg.samples, "sample count for csv output")
                ->check(CLI::Range(2, 1 << 20))
                ->capture_default_str();
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "solve a specification and write the result");
    add_family(solve, true);
    solve->add_flag("--no-verify", cfg.no_verify, "skip the self-verification stage");

    CLI::App* verify = app.add_subcommand("verify", "cross-check the algebraic spectrum");
    add_family(verify, false);

    CLI::App* classify =
        app.add_subcommand("classify", "report the algebraic lines through labels (m, l)");
    classify->add_option("--m", cfg.m_text, "first label")->required();
    classify->add_option("--l", cfg.l_text, "second label")->required();

    CLI::App* sample = app.add_subcommand("sample", "write potential and state samples");
    add_family(sample, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (app.got_subcommand(solve)) return run_solve(cfg);
        if (app.got_subcommand(verify)) return run_verify(cfg);
        if (app.got_subcommand(classify)) return run_classify(cfg);
        return run_sample(cfg);
    } catch (const qes::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

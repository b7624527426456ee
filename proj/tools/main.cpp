#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricv/correlations.hpp"
#include "tricv/fock.hpp"
#include "tricv/sweep.hpp"

namespace {

using namespace tricv;

// Exit codes: 0 success, 1 usage error, 2 numeric failure.
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("TRICV_OUTPUT_DIR"); dir && p.is_relative())
        p = std::filesystem::path(dir) / p;
    return p;
}

/// Runs fn against the chosen sink ("-" means stdout).
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return 0;
    }
    const auto resolved = resolve_output(path);
    std::ofstream out(resolved);
    if (!out) {
        std::cerr << "error: cannot open output path " << resolved << "\n";
        return kExitUsage;
    }
    fn(out);
    return 0;
}

void print_report_text(const TripartiteParams& p, const ChannelParams& ch,
                       const CorrelationReport& rep, std::ostream& out) {
    out << "state: N_A=" << format_number(p.n_a())
        << " N_B=" << format_number(p.n_b) << " N_C=" << format_number(p.n_c)
        << "  channel: N_th=" << format_number(ch.n_th)
        << " tau=" << format_number(ch.tau) << "\n\n";
    out << "single-mode entropies (nats):\n";
    for (Mode m : {Mode::A, Mode::B, Mode::C})
        out << "  S_" << mode_name(m) << " = "
            << format_number(rep.s_single[static_cast<int>(m)]) << "\n";
    static constexpr const char* kUnordered[3] = {"AB", "AC", "BC"};
    out << "two-mode entropies / EoF / min PT eigenvalue:\n";
    for (int u = 0; u < 3; ++u)
        out << "  " << kUnordered[u] << ": S = " << format_number(rep.s_pair[u])
            << "  E = " << format_number(rep.eof[u])
            << "  lambda~_- = " << format_number(rep.lambda_tilde[u])
            << (rep.lambda_tilde[u] < 0.5 - 1e-10 ? "  (entangled)" : "  (separable)")
            << "\n";
    out << "directed discords and balance residuals:\n";
    for (OrderedPair pr : kAllPairs)
        out << "  " << pair_name(pr) << ": D = "
            << format_number(rep.discord_of(pr))
            << "  Delta = " << format_number(rep.delta_of(pr))
            << "  Delta_KW = " << format_number(rep.delta_kw_of(pr)) << "\n";
}

nlohmann::ordered_json report_json(const TripartiteParams& p,
                                   const ChannelParams& ch,
                                   const CorrelationReport& rep) {
    nlohmann::ordered_json j;
    j["n_b"] = p.n_b;
    j["n_c"] = p.n_c;
    j["n_a"] = p.n_a();
    j["n_th"] = ch.n_th;
    j["tau"] = ch.tau;
    for (Mode m : {Mode::A, Mode::B, Mode::C})
        j["s_single"][mode_name(m)] = rep.s_single[static_cast<int>(m)];
    static constexpr const char* kUnordered[3] = {"AB", "AC", "BC"};
    for (int u = 0; u < 3; ++u) {
        j["s_pair"][kUnordered[u]] = rep.s_pair[u];
        j["eof"][kUnordered[u]] = rep.eof[u];
        j["lambda_tilde_minus"][kUnordered[u]] = rep.lambda_tilde[u];
    }
    for (OrderedPair pr : kAllPairs) {
        j["discord"][pair_name(pr)] = rep.discord_of(pr);
        j["delta"][pair_name(pr)] = rep.delta_of(pr);
        j["delta_kw"][pair_name(pr)] = rep.delta_kw_of(pr);
    }
    return j;
}

std::vector<OrderedPair> parse_pairs(const std::string& spec) {
    std::vector<OrderedPair> pairs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) pairs.push_back(pair_from_name(tok));
    if (pairs.empty()) throw std::invalid_argument("empty pair list");
    return pairs;
}

struct Check {
    std::string name;
    bool pass;
};

int cmd_verify(double nb, double nc, int cutoff) {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool pass) {
        checks.push_back({name, pass});
    };

    // Conservation laws over a random parameter grid.
    std::mt19937 rng(20120601);
    std::uniform_real_distribution<double> unif(1e-3, 5.0);
    double worst_a = 0.0, worst_kw = 0.0;
    for (int i = 0; i < 200; ++i) {
        const TripartiteParams p{unif(rng), unif(rng)};
        const CorrelationReport rep = full_report(p);
        for (OrderedPair pr : kAllPairs) {
            worst_a = std::max(worst_a, std::abs(rep.delta_of(pr)));
            worst_kw = std::max(worst_kw, std::abs(rep.delta_kw_of(pr)));
        }
    }
    add("conservation-law residual |Delta| < 1e-9", worst_a < 1e-9);
    add("conservation-law residual |Delta_KW| < 1e-9", worst_kw < 1e-9);

    // Brute-force Fock cross-checks at the requested point.
    const TripartiteParams p{nb, nc};
    if (cutoff <= 0) cutoff = std::max(default_cutoff(p), 20);
    const FockAmplitudes fa = build_amplitudes(p, cutoff);
    add("fock norm deficit < 1e-6", 1.0 - fa.norm_squared() < 1e-6);
    const auto mp = mean_photons(fa);
    add("fock mean photons match (1e-5)",
        std::abs(mp[0] - p.n_a()) < 1e-5 && std::abs(mp[1] - p.n_b) < 1e-5 &&
            std::abs(mp[2] - p.n_c) < 1e-5);
    const CovMat oracle_cm = covariance_from_amplitudes(fa);
    const CovMat analytic_cm = build_cm(p);
    const double cm_dev =
        (oracle_cm.entries() - analytic_cm.entries()).cwiseAbs().maxCoeff();
    add("fock covariance matches analytic blocks (1e-4)", cm_dev < 1e-4);
    bool entropies_ok = true;
    const double ns[3] = {p.n_a(), p.n_b, p.n_c};
    for (Mode m : {Mode::A, Mode::B, Mode::C})
        entropies_ok = entropies_ok &&
            std::abs(reduced_entropy_single(fa, m) -
                     entropy_fn(ns[static_cast<int>(m)] + 0.5)) < 1e-4;
    add("fock reduced entropies match f(N+1/2) (1e-4)", entropies_ok);

    bool all = true;
    for (const Check& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tripartite Gaussian-state correlation toolkit"};
    app.require_subcommand(1);

    double nb = 1.0, nc = 0.5, nth = 0.0, tau = 0.0;
    std::string format = "csv";
    std::string output;
    std::string pairs_spec = "AB,BA,AC,CA,BC,CB";
    int cutoff = 0;

    SweepConfig cfg;

    auto* report = app.add_subcommand(
        "report", "Entropies, discords, EoF and balance residuals at one point");
    report->add_option("--nb", nb, "Mean photon number of mode B");
    report->add_option("--nc", nc, "Mean photon number of mode C");
    report->add_option("--nth", nth, "Channel thermal photon number");
    report->add_option("--tau", tau, "Rescaled channel time");
    report->add_option("--format", format, "text or json")->default_str("text");
    report->add_option("--output", output, "Output path (default stdout)");

    auto add_grid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--nb", cfg.n_b, "Fixed mean photon number of mode B");
        cmd->add_option("--nth", cfg.n_th, "Channel thermal photon number");
        cmd->add_option("--delta-min", cfg.delta_min, "Lower delta = N_B - N_C");
        cmd->add_option("--delta-max", cfg.delta_max, "Upper delta");
        cmd->add_option("--delta-steps", cfg.delta_steps, "Grid points in delta");
        cmd->add_option("--pairs", pairs_spec, "Comma-separated ordered pairs");
        cmd->add_option("--format", format, "csv or json");
        cmd->add_option("--output", output, "Output path (default stdout)");
        cmd->add_option("--jobs", cfg.jobs, "Worker thread count");
    };

    auto* sweep = app.add_subcommand(
        "sweep", "Grid sweep over (delta, tau): residuals and entanglement");
    add_grid_flags(sweep);
    sweep->add_option("--tau-min", cfg.tau_min, "Lower tau");
    sweep->add_option("--tau-max", cfg.tau_max, "Upper tau");
    sweep->add_option("--tau-steps", cfg.tau_steps, "Grid points in tau");

    auto* tausep = app.add_subcommand(
        "tau-sep", "Separability time per delta grid point and pair");
    add_grid_flags(tausep);

    auto* verify = app.add_subcommand(
        "verify", "Run conservation-law and Fock-oracle checks");
    verify->add_option("--nb", nb, "Mean photon number of mode B");
    verify->add_option("--nc", nc, "Mean photon number of mode C");
    verify->add_option("--cutoff", cutoff, "Fock cutoff (0 = automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*report) {
            if (nb < 0 || nc < 0 || nth < 0 || tau < 0) {
                std::cerr << "error: parameters must be nonnegative\n";
                return kExitUsage;
            }
            const TripartiteParams p{nb, nc};
            const ChannelParams ch{nth, tau};
            const CorrelationReport rep = full_report(p, ch);
            return with_output(output, [&](std::ostream& out) {
                if (format == "json")
                    out << report_json(p, ch, rep).dump(2) << '\n';
                else
                    print_report_text(p, ch, rep, out);
            });
        }
        if (*sweep || *tausep) {
            cfg.pairs = parse_pairs(pairs_spec);
            if (format == "json")
                cfg.format = OutputFormat::Json;
            else if (format == "csv")
                cfg.format = OutputFormat::Csv;
            else {
                std::cerr << "error: unknown format '" << format << "'\n";
                return kExitUsage;
            }
            cfg.validate();
            return with_output(output, [&](std::ostream& out) {
                if (*sweep)
                    run_sweep(cfg, out);
                else
                    run_tau_sep(cfg, out);
            });
        }
        if (*verify) return cmd_verify(nb, nc, cutoff);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}

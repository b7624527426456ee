#include "tricv/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace tricv {

namespace {

struct Record {
    double delta;
    double tau;
    OrderedPair pair;
    double discord;
    double eof_kj;
    double s_h;
    double s_j;
    double s_hk;
    double delta_residual;
    double delta_kw_residual;
    double lambda_tilde_minus;
    bool entangled;
    bool has_tau_sep;
    double tau_sep;
    bool tau_sep_never;
};

TripartiteParams params_at(const SweepConfig& cfg, double delta) {
    TripartiteParams p;
    p.n_b = cfg.n_b;
    p.n_c = cfg.n_b - delta;
    if (p.n_c < 0.0 && p.n_c > -1e-12) p.n_c = 0.0; // grid round-off at delta_max
    return p;
}

std::vector<Record> compute_row(const SweepConfig& cfg, int row) {
    const double delta = cfg.delta_at(row);
    const TripartiteParams p = params_at(cfg, delta);
    const CovMat sigma3 = build_cm(p);

    std::array<SeparabilityTime, 3> tau_sep;
    std::array<bool, 3> have_tau_sep{};
    for (OrderedPair pr : cfg.pairs) {
        const int u = unordered_index(pr);
        if (!have_tau_sep[u]) {
            tau_sep[u] = separability_time(p, cfg.n_th, pr);
            have_tau_sep[u] = true;
        }
    }

    std::vector<Record> out;
    out.reserve(cfg.tau_steps * cfg.pairs.size());
    for (int ti = 0; ti < cfg.tau_steps; ++ti) {
        const double tau = cfg.tau_at(ti);
        const CorrelationReport rep =
            full_report(evolve_cm(sigma3, {cfg.n_th, tau}));
        for (OrderedPair pr : cfg.pairs) {
            const Mode h = pair_first(pr);
            const Mode k = pair_second(pr);
            const Mode j = pair_remaining(pr);
            const int u = unordered_index(pr);
            Record r;
            r.delta = delta;
            r.tau = tau;
            r.pair = pr;
            r.discord = rep.discord_of(pr);
            r.eof_kj = rep.eof[unordered_index(k, j)];
            r.s_h = rep.s_single[static_cast<int>(h)];
            r.s_j = rep.s_single[static_cast<int>(j)];
            r.s_hk = rep.s_pair[u];
            r.delta_residual = rep.delta_of(pr);
            r.delta_kw_residual = rep.delta_kw_of(pr);
            r.lambda_tilde_minus = rep.lambda_tilde[u];
            r.entangled = r.lambda_tilde_minus < 0.5 - 1e-10;
            r.has_tau_sep = (ti == 0);
            r.tau_sep = tau_sep[u].tau;
            r.tau_sep_never = tau_sep[u].never_entangled_within_horizon;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<std::vector<Record>> compute_rows(const SweepConfig& cfg) {
    std::vector<std::vector<Record>> rows(cfg.delta_steps);
    const int jobs = std::min(cfg.jobs, cfg.delta_steps);
    if (jobs <= 1) {
        for (int i = 0; i < cfg.delta_steps; ++i) rows[i] = compute_row(cfg, i);
        return rows;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < cfg.delta_steps;
                 i = next.fetch_add(1))
                rows[i] = compute_row(cfg, i);
        });
    for (auto& th : pool) th.join();
    return rows;
}

std::string tau_sep_cell(const SeparabilityTime& ts) {
    return ts.never_entangled_within_horizon ? "never" : format_number(ts.tau);
}

nlohmann::ordered_json config_json(const SweepConfig& cfg) {
    nlohmann::ordered_json j;
    j["n_b"] = cfg.n_b;
    j["n_th"] = cfg.n_th;
    j["delta_min"] = cfg.delta_min;
    j["delta_max"] = cfg.delta_max;
    j["delta_steps"] = cfg.delta_steps;
    j["tau_min"] = cfg.tau_min;
    j["tau_max"] = cfg.tau_max;
    j["tau_steps"] = cfg.tau_steps;
    auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
    for (OrderedPair p : cfg.pairs) pairs.push_back(pair_name(p));
    return j;
}

} // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void SweepConfig::validate() const {
    if (n_b <= 0.0) throw std::invalid_argument("sweep: n_b must be > 0");
    if (n_th < 0.0) throw std::invalid_argument("sweep: n_th must be >= 0");
    if (delta_steps < 1 || tau_steps < 1)
        throw std::invalid_argument("sweep: steps must be >= 1");
    if (delta_min > delta_max || tau_min > tau_max)
        throw std::invalid_argument("sweep: empty grid range");
    if (delta_max > n_b + 1e-12)
        throw std::invalid_argument("sweep: delta_max > n_b would give N_C < 0");
    if (tau_min < 0.0) throw std::invalid_argument("sweep: tau_min must be >= 0");
    if (jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
    if (pairs.empty()) throw std::invalid_argument("sweep: no pairs requested");
}

double SweepConfig::delta_at(int i) const {
    if (delta_steps == 1) return delta_min;
    return delta_min + i * (delta_max - delta_min) / (delta_steps - 1);
}

double SweepConfig::tau_at(int i) const {
    if (tau_steps == 1) return tau_min;
    return tau_min + i * (tau_max - tau_min) / (tau_steps - 1);
}

void run_sweep(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();
    const auto rows = compute_rows(cfg);

    if (cfg.format == OutputFormat::Csv) {
        out << kSweepCsvHeader << '\n';
        for (const auto& row : rows)
            for (const Record& r : row) {
                out << format_number(r.delta) << ',' << format_number(r.tau)
                    << ',' << pair_name(r.pair) << ','
                    << format_number(r.discord) << ','
                    << format_number(r.eof_kj) << ',' << format_number(r.s_h)
                    << ',' << format_number(r.s_j) << ','
                    << format_number(r.s_hk) << ','
                    << format_number(r.delta_residual) << ','
                    << format_number(r.delta_kw_residual) << ','
                    << format_number(r.lambda_tilde_minus) << ','
                    << (r.entangled ? '1' : '0') << ',';
                if (r.has_tau_sep)
                    out << tau_sep_cell({r.tau_sep, r.tau_sep_never});
                out << '\n';
            }
        return;
    }

    nlohmann::ordered_json doc;
    doc["config"] = config_json(cfg);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        for (const Record& r : row) {
            nlohmann::ordered_json rec;
            rec["delta"] = r.delta;
            rec["tau"] = r.tau;
            rec["pair"] = pair_name(r.pair);
            rec["discord"] = r.discord;
            rec["eof_kj"] = r.eof_kj;
            rec["s_h"] = r.s_h;
            rec["s_j"] = r.s_j;
            rec["s_hk"] = r.s_hk;
            rec["delta_residual"] = r.delta_residual;
            rec["delta_kw_residual"] = r.delta_kw_residual;
            rec["lambda_tilde_minus"] = r.lambda_tilde_minus;
            rec["entangled"] = r.entangled;
            if (r.has_tau_sep) {
                if (r.tau_sep_never)
                    rec["tau_sep"] = "never";
                else
                    rec["tau_sep"] = r.tau_sep;
            }
            records.push_back(std::move(rec));
        }
    out << doc.dump(2) << '\n';
}

void run_tau_sep(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();
    std::vector<std::vector<std::pair<OrderedPair, SeparabilityTime>>> rows(
        cfg.delta_steps);
    std::atomic<int> next{0};
    const int jobs = std::min(cfg.jobs, cfg.delta_steps);
    auto work = [&] {
        for (int i = next.fetch_add(1); i < cfg.delta_steps;
             i = next.fetch_add(1)) {
            const TripartiteParams p = params_at(cfg, cfg.delta_at(i));
            for (OrderedPair pr : cfg.pairs)
                rows[i].emplace_back(pr, separability_time(p, cfg.n_th, pr));
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (cfg.format == OutputFormat::Csv) {
        out << kTauSepCsvHeader << '\n';
        for (int i = 0; i < cfg.delta_steps; ++i)
            for (const auto& [pr, ts] : rows[i])
                out << format_number(cfg.delta_at(i)) << ',' << pair_name(pr)
                    << ',' << tau_sep_cell(ts) << '\n';
        return;
    }

    nlohmann::ordered_json doc;
    doc["config"] = config_json(cfg);
    auto& records = doc["records"] = nlohmann::ordered_json::array();
    for (int i = 0; i < cfg.delta_steps; ++i)
        for (const auto& [pr, ts] : rows[i]) {
            nlohmann::ordered_json rec;
            rec["delta"] = cfg.delta_at(i);
            rec["pair"] = pair_name(pr);
            if (ts.never_entangled_within_horizon)
                rec["tau_sep"] = "never";
            else
                rec["tau_sep"] = ts.tau;
            records.push_back(std::move(rec));
        }
    out << doc.dump(2) << '\n';
}

} // namespace tricv

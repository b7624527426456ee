#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tricv/correlations.hpp"

namespace tricv {

enum class OutputFormat { Csv, Json };

/// Grid sweep over delta = N_B - N_C and rescaled time tau, at fixed N_B and
/// channel noise N_th.
struct SweepConfig {
    double n_b = 1.0;
    double n_th = 0.2;
    double delta_min = -3.0;
    double delta_max = 1.0;
    int delta_steps = 161;
    double tau_min = 0.0;
    double tau_max = 3.0;
    int tau_steps = 151;
    std::vector<OrderedPair> pairs{kAllPairs, kAllPairs + 6};
    OutputFormat format = OutputFormat::Csv;
    int jobs = 1;

    void validate() const; ///< throws std::invalid_argument on a bad grid

    double delta_at(int i) const;
    double tau_at(int i) const;
};

inline constexpr const char kSweepCsvHeader[] =
    "delta,tau,pair,discord,eof_kj,s_h,s_j,s_hk,delta_residual,"
    "delta_kw_residual,lambda_tilde_minus,entangled,tau_sep";

inline constexpr const char kTauSepCsvHeader[] = "delta,pair,tau_sep";

/// Writes one record per (delta, tau, pair), row-major with delta outer.
/// Output is deterministic and independent of the job count; tau_sep is
/// emitted once per delta row (on its first tau record), "never" when no
/// crossing exists within the solver horizon.
void run_sweep(const SweepConfig& cfg, std::ostream& out);

/// Writes one (delta, pair, tau_sep) record per grid row.
void run_tau_sep(const SweepConfig& cfg, std::ostream& out);

/// 12-significant-digit, locale-independent number formatting shared by the
/// CSV and JSON writers.
std::string format_number(double v);

} // namespace tricv

#pragma once

// Statistical evaluation of run records: Mann-Whitney U, Vargha-Delaney A
// with effect labels, Pareto utilities, exact hypervolume, and the
// per-benchmark comparison report.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mogi/search.hpp"

namespace mogi {

// Sample median; throws std::invalid_argument on an empty input.
double median(std::vector<double> values);

struct MwuResult {
    double u = 0.0;  // pairs where a beats b, ties half
    double p = 1.0;  // two-sided
    bool improved = false;
};

// Exact rank-assignment enumeration when both sides are below 8 samples,
// normal approximation with tie and continuity corrections otherwise. Both
// samples entirely identical is degenerate: p=1. `improved` means p < alpha
// with median(b) strictly below median(a) (minimization, b the candidate).
// Throws std::invalid_argument below 3 samples per side.
MwuResult mann_whitney_u(const std::vector<double> &a, const std::vector<double> &b,
                         double alpha = 0.05);

struct EffectResult {
    double a_measure = 0.5;
    std::string label = "N";  // N | S | M | L
};

// A = P(x > y) + 0.5 P(x = y) over pairs, computed via midranks; the label
// comes from |A - 0.5| at thresholds 0.06 / 0.14 / 0.21. Throws
// std::invalid_argument on an empty sample.
EffectResult vargha_delaney_a(const std::vector<double> &a,
                              const std::vector<double> &b);

// Maximal mutually non-dominated subset in input order; exact duplicates
// collapse to the first occurrence.
std::vector<std::vector<double>> pareto_front(
    const std::vector<std::vector<double>> &points);

// Exact dominated hypervolume against `reference` by dimension sweep, up to
// three objectives (std::invalid_argument beyond, or on arity mismatch).
// Points with any coordinate beyond the reference are clipped out.
double hv_exact(const std::vector<std::vector<double>> &points,
                const std::vector<double> &reference);

struct HVResult {
    double raw = 0.0;         // volume against the observed-worst reference
    double normalized = 0.0;  // volume with each objective mapped best->0, worst->1
    std::vector<double> reference;
    std::vector<std::pair<double, double>> bounds;  // per objective (best, worst)
};

// Normalization drops objectives whose bounds are degenerate (best == worst,
// no observed spread); with nothing left the normalized volume is 0.
HVResult hypervolume(const std::vector<std::vector<double>> &points,
                     const std::vector<double> &reference,
                     const std::vector<std::pair<double, double>> &bounds);
// Bounds derived from the clipped points themselves (worst = reference).
HVResult hypervolume(const std::vector<std::vector<double>> &points,
                     const std::vector<double> &reference);

struct ObjectiveReport {
    int improved_runs = 0;  // runs whose best patch tests as an improvement
    double baseline_median = 0.0;
    double best_median = 0.0;            // best front-point median over all runs
    double best_improvement_pct = 0.0;   // negative when nothing beats baseline
    double a_measure = 0.5;              // baseline vs that best patch
    std::string effect_label = "N";
};

struct AlgoReport {
    std::string algorithm;
    int runs = 0;
    std::array<ObjectiveReport, 3> objectives;  // steps, memory, net
    std::vector<double> run_hv;  // normalized, one per run, seed order
    double union_hv = 0.0;       // normalized HV of the pooled front
    double wall_min = 0.0;
    double wall_median = 0.0;
    double wall_mean = 0.0;
    double wall_max = 0.0;
};

struct CompareReport {
    std::string benchmark;
    std::vector<double> best;   // per canonical objective, across every run
    std::vector<double> worst;  // the shared normalization reference
    std::vector<AlgoReport> algorithms;  // alphabetical
};

// Records must share one benchmark (std::runtime_error otherwise); baseline
// samples are the original program's repeated measurements. Normalization
// bounds span every record's front plus the baseline, so hypervolumes are
// comparable across algorithms.
CompareReport compare_runs(const std::vector<RunRecord> &records,
                           const std::vector<FitnessVector> &baseline_samples);

std::string compare_report_to_json_text(const CompareReport &report);

}  // namespace mogi

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chasym/asymptotics.hpp"
#include "chasym/grid.hpp"

namespace chasym {

struct RegionRecord {
    std::string label;
    double x_lo = 0.0;
    double x_hi = 0.0;
    int n_points = 0;
    std::optional<double> e_l2;
    std::optional<double> e_sup;
};

struct ComparisonReport {
    double t = 0.0;
    double q0 = 0.0;
    double epsilon = 0.0;
    double C = 0.0;
    std::vector<RegionRecord> regions;

    const RegionRecord* find(const std::string& label) const;
};

// Asymptotic prediction u(x) at the report's t, keyed by region label.
// Labels without an entry are skipped; soliton_i2 and fast_decay default to 0.
using Evaluator = std::function<double(double x)>;
using EvaluatorSet = std::map<std::string, Evaluator>;

struct ComparisonRow {
    double x;
    double u_num;
    double u_asym;
    std::string region;
};

ComparisonReport region_norms(const GridField& u_num, const RegionPartition& partition, const EvaluatorSet& asym,
                              std::vector<ComparisonRow>* rows = nullptr);

// Leading-order predictions for every region. Transition regions need the
// matching Painleve II solutions; nodes whose s falls outside the solution
// interval are left out of that region.
EvaluatorSet make_evaluators(double t, double q0, const PiiSolution* hm, const PiiSolution* as);

enum class DecayKind { L, A };

struct DecayEstimate {
    std::string label;
    double T = 0.0;
    double E_at_T = 0.0;
    double power = 0.0;
    DecayKind kind = DecayKind::L;
};

DecayEstimate decay_power(double E_at_T, double T, DecayKind kind, const std::string& label = "");

// Least-squares slope of -log E against log t.
double rate_of_convergence(const std::vector<std::pair<double, double>>& series);

}  // namespace chasym

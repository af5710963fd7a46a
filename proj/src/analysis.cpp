#include "chasym/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chasym/errors.hpp"

namespace chasym {

const RegionRecord* ComparisonReport::find(const std::string& label) const {
    for (const auto& r : regions)
        if (r.label == label) return &r;
    return nullptr;
}

ComparisonReport region_norms(const GridField& u_num, const RegionPartition& partition, const EvaluatorSet& asym,
                              std::vector<ComparisonRow>* rows) {
    ComparisonReport rep;
    rep.t = partition.t;
    rep.q0 = partition.q0;
    rep.epsilon = partition.epsilon;
    rep.C = partition.C;
    const double h = u_num.h;

    std::vector<std::string> order;
    std::map<std::string, RegionRecord> recs;
    std::map<std::string, double> sq;
    for (const auto& li : partition.intervals()) {
        auto ev = asym.find(li.label);
        Evaluator f;
        if (ev != asym.end()) f = ev->second;
        else if (li.label == "soliton_i2" || li.label == "fast_decay") f = [](double) { return 0.0; };
        else continue;

        if (!recs.count(li.label)) {
            order.push_back(li.label);
            recs[li.label] = RegionRecord{li.label, li.interval.lo, li.interval.hi, 0, std::nullopt, std::nullopt};
            sq[li.label] = 0.0;
        }
        RegionRecord& rec = recs[li.label];
        rec.x_lo = std::min(rec.x_lo, li.interval.lo);
        rec.x_hi = std::max(rec.x_hi, li.interval.hi);
        double sup = rec.e_sup.value_or(0.0);
        double prev_e = 0.0;
        bool have_prev = false;
        for (std::size_t i = 0; i < u_num.size(); ++i) {
            const double x = u_num.x(i);
            if (!li.interval.contains(x)) {
                have_prev = false;
                continue;
            }
            const double ua = f(x);
            if (!std::isfinite(ua)) {
                have_prev = false;
                continue;
            }
            const double e = u_num.values[i] - ua;
            if (rows) rows->push_back({x, u_num.values[i], ua, li.label});
            ++rec.n_points;
            sup = std::max(sup, std::fabs(e));
            if (have_prev) sq[li.label] += 0.5 * h * (prev_e * prev_e + e * e);
            prev_e = e;
            have_prev = true;
        }
        if (rec.n_points > 0) rec.e_sup = sup;
    }
    for (const auto& label : order) {
        RegionRecord rec = recs[label];
        if (rec.n_points > 0) rec.e_l2 = std::sqrt(sq[label]);
        rep.regions.push_back(rec);
    }
    return rep;
}

EvaluatorSet make_evaluators(double t, double q0, const PiiSolution* hm, const PiiSolution* as) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EvaluatorSet set;
    set["soliton_i1"] = [t, q0](double x) { return eval_soliton(x, t, q0); };
    set["soliton_i2"] = [](double) { return 0.0; };
    set["osc1"] = [t, q0](double x) { return eval_region2(x, t, q0); };
    set["osc2"] = [t, q0](double x) { return eval_region3(x, t, q0).value; };
    set["fast_decay"] = [](double) { return 0.0; };
    if (hm) {
        set["trans1"] = [t, q0, hm, nan](double x) {
            const double s = transition1_s(x, t);
            if (s < hm->s_left() || s > hm->s_right()) return nan;
            return eval_transition1(x, t, q0, *hm);
        };
    }
    if (as) {
        const double d1 = delta1_transition(q0);
        set["trans2"] = [t, q0, as, d1, nan](double x) {
            const double s = transition2_s(x, t);
            if (s < as->s_left() || s > as->s_right()) return nan;
            return eval_transition2(x, t, q0, *as, d1);
        };
    }
    return set;
}

DecayEstimate decay_power(double E_at_T, double T, DecayKind kind, const std::string& label) {
    if (!(E_at_T > 0.0)) throw DomainError("decay_power: E must be positive");
    if (!(T > 1.0)) throw DomainError("decay_power: T must exceed 1");
    return {label, T, E_at_T, -std::log(E_at_T) / std::log(T), kind};
}

double rate_of_convergence(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 3) throw DomainError("rate_of_convergence: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double prev_t = -INFINITY;
    for (const auto& [t, e] : series) {
        if (!(t > 0.0) || !(e > 0.0)) throw DomainError("rate_of_convergence: t and E must be positive");
        if (!(t > prev_t)) throw DomainError("rate_of_convergence: t must increase");
        prev_t = t;
        const double x = std::log(t), y = -std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(series.size());
    const double den = n * sxx - sx * sx;
    if (!(std::fabs(den) > 0.0)) throw DomainError("rate_of_convergence: degenerate series");
    return (n * sxy - sx * sy) / den;
}

}  // namespace chasym

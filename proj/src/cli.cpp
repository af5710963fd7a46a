#include "chasym/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "chasym/analysis.hpp"
#include "chasym/asymptotics.hpp"
#include "chasym/ch_solver.hpp"
#include "chasym/errors.hpp"
#include "chasym/io.hpp"
#include "chasym/painleve.hpp"
#include "chasym/spatial_schemes.hpp"

namespace fs = std::filesystem;

namespace chasym {

namespace {

std::string fmt3(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string show(const Interval& iv) {
    return std::string(iv.lo_closed ? "[" : "(") + fmt3(iv.lo) + ", " + fmt3(iv.hi) + (iv.hi_closed ? "]" : ")");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_simulate(const std::string& config_path, const std::string& out_override, bool progress, std::ostream& out,
                 std::ostream& err) {
    RunConfigFile rc = load_config(config_path);
    const std::string dir = out_override.empty() ? rc.output_dir : out_override;
    fs::create_directories(dir);
    std::vector<ManifestEntry> entries;
    auto on_snap = [&](const Snapshot& s) {
        const std::string name = snapshot_filename(s.t);
        write_snapshot_csv(s, (fs::path(dir) / name).string());
        entries.push_back({s.t, name, s.H1, s.Hm1, s.mass});
        out << "snapshot t=" << s.t << " H1=" << s.H1 << " Hm1=" << s.Hm1 << " mass=" << s.mass << "\n";
    };
    double next_report = 0.0;
    auto on_step = [&](double t, const StepStats& st) {
        if (progress && t >= next_report) {
            err << "t=" << t << " picard=" << st.iterations << "\n";
            next_report = t + 1.0;
        }
    };
    const RunResult res = run(rc.sim, on_snap, on_step);
    std::ofstream(fs::path(dir) / "manifest.json") << manifest_to_json(rc.sim, entries, res.completed, res.failure);
    if (!res.completed) {
        err << "simulate: run stopped early: " << res.failure << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_regions(double t, double eps, double C, double q0, std::ostream& out) {
    const RegionPartition p = classify(t, eps, C, q0);
    out << "soliton_i1 = " << show(p.soliton_i1) << "\n";
    out << "soliton_i2 = " << show(p.soliton_i2[0]) << " U " << show(p.soliton_i2[1]) << "\n";
    out << "osc1 = " << show(p.osc1) << "\n";
    out << "osc2 = " << show(p.osc2) << "\n";
    out << "fast_decay = " << show(p.fast_decay) << "\n";
    out << "trans1 = " << show(p.trans1) << "\n";
    out << "trans2 = " << show(p.trans2) << "\n";
    return kExitOk;
}

double time_from_name(const std::string& path) {
    static const std::regex re(R"(ch_t([0-9]+(\.[0-9]+)?)\.csv$)");
    std::smatch m;
    const std::string name = fs::path(path).filename().string();
    if (!std::regex_search(name, m, re)) throw ConfigError("compare: --t not given and not encoded in file name");
    return std::stod(m[1].str());
}

int cmd_compare(const std::string& snapshot, double t, double q0, double eps, double C, int pii_n,
                const std::string& json_out, const std::string& csv_dir, std::ostream& out) {
    const GridField u = read_snapshot_csv(snapshot);
    if (!(t > 0.0)) t = time_from_name(snapshot);
    const RegionPartition part = classify(t, eps, C, q0);
    const PiiSolution hm = solve_bvp(PiiFamily::hastings_mcleod, 1.0, -12.0, 8.0, pii_n);
    const PiiSolution as = solve_bvp(PiiFamily::ablowitz_segur, transition2_r(q0), -12.0, 8.0, pii_n);
    std::vector<ComparisonRow> rows;
    const ComparisonReport rep = region_norms(u, part, make_evaluators(t, q0, &hm, &as), &rows);
    const std::string js = report_to_json(rep);
    if (json_out.empty()) out << js;
    else std::ofstream(json_out) << js;
    if (!csv_dir.empty()) {
        fs::create_directories(csv_dir);
        std::map<std::string, std::vector<ComparisonRow>> by;
        for (const auto& r : rows) by[r.region].push_back(r);
        for (const auto& [label, rs] : by) write_rows_csv(rs, (fs::path(csv_dir) / (label + ".csv")).string());
    }
    return kExitOk;
}

int cmd_painleve(const std::string& family, double r, double q0, double sL, double sR, int n, const std::string& path,
                 std::ostream& out) {
    const PiiFamily fam = pii_family_from_string(family);
    if (fam == PiiFamily::ablowitz_segur && std::isnan(r)) r = transition2_r(q0);
    if (fam == PiiFamily::hastings_mcleod) r = 1.0;
    const PiiSolution sol = solve_bvp(fam, r, sL, sR, n);
    if (path.empty()) {
        out << "s,v,vp\n";
        out.precision(17);
        for (std::size_t i = 0; i < sol.v.size(); ++i) out << sol.s_grid[i] << ',' << sol.v[i] << ',' << sol.v_prime[i] << '\n';
    } else {
        write_pii_csv(sol, path);
    }
    return kExitOk;
}

int cmd_wavenumber(int n, const std::string& path, std::ostream& out) {
    std::ostringstream ss;
    ss << "alpha_h,re_alpha_prime_h,im_alpha_prime_h\n";
    char buf[96];
    for (int k = 0; k <= n; ++k) {
        const double ah = k == n ? std::numbers::pi : std::numbers::pi * k / n;
        const WavenumberPoint w = modified_wavenumber(ah);
        const double re = k == 0 ? 0.0 : w.alpha_prime_h.real(), im = k == 0 ? 0.0 : w.alpha_prime_h.imag();
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", ah, re + 0.0, im + 0.0);
        ss << buf;
    }
    if (path.empty()) out << ss.str();
    else std::ofstream(path) << ss.str();
    return kExitOk;
}

int cmd_decay(const std::vector<std::string>& files, const std::string& norm, std::ostream& out) {
    std::vector<ComparisonReport> reps;
    for (const auto& f : files) reps.push_back(report_from_json(read_file(f)));
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    const struct {
        const char* label;
        DecayKind kind;
    } sectors[] = {{"soliton_i1", DecayKind::L}, {"osc1", DecayKind::A}, {"osc2", DecayKind::A}, {"fast_decay", DecayKind::L}};
    out << "region,kind,T,E,power,roc\n";
    for (const auto& sct : sectors) {
        std::vector<std::pair<double, double>> series;
        for (const auto& r : reps) {
            const RegionRecord* rec = r.find(sct.label);
            if (!rec) continue;
            const auto& e = norm == "l2" ? rec->e_l2 : rec->e_sup;
            if (e && *e > 0.0) series.emplace_back(r.t, *e);
        }
        if (series.empty()) continue;
        const auto [T, E] = series.back();
        std::string power = "nan", roc = "nan";
        if (T > 1.0) power = std::to_string(decay_power(E, T, sct.kind, sct.label).power);
        if (series.size() >= 3) roc = std::to_string(rate_of_convergence(series));
        out << sct.label << ',' << (sct.kind == DecayKind::L ? 'L' : 'A') << ',' << T << ',' << E << ',' << power << ','
            << roc << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Camassa-Holm long-time asymptotics toolkit"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "run the solver from a config file");
    std::string config_path, out_dir;
    bool progress = false;
    sim->add_option("--config", config_path, "key = value config file")->required();
    sim->add_option("--out", out_dir, "output directory (overrides output_dir)");
    sim->add_flag("--progress", progress, "report progress on stderr");

    auto* reg = app.add_subcommand("regions", "print the region partition");
    double rt = 0, reps = 0.175, rC = 0.175, rq0 = 0.5;
    reg->add_option("--t", rt)->required();
    reg->add_option("--eps", reps);
    reg->add_option("--C", rC);
    reg->add_option("--q0", rq0);

    auto* cmp = app.add_subcommand("compare", "compare a snapshot against the asymptotic forms");
    std::string snap, json_out, csv_dir;
    double ct = 0, cq0 = 0.5, ceps = 0.175, cC = 0.175;
    int pii_n = 2001;
    cmp->add_option("--snapshot", snap)->required();
    cmp->add_option("--t", ct, "snapshot time (default: from file name)");
    cmp->add_option("--q0", cq0);
    cmp->add_option("--eps", ceps);
    cmp->add_option("--C", cC);
    cmp->add_option("--pii-n", pii_n);
    cmp->add_option("--json", json_out, "report path (default stdout)");
    cmp->add_option("--csv-dir", csv_dir, "per-region x,u_num,u_asym,region files");

    auto* pii = app.add_subcommand("painleve", "solve a Painleve II boundary value problem");
    std::string family = "hm", pii_out;
    double pr = NAN, pq0 = 0.5, sL = -12.0, sR = 8.0;
    int pn = 2001;
    pii->add_option("--family", family, "hm or as");
    pii->add_option("--r", pr, "Stokes parameter for the as family (default from q0)");
    pii->add_option("--q0", pq0);
    pii->add_option("--sL", sL);
    pii->add_option("--sR", sR);
    pii->add_option("--n", pn);
    pii->add_option("--out", pii_out);

    auto* wn = app.add_subcommand("wavenumber", "modified wavenumber of the upwind scheme");
    int wn_n = 256;
    std::string wn_out;
    wn->add_option("--n", wn_n);
    wn->add_option("--out", wn_out);

    auto* dec = app.add_subcommand("decay", "decay powers and rates from comparison reports");
    std::vector<std::string> report_files;
    std::string norm = "sup";
    dec->add_option("reports", report_files)->required();
    dec->add_option("--norm", norm)->check(CLI::IsMember({"sup", "l2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*sim) return cmd_simulate(config_path, out_dir, progress, out, err);
        if (*reg) return cmd_regions(rt, reps, rC, rq0, out);
        if (*cmp) return cmd_compare(snap, ct, cq0, ceps, cC, pii_n, json_out, csv_dir, out);
        if (*pii) return cmd_painleve(family, pr, pq0, sL, sR, pn, pii_out, out);
        if (*wn) return cmd_wavenumber(wn_n, wn_out, out);
        if (*dec) return cmd_decay(report_files, norm, out);
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace chasym

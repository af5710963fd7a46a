#include "chasym/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chasym {

using ojson = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || p != end) throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: '" + key + "' expects true/false, got '" + v + "'");
}

ojson num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round15(v);
}

}  // namespace

double round15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

RunConfigFile parse_config_text(const std::string& text) {
    RunConfigFile rc;
    auto& c = rc.sim;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_t_end = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "q0") c.q0 = to_double(key, val);
        else if (key == "x_min") c.x_min = to_double(key, val);
        else if (key == "x_max") c.x_max = to_double(key, val);
        else if (key == "h") c.h = to_double(key, val);
        else if (key == "dt") c.dt = to_double(key, val);
        else if (key == "t_end") {
            c.t_end = to_double(key, val);
            have_t_end = true;
        } else if (key == "snapshot_times") {
            c.snapshot_times.clear();
            std::istringstream items(val);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) c.snapshot_times.push_back(to_double(key, item));
            }
        } else if (key == "helmholtz_rhs_mode") {
            try {
                c.helmholtz_rhs_mode = helmholtz_mode_from_string(val);
            } catch (const std::exception& e) {
                throw ConfigError(std::string("config: ") + e.what());
            }
        } else if (key == "fp_rel_tol") c.control.fp_rel_tol = to_double(key, val);
        else if (key == "fp_max_iters") c.control.fp_max_iters = static_cast<int>(to_double(key, val));
        else if (key == "full_region") c.full_region = to_bool(key, val);
        else if (key == "output_dir") rc.output_dir = val;
        else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!have_t_end) throw ConfigError("config: t_end is required");
    if (c.full_region) apply_domain_rule(c);
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return rc;
}

RunConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string snapshot_filename(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "ch_t%.3f.csv", t);
    return buf;
}

void write_snapshot_csv(const Snapshot& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "x,u\n";
    char buf[96];
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.grid.x(i), s.grid.values[i]);
        out << buf;
    }
}

GridField read_snapshot_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read snapshot '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || trim(line) != "x,u") throw ConfigError("snapshot '" + path + "': missing x,u header");
    std::vector<double> xs, us;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("snapshot '" + path + "': malformed row");
        xs.push_back(to_double("x", trim(line.substr(0, comma))));
        us.push_back(to_double("u", trim(line.substr(comma + 1))));
    }
    if (xs.size() < 5) throw ConfigError("snapshot '" + path + "': fewer than 5 rows");
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::fabs(xs[i] - xs[i - 1] - h) > 1e-6 * h) throw ConfigError("snapshot '" + path + "': grid not uniform");
    return GridField(xs.front(), h, std::move(us));
}

std::string report_to_json(const ComparisonReport& r) {
    ojson j;
    j["t"] = num(r.t);
    j["q0"] = num(r.q0);
    j["epsilon"] = num(r.epsilon);
    j["C"] = num(r.C);
    ojson regions = ojson::array();
    for (const auto& rec : r.regions) {
        ojson o;
        o["label"] = rec.label;
        o["x_lo"] = num(rec.x_lo);
        o["x_hi"] = num(rec.x_hi);
        o["n_points"] = rec.n_points;
        o["e_l2"] = rec.e_l2 ? num(*rec.e_l2) : ojson(nullptr);
        o["e_sup"] = rec.e_sup ? num(*rec.e_sup) : ojson(nullptr);
        regions.push_back(o);
    }
    j["regions"] = regions;
    return j.dump(2) + "\n";
}

ComparisonReport report_from_json(const std::string& text) {
    ComparisonReport r;
    try {
        const ojson j = ojson::parse(text);
        r.t = j.at("t").get<double>();
        r.q0 = j.at("q0").get<double>();
        r.epsilon = j.at("epsilon").get<double>();
        r.C = j.at("C").get<double>();
        for (const auto& o : j.at("regions")) {
            RegionRecord rec;
            rec.label = o.at("label").get<std::string>();
            rec.x_lo = o.at("x_lo").is_null() ? -INFINITY : o.at("x_lo").get<double>();
            rec.x_hi = o.at("x_hi").is_null() ? INFINITY : o.at("x_hi").get<double>();
            rec.n_points = o.at("n_points").get<int>();
            if (!o.at("e_l2").is_null()) rec.e_l2 = o.at("e_l2").get<double>();
            if (!o.at("e_sup").is_null()) rec.e_sup = o.at("e_sup").get<double>();
            r.regions.push_back(rec);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("report JSON: ") + e.what());
    }
    return r;
}

void write_rows_csv(const std::vector<ComparisonRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "x,u_num,u_asym,region\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", r.x, r.u_num, r.u_asym);
        out << buf << r.region << '\n';
    }
}

std::string manifest_to_json(const SimulationConfig& cfg, const std::vector<ManifestEntry>& entries, bool completed,
                             const std::string& failure) {
    ojson c;
    c["q0"] = num(cfg.q0);
    c["x_min"] = num(cfg.x_min);
    c["x_max"] = num(cfg.x_max);
    c["h"] = num(cfg.h);
    c["dt"] = num(cfg.dt);
    c["t_end"] = num(cfg.t_end);
    ojson times = ojson::array();
    for (double t : cfg.snapshot_times) times.push_back(num(t));
    c["snapshot_times"] = times;
    c["helmholtz_rhs_mode"] = to_string(cfg.helmholtz_rhs_mode);
    c["fp_rel_tol"] = num(cfg.control.fp_rel_tol);
    c["fp_max_iters"] = cfg.control.fp_max_iters;
    c["full_region"] = cfg.full_region;

    ojson j;
    j["config"] = c;
    j["completed"] = completed;
    j["failure"] = failure.empty() ? ojson(nullptr) : ojson(failure);
    ojson snaps = ojson::array();
    for (const auto& e : entries) {
        ojson o;
        o["t"] = num(e.t);
        o["file"] = e.file;
        o["H1"] = num(e.H1);
        o["Hm1"] = num(e.Hm1);
        o["mass"] = num(e.mass);
        snaps.push_back(o);
    }
    j["snapshots"] = snaps;
    return j.dump(2) + "\n";
}

}  // namespace chasym

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chasym/analysis.hpp"
#include "chasym/asymptotics.hpp"
#include "chasym/ch_solver.hpp"
#include "chasym/errors.hpp"
#include "chasym/initial_data.hpp"
#include "chasym/painleve.hpp"
#include "chasym/spatial_schemes.hpp"
#include "chasym/special_functions.hpp"

namespace py = pybind11;
using namespace chasym;

namespace {

py::dict interval_dict(const Interval& iv) {
    py::dict d;
    d["lo"] = iv.lo;
    d["hi"] = iv.hi;
    d["lo_closed"] = iv.lo_closed;
    d["hi_closed"] = iv.hi_closed;
    return d;
}

py::dict snapshot_dict(const Snapshot& s) {
    py::dict d;
    d["t"] = s.t;
    d["x0"] = s.grid.x0;
    d["h"] = s.grid.h;
    d["u"] = s.grid.values;
    d["H1"] = s.H1;
    d["Hm1"] = s.Hm1;
    d["mass"] = s.mass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_chasym, m) {
    m.doc() = "Camassa-Holm solver and long-time asymptotics";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    m.def("u_initial", [](double x, double q0) { return u_initial(x, make_profile(q0)); }, py::arg("x"),
          py::arg("q0") = 0.5);
    m.def("airy_ai", [](double s) {
        const AiryValue a = airy_ai(s);
        return py::make_tuple(a.value, a.derivative);
    });

    m.def("modified_wavenumber", [](double ah) {
        const WavenumberPoint w = modified_wavenumber(ah);
        return py::make_tuple(w.alpha_prime_h, w.alpha_dprime_h_sq);
    });

    m.def(
        "simulate",
        [](double q0, double x_min, double x_max, double h, double dt, double t_end, std::vector<double> times,
           bool full_region) {
            SimulationConfig c;
            c.q0 = q0;
            c.x_min = x_min;
            c.x_max = x_max;
            c.h = h;
            c.dt = dt;
            c.t_end = t_end;
            c.snapshot_times = std::move(times);
            c.full_region = full_region;
            if (full_region) apply_domain_rule(c);
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run(c);
            }
            py::list snaps;
            for (const auto& s : r.snapshots) snaps.append(snapshot_dict(s));
            py::dict out;
            out["snapshots"] = snaps;
            out["completed"] = r.completed;
            out["t_reached"] = r.t_reached;
            out["failure"] = r.failure;
            return out;
        },
        py::arg("q0") = 0.5, py::arg("x_min") = -60.0, py::arg("x_max") = 160.0, py::arg("h") = 0.05,
        py::arg("dt") = 0.01, py::arg("t_end") = 1.0, py::arg("snapshot_times") = std::vector<double>{},
        py::arg("full_region") = false);

    m.def("classify", [](double t, double eps, double C, double q0) {
        const RegionPartition p = classify(t, eps, C, q0);
        py::dict d;
        for (const auto& li : p.intervals()) d[py::str(li.label)] = interval_dict(li.interval);
        return d;
    }, py::arg("t"), py::arg("epsilon") = 0.175, py::arg("C") = 0.175, py::arg("q0") = 0.5);

    m.def("eval_soliton", &eval_soliton, py::arg("x"), py::arg("t"), py::arg("q0") = 0.5);
    m.def("eval_region2", &eval_region2, py::arg("x"), py::arg("t"), py::arg("q0") = 0.5);
    m.def("eval_region3", [](double x, double t, double q0) { return eval_region3(x, t, q0).value; }, py::arg("x"),
          py::arg("t"), py::arg("q0") = 0.5);
    m.def("phase_delta0", &phase_delta0, py::arg("zeta"), py::arg("q0") = 0.5);
    m.def("delta1_transition", &delta1_transition, py::arg("q0") = 0.5);

    m.def(
        "solve_pii",
        [](const std::string& family, double r, double s_L, double s_R, int n) {
            const PiiSolution sol = solve_bvp(pii_family_from_string(family), r, s_L, s_R, n);
            py::dict d;
            d["s"] = sol.s_grid;
            d["v"] = sol.v;
            d["v_prime"] = sol.v_prime;
            d["residual"] = sol.residual;
            return d;
        },
        py::arg("family") = "hm", py::arg("r") = 1.0, py::arg("s_L") = -12.0, py::arg("s_R") = 8.0,
        py::arg("n") = 2001);

    m.def("decay_power", [](double E, double T, const std::string& kind) {
        return decay_power(E, T, kind == "A" ? DecayKind::A : DecayKind::L).power;
    });
    m.def("rate_of_convergence", &rate_of_convergence);
}

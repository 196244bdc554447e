#include "hyptor/json_io.hpp"
#include "hyptor/moments.hpp"
#include "hyptor/plancherel.hpp"
#include "hyptor/rep_theory.hpp"
#include "hyptor/stationary_phase.hpp"
#include "hyptor/trace_formula.hpp"
#include "hyptor/zeta_torsion.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hyptor;

namespace {

Rational rational_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<long long>());
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::isinstance<py::float_>(obj)) return rational_from_half_integer(obj.cast<double>());
    throw std::invalid_argument("weight entries must be int, float, or \"p/q\" strings");
}

std::vector<Rational> weight_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& item : seq) out.push_back(rational_from_py(item));
    return out;
}

rep::Dimension dim_from_py(int d, const std::string& group) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    return rep::Dimension((d - 1) / 2, group == "Spin" ? rep::GroupKind::Spin
                                                       : rep::GroupKind::SO0);
}

py::list weight_to_py(const std::vector<Rational>& k) {
    py::list out;
    for (const auto& e : k) out.append(to_double(e));
    return out;
}

py::list expansion_to_py(const SmallTimeExpansion& e) {
    py::list out;
    for (const auto& term : e.terms) {
        py::dict d;
        d["beta"] = to_double(term.beta);
        d["c"] = term.c;
        d["log"] = term.has_log;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_hyptor, m) {
    m.doc() = "geometric side of the trace formula for odd-dimensional hyperbolic manifolds";

    // ---- representation data -------------------------------------------
    m.def(
        "rho_vector",
        [](int d) {
            return weight_to_py(rep::rho_vector(dim_from_py(d, "SO0")));
        },
        py::arg("d"));
    m.def(
        "weyl_flip",
        [](const py::sequence& sigma, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return weight_to_py(rep::weyl_flip(rep::MWeight(weight_from_py(sigma), dim)).k);
        },
        py::arg("sigma"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "casimir_sigma",
        [](const py::sequence& sigma, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return to_double(rep::casimir_sigma(rep::MWeight(weight_from_py(sigma), dim), dim));
        },
        py::arg("sigma"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "casimir_tau",
        [](const py::sequence& tau, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return to_double(rep::casimir_tau(rep::GWeight(weight_from_py(tau), dim), dim));
        },
        py::arg("tau"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "branching_multiplicity",
        [](const py::sequence& nu, const py::sequence& sigma, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return rep::branching_multiplicity(rep::KWeight(weight_from_py(nu), dim),
                                               rep::MWeight(weight_from_py(sigma), dim));
        },
        py::arg("nu"), py::arg("sigma"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "branching_sigmas",
        [](const py::sequence& nu, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            py::list out;
            for (const auto& s : rep::branching_sigmas(rep::KWeight(weight_from_py(nu), dim), dim))
                out.append(weight_to_py(s.k));
            return out;
        },
        py::arg("nu"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "dim_weyl_m",
        [](const py::sequence& sigma, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return rep::dim_weyl_m(rep::MWeight(weight_from_py(sigma), dim), dim);
        },
        py::arg("sigma"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "dim_weyl_k",
        [](const py::sequence& nu, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return rep::dim_weyl_k(rep::KWeight(weight_from_py(nu), dim), dim);
        },
        py::arg("nu"), py::arg("d"), py::arg("group") = "SO0");
    m.def(
        "is_theta_invariant",
        [](const py::sequence& tau, int d, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return rep::is_theta_invariant(rep::GWeight(weight_from_py(tau), dim));
        },
        py::arg("tau"), py::arg("d"), py::arg("group") = "SO0");

    // ---- Plancherel -------------------------------------------------------
    py::class_<plancherel::PlancherelPolynomial>(m, "PlancherelPolynomial")
        .def_property_readonly("degree", &plancherel::PlancherelPolynomial::degree)
        .def_property_readonly("coeffs",
                               [](const plancherel::PlancherelPolynomial& p) {
                                   py::list out;
                                   for (size_t k = 0; k < p.even_coeffs.size(); ++k)
                                       out.append(p.coeff(static_cast<int>(k)));
                                   return out;
                               })
        .def("eval", &plancherel::PlancherelPolynomial::eval, py::arg("z"))
        .def("eval_imag", &plancherel::PlancherelPolynomial::eval_imag, py::arg("lam"));
    m.def(
        "build_plancherel",
        [](const py::sequence& sigma, int d, double c_n, const std::string& group) {
            auto dim = dim_from_py(d, group);
            return plancherel::build_plancherel(rep::MWeight(weight_from_py(sigma), dim), dim,
                                                c_n);
        },
        py::arg("sigma"), py::arg("d"), py::arg("c_n") = 1.0, py::arg("group") = "SO0");
    m.def(
        "identity_expansion",
        [](double vol, const py::sequence& sigmas, int d, double c_n, int order,
           const std::string& group) {
            auto dim = dim_from_py(d, group);
            std::vector<std::pair<rep::MWeight, int>> list;
            for (const auto& item : sigmas) {
                auto pair = item.cast<py::sequence>();
                list.push_back({rep::MWeight(weight_from_py(pair[0].cast<py::sequence>()), dim),
                                pair[1].cast<int>()});
            }
            return expansion_to_py(plancherel::identity_expansion(vol, list, dim, c_n, order));
        },
        py::arg("vol"), py::arg("sigmas"), py::arg("d"), py::arg("c_n") = 1.0,
        py::arg("order") = 6, py::arg("group") = "SO0");

    // ---- geometry -----------------------------------------------------------
    m.def("n_matrix",
          [](const Eigen::VectorXd& x) { return geom::n_matrix(x); }, py::arg("x"));
    m.def("hyp_distance",
          [](const Eigen::VectorXd& x) { return geom::hyp_distance(x); }, py::arg("x"));
    m.def("jacobian", &geom::jacobian, py::arg("r"), py::arg("d"));
    m.def("cartan_k", [](const Eigen::MatrixXd& g) { return geom::cartan_k(g); }, py::arg("g"));
    m.def("rotation_angle_cos", &geom::rotation_angle_cos, py::arg("u"));

    // ---- truncated series ----------------------------------------------------
    py::class_<series::TruncatedSeries<double>>(m, "TruncatedSeries")
        .def(py::init<int, int>(), py::arg("m"), py::arg("max_degree"))
        .def_property_readonly("vars", &series::TruncatedSeries<double>::vars)
        .def_property_readonly("max_degree", &series::TruncatedSeries<double>::max_degree)
        .def("set", &series::TruncatedSeries<double>::set, py::arg("alpha"), py::arg("c"))
        .def("coefficient", &series::TruncatedSeries<double>::coefficient, py::arg("alpha"))
        .def("eval", &series::TruncatedSeries<double>::eval, py::arg("x"))
        .def("terms",
             [](const series::TruncatedSeries<double>& s) {
                 py::dict out;
                 for (const auto& [alpha, c] : s.terms()) out[py::tuple(py::cast(alpha))] = c;
                 return out;
             })
        .def("__add__",
             [](const series::TruncatedSeries<double>& a,
                const series::TruncatedSeries<double>& b) { return a + b; })
        .def("__mul__",
             [](const series::TruncatedSeries<double>& a,
                const series::TruncatedSeries<double>& b) { return a * b; })
        .def("scaled", &series::TruncatedSeries<double>::scaled, py::arg("factor"));
    m.def("compose_radial",
          [](const series::TruncatedSeries<double>& u, int m_vars, int max_degree) {
              return series::compose_radial(u, m_vars, max_degree);
          },
          py::arg("u_series"), py::arg("m"), py::arg("max_degree"));
    m.def("r_squared_series", [](int max_degree) {
        return series::to_double_series(geom::r_squared_series(max_degree));
    }, py::arg("max_degree"));

    // ---- moments ---------------------------------------------------------------
    m.def("gauss_moment", &series::gauss_moment, py::arg("alpha"));
    m.def("gauss_log_moment", &series::gauss_log_moment, py::arg("alpha"), py::arg("m"));
    m.def("scaled_log_moment", &series::scaled_log_moment, py::arg("alpha"), py::arg("m"),
          py::arg("lam"));

    // ---- stationary phase ---------------------------------------------------
    py::class_<stphase::LogExpansion>(m, "LogExpansion")
        .def_readonly("m", &stphase::LogExpansion::m)
        .def_property_readonly("entries", [](const stphase::LogExpansion& e) {
            py::list out;
            for (const auto& entry : e.entries)
                out.append(py::make_tuple(entry.k, entry.a, entry.b));
            return out;
        });
    m.def("expand_log_integral", &stphase::expand_log_integral, py::arg("f"), py::arg("g"),
          py::arg("order"));
    m.def("evaluate_expansion", &stphase::evaluate_expansion, py::arg("expansion"),
          py::arg("lam"));
    m.def(
        "quadrature_oracle",
        [](int m_vars, const std::function<double(std::vector<double>)>& f_eval,
           const std::function<double(std::vector<double>)>& g_eval, double lam, double eps) {
            auto q = stphase::quadrature_oracle(
                m_vars, [&f_eval](const std::vector<double>& x) { return f_eval(x); },
                [&g_eval](const std::vector<double>& x) { return g_eval(x); }, lam, eps);
            return py::make_tuple(q.value, q.error_estimate, q.converged);
        },
        py::arg("m"), py::arg("f"), py::arg("g"), py::arg("lam"), py::arg("eps") = 0.5);
    m.def("radial_bump", &stphase::radial_bump, py::arg("rho"), py::arg("eps"));

    // ---- trace formula ---------------------------------------------------------
    m.def("h3_scalar_kernel", &traceform::h3_scalar_kernel, py::arg("r"), py::arg("t"));
    m.def("character_k_d3",
          [](const py::handle& k, double theta) {
              return traceform::character_k_d3(rational_from_py(k), theta);
          },
          py::arg("k"), py::arg("theta"));
    m.def(
        "geometric_side",
        [](const std::string& manifold_json, const py::sequence& nu, double t) {
            auto m_data = io::manifold_from_json(io::json::parse(manifold_json));
            rep::KWeight nu_w(weight_from_py(nu), m_data.dim);
            auto res = traceform::geometric_side(t, m_data, nu_w);
            py::dict out;
            out["I"] = res.identity;
            out["H"] = res.hyperbolic;
            out["T"] = res.parabolic_T;
            out["Tprime"] = res.parabolic_Tprime;
            out["total"] = res.total;
            return out;
        },
        py::arg("manifold_json"), py::arg("nu"), py::arg("t"));
    m.def(
        "geometric_side_expansion",
        [](const std::string& manifold_json, const py::sequence& nu, int order) {
            auto m_data = io::manifold_from_json(io::json::parse(manifold_json));
            rep::KWeight nu_w(weight_from_py(nu), m_data.dim);
            return expansion_to_py(traceform::geometric_side_expansion(m_data, nu_w, order));
        },
        py::arg("manifold_json"), py::arg("nu"), py::arg("order") = 5);
    m.def(
        "tprime_expansion",
        [](const py::sequence& nu, int d, int order, const std::string& group) {
            auto dim = dim_from_py(d, group);
            rep::KWeight nu_w(weight_from_py(nu), dim);
            bool trivial = true;
            for (const auto& e : nu_w.k)
                if (e != 0) trivial = false;
            auto amp = traceform::default_amplitudes(nu_w, dim, std::max(12, 3 * order),
                                                     trivial ? std::max(4, order / 2) : 0);
            auto e = traceform::parabolic_Tprime_expansion(amp, order);
            py::list out;
            for (const auto& entry : e.entries)
                out.append(py::make_tuple(entry.j, entry.c, entry.d));
            return out;
        },
        py::arg("nu"), py::arg("d"), py::arg("order"), py::arg("group") = "SO0");
    m.def(
        "tprime_log_coefficients_exact",
        [](const py::sequence& nu, int d, int order, const std::string& group) {
            auto dim = dim_from_py(d, group);
            auto exact = traceform::tprime_log_coefficients_exact(
                rep::KWeight(weight_from_py(nu), dim), dim, order);
            py::dict out;
            for (const auto& [j, c] : exact) out[py::int_(j)] = rational_to_string(c);
            return out;
        },
        py::arg("nu"), py::arg("d"), py::arg("order"), py::arg("group") = "SO0");

    // ---- zeta and torsion -----------------------------------------------------
    py::register_exception<zeta::NotHolomorphicError>(m, "NotHolomorphicError",
                                                      PyExc_ValueError);
    m.def(
        "regularized_trace_spectral",
        [](const std::string& spectral_json, double t) {
            return zeta::regularized_trace_spectral(
                t, io::spectral_from_json(io::json::parse(spectral_json)));
        },
        py::arg("spectral_json"), py::arg("t"));
    m.def(
        "zeta_values",
        [](const std::function<double(double)>& trace, const py::sequence& expansion, double h,
           double t_min, double t_max, const std::vector<double>& tail_coeffs) {
            SmallTimeExpansion e;
            for (const auto& item : expansion) {
                auto d = item.cast<py::dict>();
                e.add(rational_from_py(d["beta"]), d["c"].cast<double>(),
                      d.contains("log") && d["log"].cast<bool>());
            }
            zeta::ZetaOptions opts;
            opts.t_min = t_min;
            opts.t_max = t_max;
            opts.tail_coeffs = tail_coeffs;
            auto res = zeta::zeta_values(trace, e, h, opts);
            py::dict out;
            out["zeta0"] = res.zeta0;
            out["zetaPrime0"] = res.zeta_prime0;
            out["tail_estimate"] = res.tail_estimate;
            return out;
        },
        py::arg("trace"), py::arg("expansion"), py::arg("h") = 0.0, py::arg("t_min") = 1e-8,
        py::arg("t_max") = 50.0, py::arg("tail_coeffs") = std::vector<double>{});
    m.def("regularized_det", &zeta::regularized_det, py::arg("zeta_prime0"));
    m.def("torsion_assembly", &zeta::torsion_assembly, py::arg("dets"), py::arg("d"));

    m.attr("__version__") = "0.1.0";
}

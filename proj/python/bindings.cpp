#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photodist/entropy.hpp"
#include "photodist/errors.hpp"
#include "photodist/inequality.hpp"
#include "photodist/oracle.hpp"
#include "photodist/photon_dist.hpp"

namespace py = pybind11;
using namespace photodist;

PYBIND11_MODULE(_photodist, m) {
    m.doc() = "Photon-number distributions of Gaussian and deformed states, block entropies";

    static py::exception<Error> error(m, "PhotodistError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            // "code: message", so callers can split on the first colon
            py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<OneModeGaussianState>(m, "GaussianState")
        .def(py::init([](double spp, double sqq, double spq, double q, double p) {
                 return OneModeGaussianState{spp, sqq, spq, q, p};
             }),
             py::arg("sigma_pp") = 0.5, py::arg("sigma_qq") = 0.5, py::arg("sigma_pq") = 0.0,
             py::arg("mean_q") = 0.0, py::arg("mean_p") = 0.0)
        .def_readwrite("sigma_pp", &OneModeGaussianState::sigma_pp)
        .def_readwrite("sigma_qq", &OneModeGaussianState::sigma_qq)
        .def_readwrite("sigma_pq", &OneModeGaussianState::sigma_pq)
        .def_readwrite("mean_q", &OneModeGaussianState::mean_q)
        .def_readwrite("mean_p", &OneModeGaussianState::mean_p)
        .def_static("vacuum", &OneModeGaussianState::vacuum)
        .def_static("thermal", &OneModeGaussianState::thermal, py::arg("n_bar"))
        .def_static("squeezed", &OneModeGaussianState::squeezed, py::arg("r"), py::arg("theta") = 0.0,
                    py::arg("mean_q") = 0.0, py::arg("mean_p") = 0.0)
        .def("__repr__", [](const OneModeGaussianState& s) {
            return "GaussianState(sigma_pp=" + std::to_string(s.sigma_pp) +
                   ", sigma_qq=" + std::to_string(s.sigma_qq) + ", sigma_pq=" + std::to_string(s.sigma_pq) +
                   ", mean_q=" + std::to_string(s.mean_q) + ", mean_p=" + std::to_string(s.mean_p) + ")";
        });

    py::class_<XYTState>(m, "XYTState")
        .def(py::init([](double x, double y, double t) { return XYTState{x, y, t}; }), py::arg("x"),
             py::arg("y"), py::arg("t") = 0.0)
        .def_readwrite("x", &XYTState::x)
        .def_readwrite("y", &XYTState::y)
        .def_readwrite("t", &XYTState::t)
        .def("to_state", &XYTState::to_state);

    py::class_<UncertaintyVerdict>(m, "UncertaintyVerdict")
        .def_readonly("det_sigma", &UncertaintyVerdict::det_sigma)
        .def_readonly("slack", &UncertaintyVerdict::slack)
        .def_readonly("valid", &UncertaintyVerdict::valid);
    m.def("uncertainty_check", &uncertainty_check, py::arg("state"));
    m.def("from_tau", &from_tau, py::arg("tau"), py::arg("y"), py::arg("t") = 0.0);
    m.def("p0", [](const OneModeGaussianState& s) { return p0(s).value; }, py::arg("state"));

    py::enum_<Classification>(m, "Classification")
        .value("probability", Classification::probability)
        .value("signed_real", Classification::signed_real)
        .value("complex", Classification::complex)
        .value("non_normalized", Classification::non_normalized);

    py::class_<PhotonDistribution>(m, "PhotonDistribution")
        .def_readonly("values", &PhotonDistribution::values)
        .def_readonly("truncation", &PhotonDistribution::truncation)
        .def_readonly("tail_bound", &PhotonDistribution::tail_bound)
        .def_readonly("classification", &PhotonDistribution::classification)
        .def("sum", &PhotonDistribution::sum)
        .def("real_values", &PhotonDistribution::real_values)
        .def("__len__", [](const PhotonDistribution& d) { return d.values.size(); });

    py::enum_<TauForm>(m, "TauForm").value("printed", TauForm::printed).value("direct", TauForm::direct);

    const auto n_max = py::arg("n_max") = py::none();
    m.def("pn_hermite", [](const OneModeGaussianState& s, std::optional<int> n) { return pn_hermite(s, n); },
          py::arg("state"), n_max);
    m.def("pn_laguerre", [](const OneModeGaussianState& s, std::optional<int> n) { return pn_laguerre(s, n); },
          py::arg("state"), n_max);
    m.def("pn_centered_xyt", [](const XYTState& s, std::optional<int> n) { return pn_centered_xyt(s, n); },
          py::arg("state"), n_max);
    m.def("pn_violation",
          [](double tau, double y, double t, std::optional<int> n, TauForm f) {
              return pn_violation(tau, y, t, n, f);
          },
          py::arg("tau"), py::arg("y"), py::arg("t") = 0.0, n_max, py::arg("form") = TauForm::printed);
    m.def("mean_photon_xyt", &mean_photon_xyt, py::arg("x"), py::arg("y"));
    m.def("two_mode_p2k", &two_mode_p2k, py::arg("s1"), py::arg("s2"), py::arg("k"));
    m.def("two_mode_distribution",
          [](double s1, double s2, std::optional<int> n) { return two_mode_distribution(s1, s2, n); },
          py::arg("s1"), py::arg("s2"), n_max);

    py::enum_<DeformationKind>(m, "DeformationKind")
        .value("poisson", DeformationKind::poisson)
        .value("f_coherent", DeformationKind::f_coherent)
        .value("q_coherent", DeformationKind::q_coherent)
        .value("squeezed_correlated", DeformationKind::squeezed_correlated)
        .value("squeezed_vacuum", DeformationKind::squeezed_vacuum);

    py::class_<DeformationSpec>(m, "DeformationSpec")
        .def(py::init([](DeformationKind kind, double alpha_mag2, double lambda, double r, double theta,
                         std::vector<double> f_values, double mean_q, double mean_p) {
                 DeformationSpec s;
                 s.kind = kind;
                 s.alpha_mag2 = alpha_mag2;
                 s.lambda = lambda;
                 s.r = r;
                 s.theta = theta;
                 s.f_values = std::move(f_values);
                 s.mean_q = mean_q;
                 s.mean_p = mean_p;
                 return s;
             }),
             py::arg("kind") = DeformationKind::poisson, py::arg("alpha_mag2") = 0.0,
             py::arg("lambda_") = 0.0, py::arg("r") = 0.0, py::arg("theta") = 0.0,
             py::arg("f_values") = std::vector<double>{1.0}, py::arg("mean_q") = 0.0,
             py::arg("mean_p") = 0.0)
        .def_readwrite("kind", &DeformationSpec::kind)
        .def_readwrite("alpha_mag2", &DeformationSpec::alpha_mag2)
        .def_readwrite("lambda_", &DeformationSpec::lambda)
        .def_readwrite("r", &DeformationSpec::r)
        .def_readwrite("theta", &DeformationSpec::theta)
        .def_readwrite("f_values", &DeformationSpec::f_values);
    m.def("deformed_pn", &deformed_pn, py::arg("spec"), py::arg("n"));
    m.def("deformed_distribution",
          [](const DeformationSpec& s, std::optional<int> n) { return deformed_distribution(s, n); },
          py::arg("spec"), n_max);

    py::class_<EntropyReport>(m, "EntropyReport")
        .def_readonly("h_joint", &EntropyReport::h_joint)
        .def_readonly("h_sub1", &EntropyReport::h_sub1)
        .def_readonly("h_sub2", &EntropyReport::h_sub2)
        .def_readonly("information", &EntropyReport::information)
        .def_readonly("subadditive", &EntropyReport::subadditive);
    m.def("block_entropies",
          [](const PhotonDistribution& d, int m) { return block_entropies(d, PartitionScheme{m}); },
          py::arg("dist"), py::arg("m") = 2);
    m.def("block_entropies_of",
          [](const std::vector<double>& p, int m) { return block_entropies(p, PartitionScheme{m}); },
          py::arg("p"), py::arg("m") = 2);
    m.def("poisson_parity_information", &poisson_parity_information, py::arg("x_bar"));

    py::enum_<ComplexReading>(m, "ComplexReading")
        .value("literal", ComplexReading::literal)
        .value("block", ComplexReading::block);
    py::class_<ComplexEntropyReport>(m, "ComplexEntropyReport")
        .def_readonly("h_joint", &ComplexEntropyReport::h_joint)
        .def_readonly("h_sub1", &ComplexEntropyReport::h_sub1)
        .def_readonly("h_sub2", &ComplexEntropyReport::h_sub2)
        .def_readonly("information", &ComplexEntropyReport::information)
        .def_readonly("branch_index", &ComplexEntropyReport::branch_index)
        .def_readonly("reading", &ComplexEntropyReport::reading);
    m.def("complex_information",
          [](const PhotonDistribution& d, int m, int branch, ComplexReading r) {
              return complex_information(d, PartitionScheme{m}, branch, r);
          },
          py::arg("dist"), py::arg("m") = 2, py::arg("branch") = 0,
          py::arg("reading") = ComplexReading::literal);

    py::class_<InequalityReport>(m, "InequalityReport")
        .def_property_readonly("form", [](const InequalityReport& r) { return std::string(to_string(r.form)); })
        .def_readonly("lhs", &InequalityReport::lhs)
        .def_readonly("rhs", &InequalityReport::rhs)
        .def_readonly("normalization", &InequalityReport::normalization)
        .def_readonly("margin", &InequalityReport::margin)
        .def_readonly("holds", &InequalityReport::holds)
        .def_readonly("entropies", &InequalityReport::entropies);
    m.def("hermite_inequality",
          [](const OneModeGaussianState& s, std::optional<int> n) { return hermite_inequality(s, n); },
          py::arg("state"), n_max);
    m.def("q_coherent_inequality",
          [](const DeformationSpec& s, std::optional<int> n) { return q_coherent_inequality(s, n); },
          py::arg("spec"), n_max);

    m.def("run_oracle_suite", [] {
        py::list out;
        for (const auto& v : run_suite(GridConfig::default_grid())) {
            py::dict d;
            d["name"] = v.name;
            d["kind"] = std::string(to_string(v.kind));
            d["expected"] = v.expected;
            d["actual"] = v.actual;
            d["abs_err"] = v.abs_err;
            d["rel_err"] = v.rel_err;
            d["pass"] = v.pass;
            d["note"] = v.note;
            out.append(d);
        }
        return out;
    });
}

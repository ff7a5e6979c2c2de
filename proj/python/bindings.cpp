#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "r11/errors.hpp"
#include "r11/jobs.hpp"
#include "r11/moebius.hpp"
#include "r11/taylor.hpp"
#include "r11/transforms.hpp"
#include "r11/verify.hpp"

namespace py = pybind11;
using namespace r11;

namespace {

QuadratureSpec spec_from(std::size_t n, double t_max, std::optional<std::vector<double>> pv_epsilons) {
    QuadratureSpec q;
    q.n = n;
    q.t_max = t_max;
    if (pv_epsilons) q.pv_epsilons = *pv_epsilons;
    q.validate();
    return q;
}

py::dict result_dict(const TransformResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["normalized"] = r.normalized;
    d["even"] = r.even;
    d["error_estimate"] = r.error_estimate;
    d["pv_epsilon"] = r.pv_epsilon;
    d["pv_error_sequence"] = r.pv_error_sequence;
    d["flags"] = r.flags;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Clifford algebra Cl(1,1), Moebius actions and Cauchy-type transforms";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<LightConeError>(m, "LightConeError", base.ptr());
    py::register_exception<LightConeSingularity>(m, "LightConeSingularity", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotUnimodular>(m, "NotUnimodular", base.ptr());
    py::register_exception<OutOfDomain>(m, "OutOfDomain", base.ptr());
    py::register_exception<DegenerateElement>(m, "DegenerateElement", base.ptr());
    py::register_exception<SingularDenominator>(m, "SingularDenominator", base.ptr());
    py::register_exception<BadRadius>(m, "BadRadius", base.ptr());
    py::register_exception<PVDivergence>(m, "PVDivergence", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<NonInvertible>(m, "NonInvertible", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

    py::class_<Cliff11>(m, "Cliff11")
        .def(py::init<>())
        .def(py::init([](double c0, double c1, double c2, double c12) { return Cliff11{c0, c1, c2, c12}; }),
             py::arg("c0"), py::arg("c1") = 0.0, py::arg("c2") = 0.0, py::arg("c12") = 0.0)
        .def_readwrite("c0", &Cliff11::c0)
        .def_readwrite("c1", &Cliff11::c1)
        .def_readwrite("c2", &Cliff11::c2)
        .def_readwrite("c12", &Cliff11::c12)
        .def_static("e1", &Cliff11::e1)
        .def_static("e2", &Cliff11::e2)
        .def_static("e12", &Cliff11::e12)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(-py::self)
        .def("norm_scalar", &Cliff11::norm_scalar)
        .def("max_abs", &Cliff11::max_abs)
        .def("inverse", [](const Cliff11& x) { return inverse(x); })
        .def("reversion", [](const Cliff11& x) { return reversion(x); })
        .def("conjugation", [](const Cliff11& x) { return conjugation(x); })
        .def("grade_involution", [](const Cliff11& x) { return grade_involution(x); })
        .def("as_tuple", [](const Cliff11& x) { return py::make_tuple(x.c0, x.c1, x.c2, x.c12); })
        .def("__repr__", [](const Cliff11& x) {
            return "Cliff11(" + format_double(x.c0) + ", " + format_double(x.c1) + ", " + format_double(x.c2) + ", " +
                   format_double(x.c12) + ")";
        });

    py::class_<EvenNumber>(m, "EvenNumber")
        .def(py::init([](double a1, double a2) { return EvenNumber{a1, a2}; }), py::arg("a1"), py::arg("a2"))
        .def_readwrite("a1", &EvenNumber::a1)
        .def_readwrite("a2", &EvenNumber::a2)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("cliff", &EvenNumber::cliff)
        .def("inverse", [](const EvenNumber& a) { return inverse(a); })
        .def("__repr__", [](const EvenNumber& a) {
            return "EvenNumber(" + format_double(a.a1) + ", " + format_double(a.a2) + ")";
        });
    m.def("exp_bivector", &exp_bivector, py::arg("t"));

    py::class_<Vector11>(m, "Vector11")
        .def(py::init<double, double>(), py::arg("u1"), py::arg("u2"))
        .def_readwrite("u1", &Vector11::u1)
        .def_readwrite("u2", &Vector11::u2)
        .def("square", &Vector11::square)
        .def("cliff", &Vector11::cliff);

    py::class_<SL2R>(m, "SL2R")
        .def(py::init([](double a, double b, double c, double d) { return SL2R{a, b, c, d}; }))
        .def_readwrite("a", &SL2R::a)
        .def_readwrite("b", &SL2R::b)
        .def_readwrite("c", &SL2R::c)
        .def_readwrite("d", &SL2R::d)
        .def(py::self * py::self);

    py::class_<SU11>(m, "SU11")
        .def(py::init([](Complex alpha, Complex beta) { return SU11{alpha, beta}; }))
        .def_readwrite("alpha", &SU11::alpha)
        .def_readwrite("beta", &SU11::beta)
        .def("det", &SU11::det)
        .def("inverse", &SU11::inverse)
        .def(py::self * py::self);

    py::class_<Cl11Matrix>(m, "Cl11Matrix")
        .def(py::init([](const EvenNumber& a, const Vector11& b, int sign) { return Cl11Matrix{a, b, sign}; }),
             py::arg("a"), py::arg("b"), py::arg("sign") = 1)
        .def_readwrite("a", &Cl11Matrix::a)
        .def_readwrite("b", &Cl11Matrix::b)
        .def_readwrite("sign", &Cl11Matrix::sign)
        .def("pseudodet", &Cl11Matrix::pseudodet)
        .def("inverse", &Cl11Matrix::inverse)
        .def(py::self * py::self);

    m.def("to_su11", &to_su11);
    m.def("cayley", &cayley);

    py::enum_<Sheet>(m, "Sheet").value("plus", Sheet::plus).value("minus", Sheet::minus);
    py::class_<TildePoint>(m, "TildePoint")
        .def(py::init([](Sheet s, double u1, double u2) { return TildePoint{s, {u1, u2}}; }), py::arg("sheet"),
             py::arg("u1"), py::arg("u2"))
        .def_readwrite("sheet", &TildePoint::sheet)
        .def_readwrite("u", &TildePoint::u);
    py::class_<BranchCoord>(m, "BranchCoord")
        .def(py::init([](int branch, double t) { return BranchCoord{branch, t}; }), py::arg("branch"), py::arg("t"))
        .def_readwrite("branch", &BranchCoord::branch)
        .def_readwrite("t", &BranchCoord::t);

    m.def("act_by", py::overload_cast<const SU11&, Complex>(&act_by), "Disk action with coefficient matrix g^{-1}");
    m.def("circle_point", &circle_point, py::arg("lam"), py::arg("coord"));
    m.def("in_disk", &in_disk);
    m.def("kernel_tilde", &kernel_tilde, py::arg("u"), py::arg("v"), py::arg("sigma") = 0.0);

    m.def(
        "cauchy_disk",
        [](const std::function<Complex(double)>& f, Complex a, std::size_t n) {
            return result_dict(cauchy_disk(f, a, spec_from(n, 12.0, std::nullopt)));
        },
        py::arg("f"), py::arg("a"), py::arg("n") = 1024,
        "Normalized Cauchy transform on the unit circle; f(phi) -> complex");
    m.def(
        "bergman",
        [](int mw, const std::function<Complex(Complex)>& f, Complex a) {
            return result_dict(bergman(mw, f, a));
        },
        py::arg("m"), py::arg("f"), py::arg("a"));
    m.def(
        "cauchy_tilde_pv",
        [](double sigma, const std::function<EvenNumber(const BranchCoord&)>& f, const TildePoint& u, double t_max,
           std::optional<std::vector<double>> pv_epsilons) {
            return result_dict(cauchy_tilde_pv(sigma, f, u, spec_from(1024, t_max, std::move(pv_epsilons))));
        },
        py::arg("sigma"), py::arg("f"), py::arg("u"), py::arg("t_max") = 12.0, py::arg("pv_epsilons") = py::none(),
        "Principal-value hyperbolic Cauchy transform; f(BranchCoord) -> EvenNumber");

    m.def("laplace_table_check", [](double a, double k, double t) {
        const LaplaceCheck c = laplace_table_check(a, k, t);
        return py::dict(py::arg("lhs") = c.lhs, py::arg("rhs") = c.rhs, py::arg("error") = c.error,
                        py::arg("intervals") = c.intervals);
    });
    m.def("hyperbolic_expand", [](const TildePoint& u, double t) { return hyperbolic_expand(u, t); });
    m.def("geometric_expand", [](const TildePoint& u, double t, int terms) {
        return geometric_expand(u, t, terms).partial_sums.back();
    });
    m.def("classical_expand", [](Complex a, double phi, int terms) {
        const ClassicalExpansion e = classical_expand(a, phi, terms);
        return py::make_tuple(e.partial_sums.back(), e.reference);
    });

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            std::string report;
            {
                py::gil_scoped_release release;
                report = to_json(run_verify(suite, seed), seed);
            }
            return py::module_::import("json").attr("loads")(report);
        },
        py::arg("suite") = "all", py::arg("seed") = 1, "Runs the self-check suites and returns the JSON report");
    m.def(
        "run_job",
        [](const std::string& job_json, const std::vector<std::string>& overrides) {
            nlohmann::json j = nlohmann::json::parse(job_json, nullptr, false);
            if (j.is_discarded()) throw SchemaError("job is not valid JSON");
            for (const auto& o : overrides) apply_override(j, o);
            const JobSpec job = parse_job(j);
            JobOutput out;
            {
                py::gil_scoped_release release;
                if (job.command == "kernel-dump") {
                    out = run_dump(DumpKind::kernel, job);
                } else if (job.command == "geometry-dump") {
                    out = run_dump(DumpKind::geometry, job);
                } else {
                    out = run_transform(job);
                }
            }
            return py::make_tuple(out.csv, out.exit_code);
        },
        py::arg("job_json"), py::arg("overrides") = std::vector<std::string>{},
        "Runs a transform or dump job given as a JSON string; returns (csv, exit_code)");
}

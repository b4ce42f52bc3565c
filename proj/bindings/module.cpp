#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dunkl/verify.hpp"

namespace py = pybind11;
using namespace dunkl;

namespace {

OperatorContext make_context(int m, int p, int N, const std::vector<std::string>& free_kappa) {
    std::vector<Rational> vals;
    vals.reserve(free_kappa.size());
    for (const auto& s : free_kappa) vals.push_back(rational_from_string(s));
    return OperatorContext(m, p, N, make_params(m, p, vals));
}

// Thin polynomial handle working over text and exponent maps.
struct Poly {
    Polynomial value;

    Poly(int nvars, int m, const std::string& text)
        : value(parse_polynomial(text, nvars, m)) {}
    explicit Poly(Polynomial v) : value(std::move(v)) {}

    std::string text(const std::string& var) const { return value.to_text(var); }
    std::string json() const { return value.to_json(); }
    int degree() const { return value.degree(); }
    Poly add(const Poly& o) const { return Poly(value + o.value); }
    Poly sub(const Poly& o) const { return Poly(value - o.value); }
    Poly mul(const Poly& o) const { return Poly(value * o.value); }
    bool eq(const Poly& o) const { return value == o.value; }
};

} // namespace

PYBIND11_MODULE(pydunkl, mod) {
    mod.doc() = "exact Dunkl operator computations for the complex reflection groups G(m,p,N)";

    py::register_exception<PoleError>(mod, "PoleError");
    py::register_exception<SingularParameter>(mod, "SingularParameterError");

    py::class_<Poly>(mod, "Poly")
        .def(py::init<int, int, const std::string&>(), py::arg("nvars"), py::arg("m"),
             py::arg("text"))
        .def("text", &Poly::text, py::arg("var") = "x")
        .def("json", &Poly::json)
        .def("degree", &Poly::degree)
        .def("__add__", &Poly::add)
        .def("__sub__", &Poly::sub)
        .def("__mul__", &Poly::mul)
        .def("__eq__", &Poly::eq)
        .def("__repr__", [](const Poly& p) { return p.value.to_text(); });

    mod.def("cyclotomic_polynomial", [](int m) {
        std::vector<std::string> out;
        for (const auto& c : cyclotomic_polynomial(m)) out.push_back(c.get_str());
        return out;
    });

    mod.def(
        "apply_T",
        [](int m, int p, int N, const std::vector<std::string>& kappa, int i, const Poly& q) {
            return Poly(apply_T(make_context(m, p, N, kappa), i, q.value));
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("i"),
        py::arg("poly"));

    mod.def(
        "apply_U",
        [](int m, int p, int N, const std::vector<std::string>& kappa, int i, const Poly& q) {
            return Poly(apply_U(make_context(m, p, N, kappa), i, q.value));
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("i"),
        py::arg("poly"));

    mod.def(
        "apply_D",
        [](const std::string& kappa0, int i, const Poly& g) {
            return Poly(apply_D(rational_from_string(kappa0), i, g.value));
        },
        py::arg("kappa0"), py::arg("i"), py::arg("poly_in_y"));

    mod.def(
        "pairing",
        [](int m, int p, int N, const std::vector<std::string>& kappa, const Poly& a,
           const Poly& b) {
            return pairing(make_context(m, p, N, kappa), a.value, b.value)
                .to_display_string();
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("p_poly"),
        py::arg("q_poly"));

    mod.def(
        "zeta",
        [](int N, const std::string& kappa0, const Composition& mu) {
            JackContext jc(N, rational_from_string(kappa0));
            return Poly(zeta(jc, mu));
        },
        py::arg("N"), py::arg("kappa0"), py::arg("mu"));

    mod.def(
        "xi",
        [](int N, const std::string& kappa0, const Composition& mu, int i) {
            return to_string(xi(N, rational_from_string(kappa0), mu, i));
        },
        py::arg("N"), py::arg("kappa0"), py::arg("mu"), py::arg("i"));

    mod.def(
        "norm_closed_form",
        [](int m, int p, int N, const std::vector<std::string>& kappa,
           const Composition& alpha, const Composition& gamma) {
            return to_string(norm_closed_form(make_context(m, p, N, kappa), alpha, gamma));
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("alpha"),
        py::arg("gamma"));

    mod.def(
        "gram_coranks",
        [](int m, int p, int N, const std::vector<std::string>& kappa, int degree) {
            return gram_corank_oracle(make_context(m, p, N, kappa), degree);
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("degree"));

    mod.def(
        "in_K1",
        [](int m, int p, int N,
           const std::vector<std::string>& kappa) -> py::object {
            std::vector<Rational> vals;
            for (const auto& s : kappa) vals.push_back(rational_from_string(s));
            auto w = in_K1(make_params(m, p, vals), N);
            if (!w) return py::none();
            return py::make_tuple(w->n, w->i, to_string(w->value));
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"));

    mod.def(
        "hanlon_norm",
        [](int m, int p, int N, const std::vector<std::string>& kappa, int t) {
            auto [closed, f] = hanlon_norm(make_context(m, p, N, kappa), t);
            return py::make_tuple(to_string(closed), Poly(f));
        },
        py::arg("m"), py::arg("p"), py::arg("N"), py::arg("kappa"), py::arg("t"));

    mod.def(
        "verify",
        [](const std::string& suite, int m, int p, int N, int degree, unsigned long seed) {
            RatSampler s(seed, 40);
            std::vector<ParamTuple> kappas;
            for (int k = 0; k < 3; ++k) kappas.push_back(sample_params(m, p, N, s));
            SuiteReport rep;
            if (suite == "commute")
                rep = suite_commutativity(m, p, N, degree, kappas);
            else if (suite == "hermitian")
                rep = suite_hermiticity(m, p, N, std::min(degree, 4), kappas, seed);
            else if (suite == "norms")
                rep = suite_norms(m, p, N, std::min(degree, 4), kappas);
            else if (suite == "derham")
                rep = suite_derham(m, p, N, std::min(degree, 4), 3, kappas);
            else if (suite == "shifts")
                rep = suite_shifts(m, p, N, kappas, seed);
            else if (suite == "singular")
                rep = suite_singular(m, p, N, std::min(degree, 4), seed);
            else
                throw HypothesisViolation("unknown suite: " + suite);
            py::list items;
            for (const auto& it : rep.items)
                items.append(py::make_tuple(it.name, it.pass, it.detail));
            py::dict out;
            out["suite"] = rep.suite;
            out["pass"] = rep.pass();
            out["items"] = items;
            return out;
        },
        py::arg("suite"), py::arg("m") = 2, py::arg("p") = 1, py::arg("N") = 2,
        py::arg("degree") = 4, py::arg("seed") = 0);
}

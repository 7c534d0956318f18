#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "copoly/cauchy.hpp"
#include "copoly/job.hpp"
#include "copoly/laplace.hpp"

namespace py = pybind11;
using namespace copoly;

namespace {

MultiIndex to_index(const std::vector<unsigned>& e) { return MultiIndex(e); }

std::vector<std::pair<std::vector<unsigned>, std::string>> table_to_py(
    const std::vector<std::pair<MultiIndex, RingElement>>& rows) {
    std::vector<std::pair<std::vector<unsigned>, std::string>> out;
    out.reserve(rows.size());
    for (const auto& [alpha, value] : rows) out.emplace_back(alpha.exponents(), value.to_string());
    return out;
}

std::vector<std::pair<std::vector<unsigned>, std::string>> moments_to_py(const Copolynomial& t,
                                                                         unsigned degree) {
    std::vector<std::pair<std::vector<unsigned>, std::string>> out;
    for (const MultiIndex& alpha : enumerate_indices(t.vars(), degree)) {
        out.emplace_back(alpha.exponents(), t.moment(alpha).to_string());
    }
    return out;
}

Polynomial poly_from_terms(std::size_t n, const RingSpec& ring,
                           const std::vector<std::pair<std::vector<unsigned>, std::string>>& terms) {
    Polynomial p(n, ring);
    for (const auto& [alpha, c] : terms) {
        MultiIndex idx(alpha);
        p.set_coefficient(idx, p.coefficient(idx) + RingElement::parse(ring, c));
    }
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact copolynomial calculus core";

    py::register_exception<Error>(m, "CopolyError");
    py::register_exception<NotInvertible>(m, "NotInvertible");
    py::register_exception<NotDivisible>(m, "NotDivisible");
    py::register_exception<DivisibilityFailure>(m, "DivisibilityFailure");
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation");
    py::register_exception<RingCapability>(m, "RingCapability");
    py::register_exception<TruncationTooLow>(m, "TruncationTooLow");

    py::class_<RingSpec>(m, "RingSpec")
        .def_static("integers", &RingSpec::integers)
        .def_static("rationals", &RingSpec::rationals)
        .def_static("mod", &RingSpec::mod, py::arg("m"), py::arg("allow_composite") = false)
        .def_static("mod", [](unsigned long m, bool allow_composite) {
            return RingSpec::mod(mpz_class(m), allow_composite);
        }, py::arg("m"), py::arg("allow_composite") = false)
        .def("contains_rationals", &RingSpec::contains_rationals)
        .def("characteristic", [](const RingSpec& s) { return s.characteristic().get_str(); })
        .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
        .def("__repr__", &RingSpec::to_string);

    py::class_<RingElement>(m, "RingElement")
        .def_static("parse", &RingElement::parse)
        .def("__add__", [](const RingElement& a, const RingElement& b) { return a + b; })
        .def("__sub__", [](const RingElement& a, const RingElement& b) { return a - b; })
        .def("__mul__", [](const RingElement& a, const RingElement& b) { return a * b; })
        .def("__neg__", [](const RingElement& a) { return -a; })
        .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
        .def("is_zero", &RingElement::is_zero)
        .def("__str__", &RingElement::to_string)
        .def("__repr__", &RingElement::to_string);

    m.def("invert", &invert);
    m.def("exact_div", [](const RingElement& a, unsigned long k) {
        return exact_div(a, mpz_class(k));
    });
    m.def("factorial", [](const std::vector<unsigned>& alpha) {
        return factorial(to_index(alpha)).get_str();
    });
    m.def("binomial", [](const std::vector<unsigned>& beta, const std::vector<unsigned>& alpha) {
        return binomial(to_index(beta), to_index(alpha)).get_str();
    });
    m.def("falling_factorial",
          [](const std::vector<unsigned>& beta, const std::vector<unsigned>& alpha) {
              return falling_factorial(to_index(beta), to_index(alpha)).get_str();
          });
    m.def("enumerate_indices", [](std::size_t n, unsigned degree) {
        std::vector<std::vector<unsigned>> out;
        for (const MultiIndex& alpha : enumerate_indices(n, degree)) out.push_back(alpha.exponents());
        return out;
    });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&poly_from_terms), py::arg("n"), py::arg("ring"), py::arg("terms"))
        .def("vars", &Polynomial::vars)
        .def("degree", &Polynomial::degree)
        .def("coefficient", [](const Polynomial& p, const std::vector<unsigned>& alpha) {
            return p.coefficient(to_index(alpha)).to_string();
        })
        .def("terms", [](const Polynomial& p) {
            std::vector<std::pair<std::vector<unsigned>, std::string>> out;
            for (const auto& [alpha, c] : p.terms()) out.emplace_back(alpha.exponents(), c.to_string());
            return out;
        })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__repr__", &Polynomial::to_string);

    m.def("poly_derivative", [](const Polynomial& p, const std::vector<unsigned>& alpha) {
        return derivative(p, to_index(alpha));
    });
    m.def("taylor_coefficient", [](const Polynomial& p, const std::vector<unsigned>& alpha) {
        return taylor_coefficient(p, to_index(alpha));
    });
    m.def("poly_shift", [](const Polynomial& p, const std::vector<std::string>& h) {
        std::vector<RingElement> hv;
        for (const auto& s : h) hv.push_back(RingElement::parse(p.ring(), s));
        return shift(p, hv);
    });
    m.def("evaluate", [](const Polynomial& p, const std::vector<std::string>& point) {
        std::vector<RingElement> pt;
        for (const auto& s : point) pt.push_back(RingElement::parse(p.ring(), s));
        return evaluate(p, pt).to_string();
    });

    py::class_<Copolynomial>(m, "Copolynomial")
        .def("vars", &Copolynomial::vars)
        .def("provenance", &Copolynomial::provenance)
        .def("moment", [](const Copolynomial& t, const std::vector<unsigned>& alpha) {
            return t.moment(to_index(alpha)).to_string();
        })
        .def("apply", [](const Copolynomial& t, const Polynomial& p) {
            return t.apply(p).to_string();
        })
        .def("moments", &moments_to_py, py::arg("degree"));

    m.def("delta", &delta);
    m.def("exp_family", [](const RingSpec& ring, const std::string& a) {
        return exp_family(RingElement::parse(ring, a));
    });
    m.def("from_moments", [](std::size_t n, const RingSpec& ring,
                             const std::vector<std::pair<std::vector<unsigned>, std::string>>& rows) {
        std::map<MultiIndex, RingElement> table;
        for (const auto& [alpha, value] : rows) {
            table.insert_or_assign(to_index(alpha), RingElement::parse(ring, value));
        }
        return from_moments(n, ring, std::move(table));
    });
    m.def("copoly_derivative", [](const Copolynomial& t, const std::vector<unsigned>& alpha) {
        return derivative(t, to_index(alpha));
    });
    m.def("scaled_derivative", [](const Copolynomial& t, const std::vector<unsigned>& alpha) {
        return scaled_derivative(t, to_index(alpha));
    });
    m.def("copoly_shift", [](const Copolynomial& t, const std::vector<std::string>& h) {
        std::vector<RingElement> hv;
        for (const auto& s : h) hv.push_back(RingElement::parse(t.ring(), s));
        return shift(t, hv);
    });
    m.def("convolve", &convolve);
    m.def("tensor", &tensor);
    m.def("convolve_poly", &convolve_poly);
    m.def("delta_expansion", [](const Copolynomial& t, unsigned degree) {
        return table_to_py(delta_expansion(t, degree));
    });
    m.def("equal_up_to", &equal_up_to);

    py::class_<DiffOperator>(m, "DiffOperator")
        .def_static("from_terms",
                    [](std::size_t n, const RingSpec& ring,
                       const std::vector<std::pair<std::vector<unsigned>, std::string>>& terms) {
                        std::map<MultiIndex, RingElement> table;
                        for (const auto& [alpha, a] : terms) {
                            table.insert_or_assign(to_index(alpha), RingElement::parse(ring, a));
                        }
                        return DiffOperator::from_terms(n, ring, std::move(table));
                    })
        .def_static("identity", &DiffOperator::identity)
        .def("vars", &DiffOperator::vars)
        .def("coefficient", [](const DiffOperator& op, const std::vector<unsigned>& alpha) {
            return op.coefficient(to_index(alpha)).to_string();
        });

    m.def("helmholtz_operator", [](const RingSpec& ring, const std::string& c) {
        return helmholtz_operator(RingElement::parse(ring, c));
    });
    m.def("heat_operator", [](const RingSpec& ring, const std::string& a, const std::string& c) {
        return heat_operator(RingElement::parse(ring, a), RingElement::parse(ring, c));
    });
    m.def("transport_operator", [](const RingSpec& ring, const std::vector<std::string>& s) {
        std::vector<RingElement> sv;
        for (const auto& x : s) sv.push_back(RingElement::parse(ring, x));
        return transport_operator(sv);
    });
    m.def("mixed_xt_operator", &mixed_xt_operator);
    m.def("neumann_sum_operator", &neumann_sum_operator);
    m.def("laplacian_operator", &laplacian_operator);

    m.def("apply_op", [](const DiffOperator& op, const Copolynomial& t) { return apply(op, t); });
    m.def("apply_op_poly",
          [](const DiffOperator& op, const Polynomial& p) { return apply(op, p); });
    m.def("neumann_inverse_apply", &neumann_inverse_apply);
    m.def("fundamental_solution", &fundamental_solution);
    m.def("solve", &solve);
    m.def("solve_polynomial", &solve_polynomial);
    m.def("symbol", [](const DiffOperator& op, unsigned truncation) {
        std::vector<std::pair<std::vector<unsigned>, std::string>> out;
        TruncatedSeries s = symbol(op, truncation);
        for (const auto& [alpha, c] : s.coefficients()) {
            out.emplace_back(alpha.exponents(), c.to_string());
        }
        return out;
    });

    m.def("laplace", [](const Copolynomial& t, unsigned truncation) {
        std::vector<std::pair<std::vector<unsigned>, std::string>> out;
        TruncatedSeries s = laplace(t, truncation);
        for (const MultiIndex& alpha : enumerate_indices(t.vars(), truncation)) {
            out.emplace_back(alpha.exponents(), s.coefficient(alpha).to_string());
        }
        return out;
    });
    m.def("parseval", [](const Copolynomial& t, const Polynomial& p) {
        long deg = std::max(p.degree(), 0L);
        RingElement via_residue =
            residue_pairing(laplace(t, static_cast<unsigned>(deg)), laplace_poly(p));
        return std::make_pair(via_residue.to_string(), t.apply(p).to_string());
    });
    m.def("check_symbol_relation", &check_symbol_relation);

    py::class_<CopolySeries>(m, "CopolySeries")
        .def("vars", &CopolySeries::vars)
        .def("coefficient", [](const CopolySeries& u, std::size_t k) { return u.coefficient(k); });

    m.def("cauchy_solve",
          [](const DiffOperator& op, const Copolynomial& q, std::size_t kmax, bool override) {
              return cauchy_solve(op, q, kmax, CauchyOptions{override});
          },
          py::arg("op"), py::arg("q"), py::arg("kmax"), py::arg("override_hypotheses") = false);
    m.def("cauchy_fundamental",
          [](const DiffOperator& op, std::size_t kmax) { return cauchy_fundamental(op, kmax); });
    m.def("cauchy_solve_by_convolution",
          [](const DiffOperator& op, const Copolynomial& q, std::size_t kmax) {
              return cauchy_solve_by_convolution(op, q, kmax);
          });
    m.def("cauchy_solve_polynomial",
          [](const RingSpec& ring, const std::string& a, const Polynomial& q, std::size_t kmax) {
              return cauchy_solve_polynomial(RingElement::parse(ring, a), q, kmax);
          });
    m.def("solve_inhomogeneous_heat",
          [](const RingSpec& ring, const std::string& a, const Copolynomial& q, std::size_t kmax) {
              return solve_inhomogeneous_heat(RingElement::parse(ring, a), q, kmax);
          });
    m.def("cross_check_connections",
          [](const DiffOperator& op, std::size_t kmax, unsigned degree) {
              ConnectionsReport r = cross_check_connections(op, kmax, degree);
              py::dict d;
              d["operator_from_cauchy"] = r.operator_from_cauchy;
              d["cauchy_from_operator"] = r.cauchy_from_operator;
              d["space_time_factorization"] = r.space_time_factorization;
              return d;
          });

    m.def("run_job", [](const std::string& text, bool unsafe_rings) {
        copoly::job::JobOverrides overrides;
        overrides.unsafe_rings = unsafe_rings;
        copoly::job::RunResult r = copoly::job::run_job_text(text, overrides);
        return std::make_pair(r.exit_code, r.output);
    }, py::arg("text"), py::arg("unsafe_rings") = false);
}

// Copyright 2026 The monomat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include "monomat/cli.h"
#include "monomat/haar.h"
#include "monomat/json_io.h"
#include "monomat/moments.h"
#include "monomat/ncalg.h"
#include "monomat/tensor_model.h"
#include "pybind11/complex.h"
#include "pybind11/numpy.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;
using namespace monomat;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

Matrix matrix_from_numpy(const ComplexArray &arr) {
    if (arr.ndim() != 2) {
        throw std::invalid_argument("expected a 2d array");
    }
    size_t rows = arr.shape(0), cols = arr.shape(1);
    std::vector<complex> entries(arr.data(), arr.data() + rows * cols);
    return Matrix(rows, cols, std::move(entries));
}

ComplexArray matrix_to_numpy(const Matrix &m) {
    ComplexArray out({m.rows(), m.cols()});
    auto e = m.entries();
    std::copy(e.begin(), e.end(), out.mutable_data());
    return out;
}

std::vector<Matrix> matrices_from_numpy(const std::vector<ComplexArray> &arrays) {
    std::vector<Matrix> out;
    for (const auto &a : arrays) {
        out.push_back(matrix_from_numpy(a));
    }
    return out;
}

py::list matrices_to_numpy(const std::vector<Matrix> &ms) {
    py::list out;
    for (const auto &m : ms) {
        out.append(matrix_to_numpy(m));
    }
    return out;
}

Polynomial as_polynomial(const py::object &obj) {
    if (py::isinstance<py::str>(obj)) {
        return parse_polynomial(obj.cast<std::string>());
    }
    return obj.cast<Polynomial>();
}

TauTable tau_from_python(const py::object &tau, uint32_t q) {
    if (py::isinstance<py::str>(tau)) {
        return tau_from_json(Json(tau.cast<std::string>()), q);
    }
    Json j = Json::object();
    for (auto [key, value] : tau.cast<py::dict>()) {
        complex z = value.cast<complex>();
        j[py::str(key).cast<std::string>()] = complex_to_json(z);
    }
    return tau_from_json(j, q);
}

MomentData make_moment_data(
    std::optional<std::vector<double>> eigenvalues,
    std::optional<std::vector<ComplexArray>> matrices,
    uint32_t q,
    const py::object &tau) {
    if (eigenvalues.has_value() == matrices.has_value()) {
        throw std::invalid_argument("pass exactly one of eigenvalues= or matrices=");
    }
    MomentData d;
    d.omega0 = eigenvalues ? OmegaZero::from_eigenvalues(*eigenvalues)
                           : OmegaZero::from_matrices(matrices_from_numpy(*matrices));
    d.tau = tau_from_python(tau, q);
    return d;
}

MomentKind parse_kind(const std::string &kind) {
    if (kind == "cyclic") {
        return MomentKind::Cyclic;
    }
    if (kind == "monotone") {
        return MomentKind::Monotone;
    }
    throw std::invalid_argument("kind must be 'cyclic' or 'monotone'");
}

py::list verify_rows(const VerifyReport &r) {
    py::list out;
    for (const auto &row : r.rows) {
        py::dict d;
        d["k"] = row.k;
        d["symbolic"] = row.symbolic;
        d["matrix"] = row.matrix;
        d["residual"] = row.residual;
        d["pass"] = row.pass;
        out.append(d);
    }
    return out;
}

RandomModelSpec make_haar_spec(
    const std::string &word,
    const std::vector<size_t> &n_list,
    size_t trials,
    uint64_t seed,
    const std::string &l,
    std::optional<std::vector<ComplexArray>> a,
    std::optional<std::vector<std::vector<double>>> b,
    bool identity_unitary,
    bool keep_leading_b) {
    RandomModelSpec spec = RandomModelSpec::reference(n_list, trials, seed);
    spec.word = WordPattern::parse(word);
    spec.l = TraceLength::parse(l);
    if (a) {
        spec.a_family = matrices_from_numpy(*a);
    }
    if (b) {
        spec.b_family = *b;
    }
    spec.identity_unitary = identity_unitary;
    spec.keep_leading_b = keep_leading_b;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_monomat, m) {
    m.doc() = "Moments of cyclic-monotone and monotone products, their tensor model, and Haar sampling.";
    m.attr("__version__") = MONOMAT_VERSION;

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string &text) {
                 return parse_polynomial(text);
             }),
             py::arg("text"))
        .def("__str__", [](const Polynomial &p) {
            return to_string(p);
        })
        .def("__repr__", [](const Polynomial &p) {
            return "monomat.Polynomial(\"" + to_string(p) + "\")";
        })
        .def("__len__", &Polynomial::size)
        .def("__eq__", [](const Polynomial &a, const Polynomial &b) {
            return a == b;
        })
        .def("__add__", [](const Polynomial &a, const Polynomial &b) {
            return a + b;
        })
        .def("__sub__", [](const Polynomial &a, const Polynomial &b) {
            return a - b;
        })
        .def("__mul__", [](const Polynomial &a, const Polynomial &b) {
            return a * b;
        })
        .def("__mul__", [](const Polynomial &a, complex c) {
            return a * c;
        })
        .def("__rmul__", [](const Polynomial &a, complex c) {
            return c * a;
        })
        .def("__pow__", [](const Polynomial &a, unsigned k) {
            return poly_pow(a, k);
        })
        .def("adjoint", &Polynomial::adjoint)
        .def("in_ideal", &Polynomial::in_ideal)
        .def_property_readonly("terms", [](const Polynomial &p) {
            py::list out;
            for (const auto &[w, c] : p.terms()) {
                out.append(py::make_tuple(format_word(w), c));
            }
            return out;
        });

    py::class_<MomentData>(m, "MomentData")
        .def(py::init(&make_moment_data),
             py::kw_only(),
             py::arg("eigenvalues") = py::none(),
             py::arg("matrices") = py::none(),
             py::arg("q") = 1,
             py::arg("tau") = "involutions",
             "omega0 from a spectrum or from matrices; tau from 'involutions', 'orthonormal' or a dict of "
             "index-tuple keys.")
        .def_static("from_json", [](const std::string &text) {
            return moment_data_from_json(parse_json_text(text));
        })
        .def_property_readonly("p", &MomentData::p)
        .def_property_readonly("q", &MomentData::q)
        .def("cyclic", [](const MomentData &d, const py::object &p) {
            return cyclic_moment(as_polynomial(p), d);
        })
        .def("monotone", [](const MomentData &d, const py::object &p) {
            return monotone_moment(as_polynomial(p), d);
        })
        .def(
            "via_quotient",
            [](const MomentData &d, const py::object &p, const std::string &kind) {
                return moment_via_chi(as_polynomial(p), d, parse_kind(kind));
            },
            py::arg("poly"),
            py::arg("kind") = "cyclic")
        .def("sign_tables", [](const MomentData &d, double tol) {
            SignTables t = sign_tables(d, tol);
            auto grid = [](const std::array<std::array<char, 4>, 4> &g) {
                std::vector<std::string> rows;
                for (const auto &r : g) {
                    rows.emplace_back(r.begin(), r.end());
                }
                return rows;
            };
            py::dict out;
            out["cyclic"] = grid(t.cyclic);
            out["monotone"] = grid(t.monotone);
            out["cyclic_matches"] = t.cyclic_matches;
            out["monotone_matches"] = t.monotone_matches;
            return out;
        }, py::arg("tol") = 1e-12);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init([](size_t n, uint32_t q, const std::vector<ComplexArray> &a, const py::object &poly) {
                 ModelSpec s;
                 s.n = n;
                 s.q = q;
                 s.a_matrices = matrices_from_numpy(a);
                 s.poly = as_polynomial(poly);
                 return s;
             }),
             py::arg("n"),
             py::arg("q"),
             py::arg("a_matrices"),
             py::arg("poly"))
        .def_static("reference", &reference_example_spec, py::arg("poly") = "a1 + b1 a1 b1")
        .def_readwrite("n", &ModelSpec::n)
        .def_readwrite("q", &ModelSpec::q)
        .def_readwrite("poly", &ModelSpec::poly)
        .def_readwrite("dimension_cap", &ModelSpec::dimension_cap)
        .def_property_readonly("a_matrices", [](const ModelSpec &s) {
            return matrices_to_numpy(s.a_matrices);
        })
        .def("moment_data", &model_moment_data);

    py::class_<TensorModel>(m, "TensorModel")
        .def(py::init(&build_model), py::arg("spec"))
        .def_readonly("n", &TensorModel::n)
        .def_readonly("q", &TensorModel::q)
        .def_readonly("dim", &TensorModel::dim)
        .def_property_readonly("phi_a", [](const TensorModel &t) {
            return matrices_to_numpy(t.phi_a);
        })
        .def_property_readonly("b_tilde", [](const TensorModel &t) {
            return matrices_to_numpy(t.b_tilde);
        })
        .def_property_readonly("p_tilde", [](const TensorModel &t) {
            return matrix_to_numpy(t.p_tilde);
        })
        .def("evaluate", [](const TensorModel &t, const py::object &p) {
            return matrix_to_numpy(evaluate_polynomial(t, as_polynomial(p)));
        })
        .def(
            "state",
            [](const TensorModel &t, unsigned k, const std::string &state) {
                return evaluate_state(t, k, StateKind::parse(state));
            },
            py::arg("k"),
            py::arg("state") = "full");

    m.def(
        "verify",
        [](const ModelSpec &spec, std::optional<MomentData> data, unsigned k_max, const std::string &kind, double tol) {
            MomentData d = data ? *data : model_moment_data(spec);
            MomentKind mk = parse_kind(kind);
            return verify_rows(mk == MomentKind::Cyclic ? verify_cyclic(spec, d, k_max, tol)
                                                         : verify_monotone(spec, d, k_max, tol));
        },
        py::arg("spec"),
        py::arg("data") = py::none(),
        py::arg("k_max") = 6,
        py::arg("kind") = "cyclic",
        py::arg("tol") = kVerifyTolerance);

    m.def(
        "limit_sweep",
        [](const ModelSpec &spec, unsigned k, const std::vector<size_t> &n_list, const std::vector<size_t> &l_list,
           double tol) {
            LimitSweep s = limit_sweep(spec, k, n_list, l_list, tol);
            py::list rows;
            for (const auto &r : s.rows) {
                rows.append(py::make_tuple(r.n, r.l, r.value));
            }
            py::dict out;
            out["rows"] = rows;
            out["full_trace"] = s.full_trace;
            out["monotone_state"] = s.monotone_state;
            out["cyclic_limit"] = s.cyclic_limit;
            out["monotone_limit"] = s.monotone_limit;
            out["cyclic_stable"] = s.cyclic_stable;
            out["monotone_stable"] = s.monotone_stable;
            return out;
        },
        py::arg("spec"),
        py::arg("k"),
        py::arg("n_list"),
        py::arg("l_list"),
        py::arg("tol") = 1e-12);

    m.def(
        "example_eigenvalues",
        [](const std::vector<double> &a_diag, std::optional<size_t> n) {
            Matrix a = Matrix::diagonal(std::span<const double>(a_diag));
            ExampleSpectra s = example_eigenvalues(a, n.value_or(a_diag.size()));
            return py::make_tuple(s.x, s.y);
        },
        py::arg("a_diag"),
        py::arg("n") = py::none());

    m.def(
        "sample_haar_unitary",
        [](size_t n, uint64_t seed, uint64_t stream) {
            RandomStream s(seed, stream);
            return matrix_to_numpy(sample_haar_unitary(n, s));
        },
        py::arg("n"),
        py::arg("seed") = 0,
        py::arg("stream") = 0);

    py::class_<TrialReport>(m, "TrialReport")
        .def_readonly("n", &TrialReport::n)
        .def_readonly("l", &TrialReport::l)
        .def_readonly("mean", &TrialReport::mean)
        .def_readonly("std_error", &TrialReport::std_error)
        .def_readonly("target", &TrialReport::target)
        .def_readonly("cyclic_target", &TrialReport::cyclic_target)
        .def_readonly("abs_error", &TrialReport::abs_error)
        .def_readonly("mean_abs_deviation", &TrialReport::mean_abs_deviation)
        .def_property_readonly("values", [](const TrialReport &r) {
            py::array_t<complex> out(r.values.size());
            std::copy(r.values.begin(), r.values.end(), out.mutable_data());
            return out;
        });

    m.def(
        "mc_estimate",
        [](const std::string &word, const std::vector<size_t> &n_list, size_t trials, uint64_t seed,
           const std::string &l, std::optional<std::vector<ComplexArray>> a,
           std::optional<std::vector<std::vector<double>>> b, bool identity_unitary, bool keep_leading_b,
           unsigned threads) {
            RandomModelSpec spec = make_haar_spec(word, n_list, trials, seed, l, a, b, identity_unitary, keep_leading_b);
            py::gil_scoped_release release;
            return mc_estimate(spec, threads);
        },
        py::arg("word") = "ABAB",
        py::arg("n_list") = std::vector<size_t>{64, 128, 256},
        py::arg("trials") = 100,
        py::arg("seed") = 0,
        py::arg("l") = "full",
        py::arg("a") = py::none(),
        py::arg("b") = py::none(),
        py::arg("identity_unitary") = false,
        py::arg("keep_leading_b") = true,
        py::arg("threads") = 1);

    m.def(
        "rate_check",
        [](const std::vector<TrialReport> &reports, double slope_min, double slope_max) {
            RateFit f = rate_check(reports, slope_min, slope_max);
            py::dict out;
            out["slope"] = f.slope;
            out["intercept"] = f.intercept;
            out["ci_low"] = f.ci_low;
            out["ci_high"] = f.ci_high;
            out["degenerate"] = f.degenerate;
            out["passed"] = f.passed;
            return out;
        },
        py::arg("reports"),
        py::arg("slope_min") = -1.6,
        py::arg("slope_max") = -0.7);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Runs the command line tool in process. Returns (exit_code, stdout, stderr).");
}

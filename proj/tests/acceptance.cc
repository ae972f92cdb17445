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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "monomat/haar.h"
#include "monomat/moments.h"
#include "monomat/ncalg.h"
#include "monomat/tensor_model.h"

using namespace monomat;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::mt19937_64 rng(0xacce97);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

size_t pick(size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

complex unit_disk() {
    while (true) {
        complex z(uniform(-1, 1), uniform(-1, 1));
        if (std::abs(z) <= 1) {
            return z;
        }
    }
}

Matrix hermitian(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = uniform(-1, 1);
        for (size_t j = i + 1; j < n; j++) {
            m(i, j) = complex(uniform(-1, 1), uniform(-1, 1));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

Word random_word(uint32_t p, uint32_t q, size_t max_len, bool need_a) {
    Word w;
    size_t len = pick(1, max_len);
    for (size_t k = 0; k < len; k++) {
        if (pick(0, 1) == 0) {
            w.push_back(Letter::a(static_cast<uint32_t>(pick(1, p))));
        } else {
            w.push_back(Letter::b(static_cast<uint32_t>(pick(0, q))));
        }
    }
    if (need_a && count_a_letters(w) == 0) {
        w.insert(w.begin() + pick(0, w.size()), Letter::a(static_cast<uint32_t>(pick(1, p))));
    }
    return w;
}

// p <= 2, q <= 3, n <= 6, up to three terms of length <= 3 with |coeff| <= 1.
ModelSpec random_spec() {
    ModelSpec spec;
    uint32_t p = static_cast<uint32_t>(pick(1, 2));
    spec.q = static_cast<uint32_t>(pick(0, 3));
    spec.n = pick(1, 6);
    size_t a_dim = pick(1, spec.n);
    for (uint32_t i = 0; i < p; i++) {
        spec.a_matrices.push_back(hermitian(a_dim));
    }
    size_t terms = pick(1, 3);
    while (spec.poly.size() < terms) {
        spec.poly.add_term(random_word(p, spec.q, 3, true), unit_disk());
    }
    return spec;
}

struct Suite {
    std::vector<ModelSpec> specs;
    std::vector<MomentData> data;
};

const Suite &suite() {
    static Suite s = [] {
        Suite out;
        for (int k = 0; k < 200; k++) {
            out.specs.push_back(random_spec());
            out.data.push_back(model_moment_data(out.specs.back()));
        }
        return out;
    }();
    return s;
}

constexpr unsigned kSuitePower = 5;
constexpr double kSuiteTol = 1e-10;

template <typename... Args>
std::string fmt(const char *format, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

Outcome example_spectra() {
    Matrix a = Matrix::diagonal(std::vector<double>{0.5, 0.25, 0.125});
    ExampleSpectra s = example_eigenvalues(a, 3);
    std::vector<double> want_x{0.125, 0.125, 0.25, 0.25, 0.5, 0.5};
    std::vector<double> want_y{-0.5, -0.25, -0.125, 0.125, 0.25, 0.5};
    auto x = s.x, y = s.y;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x.size() != 6 || y.size() != 6) {
        return {false, "wrong spectrum size"};
    }
    double err = 0;
    for (size_t k = 0; k < 6; k++) {
        err = std::max({err, std::abs(x[k] - want_x[k]), std::abs(y[k] - want_y[k])});
    }
    return {err <= 1e-12, fmt("max eigenvalue error %.3g", err)};
}

Outcome suite_equivalence(bool monotone) {
    const Suite &s = suite();
    double worst = 0;
    size_t failures = 0;
    for (size_t k = 0; k < s.specs.size(); k++) {
        VerifyReport r = monotone ? verify_monotone(s.specs[k], s.data[k], kSuitePower, kSuiteTol)
                                  : verify_cyclic(s.specs[k], s.data[k], kSuitePower, kSuiteTol);
        for (const auto &row : r.rows) {
            worst = std::max(worst, row.residual / (1 + std::abs(row.matrix)));
        }
        failures += r.all_pass() ? 0 : 1;
    }
    return {failures == 0, fmt("%zu specs, k <= 5, worst relative residual %.3g, failing specs %zu", s.specs.size(), worst, failures)};
}

Outcome quotient_route() {
    const Suite &s = suite();
    double worst = 0;
    size_t kernel_monomials = 0;
    double worst_kernel = 0;
    for (size_t k = 0; k < s.specs.size(); k++) {
        const MomentData &d = s.data[k];
        uint32_t p = d.p();
        uint32_t q = s.specs[k].q;
        Polynomial power = s.specs[k].poly;
        for (unsigned e = 1; e <= kSuitePower; e++) {
            if (e > 1) {
                power = power * s.specs[k].poly;
            }
            for (MomentKind kind : {MomentKind::Cyclic, MomentKind::Monotone}) {
                complex direct = moment(power, d, kind);
                complex via = moment_via_chi(power, d, kind);
                worst = std::max(worst, std::abs(direct - via) / (1 + std::abs(direct)));
            }
        }

        // J component of P^2: each monomial against 50 right factors.
        Polynomial square = s.specs[k].poly * s.specs[k].poly;
        ChiDecomposition dec = chi_decompose(square, d.tau);
        if (dec.kernel.empty()) {
            continue;
        }
        std::vector<Polynomial> right;
        for (int r = 0; r < 50; r++) {
            Polynomial f = Polynomial::constant(unit_disk());
            f.add_term(random_word(p, q, 3, false), unit_disk());
            f.add_term(random_word(p, q, 3, false), unit_disk());
            right.push_back(f);
        }
        for (const auto &[w, c] : dec.kernel) {
            Polynomial plain = uncenter(CenteredPolynomial{{w, 1.0}}, d.tau);
            kernel_monomials++;
            for (const auto &f : right) {
                Polynomial prod = plain * f;
                worst_kernel = std::max(worst_kernel, std::abs(cyclic_moment(prod, d)));
                worst_kernel = std::max(worst_kernel, std::abs(monotone_moment(prod, d)));
            }
        }
    }
    bool ok = worst <= kSuiteTol && worst_kernel <= kSuiteTol;
    return {ok, fmt("worst relative gap %.3g; %zu kernel monomials x 50 right factors, worst |value| %.3g", worst, kernel_monomials, worst_kernel)};
}

Outcome sign_patterns() {
    MomentData d = model_moment_data(reference_example_spec());
    SignTables t = sign_tables(d);
    size_t mismatches = 0;
    auto want_c = expected_cyclic_signs();
    auto want_m = expected_monotone_signs();
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            mismatches += t.cyclic[i][j] != want_c[i][j];
            mismatches += t.monotone[i][j] != want_m[i][j];
        }
    }
    return {t.all_match() && mismatches == 0, fmt("32 cells, %zu mismatches", mismatches)};
}

Outcome motivating_identities() {
    MomentData d = model_moment_data(reference_example_spec());
    Polynomial abab = parse_polynomial("a1 b1 a1 b1");
    Polynomial abba = parse_polynomial("a1 b1 b1 a1");
    double err = 0;
    for (complex v : {moment(abab, d, MomentKind::Cyclic), moment_via_chi(abab, d, MomentKind::Cyclic)}) {
        err = std::max(err, std::abs(v));
    }
    for (complex v : {moment(abba, d, MomentKind::Cyclic), moment_via_chi(abba, d, MomentKind::Cyclic)}) {
        err = std::max(err, std::abs(v - 21.0 / 64));
    }
    return {err <= 1e-12, fmt("abab -> 0, abba -> 21/64, max error %.3g", err)};
}

Outcome limit_swap() {
    ModelSpec spec = reference_example_spec();
    std::vector<size_t> n_list{3, 6, 12};
    std::vector<size_t> l_list;
    for (size_t l = 1; l <= 12 * 2; l++) {
        l_list.push_back(l);
    }
    LimitSweep sweep = limit_sweep(spec, 2, n_list, l_list, 1e-12);
    double ec = std::abs(sweep.cyclic_limit - 21.0 / 32);
    double em = std::abs(sweep.monotone_limit - 21.0 / 64);
    bool ok = sweep.passed() && ec <= 1e-12 && em <= 1e-12;
    return {ok, fmt("cyclic limit error %.3g, monotone limit error %.3g", ec, em)};
}

Outcome haar_rate() {
    RandomModelSpec spec = RandomModelSpec::reference({64, 128, 256}, 400, 1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto reports = mc_estimate(spec, threads);
    double c_rate = calibrate_rate_constant(reports);
    bool model_ok = true;
    for (const auto &r : reports) {
        model_ok = model_ok && within_error_model(r, c_rate);
    }
    RateFit fit = rate_check(reports, -1.6, -0.7);
    bool ok = model_ok && fit.passed;
    std::string detail = fmt("error model %s, C_rate %.4g, ", model_ok ? "holds" : "violated", c_rate);
    detail += fmt("slope %.4f (band %.4f .. %.4f)", fit.slope, fit.ci_low, fit.ci_high);
    return {ok, detail};
}

Outcome structural_exactness() {
    size_t patterns = 0;
    for (uint32_t q = 0; q <= 3; q++) {
        ModelSpec spec;
        spec.n = 2;
        spec.q = q;
        spec.a_matrices = {Matrix::identity(2)};
        spec.poly = parse_polynomial("a1");
        TensorModel m = build_model(spec);
        for (uint32_t i = 0; i <= q; i++) {
            if (m.b_tilde[i] * m.b_tilde[i] != Matrix::identity(m.dim)) {
                return {false, fmt("b%u squared is not the identity", i)};
            }
            for (uint32_t j = 0; j <= q; j++) {
                if (m.b_tilde[i] * m.b_tilde[j] != m.b_tilde[j] * m.b_tilde[i]) {
                    return {false, "generators do not commute"};
                }
            }
        }
    }
    for (uint32_t q = 1; q <= 3; q++) {
        Matrix e = kron_power(corner_matrix(), q);
        for (uint32_t k = 1; k <= 3; k++) {
            size_t len = 2 * k;
            std::vector<uint32_t> idx(len, 0);
            while (true) {
                Matrix prod = Matrix::identity(size_t{1} << q);
                for (size_t s = 0; s < k; s++) {
                    prod = prod * flip_generator(idx[2 * s], q) * e * flip_generator(idx[2 * s + 1], q);
                }
                bool paired = idx[len - 1] == idx[0];
                for (size_t s = 1; s + 1 < len; s += 2) {
                    paired = paired && idx[s] == idx[s + 1];
                }
                if (trace(prod) != complex(paired ? 1 : 0)) {
                    return {false, "pairing pattern mismatch"};
                }
                patterns++;
                size_t pos = len;
                while (pos > 0 && idx[pos - 1] == q) {
                    idx[pos - 1] = 0;
                    pos--;
                }
                if (pos == 0) {
                    break;
                }
                idx[pos - 1]++;
            }
        }
    }
    return {true, fmt("involutions and commutation exact for q <= 3; %zu index patterns checked", patterns)};
}

struct Criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "example spectra", 1, example_spectra},
        {2, "cyclic moments vs full trace", 60, [] { return suite_equivalence(false); }},
        {3, "monotone moments vs corner state", 60, [] { return suite_equivalence(true); }},
        {4, "quotient route and kernel", 0, quotient_route},
        {5, "sign tables", 0, sign_patterns},
        {6, "abab and abba", 0, motivating_identities},
        {7, "iterated limits", 5, limit_swap},
        {8, "haar expectation rate", 300, haar_rate},
        {9, "structural exactness", 0, structural_exactness},
    };
    // Build the shared random suite outside the timed sections.
    suite();
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.budget_seconds == 0 || seconds < c.budget_seconds;
        if (!in_time) {
            o.detail += fmt("; over the %g s budget", c.budget_seconds);
        }
        bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %d %s: %s [%.3f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

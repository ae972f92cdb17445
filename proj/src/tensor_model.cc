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

#include "monomat/tensor_model.h"

#include <algorithm>
#include <stdexcept>

namespace monomat {

Matrix swap_matrix() {
    return Matrix{{0, 1}, {1, 0}};
}

Matrix corner_matrix() {
    return Matrix{{1, 0}, {0, 0}};
}

Matrix kron_power(const Matrix &m, uint32_t count) {
    Matrix acc = Matrix::identity(1);
    for (uint32_t k = 0; k < count; k++) {
        acc = kron(acc, m);
    }
    return acc;
}

Matrix flip_generator(uint32_t j, uint32_t q) {
    if (j > q) {
        throw std::out_of_range("flip_generator: slot exceeds q");
    }
    Matrix acc = Matrix::identity(1);
    Matrix id2 = Matrix::identity(2);
    Matrix flip = swap_matrix();
    for (uint32_t slot = 1; slot <= q; slot++) {
        acc = kron(acc, slot == j ? flip : id2);
    }
    return acc;
}

size_t TensorModel::corner_first_index(size_t d) const {
    size_t t = d / n;
    size_t i = d % n;
    return i * (size_t{1} << q) + t;
}

TensorModel build_model(const ModelSpec &spec) {
    if (spec.n == 0) {
        throw std::invalid_argument("build_model: n must be positive");
    }
    if (spec.q >= 24) {
        throw std::invalid_argument("build_model: q too large");
    }
    size_t block = size_t{1} << spec.q;
    size_t dim = spec.n * block;
    if (dim > spec.dimension_cap) {
        throw std::length_error(
            "build_model: model dimension " + std::to_string(dim) + " exceeds cap " +
            std::to_string(spec.dimension_cap));
    }
    if (spec.poly.max_a_index() > spec.a_matrices.size()) {
        throw std::out_of_range("build_model: polynomial uses an A generator without a matrix");
    }
    if (spec.poly.max_b_index() > spec.q) {
        throw std::out_of_range("build_model: polynomial uses a B generator beyond q");
    }

    TensorModel model;
    model.n = spec.n;
    model.q = spec.q;
    model.dim = dim;
    Matrix corner = kron_power(corner_matrix(), spec.q);
    for (const auto &a : spec.a_matrices) {
        if (!a.is_square() || a.rows() > spec.n) {
            throw std::invalid_argument("build_model: A matrices must be square with size at most n");
        }
        model.phi_a.push_back(kron(embed_top_corner(a, spec.n), corner));
    }
    Matrix id_n = Matrix::identity(spec.n);
    for (uint32_t j = 0; j <= spec.q; j++) {
        model.b_tilde.push_back(kron(id_n, flip_generator(j, spec.q)));
    }
    model.p_tilde = evaluate_polynomial(model, spec.poly);
    return model;
}

Matrix evaluate_polynomial(const TensorModel &model, const Polynomial &p) {
    Matrix out(model.dim, model.dim);
    for (const auto &[w, c] : p.terms()) {
        if (w.empty()) {
            out += Matrix::identity(model.dim) * c;
            continue;
        }
        // Multiply right to left so the sparse generator is always the left
        // operand of matmul.
        auto letter_matrix = [&](const Letter &l) -> const Matrix & {
            if (l.is_a()) {
                if (l.index > model.phi_a.size()) {
                    throw std::out_of_range("evaluate_polynomial: A index out of range");
                }
                return model.phi_a[l.index - 1];
            }
            if (l.index > model.q) {
                throw std::out_of_range("evaluate_polynomial: B index out of range");
            }
            // The realized state gives every b_j (j >= 1) mean zero, so the
            // centered letter coincides with the plain one.
            return model.b_tilde[l.index];
        };
        Matrix acc = letter_matrix(w.back());
        for (size_t k = w.size() - 1; k-- > 0;) {
            acc = matmul(letter_matrix(w[k]), acc);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

StateKind StateKind::parse(const std::string &text) {
    if (text == "full") {
        return full_trace();
    }
    if (text == "monotone") {
        return monotone_state();
    }
    const std::string prefix = "partial:";
    if (text.rfind(prefix, 0) == 0) {
        std::string rest = text.substr(prefix.size());
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) {
            throw std::invalid_argument("state: malformed partial trace length '" + rest + "'");
        }
        return partial_trace(std::stoul(rest));
    }
    throw std::invalid_argument("state must be full, monotone or partial:<l>, got '" + text + "'");
}

Matrix model_power(const TensorModel &model, unsigned k) {
    if (k == 0 || k > kMaxPower) {
        throw std::out_of_range("model_power: k must be in 1.." + std::to_string(kMaxPower));
    }
    Matrix acc = model.p_tilde;
    for (unsigned i = 1; i < k; i++) {
        acc = matmul(acc, model.p_tilde);
    }
    return acc;
}

complex apply_state(const TensorModel &model, const Matrix &power, StateKind state) {
    switch (state.kind) {
        case StateKind::Kind::FullTrace:
            return trace(power);
        case StateKind::Kind::MonotoneState: {
            size_t block = size_t{1} << model.q;
            complex acc = 0;
            for (size_t i = 0; i < model.n; i++) {
                acc += power(i * block, i * block);
            }
            return acc;
        }
        case StateKind::Kind::PartialTrace: {
            if (state.l > model.dim) {
                throw std::out_of_range("partial trace length exceeds model dimension");
            }
            complex acc = 0;
            for (size_t d = 0; d < state.l; d++) {
                size_t idx = model.corner_first_index(d);
                acc += power(idx, idx);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

complex evaluate_state(const TensorModel &model, unsigned k, StateKind state) {
    return apply_state(model, model_power(model, k), state);
}

bool VerifyReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow &r) {
        return r.pass;
    });
}

double VerifyReport::max_residual() const {
    double best = 0;
    for (const auto &r : rows) {
        best = std::max(best, r.residual);
    }
    return best;
}

namespace {

VerifyReport verify(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol, MomentKind kind) {
    if (k_max == 0 || k_max > kMaxPower) {
        throw std::out_of_range("verify: k_max must be in 1.." + std::to_string(kMaxPower));
    }
    TensorModel model = build_model(spec);
    StateKind state = kind == MomentKind::Cyclic ? StateKind::full_trace() : StateKind::monotone_state();
    VerifyReport report;
    report.tolerance = tol;
    Polynomial power = spec.poly;
    Matrix matrix_power = model.p_tilde;
    for (unsigned k = 1; k <= k_max; k++) {
        if (k > 1) {
            power = poly_mul(power, spec.poly);
            matrix_power = matmul(matrix_power, model.p_tilde);
        }
        VerifyRow row;
        row.k = k;
        row.symbolic = moment(power, data, kind);
        row.matrix = apply_state(model, matrix_power, state);
        row.residual = std::abs(row.symbolic - row.matrix);
        row.pass = row.residual <= tol * (1 + std::abs(row.matrix));
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace

VerifyReport verify_cyclic(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol) {
    return verify(spec, data, k_max, tol, MomentKind::Cyclic);
}

VerifyReport verify_monotone(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol) {
    return verify(spec, data, k_max, tol, MomentKind::Monotone);
}

MomentData model_moment_data(const ModelSpec &spec) {
    size_t dim = 0;
    for (const auto &a : spec.a_matrices) {
        dim = std::max(dim, a.rows());
    }
    std::vector<Matrix> padded;
    for (const auto &a : spec.a_matrices) {
        padded.push_back(embed_top_corner(a, dim));
    }
    return MomentData{OmegaZero::from_matrices(std::move(padded)), TauTable::commuting_involutions(spec.q)};
}

LimitSweep limit_sweep(
    const ModelSpec &spec, unsigned k, const std::vector<size_t> &n_list, const std::vector<size_t> &l_list, double tol) {
    if (n_list.empty() || l_list.empty()) {
        throw std::invalid_argument("limit_sweep: empty grid");
    }
    std::vector<size_t> ns = n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<size_t> ls = l_list;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    LimitSweep sweep;
    sweep.n_list = ns;
    for (const auto &a : spec.a_matrices) {
        sweep.corner_threshold = std::max(sweep.corner_threshold, a.rows());
    }

    // value[n_idx][l_idx]
    std::vector<std::vector<complex>> value(ns.size(), std::vector<complex>(ls.size()));
    bool cyclic_ok = true;
    for (size_t ni = 0; ni < ns.size(); ni++) {
        ModelSpec s = spec;
        s.n = ns[ni];
        TensorModel model = build_model(s);
        Matrix power = model_power(model, k);
        complex full = apply_state(model, power, StateKind::full_trace());
        sweep.full_trace.push_back(full);
        sweep.monotone_state.push_back(apply_state(model, power, StateKind::monotone_state()));
        if (std::abs(apply_state(model, power, StateKind::partial_trace(model.dim)) - full) > tol) {
            cyclic_ok = false;
        }
        for (size_t li = 0; li < ls.size(); li++) {
            size_t l = std::min(ls[li], model.dim);
            value[ni][li] = apply_state(model, power, StateKind::partial_trace(l));
            sweep.rows.push_back(LimitRow{ns[ni], ls[li], value[ni][li]});
            if (ls[li] >= model.dim && std::abs(value[ni][li] - full) > tol) {
                cyclic_ok = false;
            }
        }
    }

    // lim_n lim_l: the full trace must not depend on n.
    for (size_t ni = 1; ni < ns.size(); ni++) {
        if (std::abs(sweep.full_trace[ni] - sweep.full_trace[0]) > tol) {
            cyclic_ok = false;
        }
    }
    sweep.cyclic_limit = sweep.full_trace.back();
    sweep.cyclic_stable = cyclic_ok;

    // lim_l lim_n: for fixed l the value is constant over n >= l, and once l
    // passes the size of the A matrices it equals the corner functional.
    bool monotone_ok = true;
    bool saw_limit_window = false;
    size_t n_max = ns.back();
    for (size_t li = 0; li < ls.size(); li++) {
        size_t l = ls[li];
        if (l > n_max) {
            continue;
        }
        complex reference = value.back()[li];
        for (size_t ni = 0; ni < ns.size(); ni++) {
            if (ns[ni] >= l && std::abs(value[ni][li] - reference) > tol) {
                monotone_ok = false;
            }
        }
        if (l >= sweep.corner_threshold) {
            saw_limit_window = true;
            sweep.monotone_limit = reference;
            if (std::abs(reference - sweep.monotone_state.back()) > tol) {
                monotone_ok = false;
            }
        }
    }
    for (size_t ni = 1; ni < ns.size(); ni++) {
        if (std::abs(sweep.monotone_state[ni] - sweep.monotone_state[0]) > tol) {
            monotone_ok = false;
        }
    }
    sweep.monotone_stable = monotone_ok && saw_limit_window;
    return sweep;
}

ExampleSpectra example_eigenvalues(const Matrix &a, size_t n) {
    ModelSpec spec;
    spec.n = n;
    spec.q = 1;
    spec.a_matrices = {a};
    ExampleSpectra out;
    spec.poly = parse_polynomial("a1 + b1 a1 b1");
    out.x = hermitian_eigenvalues(build_model(spec).p_tilde);
    spec.poly = parse_polynomial("a1 b1 + b1 a1");
    out.y = hermitian_eigenvalues(build_model(spec).p_tilde);
    return out;
}

ModelSpec reference_example_spec(const std::string &poly) {
    ModelSpec spec;
    spec.n = 3;
    spec.q = 1;
    std::vector<double> diag = {0.5, 0.25, 0.125};
    spec.a_matrices = {Matrix::diagonal(std::span<const double>(diag))};
    spec.poly = parse_polynomial(poly);
    return spec;
}

}  // namespace monomat

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

#include "monomat/haar.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace monomat {

Matrix sample_haar_unitary(size_t n, RandomStream &stream) {
    if (n == 0) {
        throw std::invalid_argument("sample_haar_unitary: n must be positive");
    }
    std::vector<complex> entries(n * n);
    for (auto &z : entries) {
        z = stream.complex_gaussian();
    }
    return qr_unitary(Matrix(n, n, std::move(entries)));
}

WordPattern WordPattern::parse(const std::string &text) {
    struct Token {
        char letter;
        uint32_t index;
    };
    std::vector<Token> tokens;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            pos++;
            continue;
        }
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (letter != 'A' && letter != 'B') {
            throw std::invalid_argument(
                "word pattern: unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos));
        }
        pos++;
        size_t start = pos;
        uint64_t index = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            index = index * 10 + static_cast<uint64_t>(text[pos] - '0');
            if (index > 0xFFFFFFFFull) {
                throw std::invalid_argument("word pattern: index too large");
            }
            pos++;
        }
        if (pos == start) {
            index = 1;
        }
        if (letter == 'A' && index == 0) {
            throw std::invalid_argument("word pattern: A indices start at 1");
        }
        tokens.push_back({letter, static_cast<uint32_t>(index)});
    }

    WordPattern out;
    size_t t = 0;
    if (t < tokens.size() && tokens[t].letter == 'B') {
        out.leading_b = tokens[t].index;
        t++;
    }
    while (t < tokens.size()) {
        if (tokens[t].letter != 'A') {
            throw std::invalid_argument("word pattern: letters must alternate");
        }
        out.a_indices.push_back(tokens[t].index);
        t++;
        if (t < tokens.size()) {
            if (tokens[t].letter != 'B') {
                throw std::invalid_argument("word pattern: letters must alternate");
            }
            out.b_indices.push_back(tokens[t].index);
            t++;
        } else {
            out.b_indices.push_back(0);
        }
    }
    if (out.a_indices.empty()) {
        throw std::invalid_argument("word pattern: needs at least one A letter");
    }
    return out;
}

std::string WordPattern::str() const {
    std::string out;
    auto put = [&](char letter, uint32_t index) {
        if (!out.empty()) {
            out += ' ';
        }
        out += letter;
        out += std::to_string(index);
    };
    if (leading_b) {
        put('B', *leading_b);
    }
    for (size_t k = 0; k < a_indices.size(); k++) {
        put('A', a_indices[k]);
        if (b_indices[k] != 0 || k + 1 < a_indices.size()) {
            put('B', b_indices[k]);
        }
    }
    return out;
}

size_t TraceLength::resolve(size_t n) const {
    switch (rule) {
        case Rule::Fixed:
            return fixed;
        case Rule::Full:
            return n;
        case Rule::Half:
            return n / 2;
    }
    return n;
}

TraceLength TraceLength::parse(const std::string &text) {
    if (text == "full") {
        return {Rule::Full, 0};
    }
    if (text == "n/2") {
        return {Rule::Half, 0};
    }
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        throw std::invalid_argument("trace length: expected <int>, full or n/2, got '" + text + "'");
    }
    return {Rule::Fixed, static_cast<size_t>(std::stoull(text))};
}

std::string TraceLength::str() const {
    switch (rule) {
        case Rule::Fixed:
            return std::to_string(fixed);
        case Rule::Full:
            return "full";
        case Rule::Half:
            return "n/2";
    }
    return "full";
}

RandomModelSpec RandomModelSpec::reference(const std::vector<size_t> &n_list, size_t trials, uint64_t seed) {
    RandomModelSpec spec;
    spec.word = WordPattern::parse("ABAB");
    std::vector<double> a = {0.5, 0.25, 0.125};
    spec.a_family.push_back(Matrix::diagonal(std::span<const double>(a)));
    spec.b_family.push_back({1.0, -1.0});
    spec.n_list = n_list;
    spec.l = {TraceLength::Rule::Full, 0};
    spec.trials = trials;
    spec.seed = seed;
    return spec;
}

Matrix realize_a(const RandomModelSpec &spec, uint32_t i, size_t n) {
    if (i == 0 || i > spec.a_family.size()) {
        throw std::out_of_range("A index " + std::to_string(i) + " has no matrix in the family");
    }
    return embed_top_corner(spec.a_family[i - 1], n);
}

std::vector<double> realize_b_diagonal(const RandomModelSpec &spec, uint32_t j, size_t n) {
    std::vector<double> out(n, 1.0);
    if (j == 0) {
        return out;
    }
    if (j > spec.b_family.size()) {
        throw std::out_of_range("B index " + std::to_string(j) + " has no pattern in the family");
    }
    const auto &pattern = spec.b_family[j - 1];
    if (pattern.empty()) {
        throw std::invalid_argument("B pattern is empty");
    }
    for (size_t k = 0; k < n; k++) {
        out[k] = pattern[k % pattern.size()];
    }
    return out;
}

namespace {

double normalized_trace(const std::vector<double> &d) {
    double sum = 0;
    for (double x : d) {
        sum += x;
    }
    return sum / static_cast<double>(d.size());
}

// Corner-sized product of A_{i_a} ... A_{i_b}; the padding is zero, so the
// trace over M_n only sees the corner.
Matrix corner_product(const RandomModelSpec &spec, size_t from, size_t to) {
    size_t dim = 0;
    for (const auto &a : spec.a_family) {
        dim = std::max(dim, a.rows());
    }
    Matrix out = Matrix::identity(dim);
    for (size_t k = from; k < to; k++) {
        uint32_t i = spec.word.a_indices[k];
        if (i == 0 || i > spec.a_family.size()) {
            throw std::out_of_range("A index " + std::to_string(i) + " has no matrix in the family");
        }
        out = out * embed_top_corner(spec.a_family[i - 1], dim);
    }
    return out;
}

}  // namespace

void check_bounds(const RandomModelSpec &spec, size_t n) {
    const auto &w = spec.word;
    size_t m = w.length();
    for (size_t from = 0; from < m; from++) {
        for (size_t to = from + 1; to <= m; to++) {
            complex t = trace(corner_product(spec, from, to));
            if (std::abs(t) > spec.bound_c) {
                throw std::domain_error("A product over word positions exceeds the configured bound");
            }
            std::vector<double> d(n, 1.0);
            for (size_t k = from; k < to; k++) {
                auto b = realize_b_diagonal(spec, w.b_indices[k], n);
                for (size_t r = 0; r < n; r++) {
                    d[r] *= b[r];
                }
            }
            if (std::abs(normalized_trace(d)) > spec.bound_c) {
                throw std::domain_error("B product over word positions exceeds the configured bound");
            }
        }
    }
}

complex word_value(const RandomModelSpec &spec, size_t n, size_t l, const Matrix &unitary) {
    if (unitary.rows() != n || unitary.cols() != n) {
        throw std::invalid_argument("word_value: unitary dimension does not match n");
    }
    if (l > n) {
        throw std::invalid_argument("word_value: l exceeds n");
    }
    if (l == 0) {
        return 0;
    }
    const auto &w = spec.word;
    Matrix u_star = unitary.adjoint();

    // Factors in order. B_j enters as U diag(b) U*; the identity B is skipped.
    struct Factor {
        bool is_a;
        uint32_t index;
    };
    std::vector<Factor> factors;
    if (w.leading_b && *w.leading_b != 0) {
        factors.push_back({false, *w.leading_b});
    }
    for (size_t k = 0; k < w.length(); k++) {
        factors.push_back({true, w.a_indices[k]});
        if (w.b_indices[k] != 0) {
            factors.push_back({false, w.b_indices[k]});
        }
    }

    // Only the first l rows of the product reach the partial trace.
    std::vector<complex> first(l * n);
    for (size_t r = 0; r < l; r++) {
        first[r * n + r] = 1;
    }
    Matrix rows(l, n, std::move(first));
    for (size_t f = 0; f < factors.size(); f++) {
        bool last = f + 1 == factors.size();
        const Factor &factor = factors[f];
        if (factor.is_a) {
            Matrix a = realize_a(spec, factor.index, n);
            if (last) {
                complex sum = 0;
                for (size_t r = 0; r < l; r++) {
                    for (size_t k = 0; k < n; k++) {
                        sum += rows(r, k) * a(k, r);
                    }
                }
                return sum;
            }
            rows = rows * a;
            continue;
        }
        auto d = realize_b_diagonal(spec, factor.index, n);
        rows = rows * unitary;
        for (size_t r = 0; r < l; r++) {
            auto row = rows.row(r);
            for (size_t k = 0; k < n; k++) {
                row[k] *= d[k];
            }
        }
        if (last) {
            complex sum = 0;
            for (size_t r = 0; r < l; r++) {
                for (size_t k = 0; k < n; k++) {
                    sum += rows(r, k) * u_star(k, r);
                }
            }
            return sum;
        }
        rows = rows * u_star;
    }
    return 0;
}

complex factorized_target(const RandomModelSpec &spec, size_t n, size_t l) {
    if (l > n) {
        throw std::invalid_argument("factorized_target: l exceeds n");
    }
    const auto &w = spec.word;
    Matrix a = corner_product(spec, 0, w.length());
    complex head = leading_trace(embed_top_corner(a, std::max(n, a.rows())), l);
    complex factor = 1;
    if (w.leading_b && spec.keep_leading_b) {
        factor *= normalized_trace(realize_b_diagonal(spec, *w.leading_b, n));
    }
    for (uint32_t j : w.b_indices) {
        factor *= normalized_trace(realize_b_diagonal(spec, j, n));
    }
    return head * factor;
}

complex cyclic_target(const RandomModelSpec &spec, size_t n) {
    const auto &w = spec.word;
    complex head = trace(corner_product(spec, 0, w.length()));
    complex factor = 1;
    size_t m = w.length();
    for (size_t k = 0; k + 1 < m; k++) {
        factor *= normalized_trace(realize_b_diagonal(spec, w.b_indices[k], n));
    }
    auto tail = realize_b_diagonal(spec, w.b_indices[m - 1], n);
    auto lead = realize_b_diagonal(spec, w.leading_b.value_or(0), n);
    for (size_t r = 0; r < n; r++) {
        tail[r] *= lead[r];
    }
    return head * factor * normalized_trace(tail);
}

std::vector<TrialReport> mc_estimate(const RandomModelSpec &spec, unsigned threads) {
    if (spec.trials == 0) {
        throw std::invalid_argument("mc_estimate: trials must be positive");
    }
    threads = std::max(1u, threads);
    std::vector<TrialReport> reports;
    for (size_t n : spec.n_list) {
        check_bounds(spec, n);
        TrialReport report;
        report.n = n;
        report.l = spec.l.resolve(n);
        if (report.l > n) {
            throw std::invalid_argument("mc_estimate: l exceeds n = " + std::to_string(n));
        }
        report.values.assign(spec.trials, complex{});

        auto work = [&](unsigned worker) {
            for (size_t t = worker; t < spec.trials; t += threads) {
                Matrix u;
                if (spec.identity_unitary) {
                    u = Matrix::identity(n);
                } else {
                    RandomStream stream(spec.seed, trial_stream_id(n, t));
                    u = sample_haar_unitary(n, stream);
                }
                report.values[t] = word_value(spec, n, report.l, u);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < threads; w++) {
                pool.emplace_back(work, w);
            }
            for (auto &th : pool) {
                th.join();
            }
        }

        complex sum = 0;
        for (const auto &v : report.values) {
            sum += v;
        }
        double count = static_cast<double>(spec.trials);
        report.mean = sum / count;
        double spread = 0;
        for (const auto &v : report.values) {
            spread += std::norm(v - report.mean);
        }
        report.std_error = spec.trials > 1 ? std::sqrt(spread / (count - 1) / count) : 0.0;
        report.target = factorized_target(spec, n, report.l);
        report.cyclic_target = cyclic_target(spec, n);
        report.abs_error = std::abs(report.mean - report.target);
        double dev = 0;
        for (const auto &v : report.values) {
            dev += std::abs(v - report.target);
        }
        report.mean_abs_deviation = dev / count;
        reports.push_back(std::move(report));
    }
    return reports;
}

namespace {

struct LineFit {
    double slope;
    double intercept;
};

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    double mx = 0, my = 0;
    for (size_t k = 0; k < x.size(); k++) {
        mx += x[k];
        my += y[k];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxx = 0, sxy = 0;
    for (size_t k = 0; k < x.size(); k++) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

double percentile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    double pos = p * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(pos));
    size_t hi = std::min(lo + 1, v.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return v[lo] * (1 - frac) + v[hi] * frac;
}

}  // namespace

RateFit rate_check(
    const std::vector<TrialReport> &reports, double slope_min, double slope_max, size_t resamples, uint64_t seed) {
    std::vector<double> distinct;
    for (const auto &r : reports) {
        distinct.push_back(static_cast<double>(r.n));
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        throw std::invalid_argument("rate_check: needs at least 3 distinct dimensions");
    }

    RateFit fit;
    fit.slope_min = slope_min;
    fit.slope_max = slope_max;
    std::vector<double> lx, ly;
    for (const auto &r : reports) {
        fit.n.push_back(static_cast<double>(r.n));
        fit.deviation.push_back(r.mean_abs_deviation);
        if (!(r.mean_abs_deviation > 0) || !std::isfinite(r.mean_abs_deviation)) {
            fit.degenerate = true;
        }
        lx.push_back(std::log(static_cast<double>(r.n)));
        ly.push_back(std::log(r.mean_abs_deviation));
    }
    if (fit.degenerate) {
        fit.slope = fit.intercept = fit.ci_low = fit.ci_high = std::nan("");
        fit.passed = false;
        return fit;
    }
    LineFit base = fit_line(lx, ly);
    fit.slope = base.slope;
    fit.intercept = base.intercept;

    RandomStream stream(seed, 0);
    std::vector<double> slopes;
    slopes.reserve(resamples);
    for (size_t s = 0; s < resamples; s++) {
        std::vector<double> by;
        bool ok = true;
        for (const auto &r : reports) {
            size_t count = r.values.size();
            double dev = 0;
            for (size_t t = 0; t < count; t++) {
                dev += std::abs(r.values[stream.next_u64() % count] - r.target);
            }
            dev /= static_cast<double>(count);
            if (!(dev > 0)) {
                ok = false;
            }
            by.push_back(std::log(dev));
        }
        if (ok) {
            slopes.push_back(fit_line(lx, by).slope);
        }
    }
    if (slopes.empty()) {
        fit.ci_low = fit.ci_high = fit.slope;
    } else {
        fit.ci_low = percentile(slopes, 0.025);
        fit.ci_high = percentile(slopes, 0.975);
    }
    fit.passed = fit.slope >= slope_min && fit.slope <= slope_max;
    return fit;
}

double calibrate_rate_constant(const std::vector<TrialReport> &reports) {
    if (reports.empty()) {
        throw std::invalid_argument("calibrate_rate_constant: no reports");
    }
    const TrialReport *smallest = &reports.front();
    for (const auto &r : reports) {
        if (r.n < smallest->n) {
            smallest = &r;
        }
    }
    return static_cast<double>(smallest->n) * smallest->abs_error;
}

bool within_error_model(const TrialReport &report, double c_rate) {
    // The relative slack absorbs rounding in c_rate / n at the calibration point.
    double bound = 3 * report.std_error + c_rate / static_cast<double>(report.n);
    return report.abs_error <= bound * (1 + 1e-12);
}

}  // namespace monomat

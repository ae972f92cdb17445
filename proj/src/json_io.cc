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

#include "monomat/json_io.h"

#include <fstream>
#include <sstream>

namespace monomat {

namespace {

[[noreturn]] void fail(const std::string &message) {
    throw InputError(message);
}

const Json &require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double as_real(const Json &j, const char *what) {
    if (!j.is_number()) {
        fail(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

uint64_t as_count(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<int64_t>() < 0) {
        fail(std::string(what) + ": expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

std::vector<double> real_list(const Json &j, const char *what) {
    if (!j.is_array()) {
        fail(std::string(what) + ": expected a list of numbers");
    }
    std::vector<double> out;
    for (const auto &x : j) {
        out.push_back(as_real(x, what));
    }
    return out;
}

BRun parse_tau_key(const std::string &key) {
    BRun out;
    if (key.find(',') != std::string::npos) {
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
                fail("tau key \"" + key + "\" is not an index tuple");
            }
            out.push_back(static_cast<uint32_t>(std::stoul(part)));
        }
        return out;
    }
    for (char c : key) {
        if (c < '0' || c > '9') {
            fail("tau key \"" + key + "\" is not an index tuple");
        }
        out.push_back(static_cast<uint32_t>(c - '0'));
    }
    return out;
}

}  // namespace

Json parse_json_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_object() && j.contains("re")) {
        double im = j.contains("im") ? as_real(j.at("im"), "im") : 0.0;
        return {as_real(j.at("re"), "re"), im};
    }
    fail("expected a number, [re, im] or {\"re\",\"im\"}");
}

Json complex_to_json(complex z) {
    return Json::array({z.real(), z.imag()});
}

Matrix matrix_from_json(const Json &j) {
    if (j.is_object() && j.contains("diag")) {
        auto d = real_list(j.at("diag"), "diag");
        return Matrix::diagonal(std::span<const double>(d));
    }
    if (j.is_object()) {
        size_t rows = as_count(require(j, "rows"), "rows");
        size_t cols = as_count(require(j, "cols"), "cols");
        auto re = real_list(require(j, "re"), "re");
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("im")) {
            im = real_list(j.at("im"), "im");
        }
        if (re.size() != rows * cols || im.size() != rows * cols) {
            fail("matrix data length does not match rows * cols");
        }
        std::vector<complex> entries(rows * cols);
        for (size_t k = 0; k < entries.size(); k++) {
            entries[k] = {re[k], im[k]};
        }
        return Matrix(rows, cols, std::move(entries));
    }
    if (j.is_array()) {
        size_t rows = j.size();
        size_t cols = rows == 0 ? 0 : j[0].size();
        std::vector<complex> entries;
        for (const auto &row : j) {
            if (!row.is_array() || row.size() != cols) {
                fail("nested matrix rows must be lists of equal length");
            }
            for (const auto &x : row) {
                entries.push_back(complex_from_json(x));
            }
        }
        return Matrix(rows, cols, std::move(entries));
    }
    fail("expected a matrix object or a nested list");
}

Json matrix_to_json(const Matrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (const auto &z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Polynomial polynomial_from_json(const Json &j) {
    if (j.is_string()) {
        try {
            return parse_polynomial(j.get<std::string>());
        } catch (const InputError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
    }
    if (!j.is_array()) {
        fail("polynomial: expected a string or a list of terms");
    }
    Polynomial p;
    for (const auto &term : j) {
        complex c = term.contains("coeff") ? complex_from_json(term.at("coeff")) : complex(1);
        Word w;
        const Json &letters = require(term, "word");
        if (!letters.is_array()) {
            fail("polynomial: \"word\" must be a list");
        }
        for (const auto &l : letters) {
            if (!l.is_array() || l.size() != 2 || !l[0].is_string()) {
                fail("polynomial: letters are [\"A\"|\"B\"|\"C\", index]");
            }
            auto kind = l[0].get<std::string>();
            auto index = static_cast<uint32_t>(as_count(l[1], "letter index"));
            if (kind == "A") {
                if (index == 0) {
                    fail("polynomial: A indices start at 1");
                }
                w.push_back(Letter::a(index));
            } else if (kind == "B") {
                w.push_back(Letter::b(index));
            } else if (kind == "C") {
                if (index == 0) {
                    fail("polynomial: centered letters need an index >= 1");
                }
                w.push_back(Letter::centered_b(index));
            } else {
                fail("polynomial: unknown letter kind \"" + kind + "\"");
            }
        }
        p.add_term(std::move(w), c);
    }
    return p;
}

Json polynomial_to_json(const Polynomial &p) {
    Json out = Json::array();
    for (const auto &[word, c] : p.terms()) {
        Json letters = Json::array();
        for (const auto &l : word) {
            const char *kind = l.is_a() ? "A" : (l.centered ? "C" : "B");
            letters.push_back(Json::array({kind, l.index}));
        }
        out.push_back({{"coeff", complex_to_json(c)}, {"word", letters}});
    }
    return out;
}

TauTable tau_from_json(const Json &j, uint32_t q_hint) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (name == "orthonormal") {
            return TauTable::orthonormal(q_hint);
        }
        if (name == "involutions") {
            return TauTable::commuting_involutions(q_hint);
        }
        fail("tau: unknown table name \"" + name + "\"");
    }
    if (!j.is_object()) {
        fail("tau: expected an object or a table name");
    }
    TauTable tau;
    for (const auto &[key, value] : j.items()) {
        try {
            tau.set(parse_tau_key(key), complex_from_json(value));
        } catch (const InputError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            fail(std::string("tau: ") + e.what());
        }
    }
    return tau;
}

Json tau_to_json(const TauTable &tau) {
    Json out = Json::object();
    for (const auto &[word, value] : tau.stored()) {
        std::string key;
        for (size_t k = 0; k < word.size(); k++) {
            if (k) {
                key += ',';
            }
            key += std::to_string(word[k]);
        }
        out[key] = complex_to_json(value);
    }
    return out;
}

MomentData moment_data_from_json(const Json &j) {
    if (!j.is_object()) {
        fail("moment data: expected an object");
    }
    MomentData data;
    try {
        if (j.contains("eigenvalues")) {
            data.omega0 = OmegaZero::from_eigenvalues(real_list(j.at("eigenvalues"), "eigenvalues"));
        } else if (j.contains("a_matrices")) {
            std::vector<Matrix> ms;
            for (const auto &m : require(j, "a_matrices")) {
                ms.push_back(matrix_from_json(m));
            }
            data.omega0 = OmegaZero::from_matrices(std::move(ms));
        } else {
            fail("moment data: needs \"eigenvalues\" or \"a_matrices\"");
        }
    } catch (const InputError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        fail(std::string("moment data: ") + e.what());
    }
    uint32_t q = j.contains("q") ? static_cast<uint32_t>(as_count(j.at("q"), "q")) : 1;
    data.tau = j.contains("tau") ? tau_from_json(j.at("tau"), q) : TauTable::commuting_involutions(q);
    return data;
}

ModelSpec model_spec_from_json(const Json &j) {
    if (!j.is_object()) {
        fail("model spec: expected an object");
    }
    ModelSpec spec;
    spec.n = as_count(require(j, "n"), "n");
    spec.q = static_cast<uint32_t>(as_count(require(j, "q"), "q"));
    if (j.contains("a_matrices")) {
        for (const auto &m : j.at("a_matrices")) {
            spec.a_matrices.push_back(matrix_from_json(m));
        }
    } else if (j.contains("a_diagonals")) {
        for (const auto &d : j.at("a_diagonals")) {
            auto values = real_list(d, "a_diagonals");
            spec.a_matrices.push_back(Matrix::diagonal(std::span<const double>(values)));
        }
    } else {
        fail("model spec: needs \"a_matrices\" or \"a_diagonals\"");
    }
    spec.poly = polynomial_from_json(require(j, "poly"));
    if (j.contains("dim_cap")) {
        spec.dimension_cap = as_count(j.at("dim_cap"), "dim_cap");
    }
    return spec;
}

Json model_spec_to_json(const ModelSpec &spec) {
    Json a = Json::array();
    for (const auto &m : spec.a_matrices) {
        a.push_back(matrix_to_json(m));
    }
    return {
        {"n", spec.n},
        {"q", spec.q},
        {"a_matrices", a},
        {"poly", to_string(spec.poly)},
        {"dim_cap", spec.dimension_cap},
    };
}

void apply_haar_family(const Json &j, RandomModelSpec &spec) {
    if (!j.is_object()) {
        fail("haar family: expected an object");
    }
    if (j.contains("a")) {
        spec.a_family.clear();
        for (const auto &m : j.at("a")) {
            spec.a_family.push_back(matrix_from_json(m));
        }
    }
    if (j.contains("b")) {
        spec.b_family.clear();
        for (const auto &b : j.at("b")) {
            const Json &pattern = b.is_object() ? require(b, "pattern") : b;
            auto values = real_list(pattern, "b pattern");
            if (values.empty()) {
                fail("haar family: empty b pattern");
            }
            spec.b_family.push_back(std::move(values));
        }
    }
    if (j.contains("bound")) {
        spec.bound_c = as_real(j.at("bound"), "bound");
    }
    if (j.contains("keep_leading_b")) {
        if (!j.at("keep_leading_b").is_boolean()) {
            fail("haar family: keep_leading_b must be a boolean");
        }
        spec.keep_leading_b = j.at("keep_leading_b").get<bool>();
    }
}

}  // namespace monomat

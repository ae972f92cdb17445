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

#include "monomat/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace monomat {

using nlohmann::json;

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table::add_row: expected " + std::to_string(columns.size()) + " cells");
    }
    rows.push_back(std::move(row));
}

ReportFormat parse_report_format(const std::string &text) {
    if (text == "csv") {
        return ReportFormat::Csv;
    }
    if (text == "json") {
        return ReportFormat::Json;
    }
    throw std::invalid_argument("unknown report format '" + text + "' (expected csv or json)");
}

std::string format_real(double x) {
    if (x == 0) {
        return "0";  // folds -0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(complex z) {
    std::string re = format_real(z.real());
    std::string im = format_real(z.imag());
    if (im[0] == '-') {
        return re + im + "i";
    }
    return re + "+" + im + "i";
}

namespace {

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(double v) const {
            return format_real(v);
        }
        std::string operator()(complex v) const {
            return format_complex(v);
        }
        std::string operator()(bool v) const {
            return v ? "true" : "false";
        }
        std::string operator()(const std::string &v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

json real_json(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

json cell_json(const Cell &cell) {
    struct Visitor {
        json operator()(int64_t v) const {
            return v;
        }
        json operator()(double v) const {
            return real_json(v);
        }
        json operator()(complex v) const {
            return json::array({real_json(v.real()), real_json(v.imag())});
        }
        json operator()(bool v) const {
            return v;
        }
        json operator()(const std::string &v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string to_csv(const Table &table) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); c++) {
        if (c) {
            out += ',';
        }
        out += csv_escape(table.columns[c]);
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            if (c) {
                out += ',';
            }
            out += csv_escape(cell_text(row[c]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table &table) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        json obj = json::object();
        for (size_t c = 0; c < row.size(); c++) {
            obj[table.columns[c]] = cell_json(row[c]);
        }
        rows.push_back(std::move(obj));
    }
    json doc = {{"columns", table.columns}, {"rows", rows}};
    if (!table.summary.is_null()) {
        doc["summary"] = table.summary;
    }
    // nlohmann::json objects are ordered maps, so keys come out sorted.
    return doc.dump(2) + "\n";
}

std::string render(const Table &table, ReportFormat format) {
    return format == ReportFormat::Csv ? to_csv(table) : to_json(table);
}

void emit_report(const Table &table, ReportFormat format, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << render(table, format);
    out.flush();
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

Table verify_table(const VerifyReport &report) {
    Table t;
    t.columns = {"k", "symbolic", "matrix", "residual", "pass"};
    for (const auto &r : report.rows) {
        t.add_row({static_cast<int64_t>(r.k), r.symbolic, r.matrix, r.residual, r.pass});
    }
    t.summary = {
        {"all_pass", report.all_pass()},
        {"max_residual", real_json(report.max_residual())},
        {"tolerance", report.tolerance},
    };
    return t;
}

Table haar_table(const std::vector<TrialReport> &reports) {
    Table t;
    t.columns = {"n", "l", "mean_re", "mean_im", "stderr", "target_re", "target_im", "abs_err"};
    for (const auto &r : reports) {
        t.add_row({
            static_cast<int64_t>(r.n),
            static_cast<int64_t>(r.l),
            r.mean.real(),
            r.mean.imag(),
            r.std_error,
            r.target.real(),
            r.target.imag(),
            r.abs_error,
        });
    }
    return t;
}

json rate_fit_json(const RateFit &fit) {
    json dev = json::array();
    for (double d : fit.deviation) {
        dev.push_back(real_json(d));
    }
    return {
        {"n", fit.n},
        {"mean_abs_deviation", dev},
        {"slope", real_json(fit.slope)},
        {"intercept", real_json(fit.intercept)},
        {"ci_low", real_json(fit.ci_low)},
        {"ci_high", real_json(fit.ci_high)},
        {"slope_min", fit.slope_min},
        {"slope_max", fit.slope_max},
        {"degenerate", fit.degenerate},
        {"passed", fit.passed},
    };
}

Table limits_table(const LimitSweep &sweep) {
    Table t;
    t.columns = {"n", "l", "value"};
    for (const auto &r : sweep.rows) {
        t.add_row({static_cast<int64_t>(r.n), static_cast<int64_t>(r.l), r.value});
    }
    json full = json::array();
    json mono = json::array();
    for (size_t k = 0; k < sweep.n_list.size(); k++) {
        full.push_back(cell_json(sweep.full_trace[k]));
        mono.push_back(cell_json(sweep.monotone_state[k]));
    }
    t.summary = {
        {"n", sweep.n_list},
        {"full_trace", full},
        {"monotone_state", mono},
        {"cyclic_limit", cell_json(sweep.cyclic_limit)},
        {"monotone_limit", cell_json(sweep.monotone_limit)},
        {"cyclic_stable", sweep.cyclic_stable},
        {"monotone_stable", sweep.monotone_stable},
        {"corner_threshold", sweep.corner_threshold},
    };
    return t;
}

Table sign_table(const SignTables &tables) {
    Table t;
    t.columns = {"table", "row", "col", "value", "sign", "expected"};
    auto cyc = expected_cyclic_signs();
    auto mono = expected_monotone_signs();
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            t.add_row({std::string("cyclic"),
                       std::string(SignTables::kLabels[r]),
                       std::string(SignTables::kLabels[c]),
                       tables.cyclic_values[r][c],
                       std::string(1, tables.cyclic[r][c]),
                       std::string(1, cyc[r][c])});
        }
    }
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            t.add_row({std::string("monotone"),
                       std::string(SignTables::kLabels[r]),
                       std::string(SignTables::kLabels[c]),
                       tables.monotone_values[r][c],
                       std::string(1, tables.monotone[r][c]),
                       std::string(1, mono[r][c])});
        }
    }
    t.summary = {{"cyclic_matches", tables.cyclic_matches}, {"monotone_matches", tables.monotone_matches}};
    return t;
}

Table example_table(const ExampleSpectra &spectra) {
    Table t;
    t.columns = {"matrix", "index", "eigenvalue"};
    for (size_t k = 0; k < spectra.x.size(); k++) {
        t.add_row({std::string("X"), static_cast<int64_t>(k), spectra.x[k]});
    }
    for (size_t k = 0; k < spectra.y.size(); k++) {
        t.add_row({std::string("Y"), static_cast<int64_t>(k), spectra.y[k]});
    }
    return t;
}

}  // namespace monomat

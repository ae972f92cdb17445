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

#ifndef MONOMAT_REPORT_H
#define MONOMAT_REPORT_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "monomat/haar.h"
#include "monomat/moments.h"
#include "monomat/tensor_model.h"

namespace monomat {

using Cell = std::variant<int64_t, double, complex, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Extra key/value data. Only the JSON form carries it.
    nlohmann::json summary = nullptr;

    void add_row(std::vector<Cell> row);
};

enum class ReportFormat { Csv, Json };
ReportFormat parse_report_format(const std::string &text);

/// 17 significant digits, so values round-trip.
std::string format_real(double x);
/// "re+imi" or "re-imi".
std::string format_complex(complex z);

/// LF line endings; cells containing a comma or quote are quoted.
std::string to_csv(const Table &table);
/// {"columns":[...], "rows":[{...}], "summary":...} with sorted keys.
std::string to_json(const Table &table);
std::string render(const Table &table, ReportFormat format);

/// Renders and writes to `path`. Throws std::runtime_error on I/O failure.
void emit_report(const Table &table, ReportFormat format, const std::string &path);

Table verify_table(const VerifyReport &report);
Table haar_table(const std::vector<TrialReport> &reports);
nlohmann::json rate_fit_json(const RateFit &fit);
Table limits_table(const LimitSweep &sweep);
Table sign_table(const SignTables &tables);
Table example_table(const ExampleSpectra &spectra);

}  // namespace monomat

#endif

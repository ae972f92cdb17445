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

#ifndef MONOMAT_JSON_IO_H
#define MONOMAT_JSON_IO_H

#include <string>

#include "json.hpp"
#include "monomat/haar.h"
#include "monomat/moments.h"
#include "monomat/tensor_model.h"

namespace monomat {

using Json = nlohmann::json;

/// Raised for malformed input documents. Callers map it to a parse failure.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string &path);
Json parse_json_text(const std::string &text);

/// Accepts {"rows","cols","re"[,"im"]} with flat row-major data,
/// {"diag":[...]} or a nested list of real rows.
Matrix matrix_from_json(const Json &j);
Json matrix_to_json(const Matrix &m);

complex complex_from_json(const Json &j);
Json complex_to_json(complex z);

/// A polynomial string, or a list of {"coeff":c, "word":[["A",1],["C",2],...]}.
Polynomial polynomial_from_json(const Json &j);
Json polynomial_to_json(const Polynomial &p);

/// Keys of a tau object are index tuples: "12" (single digits) or "1,12".
TauTable tau_from_json(const Json &j, uint32_t q_hint = 0);
Json tau_to_json(const TauTable &tau);

/// {"eigenvalues":[...]} or {"a_matrices":[...]} plus an optional "tau"
/// (object, "orthonormal" or "involutions"; "q" sets the generator count).
MomentData moment_data_from_json(const Json &j);

/// {"n", "q", "a_matrices" | "a_diagonals", "poly", optional "dim_cap"}.
ModelSpec model_spec_from_json(const Json &j);
Json model_spec_to_json(const ModelSpec &spec);

/// Applies {"a":[matrix...], "b":[{"pattern":[...]}|[...]...], "bound":C,
/// "keep_leading_b":bool} to `spec`.
void apply_haar_family(const Json &j, RandomModelSpec &spec);

}  // namespace monomat

#endif

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

#include "monomat/tau.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monomat {

TauTable TauTable::orthonormal(uint32_t q) {
    TauTable t;
    for (uint32_t i = 1; i <= q; i++) {
        t.set({i}, 0.0);
        for (uint32_t j = 1; j <= q; j++) {
            t.set({i, j}, i == j ? 1.0 : 0.0);
        }
    }
    return t;
}

TauTable TauTable::commuting_involutions(uint32_t q) {
    TauTable t;
    t.rule_ = Rule::CommutingInvolutions;
    t.rule_q_ = q;
    return t;
}

void TauTable::set(BRun word, complex value) {
    if (word.empty()) {
        if (value != complex(1)) {
            throw std::invalid_argument("TauTable: tau(1) must be 1");
        }
        return;
    }
    for (auto i : word) {
        if (i == 0) {
            throw std::invalid_argument("TauTable: keys use generator indices >= 1");
        }
    }
    values_[std::move(word)] = value;
}

std::optional<complex> TauTable::find(std::span<const uint32_t> word) const {
    if (word.empty()) {
        return complex(1);
    }
    auto it = values_.find(BRun(word.begin(), word.end()));
    if (it != values_.end()) {
        return it->second;
    }
    if (rule_ == Rule::CommutingInvolutions) {
        std::vector<uint8_t> parity(rule_q_ + 1, 0);
        for (auto i : word) {
            if (i == 0 || i > rule_q_) {
                return std::nullopt;
            }
            parity[i] ^= 1;
        }
        bool even = std::all_of(parity.begin(), parity.end(), [](uint8_t x) {
            return x == 0;
        });
        return complex(even ? 1.0 : 0.0);
    }
    return std::nullopt;
}

complex TauTable::operator()(std::span<const uint32_t> word) const {
    auto v = find(word);
    if (!v.has_value()) {
        throw std::out_of_range("TauTable: no value for tau(" + format_brun(word) + ")");
    }
    return *v;
}

uint32_t TauTable::max_index() const {
    uint32_t best = rule_q_;
    for (const auto &[k, v] : values_) {
        for (auto i : k) {
            best = std::max(best, i);
        }
    }
    return best;
}

bool TauTable::is_hermitian(double tol) const {
    for (const auto &[k, v] : values_) {
        BRun rev(k.rbegin(), k.rend());
        auto other = find(rev);
        if (other.has_value() && std::abs(*other - std::conj(v)) > tol) {
            return false;
        }
    }
    return true;
}

bool TauTable::is_tracial(double tol) const {
    for (const auto &[k, v] : values_) {
        BRun rot = k;
        for (size_t s = 1; s < k.size(); s++) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            auto other = find(rot);
            if (other.has_value() && std::abs(*other - v) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::string format_brun(std::span<const uint32_t> word) {
    if (word.empty()) {
        return "1";
    }
    std::stringstream ss;
    for (size_t k = 0; k < word.size(); k++) {
        if (k) {
            ss << " ";
        }
        ss << "b" << word[k];
    }
    return ss.str();
}

}  // namespace monomat

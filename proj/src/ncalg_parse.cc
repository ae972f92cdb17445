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

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "monomat/ncalg.h"

namespace monomat {

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {
    }

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            double sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                pos_++;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(out, sign);
        }
        return out;
    }

   private:
    void parse_term(Polynomial &out, double sign) {
        skip_ws();
        complex coeff = sign;
        bool have_coeff = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '(')) {
            coeff *= parse_coefficient();
            have_coeff = true;
        } else if (!at_end() && peek() == 'i') {
            pos_++;
            coeff *= complex(0, 1);
            have_coeff = true;
        }
        skip_ws();
        if (!at_end() && peek() == '*') {
            pos_++;
            skip_ws();
        }
        Word word;
        while (true) {
            skip_ws();
            if (at_end() || peek() == '+' || peek() == '-') {
                break;
            }
            char c = peek();
            if (c != 'a' && c != 'b' && c != 'c') {
                fail(std::string("unexpected character '") + c + "'");
            }
            pos_++;
            uint32_t index = parse_index();
            if (c == 'a') {
                if (index == 0) {
                    fail("A generators are indexed from 1");
                }
                word.push_back(Letter::a(index));
            } else if (c == 'b') {
                word.push_back(Letter::b(index));
            } else {
                if (index == 0) {
                    fail("the unit cannot be centered");
                }
                word.push_back(Letter::centered_b(index));
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                pos_++;
            }
        }
        if (word.empty() && !have_coeff) {
            fail("empty term");
        }
        out.add_term(std::move(word), coeff);
    }

    complex parse_coefficient() {
        if (peek() == '(') {
            pos_++;
            skip_ws();
            complex acc = 0;
            bool first = true;
            while (true) {
                skip_ws();
                if (at_end()) {
                    fail("unterminated '('");
                }
                if (peek() == ')') {
                    pos_++;
                    break;
                }
                double sign = 1;
                if (peek() == '+' || peek() == '-') {
                    sign = peek() == '-' ? -1 : 1;
                    pos_++;
                    skip_ws();
                } else if (!first) {
                    fail("expected '+' or '-' inside coefficient");
                }
                first = false;
                double value = 1;
                bool have_number = false;
                if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
                    value = parse_real();
                    have_number = true;
                }
                skip_ws();
                if (!at_end() && peek() == 'i') {
                    pos_++;
                    acc += complex(0, sign * value);
                } else if (have_number) {
                    acc += sign * value;
                } else {
                    fail("malformed coefficient");
                }
            }
            return acc;
        }
        double value = parse_real();
        if (!at_end() && peek() == 'i') {
            pos_++;
            return complex(0, value);
        }
        return value;
    }

    double parse_real() {
        size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            pos_++;
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            size_t save = pos_;
            pos_++;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                pos_++;
            }
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;
            } else {
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    pos_++;
                }
            }
        }
        double value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            fail("malformed number");
        }
        return value;
    }

    uint32_t parse_index() {
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_++;
        }
        if (start == pos_) {
            fail("letter without index");
        }
        uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) {
            fail("index out of range");
        }
        return value;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            pos_++;
        }
    }
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return text_[pos_];
    }
    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument("parse_polynomial: " + msg + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

std::string format_coefficient(complex c) {
    std::stringstream ss;
    ss << std::setprecision(17);
    if (c.imag() == 0) {
        ss << c.real();
    } else if (c.real() == 0) {
        ss << c.imag() << "i";
    } else {
        ss << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    return ss.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    return Parser(text).parse();
}

std::string to_string(const Polynomial &p) {
    if (p.is_zero()) {
        return "0";
    }
    std::stringstream ss;
    bool first = true;
    for (const auto &[w, c] : p.terms()) {
        complex coeff = c;
        if (!first) {
            bool negative_real = coeff.imag() == 0 && coeff.real() < 0;
            bool negative_imag = coeff.real() == 0 && coeff.imag() < 0;
            if (negative_real || negative_imag) {
                ss << " - ";
                coeff = -coeff;
            } else {
                ss << " + ";
            }
        }
        first = false;
        if (w.empty()) {
            ss << format_coefficient(coeff);
            continue;
        }
        if (coeff != complex(1)) {
            if (coeff == complex(-1)) {
                ss << "-";
            } else {
                ss << format_coefficient(coeff) << " ";
            }
        }
        ss << format_word(w);
    }
    return ss.str();
}

}  // namespace monomat

/* Copyright 2026 The pirbatch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

#include "pirbatch/rational.hpp"

#include <cctype>

#include "pirbatch/errors.hpp"

namespace pirbatch {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw PreconditionError("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den.numerator() == 0) throw PreconditionError("zero denominator in '" + text + "'");
        return num / den;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::int64_t num = 0, den = 1;
    bool seen_dot = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)) || den > 1'000'000'000'000LL) {
            throw PreconditionError("malformed rational literal '" + text + "'");
        }
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
    }
    if (!seen_digit) throw PreconditionError("malformed rational literal '" + text + "'");
    return Rational(negative ? -num : num, den);
}

} // namespace pirbatch

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

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace pirbatch {

// Compare against Rational(...) rather than bare int literals: under
// C++20's reversed operator candidates, boost's rational == int recurses.
using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
double to_double(const Rational& r);
// Exact parse of "0.125", "3/8" or "2".
Rational parse_rational(const std::string& text);

} // namespace pirbatch

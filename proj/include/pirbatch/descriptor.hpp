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
#include <string_view>
#include <variant>
#include <vector>

#include "pirbatch/array_code.hpp"
#include "pirbatch/multiplicity.hpp"

namespace pirbatch::descriptor {

struct MultiplicityDescriptor {
    std::uint32_t m = 1;
    std::uint32_t d = 0;
    std::size_t s = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;  // low coefficient first

    bool operator==(const MultiplicityDescriptor&) const = default;
};

struct ArrayDescriptor {
    std::uint32_t r = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> slopes;
    bool global_parity = false;

    bool operator==(const ArrayDescriptor&) const = default;
};

using Descriptor = std::variant<MultiplicityDescriptor, ArrayDescriptor>;

MultiplicityDescriptor describe(const multiplicity::MultCodeParams& params);
ArrayDescriptor describe(const array_code::ArrayCodeParams& params);

// {"family":"multiplicity","m":..,"d":..,"s":..,"q":..,"modulus":[..]}
// {"family":"array","r":..,"p":..,"S":[..],"global_parity":..}
std::string to_json(const Descriptor& desc);

// Throws ParseError on malformed JSON, unknown family, or missing and
// mistyped fields.
Descriptor parse(std::string_view text);
Descriptor read_file(const std::string& path);
void write_file(const std::string& path, const Descriptor& desc);

// Rebuilds the field (checking the stored modulus) and the code.
multiplicity::MultCodeParams to_params(const MultiplicityDescriptor& desc);
array_code::ArrayCodeParams to_params(const ArrayDescriptor& desc);

} // namespace pirbatch::descriptor

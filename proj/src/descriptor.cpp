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

#include "pirbatch/descriptor.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pirbatch/errors.hpp"

namespace pirbatch::descriptor {

using json = nlohmann::ordered_json;

MultiplicityDescriptor describe(const multiplicity::MultCodeParams& params) {
    return MultiplicityDescriptor{params.m, params.d, params.s, params.q(), params.field->spec().modulus};
}

ArrayDescriptor describe(const array_code::ArrayCodeParams& params) {
    return ArrayDescriptor{params.r, params.p, params.slopes, params.global_parity};
}

std::string to_json(const Descriptor& desc) {
    json j;
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) {
        j["family"] = "multiplicity";
        j["m"] = m->m;
        j["d"] = m->d;
        j["s"] = m->s;
        j["q"] = m->q;
        j["modulus"] = m->modulus;
    } else {
        const auto& a = std::get<ArrayDescriptor>(desc);
        j["family"] = "array";
        j["r"] = a.r;
        j["p"] = a.p;
        j["S"] = a.slopes;
        j["global_parity"] = a.global_parity;
    }
    return j.dump(2) + "\n";
}

namespace {

template <typename T>
T field_of(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("descriptor is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("descriptor field \"") + key + "\" has the wrong type");
    }
}

std::uint32_t unsigned_of(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw ParseError(std::string("descriptor field \"") + key + "\" must be a non-negative integer");
    }
    const auto v = j.at(key).get<std::uint64_t>();
    if (v > 0xffffffffULL) throw ParseError(std::string("descriptor field \"") + key + "\" is too large");
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> list_of(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw ParseError(std::string("descriptor field \"") + key + "\" must be an array");
    }
    std::vector<std::uint32_t> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number_unsigned()) throw ParseError(std::string("entries of \"") + key + "\" must be integers");
        out.push_back(e.get<std::uint32_t>());
    }
    return out;
}

} // namespace

Descriptor parse(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("descriptor is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
    const auto family = field_of<std::string>(j, "family");
    if (family == "multiplicity") {
        MultiplicityDescriptor d;
        d.m = unsigned_of(j, "m");
        d.d = unsigned_of(j, "d");
        d.s = unsigned_of(j, "s");
        d.q = unsigned_of(j, "q");
        if (j.contains("modulus")) d.modulus = list_of(j, "modulus");
        return d;
    }
    if (family == "array") {
        ArrayDescriptor d;
        d.r = unsigned_of(j, "r");
        d.p = unsigned_of(j, "p");
        d.slopes = list_of(j, "S");
        if (j.contains("global_parity")) d.global_parity = field_of<bool>(j, "global_parity");
        return d;
    }
    throw ParseError("unknown code family \"" + family + "\"");
}

Descriptor read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read descriptor " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const Descriptor& desc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(desc);
}

multiplicity::MultCodeParams to_params(const MultiplicityDescriptor& desc) {
    auto spec = gf::field_spec_for_order(desc.q);
    if (!desc.modulus.empty()) {
        if (desc.modulus.size() != spec.extension_degree + 1) {
            throw ParseError("modulus degree does not match q = " + std::to_string(desc.q));
        }
        spec.modulus = desc.modulus;
    }
    return multiplicity::make_params(desc.m, desc.d, desc.s, gf::Field::create(spec));
}

array_code::ArrayCodeParams to_params(const ArrayDescriptor& desc) {
    return array_code::make_array_params(desc.r, desc.p, desc.slopes, desc.global_parity);
}

} // namespace pirbatch::descriptor

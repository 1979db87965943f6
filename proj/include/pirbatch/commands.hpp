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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pirbatch/descriptor.hpp"
#include "pirbatch/rational.hpp"

namespace pirbatch::commands {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

struct ArrayBuildOptions {
    std::optional<std::uint32_t> r;
    std::optional<std::uint32_t> p;
    std::optional<std::size_t> k;
    std::vector<std::uint32_t> slopes;
    bool five_batch = false;
    bool global_parity = false;
};

descriptor::Descriptor build_multiplicity(std::uint32_t m, std::uint32_t d, std::size_t s, std::uint32_t q);
// --r --k runs the (r,k)-batch construction; --r --p --slopes takes the
// slopes verbatim; --five-batch --p builds the global-parity code.
descriptor::Descriptor build_array(const ArrayBuildOptions& options);

struct Profile {
    std::string family;
    std::uint64_t length = 0;   // N, in code symbols
    Rational dimension{0};      // n, in code symbols
    std::uint64_t k = 0;
    Rational redundancy{0};
    Rational rate{0};
};

Profile profile(const descriptor::Descriptor& desc);
void print_profile(std::ostream& os, const Profile& p);

struct CertifyOptions {
    std::string mode = "pir";  // pir | batch
    std::optional<std::size_t> k;
    unsigned jobs = 1;
    std::uint64_t seed = 20160701;
    std::uint64_t threshold = 1'000'000;
    std::string report_path;   // CSV, optional
    std::string summary_path;  // JSON, optional
    bool all_rows = false;
};

int cmd_certify(const descriptor::Descriptor& desc, const CertifyOptions& options, std::ostream& out);

enum class CurveKind { PirBinary, PirQAry, Batch };

CurveKind parse_curve_kind(const std::string& text);

struct CurveRow {
    Rational epsilon;
    Rational delta;
    std::string series;
    std::size_t s = 0;  // 0 when the row is not tied to one s
};

struct CurveOptions {
    Rational step{1, 10};
    Rational max{2};
    std::size_t s_show = 6;    // per-s series printed for s <= s_show
    std::size_t s_search = 64; // minimum taken over 2 <= s <= s_search
};

std::vector<CurveRow> curve_rows(CurveKind kind, const CurveOptions& options);

// Piecewise-linear reference series read off the published plots. At a
// jump the left value wins. Nothing outside the plotted range.
std::optional<Rational> pir_old_results(const Rational& epsilon);
std::optional<Rational> batch_old_results(const Rational& epsilon);
std::optional<Rational> lower_bound(const Rational& epsilon);

// Array construction exponent 2/3 + 5 eps/3, valid for eps < 1/2.
Rational array_batch_delta(const Rational& epsilon);

// Point where the array exponent meets the binary multiplicity batch
// exponent; the array code wins below it.
Rational batch_crossover();
inline constexpr double kStatedCrossover = 0.0755;

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows);

int cmd_roundtrip(const descriptor::Descriptor& desc, std::uint64_t seed, bool zero_message, std::ostream& out);

// Message is comma separated base-field indices (bits for array codes);
// without one a seeded random message is drawn.
int cmd_encode(const descriptor::Descriptor& desc, const std::optional<std::string>& message, std::uint64_t seed,
               std::ostream& out);

// Recovers one information symbol (array: data bit; multiplicity: point)
// from a flattened codeword through each of its recovering sets.
int cmd_recover(const descriptor::Descriptor& desc, const std::string& codeword, std::size_t index,
                std::ostream& out);

std::vector<std::uint32_t> parse_list(const std::string& text);

} // namespace pirbatch::commands

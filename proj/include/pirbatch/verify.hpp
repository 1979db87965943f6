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
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pirbatch/gf.hpp"
#include "pirbatch/linalg.hpp"

namespace pirbatch::verify {

using gf::Elem;
using gf::FieldPtr;

// Sorted codeword coordinate indices.
using CoordinateSet = std::vector<std::size_t>;

// n x N generator over the base field. Row i is the encoding of the i-th
// unit message.
struct GeneratorMatrix {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t N = 0;
    gf::Matrix entries;
    // info_positions[i] is a column equal to e_i; empty when the encoder
    // is not systematic.
    std::vector<std::size_t> info_positions;

    bool systematic() const { return info_positions.size() == n; }
    std::vector<Elem> column(std::size_t c) const;
};

using Encoder = std::function<std::vector<Elem>(std::span<const Elem>)>;

// Throws CertificationError when 50 random pairs expose non-linearity.
GeneratorMatrix extract_generator(const FieldPtr& field, const Encoder& encoder, std::size_t n,
                                  std::size_t N, std::uint64_t seed = 1);

// Vectors in F^n that must lie in the span of a recovering set's columns.
// e_i recovers message symbol i; a codeword column recovers that coordinate.
using Target = std::vector<std::vector<Elem>>;

Target info_target(const GeneratorMatrix& g, std::size_t i);
Target coordinate_target(const GeneratorMatrix& g, std::span<const std::size_t> columns);

// Coefficients expressing each target vector over the columns of R, or
// nothing when some target lies outside their span.
std::optional<std::vector<std::vector<Elem>>> recovery_coefficients(const GeneratorMatrix& g,
                                                                    const Target& target,
                                                                    std::span<const std::size_t> r);

bool recovers(const GeneratorMatrix& g, const Target& target, std::span<const std::size_t> r);

// x_i is a function of the symbols in R iff e_i lies in the column span of
// G restricted to R. Returns the coefficients on success.
std::optional<std::vector<Elem>> is_recovering_set(const GeneratorMatrix& g, std::size_t i,
                                                   std::span<const std::size_t> r);

struct Failure {
    std::size_t index = 0;
    std::string detail;
};

struct PirReport {
    std::size_t targets = 0;
    std::size_t k = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
};

// Checks that every target has k valid, pairwise disjoint recovering sets.
PirReport certify_pir_targets(const GeneratorMatrix& g, const std::vector<Target>& targets,
                              const std::vector<std::vector<CoordinateSet>>& sets, std::size_t k);

// Same, for the message symbols of g.
PirReport certify_pir(const GeneratorMatrix& g, const std::vector<std::vector<CoordinateSet>>& sets,
                      std::size_t k);

// Index of the first pair of overlapping sets, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_overlap(std::span<const CoordinateSet> sets,
                                                                 std::size_t universe);

// Sorted multisets of size k over [items], enumerated in lexicographic
// order, or `threshold` seeded draws (k uniform items, sorted) when there
// are more than `threshold` of them.
class MultisetRequests {
public:
    MultisetRequests(std::size_t items, std::size_t k, std::uint64_t threshold = 1'000'000,
                     std::uint64_t seed = 20160701);

    // C(items + k - 1, k), saturating at UINT64_MAX.
    std::uint64_t full_count() const { return full_count_; }
    bool sampled() const { return full_count_ > threshold_; }
    std::uint64_t count() const { return sampled() ? threshold_ : full_count_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t k() const { return k_; }

    void for_each(const std::function<void(std::uint64_t, std::span<const std::size_t>)>& fn) const;

private:
    std::size_t items_;
    std::size_t k_;
    std::uint64_t threshold_;
    std::uint64_t seed_;
    std::uint64_t full_count_;
};

using BatchPlanner = std::function<std::vector<CoordinateSet>(std::span<const std::size_t>)>;

struct BatchRow {
    std::uint64_t request_id = 0;
    std::vector<std::size_t> request;
    std::vector<std::size_t> set_sizes;
    bool passed = false;
    std::string detail;
};

struct BatchReport {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t seed = 0;
    bool sampled = false;
    std::size_t max_set_size = 0;
    // Failing rows always; every row when requested.
    std::vector<BatchRow> rows;

    bool all_passed() const { return failed == 0 && total > 0; }
};

struct BatchOptions {
    unsigned jobs = 1;
    bool keep_all_rows = false;
};

// For every request the planner's sets must number k, each recover its
// item's target, and be pairwise disjoint.
BatchReport certify_batch(const GeneratorMatrix& g, const BatchPlanner& planner,
                          const std::vector<Target>& item_targets, const MultisetRequests& requests,
                          const BatchOptions& options = {});

// Exact minimum weight over all nonzero messages, counting groups of
// `symbol_width` consecutive coordinates as one symbol.
std::size_t min_distance(const GeneratorMatrix& g, std::size_t symbol_width = 1);

void write_report_csv(std::ostream& os, const BatchReport& report);
void write_report_csv(std::ostream& os, const PirReport& report);
std::string summary_json(const BatchReport& report);
std::string summary_json(const PirReport& report, std::uint64_t seed);

} // namespace pirbatch::verify

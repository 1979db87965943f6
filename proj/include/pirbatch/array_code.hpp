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
#include <span>
#include <vector>

#include "pirbatch/pir.hpp"
#include "pirbatch/verify.hpp"

namespace pirbatch::array_code {

using verify::CoordinateSet;

struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// r x p data bits, one parity per diagonal of every slope in S, and an
// optional global parity over all data bits.
struct ArrayCodeParams {
    std::uint32_t r = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> slopes;  // strictly increasing, each < p
    bool global_parity = false;

    std::size_t k() const { return slopes.size(); }
    std::size_t dimension() const { return std::size_t(r) * p; }
    std::size_t redundancy() const { return k() * p + (global_parity ? 1 : 0); }
    std::size_t length() const { return dimension() + redundancy(); }
};

ArrayCodeParams make_array_params(std::uint32_t r, std::uint32_t p, std::vector<std::uint32_t> slopes,
                                  bool global_parity = false);

// Codeword coordinates: data (i, j) at i*p + j, then parity rho_{l,t} at
// r*p + l*p + t, then the global parity bit last.
std::size_t data_coordinate(const ArrayCodeParams& params, Cell cell);
std::size_t parity_coordinate(const ArrayCodeParams& params, std::size_t slope_index, std::uint32_t offset);
std::size_t global_parity_coordinate(const ArrayCodeParams& params);
Cell cell_of(const ArrayCodeParams& params, std::size_t data_index);

struct Diagonal {
    std::uint32_t slope = 0;
    std::uint32_t offset = 0;
    std::vector<Cell> cells;  // cells[i] lies in row i
};

// D_{s,t} = {(i, <t + i s>_p) : i in [r]}.
Diagonal diagonal(std::uint32_t slope, std::uint32_t offset, std::uint32_t r, std::uint32_t p);

// The t with cell in D_{slope,t}.
std::uint32_t offset_through(Cell cell, std::uint32_t slope, std::uint32_t p);

struct ArrayCodeword {
    std::vector<std::uint8_t> data;      // row-major r x p
    std::vector<std::uint8_t> parities;  // slope-major k x p
    std::optional<std::uint8_t> global_parity;

    std::vector<std::uint8_t> flatten() const;
};

ArrayCodeword encode_array(const ArrayCodeParams& params, std::span<const std::uint8_t> data);

// Set l: parity rho_{l,t_l} and the other r-1 cells of the slope-s_l
// diagonal through the cell.
std::vector<CoordinateSet> pir_sets_for_bit(const ArrayCodeParams& params, Cell cell);

struct ApWitness {
    std::uint32_t s1 = 0, s2 = 0, s3 = 0;
    std::uint32_t x = 0, y = 0;

    friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

// An r-weighted arithmetic progression mod p: pairwise distinct
// s1, s2, s3 in S and 0 < x, y < r-1 with x + y < r such that
// x s1 + y s2 = (x + y) s3 (mod p).
std::optional<ApWitness> has_weighted_ap(std::span<const std::uint32_t> slopes, std::uint32_t r,
                                         std::uint32_t p);

// Scans 0, 1, 2, ... keeping each candidate that leaves the set free of
// r-weighted progressions. Throws CapacityError with the achieved size
// when fewer than k candidates survive.
std::vector<std::uint32_t> greedy_slope_set(std::uint32_t r, std::uint32_t p, std::size_t k);

// p = smallest prime above 2 k^2 r^2 and a greedy slope set of size k.
ArrayCodeParams build_rk_batch(std::uint32_t r, std::size_t k);

// Greedy batch planner for an AP-free slope set. Requests are data
// indices (i*p + j); the answer is aligned with the sorted request.
class ArrayBatchPlanner {
public:
    explicit ArrayBatchPlanner(ArrayCodeParams params);

    std::vector<CoordinateSet> plan(std::span<const std::size_t> request) const;

private:
    ArrayCodeParams params_;
};

std::vector<CoordinateSet> plan_array_batch(const ArrayCodeParams& params, std::span<const std::size_t> request);

// C(r = p, p, S = [5]) plus a global parity bit.
ArrayCodeParams five_batch_code(std::uint32_t p);

// Backtracking planner for the global-parity code. Candidates per request
// are the bit itself, the diagonal sets, then the parity-substituted sets that trade the
// diagonal's parity for the global bit and the other parities of that
// slope; if those run out, a recovering set is solved for inside the
// coordinates still free.
class FiveBatchPlanner {
public:
    explicit FiveBatchPlanner(ArrayCodeParams params);

    std::vector<CoordinateSet> plan(std::span<const std::size_t> request) const;

    const verify::GeneratorMatrix& generator() const { return generator_; }

private:
    bool assign(std::span<const std::size_t> request, std::size_t j, std::vector<char>& used,
                std::vector<CoordinateSet>& chosen, bool allow_solver) const;
    std::optional<CoordinateSet> solve_in_free(std::size_t bit, const std::vector<char>& used) const;

    ArrayCodeParams params_;
    verify::GeneratorMatrix generator_;
};

struct CorollaryParams {
    std::uint32_t r = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> slopes;
    std::size_t dimension = 0;   // r p >= n
    std::size_t redundancy = 0;  // k p
};

// r = ceil(n^(1/3) / k^(2/3)) computed exactly as the least r with
// r^3 k^2 >= n, then the (r, k)-batch construction.
CorollaryParams corollary_params(std::uint64_t n, std::size_t k);

verify::GeneratorMatrix array_generator(const ArrayCodeParams& params);

// The array code with its slope sets as an availability code.
pir::AvailabilityCode array_pir_code(const ArrayCodeParams& params);

} // namespace pirbatch::array_code

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
#include <span>
#include <string>
#include <vector>

#include "pirbatch/multiplicity.hpp"
#include "pirbatch/rational.hpp"
#include "pirbatch/verify.hpp"

namespace pirbatch::pir {

using gf::Elem;
using gf::FieldPtr;
using mpoly::OrderedEvaluation;
using mpoly::Point;
using multiplicity::MultCodeParams;
using multiplicity::MultCodeword;

// Grids A_1 x ... x A_{s-1} x {1} with |A_i| = degree + 1. Each grid is an
// interpolation set for homogeneous polynomials of degree <= `degree`.
// Because every direction ends in 1, two grids are disjoint under
// multiplication exactly when they are disjoint as point sets.
struct DirectionFamily {
    std::size_t s = 1;
    std::uint32_t q = 0;
    std::uint32_t degree = 0;
    std::vector<std::vector<Point>> grids;
};

// Splits the first floor(q/m)*m field elements into consecutive blocks of
// m and takes every product of blocks, giving floor(q/m)^(s-1) grids.
DirectionFamily build_direction_families(const FieldPtr& field, std::uint32_t m, std::size_t s);

struct Line {
    Point direction;
    std::vector<Elem> drops;  // sorted nonzero lambdas not read
};

struct RecoveryPlan {
    std::size_t w0 = 0;
    std::size_t family_index = 0;
    std::vector<Line> lines;
    std::vector<std::size_t> coordinates;  // sorted point indices
};

// Builds a plan through w0 along the given directions and fills in its
// coordinate set.
RecoveryPlan make_plan(const MultCodeParams& params, std::size_t w0, std::size_t family_index,
                       std::vector<Line> lines);

// Throws PreconditionError when the plan's line budget m(q-1-|drops|) >= d+1
// fails for some line or w0 is among its coordinates.
void check_plan(const MultCodeParams& params, const RecoveryPlan& plan);

// One plan per direction family, with no drops. Requires d/m < q-1.
std::vector<RecoveryPlan> pir_recovery_plans(const MultCodeParams& params, std::size_t w0);

// Reads only the plan's coordinates. Step 1 recovers P(w0 + lambda v) on
// every line; step 2 interpolates the homogeneous parts Q_j from the low
// coefficients and reads P^(i)(w0) off them.
OrderedEvaluation recover_symbol(const MultCodeword& c, const RecoveryPlan& plan);

// A linear code over its base field together with k claimed recovering
// sets per message symbol.
struct AvailabilityCode {
    verify::GeneratorMatrix generator;
    std::vector<std::vector<verify::CoordinateSet>> recovering_sets;
    std::size_t k = 0;
    std::size_t symbol_width = 1;
};

// The systematic multiplicity code flattened to the base field. Each
// message symbol inherits the plans of the point holding it.
AvailabilityCode multiplicity_pir_code(const MultCodeParams& params);

// Each GF(2^e) coordinate becomes e bits; recovering sets expand
// coordinate-wise. Odd characteristic is rejected.
AvailabilityCode binary_expand(const AvailabilityCode& code);

// t full copies of the codeword; copy j contributes the original sets
// shifted into its own coordinates.
AvailabilityCode replicate(const AvailabilityCode& code, std::size_t t);

enum class Variant { QAry, Binary };

std::string to_string(Variant v);

// Exponent of the redundancy for s variables at k = n^eps.
// Q-ary:  1 - 1/s + eps/(s-1)
// binary: 1 - (s(1-eps) - 1) / (2s(s-1))
Rational pir_delta_s(const Rational& epsilon, std::size_t s, Variant variant);

// s is admissible when s > 1/(1-eps).
bool admissible(const Rational& epsilon, std::size_t s);

// floor(2/(1-eps)), the Q-ary minimiser.
std::size_t qary_optimal_s(const Rational& epsilon);

struct DeltaRow {
    Rational epsilon;
    std::size_t s = 0;   // 0 for the eps >= 1 replication rows
    Rational delta;
    bool minimum = false;  // the row realising min over admissible s
};

// For each eps: one row per admissible s in [s_min, s_max] and one
// minimum row (ties go to the larger s). eps >= 1 yields delta = eps.
std::vector<DeltaRow> pir_delta_curves(std::span<const Rational> epsilons, std::size_t s_min,
                                       std::size_t s_max, Variant variant);

} // namespace pirbatch::pir

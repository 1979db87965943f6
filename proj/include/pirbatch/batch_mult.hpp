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

#include <span>
#include <vector>

#include "pirbatch/pir.hpp"
#include "pirbatch/rational.hpp"

namespace pirbatch::batch_mult {

using multiplicity::MultCodeParams;
using multiplicity::MultCodeword;
using pir::RecoveryPlan;

struct BatchParams {
    MultCodeParams code;
    std::size_t k = 0;
};

// Accepts when d <= m(q - k m^(s-1) - 2) and k <= floor(q/m)^(s-1);
// otherwise throws ParameterError naming the inequality that failed.
BatchParams validate_batch_params(const MultCodeParams& params, std::size_t k);

struct BatchPlan {
    std::vector<std::size_t> request;  // sorted point indices
    std::vector<RecoveryPlan> plans;   // plans[j] serves request[j]
};

// Request j (sorted) uses direction family j. Every point of a line that
// is another request's target, or lies on one of its lines, is dropped.
// Throws CertificationError if a line would exceed its drop budget.
BatchPlan plan_batch(const BatchParams& bp, std::span<const std::size_t> request);

std::vector<mpoly::OrderedEvaluation> recover_batch(const MultCodeword& c, const BatchPlan& plan);

// Largest drop set over all lines of a plan.
std::size_t max_drops(const BatchPlan& plan);

// Per-line drop budget k m^(s-1).
std::size_t drop_budget(const BatchParams& bp);

struct BatchDeltaRow {
    Rational epsilon;
    Rational delta;
};

// Q-ary: 3/4 + eps/2; binary: 5/6 + eps/3; eps >= 1/2 gives 1/2 + eps.
Rational batch_delta(const Rational& epsilon, pir::Variant variant);

std::vector<BatchDeltaRow> batch_delta_curves(std::span<const Rational> epsilons, pir::Variant variant);

} // namespace pirbatch::batch_mult

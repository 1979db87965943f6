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

#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "pirbatch/batch_mult.hpp"
#include "pirbatch/errors.hpp"

using namespace pirbatch;
using gf::Elem;
using gf::Field;
using multiplicity::MultCodeParams;

namespace {

MultCodeParams params_of(std::uint32_t m, std::uint32_t d, std::size_t s, std::uint32_t q) {
    return multiplicity::make_params(m, d, s, Field::of_order(q));
}

std::vector<std::vector<std::size_t>> coordinate_sets(const batch_mult::BatchPlan& plan) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : plan.plans) out.push_back(p.coordinates);
    return out;
}

void check_plan(const batch_mult::BatchParams& bp, const batch_mult::BatchPlan& plan,
                const multiplicity::MultCodeword& c) {
    REQUIRE(oracle::pairwise_disjoint(coordinate_sets(plan)));
    CHECK(batch_mult::max_drops(plan) <= batch_mult::drop_budget(bp));
    std::vector<std::size_t> all;
    for (const auto& p : plan.plans) all.insert(all.end(), p.coordinates.begin(), p.coordinates.end());
    std::sort(all.begin(), all.end());
    const auto seen = multiplicity::restrict_to(c, all);
    const auto got = batch_mult::recover_batch(seen, plan);
    for (std::size_t j = 0; j < plan.request.size(); ++j) REQUIRE(got[j] == c.symbol(plan.request[j]));
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(batch_mult::validate_batch_params(params_of(2, 4, 2, 11), 2));
    try {
        batch_mult::validate_batch_params(params_of(2, 2, 2, 7), 3);
        FAIL("expected rejection");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("d <= m(q - k m^(s-1) - 2)") != std::string::npos);
    }
    CHECK_NOTHROW(batch_mult::validate_batch_params(params_of(2, 4, 2, 11), 0));
    CHECK_NOTHROW(batch_mult::validate_batch_params(params_of(2, 4, 2, 11), 3));
    CHECK_THROWS_AS(batch_mult::validate_batch_params(params_of(2, 4, 2, 11), 4), ParameterError);
    CHECK(batch_mult::drop_budget(batch_mult::validate_batch_params(params_of(2, 4, 2, 11), 2)) == 4);
}

TEST_CASE("single request matches the PIR plan") {
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 1);
    for (std::size_t pt : {0u, 17u, 120u}) {
        const std::size_t req[] = {pt};
        const auto plan = batch_mult::plan_batch(bp, req);
        REQUIRE(plan.plans.size() == 1);
        CHECK(plan.plans[0].coordinates == pir::pir_recovery_plans(params, pt)[0].coordinates);
        CHECK(batch_mult::max_drops(plan) == 0);
    }
}

TEST_CASE("repeated point uses two families") {
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 2);
    const std::size_t req[] = {0, 0};
    const auto plan = batch_mult::plan_batch(bp, req);
    REQUIRE(plan.plans.size() == 2);
    CHECK(plan.plans[0].family_index == 0);
    CHECK(plan.plans[1].family_index == 1);
    CHECK(oracle::pairwise_disjoint(coordinate_sets(plan)));
    const std::size_t wrong[] = {0};
    CHECK_THROWS_AS(batch_mult::plan_batch(bp, wrong), PreconditionError);
}

TEST_CASE("every pair of points at (2,4,2,11) is served") {
    std::mt19937_64 rng(2016);
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 2);
    const auto c = multiplicity::encode_poly(params, mpoly::random_poly(params.field, 2, 4, rng));
    const auto requests = oracle::multisets(params.length(), 2);
    CHECK(requests.size() == 7381);
    std::size_t worst = 0;
    for (const auto& req : requests) {
        const auto plan = batch_mult::plan_batch(bp, req);
        check_plan(bp, plan, c);
        worst = std::max(worst, batch_mult::max_drops(plan));
    }
    CHECK(worst <= 4);
}

TEST_CASE("random multisets recover exactly") {
    std::mt19937_64 rng(7);
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 2);
    for (int t = 0; t < 100; ++t) {
        const auto c = multiplicity::encode_poly(params, mpoly::random_poly(params.field, 2, 4, rng));
        const std::size_t req[] = {rng() % 121, rng() % 121};
        check_plan(bp, batch_mult::plan_batch(bp, req), c);
    }
}

TEST_CASE("collinear requests") {
    std::mt19937_64 rng(12);
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 3);
    const auto& f = *params.field;
    const auto c = multiplicity::encode_poly(params, mpoly::random_poly(params.field, 2, 4, rng));
    // Three points on the line (3,4) + lambda (1,1).
    std::vector<std::size_t> req;
    for (Elem lam : {1u, 2u, 5u}) {
        const Elem w[] = {f.add(3, lam), f.add(4, lam)};
        req.push_back(multiplicity::point_index(params, w));
    }
    check_plan(bp, batch_mult::plan_batch(bp, req), c);

    const auto zero = multiplicity::encode_poly(params, mpoly::MultiPoly(params.field, 2));
    for (const auto& sym : batch_mult::recover_batch(zero, batch_mult::plan_batch(bp, req))) {
        CHECK(sym.entries == std::vector<Elem>{0, 0, 0});
    }
}

TEST_CASE("planning is deterministic and order-free") {
    const auto params = params_of(2, 4, 2, 11);
    const auto bp = batch_mult::validate_batch_params(params, 2);
    const std::size_t a[] = {40, 7}, b[] = {7, 40};
    const auto pa = batch_mult::plan_batch(bp, a);
    const auto pb = batch_mult::plan_batch(bp, b);
    CHECK(pa.request == pb.request);
    CHECK(coordinate_sets(pa) == coordinate_sets(pb));
}

TEST_CASE("batch redundancy exponents") {
    CHECK(batch_mult::batch_delta(Rational(1, 5), pir::Variant::Binary) == Rational(9, 10));
    CHECK(batch_mult::batch_delta(Rational(0), pir::Variant::QAry) == Rational(3, 4));
    CHECK(batch_mult::batch_delta(Rational(1, 2), pir::Variant::Binary) == Rational(1));
    CHECK(batch_mult::batch_delta(Rational(1, 2), pir::Variant::QAry) == Rational(1));
    CHECK_THROWS_AS(batch_mult::batch_delta(Rational(-1, 2), pir::Variant::QAry), PreconditionError);
}

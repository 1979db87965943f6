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
#include <sstream>

#include <nlohmann/json.hpp>

#include "pirbatch/array_code.hpp"
#include "pirbatch/errors.hpp"
#include "pirbatch/multiplicity.hpp"
#include "pirbatch/verify.hpp"

using namespace pirbatch;
using gf::Elem;
using gf::Field;
using verify::GeneratorMatrix;

namespace {

GeneratorMatrix identity(std::size_t n, std::uint32_t q = 2) {
    return verify::extract_generator(
        Field::of_order(q), [](std::span<const Elem> m) { return std::vector<Elem>(m.begin(), m.end()); }, n, n);
}

GeneratorMatrix repetition(std::size_t copies) {
    return verify::extract_generator(
        Field::of_order(2), [copies](std::span<const Elem> m) { return std::vector<Elem>(copies, m[0]); }, 1,
        copies);
}

GeneratorMatrix random_generator(std::mt19937_64& rng, std::uint32_t q, std::size_t n, std::size_t N) {
    GeneratorMatrix g{Field::of_order(q), n, N, gf::Matrix(n, N), {}};
    for (auto& x : g.entries.data) x = static_cast<Elem>(rng() % q);
    return g;
}

std::vector<std::size_t> subset_of(std::uint64_t mask, std::size_t N) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < N; ++c) {
        if (mask >> c & 1) out.push_back(c);
    }
    return out;
}

} // namespace

TEST_CASE("generator extraction") {
    const auto id = identity(4);
    CHECK(id.systematic());
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) CHECK(id.entries.at(r, c) == (r == c ? 1u : 0u));
    }

    // C(1,1,1,3) from polynomial coefficients: rows are 1 and x evaluated at 0,1,2.
    const auto params = multiplicity::make_params(1, 1, 1, Field::of_order(3));
    const auto g = verify::extract_generator(
        params.field,
        [&](std::span<const Elem> coeffs) {
            return multiplicity::encode_poly(params, mpoly::MultiPoly::univariate(params.field, coeffs)).flatten();
        },
        2, 3);
    CHECK(g.column(0) == std::vector<Elem>{1, 0});
    CHECK(g.column(1) == std::vector<Elem>{1, 1});
    CHECK(g.column(2) == std::vector<Elem>{1, 2});

    auto squaring = [](std::span<const Elem> m) {
        const auto f = Field::of_order(5);
        return std::vector<Elem>{m[0], f->mul(m[0], m[0])};
    };
    CHECK_THROWS_AS(verify::extract_generator(Field::of_order(5), squaring, 1, 2), CertificationError);
    auto affine = [](std::span<const Elem> m) { return std::vector<Elem>{m[0], 1}; };
    CHECK_THROWS_AS(verify::extract_generator(Field::of_order(5), affine, 1, 2), CertificationError);
}

TEST_CASE("recovering sets") {
    const auto id = identity(3);
    const std::size_t own[] = {1};
    CHECK(verify::is_recovering_set(id, 1, own).has_value());
    CHECK_FALSE(verify::is_recovering_set(id, 0, own).has_value());
    CHECK_FALSE(verify::is_recovering_set(id, 0, {}).has_value());

    const auto params = array_code::make_array_params(3, 5, {0, 2});
    const auto g = array_code::array_generator(params);
    const auto set = array_code::pir_sets_for_bit(params, {1, 3})[1];
    const auto coeffs = verify::is_recovering_set(g, 8, set);
    REQUIRE(coeffs);
    CHECK(*coeffs == std::vector<Elem>(set.size(), 1));
    // Dropping any one coordinate of a parity set breaks it.
    for (std::size_t drop = 0; drop < set.size(); ++drop) {
        auto smaller = set;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK_FALSE(verify::is_recovering_set(g, 8, smaller).has_value());
    }
    const std::size_t bad[] = {99};
    CHECK_THROWS_AS(verify::is_recovering_set(g, 0, bad), PreconditionError);
}

TEST_CASE("linear recovery matches functional recovery on small random codes") {
    std::mt19937_64 rng(123);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 1 + rng() % 3;
            const std::size_t N = n + rng() % 4;
            const auto g = random_generator(rng, q, n, N);
            for (std::uint64_t mask = 0; mask < (1ull << N); ++mask) {
                const auto r = subset_of(mask, N);
                for (std::size_t i = 0; i < n; ++i) {
                    REQUIRE(verify::is_recovering_set(g, i, r).has_value() == oracle::functionally_determined(g, i, r));
                }
            }
        }
    }
}

TEST_CASE("PIR certification") {
    const auto id = identity(4);
    std::vector<std::vector<verify::CoordinateSet>> singles;
    for (std::size_t i = 0; i < 4; ++i) singles.push_back({{i}});
    CHECK(verify::certify_pir(id, singles, 1).passed());
    CHECK_FALSE(verify::certify_pir(id, singles, 2).passed());

    const auto params = array_code::make_array_params(3, 5, {0, 1});
    const auto code = array_code::array_pir_code(params);
    CHECK(verify::certify_pir(code.generator, code.recovering_sets, 2).passed());
    auto broken = code.recovering_sets;
    broken[4][1].push_back(broken[4][0][0]);
    std::sort(broken[4][1].begin(), broken[4][1].end());
    const auto report = verify::certify_pir(code.generator, broken, 2);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].index == 4);
    CHECK(report.failures[0].detail.find("overlap") != std::string::npos);

    std::ostringstream csv;
    verify::write_report_csv(csv, report);
    CHECK(csv.str().rfind("request_id,status,detail\n", 0) == 0);
    CHECK(csv.str().find("4,fail,") != std::string::npos);
    const auto js = nlohmann::json::parse(verify::summary_json(report, 42));
    CHECK(js["total"] == 15);
    CHECK(js["failed"] == 1);
    CHECK(js["passed"] == 14);
    CHECK(js["seed"] == 42);
}

TEST_CASE("multiset enumeration") {
    const verify::MultisetRequests small(3, 2);
    CHECK(small.full_count() == 6);
    CHECK_FALSE(small.sampled());
    std::vector<std::vector<std::size_t>> seen;
    small.for_each([&](std::uint64_t id, std::span<const std::size_t> r) {
        CHECK(id == seen.size());
        seen.emplace_back(r.begin(), r.end());
    });
    CHECK(seen == oracle::multisets(3, 2));
    CHECK(verify::MultisetRequests(219, 2).full_count() == 24090);
    CHECK(verify::MultisetRequests(25, 5).full_count() == 118755);
    CHECK(verify::MultisetRequests(121, 2).full_count() == 7381);

    const verify::MultisetRequests big(100, 4, 50, 9);
    CHECK(big.sampled());
    CHECK(big.count() == 50);
    std::vector<std::vector<std::size_t>> a, b;
    big.for_each([&](std::uint64_t, std::span<const std::size_t> r) { a.emplace_back(r.begin(), r.end()); });
    big.for_each([&](std::uint64_t, std::span<const std::size_t> r) { b.emplace_back(r.begin(), r.end()); });
    CHECK(a == b);
    CHECK(a.size() == 50);
    for (const auto& r : a) CHECK(std::is_sorted(r.begin(), r.end()));
}

TEST_CASE("batch certification") {
    const auto params = array_code::make_array_params(3, 7, {0, 1});
    const auto g = array_code::array_generator(params);
    std::vector<verify::Target> targets;
    for (std::size_t i = 0; i < g.n; ++i) targets.push_back(verify::info_target(g, i));
    const array_code::ArrayBatchPlanner planner(params);
    verify::BatchPlanner fn = [&](std::span<const std::size_t> r) { return planner.plan(r); };

    const verify::MultisetRequests reqs(g.n, 2);
    const auto one = verify::certify_batch(g, fn, targets, reqs);
    CHECK(one.all_passed());
    CHECK(one.total == oracle::binomial(22, 2));
    CHECK(one.max_set_size == 3);
    const auto many = verify::certify_batch(g, fn, targets, reqs, {4, true});
    CHECK(many.total == one.total);
    CHECK(many.rows.size() == many.total);
    for (std::size_t i = 0; i < many.rows.size(); ++i) CHECK(many.rows[i].request_id == i);

    // k = 1 agrees with PIR certification using the first set.
    const auto code = array_code::array_pir_code(params);
    std::vector<std::vector<verify::CoordinateSet>> first;
    for (const auto& s : code.recovering_sets) first.push_back({s[0]});
    const auto single = verify::certify_batch(g, fn, targets, verify::MultisetRequests(g.n, 1));
    CHECK(single.all_passed() == verify::certify_pir(g, first, 1).passed());

    // A planner that reuses one set for everything is caught.
    verify::BatchPlanner lazy = [&](std::span<const std::size_t> r) {
        const auto s = planner.plan(r.subspan(0, 1));
        return std::vector<verify::CoordinateSet>(r.size(), s[0]);
    };
    const auto bad = verify::certify_batch(g, lazy, targets, verify::MultisetRequests(g.n, 2), {2, false});
    CHECK(bad.failed > 0);
    CHECK_FALSE(bad.all_passed());
    CHECK(bad.rows.size() == bad.failed);
    std::ostringstream csv;
    verify::write_report_csv(csv, bad);
    CHECK(csv.str().find(",fail,") != std::string::npos);
    const auto js = nlohmann::json::parse(verify::summary_json(bad));
    CHECK(js["failed"] == bad.failed);
    CHECK(js["seed"] == 20160701);
}

TEST_CASE("minimum distance") {
    CHECK(verify::min_distance(repetition(3)) == 3);
    CHECK(verify::min_distance(identity(5)) == 1);
    // Reed-Solomon [4, 2] over GF(5) is MDS.
    const auto params = multiplicity::make_params(1, 1, 1, Field::of_order(5));
    const auto view = multiplicity::SystematicView::build(params);
    const auto rs = verify::extract_generator(
        params.field, [&](std::span<const Elem> m) { return view.encode(m).flatten(); }, 2, 5);
    CHECK(verify::min_distance(rs) == 4);
    // Grouping pairs of bits into symbols.
    CHECK(verify::min_distance(repetition(4), 2) == 2);
    CHECK_THROWS_AS(verify::min_distance(repetition(3), 2), PreconditionError);
    CHECK_THROWS_AS(verify::min_distance(identity(25)), CapacityError);
}

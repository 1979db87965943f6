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
#include <set>

#include "pirbatch/array_code.hpp"
#include "pirbatch/errors.hpp"

using namespace pirbatch;
using namespace pirbatch::array_code;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> cells_of(const Diagonal& d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& c : d.cells) out.emplace_back(c.row, c.col);
    return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= n; ++p) {
        if (gf::is_prime(p)) out.push_back(p);
    }
    return out;
}

} // namespace

TEST_CASE("diagonals") {
    using V = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    CHECK(cells_of(diagonal(1, 0, 2, 3)) == V{{0, 0}, {1, 1}});
    CHECK(cells_of(diagonal(0, 2, 3, 5)) == V{{0, 2}, {1, 2}, {2, 2}});
    CHECK(cells_of(diagonal(2, 4, 3, 5)) == V{{0, 4}, {1, 1}, {2, 3}});
    CHECK_THROWS_AS(diagonal(5, 0, 3, 5), PreconditionError);
    CHECK(offset_through({1, 1}, 2, 5) == 4);
}

TEST_CASE("each slope partitions the array") {
    for (auto p : primes_up_to(13)) {
        for (std::uint32_t r = 1; r <= p; ++r) {
            for (std::uint32_t s = 0; s < p; ++s) {
                std::vector<int> hits(r * p, 0);
                for (std::uint32_t t = 0; t < p; ++t) {
                    const auto d = diagonal(s, t, r, p);
                    REQUIRE(d.cells.size() == r);
                    for (std::uint32_t i = 0; i < r; ++i) {
                        REQUIRE(d.cells[i].row == i);
                        ++hits[d.cells[i].row * p + d.cells[i].col];
                    }
                }
                for (int h : hits) REQUIRE(h == 1);
            }
        }
    }
}

TEST_CASE("diagonals of different slopes meet at most once") {
    for (auto p : primes_up_to(13)) {
        for (std::uint32_t r = 1; r <= p; ++r) {
            for (std::uint32_t s1 = 0; s1 < p; ++s1) {
                for (std::uint32_t s2 = s1 + 1; s2 < p; ++s2) {
                    for (std::uint32_t t1 = 0; t1 < p; ++t1) {
                        const auto a = cells_of(diagonal(s1, t1, r, p));
                        const std::set<std::pair<std::uint32_t, std::uint32_t>> sa(a.begin(), a.end());
                        for (std::uint32_t t2 = 0; t2 < p; ++t2) {
                            int common = 0;
                            for (const auto& c : cells_of(diagonal(s2, t2, r, p))) common += sa.count(c);
                            REQUIRE(common <= 1);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("encoding") {
    const auto params = make_array_params(2, 3, {0, 1});
    CHECK(params.dimension() == 6);
    CHECK(params.redundancy() == 6);
    const std::uint8_t zeros[6] = {};
    const auto z = encode_array(params, zeros);
    CHECK(z.parities == std::vector<std::uint8_t>(6, 0));

    const std::uint8_t data[6] = {1, 0, 0, 0, 1, 0};
    const auto c = encode_array(params, data);
    CHECK(c.parities == std::vector<std::uint8_t>{1, 1, 0, 0, 0, 0});

    const auto five = make_array_params(4, 7, {0, 2, 5});
    std::vector<std::uint8_t> one(28, 0);
    one[0] = 1;
    const auto flipped = encode_array(five, one);
    CHECK(std::count(flipped.parities.begin(), flipped.parities.end(), 1) == 3);
    for (std::size_t l = 0; l < 3; ++l) {
        CHECK(std::count(flipped.parities.begin() + l * 7, flipped.parities.begin() + (l + 1) * 7, 1) == 1);
    }

    const auto g = five_batch_code(5);
    const auto gz = encode_array(g, std::vector<std::uint8_t>(25, 0));
    CHECK(gz.global_parity == std::optional<std::uint8_t>(0));
    CHECK(g.redundancy() == 26);
    CHECK(g.length() == 51);

    CHECK_THROWS_AS(encode_array(params, std::vector<std::uint8_t>(5, 0)), PreconditionError);
    CHECK_THROWS_AS(make_array_params(2, 3, {1, 0}), ParameterError);
    CHECK_THROWS_AS(make_array_params(2, 3, {3}), ParameterError);
}

TEST_CASE("PIR sets") {
    const auto params = make_array_params(5, 5, {0, 1, 2});
    CHECK(params.redundancy() == 15);
    for (std::size_t bit = 0; bit < 25; ++bit) {
        const auto sets = pir_sets_for_bit(params, cell_of(params, bit));
        REQUIRE(sets.size() == 3);
        for (const auto& s : sets) {
            CHECK(s.size() == 5);
            CHECK_FALSE(std::binary_search(s.begin(), s.end(), bit));
        }
        CHECK(oracle::pairwise_disjoint(sets));
    }
    const auto col = make_array_params(3, 5, {0});
    const auto sets = pir_sets_for_bit(col, {1, 2});
    CHECK(sets == std::vector<CoordinateSet>{{2, 12, 15 + 2}});

    std::mt19937_64 rng(5);
    std::vector<std::uint8_t> data(25);
    for (auto& b : data) b = rng() & 1;
    const auto word = encode_array(params, data).flatten();
    for (std::size_t bit = 0; bit < 25; ++bit) {
        for (const auto& s : pir_sets_for_bit(params, cell_of(params, bit))) {
            std::uint8_t acc = 0;
            for (auto c : s) acc ^= word[c];
            CHECK(acc == data[bit]);
        }
    }
}

TEST_CASE("weighted progressions") {
    const std::uint32_t s012[] = {0, 1, 2};
    const auto w = has_weighted_ap(s012, 3, 7);
    REQUIRE(w);
    CHECK(*w == ApWitness{0, 2, 1, 1, 1});
    const std::uint32_t s01[] = {0, 1};
    CHECK_FALSE(has_weighted_ap(s01, 5, 7));
    const std::uint32_t s013[] = {0, 1, 3};
    CHECK_FALSE(has_weighted_ap(s013, 3, 73));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const std::uint32_t p = primes_up_to(40)[rng() % 12];
        const std::uint32_t r = 2 + rng() % 5;
        std::set<std::uint32_t> pick;
        const std::size_t size = 1 + rng() % 5;
        while (pick.size() < std::min<std::size_t>(size, p)) pick.insert(rng() % p);
        const std::vector<std::uint32_t> s(pick.begin(), pick.end());
        const auto found = has_weighted_ap(s, r, p);
        REQUIRE(found.has_value() == oracle::brute_force_ap(s, r, p));
        if (found) {
            CHECK((found->x * std::uint64_t(found->s1) + found->y * std::uint64_t(found->s2)) % p ==
                  (std::uint64_t(found->x + found->y) * found->s3) % p);
        }
    }
}

TEST_CASE("greedy slope sets") {
    CHECK(greedy_slope_set(3, 73, 3) == std::vector<std::uint32_t>{0, 1, 3});
    CHECK(greedy_slope_set(5, 11, 2) == std::vector<std::uint32_t>{0, 1});
    CHECK(greedy_slope_set(2, 7, 5) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    for (auto [r, k] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}}) {
        for (auto p : primes_up_to(200)) {
            if (p <= 2 * k * k * r * r) continue;
            const auto s = greedy_slope_set(r, p, k);
            CHECK(s.size() == k);
            CHECK_FALSE(oracle::brute_force_ap(s, r, p));
        }
    }
    try {
        greedy_slope_set(3, 5, 5);
        FAIL("expected exhaustion");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("reached size") != std::string::npos);
    }
}

TEST_CASE("(r,k)-batch construction") {
    const auto rk = build_rk_batch(3, 2);
    CHECK(rk.p == 73);
    CHECK(rk.dimension() == 219);
    CHECK(rk.redundancy() == 146);
    CHECK(Rational(static_cast<std::int64_t>(rk.dimension()), static_cast<std::int64_t>(rk.length())) ==
          Rational(3, 5));
    CHECK(build_rk_batch(3, 1).p == 19);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto c = build_rk_batch(3, k);
        CHECK(Rational(static_cast<std::int64_t>(c.dimension()), static_cast<std::int64_t>(c.length())) ==
              Rational(3, static_cast<std::int64_t>(3 + k)));
    }
}

TEST_CASE("greedy batch planner") {
    const auto rk = build_rk_batch(3, 2);
    const ArrayBatchPlanner planner(rk);
    const std::size_t single[] = {5};
    CHECK(planner.plan(single) == std::vector<CoordinateSet>{pir_sets_for_bit(rk, cell_of(rk, 5))[0]});
    const std::size_t twice[] = {100, 100};
    const auto sets = planner.plan(twice);
    CHECK(sets.size() == 2);
    CHECK(oracle::pairwise_disjoint(sets));
    CHECK_THROWS_AS(ArrayBatchPlanner(make_array_params(3, 7, {0, 1, 2})), PreconditionError);
    CHECK_THROWS_AS(ArrayBatchPlanner(make_array_params(3, 8, {0, 1})), PreconditionError);

    // Small AP-free instance, every 2-multiset.
    const auto small = make_array_params(3, 7, {0, 1});
    const ArrayBatchPlanner sp(small);
    for (const auto& req : oracle::multisets(21, 2)) CHECK(oracle::pairwise_disjoint(sp.plan(req)));
}

TEST_CASE("five-batch planner on sampled requests") {
    const FiveBatchPlanner planner(five_batch_code(5));
    const auto& g = planner.generator();
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::size_t> req(5);
        for (auto& b : req) b = rng() % 25;
        const auto sets = planner.plan(req);
        REQUIRE(sets.size() == 5);
        CHECK(oracle::pairwise_disjoint(sets));
        std::sort(req.begin(), req.end());
        for (std::size_t j = 0; j < 5; ++j) CHECK(verify::is_recovering_set(g, req[j], sets[j]).has_value());
    }
    const std::size_t same[] = {12, 12, 12, 12, 12};
    CHECK(planner.plan(same).size() == 5);
    CHECK_THROWS_AS(five_batch_code(4), ParameterError);
    CHECK_THROWS_AS(five_batch_code(3), ParameterError);
}

TEST_CASE("corollary parameters") {
    const auto c = corollary_params(1000, 2);
    CHECK(c.r == 7);
    CHECK(c.p == 397);
    CHECK(c.redundancy == 2 * 397);
    CHECK(c.dimension >= 1000);
    CHECK(corollary_params(1000, 1).r == 10);
    CHECK(corollary_params(1001, 1).r == 11);
    CHECK_THROWS_AS(corollary_params(4, 2), ParameterError);
}

TEST_CASE("array generator") {
    const auto params = make_array_params(2, 3, {0, 1});
    const auto g = array_generator(params);
    CHECK(g.n == 6);
    CHECK(g.N == 12);
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<std::uint8_t> unit(6, 0);
        unit[i] = 1;
        const auto word = encode_array(params, unit).flatten();
        for (std::size_t c = 0; c < 12; ++c) CHECK(g.entries.at(i, c) == word[c]);
    }
    const auto code = array_pir_code(make_array_params(5, 5, {0, 1, 2}));
    CHECK(verify::certify_pir(code.generator, code.recovering_sets, 3).passed());
}

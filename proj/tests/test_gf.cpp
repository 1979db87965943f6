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

#include <set>

#include "pirbatch/errors.hpp"
#include "pirbatch/gf.hpp"
#include "pirbatch/linalg.hpp"
#include "pirbatch/rational.hpp"

using namespace pirbatch;
using gf::Elem;
using gf::Field;

TEST_CASE("prime field arithmetic") {
    const auto f = Field::of_order(7);
    CHECK(f->add(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->sub(2, 5) == 4);
    CHECK(f->neg(0) == 0);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->from_int(-1) == 6);
    CHECK_THROWS_AS(f->inv(0), DomainError);
    for (Elem x = 1; x < 7; ++x) {
        Elem found = 0;
        for (Elem y = 1; y < 7; ++y) {
            if ((x * y) % 7 == 1) found = y;
        }
        CHECK(f->inv(x) == found);
    }
}

TEST_CASE("GF(4) uses x^2+x+1 and reduces x*x to x+1") {
    const auto f = Field::of_order(4);
    CHECK(f->spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
    // x has index 2, x+1 has index 3.
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->to_string(3) == "x+1");
    CHECK(f->repr(2) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("extension multiplication agrees with polynomial reduction") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        const auto f = Field::of_order(q);
        const auto& spec = f->spec();
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                const auto expect = oracle::poly_mulmod(f->repr(a), f->repr(b), spec.modulus, spec.characteristic);
                REQUIRE(f->mul(a, b) == f->from_repr(expect));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively up to q = 64") {
    for (std::uint32_t q = 2; q <= 64; ++q) {
        std::uint32_t n = q, p = 0;
        for (std::uint32_t c = 2; c <= n; ++c) {
            if (n % c == 0) {
                p = c;
                break;
            }
        }
        while (n % p == 0) n /= p;
        if (n != 1) {
            CHECK_THROWS_AS(Field::of_order(q), PreconditionError);
            continue;
        }
        const auto f = Field::of_order(q);
        CAPTURE(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            std::uint32_t inverses = 0;
            for (Elem b = 0; b < q; ++b) {
                if (f->mul(a, b) == 1) ++inverses;
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                if (q <= 16) {
                    for (Elem c = 0; c < q; ++c) {
                        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    }
                }
            }
            CHECK(inverses == (a == 0 ? 0u : 1u));
        }
    }
}

TEST_CASE("smallest irreducible modulus is lexicographically minimal") {
    for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}}) {
        const auto best = gf::smallest_irreducible(p, e);
        CHECK(gf::is_irreducible(p, best));
        // Every monic polynomial with a smaller coefficient index is reducible.
        std::uint32_t best_index = 0, scale = 1;
        for (std::uint32_t i = 0; i < e; ++i, scale *= p) best_index += best[i] * scale;
        for (std::uint32_t idx = 0; idx < best_index; ++idx) {
            std::vector<std::uint32_t> poly(e + 1, 0);
            std::uint32_t rest = idx;
            for (std::uint32_t i = 0; i < e; ++i, rest /= p) poly[i] = rest % p;
            poly[e] = 1;
            CHECK_FALSE(gf::is_irreducible(p, poly));
        }
    }
    CHECK_FALSE(gf::is_irreducible(2, {1, 0, 1}));  // (x+1)^2
}

TEST_CASE("enumerate_field lists elements in index order") {
    auto values = [](std::uint32_t q) {
        std::vector<std::string> out;
        for (const auto& e : gf::enumerate_field(Field::of_order(q))) out.push_back(e.field()->to_string(e.value()));
        return out;
    };
    CHECK(values(3) == std::vector<std::string>{"0", "1", "2"});
    CHECK(values(2) == std::vector<std::string>{"0", "1"});
    CHECK(values(4) == std::vector<std::string>{"0", "1", "x", "x+1"});
    const auto all = gf::enumerate_field(Field::of_order(27));
    std::set<Elem> distinct;
    for (const auto& e : all) distinct.insert(e.value());
    CHECK(distinct.size() == 27);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE((all[i] - all[j]).is_zero());
    }
}

TEST_CASE("capacity and validation") {
    CHECK_THROWS_AS(Field::of_order(1u << 17), CapacityError);
    CHECK_NOTHROW(Field::of_order(1u << 16));
    gf::FieldSpec bad{2, 2, {1, 0, 1}};
    CHECK_THROWS_AS(Field::create(bad), PreconditionError);
    gf::FieldSpec composite{4, 1, {0, 1}};
    CHECK_THROWS_AS(Field::create(composite), PreconditionError);
}

TEST_CASE("field elements refuse to mix fields") {
    const auto f5 = Field::of_order(5);
    const auto f7 = Field::of_order(7);
    gf::FieldElement a(f5, 2), b(f7, 2);
    CHECK_THROWS_AS(a + b, PreconditionError);
    CHECK(((a * a) == gf::FieldElement(f5, 4)));
    CHECK_THROWS_AS(gf::FieldElement(f5, 0).inv(), DomainError);
}

TEST_CASE("prime search") {
    CHECK(gf::smallest_prime_above(72) == 73);
    CHECK(gf::smallest_prime_above(1) == 2);
    CHECK(gf::smallest_prime_above(2 * 2 * 2 * 3 * 3) == 73);
    CHECK(gf::smallest_prime_above(392) == 397);
    CHECK(gf::smallest_prime_above(18) == 19);
}

TEST_CASE("linear algebra over GF(7)") {
    const auto f = Field::of_order(7);
    gf::Matrix a(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 2;
    a.at(1, 0) = 3; a.at(1, 1) = 4;
    const auto sol = gf::solve(*f, a, {5, 6});
    REQUIRE(sol.unique(2));
    CHECK(f->add(sol.x[0], f->mul(2, sol.x[1])) == 5);
    CHECK(f->add(f->mul(3, sol.x[0]), f->mul(4, sol.x[1])) == 6);
    const auto inv = gf::inverse(*f, a);
    REQUIRE(inv);
    gf::Matrix singular(2, 2);
    singular.at(0, 0) = 1; singular.at(0, 1) = 2;
    singular.at(1, 0) = 2; singular.at(1, 1) = 4;
    CHECK_FALSE(gf::inverse(*f, singular));
    CHECK(gf::rank(*f, singular) == 1);
    CHECK_FALSE(gf::solve(*f, singular, {1, 1}).consistent);
    CHECK(gf::pivot_columns(*f, singular) == std::vector<std::size_t>{0});
}

TEST_CASE("exact rationals") {
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("3/8") == Rational(3, 8));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(to_string(Rational(5, 6)) == "5/6");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1.2.3"), PreconditionError);
    CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

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
#include <map>
#include <random>
#include <span>
#include <vector>

#include "pirbatch/gf.hpp"

namespace pirbatch::mpoly {

using gf::Elem;
using gf::FieldPtr;

using Point = std::vector<Elem>;

// Exponent vector i of the monomial x^i.
class MonomialExponent {
public:
    MonomialExponent() = default;
    explicit MonomialExponent(std::vector<std::uint32_t> exps);

    const std::vector<std::uint32_t>& exps() const { return exps_; }
    std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
    std::size_t variables() const { return exps_.size(); }
    std::uint32_t weight() const { return weight_; }

    friend bool operator==(const MonomialExponent& a, const MonomialExponent& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t weight_ = 0;
};

// Graded-lexicographic: lower weight first, then x_1 > x_2 > ... so that
// (1,0) precedes (0,1). This order indexes every ordered evaluation.
struct GradedLex {
    bool operator()(const MonomialExponent& a, const MonomialExponent& b) const;
};

// All exponents in s variables with weight < bound, graded-lex order.
std::vector<MonomialExponent> monomials_below(std::size_t s, std::uint32_t bound);
// All exponents in s variables with weight exactly j, graded-lex order.
std::vector<MonomialExponent> monomials_of_weight(std::size_t s, std::uint32_t j);

// C(s+m-1, s): number of derivatives in an order-m evaluation.
std::uint64_t count_monomials(std::uint64_t s, std::uint64_t m);
// C(d+s, s): dimension of polynomials of degree <= d.
std::uint64_t count_degree(std::uint64_t s, std::uint64_t d);

// C(n, k) reduced mod the prime p.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

class MultiPoly {
public:
    using Terms = std::map<MonomialExponent, Elem, GradedLex>;

    MultiPoly(FieldPtr field, std::size_t s);

    static MultiPoly constant(FieldPtr field, std::size_t s, Elem c);
    // Univariate polynomial from low-to-high coefficients.
    static MultiPoly univariate(FieldPtr field, std::span<const Elem> coeffs);

    const FieldPtr& field() const { return field_; }
    std::size_t variables() const { return s_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Maximum total degree; -1 for the zero polynomial.
    int degree() const;

    Elem coefficient(const MonomialExponent& i) const;
    // Setting a zero coefficient erases the term.
    void set(const MonomialExponent& i, Elem c);
    void add_to(const MonomialExponent& i, Elem c);

    // Univariate view: coefficients of lambda^0..lambda^d.
    std::vector<Elem> univariate_coefficients(std::size_t d) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(Elem c, const MultiPoly& a);

private:
    void check_compatible(const MultiPoly& other) const;

    FieldPtr field_;
    std::size_t s_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

Elem evaluate(const MultiPoly& p, std::span<const Elem> w);

MultiPoly hasse_derivative(const MultiPoly& p, const MonomialExponent& i);

// Entries P^(i)(w) for all i with wt(i) < m in graded-lex order.
struct OrderedEvaluation {
    std::uint32_t m = 0;
    std::vector<Elem> entries;

    friend bool operator==(const OrderedEvaluation&, const OrderedEvaluation&) = default;
};

OrderedEvaluation order_m_evaluation(const MultiPoly& p, std::span<const Elem> w, std::uint32_t m);

struct HermiteSample {
    Elem lambda = 0;
    OrderedEvaluation evaluation;
};

// Unique univariate polynomial of degree <= d matching every sample's
// value and first m-1 Hasse derivatives. Missing lambda values are simply
// absent from the list, so erasures need no special handling.
MultiPoly hermite_interpolate(const FieldPtr& field, std::span<const HermiteSample> samples,
                              std::uint32_t d);

struct GridSample {
    Point point;
    Elem value = 0;
};

// Unique homogeneous polynomial of degree j in s variables taking the
// given values on a grid A_1 x ... x A_{s-1} x {1}.
MultiPoly homogeneous_interpolate(const FieldPtr& field, std::uint32_t j,
                                  std::span<const GridSample> samples, std::size_t s);

// Uniform random polynomial of total degree <= d.
MultiPoly random_poly(const FieldPtr& field, std::size_t s, std::uint32_t d, std::mt19937_64& rng);

// Uniform random homogeneous polynomial of degree exactly-or-below j
// (coefficients may vanish).
MultiPoly random_homogeneous(const FieldPtr& field, std::size_t s, std::uint32_t j,
                             std::mt19937_64& rng);

} // namespace pirbatch::mpoly

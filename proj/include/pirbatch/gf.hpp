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
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace pirbatch::gf {

// Index of a field element. The element c_0 + c_1 x + ... + c_{e-1} x^{e-1}
// has index sum c_i p^i, so index order is lexicographic on the
// coefficient vector read from the top coefficient down. 0 and 1 keep
// their integer meaning.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
    std::uint32_t characteristic = 2;
    std::uint32_t extension_degree = 1;
    // Monic modulus, low coefficient first, length extension_degree + 1.
    // For prime fields this is {0, 1}.
    std::vector<std::uint32_t> modulus{0, 1};

    std::uint32_t order() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_above(std::uint64_t bound);

// Brute-force irreducibility: no monic factor of degree 1..deg/2 divides poly.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Smallest monic irreducible of the given degree, comparing the
// non-leading coefficients by their base-p index.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree);

// Field spec for GF(q); the modulus is the smallest irreducible.
FieldSpec field_spec_for_order(std::uint32_t q);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Certifies primality and irreducibility, then builds log tables.
    static FieldPtr create(const FieldSpec& spec);
    static FieldPtr of_order(std::uint32_t q);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return spec_.characteristic; }
    std::uint32_t degree() const { return spec_.extension_degree; }
    bool is_prime_field() const { return spec_.extension_degree == 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    // Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;

    std::vector<std::uint32_t> repr(Elem a) const;
    Elem from_repr(const std::vector<std::uint32_t>& coeffs) const;

    // "3" for prime fields, "x+1" style for extensions.
    std::string to_string(Elem a) const;

    // Multiplication-by-a as an e x e matrix over GF(p) acting on repr
    // column vectors. Row-major.
    std::vector<std::uint32_t> multiplication_matrix(Elem a) const;

    bool contains(Elem a) const { return a < order_; }

private:
    explicit Field(FieldSpec spec);
    Elem slow_mul(Elem a, Elem b) const;

    FieldSpec spec_;
    std::uint32_t order_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

// Value-semantic element carrying its field. Mixing fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    std::vector<std::uint32_t> repr() const { return field_->repr(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

private:
    FieldPtr field_;
    Elem value_;
};

// All q elements in index order: zero first, one second.
std::vector<FieldElement> enumerate_field(const FieldPtr& field);

} // namespace pirbatch::gf

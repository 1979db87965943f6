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

#include "pirbatch/gf.hpp"

#include <algorithm>
#include <sstream>

#include "pirbatch/errors.hpp"

namespace pirbatch::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

std::uint32_t FieldSpec::order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < extension_degree; ++i) {
        q *= characteristic;
        if (q > kMaxFieldOrder) {
            throw CapacityError("field order exceeds 2^16");
        }
    }
    return static_cast<std::uint32_t>(q);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::uint64_t smallest_prime_above(std::uint64_t bound) {
    std::uint64_t c = bound + 1;
    while (!is_prime(c)) ++c;
    return c;
}

bool is_irreducible(std::uint32_t p, const Poly& poly_in) {
    Poly poly = poly_in;
    trim(poly);
    if (poly.size() < 2) return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    // Every monic divisor of degree t: t coefficients below the leading 1.
    for (std::size_t t = 1; t <= deg / 2; ++t) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < t; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly divisor(t + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < t; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            divisor[t] = 1;
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
    if (degree == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly candidate(degree + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < degree; ++i) {
            candidate[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        candidate[degree] = 1;
        if (is_irreducible(p, candidate)) return candidate;
    }
    throw DomainError("no irreducible polynomial found");
}

FieldSpec field_spec_for_order(std::uint32_t q) {
    if (q < 2) throw PreconditionError("field order must be at least 2");
    if (q > kMaxFieldOrder) throw CapacityError("field order exceeds 2^16");
    std::uint32_t p = 0;
    for (std::uint32_t f = 2; f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) {
        throw PreconditionError("field order " + std::to_string(q) + " is not a prime power");
    }
    FieldSpec spec;
    spec.characteristic = p;
    spec.extension_degree = e;
    spec.modulus = smallest_irreducible(p, e);
    return spec;
}

FieldPtr Field::create(const FieldSpec& spec) {
    if (!is_prime(spec.characteristic)) {
        throw PreconditionError("characteristic " + std::to_string(spec.characteristic) +
                                " is not prime");
    }
    if (spec.extension_degree == 0) {
        throw PreconditionError("extension degree must be positive");
    }
    (void)spec.order();
    if (spec.modulus.size() != spec.extension_degree + 1 || spec.modulus.back() != 1) {
        throw PreconditionError("modulus must be monic of the extension degree");
    }
    for (auto c : spec.modulus) {
        if (c >= spec.characteristic) throw PreconditionError("modulus coefficient out of range");
    }
    if (spec.extension_degree == 1) {
        if (spec.modulus != Poly{0, 1}) {
            throw PreconditionError("prime field modulus must be x");
        }
    } else if (!is_irreducible(spec.characteristic, spec.modulus)) {
        throw PreconditionError("modulus is reducible");
    }
    return FieldPtr(new Field(spec));
}

FieldPtr Field::of_order(std::uint32_t q) { return create(field_spec_for_order(q)); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)), order_(spec_.order()) {
    const std::uint32_t n = order_ - 1;
    std::vector<std::uint64_t> factors = prime_factors(n);
    Elem generator = 0;
    for (Elem g = 1; g < order_; ++g) {
        bool primitive = true;
        for (auto f : factors) {
            Elem acc = 1;
            Elem base = g;
            std::uint64_t e = n / f;
            while (e) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(order_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x;
        exp_[i + n] = x;
        log_[x] = i;
        x = slow_mul(x, generator);
    }
}

Elem Field::slow_mul(Elem a, Elem b) const {
    const std::uint32_t p = spec_.characteristic;
    if (spec_.extension_degree == 1) {
        return static_cast<Elem>(std::uint64_t(a) * b % p);
    }
    Poly pa = repr(a), pb = repr(b);
    Poly prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p);
        }
    }
    Poly r = poly_mod(prod, spec_.modulus, p);
    r.resize(spec_.extension_degree, 0);
    return from_repr(r);
}

Elem Field::add(Elem a, Elem b) const {
    const std::uint32_t p = spec_.characteristic;
    if (spec_.extension_degree == 1) {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_.extension_degree; ++i) {
        const std::uint32_t da = a % p, db = b % p;
        std::uint32_t d = da + db;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    const std::uint32_t p = spec_.characteristic;
    if (spec_.extension_degree == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_.extension_degree; ++i) {
        const std::uint32_t d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        a /= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    const std::uint32_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return exp_[static_cast<std::size_t>((std::uint64_t(log_[a]) * (e % n)) % n)];
}

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t p = spec_.characteristic;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::repr(Elem a) const {
    std::vector<std::uint32_t> out(spec_.extension_degree);
    for (auto& c : out) {
        c = a % spec_.characteristic;
        a /= spec_.characteristic;
    }
    return out;
}

Elem Field::from_repr(const std::vector<std::uint32_t>& coeffs) const {
    Elem out = 0, scale = 1;
    for (std::size_t i = 0; i < coeffs.size() && i < spec_.extension_degree; ++i) {
        out += (coeffs[i] % spec_.characteristic) * scale;
        scale *= spec_.characteristic;
    }
    return out;
}

std::string Field::to_string(Elem a) const {
    if (spec_.extension_degree == 1) return std::to_string(a);
    if (a == 0) return "0";
    const auto c = repr(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::vector<std::uint32_t> Field::multiplication_matrix(Elem a) const {
    const std::uint32_t e = spec_.extension_degree;
    std::vector<std::uint32_t> m(std::size_t(e) * e, 0);
    Elem basis = 1;
    for (std::uint32_t col = 0; col < e; ++col) {
        const auto image = repr(mul(a, basis));
        for (std::uint32_t row = 0; row < e; ++row) m[std::size_t(row) * e + col] = image[row];
        basis *= spec_.characteristic;
    }
    return m;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw PreconditionError("field element without a field");
    if (!field_->contains(value_)) throw PreconditionError("element index out of range");
}

namespace {
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field() && a.field()->spec() != b.field()->spec()) {
        throw PreconditionError("field elements belong to different fields");
    }
    return a.field();
}
} // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    common_field(a, b);
    return a.value_ == b.value_;
}
std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.field_->to_string(a.value_);
}

std::vector<FieldElement> enumerate_field(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->order());
    for (Elem a = 0; a < field->order(); ++a) out.emplace_back(field, a);
    return out;
}

} // namespace pirbatch::gf

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

#include "pirbatch/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pirbatch/errors.hpp"
#include "pirbatch/linalg.hpp"

namespace pirbatch::mpoly {

MonomialExponent::MonomialExponent(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)), weight_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

bool GradedLex::operator()(const MonomialExponent& a, const MonomialExponent& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    // Larger leading exponent comes first.
    return a.exps() > b.exps();
}

namespace {

void fill_weight(std::size_t s, std::uint32_t remaining, std::vector<std::uint32_t>& prefix,
                 std::vector<MonomialExponent>& out) {
    if (prefix.size() + 1 == s) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        prefix.push_back(e);
        fill_weight(s, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MonomialExponent> monomials_of_weight(std::size_t s, std::uint32_t j) {
    std::vector<MonomialExponent> out;
    if (s == 0) {
        if (j == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    std::vector<std::uint32_t> prefix;
    fill_weight(s, j, prefix, out);
    return out;
}

std::vector<MonomialExponent> monomials_below(std::size_t s, std::uint32_t bound) {
    std::vector<MonomialExponent> out;
    for (std::uint32_t j = 0; j < bound; ++j) {
        auto layer = monomials_of_weight(s, j);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

namespace {
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}
} // namespace

std::uint64_t count_monomials(std::uint64_t s, std::uint64_t m) {
    if (m == 0) return 0;
    return binomial_exact(s + m - 1, s);
}

std::uint64_t count_degree(std::uint64_t s, std::uint64_t d) { return binomial_exact(d + s, s); }

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    if (n <= 60) return static_cast<std::uint32_t>(binomial_exact(n, k) % p);
    // Lucas: product of digit binomials, each computed with inverses mod p.
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < kd; ++i) {
            num = num * ((nd - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * num % p * inv % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

MultiPoly::MultiPoly(FieldPtr field, std::size_t s) : field_(std::move(field)), s_(s) {
    if (!field_) throw PreconditionError("polynomial without a field");
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t s, Elem c) {
    MultiPoly p(std::move(field), s);
    p.set(MonomialExponent(std::vector<std::uint32_t>(s, 0)), c);
    return p;
}

MultiPoly MultiPoly::univariate(FieldPtr field, std::span<const Elem> coeffs) {
    MultiPoly p(std::move(field), 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        p.set(MonomialExponent({static_cast<std::uint32_t>(k)}), coeffs[k]);
    }
    return p;
}

int MultiPoly::degree() const {
    int deg = -1;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, static_cast<int>(mono.weight()));
    return deg;
}

Elem MultiPoly::coefficient(const MonomialExponent& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::set(const MonomialExponent& i, Elem c) {
    if (i.variables() != s_) throw PreconditionError("monomial has wrong number of variables");
    if (!field_->contains(c)) throw PreconditionError("coefficient outside the field");
    if (c == 0) {
        terms_.erase(i);
    } else {
        terms_[i] = c;
    }
}

void MultiPoly::add_to(const MonomialExponent& i, Elem c) { set(i, field_->add(coefficient(i), c)); }

std::vector<Elem> MultiPoly::univariate_coefficients(std::size_t d) const {
    if (s_ != 1) throw PreconditionError("univariate view of a multivariate polynomial");
    std::vector<Elem> out(d + 1, 0);
    for (const auto& [mono, c] : terms_) {
        if (mono[0] > d) throw PreconditionError("polynomial degree exceeds requested bound");
        out[mono[0]] = c;
    }
    return out;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (s_ != other.s_) throw PreconditionError("polynomials in different numbers of variables");
    if (field_ != other.field_ && field_->spec() != other.field_->spec()) {
        throw PreconditionError("polynomials over different fields");
    }
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a;
    for (const auto& [mono, c] : b.terms_) out.add_to(mono, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out = a;
    for (const auto& [mono, c] : b.terms_) out.add_to(mono, a.field_->neg(c));
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.field_, a.s_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<std::uint32_t> e(a.s_);
            for (std::size_t k = 0; k < a.s_; ++k) e[k] = ma[k] + mb[k];
            out.add_to(MonomialExponent(std::move(e)), a.field_->mul(ca, cb));
        }
    }
    return out;
}

MultiPoly operator*(Elem c, const MultiPoly& a) {
    MultiPoly out(a.field_, a.s_);
    for (const auto& [mono, coeff] : a.terms_) out.set(mono, a.field_->mul(c, coeff));
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, c] = *it;
        if (!first) os << " + ";
        first = false;
        const bool unit = mono.weight() == 0;
        if (c != 1 || unit) os << p.field()->to_string(c);
        bool need_star = c != 1;
        for (std::size_t k = 0; k < mono.variables(); ++k) {
            if (mono[k] == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            os << 'x' << (k + 1);
            if (mono[k] > 1) os << '^' << mono[k];
        }
    }
    return os;
}

namespace {

void check_point(const MultiPoly& p, std::span<const Elem> w) {
    if (w.size() != p.variables()) throw PreconditionError("point dimension does not match polynomial");
    for (auto x : w) {
        if (!p.field()->contains(x)) throw PreconditionError("point coordinate outside the field");
    }
}

// powers[k][e] = w_k^e for e <= max_deg.
std::vector<std::vector<Elem>> power_table(const gf::Field& f, std::span<const Elem> w, int max_deg) {
    std::vector<std::vector<Elem>> powers(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        powers[k].resize(static_cast<std::size_t>(std::max(max_deg, 0)) + 1);
        powers[k][0] = 1;
        for (int e = 1; e <= max_deg; ++e) powers[k][e] = f.mul(powers[k][e - 1], w[k]);
    }
    return powers;
}

} // namespace

Elem evaluate(const MultiPoly& p, std::span<const Elem> w) {
    check_point(p, w);
    const auto& f = *p.field();
    const auto powers = power_table(f, w, p.degree());
    Elem acc = 0;
    for (const auto& [mono, c] : p.terms()) {
        Elem term = c;
        for (std::size_t k = 0; k < w.size(); ++k) term = f.mul(term, powers[k][mono[k]]);
        acc = f.add(acc, term);
    }
    return acc;
}

MultiPoly hasse_derivative(const MultiPoly& p, const MonomialExponent& i) {
    if (i.variables() != p.variables()) throw PreconditionError("derivative index has wrong dimension");
    const auto& f = *p.field();
    MultiPoly out(p.field(), p.variables());
    for (const auto& [mono, c] : p.terms()) {
        Elem coeff = c;
        std::vector<std::uint32_t> e(p.variables());
        bool survives = true;
        for (std::size_t k = 0; k < p.variables() && survives; ++k) {
            if (mono[k] < i[k]) {
                survives = false;
                break;
            }
            coeff = f.mul(coeff, f.from_int(binomial_mod(mono[k], i[k], f.characteristic())));
            e[k] = mono[k] - i[k];
        }
        if (survives && coeff != 0) out.add_to(MonomialExponent(std::move(e)), coeff);
    }
    return out;
}

OrderedEvaluation order_m_evaluation(const MultiPoly& p, std::span<const Elem> w, std::uint32_t m) {
    if (m == 0) throw PreconditionError("evaluation order must be at least 1");
    check_point(p, w);
    const auto& f = *p.field();
    const auto powers = power_table(f, w, p.degree());
    const auto index = monomials_below(p.variables(), m);
    OrderedEvaluation out{m, std::vector<Elem>(index.size(), 0)};
    for (std::size_t slot = 0; slot < index.size(); ++slot) {
        const auto& i = index[slot];
        Elem acc = 0;
        for (const auto& [mono, c] : p.terms()) {
            Elem term = c;
            for (std::size_t k = 0; k < w.size() && term != 0; ++k) {
                if (mono[k] < i[k]) {
                    term = 0;
                    break;
                }
                term = f.mul(term, f.from_int(binomial_mod(mono[k], i[k], f.characteristic())));
                term = f.mul(term, powers[k][mono[k] - i[k]]);
            }
            acc = f.add(acc, term);
        }
        out.entries[slot] = acc;
    }
    return out;
}

MultiPoly hermite_interpolate(const FieldPtr& field, std::span<const HermiteSample> samples,
                              std::uint32_t d) {
    const auto& f = *field;
    std::uint32_t m = 0;
    std::set<Elem> seen;
    for (const auto& s : samples) {
        if (!f.contains(s.lambda)) throw PreconditionError("sample point outside the field");
        if (!seen.insert(s.lambda).second) throw PreconditionError("duplicate interpolation point");
        if (m == 0) m = s.evaluation.m;
        if (s.evaluation.m != m || s.evaluation.entries.size() != m) {
            throw PreconditionError("samples must all be univariate order-m evaluations");
        }
    }
    const std::uint64_t equations = std::uint64_t(m) * samples.size();
    if (equations < std::uint64_t(d) + 1) {
        throw PreconditionError("under-determined interpolation: m * #samples < d + 1");
    }
    gf::Matrix a(static_cast<std::size_t>(equations), d + 1);
    std::vector<Elem> b(a.rows);
    std::size_t row = 0;
    for (const auto& s : samples) {
        for (std::uint32_t j = 0; j < m; ++j, ++row) {
            for (std::uint32_t k = j; k <= d; ++k) {
                a.at(row, k) = f.mul(f.from_int(binomial_mod(k, j, f.characteristic())),
                                     f.pow(s.lambda, k - j));
            }
            b[row] = s.evaluation.entries[j];
        }
    }
    const auto sol = gf::solve(f, std::move(a), std::move(b));
    if (!sol.consistent) throw DecodeFailure("samples are not consistent with any degree-d polynomial");
    if (sol.rank != d + 1) throw PreconditionError("interpolation system is rank deficient");
    return MultiPoly::univariate(field, sol.x);
}

MultiPoly homogeneous_interpolate(const FieldPtr& field, std::uint32_t j,
                                  std::span<const GridSample> samples, std::size_t s) {
    const auto& f = *field;
    if (s == 0) throw PreconditionError("homogeneous interpolation needs at least one variable");
    if (samples.empty()) throw PreconditionError("no interpolation samples");
    for (const auto& smp : samples) {
        if (smp.point.size() != s) throw PreconditionError("sample point has wrong dimension");
        if (smp.point.back() != 1) throw PreconditionError("grid points must have last coordinate 1");
    }

    // Axes of the grid, sorted.
    const std::size_t axes = s - 1;
    std::vector<std::vector<Elem>> axis(axes);
    for (std::size_t k = 0; k < axes; ++k) {
        std::set<Elem> values;
        for (const auto& smp : samples) values.insert(smp.point[k]);
        axis[k].assign(values.begin(), values.end());
        if (axis[k].size() < std::size_t(j) + 1) {
            throw PreconditionError("grid too small for the requested degree");
        }
    }

    std::vector<std::size_t> dims(axes);
    std::size_t total = 1;
    for (std::size_t k = 0; k < axes; ++k) {
        dims[k] = axis[k].size();
        total *= dims[k];
    }
    // Row-major grid storage, first axis most significant.
    std::vector<Elem> grid(total, 0);
    std::vector<bool> filled(total, false);
    for (const auto& smp : samples) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < axes; ++k) {
            const auto pos = std::lower_bound(axis[k].begin(), axis[k].end(), smp.point[k]) - axis[k].begin();
            idx = idx * dims[k] + static_cast<std::size_t>(pos);
        }
        if (filled[idx] && grid[idx] != smp.value) throw DecodeFailure("conflicting samples at one grid point");
        filled[idx] = true;
        grid[idx] = smp.value;
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
        throw PreconditionError("sample points do not form a full grid");
    }

    // Interpolate along each axis in turn: fibers of values become fibers
    // of coefficients via the inverse Vandermonde matrix of that axis.
    std::size_t stride = total;
    for (std::size_t k = 0; k < axes; ++k) {
        const std::size_t n = dims[k];
        stride /= n;
        gf::Matrix vander(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t e = 0; e < n; ++e) vander.at(a, e) = f.pow(axis[k][a], e);
        }
        const auto vinv = gf::inverse(f, vander);
        if (!vinv) throw PreconditionError("grid axis has repeated values");
        const std::size_t outer = total / (n * stride);
        std::vector<Elem> fiber(n);
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t in = 0; in < stride; ++in) {
                const std::size_t base = o * n * stride + in;
                for (std::size_t e = 0; e < n; ++e) {
                    Elem acc = 0;
                    for (std::size_t a = 0; a < n; ++a) {
                        acc = f.add(acc, f.mul(vinv->at(e, a), grid[base + a * stride]));
                    }
                    fiber[e] = acc;
                }
                for (std::size_t e = 0; e < n; ++e) grid[base + e * stride] = fiber[e];
            }
        }
    }

    MultiPoly out(field, s);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (grid[idx] == 0) continue;
        std::vector<std::uint32_t> e(s, 0);
        std::size_t rest = idx;
        std::uint32_t weight = 0;
        for (std::size_t k = axes; k-- > 0;) {
            e[k] = static_cast<std::uint32_t>(rest % dims[k]);
            rest /= dims[k];
            weight += e[k];
        }
        if (weight > j) throw DecodeFailure("grid values do not come from a homogeneous degree-j polynomial");
        e[s - 1] = j - weight;
        out.set(MonomialExponent(std::move(e)), grid[idx]);
    }
    return out;
}

MultiPoly random_poly(const FieldPtr& field, std::size_t s, std::uint32_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> coeff(0, field->order() - 1);
    MultiPoly p(field, s);
    for (const auto& mono : monomials_below(s, d + 1)) p.set(mono, coeff(rng));
    return p;
}

MultiPoly random_homogeneous(const FieldPtr& field, std::size_t s, std::uint32_t j,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> coeff(0, field->order() - 1);
    MultiPoly p(field, s);
    for (const auto& mono : monomials_of_weight(s, j)) p.set(mono, coeff(rng));
    return p;
}

} // namespace pirbatch::mpoly

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

// Slow, independent reference computations used to cross-check the
// library. Nothing here calls the code under test beyond field arithmetic.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pirbatch/gf.hpp"
#include "pirbatch/verify.hpp"

namespace oracle {

using pirbatch::gf::Elem;
using pirbatch::gf::Field;

// Naive polynomial product over GF(p) reduced by a monic modulus.
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
    std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t e = modulus.size() - 1;
    for (std::size_t k = prod.size(); k-- > e;) {
        const std::uint32_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= e; ++t) {
            prod[k - e + t] = (prod[k - e + t] + p * p - c * modulus[t] % p) % p;
        }
    }
    prod.resize(e);
    return prod;
}

// Enumerates every message of g's field and asks whether the restriction
// of the codeword to R pins down message symbol i.
inline bool functionally_determined(const pirbatch::verify::GeneratorMatrix& g, std::size_t i,
                                    std::span<const std::size_t> r) {
    const Field& f = *g.field;
    const std::uint32_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < g.n; ++k) total *= q;
    std::map<std::vector<Elem>, Elem> seen;
    std::vector<Elem> msg(g.n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t k = 0; k < g.n; ++k) {
            msg[k] = static_cast<Elem>(rest % q);
            rest /= q;
        }
        std::vector<Elem> view;
        view.reserve(r.size());
        for (auto c : r) {
            Elem acc = 0;
            for (std::size_t k = 0; k < g.n; ++k) acc = f.add(acc, f.mul(msg[k], g.entries.at(k, c)));
            view.push_back(acc);
        }
        auto [it, inserted] = seen.emplace(std::move(view), msg[i]);
        if (!inserted && it->second != msg[i]) return false;
    }
    return true;
}

// Lagrange interpolation of (x_j, y_j) evaluated at x.
inline Elem lagrange_at(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys, Elem x) {
    Elem acc = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        Elem num = 1, den = 1;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k == j) continue;
            num = f.mul(num, f.sub(x, xs[k]));
            den = f.mul(den, f.sub(xs[j], xs[k]));
        }
        acc = f.add(acc, f.mul(ys[j], f.div(num, den)));
    }
    return acc;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All sorted k-multisets over [items] in lexicographic order.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t items, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < items; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool pairwise_disjoint(const std::vector<std::vector<std::size_t>>& sets) {
    std::map<std::size_t, std::size_t> owner;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (auto c : sets[s]) {
            if (!owner.emplace(c, s).second) return false;
        }
    }
    return true;
}

// Independent AP search: tries every ordered triple of distinct slopes
// and every weight pair directly.
inline bool brute_force_ap(const std::vector<std::uint32_t>& s, std::uint32_t r, std::uint32_t p) {
    for (auto a : s) {
        for (auto b : s) {
            for (auto c : s) {
                if (a == b || b == c || a == c) continue;
                for (std::uint32_t x = 1; x < r - 1; ++x) {
                    for (std::uint32_t y = 1; y < r - 1; ++y) {
                        if (x + y >= r) continue;
                        if ((x * a + y * b) % p == ((x + y) * c) % p) return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace oracle

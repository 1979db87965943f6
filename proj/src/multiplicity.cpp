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

#include "pirbatch/multiplicity.hpp"

#include <algorithm>

#include "pirbatch/errors.hpp"

namespace pirbatch::multiplicity {

namespace {
constexpr std::uint64_t kMaxCodeLength = 1u << 20;
}

std::size_t MultCodeParams::symbol_width() const {
    return static_cast<std::size_t>(mpoly::count_monomials(s, m));
}

std::size_t MultCodeParams::length() const {
    std::size_t n = 1;
    for (std::size_t k = 0; k < s; ++k) n *= q();
    return n;
}

std::size_t MultCodeParams::dimension() const {
    return static_cast<std::size_t>(mpoly::count_degree(s, d));
}

MultCodeParams make_params(std::uint32_t m, std::uint32_t d, std::size_t s, FieldPtr field) {
    if (!field) throw PreconditionError("multiplicity code needs a field");
    if (m == 0) throw ParameterError("order m must be at least 1");
    if (s == 0) throw ParameterError("variable count s must be at least 1");
    std::uint64_t n = 1;
    for (std::size_t k = 0; k < s; ++k) {
        n *= field->order();
        if (n > kMaxCodeLength) throw CapacityError("q^s exceeds the desk-scale cap of 2^20");
    }
    return MultCodeParams{m, d, s, std::move(field)};
}

std::size_t point_index(const MultCodeParams& params, std::span<const Elem> w) {
    if (w.size() != params.s) throw PreconditionError("point has wrong dimension");
    std::size_t idx = 0;
    for (auto x : w) {
        if (x >= params.q()) throw PreconditionError("point coordinate outside the field");
        idx = idx * params.q() + x;
    }
    return idx;
}

Point point_at(const MultCodeParams& params, std::size_t index) {
    Point w(params.s);
    for (std::size_t k = params.s; k-- > 0;) {
        w[k] = static_cast<Elem>(index % params.q());
        index /= params.q();
    }
    return w;
}

const OrderedEvaluation& MultCodeword::symbol(std::size_t point) const {
    if (point >= symbols.size()) throw PreconditionError("point index out of range");
    if (!available(point)) throw PreconditionError("symbol at point " + std::to_string(point) + " is erased");
    return symbols[point];
}

std::vector<Elem> MultCodeword::flatten() const {
    std::vector<Elem> out;
    out.reserve(symbols.size() * params.symbol_width());
    for (std::size_t pt = 0; pt < symbols.size(); ++pt) {
        const auto& e = symbol(pt).entries;
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

MultCodeword encode_poly(const MultCodeParams& params, const MultiPoly& p) {
    if (p.variables() != params.s) throw PreconditionError("polynomial has wrong number of variables");
    if (p.degree() > static_cast<int>(params.d)) {
        throw PreconditionError("polynomial degree " + std::to_string(p.degree()) + " exceeds d = " +
                                std::to_string(params.d));
    }
    MultCodeword c{params, {}};
    c.symbols.reserve(params.length());
    for (std::size_t pt = 0; pt < params.length(); ++pt) {
        c.symbols.push_back(mpoly::order_m_evaluation(p, point_at(params, pt), params.m));
    }
    return c;
}

MultCodeword restrict_to(const MultCodeword& c, std::span<const std::size_t> points) {
    MultCodeword out{c.params, std::vector<OrderedEvaluation>(c.symbols.size())};
    for (auto pt : points) out.symbols.at(pt) = c.symbol(pt);
    return out;
}

SystematicView SystematicView::build(const MultCodeParams& params) {
    const auto& f = *params.field;
    SystematicView view;
    view.params_ = params;
    view.basis_ = mpoly::monomials_below(params.s, params.d + 1);
    const std::size_t k = view.basis_.size();
    const std::size_t n = params.base_length();

    gf::Matrix gen(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        MultiPoly mono(params.field, params.s);
        mono.set(view.basis_[r], 1);
        const auto row = encode_poly(params, mono).flatten();
        std::copy(row.begin(), row.end(), gen.data.begin() + static_cast<std::ptrdiff_t>(r * n));
    }
    view.info_positions_ = gf::pivot_columns(f, gen);
    if (view.info_positions_.size() != k) {
        throw ParameterError("encoding is not injective (need d < m q); rank " +
                             std::to_string(view.info_positions_.size()) + " < " + std::to_string(k));
    }
    gf::Matrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = gen.at(r, view.info_positions_[c]);
    }
    // coeffs * sub = info, so coeffs = info * sub^-1.
    auto inv = gf::inverse(f, sub);
    if (!inv) throw ParameterError("systematic submatrix is singular");
    view.info_to_coeffs_ = std::move(*inv);
    return view;
}

MultiPoly SystematicView::poly_from_info(std::span<const Elem> info) const {
    const auto& f = *params_.field;
    const std::size_t k = basis_.size();
    if (info.size() != k) throw PreconditionError("info vector has wrong length");
    MultiPoly p(params_.field, params_.s);
    for (std::size_t r = 0; r < k; ++r) {
        Elem acc = 0;
        for (std::size_t a = 0; a < k; ++a) acc = f.add(acc, f.mul(info[a], info_to_coeffs_.at(a, r)));
        p.set(basis_[r], acc);
    }
    return p;
}

MultCodeword SystematicView::encode(std::span<const Elem> info) const {
    return encode_poly(params_, poly_from_info(info));
}

std::vector<Elem> SystematicView::extract_info(const MultCodeword& c) const {
    const std::size_t w = params_.symbol_width();
    std::vector<Elem> out;
    out.reserve(info_positions_.size());
    for (auto pos : info_positions_) out.push_back(c.symbol(pos / w).entries[pos % w]);
    return out;
}

std::vector<mpoly::HermiteSample> line_samples(const MultCodeword& c, std::span<const Elem> w0,
                                               std::span<const Elem> v, std::span<const Elem> drops) {
    const auto& params = c.params;
    const auto& f = *params.field;
    if (w0.size() != params.s || v.size() != params.s) throw PreconditionError("line has wrong dimension");
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) {
        throw PreconditionError("line direction must be nonzero");
    }
    std::vector<bool> dropped(params.q(), false);
    for (auto lam : drops) {
        if (lam == 0 || lam >= params.q()) throw PreconditionError("drops must be nonzero field elements");
        dropped[lam] = true;
    }

    const auto index = mpoly::monomials_below(params.s, params.m);
    // v^i for each derivative index.
    std::vector<Elem> vpow(index.size());
    for (std::size_t slot = 0; slot < index.size(); ++slot) {
        Elem acc = 1;
        for (std::size_t k = 0; k < params.s; ++k) acc = f.mul(acc, f.pow(v[k], index[slot][k]));
        vpow[slot] = acc;
    }

    std::vector<mpoly::HermiteSample> out;
    Point w(params.s);
    for (Elem lam = 1; lam < params.q(); ++lam) {
        if (dropped[lam]) continue;
        for (std::size_t k = 0; k < params.s; ++k) w[k] = f.add(w0[k], f.mul(lam, v[k]));
        const auto& sym = c.symbol(point_index(params, w));
        OrderedEvaluation uni{params.m, std::vector<Elem>(params.m, 0)};
        for (std::size_t slot = 0; slot < index.size(); ++slot) {
            auto& e = uni.entries[index[slot].weight()];
            e = f.add(e, f.mul(sym.entries[slot], vpow[slot]));
        }
        out.push_back({lam, std::move(uni)});
    }
    return out;
}

CodeProfile code_profile(const MultCodeParams& params) {
    CodeProfile p;
    const std::uint64_t q = params.q();
    p.length = params.length();
    p.symbol_width = params.symbol_width();
    p.base_length = p.length * p.symbol_width;
    p.base_dimension = params.dimension();
    p.dimension = Rational(static_cast<std::int64_t>(p.base_dimension), static_cast<std::int64_t>(p.symbol_width));
    std::uint64_t k = 1;
    for (std::size_t i = 0; i + 1 < params.s; ++i) k *= q / params.m;
    p.k_pir = k;
    p.rate = Rational(static_cast<std::int64_t>(p.base_dimension), static_cast<std::int64_t>(p.base_length));
    p.distance_bound = (Rational(1) - Rational(params.d, static_cast<std::int64_t>(params.m * q))) *
                       Rational(static_cast<std::int64_t>(p.length));
    p.alphabet_base = q;
    p.alphabet_exponent = p.symbol_width;
    return p;
}

} // namespace pirbatch::multiplicity

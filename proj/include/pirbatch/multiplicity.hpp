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
#include <span>
#include <vector>

#include "pirbatch/gf.hpp"
#include "pirbatch/linalg.hpp"
#include "pirbatch/mpoly.hpp"
#include "pirbatch/rational.hpp"

namespace pirbatch::multiplicity {

using gf::Elem;
using gf::FieldPtr;
using mpoly::MultiPoly;
using mpoly::OrderedEvaluation;
using mpoly::Point;

// Parameters of C(m, d, s, q): order-m evaluations of degree <= d
// polynomials in s variables over GF(q).
struct MultCodeParams {
    std::uint32_t m = 1;
    std::uint32_t d = 0;
    std::size_t s = 1;
    FieldPtr field;

    std::uint32_t q() const { return field->order(); }
    // Base-field entries per code symbol, C(s+m-1, s).
    std::size_t symbol_width() const;
    // Number of code symbols, q^s.
    std::size_t length() const;
    // Base-field dimension, C(d+s, s).
    std::size_t dimension() const;
    std::size_t base_length() const { return length() * symbol_width(); }
};

// Validates m >= 1, s >= 1 and the desk-scale length cap (q^s <= 2^20).
MultCodeParams make_params(std::uint32_t m, std::uint32_t d, std::size_t s, FieldPtr field);

// Points of F_q^s are indexed lexicographically, first coordinate most
// significant.
std::size_t point_index(const MultCodeParams& params, std::span<const Elem> w);
Point point_at(const MultCodeParams& params, std::size_t index);

struct MultCodeword {
    MultCodeParams params;
    // One entry per point. An empty entries vector marks an erased symbol.
    std::vector<OrderedEvaluation> symbols;

    bool available(std::size_t point) const { return !symbols[point].entries.empty(); }
    const OrderedEvaluation& symbol(std::size_t point) const;
    // Base-field flattening: point-major, derivative index minor.
    std::vector<Elem> flatten() const;
};

MultCodeword encode_poly(const MultCodeParams& params, const MultiPoly& p);

// Keeps only the listed symbols; everything else is erased.
MultCodeword restrict_to(const MultCodeword& c, std::span<const std::size_t> points);

// Systematic view of the code: info positions are the first pivot columns
// of the generator (monomial basis rows, graded-lex) in coordinate order.
class SystematicView {
public:
    static SystematicView build(const MultCodeParams& params);

    const MultCodeParams& params() const { return params_; }
    const std::vector<std::size_t>& info_positions() const { return info_positions_; }

    // Polynomial whose codeword shows `info` at the info positions.
    MultiPoly poly_from_info(std::span<const Elem> info) const;
    MultCodeword encode(std::span<const Elem> info) const;
    std::vector<Elem> extract_info(const MultCodeword& c) const;

private:
    MultCodeParams params_;
    std::vector<std::size_t> info_positions_;
    std::vector<mpoly::MonomialExponent> basis_;
    gf::Matrix info_to_coeffs_;
};

// Order-m univariate evaluations of P(w0 + lambda v) for every nonzero
// lambda outside `drops`, derived from the codeword symbols on the line.
std::vector<mpoly::HermiteSample> line_samples(const MultCodeword& c, std::span<const Elem> w0,
                                               std::span<const Elem> v, std::span<const Elem> drops);

struct CodeProfile {
    std::uint64_t length = 0;            // N = q^s symbols
    std::uint64_t symbol_width = 0;      // C(s+m-1, s)
    std::uint64_t base_length = 0;       // N * symbol_width
    std::uint64_t base_dimension = 0;    // C(d+s, s)
    Rational dimension{0};               // n in alphabet symbols
    std::uint64_t k_pir = 0;             // floor(q/m)^(s-1)
    Rational rate{0};
    Rational distance_bound{0};          // (1 - d/(mq)) q^s
    std::uint64_t alphabet_base = 0;     // Q = alphabet_base^alphabet_exponent
    std::uint64_t alphabet_exponent = 0;
};

CodeProfile code_profile(const MultCodeParams& params);

} // namespace pirbatch::multiplicity

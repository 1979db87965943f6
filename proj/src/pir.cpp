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

#include "pirbatch/pir.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "pirbatch/errors.hpp"

namespace pirbatch::pir {

DirectionFamily build_direction_families(const FieldPtr& field, std::uint32_t m, std::size_t s) {
    const std::uint32_t q = field->order();
    if (m == 0 || s == 0) throw PreconditionError("direction families need m >= 1 and s >= 1");
    const std::uint32_t blocks = q / m;
    if (blocks == 0) throw PreconditionError("floor(q/m) must be at least 1");

    DirectionFamily fam{s, q, m - 1, {}};
    const std::size_t axes = s - 1;
    std::size_t count = 1;
    for (std::size_t k = 0; k < axes; ++k) count *= blocks;
    fam.grids.reserve(count);

    for (std::size_t code = 0; code < count; ++code) {
        // Block choice per axis, first axis most significant.
        std::vector<std::uint32_t> choice(axes);
        std::size_t rest = code;
        for (std::size_t k = axes; k-- > 0;) {
            choice[k] = static_cast<std::uint32_t>(rest % blocks);
            rest /= blocks;
        }
        std::size_t cells = 1;
        for (std::size_t k = 0; k < axes; ++k) cells *= m;
        std::vector<Point> grid;
        grid.reserve(cells);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            Point v(s, 1);
            std::size_t r = cell;
            for (std::size_t k = axes; k-- > 0;) {
                v[k] = choice[k] * m + static_cast<Elem>(r % m);
                r /= m;
            }
            grid.push_back(std::move(v));
        }
        fam.grids.push_back(std::move(grid));
    }
    return fam;
}

RecoveryPlan make_plan(const MultCodeParams& params, std::size_t w0, std::size_t family_index,
                       std::vector<Line> lines) {
    const auto& f = *params.field;
    RecoveryPlan plan{w0, family_index, std::move(lines), {}};
    const Point base = multiplicity::point_at(params, w0);
    std::set<std::size_t> coords;
    Point w(params.s);
    for (auto& line : plan.lines) {
        std::sort(line.drops.begin(), line.drops.end());
        line.drops.erase(std::unique(line.drops.begin(), line.drops.end()), line.drops.end());
        for (Elem lam = 1; lam < params.q(); ++lam) {
            if (std::binary_search(line.drops.begin(), line.drops.end(), lam)) continue;
            for (std::size_t k = 0; k < params.s; ++k) w[k] = f.add(base[k], f.mul(lam, line.direction[k]));
            coords.insert(multiplicity::point_index(params, w));
        }
    }
    plan.coordinates.assign(coords.begin(), coords.end());
    return plan;
}

void check_plan(const MultCodeParams& params, const RecoveryPlan& plan) {
    for (const auto& line : plan.lines) {
        const std::uint64_t kept = params.q() - 1 - line.drops.size();
        if (std::uint64_t(params.m) * kept < std::uint64_t(params.d) + 1) {
            throw PreconditionError("line keeps too few points: m(q-1-|drops|) < d+1");
        }
    }
    if (std::binary_search(plan.coordinates.begin(), plan.coordinates.end(), plan.w0)) {
        throw PreconditionError("plan reads its own target");
    }
}

std::vector<RecoveryPlan> pir_recovery_plans(const MultCodeParams& params, std::size_t w0) {
    // d/m < q-1
    if (std::uint64_t(params.d) >= std::uint64_t(params.m) * (params.q() - 1)) {
        throw ParameterError("PIR recovery needs d/m < q-1");
    }
    if (w0 >= params.length()) throw PreconditionError("target point out of range");
    const auto fam = build_direction_families(params.field, params.m, params.s);
    std::vector<RecoveryPlan> plans;
    plans.reserve(fam.grids.size());
    for (std::size_t g = 0; g < fam.grids.size(); ++g) {
        std::vector<Line> lines;
        for (const auto& v : fam.grids[g]) lines.push_back({v, {}});
        plans.push_back(make_plan(params, w0, g, std::move(lines)));
    }
    return plans;
}

OrderedEvaluation recover_symbol(const MultCodeword& c, const RecoveryPlan& plan) {
    const auto& params = c.params;
    check_plan(params, plan);
    const Point w0 = multiplicity::point_at(params, plan.w0);
    const std::uint32_t m = params.m;

    // Step 1: low coefficients c_{v,j}, j < m, of each line polynomial.
    std::vector<std::vector<Elem>> low(plan.lines.size());
    for (std::size_t l = 0; l < plan.lines.size(); ++l) {
        const auto& line = plan.lines[l];
        const auto samples = multiplicity::line_samples(c, w0, line.direction, line.drops);
        const auto pv = mpoly::hermite_interpolate(params.field, samples, params.d);
        auto coeffs = pv.univariate_coefficients(params.d);
        coeffs.resize(std::max<std::size_t>(coeffs.size(), m), 0);
        low[l].assign(coeffs.begin(), coeffs.begin() + m);
    }

    // Step 2: Q_j(v) = c_{v,j} determines the homogeneous part of degree j.
    std::vector<mpoly::MultiPoly> parts;
    parts.reserve(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        std::vector<mpoly::GridSample> samples;
        samples.reserve(plan.lines.size());
        for (std::size_t l = 0; l < plan.lines.size(); ++l) {
            samples.push_back({plan.lines[l].direction, low[l][j]});
        }
        parts.push_back(mpoly::homogeneous_interpolate(params.field, j, samples, params.s));
    }

    const auto index = mpoly::monomials_below(params.s, m);
    OrderedEvaluation out{m, std::vector<Elem>(index.size(), 0)};
    for (std::size_t slot = 0; slot < index.size(); ++slot) {
        out.entries[slot] = parts[index[slot].weight()].coefficient(index[slot]);
    }
    return out;
}

AvailabilityCode multiplicity_pir_code(const MultCodeParams& params) {
    const auto view = multiplicity::SystematicView::build(params);
    const std::size_t k_dim = params.dimension();
    const std::size_t width = params.symbol_width();
    AvailabilityCode code;
    code.generator = verify::extract_generator(
        params.field, [&view](std::span<const Elem> info) { return view.encode(info).flatten(); }, k_dim,
        params.base_length());
    code.symbol_width = width;

    std::size_t k = 0;
    for (std::size_t i = 0; i < k_dim; ++i) {
        const std::size_t point = view.info_positions()[i] / width;
        std::vector<verify::CoordinateSet> sets;
        for (const auto& plan : pir_recovery_plans(params, point)) {
            verify::CoordinateSet set;
            for (auto pt : plan.coordinates) {
                for (std::size_t e = 0; e < width; ++e) set.push_back(pt * width + e);
            }
            sets.push_back(std::move(set));
        }
        k = sets.size();
        code.recovering_sets.push_back(std::move(sets));
    }
    code.k = k;
    return code;
}

AvailabilityCode binary_expand(const AvailabilityCode& code) {
    const auto& big = *code.generator.field;
    if (big.characteristic() != 2) {
        throw PreconditionError("binary expansion is only supported in characteristic 2");
    }
    const std::size_t e = big.degree();
    if (e == 1) return code;

    const auto bits = gf::Field::of_order(2);
    const auto& g = code.generator;
    AvailabilityCode out;
    out.k = code.k;
    out.symbol_width = code.symbol_width * e;
    out.generator.field = bits;
    out.generator.n = g.n * e;
    out.generator.N = g.N * e;
    out.generator.entries = gf::Matrix(out.generator.n, out.generator.N);
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t t = 0; t < e; ++t) {
            const Elem basis = Elem(1) << t;
            for (std::size_t c = 0; c < g.N; ++c) {
                const auto image = big.repr(big.mul(basis, g.entries.at(i, c)));
                for (std::size_t u = 0; u < e; ++u) out.generator.entries.at(i * e + t, c * e + u) = image[u];
            }
        }
    }
    if (g.systematic()) {
        for (std::size_t i = 0; i < g.n; ++i) {
            for (std::size_t t = 0; t < e; ++t) out.generator.info_positions.push_back(g.info_positions[i] * e + t);
        }
    }
    for (const auto& sets : code.recovering_sets) {
        std::vector<verify::CoordinateSet> expanded;
        for (const auto& set : sets) {
            verify::CoordinateSet bitset;
            for (auto c : set) {
                for (std::size_t u = 0; u < e; ++u) bitset.push_back(c * e + u);
            }
            expanded.push_back(std::move(bitset));
        }
        for (std::size_t t = 0; t < e; ++t) out.recovering_sets.push_back(expanded);
    }
    return out;
}

AvailabilityCode replicate(const AvailabilityCode& code, std::size_t t) {
    if (t == 0) throw PreconditionError("replication factor must be at least 1");
    if (t == 1) return code;
    const auto& g = code.generator;
    AvailabilityCode out;
    out.k = code.k * t;
    out.symbol_width = code.symbol_width;
    out.generator.field = g.field;
    out.generator.n = g.n;
    out.generator.N = g.N * t;
    out.generator.entries = gf::Matrix(g.n, g.N * t);
    for (std::size_t r = 0; r < g.n; ++r) {
        for (std::size_t copy = 0; copy < t; ++copy) {
            for (std::size_t c = 0; c < g.N; ++c) out.generator.entries.at(r, copy * g.N + c) = g.entries.at(r, c);
        }
    }
    out.generator.info_positions = g.info_positions;
    for (const auto& sets : code.recovering_sets) {
        std::vector<verify::CoordinateSet> all;
        for (std::size_t copy = 0; copy < t; ++copy) {
            for (const auto& set : sets) {
                verify::CoordinateSet shifted;
                for (auto c : set) shifted.push_back(copy * g.N + c);
                all.push_back(std::move(shifted));
            }
        }
        out.recovering_sets.push_back(std::move(all));
    }
    return out;
}

std::string to_string(Variant v) { return v == Variant::QAry ? "qary" : "binary"; }

Rational pir_delta_s(const Rational& epsilon, std::size_t s, Variant variant) {
    if (s < 2) throw PreconditionError("delta_s needs s >= 2");
    const Rational sr(static_cast<std::int64_t>(s));
    if (variant == Variant::QAry) return Rational(1) - Rational(1) / sr + epsilon / (sr - 1);
    return Rational(1) - (sr * (Rational(1) - epsilon) - 1) / (2 * sr * (sr - 1));
}

bool admissible(const Rational& epsilon, std::size_t s) {
    // s > 1/(1-eps)  <=>  s(1-eps) > 1 for eps < 1.
    return Rational(static_cast<std::int64_t>(s)) * (Rational(1) - epsilon) > 1;
}

std::size_t qary_optimal_s(const Rational& epsilon) {
    if (epsilon < 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in [0, 1)");
    const Rational x = Rational(2) / (Rational(1) - epsilon);
    return static_cast<std::size_t>(x.numerator() / x.denominator());
}

std::vector<DeltaRow> pir_delta_curves(std::span<const Rational> epsilons, std::size_t s_min,
                                       std::size_t s_max, Variant variant) {
    if (s_min < 2 || s_max < s_min) throw PreconditionError("s range must satisfy 2 <= s_min <= s_max");
    std::vector<DeltaRow> rows;
    for (const auto& eps : epsilons) {
        if (eps < 0) throw PreconditionError("epsilon must be non-negative");
        if (eps >= 1) {
            rows.push_back({eps, 0, eps, true});
            continue;
        }
        std::optional<DeltaRow> best;
        for (std::size_t s = s_min; s <= s_max; ++s) {
            if (!admissible(eps, s)) continue;
            DeltaRow row{eps, s, pir_delta_s(eps, s, variant), false};
            if (!best || row.delta <= best->delta) best = row;
            rows.push_back(row);
        }
        if (!best) throw PreconditionError("no admissible s in range for epsilon " + pirbatch::to_string(eps));
        best->minimum = true;
        rows.push_back(*best);
    }
    return rows;
}

} // namespace pirbatch::pir

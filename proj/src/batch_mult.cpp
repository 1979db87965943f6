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

#include "pirbatch/batch_mult.hpp"

#include <algorithm>

#include "pirbatch/errors.hpp"

namespace pirbatch::batch_mult {

namespace {
std::int64_t ipow(std::int64_t b, std::size_t e) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}
} // namespace

std::size_t drop_budget(const BatchParams& bp) {
    return bp.k * static_cast<std::size_t>(ipow(bp.code.m, bp.code.s - 1));
}

BatchParams validate_batch_params(const MultCodeParams& params, std::size_t k) {
    const std::int64_t m = params.m, d = params.d, q = params.q();
    const std::int64_t lines = ipow(m, params.s - 1);
    const std::int64_t kk = static_cast<std::int64_t>(k);
    const std::int64_t bound = m * (q - kk * lines - 2);
    if (d > bound) {
        throw ParameterError("violated d <= m(q - k m^(s-1) - 2): d = " + std::to_string(d) + " > " +
                             std::to_string(bound));
    }
    const std::int64_t families = ipow(q / m, params.s - 1);
    if (kk > families) {
        throw ParameterError("violated k <= floor(q/m)^(s-1): k = " + std::to_string(k) + " > " +
                             std::to_string(families));
    }
    return BatchParams{params, k};
}

BatchPlan plan_batch(const BatchParams& bp, std::span<const std::size_t> request) {
    const auto& params = bp.code;
    const auto& f = *params.field;
    if (request.size() != bp.k) {
        throw PreconditionError("request has " + std::to_string(request.size()) + " points, expected " +
                                std::to_string(bp.k));
    }
    BatchPlan out;
    out.request.assign(request.begin(), request.end());
    std::sort(out.request.begin(), out.request.end());
    for (auto pt : out.request) {
        if (pt >= params.length()) throw PreconditionError("requested point out of range");
    }
    if (bp.k == 0) return out;

    const auto fam = pir::build_direction_families(params.field, params.m, params.s);
    const std::size_t n = params.length();

    // occupied[j][pt]: pt is request j's target or on one of its lines.
    std::vector<std::vector<char>> occupied(bp.k, std::vector<char>(n, 0));
    std::vector<mpoly::Point> targets(bp.k);
    mpoly::Point w(params.s);
    for (std::size_t j = 0; j < bp.k; ++j) {
        targets[j] = multiplicity::point_at(params, out.request[j]);
        occupied[j][out.request[j]] = 1;
        for (const auto& v : fam.grids[j]) {
            for (gf::Elem lam = 1; lam < params.q(); ++lam) {
                for (std::size_t c = 0; c < params.s; ++c) w[c] = f.add(targets[j][c], f.mul(lam, v[c]));
                occupied[j][multiplicity::point_index(params, w)] = 1;
            }
        }
    }

    const std::size_t budget = drop_budget(bp);
    for (std::size_t j = 0; j < bp.k; ++j) {
        std::vector<pir::Line> lines;
        for (const auto& v : fam.grids[j]) {
            pir::Line line{v, {}};
            for (gf::Elem lam = 1; lam < params.q(); ++lam) {
                for (std::size_t c = 0; c < params.s; ++c) w[c] = f.add(targets[j][c], f.mul(lam, v[c]));
                const std::size_t pt = multiplicity::point_index(params, w);
                for (std::size_t other = 0; other < bp.k; ++other) {
                    if (other != j && occupied[other][pt]) {
                        line.drops.push_back(lam);
                        break;
                    }
                }
            }
            const std::uint64_t kept = params.q() - 1 - line.drops.size();
            if (line.drops.size() > budget || std::uint64_t(params.m) * kept < std::uint64_t(params.d) + 1) {
                throw CertificationError("line of request " + std::to_string(j) + " drops " +
                                         std::to_string(line.drops.size()) + " points, budget " +
                                         std::to_string(budget));
            }
            lines.push_back(std::move(line));
        }
        out.plans.push_back(pir::make_plan(params, out.request[j], j, std::move(lines)));
    }
    return out;
}

std::vector<mpoly::OrderedEvaluation> recover_batch(const MultCodeword& c, const BatchPlan& plan) {
    std::vector<mpoly::OrderedEvaluation> out;
    out.reserve(plan.plans.size());
    for (const auto& p : plan.plans) out.push_back(pir::recover_symbol(c, p));
    return out;
}

std::size_t max_drops(const BatchPlan& plan) {
    std::size_t best = 0;
    for (const auto& p : plan.plans) {
        for (const auto& line : p.lines) best = std::max(best, line.drops.size());
    }
    return best;
}

Rational batch_delta(const Rational& epsilon, pir::Variant variant) {
    if (epsilon < 0) throw PreconditionError("epsilon must be non-negative");
    if (epsilon >= Rational(1, 2)) return Rational(1, 2) + epsilon;
    if (variant == pir::Variant::QAry) return Rational(3, 4) + epsilon / 2;
    return Rational(5, 6) + epsilon / 3;
}

std::vector<BatchDeltaRow> batch_delta_curves(std::span<const Rational> epsilons, pir::Variant variant) {
    std::vector<BatchDeltaRow> rows;
    rows.reserve(epsilons.size());
    for (const auto& eps : epsilons) rows.push_back({eps, batch_delta(eps, variant)});
    return rows;
}

} // namespace pirbatch::batch_mult

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

#include "pirbatch/array_code.hpp"

#include <algorithm>

#include "pirbatch/errors.hpp"

namespace pirbatch::array_code {

ArrayCodeParams make_array_params(std::uint32_t r, std::uint32_t p, std::vector<std::uint32_t> slopes,
                                  bool global_parity) {
    if (r == 0 || p == 0) throw ParameterError("array code needs r >= 1 and p >= 1");
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (slopes[i] >= p) throw ParameterError("slope " + std::to_string(slopes[i]) + " is not below p");
        if (i > 0 && slopes[i] <= slopes[i - 1]) throw ParameterError("slopes must be strictly increasing");
    }
    return ArrayCodeParams{r, p, std::move(slopes), global_parity};
}

std::size_t data_coordinate(const ArrayCodeParams& params, Cell cell) {
    if (cell.row >= params.r || cell.col >= params.p) throw PreconditionError("cell outside the array");
    return std::size_t(cell.row) * params.p + cell.col;
}

std::size_t parity_coordinate(const ArrayCodeParams& params, std::size_t slope_index, std::uint32_t offset) {
    if (slope_index >= params.k() || offset >= params.p) throw PreconditionError("parity index out of range");
    return params.dimension() + slope_index * params.p + offset;
}

std::size_t global_parity_coordinate(const ArrayCodeParams& params) {
    if (!params.global_parity) throw PreconditionError("code has no global parity");
    return params.dimension() + params.k() * params.p;
}

Cell cell_of(const ArrayCodeParams& params, std::size_t data_index) {
    if (data_index >= params.dimension()) throw PreconditionError("data index out of range");
    return Cell{static_cast<std::uint32_t>(data_index / params.p), static_cast<std::uint32_t>(data_index % params.p)};
}

Diagonal diagonal(std::uint32_t slope, std::uint32_t offset, std::uint32_t r, std::uint32_t p) {
    if (slope >= p || offset >= p) throw PreconditionError("slope and offset must lie in [p]");
    Diagonal d{slope, offset, {}};
    d.cells.reserve(r);
    for (std::uint32_t i = 0; i < r; ++i) {
        d.cells.push_back({i, static_cast<std::uint32_t>((offset + std::uint64_t(i) * slope) % p)});
    }
    return d;
}

std::uint32_t offset_through(Cell cell, std::uint32_t slope, std::uint32_t p) {
    const std::uint64_t shift = std::uint64_t(cell.row) * slope % p;
    return static_cast<std::uint32_t>((cell.col + p - shift) % p);
}

std::vector<std::uint8_t> ArrayCodeword::flatten() const {
    std::vector<std::uint8_t> out = data;
    out.insert(out.end(), parities.begin(), parities.end());
    if (global_parity) out.push_back(*global_parity);
    return out;
}

ArrayCodeword encode_array(const ArrayCodeParams& params, std::span<const std::uint8_t> data) {
    if (data.size() != params.dimension()) throw PreconditionError("data array has wrong size");
    ArrayCodeword cw;
    cw.data.assign(data.begin(), data.end());
    for (auto& b : cw.data) {
        if (b > 1) throw PreconditionError("data entries must be bits");
    }
    cw.parities.assign(params.k() * params.p, 0);
    for (std::size_t l = 0; l < params.k(); ++l) {
        for (std::uint32_t t = 0; t < params.p; ++t) {
            std::uint8_t acc = 0;
            for (const auto& c : diagonal(params.slopes[l], t, params.r, params.p).cells) {
                acc ^= cw.data[data_coordinate(params, c)];
            }
            cw.parities[l * params.p + t] = acc;
        }
    }
    if (params.global_parity) {
        std::uint8_t acc = 0;
        for (auto b : cw.data) acc ^= b;
        cw.global_parity = acc;
    }
    return cw;
}

std::vector<CoordinateSet> pir_sets_for_bit(const ArrayCodeParams& params, Cell cell) {
    const std::size_t self = data_coordinate(params, cell);
    std::vector<CoordinateSet> sets;
    sets.reserve(params.k());
    for (std::size_t l = 0; l < params.k(); ++l) {
        const std::uint32_t t = offset_through(cell, params.slopes[l], params.p);
        CoordinateSet set;
        for (const auto& c : diagonal(params.slopes[l], t, params.r, params.p).cells) {
            const std::size_t coord = data_coordinate(params, c);
            if (coord != self) set.push_back(coord);
        }
        set.push_back(parity_coordinate(params, l, t));
        std::sort(set.begin(), set.end());
        sets.push_back(std::move(set));
    }
    return sets;
}

std::optional<ApWitness> has_weighted_ap(std::span<const std::uint32_t> slopes, std::uint32_t r,
                                         std::uint32_t p) {
    if (r < 2) throw PreconditionError("weighted progressions need r >= 2");
    if (p == 0) throw PreconditionError("modulus must be positive");
    const std::size_t k = slopes.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (b == a) continue;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == a || c == b) continue;
                const std::uint64_t s1 = slopes[a] % p, s2 = slopes[b] % p, s3 = slopes[c] % p;
                for (std::uint32_t x = 1; x + 1 < r; ++x) {
                    for (std::uint32_t y = 1; y + 1 < r && x + y < r; ++y) {
                        if ((x * s1 + y * s2) % p == (std::uint64_t(x + y) * s3) % p) {
                            return ApWitness{slopes[a], slopes[b], slopes[c], x, y};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::uint32_t> greedy_slope_set(std::uint32_t r, std::uint32_t p, std::size_t k) {
    if (!gf::is_prime(p)) throw PreconditionError("slope search needs a prime p");
    std::vector<std::uint32_t> set;
    for (std::uint32_t candidate = 0; candidate < p && set.size() < k; ++candidate) {
        set.push_back(candidate);
        if (has_weighted_ap(set, r, p)) set.pop_back();
    }
    if (set.size() < k) {
        throw CapacityError("greedy slope search reached size " + std::to_string(set.size()) + " of " +
                            std::to_string(k) + " for r = " + std::to_string(r) + ", p = " + std::to_string(p));
    }
    return set;
}

ArrayCodeParams build_rk_batch(std::uint32_t r, std::size_t k) {
    if (r < 2 || k < 1) throw ParameterError("(r,k)-batch construction needs r >= 2 and k >= 1");
    const std::uint64_t bound = 2 * std::uint64_t(k) * k * r * r;
    const auto p = static_cast<std::uint32_t>(gf::smallest_prime_above(bound));
    return make_array_params(r, p, greedy_slope_set(r, p, k));
}

ArrayBatchPlanner::ArrayBatchPlanner(ArrayCodeParams params) : params_(std::move(params)) {
    if (!gf::is_prime(params_.p)) throw PreconditionError("batch planning needs a prime p");
    if (params_.r > params_.p) throw PreconditionError("batch planning needs r <= p");
    if (params_.r >= 2) {
        if (auto w = has_weighted_ap(params_.slopes, params_.r, params_.p)) {
            throw PreconditionError("slope set contains an r-weighted progression");
        }
    }
}

std::vector<CoordinateSet> ArrayBatchPlanner::plan(std::span<const std::size_t> request) const {
    std::vector<std::size_t> sorted(request.begin(), request.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> used(params_.length(), 0);
    std::vector<CoordinateSet> out;
    out.reserve(sorted.size());
    for (auto bit : sorted) {
        bool placed = false;
        for (auto& set : pir_sets_for_bit(params_, cell_of(params_, bit))) {
            if (std::any_of(set.begin(), set.end(), [&](std::size_t c) { return used[c] != 0; })) continue;
            for (auto c : set) used[c] = 1;
            out.push_back(std::move(set));
            placed = true;
            break;
        }
        if (!placed) {
            throw CertificationError("no free recovering set for data bit " + std::to_string(bit));
        }
    }
    return out;
}

std::vector<CoordinateSet> plan_array_batch(const ArrayCodeParams& params, std::span<const std::size_t> request) {
    return ArrayBatchPlanner(params).plan(request);
}

ArrayCodeParams five_batch_code(std::uint32_t p) {
    if (!gf::is_prime(p) || p < 5) throw ParameterError("five-batch code needs a prime p >= 5");
    return make_array_params(p, p, {0, 1, 2, 3, 4}, true);
}

FiveBatchPlanner::FiveBatchPlanner(ArrayCodeParams params)
    : params_(std::move(params)), generator_(array_generator(params_)) {
    if (!params_.global_parity) throw PreconditionError("planner expects a global parity bit");
}

std::optional<CoordinateSet> FiveBatchPlanner::solve_in_free(std::size_t bit, const std::vector<char>& used) const {
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < params_.length(); ++c) {
        if (!used[c] && c != bit) free.push_back(c);
    }
    const auto coeffs = verify::is_recovering_set(generator_, bit, free);
    if (!coeffs) return std::nullopt;
    CoordinateSet set;
    for (std::size_t i = 0; i < free.size(); ++i) {
        if ((*coeffs)[i] != 0) set.push_back(free[i]);
    }
    return set;
}

bool FiveBatchPlanner::assign(std::span<const std::size_t> request, std::size_t j, std::vector<char>& used,
                              std::vector<CoordinateSet>& chosen, bool allow_solver) const {
    if (j == request.size()) return true;
    const Cell cell = cell_of(params_, request[j]);
    // The bit itself serves at most one copy of a request.
    std::vector<CoordinateSet> candidates{{request[j]}};
    const auto diagonals = pir_sets_for_bit(params_, cell);
    candidates.insert(candidates.end(), diagonals.begin(), diagonals.end());
    // Parity-substituted variants: g + other parities of the slope replace
    // the diagonal's own parity.
    for (std::size_t l = 0; l < params_.k(); ++l) {
        const std::uint32_t t = offset_through(cell, params_.slopes[l], params_.p);
        CoordinateSet set = diagonals[l];
        std::erase(set, parity_coordinate(params_, l, t));
        for (std::uint32_t u = 0; u < params_.p; ++u) {
            if (u != t) set.push_back(parity_coordinate(params_, l, u));
        }
        set.push_back(global_parity_coordinate(params_));
        std::sort(set.begin(), set.end());
        candidates.push_back(std::move(set));
    }

    auto try_set = [&](const CoordinateSet& set) {
        if (std::any_of(set.begin(), set.end(), [&](std::size_t c) { return used[c] != 0; })) return false;
        for (auto c : set) used[c] = 1;
        chosen.push_back(set);
        if (assign(request, j + 1, used, chosen, allow_solver)) return true;
        chosen.pop_back();
        for (auto c : set) used[c] = 0;
        return false;
    };

    for (const auto& set : candidates) {
        if (try_set(set)) return true;
    }
    if (allow_solver) {
        if (auto set = solve_in_free(request[j], used)) return try_set(*set);
    }
    return false;
}

std::vector<CoordinateSet> FiveBatchPlanner::plan(std::span<const std::size_t> request) const {
    std::vector<std::size_t> sorted(request.begin(), request.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto b : sorted) {
        if (b >= params_.dimension()) throw PreconditionError("requested data bit out of range");
    }
    for (bool solver : {false, true}) {
        std::vector<char> used(params_.length(), 0);
        std::vector<CoordinateSet> chosen;
        if (assign(sorted, 0, used, chosen, solver)) return chosen;
    }
    throw CertificationError("no disjoint recovering sets for the request");
}

CorollaryParams corollary_params(std::uint64_t n, std::size_t k) {
    if (k == 0) throw ParameterError("k must be positive");
    if (std::uint64_t(k) * k >= n) throw ParameterError("regime violation: need k^2 < n");
    std::uint64_t r = 1;
    while (r * r * r * k * k < n) ++r;
    const auto params = build_rk_batch(static_cast<std::uint32_t>(r), k);
    CorollaryParams out;
    out.r = params.r;
    out.p = params.p;
    out.slopes = params.slopes;
    out.dimension = params.dimension();
    out.redundancy = params.redundancy();
    return out;
}

verify::GeneratorMatrix array_generator(const ArrayCodeParams& params) {
    const auto bits = gf::Field::of_order(2);
    auto encoder = [&params](std::span<const gf::Elem> msg) {
        std::vector<std::uint8_t> data(msg.begin(), msg.end());
        const auto flat = encode_array(params, data).flatten();
        return std::vector<gf::Elem>(flat.begin(), flat.end());
    };
    return verify::extract_generator(bits, encoder, params.dimension(), params.length());
}

pir::AvailabilityCode array_pir_code(const ArrayCodeParams& params) {
    pir::AvailabilityCode code;
    code.generator = array_generator(params);
    code.k = params.k();
    for (std::size_t i = 0; i < params.dimension(); ++i) {
        code.recovering_sets.push_back(pir_sets_for_bit(params, cell_of(params, i)));
    }
    return code;
}

} // namespace pirbatch::array_code

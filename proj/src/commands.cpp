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

#include "pirbatch/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "pirbatch/array_code.hpp"
#include "pirbatch/batch_mult.hpp"
#include "pirbatch/errors.hpp"
#include "pirbatch/pir.hpp"
#include "pirbatch/verify.hpp"

namespace pirbatch::commands {

using descriptor::ArrayDescriptor;
using descriptor::Descriptor;
using descriptor::MultiplicityDescriptor;

std::vector<std::uint32_t> parse_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            item.size() > 9) {
            throw ParseError("'" + item + "' is not a non-negative integer");
        }
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return out;
}

Descriptor build_multiplicity(std::uint32_t m, std::uint32_t d, std::size_t s, std::uint32_t q) {
    return descriptor::describe(multiplicity::make_params(m, d, s, gf::Field::of_order(q)));
}

Descriptor build_array(const ArrayBuildOptions& o) {
    if (o.five_batch) {
        if (!o.p) throw ParameterError("--five-batch needs --p");
        return descriptor::describe(array_code::five_batch_code(*o.p));
    }
    if (!o.r) throw ParameterError("array codes need --r");
    if (o.k && !o.p && o.slopes.empty()) {
        auto params = array_code::build_rk_batch(*o.r, *o.k);
        params.global_parity = o.global_parity;
        return descriptor::describe(params);
    }
    if (o.p && !o.slopes.empty()) {
        auto slopes = o.slopes;
        std::sort(slopes.begin(), slopes.end());
        return descriptor::describe(array_code::make_array_params(*o.r, *o.p, slopes, o.global_parity));
    }
    if (o.p && o.k) {
        return descriptor::describe(
            array_code::make_array_params(*o.r, *o.p, array_code::greedy_slope_set(*o.r, *o.p, *o.k), o.global_parity));
    }
    throw ParameterError("array codes need --k, --p with --slopes, or --p with --k");
}

Profile profile(const Descriptor& desc) {
    Profile p;
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) {
        const auto params = descriptor::to_params(*m);
        const auto cp = multiplicity::code_profile(params);
        p.family = "multiplicity";
        p.length = cp.length;
        p.dimension = cp.dimension;
        p.k = cp.k_pir;
        p.redundancy = Rational(static_cast<std::int64_t>(cp.length)) - cp.dimension;
        p.rate = cp.rate;
        return p;
    }
    const auto params = descriptor::to_params(std::get<ArrayDescriptor>(desc));
    p.family = "array";
    p.length = params.length();
    p.dimension = Rational(static_cast<std::int64_t>(params.dimension()));
    p.k = params.k();
    p.redundancy = Rational(static_cast<std::int64_t>(params.redundancy()));
    p.rate = p.dimension / Rational(static_cast<std::int64_t>(p.length));
    return p;
}

void print_profile(std::ostream& os, const Profile& p) {
    os << "family=" << p.family << " N=" << p.length << " n=" << to_string(p.dimension) << " k=" << p.k
       << " redundancy=" << to_string(p.redundancy) << " rate=" << to_string(p.rate) << '\n';
}

namespace {

template <typename Report>
void write_outputs(const CertifyOptions& o, const Report& report, const std::string& summary) {
    if (!o.report_path.empty()) {
        std::ofstream csv(o.report_path);
        if (!csv) throw std::runtime_error("cannot write " + o.report_path);
        verify::write_report_csv(csv, report);
    }
    if (!o.summary_path.empty()) {
        std::ofstream js(o.summary_path);
        if (!js) throw std::runtime_error("cannot write " + o.summary_path);
        js << summary << '\n';
    }
}

std::vector<std::size_t> point_columns(std::size_t point, std::size_t width) {
    std::vector<std::size_t> cols(width);
    for (std::size_t e = 0; e < width; ++e) cols[e] = point * width + e;
    return cols;
}

verify::CoordinateSet expand_points(std::span<const std::size_t> points, std::size_t width) {
    verify::CoordinateSet out;
    out.reserve(points.size() * width);
    for (auto pt : points) {
        for (std::size_t e = 0; e < width; ++e) out.push_back(pt * width + e);
    }
    return out;
}

int report_pir(const CertifyOptions& o, const verify::PirReport& report, std::ostream& out) {
    write_outputs(o, report, verify::summary_json(report, o.seed));
    out << "pir k=" << report.k << " targets=" << report.targets << " failures=" << report.failures.size()
        << " seed=" << o.seed << (report.passed() ? " PASS" : " FAIL") << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 10); ++i) {
        out << "  target " << report.failures[i].index << ": " << report.failures[i].detail << '\n';
    }
    return report.passed() ? kPass : kFailure;
}

int report_batch(const CertifyOptions& o, const verify::BatchReport& report, std::size_t k, std::ostream& out) {
    write_outputs(o, report, verify::summary_json(report));
    out << "batch k=" << k << " requests=" << report.total << " passed=" << report.passed
        << " failed=" << report.failed << " seed=" << report.seed << (report.sampled ? " sampled" : " exhaustive")
        << " max_set_size=" << report.max_set_size << (report.all_passed() ? " PASS" : " FAIL") << '\n';
    std::size_t shown = 0;
    for (const auto& row : report.rows) {
        if (row.passed || shown++ >= 10) continue;
        out << "  request " << row.request_id << ": " << row.detail << '\n';
    }
    return report.all_passed() ? kPass : kFailure;
}

// The first k sets of each target; a shortfall is left for the verifier
// to report.
std::vector<std::vector<verify::CoordinateSet>> first_k(std::vector<std::vector<verify::CoordinateSet>> sets,
                                                        std::size_t k) {
    for (auto& s : sets) {
        if (s.size() > k) s.resize(k);
    }
    return sets;
}

int certify_multiplicity(const MultiplicityDescriptor& desc, const CertifyOptions& o, std::ostream& out) {
    const auto params = descriptor::to_params(desc);
    const auto code = pir::multiplicity_pir_code(params);
    const auto& g = code.generator;
    const std::size_t width = params.symbol_width();
    std::vector<verify::Target> targets;
    targets.reserve(params.length());
    for (std::size_t pt = 0; pt < params.length(); ++pt) {
        targets.push_back(verify::coordinate_target(g, point_columns(pt, width)));
    }

    if (o.mode == "pir") {
        const std::size_t k = o.k.value_or(code.k);
        std::vector<std::vector<verify::CoordinateSet>> sets;
        sets.reserve(params.length());
        for (std::size_t pt = 0; pt < params.length(); ++pt) {
            std::vector<verify::CoordinateSet> per;
            for (const auto& plan : pir::pir_recovery_plans(params, pt)) {
                per.push_back(expand_points(plan.coordinates, width));
            }
            sets.push_back(std::move(per));
        }
        return report_pir(o, verify::certify_pir_targets(g, targets, first_k(std::move(sets), k), k), out);
    }

    const std::size_t k = o.k.value_or(2);
    const auto bp = batch_mult::validate_batch_params(params, k);
    verify::BatchPlanner planner = [bp, width](std::span<const std::size_t> request) {
        const auto plan = batch_mult::plan_batch(bp, request);
        std::vector<verify::CoordinateSet> sets;
        for (const auto& p : plan.plans) sets.push_back(expand_points(p.coordinates, width));
        return sets;
    };
    const verify::MultisetRequests requests(params.length(), k, o.threshold, o.seed);
    const auto report = verify::certify_batch(g, planner, targets, requests, {o.jobs, o.all_rows});
    return report_batch(o, report, k, out);
}

int certify_array(const ArrayDescriptor& desc, const CertifyOptions& o, std::ostream& out) {
    const auto params = descriptor::to_params(desc);
    if (o.mode == "pir") {
        const auto code = array_code::array_pir_code(params);
        const std::size_t k = o.k.value_or(code.k);
        return report_pir(o, verify::certify_pir(code.generator, first_k(code.recovering_sets, k), k), out);
    }

    const std::size_t k = o.k.value_or(params.k());
    verify::BatchPlanner planner;
    std::optional<verify::GeneratorMatrix> g;
    if (params.global_parity) {
        auto five = std::make_shared<array_code::FiveBatchPlanner>(params);
        g = five->generator();
        planner = [five](std::span<const std::size_t> request) { return five->plan(request); };
    } else {
        auto greedy = std::make_shared<array_code::ArrayBatchPlanner>(params);
        g = array_code::array_generator(params);
        planner = [greedy](std::span<const std::size_t> request) { return greedy->plan(request); };
    }
    std::vector<verify::Target> targets;
    targets.reserve(params.dimension());
    for (std::size_t i = 0; i < params.dimension(); ++i) targets.push_back(verify::info_target(*g, i));
    const verify::MultisetRequests requests(params.dimension(), k, o.threshold, o.seed);
    const auto report = verify::certify_batch(*g, planner, targets, requests, {o.jobs, o.all_rows});
    return report_batch(o, report, k, out);
}

} // namespace

int cmd_certify(const Descriptor& desc, const CertifyOptions& o, std::ostream& out) {
    if (o.mode != "pir" && o.mode != "batch") throw ParseError("mode must be pir or batch");
    if (o.k && *o.k == 0) throw ParseError("k must be positive");
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) return certify_multiplicity(*m, o, out);
    return certify_array(std::get<ArrayDescriptor>(desc), o, out);
}

CurveKind parse_curve_kind(const std::string& text) {
    if (text == "pir-binary") return CurveKind::PirBinary;
    if (text == "pir-qary") return CurveKind::PirQAry;
    if (text == "batch") return CurveKind::Batch;
    throw ParseError("unknown curve set '" + text + "' (pir-binary, pir-qary, batch)");
}

namespace {

using Knot = std::pair<Rational, Rational>;

std::optional<Rational> piecewise(const std::vector<Knot>& knots, const Rational& x) {
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto& [x0, y0] = knots[i];
        const auto& [x1, y1] = knots[i + 1];
        if (x0 == x1 || x < x0 || x > x1) continue;
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    return std::nullopt;
}

Rational r(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

} // namespace

std::optional<Rational> pir_old_results(const Rational& epsilon) {
    static const std::vector<Knot> knots = {
        {r(0), r(1, 2)}, {r(29, 100), r(79, 100)}, {r(1, 2), r(79, 100)}, {r(1, 2), r(1)}, {r(1), r(3, 2)},
        {r(3, 2), r(2)}};
    return piecewise(knots, epsilon);
}

std::optional<Rational> batch_old_results(const Rational& epsilon) {
    static const std::vector<Knot> knots = {
        {r(0), r(4, 5)},    {r(1, 5), r(4, 5)}, {r(7, 32), r(7, 8)}, {r(1, 4), r(7, 8)}, {r(1, 4), r(1)},
        {r(1, 2), r(5, 4)}, {r(3, 4), r(3, 2)}, {r(1), r(3, 2)},     {r(3, 2), r(2)}};
    return piecewise(knots, epsilon);
}

std::optional<Rational> lower_bound(const Rational& epsilon) {
    static const std::vector<Knot> knots = {
        {r(0), r(1, 2)}, {r(1, 2), r(1, 2)}, {r(1), r(1)}, {r(3, 2), r(3, 2)}, {r(2), r(2)}};
    return piecewise(knots, epsilon);
}

Rational array_batch_delta(const Rational& epsilon) {
    if (epsilon < 0 || epsilon >= r(1, 2)) throw PreconditionError("array exponent needs 0 <= eps < 1/2");
    return r(2, 3) + r(5, 3) * epsilon;
}

Rational batch_crossover() {
    // a0 + a1 e = b0 + b1 e
    const Rational a0 = array_batch_delta(0);
    const Rational a1 = (array_batch_delta(r(1, 4)) - a0) * 4;
    const Rational b0 = batch_mult::batch_delta(0, pir::Variant::Binary);
    const Rational b1 = (batch_mult::batch_delta(r(1, 4), pir::Variant::Binary) - b0) * 4;
    return (b0 - a0) / (a1 - b1);
}

std::vector<CurveRow> curve_rows(CurveKind kind, const CurveOptions& o) {
    if (o.step <= 0) throw ParseError("step must be positive");
    if (o.max < 0) throw ParseError("max must be non-negative");
    std::vector<Rational> grid;
    for (Rational e = 0; e <= o.max; e += o.step) grid.push_back(e);

    std::vector<CurveRow> rows;
    auto add_reference = [&](const Rational& eps, bool batch) {
        if (kind == CurveKind::PirQAry) return;
        if (auto v = batch ? batch_old_results(eps) : pir_old_results(eps)) rows.push_back({eps, *v, "old-results"});
        if (auto v = lower_bound(eps)) rows.push_back({eps, *v, "lower-bound"});
    };

    for (const auto& eps : grid) {
        if (kind == CurveKind::Batch) {
            const Rational bin = batch_mult::batch_delta(eps, pir::Variant::Binary);
            rows.push_back({eps, bin, "multiplicity-binary"});
            rows.push_back({eps, batch_mult::batch_delta(eps, pir::Variant::QAry), "multiplicity-qary"});
            Rational best = bin;
            if (eps < r(1, 2)) {
                const Rational arr = array_batch_delta(eps);
                rows.push_back({eps, arr, "array"});
                best = std::min(best, arr);
            }
            rows.push_back({eps, best, "construction-min"});
            add_reference(eps, true);
            continue;
        }
        const auto variant = kind == CurveKind::PirBinary ? pir::Variant::Binary : pir::Variant::QAry;
        const Rational one_eps[] = {eps};
        for (const auto& row : pir::pir_delta_curves(one_eps, 2, o.s_search, variant)) {
            if (row.minimum) {
                rows.push_back({eps, row.delta, "min-over-s", row.s});
            } else if (row.s <= o.s_show) {
                rows.push_back({eps, row.delta, "s=" + std::to_string(row.s), row.s});
            }
        }
        add_reference(eps, false);
    }
    return rows;
}

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "epsilon,delta,series,epsilon_decimal,delta_decimal,s\n";
    char buf[64];
    for (const auto& row : rows) {
        os << to_string(row.epsilon) << ',' << to_string(row.delta) << ',' << row.series << ',';
        std::snprintf(buf, sizeof buf, "%.6f,%.6f", to_double(row.epsilon), to_double(row.delta));
        os << buf << ',';
        if (row.s != 0) os << row.s;
        os << '\n';
    }
}

namespace {

std::vector<gf::Elem> random_message(std::size_t n, std::uint32_t q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<gf::Elem> pick(0, q - 1);
    std::vector<gf::Elem> msg(n);
    for (auto& x : msg) x = pick(rng);
    return msg;
}

std::vector<gf::Elem> message_or_random(const std::optional<std::string>& message, std::size_t n, std::uint32_t q,
                                        std::uint64_t seed) {
    if (!message) return random_message(n, q, seed);
    const auto values = parse_list(*message);
    if (values.size() != n) {
        throw ParseError("message has " + std::to_string(values.size()) + " entries, expected " + std::to_string(n));
    }
    for (auto v : values) {
        if (v >= q) throw ParseError("message entry " + std::to_string(v) + " is outside the field");
    }
    return {values.begin(), values.end()};
}

void print_vector(std::ostream& os, std::span<const gf::Elem> v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '\n';
}

multiplicity::MultCodeword unflatten(const multiplicity::MultCodeParams& params, std::span<const gf::Elem> flat) {
    const std::size_t width = params.symbol_width();
    if (flat.size() != params.base_length()) {
        throw ParseError("codeword has " + std::to_string(flat.size()) + " entries, expected " +
                         std::to_string(params.base_length()));
    }
    multiplicity::MultCodeword c{params, {}};
    c.symbols.resize(params.length());
    for (std::size_t pt = 0; pt < params.length(); ++pt) {
        c.symbols[pt].m = params.m;
        c.symbols[pt].entries.assign(flat.begin() + pt * width, flat.begin() + (pt + 1) * width);
    }
    return c;
}

std::uint8_t xor_over(std::span<const std::uint8_t> word, std::span<const std::size_t> set) {
    std::uint8_t acc = 0;
    for (auto c : set) acc ^= word[c];
    return acc;
}

} // namespace

int cmd_roundtrip(const Descriptor& desc, std::uint64_t seed, bool zero_message, std::ostream& out) {
    std::uint64_t checks = 0, mismatches = 0;
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) {
        const auto params = descriptor::to_params(*m);
        const auto view = multiplicity::SystematicView::build(params);
        auto info = random_message(params.dimension(), params.q(), seed);
        if (zero_message) std::fill(info.begin(), info.end(), 0);
        const auto c = view.encode(info);
        if (view.extract_info(c) != info) ++mismatches;
        for (std::size_t pt = 0; pt < params.length(); ++pt) {
            for (const auto& plan : pir::pir_recovery_plans(params, pt)) {
                const auto got = pir::recover_symbol(multiplicity::restrict_to(c, plan.coordinates), plan);
                ++checks;
                if (got.entries != c.symbol(pt).entries) ++mismatches;
            }
        }
    } else {
        const auto params = descriptor::to_params(std::get<ArrayDescriptor>(desc));
        const auto msg = random_message(params.dimension(), 2, seed);
        std::vector<std::uint8_t> data(msg.begin(), msg.end());
        if (zero_message) std::fill(data.begin(), data.end(), 0);
        const auto word = array_code::encode_array(params, data).flatten();
        for (std::size_t i = 0; i < params.dimension(); ++i) {
            for (const auto& set : array_code::pir_sets_for_bit(params, array_code::cell_of(params, i))) {
                ++checks;
                if (xor_over(word, set) != data[i]) ++mismatches;
            }
        }
    }
    out << "seed=" << seed << " checks=" << checks << " mismatches=" << mismatches << '\n';
    return mismatches == 0 ? kPass : kFailure;
}

int cmd_encode(const Descriptor& desc, const std::optional<std::string>& message, std::uint64_t seed,
               std::ostream& out) {
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) {
        const auto params = descriptor::to_params(*m);
        const auto view = multiplicity::SystematicView::build(params);
        const auto info = message_or_random(message, params.dimension(), params.q(), seed);
        print_vector(out, view.encode(info).flatten());
        return kPass;
    }
    const auto params = descriptor::to_params(std::get<ArrayDescriptor>(desc));
    const auto msg = message_or_random(message, params.dimension(), 2, seed);
    const std::vector<std::uint8_t> data(msg.begin(), msg.end());
    const auto word = array_code::encode_array(params, data).flatten();
    print_vector(out, std::vector<gf::Elem>(word.begin(), word.end()));
    return kPass;
}

int cmd_recover(const Descriptor& desc, const std::string& codeword, std::size_t index, std::ostream& out) {
    const auto flat = parse_list(codeword);
    if (const auto* m = std::get_if<MultiplicityDescriptor>(&desc)) {
        const auto params = descriptor::to_params(*m);
        for (auto v : flat) {
            if (v >= params.q()) throw ParseError("codeword entry " + std::to_string(v) + " is outside the field");
        }
        if (index >= params.length()) throw ParseError("point index out of range");
        const auto c = unflatten(params, std::vector<gf::Elem>(flat.begin(), flat.end()));
        bool agree = true;
        std::optional<std::vector<gf::Elem>> first;
        const auto plans = pir::pir_recovery_plans(params, index);
        for (std::size_t j = 0; j < plans.size(); ++j) {
            const auto got = pir::recover_symbol(multiplicity::restrict_to(c, plans[j].coordinates), plans[j]);
            out << "plan " << j << " points=" << plans[j].coordinates.size() << " symbol=";
            print_vector(out, got.entries);
            if (first && *first != got.entries) agree = false;
            if (!first) first = got.entries;
        }
        return agree ? kPass : kFailure;
    }
    const auto params = descriptor::to_params(std::get<ArrayDescriptor>(desc));
    if (flat.size() != params.length()) {
        throw ParseError("codeword has " + std::to_string(flat.size()) + " entries, expected " +
                         std::to_string(params.length()));
    }
    if (index >= params.dimension()) throw ParseError("data bit index out of range");
    std::vector<std::uint8_t> word;
    for (auto v : flat) {
        if (v > 1) throw ParseError("array codewords are bits");
        word.push_back(static_cast<std::uint8_t>(v));
    }
    std::optional<std::uint8_t> first;
    bool agree = true;
    const auto sets = array_code::pir_sets_for_bit(params, array_code::cell_of(params, index));
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto bit = xor_over(word, sets[j]);
        out << "set " << j << " size=" << sets[j].size() << " bit=" << int(bit) << '\n';
        if (first && *first != bit) agree = false;
        if (!first) first = bit;
    }
    return agree ? kPass : kFailure;
}

} // namespace pirbatch::commands

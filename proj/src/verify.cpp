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

#include "pirbatch/verify.hpp"

#include <algorithm>
#include <set>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "pirbatch/errors.hpp"

namespace pirbatch::verify {

std::vector<Elem> GeneratorMatrix::column(std::size_t c) const {
    if (c >= N) throw PreconditionError("column index out of range");
    std::vector<Elem> out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = entries.at(r, c);
    return out;
}

GeneratorMatrix extract_generator(const FieldPtr& field, const Encoder& encoder, std::size_t n,
                                  std::size_t N, std::uint64_t seed) {
    const auto& f = *field;
    GeneratorMatrix g{field, n, N, gf::Matrix(n, N), {}};
    std::vector<Elem> msg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        msg[i] = 1;
        const auto row = encoder(msg);
        msg[i] = 0;
        if (row.size() != N) throw PreconditionError("encoder output has wrong length");
        for (std::size_t c = 0; c < N; ++c) g.entries.at(i, c) = row[c];
    }

    const auto zero = encoder(msg);
    if (std::any_of(zero.begin(), zero.end(), [](Elem x) { return x != 0; })) {
        throw CertificationError("encoder maps zero to a nonzero word");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
    std::vector<Elem> a(n), b(n), sum(n);
    for (int trial = 0; trial < 50; ++trial) {
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = pick(rng);
            b[i] = pick(rng);
            sum[i] = f.add(a[i], b[i]);
        }
        const auto ea = encoder(a), eb = encoder(b), es = encoder(sum);
        for (std::size_t c = 0; c < N; ++c) {
            if (es[c] != f.add(ea[c], eb[c])) {
                throw CertificationError("encoder is not linear at coordinate " + std::to_string(c));
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < N; ++c) {
            bool unit = true;
            for (std::size_t r = 0; r < n && unit; ++r) unit = g.entries.at(r, c) == (r == i ? 1u : 0u);
            if (unit) {
                g.info_positions.push_back(c);
                break;
            }
        }
        if (g.info_positions.size() != i + 1) {
            g.info_positions.clear();
            break;
        }
    }
    return g;
}

Target info_target(const GeneratorMatrix& g, std::size_t i) {
    if (i >= g.n) throw PreconditionError("info index out of range");
    std::vector<Elem> e(g.n, 0);
    e[i] = 1;
    return {e};
}

Target coordinate_target(const GeneratorMatrix& g, std::span<const std::size_t> columns) {
    Target t;
    for (auto c : columns) t.push_back(g.column(c));
    return t;
}

std::optional<std::vector<std::vector<Elem>>> recovery_coefficients(const GeneratorMatrix& g,
                                                                    const Target& target,
                                                                    std::span<const std::size_t> r) {
    gf::Matrix a(g.n, r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] >= g.N) throw PreconditionError("recovering set coordinate out of range");
        for (std::size_t row = 0; row < g.n; ++row) a.at(row, j) = g.entries.at(row, r[j]);
    }
    return gf::solve_all(*g.field, a, target);
}

bool recovers(const GeneratorMatrix& g, const Target& target, std::span<const std::size_t> r) {
    return recovery_coefficients(g, target, r).has_value();
}

std::optional<std::vector<Elem>> is_recovering_set(const GeneratorMatrix& g, std::size_t i,
                                                   std::span<const std::size_t> r) {
    auto coeffs = recovery_coefficients(g, info_target(g, i), r);
    if (!coeffs) return std::nullopt;
    return std::move(coeffs->front());
}

std::optional<std::pair<std::size_t, std::size_t>> first_overlap(std::span<const CoordinateSet> sets,
                                                                 std::size_t universe) {
    constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(universe, kFree);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (auto c : sets[s]) {
            if (c >= universe) throw PreconditionError("coordinate out of range");
            if (owner[c] != kFree && owner[c] != s) return std::make_pair(owner[c], s);
            owner[c] = s;
        }
    }
    return std::nullopt;
}

PirReport certify_pir_targets(const GeneratorMatrix& g, const std::vector<Target>& targets,
                              const std::vector<std::vector<CoordinateSet>>& sets, std::size_t k) {
    PirReport report;
    report.targets = targets.size();
    report.k = k;
    if (sets.size() != targets.size()) throw PreconditionError("one set list per target is required");
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto& own = sets[t];
        if (own.size() < k) {
            report.failures.push_back({t, "only " + std::to_string(own.size()) + " sets, need " +
                                              std::to_string(k)});
            continue;
        }
        bool ok = true;
        for (std::size_t j = 0; j < own.size() && ok; ++j) {
            if (!recovers(g, targets[t], own[j])) {
                report.failures.push_back({t, "set " + std::to_string(j) + " does not recover the target"});
                ok = false;
            }
        }
        if (!ok) continue;
        if (auto clash = first_overlap(own, g.N)) {
            report.failures.push_back({t, "sets " + std::to_string(clash->first) + " and " +
                                              std::to_string(clash->second) + " overlap"});
        }
    }
    return report;
}

PirReport certify_pir(const GeneratorMatrix& g, const std::vector<std::vector<CoordinateSet>>& sets,
                      std::size_t k) {
    std::vector<Target> targets;
    targets.reserve(g.n);
    for (std::size_t i = 0; i < g.n; ++i) targets.push_back(info_target(g, i));
    return certify_pir_targets(g, targets, sets, k);
}

namespace {

std::uint64_t multiset_count(std::size_t items, std::size_t k) {
    // C(items + k - 1, k) with saturation.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (k == 0) return 1;
    if (items == 0) return 0;
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (items - 1 + i) / i;
        if (r > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

MultisetRequests::MultisetRequests(std::size_t items, std::size_t k, std::uint64_t threshold,
                                   std::uint64_t seed)
    : items_(items), k_(k), threshold_(threshold), seed_(seed), full_count_(multiset_count(items, k)) {}

void MultisetRequests::for_each(
    const std::function<void(std::uint64_t, std::span<const std::size_t>)>& fn) const {
    std::vector<std::size_t> req(k_, 0);
    if (sampled()) {
        std::mt19937_64 rng(seed_);
        std::uniform_int_distribution<std::size_t> pick(0, items_ - 1);
        for (std::uint64_t id = 0; id < threshold_; ++id) {
            for (auto& x : req) x = pick(rng);
            std::sort(req.begin(), req.end());
            fn(id, req);
        }
        return;
    }
    if (items_ == 0 && k_ > 0) return;
    std::uint64_t id = 0;
    while (true) {
        fn(id++, req);
        // Next non-decreasing sequence.
        std::size_t pos = k_;
        while (pos > 0 && req[pos - 1] == items_ - 1) --pos;
        if (pos == 0) return;
        const std::size_t v = req[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < k_; ++i) req[i] = v;
    }
}

namespace {

BatchRow check_request(const GeneratorMatrix& g, const BatchPlanner& planner,
                       const std::vector<Target>& item_targets, std::uint64_t id,
                       std::span<const std::size_t> request) {
    BatchRow row;
    row.request_id = id;
    row.request.assign(request.begin(), request.end());
    std::vector<CoordinateSet> sets;
    try {
        sets = planner(request);
    } catch (const std::exception& e) {
        row.detail = std::string("planner failed: ") + e.what();
        return row;
    }
    for (const auto& s : sets) row.set_sizes.push_back(s.size());
    if (sets.size() != request.size()) {
        row.detail = "planner returned " + std::to_string(sets.size()) + " sets for " +
                     std::to_string(request.size()) + " requests";
        return row;
    }
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (request[j] >= item_targets.size()) {
            row.detail = "request item out of range";
            return row;
        }
        if (!recovers(g, item_targets[request[j]], sets[j])) {
            row.detail = "set " + std::to_string(j) + " does not recover item " + std::to_string(request[j]);
            return row;
        }
    }
    if (auto clash = first_overlap(sets, g.N)) {
        row.detail = "sets " + std::to_string(clash->first) + " and " + std::to_string(clash->second) + " overlap";
        return row;
    }
    row.passed = true;
    return row;
}

} // namespace

BatchReport certify_batch(const GeneratorMatrix& g, const BatchPlanner& planner,
                          const std::vector<Target>& item_targets, const MultisetRequests& requests,
                          const BatchOptions& options) {
    BatchReport report;
    report.seed = requests.seed();
    report.sampled = requests.sampled();

    auto absorb = [&options](BatchReport& into, BatchRow&& row) {
        ++into.total;
        for (auto sz : row.set_sizes) into.max_set_size = std::max(into.max_set_size, sz);
        if (row.passed) {
            ++into.passed;
            if (options.keep_all_rows) into.rows.push_back(std::move(row));
        } else {
            ++into.failed;
            into.rows.push_back(std::move(row));
        }
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        requests.for_each([&](std::uint64_t id, std::span<const std::size_t> req) {
            absorb(report, check_request(g, planner, item_targets, id, req));
        });
        return report;
    }

    // Requests are handed out in chunks; partial reports merge by id.
    constexpr std::size_t kChunk = 1024;
    std::mutex mu;
    std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> pending;
    std::vector<BatchReport> partial(jobs);
    auto run_chunk = [&](std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> chunk) {
        std::vector<std::jthread> workers;
        std::size_t next = 0;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                while (true) {
                    std::size_t idx;
                    {
                        std::lock_guard lock(mu);
                        if (next >= chunk.size()) return;
                        idx = next++;
                    }
                    auto& [id, req] = chunk[idx];
                    absorb(partial[w], check_request(g, planner, item_targets, id, req));
                }
            });
        }
    };
    requests.for_each([&](std::uint64_t id, std::span<const std::size_t> req) {
        pending.emplace_back(id, std::vector<std::size_t>(req.begin(), req.end()));
        if (pending.size() == kChunk * jobs) {
            run_chunk(std::move(pending));
            pending.clear();
        }
    });
    if (!pending.empty()) run_chunk(std::move(pending));

    for (auto& p : partial) {
        report.total += p.total;
        report.passed += p.passed;
        report.failed += p.failed;
        report.max_set_size = std::max(report.max_set_size, p.max_set_size);
        for (auto& row : p.rows) report.rows.push_back(std::move(row));
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const BatchRow& a, const BatchRow& b) { return a.request_id < b.request_id; });
    return report;
}

std::size_t min_distance(const GeneratorMatrix& g, std::size_t symbol_width) {
    const auto& f = *g.field;
    if (symbol_width == 0 || g.N % symbol_width != 0) {
        throw PreconditionError("symbol width must divide the code length");
    }
    double messages = 1;
    for (std::size_t i = 0; i < g.n; ++i) messages *= f.order();
    if (messages > 2e7) throw CapacityError("q^n exceeds the brute-force guard of 2e7");
    if (g.n == 0) return 0;

    const std::size_t symbols = g.N / symbol_width;
    std::vector<Elem> digits(g.n, 0);
    std::vector<Elem> word(g.N, 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    // Odometer over all messages; each step changes one digit, so the
    // codeword updates by one scaled row.
    while (true) {
        std::size_t i = 0;
        while (i < g.n && digits[i] == f.order() - 1) {
            const Elem delta = f.neg(digits[i]);
            for (std::size_t c = 0; c < g.N; ++c) word[c] = f.add(word[c], f.mul(delta, g.entries.at(i, c)));
            digits[i] = 0;
            ++i;
        }
        if (i == g.n) break;
        const Elem next = digits[i] + 1;
        const Elem delta = f.sub(next, digits[i]);
        for (std::size_t c = 0; c < g.N; ++c) word[c] = f.add(word[c], f.mul(delta, g.entries.at(i, c)));
        digits[i] = next;

        std::size_t weight = 0;
        for (std::size_t sym = 0; sym < symbols && weight < best; ++sym) {
            for (std::size_t c = sym * symbol_width; c < (sym + 1) * symbol_width; ++c) {
                if (word[c] != 0) {
                    ++weight;
                    break;
                }
            }
        }
        best = std::min(best, weight);
    }
    return best;
}

namespace {
std::string join(const std::vector<std::size_t>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
} // namespace

void write_report_csv(std::ostream& os, const BatchReport& report) {
    os << "request_id,status,detail\n";
    for (const auto& row : report.rows) {
        std::string detail = "request=" + join(row.request, ' ') + "; set_sizes=" + join(row.set_sizes, ' ');
        if (!row.detail.empty()) detail += "; " + row.detail;
        os << row.request_id << ',' << (row.passed ? "pass" : "fail") << ',' << csv_escape(detail) << '\n';
    }
}

void write_report_csv(std::ostream& os, const PirReport& report) {
    os << "request_id,status,detail\n";
    std::size_t next_failure = 0;
    for (std::size_t t = 0; t < report.targets; ++t) {
        std::string detail;
        bool passed = true;
        while (next_failure < report.failures.size() && report.failures[next_failure].index == t) {
            passed = false;
            if (!detail.empty()) detail += "; ";
            detail += report.failures[next_failure].detail;
            ++next_failure;
        }
        os << t << ',' << (passed ? "pass" : "fail") << ',' << csv_escape(detail) << '\n';
    }
}

std::string summary_json(const BatchReport& report) {
    nlohmann::ordered_json j;
    j["total"] = report.total;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["seed"] = report.seed;
    j["sampled"] = report.sampled;
    j["max_set_size"] = report.max_set_size;
    return j.dump(2);
}

std::string summary_json(const PirReport& report, std::uint64_t seed) {
    nlohmann::ordered_json j;
    std::set<std::size_t> failing;
    for (const auto& f : report.failures) failing.insert(f.index);
    j["total"] = report.targets;
    j["passed"] = report.targets - failing.size();
    j["failed"] = failing.size();
    j["seed"] = seed;
    j["k"] = report.k;
    return j.dump(2);
}

} // namespace pirbatch::verify

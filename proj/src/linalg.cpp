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

#include "pirbatch/linalg.hpp"

#include <utility>

#include "pirbatch/errors.hpp"

namespace pirbatch::gf {

namespace {

// Reduces a in place to reduced row echelon form over the first
// `limit` columns and returns the pivot columns.
std::vector<std::size_t> reduce(const Field& f, Matrix& a, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < a.rows; ++col) {
        std::size_t sel = row;
        while (sel < a.rows && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
        }
        const Elem scale = f.inv(a.at(row, col));
        for (std::size_t c = col; c < a.cols; ++c) a.at(row, c) = f.mul(a.at(row, c), scale);
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row) continue;
            const Elem factor = a.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < a.cols; ++c) {
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinearSolution solve(const Field& field, Matrix a, std::vector<Elem> b) {
    if (b.size() != a.rows) throw PreconditionError("solve: right-hand side has wrong length");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    const auto pivots = reduce(field, aug, a.cols);
    LinearSolution out;
    out.rank = pivots.size();
    for (std::size_t r = pivots.size(); r < aug.rows; ++r) {
        if (aug.at(r, a.cols) != 0) return out;
    }
    out.consistent = true;
    out.x.assign(a.cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = aug.at(i, a.cols);
    return out;
}

std::optional<std::vector<std::vector<Elem>>> solve_all(const Field& field, const Matrix& a,
                                                        const std::vector<std::vector<Elem>>& rhs) {
    Matrix aug(a.rows, a.cols + rhs.size());
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t t = 0; t < rhs.size(); ++t) {
            if (rhs[t].size() != a.rows) throw PreconditionError("solve: right-hand side has wrong length");
            aug.at(r, a.cols + t) = rhs[t][r];
        }
    }
    const auto pivots = reduce(field, aug, a.cols);
    for (std::size_t r = pivots.size(); r < aug.rows; ++r) {
        for (std::size_t t = 0; t < rhs.size(); ++t) {
            if (aug.at(r, a.cols + t) != 0) return std::nullopt;
        }
    }
    std::vector<std::vector<Elem>> out(rhs.size(), std::vector<Elem>(a.cols, 0));
    for (std::size_t t = 0; t < rhs.size(); ++t) {
        for (std::size_t i = 0; i < pivots.size(); ++i) out[t][pivots[i]] = aug.at(i, a.cols + t);
    }
    return out;
}

std::size_t rank(const Field& field, Matrix a) {
    const std::size_t cols = a.cols;
    return reduce(field, a, cols).size();
}

std::vector<std::size_t> pivot_columns(const Field& field, Matrix a) {
    const std::size_t cols = a.cols;
    return reduce(field, a, cols);
}

std::optional<Matrix> inverse(const Field& field, const Matrix& a) {
    if (a.rows != a.cols) throw PreconditionError("inverse of a non-square matrix");
    const std::size_t n = a.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = 1;
    }
    if (reduce(field, aug, n).size() != n) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    }
    return out;
}

} // namespace pirbatch::gf

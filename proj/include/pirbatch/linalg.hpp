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

#include <cstddef>
#include <optional>
#include <vector>

#include "pirbatch/gf.hpp"

namespace pirbatch::gf {

// Dense row-major matrix of field element indices.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    // A particular solution with free variables set to zero. Empty when
    // the system is inconsistent.
    std::vector<Elem> x;

    bool unique(std::size_t unknowns) const { return consistent && rank == unknowns; }
};

// Solves A x = b by Gauss-Jordan elimination.
LinearSolution solve(const Field& field, Matrix a, std::vector<Elem> b);

// Solves A x_t = b_t for every right-hand side at once. Nothing when any
// of them is inconsistent.
std::optional<std::vector<std::vector<Elem>>> solve_all(const Field& field, const Matrix& a,
                                                        const std::vector<std::vector<Elem>>& rhs);

std::size_t rank(const Field& field, Matrix a);

// Indices of the pivot columns met when reducing columns left to right.
std::vector<std::size_t> pivot_columns(const Field& field, Matrix a);

std::optional<Matrix> inverse(const Field& field, const Matrix& a);

} // namespace pirbatch::gf

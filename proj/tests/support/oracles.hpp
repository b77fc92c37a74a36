// Copyright 2026 The lefschetz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference computations. Nothing here calls into the library's
// motive, orbit, or measure code; everything is brute force on plain
// integers so that it can check those paths.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// dimension ↦ number of cells, for a variety with an affine paving.
using CellCounts = std::map<std::int64_t, std::int64_t>;

/// Cells of a product are products of cells; dimensions add.
inline CellCounts product_cells(const CellCounts& a, const CellCounts& b) {
    CellCounts out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) out[da + db] += ca * cb;
    }
    return out;
}

/// P^n = A^0 ⊔ A^1 ⊔ … ⊔ A^n.
inline CellCounts projective_cells(std::int64_t n) {
    CellCounts out;
    for (std::int64_t i = 0; i <= n; ++i) out[i] = 1;
    return out;
}

/// Schubert cells of Gr(k, n): one per k-subset {a_1 < … < a_k} of
/// {1, …, n}, of dimension Σ (a_i - i).
inline CellCounts schubert_cells(int k, int n) {
    CellCounts out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::int64_t dim = 0;
        int i = 1;
        for (int a = 1; a <= n; ++a) {
            if (mask & (1u << (a - 1))) {
                dim += a - i;
                ++i;
            }
        }
        out[dim] += 1;
    }
    return out;
}

/// Coefficients of Σ_i d[n-i] (t-1)^i, expanded by repeated polynomial
/// multiplication. For a smooth complete fan this is the h-vector, i.e.
/// the even Betti numbers of the toric variety.
inline std::vector<std::int64_t> toric_h_vector(const std::vector<std::int64_t>& d) {
    const auto n = static_cast<int>(d.size()) - 1;
    std::vector<std::int64_t> total(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::int64_t> power{1};  // (t-1)^i
    for (int i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k < power.size(); ++k) total[k] += d[static_cast<std::size_t>(n - i)] * power[k];
        std::vector<std::int64_t> next(power.size() + 1, 0);
        for (std::size_t k = 0; k < power.size(); ++k) {
            next[k + 1] += power[k];
            next[k] -= power[k];
        }
        power = next;
    }
    return total;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

/// Number of F_q-points of a projective variety in P^{m-1} cut out by
/// `form`, by enumerating all nonzero vectors of F_q^m (q prime).
template <class Form>
std::int64_t projective_zero_count(int m, int q, Form&& form) {
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    std::int64_t affine = 0;
    const std::int64_t total = ipow(q, m);
    for (std::int64_t code = 1; code < total; ++code) {
        std::int64_t c = code;
        for (int i = 0; i < m; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
            c /= q;
        }
        if (form(v) % q == 0) ++affine;
    }
    return affine / (q - 1);
}

/// Split quadric of dimension d: Σ x_i y_i (+ z^2 when d+2 is odd) in P^{d+1}.
inline std::int64_t split_quadric_points(int d, int q) {
    const int m = d + 2;
    return projective_zero_count(m, q, [m](const std::vector<int>& v) {
        std::int64_t s = 0;
        const int pairs = m / 2;
        for (int i = 0; i < pairs; ++i) s += static_cast<std::int64_t>(v[static_cast<std::size_t>(2 * i)]) *
                                              v[static_cast<std::size_t>(2 * i + 1)];
        if (m % 2 == 1) s += static_cast<std::int64_t>(v.back()) * v.back();
        return s;
    });
}

inline std::int64_t projective_points(int n, int q) { return (ipow(q, n + 1) - 1) / (q - 1); }

/// |Bl_Z X| = |X| - |Z| + |Z|·|P^{c-1}|.
inline std::int64_t blowup_points(std::int64_t base, std::int64_t center, int codim, int q) {
    return base - center + center * projective_points(codim - 1, q);
}

/// Evaluates Σ cells[l] q^l, the point count of a paved variety.
inline std::int64_t count_from_cells(const CellCounts& cells, int q) {
    std::int64_t s = 0;
    for (const auto& [l, c] : cells) s += c * ipow(q, static_cast<int>(l));
    return s;
}

}  // namespace oracle

// Independent ground truth for Littlewood-Richardson coefficients: the
// classical rule, counting semistandard fillings of the skew shape nu/lambda
// with content mu whose reverse reading word is a lattice word. Enumeration
// is plain backtracking in reverse reading order, pruning on the lattice
// prefix condition at every placement.
//
// Integer (possibly negative) inputs are reduced first: mu is made
// nonnegative by a determinant twist (subtract mu_r from mu and nu), then
// lambda and nu are translated together by normalize_nonneg.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "lrv/errors.hpp"
#include "lrv/partition.hpp"

namespace lrv {

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (outer.rank() != inner.rank()) throw RankMismatch("skew shape ranks differ");
    }
    bool contains() const {
        for (int i = 0; i < outer.rank(); ++i)
            if (inner.part(i) > outer.part(i)) return false;
        return true;
    }
    long long cell_count() const { return outer.size() - inner.size(); }
};

namespace detail {

// Counts lattice LR fillings of outer/inner with the given nonnegative
// content. Cells are visited row by row, right to left, so the prefix being
// extended is exactly the reverse reading word.
inline long long count_lr_fillings(const Partition& outer, const Partition& inner,
                                   const std::vector<int>& content) {
    const int r = outer.rank();
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < r; ++i)
        for (int j = outer.part(i) - 1; j >= inner.part(i); --j) cells.push_back({i, j});

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(outer.part(i)), 0);
    std::vector<int> used(static_cast<std::size_t>(r) + 1, 0);

    long long count = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [row, col] = cells[idx];
        // Right neighbor is already placed; the cell above was placed in an
        // earlier row when it belongs to the skew shape.
        const int right = (col + 1 < outer.part(row)) ? fill[row][col + 1] : r;
        const bool above_in_shape = row > 0 && col >= inner.part(row - 1);
        const int above = above_in_shape ? fill[row - 1][col] : 0;
        for (int x = above + 1; x <= right; ++x) {
            if (used[x] >= content[x - 1]) continue;          // content exhausted
            if (x > 1 && used[x - 1] <= used[x]) continue;    // lattice prefix would break
            ++used[x];
            fill[row][col] = x;
            self(self, idx + 1);
            --used[x];
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail

inline long long lr_tableaux_count(const Partition& lambda, const Partition& mu,
                                   const Partition& nu) {
    const int r = lambda.rank();
    if (mu.rank() != r || nu.rank() != r)
        throw RankMismatch("lr_tableaux_count: ranks differ");
    if (lambda.size() + mu.size() != nu.size()) return 0;

    // Determinant twist: c^nu_{lambda,mu} = c^{nu-t}_{lambda,mu-t} with t = mu_r.
    const int twist = mu.part(r - 1);
    const Partition mu2 = mu.shifted_by(-twist);
    const Partition nu2 = nu.shifted_by(-twist);
    auto [shifted, t] = normalize_nonneg({lambda, nu2});
    const Partition& lam3 = shifted[0];
    const Partition& nu3 = shifted[1];
    if (mu2.parts().back() < 0)
        throw NegativeContent("content has negative parts after reduction");

    SkewShape shape(nu3, lam3);
    if (!shape.contains()) return 0;
    if (shape.cell_count() != mu2.size()) return 0;
    return detail::count_lr_fillings(nu3, lam3, mu2.parts());
}

// Complete decomposition of V(lambda) (x) V(mu): every candidate nu in the
// support box [lambda_r + mu_r, lambda_1 + mu_1] with matching size is tested.
inline DecompositionTable tensor_decompose(const Partition& lambda, const Partition& mu) {
    if (lambda.rank() != mu.rank()) throw RankMismatch("tensor_decompose: ranks differ");
    const int r = lambda.rank();
    DecompositionTable table;
    const int lo = lambda.part(r - 1) + mu.part(r - 1);
    const int hi = lambda.part(0) + mu.part(0);
    for (const auto& nu : partitions_in_box(r, lo, hi, lambda.size() + mu.size())) {
        const long long c = lr_tableaux_count(lambda, mu, nu);
        if (c > 0) table.emplace(nu, c);
    }
    return table;
}

// Y(lambda, omega_s): add 1 to s distinct rows, keeping weak decrease; each
// admissible result appears with multiplicity exactly 1.
inline DecompositionTable pieri_expand(const Partition& lambda, int s) {
    const int r = lambda.rank();
    if (s < 1 || s > r) throw Error("pieri_expand: s must lie in 1..rank");
    if (lambda.parts().back() < 0)
        throw Error("pieri_expand requires nonnegative parts");
    DecompositionTable table;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            std::vector<int> parts = lambda.parts();
            for (int i : rows) ++parts[static_cast<std::size_t>(i)];
            if (std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
                table[Partition(parts)] = 1;
            return;
        }
        for (int i = from; i <= r - left; ++i) {
            rows.push_back(i);
            self(self, i + 1, left - 1);
            rows.pop_back();
        }
    };
    rec(rec, 0, s);
    return table;
}

struct IdentityReport {
    bool dimension_ok = false;
    bool symmetry_ok = false;
    BigInt product_dim;   // dim(lambda) * dim(mu)
    BigInt table_dim;     // sum of mult * dim(nu)
    DecompositionTable table;
};

inline IdentityReport validate_identities(const Partition& lambda, const Partition& mu) {
    IdentityReport rep;
    rep.table = tensor_decompose(lambda, mu);
    rep.symmetry_ok = (rep.table == tensor_decompose(mu, lambda));
    rep.product_dim = lambda.gl_dimension() * mu.gl_dimension();
    rep.table_dim = 0;
    for (const auto& [nu, mult] : rep.table) rep.table_dim += mult * nu.gl_dimension();
    rep.dimension_ok = (rep.product_dim == rep.table_dim);
    return rep;
}

}  // namespace lrv

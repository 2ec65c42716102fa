#include "ktorus/smith.hpp"

#include <algorithm>
#include <utility>

namespace ktorus {

BudgetExceeded::BudgetExceeded(std::uint64_t b)
    : std::runtime_error("operation budget exceeded"), budget(b) {}

std::size_t SmithForm::nonzero_count() const {
    std::size_t k = 0;
    for (const auto& d : diagonal)
        if (d != 0) ++k;
    return k;
}

namespace {

// Reduction state: the working copy of the matrix plus optional transforms.
// Every elementary operation is mirrored on U (row ops) or V (column ops)
// so that u*a*v == s stays invariant throughout.
struct Reducer {
    ZMatrix s;
    ZMatrix u, v;
    bool track;
    std::uint64_t budget;
    std::uint64_t steps = 0;

    Reducer(const ZMatrix& a, const SnfOptions& opts)
        : s(a), track(opts.want_transforms), budget(opts.budget) {
        if (track) {
            u = ZMatrix::identity(a.rows());
            v = ZMatrix::identity(a.cols());
        }
    }

    void charge() {
        if (budget != 0 && ++steps > budget) throw BudgetExceeded(budget);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        charge();
        for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        charge();
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
        if (track)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }

    // row[i] += c * row[src]
    void add_row(std::size_t i, std::size_t src, const mpz_class& c) {
        if (c == 0) return;
        charge();
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (s.at(src, j) != 0) s.at(i, j) += c * s.at(src, j);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j)
                if (u.at(src, j) != 0) u.at(i, j) += c * u.at(src, j);
    }

    // col[j] += c * col[src]
    void add_col(std::size_t j, std::size_t src, const mpz_class& c) {
        if (c == 0) return;
        charge();
        for (std::size_t i = 0; i < s.rows(); ++i)
            if (s.at(i, src) != 0) s.at(i, j) += c * s.at(i, src);
        if (track)
            for (std::size_t i = 0; i < v.rows(); ++i)
                if (v.at(i, src) != 0) v.at(i, j) += c * v.at(i, src);
    }

    void negate_row(std::size_t i) {
        charge();
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(i, j) = -s.at(i, j);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    }
};

// Quotient rounded to nearest, so the remainder satisfies |r| <= |d| / 2.
// Keeping remainders half-sized is what limits coefficient growth.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& d) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    // The floor-division remainder shares the divisor's sign (0 <= r < d or
    // d < r <= 0), so when |r| exceeds |d|/2 the nearer multiple is always one
    // more divisor step in the floor direction: a - (q+1)d = r - d, and r - d
    // has magnitude |d| - |r| < |d|/2 for either sign of d.
    if (2 * abs(r) > abs(d)) q += 1;
    return q;
}

}  // namespace

SmithForm snf(const ZMatrix& a, const SnfOptions& opts) {
    Reducer red(a, opts);
    ZMatrix& s = red.s;
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t dim = std::min(m, n);

    std::vector<std::size_t> row_nnz(m), col_nnz(n);
    for (std::size_t t = 0; t < dim; ++t) {
        // Pivot selection. Unit entries come first, choosing among them the
        // one with the fewest other nonzeros in its row and column (Markowitz
        // rule): unit pivots need no gcd steps and low fill keeps the block
        // sparse, which together prevent the coefficient swell that makes
        // naive elimination intractable on exterior-power blocks.
        std::size_t pi = t, pj = t;
        bool found = false;
        bool unit_found = false;
        std::size_t best_score = 0;
        std::fill(row_nnz.begin() + t, row_nnz.end(), 0);
        std::fill(col_nnz.begin() + t, col_nnz.end(), 0);
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (s.at(i, j) != 0) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
            }
        }
        for (std::size_t i = t; i < m; ++i) {
            if (row_nnz[i] == 0) continue;
            for (std::size_t j = t; j < n; ++j) {
                if (mpz_cmpabs_ui(s.at(i, j).get_mpz_t(), 1) != 0) continue;
                std::size_t score = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if (!unit_found || score < best_score) {
                    unit_found = true;
                    best_score = score;
                    pi = i;
                    pj = j;
                    if (score == 0) break;
                }
            }
            if (unit_found && best_score == 0) break;
        }
        found = unit_found;
        if (!found) {
            // No unit entry: take the nonzero entry of least absolute value.
            mpz_class best;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    const mpz_class& e = s.at(i, j);
                    if (e == 0) continue;
                    mpz_class ae = abs(e);
                    if (!found || ae < best) {
                        found = true;
                        best = ae;
                        pi = i;
                        pj = j;
                    }
                }
            }
        }
        if (!found) break;  // remaining block is zero
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot. Nearest-quotient reduction can
            // leave remainders smaller than the pivot; promote the smallest
            // remainder to be the new pivot and repeat.
            for (;;) {
                std::size_t best_i = t;
                mpz_class best_abs;
                bool residue = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (s.at(i, t) == 0) continue;
                    mpz_class q = nearest_quotient(s.at(i, t), s.at(t, t));
                    red.add_row(i, t, -q);
                    if (s.at(i, t) != 0) {
                        mpz_class ab = abs(s.at(i, t));
                        if (!residue || ab < best_abs) {
                            residue = true;
                            best_abs = ab;
                            best_i = i;
                        }
                    }
                }
                if (!residue) break;
                red.swap_rows(t, best_i);
            }
            // Same for row t, right of the pivot.
            for (;;) {
                std::size_t best_j = t;
                mpz_class best_abs;
                bool residue = false;
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (s.at(t, j) == 0) continue;
                    mpz_class q = nearest_quotient(s.at(t, j), s.at(t, t));
                    red.add_col(j, t, -q);
                    if (s.at(t, j) != 0) {
                        mpz_class ab = abs(s.at(t, j));
                        if (!residue || ab < best_abs) {
                            residue = true;
                            best_abs = ab;
                            best_j = j;
                        }
                    }
                }
                if (!residue) break;
                red.swap_cols(t, best_j);
            }
            // Column swaps while clearing the row can dirty column t again.
            bool col_dirty = false;
            for (std::size_t i = t + 1; i < m && !col_dirty; ++i)
                if (s.at(i, t) != 0) col_dirty = true;
            if (col_dirty) continue;

            // A unit pivot divides everything; skipping the sweep below keeps
            // the common case linear in the block size.
            if (s.at(t, t) == 1 || s.at(t, t) == -1) break;

            // Pivot must divide every entry of the remaining block; if some
            // entry resists, fold its row into row t and keep reducing. Each
            // round strictly shrinks |pivot|, so this terminates.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!mpz_divisible_p(s.at(i, j).get_mpz_t(), s.at(t, t).get_mpz_t())) {
                        red.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
    }

    // Normalize diagonal signs.
    for (std::size_t t = 0; t < dim; ++t)
        if (red.s.at(t, t) < 0) red.negate_row(t);

    SmithForm out;
    out.s = std::move(red.s);
    if (opts.want_transforms) {
        out.u = std::move(red.u);
        out.v = std::move(red.v);
    }
    out.diagonal.resize(dim);
    for (std::size_t t = 0; t < dim; ++t) out.diagonal[t] = out.s.at(t, t);
    return out;
}

ZMatrix kernel_basis(const ZMatrix& a) {
    SnfOptions opts;
    opts.want_transforms = true;
    SmithForm f = snf(a, opts);
    const std::size_t n = a.cols();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= f.diagonal.size() || f.diagonal[j] == 0) free_cols.push_back(j);
    ZMatrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, k) = f.v.at(i, free_cols[k]);
    return basis;
}

}  // namespace ktorus

#include "ktorus/ktheory.hpp"

#include <stdexcept>

#include "ktorus/exterior.hpp"
#include "ktorus/smith.hpp"

namespace ktorus {

namespace {

void require_gl(const ZMatrix& a) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("expected a nonempty square matrix");
    mpz_class d = a.determinant();
    if (d != 1 && d != -1)
        throw std::invalid_argument("matrix must have determinant +-1");
}

}  // namespace

KGroups pv_kgroups(const ZMatrix& a, const KOptions& opts) {
    require_gl(a);
    const std::size_t n = a.rows();
    KGroups out;
    out.n = n;

    SnfOptions snf_opts;
    snf_opts.budget = opts.block_budget;

    std::vector<FGAbelianGroup> k0_parts, k1_parts;
    for (std::size_t r = 0; r <= n; ++r) {
        ZMatrix w = wedge_power(a, r);
        ZMatrix block = w - ZMatrix::identity(w.rows());
        BlockResult res;
        res.r = r;
        try {
            SmithForm f = snf(block, snf_opts);
            const std::size_t nz = f.nonzero_count();
            res.coker.free_rank = block.rows() - nz;
            for (const auto& d : f.diagonal)
                if (d >= 2) res.coker.torsion.push_back(d);
            res.ker.free_rank = block.cols() - nz;
            // Kernels of integer matrices are free; nothing to compute.
        } catch (const BudgetExceeded&) {
            res.computed = false;
            out.complete = false;
        }
        if (res.computed) {
            if (r % 2 == 0) {
                k0_parts.push_back(res.coker);
                k1_parts.push_back(res.ker);
            } else {
                k1_parts.push_back(res.coker);
                k0_parts.push_back(res.ker);
            }
        }
        out.blocks.push_back(std::move(res));
    }
    out.k0 = direct_sum(k0_parts);
    out.k1 = direct_sum(k1_parts);
    return out;
}

KGroups kgroups_of_anzai(std::size_t n, const KOptions& opts) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    return pv_kgroups(anzai_matrix(n), opts);
}

KGroups kgroups_of_lattice_group(std::size_t n, const KOptions& opts) {
    if (n == 0) throw std::invalid_argument("rank parameter must be positive");
    return kgroups_of_anzai(n + 1, opts);
}

bool duality_check(const ZMatrix& a) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("expected a nonempty square matrix");
    if (a.determinant() != 1)
        throw std::invalid_argument("reflection symmetry requires determinant exactly 1");
    const std::size_t n = a.rows();
    std::vector<FGAbelianGroup> cokers(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        ZMatrix w = wedge_power(a, r);
        cokers[r] = cokernel(w - ZMatrix::identity(w.rows()));
    }
    for (std::size_t r = 0; r <= n; ++r)
        if (!(cokers[r] == cokers[n - r])) return false;
    return true;
}

mpz_class rank_kgroups(const ZMatrix& a) {
    require_gl(a);
    const std::size_t n = a.rows();
    mpz_class total = 0;
    for (std::size_t r = 0; r <= n; ++r) {
        ZMatrix w = wedge_power(a, r);
        ZMatrix block = w - ZMatrix::identity(w.rows());
        // Rank via the Smith form: its pivoting exploits the sparsity of
        // these wedge blocks far better than fraction-free elimination.
        std::size_t rk = snf(block).nonzero_count();
        total += mpz_class(static_cast<unsigned long>(block.cols() - rk));
    }
    return total;
}

}  // namespace ktorus

#include "ktorus/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktorus {

std::string FGAbelianGroup::to_text() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FGAbelianGroup cokernel(const ZMatrix& a, const SnfOptions& opts) {
    SmithForm f = snf(a, opts);
    FGAbelianGroup g;
    g.free_rank = a.rows() - f.nonzero_count();
    for (const auto& d : f.diagonal)
        if (d >= 2) g.torsion.push_back(d);
    return g;
}

FGAbelianGroup kernel(const ZMatrix& a, const SnfOptions& opts) {
    SmithForm f = snf(a, opts);
    FGAbelianGroup g;
    g.free_rank = a.cols() - f.nonzero_count();
    return g;
}

namespace {

// Trial-division factorization. Torsion orders here come from desk-scale
// Smith diagonals, so nothing resembling a hard semiprime ever shows up.
std::map<mpz_class, unsigned> factorize(mpz_class n) {
    if (n <= 0) throw std::invalid_argument("factorize expects a positive integer");
    std::map<mpz_class, unsigned> out;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace

FGAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                  const std::vector<mpz_class>& orders) {
    // Exponent lists per prime, one entry per cyclic summand containing that
    // prime. Aligning the j-th largest exponents of every prime produces the
    // invariant factors.
    std::map<mpz_class, std::vector<unsigned>> exps;
    for (const auto& d : orders) {
        if (d <= 0) throw std::invalid_argument("cyclic order must be positive");
        if (d == 1) continue;
        for (const auto& [p, e] : factorize(d)) exps[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, list] : exps) {
        std::sort(list.begin(), list.end(), std::greater<>());
        chain_len = std::max(chain_len, list.size());
    }
    FGAbelianGroup g;
    g.free_rank = free_rank;
    g.torsion.assign(chain_len, mpz_class(1));
    for (const auto& [p, list] : exps) {
        for (std::size_t j = 0; j < list.size(); ++j) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), list[j]);
            // j-th largest exponent goes into the j-th largest factor, which
            // sits at the tail of the ascending chain.
            g.torsion[chain_len - 1 - j] *= pe;
        }
    }
    return g;
}

FGAbelianGroup direct_sum(const std::vector<FGAbelianGroup>& parts) {
    std::size_t rank = 0;
    std::vector<mpz_class> orders;
    for (const auto& p : parts) {
        rank += p.free_rank;
        orders.insert(orders.end(), p.torsion.begin(), p.torsion.end());
    }
    return from_cyclic_orders(rank, orders);
}

bool groups_isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h) {
    // Inputs are canonicalized defensively; for already-canonical values this
    // reduces to structural equality.
    return from_cyclic_orders(g.free_rank, g.torsion) ==
           from_cyclic_orders(h.free_rank, h.torsion);
}

namespace {

// Adjugate of a square matrix of size <= 3, by explicit cofactors.
ZMatrix adjugate_small(const ZMatrix& a) {
    const std::size_t n = a.rows();
    ZMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Minor of a with row i and column j removed, signed, transposed.
            std::vector<mpz_class> sub;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub.push_back(a.at(r, c));
                }
            }
            mpz_class minor;
            if (n == 2) {
                minor = sub[0];
            } else {
                minor = sub[0] * sub[3] - sub[1] * sub[2];
            }
            adj.at(j, i) = ((i + j) % 2 == 0) ? minor : mpz_class(-minor);
        }
    }
    return adj;
}

}  // namespace

FGAbelianGroup cokernel_oracle(const ZMatrix& a) {
    if (!a.is_square() || a.rows() == 0 || a.rows() > 3)
        throw std::invalid_argument("oracle accepts square matrices of size 1..3");
    const std::size_t n = a.rows();
    mpz_class det = a.determinant();
    mpz_class det_abs = abs(det);
    if (det_abs == 0 || det_abs > 200)
        throw std::invalid_argument("oracle requires 1 <= |det| <= 200");
    const unsigned long big_d = det_abs.get_ui();

    // adj(A) * x mod |det| labels residue classes injectively: adj(A) x is
    // congruent to 0 exactly when x lies in the column span of A.
    ZMatrix adj = adjugate_small(a);
    auto label_of = [&](const std::vector<long>& x) {
        std::vector<unsigned long> lab(n);
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += adj.at(i, j) * x[j];
            mpz_class r;
            mpz_mod(r.get_mpz_t(), acc.get_mpz_t(), det_abs.get_mpz_t());
            lab[i] = r.get_ui();
        }
        return lab;
    };

    // Breadth-first closure of the zero class under the 2n unit translations.
    std::set<std::vector<unsigned long>> seen;
    std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
    seen.insert(label_of(frontier[0]));
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& x : frontier) {
            for (std::size_t j = 0; j < n; ++j) {
                for (long step : {1L, -1L}) {
                    std::vector<long> y = x;
                    y[j] += step;
                    if (seen.insert(label_of(y)).second) next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    if (seen.size() != big_d)
        throw std::logic_error("oracle enumeration does not match |det|");

    // Element orders: m * x lies in A Z^n exactly when m * label(x) == 0
    // componentwise mod |det|, so ord(x) = lcm_i(|det| / gcd(|det|, label_i)).
    std::map<unsigned long, unsigned long> order_count;
    for (const auto& lab : seen) {
        mpz_class ord = 1;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class g;
            mpz_class li(static_cast<unsigned long>(lab[i]));
            mpz_gcd(g.get_mpz_t(), det_abs.get_mpz_t(), li.get_mpz_t());
            mpz_class part = det_abs / g;
            mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), part.get_mpz_t());
        }
        ++order_count[ord.get_ui()];
    }

    // Reconstruct the p-exponent partition of the invariant factors from the
    // census: log_p of #{x : p^j x = 0} increments by the number of factors
    // with exponent >= j as j grows.
    std::map<mpz_class, std::vector<unsigned>> exps;
    for (const auto& [p, e] : factorize(det_abs)) {
        (void)e;
        unsigned long p_ul = p.get_ui();
        unsigned long prev_cnt = 1;  // #{x : p^0 x = 0} = 1
        std::vector<unsigned> conj;  // conj[j-1] = #factors with exponent >= j
        for (unsigned j = 1;; ++j) {
            mpz_class pj;
            mpz_ui_pow_ui(pj.get_mpz_t(), p_ul, j);
            unsigned long cnt = 0;
            for (const auto& [ord, howmany] : order_count)
                if (pj % ord == 0) cnt += howmany;
            unsigned long ratio = cnt / prev_cnt;
            unsigned layers = 0;
            while (ratio > 1) {
                ratio /= p_ul;
                ++layers;
            }
            conj.push_back(layers);
            if (layers == 0) break;
            prev_cnt = cnt;
        }
        // Transpose the conjugate partition into exponents per factor.
        std::vector<unsigned> lambda;
        for (unsigned idx = 0; idx < (conj.empty() ? 0 : conj[0]); ++idx) {
            unsigned e_i = 0;
            for (unsigned j = 0; j < conj.size(); ++j)
                if (conj[j] > idx) ++e_i;
            lambda.push_back(e_i);
        }
        if (!lambda.empty()) exps[p] = lambda;  // already descending
    }

    std::size_t chain_len = 0;
    for (const auto& [p, list] : exps) chain_len = std::max(chain_len, list.size());
    FGAbelianGroup g;
    g.torsion.assign(chain_len, mpz_class(1));
    for (const auto& [p, list] : exps) {
        for (std::size_t j = 0; j < list.size(); ++j) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), list[j]);
            g.torsion[chain_len - 1 - j] *= pe;
        }
    }
    // Sanity: the torsion orders must multiply back to |det|.
    mpz_class prod = 1;
    for (const auto& d : g.torsion) prod *= d;
    if (prod != det_abs) throw std::logic_error("oracle invariant-factor product mismatch");
    return g;
}

}  // namespace ktorus

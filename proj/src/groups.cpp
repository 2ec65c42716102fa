#include "ktorus/groups.hpp"

#include <stdexcept>
#include <utility>

namespace ktorus {

namespace {

const GroupPresentation& require_same_parent(const SemidirectElement& a,
                                             const SemidirectElement& b) {
    if (!a.parent || a.parent != b.parent) {
        throw std::invalid_argument("semidirect elements belong to different groups");
    }
    return *a.parent;
}

// G^k for signed k, using the cached inverse when k < 0.
ZMatrix action_power(const GroupPresentation& p, const mpz_class& k) {
    if (!k.fits_slong_p()) {
        throw std::overflow_error("shift exponent too large for action power");
    }
    long e = k.get_si();
    const ZMatrix& base = e >= 0 ? p.g : p.g_inv;
    unsigned long mag = e >= 0 ? static_cast<unsigned long>(e)
                               : static_cast<unsigned long>(-(e + 1)) + 1;
    return base.pow(mag);
}

}  // namespace

std::shared_ptr<const GroupPresentation> semidirect_presentation(ZMatrix g) {
    if (!g.is_square() || g.rows() == 0) {
        throw std::invalid_argument("action matrix must be square and nonempty");
    }
    auto p = std::make_shared<GroupPresentation>();
    p->m = g.rows();
    p->g_inv = g.inverse_unimodular();
    p->g = std::move(g);
    return p;
}

SemidirectElement identity_element(std::shared_ptr<const GroupPresentation> p) {
    if (!p) throw std::invalid_argument("null presentation");
    return SemidirectElement{std::vector<mpz_class>(p->m), 0, std::move(p)};
}

SemidirectElement lattice_generator(std::shared_ptr<const GroupPresentation> p,
                                    std::size_t i) {
    if (!p) throw std::invalid_argument("null presentation");
    if (i >= p->m) throw std::out_of_range("lattice generator index out of range");
    SemidirectElement e{std::vector<mpz_class>(p->m), 0, std::move(p)};
    e.v[i] = 1;
    return e;
}

SemidirectElement shift_generator(std::shared_ptr<const GroupPresentation> p) {
    if (!p) throw std::invalid_argument("null presentation");
    return SemidirectElement{std::vector<mpz_class>(p->m), 1, std::move(p)};
}

SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b) {
    const GroupPresentation& p = require_same_parent(a, b);
    std::vector<mpz_class> v = action_power(p, a.k).apply(b.v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += a.v[i];
    return SemidirectElement{std::move(v), a.k + b.k, a.parent};
}

SemidirectElement inverse(const SemidirectElement& a) {
    if (!a.parent) throw std::invalid_argument("null presentation");
    std::vector<mpz_class> v = action_power(*a.parent, -a.k).apply(a.v);
    for (mpz_class& x : v) x = -x;
    return SemidirectElement{std::move(v), -a.k, a.parent};
}

SemidirectElement commutator(const SemidirectElement& a, const SemidirectElement& b) {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

FGAbelianGroup abelianization(const GroupPresentation& p) {
    ZMatrix rel = p.g - ZMatrix::identity(p.m);
    FGAbelianGroup shift_part;
    shift_part.free_rank = 1;
    return direct_sum({cokernel(rel), shift_part});
}

std::shared_ptr<const GroupPresentation> filiform_lattice_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("filiform lattice group needs n >= 1");
    return semidirect_presentation(anzai_matrix(n + 1));
}

std::shared_ptr<const GroupPresentation> furstenberg_lattice_group(
    const FurstenbergExponents& b, std::size_t n) {
    if (n < 2) throw std::invalid_argument("exponent data needs n >= 2");
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        auto it = b.find({i, i + 1});
        if (it == b.end() || it->second == 0) {
            throw std::invalid_argument("superdiagonal exponent missing or zero");
        }
    }
    ZMatrix g = ZMatrix::identity(n + 1);
    g.at(0, 1) = 1;
    for (const auto& [ij, value] : b) {
        auto [i, j] = ij;
        if (i < 1 || i >= j || j > n) {
            throw std::invalid_argument("exponent index out of range");
        }
        g.at(i, j) = value;
    }
    return semidirect_presentation(std::move(g));
}

ZMatrix embedding_exponents(const FurstenbergExponents& b, std::size_t n) {
    if (n < 2) throw std::invalid_argument("exponent data needs n >= 2");
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        auto it = b.find({k, k + 1});
        if (it == b.end() || it->second == 0) {
            throw std::invalid_argument("superdiagonal exponent missing or zero");
        }
    }
    ZMatrix e(n + 1, n + 1);
    e.at(0, 0) = 1;
    e.at(1, 1) = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        // Solve (M - I) c_k = sum_{s<k} b[{s,k}] c_s by shifting the right
        // side up one coordinate; the kernel ambiguity (multiples of e_1) is
        // fixed by taking first coordinate zero.
        std::vector<mpz_class> rhs(n + 1);
        for (std::size_t s = 1; s < k; ++s) {
            auto it = b.find({s, k});
            if (it == b.end()) continue;
            for (std::size_t row = 0; row <= n; ++row) {
                rhs[row] += it->second * e.at(row, s);
            }
        }
        if (rhs[n] != 0) throw std::logic_error("embedding column overflows the lattice");
        for (std::size_t row = n; row >= 1; --row) {
            e.at(row, k) = rhs[row - 1];
        }
    }
    return e;
}

}  // namespace ktorus

#include "ktorus/dynamics.hpp"

#include <stdexcept>

#include "ktorus/exterior.hpp"
#include "ktorus/smith.hpp"

namespace ktorus {

namespace {

std::vector<ThetaExponent> reduce_translation(std::vector<ThetaExponent> t) {
    for (ThetaExponent& e : t) e.rat = reduce_mod1(e.rat);
    return t;
}

// t + A x with rational parts reduced mod 1.
std::vector<ThetaExponent> apply_affine(const AffineMap& m,
                                        const std::vector<ThetaExponent>& x) {
    std::vector<ThetaExponent> out(m.n);
    for (std::size_t i = 0; i < m.n; ++i) {
        mpq_class rat = m.t[i].rat;
        mpq_class irr = m.t[i].irr;
        for (std::size_t j = 0; j < m.n; ++j) {
            rat += m.a.at(i, j) * x[j].rat;
            irr += m.a.at(i, j) * x[j].irr;
        }
        out[i] = ThetaExponent{reduce_mod1(rat), irr};
    }
    return out;
}

std::size_t euler_phi(std::size_t m) {
    std::size_t result = m;
    for (std::size_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

AffineMap make_affine(std::vector<ThetaExponent> t, ZMatrix a) {
    if (!a.is_square() || a.rows() == 0) {
        throw std::invalid_argument("affine map needs a nonempty square matrix");
    }
    if (t.size() != a.rows()) {
        throw std::invalid_argument("translation length must match the matrix order");
    }
    mpz_class d = a.determinant();
    if (d != 1 && d != -1) {
        throw std::invalid_argument("affine map matrix must have determinant +-1");
    }
    return AffineMap{a.rows(), reduce_translation(std::move(t)), std::move(a)};
}

AffineMap anzai_map(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<ThetaExponent> t(n);
    t[0].irr = 1;
    return AffineMap{n, std::move(t), anzai_matrix(n).transpose()};
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    if (a.n != b.n) throw std::invalid_argument("affine maps of different dimensions");
    AffineMap out;
    out.n = a.n;
    out.t = apply_affine(a, b.t);
    out.a = a.a * b.a;
    return out;
}

AffineMap inverse_map(const AffineMap& a) {
    ZMatrix inv = a.a.inverse_unimodular();
    std::vector<ThetaExponent> t(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        mpq_class rat = 0;
        mpq_class irr = 0;
        for (std::size_t j = 0; j < a.n; ++j) {
            rat -= inv.at(i, j) * a.t[j].rat;
            irr -= inv.at(i, j) * a.t[j].irr;
        }
        t[i] = ThetaExponent{reduce_mod1(rat), irr};
    }
    return AffineMap{a.n, std::move(t), std::move(inv)};
}

bool is_identity_map(const AffineMap& a) {
    if (a.a != ZMatrix::identity(a.n)) return false;
    for (const ThetaExponent& e : a.t) {
        if (e.rat != 0 || e.irr != 0) return false;
    }
    return true;
}

std::size_t totient_bound(std::size_t n) {
    // phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2n^2.
    std::size_t best = 1;
    for (std::size_t m = 1; m <= 2 * n * n + 2; ++m) {
        if (euler_phi(m) <= n) best = m;
    }
    return best;
}

HahnReport hahn_conditions(const AffineMap& map) {
    const std::size_t n = map.n;
    const ZMatrix identity = ZMatrix::identity(n);
    const ZMatrix fixed_chars = map.a.transpose() - identity;

    HahnReport report;
    report.c4 = unipotent_degree(map.a).has_value();

    ZMatrix k = kernel_basis(fixed_chars);
    const std::size_t s = k.cols();
    report.c3 = s >= 1;

    if (s == 0) {
        report.c2 = true;
    } else if (s == 1) {
        mpq_class pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += map.t[j].irr * k.at(j, 0);
        report.c2 = pairing != 0;
    } else {
        // A single irrational cannot be rationally independent over a lattice
        // of rank two or more: some nonzero character kills the theta part.
        report.c2 = false;
    }

    report.c1 = true;
    const std::size_t base_rank = n - s;
    const std::size_t bound = totient_bound(n);
    ZMatrix power = map.a;
    for (std::size_t p = 2; p <= bound; ++p) {
        power = power * map.a;
        if ((power - identity).rank() != base_rank) {
            report.c1 = false;
            break;
        }
    }
    return report;
}

std::vector<std::vector<ThetaExponent>> orbit_points(const AffineMap& a, std::size_t m) {
    std::vector<std::vector<ThetaExponent>> points;
    points.reserve(m + 1);
    points.emplace_back(a.n);
    for (std::size_t k = 0; k < m; ++k) {
        points.push_back(apply_affine(a, points.back()));
    }
    return points;
}

AffineMap finite_part_map(const QuotientSpec& spec) {
    spec.validate();
    if (spec.i == 0) {
        throw std::invalid_argument("the faithful case has no finite factor");
    }
    std::vector<ThetaExponent> t;
    t.push_back(spec.lambda.exponent());
    for (std::size_t s = 0; s + 1 < spec.i; ++s) t.push_back(spec.mu[s].exponent());
    return AffineMap{spec.i, std::move(t), anzai_matrix(spec.i).transpose()};
}

}  // namespace ktorus

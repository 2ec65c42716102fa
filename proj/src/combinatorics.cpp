#include "ktorus/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace ktorus {

mpz_class extbinom(const mpz_class& k, long r) {
    if (r < 0) return 0;
    // GMP's binomial with an mpz upper index implements exactly the
    // falling-factorial extension, including negative k.
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

mpz_class extbinom(long k, long r) { return extbinom(mpz_class(k), r); }

mpz_class partition_count(std::size_t n, std::size_t r, long k) {
    if (r == 0) return k == 0 ? 1 : 0;
    if (k <= 0 || r > n) return 0;
    // Minimal possible sum 1 + 2 + ... + r, maximal (n-r+1) + ... + n.
    const long kk = k;
    // dp[s][t]: ways to pick s distinct parts from those seen so far with sum t.
    std::vector<std::vector<mpz_class>> dp(r + 1, std::vector<mpz_class>(kk + 1));
    dp[0][0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
        for (std::size_t s = std::min<std::size_t>(r, part); s >= 1; --s) {
            for (long t = kk; t >= static_cast<long>(part); --t) {
                const mpz_class& prev = dp[s - 1][t - static_cast<long>(part)];
                if (prev != 0) dp[s][t] += prev;
            }
        }
    }
    return dp[r][kk];
}

mpz_class a_nr(std::size_t n, std::size_t r) {
    if (r > n) throw std::invalid_argument("block index out of range");
    const long target = static_cast<long>(r * (n + 1) / 2);
    return partition_count(n, r, target);
}

mpz_class rank_by_partitions(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    mpz_class total = 0;
    for (std::size_t r = 0; r <= n; ++r) total += a_nr(n, r);
    return total;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long exponent) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
}

void LaurentPoly::set(long exponent, const mpz_class& c) {
    if (c == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            auto it = out.terms_.find(e1 + e2);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

mpz_class LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

std::map<std::pair<long, long>, mpz_class> genfun_coeffs(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::map<std::pair<long, long>, mpz_class> acc{{{0, 0}, 1}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::map<std::pair<long, long>, mpz_class> next = acc;
        for (const auto& [rk, c] : acc) {
            auto key = std::make_pair(rk.first + 1, rk.second + static_cast<long>(i));
            next[key] += c;
        }
        acc = std::move(next);
    }
    return acc;
}

mpz_class rank_by_genfun(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    LaurentPoly prod = LaurentPoly::one();
    const long shift = static_cast<long>(n) + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        long e = 2 * static_cast<long>(i) - shift;
        prod = prod * (LaurentPoly::one() + LaurentPoly::monomial(1, e));
    }
    if (n % 2 == 0) prod = prod * (LaurentPoly::one() + LaurentPoly::monomial(1, 1));
    return prod.coeff(0);
}

std::string DecimalApprox::to_string() const {
    mpz_class ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, digits);
    mpz_class ip = scaled / ten_d;
    mpz_class fp = scaled % ten_d;
    std::string frac = fp.get_str();
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    if (digits == 0) return ip.get_str();
    return ip.get_str() + "." + frac;
}

DecimalApprox asymptotic_ratio(std::size_t n, unsigned digits) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    mpz_class an = rank_by_genfun(n);
    // floor(a_n n^{3/2} 2^{-n} 10^d) == isqrt(floor(a_n^2 n^3 10^{2d} / 4^n));
    // flooring inside the square root is safe because isqrt(floor(y)) equals
    // floor(sqrt(y)) for any nonnegative rational y.
    mpz_class num = an * an;
    mpz_class n3;
    mpz_ui_pow_ui(n3.get_mpz_t(), static_cast<unsigned long>(n), 3);
    num *= n3;
    mpz_class ten2d;
    mpz_ui_pow_ui(ten2d.get_mpz_t(), 10, 2UL * digits);
    num *= ten2d;
    mpz_class q = num >> (2 * n);  // divide by 4^n, flooring
    DecimalApprox out;
    out.digits = digits;
    mpz_sqrt(out.scaled.get_mpz_t(), q.get_mpz_t());
    return out;
}

bool check_binom_identity(long m, long k, long q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    mpz_class lhs = extbinom(m - q, k);
    mpz_class rhs = 0;
    // extbinom(q, j) vanishes for j > q, so the sum is finite.
    for (long j = 0; j <= q; ++j) {
        mpz_class term = extbinom(m - j, k - j) * extbinom(q, j);
        if (j % 2 != 0) term = -term;
        rhs += term;
    }
    return lhs == rhs;
}

bool check_delta_identity(long m, long q, long s) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (s < 1 || s > m - 1) throw std::invalid_argument("s must satisfy 1 <= s <= m-1");
    mpz_class sum = 0;
    for (long r = 1; r <= m; ++r) {
        mpz_class term = extbinom(q + m - r - 2, m - r) * extbinom(q, r - s);
        if ((m - r) % 2 != 0) term = -term;
        sum += term;
    }
    return sum == (s == m - 1 ? 1 : 0);
}

}  // namespace ktorus

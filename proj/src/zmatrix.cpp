#include "ktorus/zmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ktorus {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ZMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row in matrix literal");
        std::size_t j = 0;
        for (long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

ZMatrix ZMatrix::operator+(const ZMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in addition");
    ZMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

ZMatrix ZMatrix::operator-(const ZMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    ZMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

ZMatrix ZMatrix::operator*(const ZMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix shape mismatch in multiplication");
    ZMatrix out(rows_, other.cols_);
    mpz_class acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const mpz_class& bkj = other.at(k, j);
                if (bkj == 0) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ZMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

std::vector<mpz_class> ZMatrix::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

mpz_class ZMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<mpz_class> w(entries_);
    auto e = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && e(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign > 0 ? e(n - 1, n - 1) : mpz_class(-e(n - 1, n - 1));
}

std::size_t ZMatrix::rank() const {
    std::vector<mpz_class> w(entries_);
    const std::size_t m = rows_, n = cols_;
    auto e = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && e(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = c; j < n; ++j) std::swap(e(r, j), e(p, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                mpz_class num = e(i, j) * e(r, c) - e(i, c) * e(r, j);
                mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, c) = 0;
        }
        prev = e(r, c);
        ++r;
    }
    return r;
}

ZMatrix ZMatrix::inverse_unimodular() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    // Gauss-Jordan over Q on [A | I], then check the result is integral.
    std::vector<mpq_class> w(n * 2 * n);
    auto e = [&](std::size_t i, std::size_t j) -> mpq_class& { return w[i * 2 * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e(i, j) = at(i, j);
        e(i, n + i) = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && e(p, k) == 0) ++p;
        if (p == n) throw std::invalid_argument("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(e(k, j), e(p, j));
        mpq_class piv = e(k, k);
        for (std::size_t j = 0; j < 2 * n; ++j) e(k, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || e(i, k) == 0) continue;
            mpq_class f = e(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) e(i, j) -= f * e(k, j);
        }
    }
    ZMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class q = e(i, n + j);
            q.canonicalize();
            if (q.get_den() != 1)
                throw std::invalid_argument("matrix has no integral inverse");
            out.at(i, j) = q.get_num();
        }
    }
    return out;
}

ZMatrix ZMatrix::pow(unsigned long k) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    ZMatrix result = identity(rows_);
    ZMatrix base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        base = base * base;
        k >>= 1UL;
    }
    return result;
}

std::string ZMatrix::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

ZMatrix operator*(const mpz_class& c, const ZMatrix& a) {
    ZMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
    return out;
}

}  // namespace ktorus

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ktorus {

// Dense matrix over the integers, row-major, with exact arbitrary-precision
// entries. All arithmetic is exact at any magnitude; there is no floating
// point anywhere in this layer.
class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(std::size_t rows, std::size_t cols);

    static ZMatrix identity(std::size_t n);
    static ZMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const ZMatrix& other) const = default;

    ZMatrix operator+(const ZMatrix& other) const;
    ZMatrix operator-(const ZMatrix& other) const;
    ZMatrix operator*(const ZMatrix& other) const;

    ZMatrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    // Exact determinant by fraction-free (Bareiss) elimination.
    mpz_class determinant() const;

    // Rank over Q (equivalently over Z), by fraction-free row echelon.
    std::size_t rank() const;

    // Inverse of a matrix with determinant +-1; the inverse is again integral.
    // Throws std::invalid_argument otherwise.
    ZMatrix inverse_unimodular() const;

    // Exact non-negative power by repeated squaring.
    ZMatrix pow(unsigned long k) const;

    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

ZMatrix operator*(const mpz_class& c, const ZMatrix& a);

}  // namespace ktorus

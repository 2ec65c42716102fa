#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Strictly increasing index subsets of {1..n} of a fixed size, in
// lexicographic order. This is the wedge-basis ordering used everywhere.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t r);

// r-th exterior power over the lexicographic wedge basis: the (I, J) entry is
// the r x r minor of A on rows I and columns J. wedge_power(A, 0) == [1] and
// wedge_power(A, 1) == A; the construction is multiplicative in A.
ZMatrix wedge_power(const ZMatrix& a, std::size_t r);

// Upper bidiagonal matrix of ones: entry (i, j) is 1 when j is i or i + 1.
// This is the homotopy linearization of the n-dimensional skew-product
// (Anzai) transformation, unipotent of maximal degree.
ZMatrix anzai_matrix(std::size_t n);

// (n+1) x (n+1) matrix with entry (i, j) = extbinom(k, j - i): the k-th power
// (k may be negative) of anzai_matrix(n + 1), in closed form.
ZMatrix binomial_power_matrix(std::size_t n, long k);

// Upper-triangular exponent data b[{i, j}] for 1 <= i < j <= n.
using FurstenbergExponents = std::map<std::pair<std::size_t, std::size_t>, mpz_class>;

// Homotopy-class input for a K-group computation. Carries only the integer
// exponent matrix data; rotation parts do not affect K-theory.
struct LinearizationSpec {
    enum class Kind { anzai, ascending, furstenberg, general };

    Kind kind = Kind::anzai;
    std::size_t n = 1;
    std::vector<mpz_class> ascending_k;  // k[i] != 0, k[i] | k[i+1]
    FurstenbergExponents b;              // b[{i, i+1}] != 0 required
    ZMatrix general;                     // |det| == 1 required

    // Accepts {"kind":"anzai","n":6}, {"kind":"ascending","k":[1,2,4]},
    // {"kind":"furstenberg","n":4,"b":{"1,2":1,...}} (n optional, inferred),
    // {"kind":"general","matrix":{...}} or a bare matrix object.
    static LinearizationSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    void validate() const;
};

// The integer matrix a LinearizationSpec denotes: the wedge/kernel machinery
// consumes this. Furstenberg kinds produce upper-triangular unit-diagonal
// matrices.
ZMatrix linearization(const LinearizationSpec& spec);

// Least k >= 1 with (A - I)^k == 0, or nullopt when A is not unipotent.
// Maximal degree means the result equals the matrix dimension.
std::optional<std::size_t> unipotent_degree(const ZMatrix& a);

}  // namespace ktorus

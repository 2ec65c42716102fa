#pragma once

#include <vector>

#include "ktorus/abelian.hpp"

namespace ktorus {

// Reference K-group values for the skew-product algebras in dimensions
// 1..11, stored as published: a free rank plus a list of cyclic orders.
// `k0` / `k1` hold the canonicalized forms used for comparisons.
struct GoldenRow {
    std::size_t n;
    unsigned long rank;
    std::vector<long> k0_orders;  // cyclic torsion orders as printed
    std::vector<long> k1_orders;
    FGAbelianGroup k0;
    FGAbelianGroup k1;
};

// Rows n = 1..11, index n - 1.
const std::vector<GoldenRow>& golden_table();

}  // namespace ktorus

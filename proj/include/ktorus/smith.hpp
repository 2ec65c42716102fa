#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Thrown when a normal-form computation exceeds its operation budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget);
    std::uint64_t budget;
};

struct SnfOptions {
    // Track the unimodular transforms U and V (U*A*V == S). Off by default:
    // kernel/cokernel invariants need only the diagonal.
    bool want_transforms = false;
    // Elementary-operation budget; 0 means unlimited.
    std::uint64_t budget = 0;
};

// Smith normal form U*A*V == S: U, V unimodular, S diagonal with
// d[0] | d[1] | ... , all d[i] >= 0, zeros trailing.
struct SmithForm {
    ZMatrix u;  // rows x rows, empty unless requested
    ZMatrix s;  // same shape as the input
    ZMatrix v;  // cols x cols, empty unless requested
    std::vector<mpz_class> diagonal;  // length min(rows, cols)

    std::size_t nonzero_count() const;
};

SmithForm snf(const ZMatrix& a, const SnfOptions& opts = {});

// Basis of the integer kernel {x : A x = 0}, one basis vector per column.
// Subgroups of Z^n are free, so this is a full description of the kernel.
ZMatrix kernel_basis(const ZMatrix& a);

}  // namespace ktorus

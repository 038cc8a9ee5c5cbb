#ifndef PI2_INTMAT_HPP_
#define PI2_INTMAT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace pi2 {

// Dense integer matrices, row-major.  All arithmetic is exact; operations
// throw std::overflow_error instead of wrapping.
using IntMat = std::vector<std::vector<int64_t>>;

// Z-basis of the integer kernel {x : M x = 0}, one kernel vector per entry.
// Computed by a column Hermite reduction with a tracked unimodular transform,
// so the result generates the full kernel lattice.
std::vector<std::vector<int64_t>> integer_kernel_basis(IntMat M);

// Integer solution y of A y = b, when one exists.
std::optional<std::vector<int64_t>> lattice_solve(IntMat A, std::vector<int64_t> const& b);

}  // namespace pi2

#endif  // PI2_INTMAT_HPP_

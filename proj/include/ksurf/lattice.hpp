#ifndef KSURF_LATTICE_HPP
#define KSURF_LATTICE_HPP

#include <cstdint>
#include <vector>

namespace ksurf
{

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Row-style Hermite normal form of the lattice spanned by the rows: upper
// echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped, so the result is the unique HNF basis.
// Throws std::overflow_error if an intermediate leaves the int64 range.
IntMatrix hermite_normal_form(IntMatrix rows);

// Basis of {x in Z^N : A x = 0} for an m x N matrix A, returned in Hermite
// normal form. Every row of A must have length N.
IntMatrix integer_kernel(const IntMatrix &a, std::size_t n_cols);

} // namespace ksurf

#endif

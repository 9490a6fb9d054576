#ifndef CYC_INTLIN_HPP
#define CYC_INTLIN_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cyc {

using zvec = std::vector<mpz_class>;
using zmat = std::vector<zvec>;
using qvec = std::vector<mpq_class>;
using qmat = std::vector<qvec>;

/// Rank over the rationals.
int rational_rank(const zmat& rows);

/// Basis of the integer kernel lattice {x : a x = 0}, one vector per row.
/// The kernel of an integer matrix is saturated, so basis vectors come out
/// primitive; signs are normalized (first nonzero entry positive).
zmat integer_kernel_basis(const zmat& a);

/// Canonical row-style Hermite normal form (positive pivots, entries above a
/// pivot reduced into [0, pivot), zero rows dropped). Two row sets span the
/// same lattice iff their HNFs are equal.
zmat hermite_normal_form(zmat rows);

/// One rational solution of a x = b, or nullopt when inconsistent.
/// Free variables are set to zero, so the result is deterministic.
std::optional<qvec> solve_rational(qmat a, qvec b);

/// Basis of the right kernel over Q.
qmat rational_kernel_basis(qmat a);

}  // namespace cyc

#endif

#ifndef CYC_BINOMIAL_HPP
#define CYC_BINOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyc/caps.hpp"

namespace cyc {

/// Exponent vector of a monomial in the cycle variables.
using expo = std::vector<std::uint16_t>;

int degree_of(const expo& e);

/// Graded reverse-lexicographic order with a configurable cheapest-variable
/// sequence. Saturation with respect to x_i uses the order with x_i cheapest.
struct term_order {
  std::vector<int> cheap_to_pricey;  // variable indices, cheapest first

  static term_order grevlex(int n);
  static term_order grevlex_cheapest(int n, int cheapest_var);

  /// -1, 0, 1 for u < v, u == v, u > v.
  int compare(const expo& u, const expo& v) const;
  bool less(const expo& u, const expo& v) const { return compare(u, v) < 0; }
};

/// Pure difference of two monomials x^lead - x^trail with lead > trail in the
/// order it was oriented under. The two monomials may share support while an
/// ideal is being saturated; generators of the final toric ideal are reduced.
struct binomial {
  expo lead, trail;

  int degree() const { return degree_of(lead); }
  bool operator==(const binomial& other) const = default;
};

/// Difference vector lead - trail.
std::vector<long> direction(const binomial& b);

/// Binomial x^{w+} - x^{w-} of an integer vector; nullopt for w = 0.
std::optional<binomial> binomial_from_vector(const std::vector<long>& w, const term_order& ord);

/// Canonical orientation under ord; false when the two sides are equal.
bool orient(binomial& b, const term_order& ord);

/// Normal form of a monomial: rewrite by leading terms until irreducible.
expo normal_form_monomial(expo m, const std::vector<binomial>& basis);

/// Normal form of a binomial; nullopt when it reduces to zero.
std::optional<binomial> normal_form(const binomial& b, const std::vector<binomial>& basis,
                                    const term_order& ord);

/// Buchberger with the product criterion and degree-selection strategy,
/// followed by interreduction; returns the reduced Groebner basis.
std::vector<binomial> buchberger(std::vector<binomial> gens, const term_order& ord, const caps& c);

/// Sorts a generating set canonically (by degree, then encoding).
void sort_canonically(std::vector<binomial>& gens, const term_order& ord);

/// (J : x_i^inf) for a homogeneous binomial ideal: reduced grevlex basis with
/// x_i cheapest, each element divided by its largest x_i power.
std::vector<binomial> saturate_variable(std::vector<binomial> gens, int var, int n, const caps& c);

/// J : (x_1 ... x_n)^inf by one pass of single-variable saturations; repeats
/// the pass until the canonical reduced basis is stable.
std::vector<binomial> saturate_all_variables(std::vector<binomial> gens, int n, const caps& c);

}  // namespace cyc

#endif

#ifndef CYC_TORIC_HPP
#define CYC_TORIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc/binomial.hpp"
#include "cyc/intlin.hpp"
#include "cyc/matroid.hpp"
#include "cyc/minors.hpp"

namespace cyc {

enum class markov_method { saturation, fiber };

const char* markov_method_name(markov_method m);

/// Degree data of a minimal homogeneous generating set of a cycle ideal.
/// mu is nullopt for the zero ideal (deg 0 = -infinity).
struct generator_report {
  bool zero_ideal = false;
  std::optional<int> mu;
  std::map<int, int> degree_histogram;
  int height = 0;
  int num_cycles = 0;
  int d = 0;
  markov_method method = markov_method::saturation;
  bool degree_cap_hit = false;
};

/// The exponent matrix of the monomial map x_C -> y^C z: one row per ground
/// element plus a final all-ones row, one column per cycle.
zmat cycle_matrix(const cycle_set& cs);

/// Basis of the integer kernel of cycle_matrix; its rank equals
/// |Cyc| - d - 1, the height of the cycle ideal.
zmat lattice_kernel(const cycle_set& cs);

/// A finite binomial generating set of the cycle ideal.
///  - saturation: lattice-basis binomials saturated variable by variable.
///  - fiber: degree-by-degree fiber decompositions; emits one connecting
///    binomial per extra fiber component. Runs to degree_cap, then certifies
///    completeness (lattice span + saturation fixpoint); *cap_hit reports an
///    uncertified run.
std::vector<binomial> markov_basis(const cycle_set& cs, markov_method method, int degree_cap,
                                   const caps& c = {}, bool* cap_hit = nullptr);

struct minimalization {
  std::vector<binomial> kept;
  std::map<int, int> degree_histogram;
  std::optional<int> mu;
};

/// Greedy degree-ascending minimalization; the histogram is order-independent
/// by graded Nakayama even though the kept set is not.
minimalization minimal_generators(std::vector<binomial> gens, int num_variables, const caps& c = {});

/// True iff no degree-1 binomial appears (cycle ideals never have any).
bool verify_no_linear_forms(const std::vector<binomial>& gens);

/// d(M) = |Cyc(M)| - 1, the zero-ideal criterion.
bool is_zero_ideal(const matroid& m, const caps& c = {});

/// Full report for an explicit cycle set (d = affine dimension of the
/// vectors, which is d(M) when the set came from a matroid).
generator_report cycle_ideal_report(const cycle_set& cs, markov_method method, int degree_cap,
                                    const caps& c = {});

/// cycles -> markov_basis -> minimal_generators, with the matroid-side d(M)
/// cross-checked against the affine dimension.
generator_report mu_report(const matroid& m, markov_method method = markov_method::saturation,
                           int degree_cap = 8, const caps& c = {});

struct mu_chain_entry {
  std::string description;
  generator_report report;
  std::string relation;  // "start", "equal (series contraction)", ...
};

/// Computes mu along a step chain and enforces the guaranteed relations:
/// non-increase for every g-series step, equality for series and coloop
/// contractions. A violation is an implementation bug, reported as
/// property_violation.
std::vector<mu_chain_entry> mu_comparisons(const matroid& m, const std::vector<minor_step>& steps,
                                           markov_method method = markov_method::saturation,
                                           int degree_cap = 8, const caps& c = {});

}  // namespace cyc

#endif

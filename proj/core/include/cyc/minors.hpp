#ifndef CYC_MINORS_HPP
#define CYC_MINORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyc/matroid.hpp"

namespace cyc {

enum class step_kind { del, contract, series_contract, coloop_contract, binary_retract };

const char* step_kind_name(step_kind k);

/// One step of a minor sequence, recorded by labels so it replays across
/// shrinking ground sets. For binary_retract, `elems` is E' in pairing order
/// and `paired` the matching E.
struct minor_step {
  step_kind kind;
  std::vector<std::string> elems;
  std::vector<std::string> paired;
};

struct minor_witness {
  std::vector<minor_step> steps;
  /// Label bijection from the replayed result onto the target.
  std::vector<std::pair<std::string, std::string>> final_iso;
};

/// M \ X. Throws free_result when no circuit avoids X.
matroid delete_elements(const matroid& m, bits x, const caps& c = {});

/// M / T; loops inside T are deleted, the usual convention.
matroid contract_elements(const matroid& m, bits t, const caps& c = {});

/// Checks both duality identities M*/T = (M\T)* and M*\T = (M/T)* on circuit
/// sets; exposed for the verification suite.
bool duality_identities_check(const matroid& m, bits t, const caps& c = {});

/// Elements contained in some 2-cocircuit.
bits series_contraction_candidates(const matroid& m);

enum class retract_failure { none, not_a_circuit, pairing_fails };

struct retract_check {
  bool ok = false;
  retract_failure failure = retract_failure::none;
  std::string detail;
};

/// Binary matroidal retract test: E' must be a circuit, and every circuit's
/// trace on E' must match its trace on E under the index pairing e_i <-> e'_i,
/// directly or complemented. The condition is evaluated in its symmetric
/// two-implication form, which is the reading under which the Fano example
/// passes.
retract_check check_binary_matroidal_retract(const binary_matroid& m, const std::vector<int>& e_set,
                                             const std::vector<int>& eprime, const caps& c = {});

struct retract_triple {
  std::vector<int> e_set;   // E, in pairing order
  std::vector<int> eprime;  // E', in pairing order (a circuit)
};

/// All (E, E', pairing) triples passing the retract test.
std::vector<retract_triple> enumerate_binary_matroidal_retracts(const binary_matroid& m,
                                                                const caps& c = {});

enum class minor_kind { general, series, g_series };

/// Breadth-first search over g-series steps; returns a replayable witness when
/// some reachable matroid is isomorphic to the target.
std::optional<minor_witness> g_series_minor_search(const binary_matroid& m, const matroid& target,
                                                   const caps& c = {});

/// Witnessing search for the requested minor kind.
std::optional<minor_witness> find_minor(const matroid& m, const matroid& target, minor_kind kind,
                                        const caps& c = {});

/// True iff no minor of the requested kind is isomorphic to the target.
bool minor_free(const matroid& m, const matroid& target, minor_kind kind, const caps& c = {});

/// Replays a witness from m, validating each step's precondition at the time
/// of application; returns the final matroid.
matroid replay_witness(const matroid& m, const minor_witness& w, const caps& c = {});

}  // namespace cyc

#endif

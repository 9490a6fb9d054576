#ifndef CYC_CAPS_HPP
#define CYC_CAPS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyc {

/// Everything that can go wrong carries one of these codes so the CLI can
/// map failures to exit codes and machine-readable error objects.
enum class errc {
  parse_error,
  free_matroid,        // construction would yield a matroid with no circuit
  free_result,         // an operation produced a free matroid
  axiom_violation,
  empty_circuit_list,
  cap_exceeded,
  not_applicable,
  disconnected,
  not_two_connected,
  not_a_neighborhood_minor,
  property_violation,  // a paper-guaranteed relation failed: implementation bug
  invalid_argument,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

const char* errc_name(errc code);

/// Enumeration budgets. Operations that would blow past a budget throw
/// cap_exceeded instead of exhausting memory; the defaults are sized for
/// desk-scale instances. CYC_MAX_CELLS (CLI) scales max_cycles.
struct caps {
  std::uint64_t max_cycles = std::uint64_t(1) << 20;  // |Cyc(M)| bound, nullity <= 20
  int max_nullity = 20;
  int dual_ground = 16;           // basis enumeration bound for circuit-presented duals
  int iso_ground = 24;            // are_isomorphic bound
  std::uint64_t iso_nodes = 4'000'000;
  std::uint64_t search_frontier = 100'000;   // minor searches: visited states
  int retract_circuit_size = 6;   // |E'| bound when enumerating binary retracts
  std::uint64_t retract_budget = 2'000'000;  // candidate (E, E', pairing) triples
  std::uint64_t affine_budget = 2'000'000;   // candidate vertex assignments
  std::uint64_t fiber_monomials = 8'000'000; // monomials enumerated per mu() run
  int max_cycle_variables = 64;   // ideal computations refuse larger cycle sets
};

}  // namespace cyc

#endif

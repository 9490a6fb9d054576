#ifndef CYC_MATROID_HPP
#define CYC_MATROID_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyc/caps.hpp"
#include "cyc/gf2.hpp"

namespace cyc {

/// Ordered, pairwise-distinct element labels. Matroids on more than 64
/// elements are out of scope; the empty ground set is rejected.
class ground_set {
public:
  ground_set() = default;
  explicit ground_set(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  bool operator==(const ground_set& other) const { return labels_ == other.labels_; }

  /// 1-based numeric labels "1".."n".
  static ground_set numbered(int n);

private:
  std::vector<std::string> labels_;
};

/// Binary matroid given by a GF(2) representation matrix, one column per
/// ground element. Non-free by construction: the kernel is nontrivial.
class binary_matroid {
public:
  binary_matroid(ground_set ground, gf2_matrix matrix);

  const ground_set& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const gf2_matrix& matrix() const { return matrix_; }
  const gf2_rref_result& rref() const { return rref_; }
  int rank() const { return rref_.rank; }
  int nullity() const { return size() - rank(); }

private:
  ground_set ground_;
  gf2_matrix matrix_;
  gf2_rref_result rref_;
};

/// Matroid given by its circuit antichain; the general-matroid fallback
/// (only needed for non-binary examples such as uniform matroids).
class circuit_matroid {
public:
  /// Validates the antichain and the circuit-elimination axiom.
  circuit_matroid(ground_set ground, std::vector<bits> circuits);

  const ground_set& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const std::vector<bits>& circuits() const { return circuits_; }
  int rank() const { return rank_; }

private:
  ground_set ground_;
  std::vector<bits> circuits_;  // canonical order
  int rank_ = 0;
};

class matroid;

/// The set Cyc(M) of all cycles (disjoint unions of circuits, including the
/// empty one) as characteristic bit-vectors in canonical order.
struct cycle_set {
  ground_set ground;
  std::vector<bits> cycles;  // canonical order; cycles.front() == 0

  int count() const { return static_cast<int>(cycles.size()); }
};

/// Value-semantic wrapper over the two representations.
class matroid {
public:
  matroid(binary_matroid m) : impl_(std::move(m)) {}
  matroid(circuit_matroid m) : impl_(std::move(m)) {}

  bool is_binary_presented() const { return std::holds_alternative<binary_matroid>(impl_); }
  const binary_matroid& as_binary() const { return std::get<binary_matroid>(impl_); }
  const circuit_matroid& as_circuits() const { return std::get<circuit_matroid>(impl_); }

  const ground_set& ground() const;
  int size() const { return ground().size(); }
  int rank() const;

private:
  std::variant<binary_matroid, circuit_matroid> impl_;
};

// -- construction ----------------------------------------------------------

/// Vector matroid of a GF(2) matrix. Throws free_matroid when the kernel is
/// trivial: free matroids have no circuits and are excluded throughout.
binary_matroid from_gf2_matrix(gf2_matrix matrix, ground_set labels);

/// Matroid from an explicit circuit list; validates the axioms.
circuit_matroid from_circuits(std::vector<bits> circuits, ground_set ground);

// -- basic queries (section 2 of the underlying theory) ---------------------

/// Inclusion-minimal nonempty cycles, canonical order.
std::vector<bits> circuits(const matroid& m, const caps& c = {});

/// All cycles including the empty one.
cycle_set cycles(const matroid& m, const caps& c = {});

/// Dual matroid on the same ground set, labels in the same order.
matroid dual(const matroid& m, const caps& c = {});

bits loops(const matroid& m);
bits coloops(const matroid& m);

/// Rank of a subset of the ground set.
int subset_rank(const matroid& m, bits subset);

/// Whether {e, f} is a cocircuit, i.e. e and f are coparallel (in series).
bool is_two_cocircuit(const matroid& m, int e, int f);

/// Partition of the non-coloop elements into series classes.
std::vector<bits> coparallel_classes(const matroid& m);
/// d(M) := number of coparallel classes; equals dim P_Cyc(M).
int coparallel_count(const matroid& m);

/// Parallel classes (non-loop elements pairwise in 2-circuits).
std::vector<bits> parallel_classes(const matroid& m, const caps& c = {});

/// Every pair of distinct elements lies in a common circuit.
bool is_connected(const matroid& m, const caps& c = {});

/// Direct sum; clashing labels in m2 get the suffix "#2".
matroid direct_sum(const matroid& m1, const matroid& m2, const caps& c = {});

/// Binarity test on a circuit presentation: every symmetric difference of two
/// distinct circuits must decompose into disjoint circuits.
bool is_binary(const circuit_matroid& m);

/// Ground-set bijection carrying circuits onto circuits, or nullopt.
/// perm[i] = image in n of element i of m. Deterministic first witness.
std::optional<std::vector<int>> are_isomorphic(const matroid& m, const matroid& n,
                                               const caps& c = {});

/// Circuit presentation of any matroid (enumerates circuits for binary ones).
circuit_matroid circuit_presentation(const matroid& m, const caps& c = {});

/// Inclusion-minimal members of a family of sets, canonical order.
std::vector<bits> inclusion_minimal(std::vector<bits> sets);

}  // namespace cyc

#endif

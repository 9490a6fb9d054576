#include "cyc/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace cyc {

// -- ground_set --------------------------------------------------------------

ground_set::ground_set(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(errc::invalid_argument, "ground set must be non-empty");
  if (labels_.size() > 64) fail(errc::invalid_argument, "ground sets above 64 elements are unsupported");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) fail(errc::invalid_argument, "duplicate ground label: " + l);
  }
}

std::optional<int> ground_set::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

ground_set ground_set::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return ground_set(std::move(labels));
}

// -- binary_matroid -----------------------------------------------------------

binary_matroid::binary_matroid(ground_set ground, gf2_matrix matrix)
    : ground_(std::move(ground)), matrix_(std::move(matrix)) {
  if (matrix_.cols != ground_.size())
    fail(errc::invalid_argument, "matrix column count must equal ground size");
  rref_ = gf2_rref(matrix_);
  if (rref_.rank >= matrix_.cols)
    fail(errc::free_matroid, "matrix has trivial kernel: free matroids are excluded");
}

binary_matroid from_gf2_matrix(gf2_matrix matrix, ground_set labels) {
  if (matrix.cols == 0) fail(errc::invalid_argument, "matrix must have at least one column");
  return binary_matroid(std::move(labels), std::move(matrix));
}

// -- circuit_matroid ----------------------------------------------------------

namespace {

std::string set_to_string(bits s, const ground_set& g) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

bool independent_in(const std::vector<bits>& circuits, bits x) {
  for (bits c : circuits) {
    if ((c & x) == c) return false;
  }
  return true;
}

int greedy_rank(const std::vector<bits>& circuits, bits subset, int n) {
  bits indep = 0;
  int rank = 0;
  for (int e = 0; e < n; ++e) {
    if (!contains(subset, e)) continue;
    bits candidate = indep | (bits(1) << e);
    if (independent_in(circuits, candidate)) {
      indep = candidate;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

circuit_matroid::circuit_matroid(ground_set ground, std::vector<bits> circuits)
    : ground_(std::move(ground)) {
  const bits mask = full_mask(ground_.size());
  std::sort(circuits.begin(), circuits.end(), set_less);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  if (circuits.empty())
    fail(errc::empty_circuit_list, "no circuits given: free matroids are excluded");
  for (bits c : circuits) {
    if (c == 0) fail(errc::axiom_violation, "the empty set cannot be a circuit");
    if ((c & mask) != c) fail(errc::axiom_violation, "circuit uses elements outside the ground set");
  }
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if ((circuits[i] & circuits[j]) == circuits[i])
        fail(errc::axiom_violation, "not an antichain: " + set_to_string(circuits[i], ground_) +
                                        " is contained in " + set_to_string(circuits[j], ground_));
    }
  }
  // Circuit elimination: for distinct circuits and e in their intersection,
  // some circuit lies inside the union minus e.
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = i + 1; j < circuits.size(); ++j) {
      bits common = circuits[i] & circuits[j];
      bits join = circuits[i] | circuits[j];
      for (bits rest = common; rest;) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        bits region = join & ~(bits(1) << e);
        bool found = false;
        for (bits c : circuits) {
          if ((c & region) == c) {
            found = true;
            break;
          }
        }
        if (!found)
          fail(errc::axiom_violation,
               "circuit elimination fails for " + set_to_string(circuits[i], ground_) + " and " +
                   set_to_string(circuits[j], ground_) + " at " + ground_.label(e));
      }
    }
  }
  circuits_ = std::move(circuits);
  rank_ = greedy_rank(circuits_, mask, ground_.size());
}

circuit_matroid from_circuits(std::vector<bits> circuits, ground_set ground) {
  return circuit_matroid(std::move(ground), std::move(circuits));
}

// -- matroid wrapper ----------------------------------------------------------

const ground_set& matroid::ground() const {
  if (is_binary_presented()) return as_binary().ground();
  return as_circuits().ground();
}

int matroid::rank() const {
  if (is_binary_presented()) return as_binary().rank();
  return as_circuits().rank();
}

// -- cycles and circuits --------------------------------------------------------

namespace {

/// All nonzero members of the GF(2) cycle space, by Gray-code enumeration.
std::vector<bits> kernel_supports(const binary_matroid& m, const caps& c) {
  std::vector<bits> basis = gf2_kernel_basis(m.matrix());
  int k = static_cast<int>(basis.size());
  if (k > c.max_nullity || (bits(1) << k) > c.max_cycles)
    fail(errc::cap_exceeded, "cycle space too large: nullity " + std::to_string(k));
  std::vector<bits> out;
  out.reserve((size_t(1) << k) - 1);
  bits v = 0;
  for (bits i = 1; i < (bits(1) << k); ++i) {
    v ^= basis[lowest_bit(i)];
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<bits> inclusion_minimal(std::vector<bits> sets) {
  std::sort(sets.begin(), sets.end(), set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<bits> accepted;
  for (bits s : sets) {
    bool minimal = true;
    for (bits c : accepted) {
      if ((c & s) == c) {
        minimal = false;
        break;
      }
    }
    if (minimal) accepted.push_back(s);
  }
  return accepted;
}

std::vector<bits> circuits(const matroid& m, const caps& c) {
  if (m.is_binary_presented()) return inclusion_minimal(kernel_supports(m.as_binary(), c));
  return m.as_circuits().circuits();
}

cycle_set cycles(const matroid& m, const caps& c) {
  cycle_set out;
  out.ground = m.ground();
  if (m.is_binary_presented()) {
    out.cycles = kernel_supports(m.as_binary(), c);
    out.cycles.push_back(0);
    std::sort(out.cycles.begin(), out.cycles.end(), set_less);
    return out;
  }
  // Disjoint unions of circuit subfamilies.
  const auto& circs = m.as_circuits().circuits();
  std::unordered_set<bits> seen;
  seen.insert(0);
  std::vector<std::pair<size_t, bits>> stack;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [start, current] = stack.back();
    stack.pop_back();
    for (size_t j = start; j < circs.size(); ++j) {
      if (circs[j] & current) continue;
      bits next = current | circs[j];
      if (seen.insert(next).second) {
        if (seen.size() > c.max_cycles) fail(errc::cap_exceeded, "cycle enumeration cap exceeded");
      }
      stack.emplace_back(j + 1, next);
    }
  }
  out.cycles.assign(seen.begin(), seen.end());
  std::sort(out.cycles.begin(), out.cycles.end(), set_less);
  return out;
}

// -- rank oracle ---------------------------------------------------------------

int subset_rank(const matroid& m, bits subset) {
  if (m.is_binary_presented()) return gf2_rank_submatrix(m.as_binary().matrix(), subset);
  return greedy_rank(m.as_circuits().circuits(), subset, m.size());
}

// -- duality -------------------------------------------------------------------

namespace {

matroid dual_binary(const binary_matroid& m) {
  if (m.rank() == 0)
    fail(errc::free_result, "dual of an all-loop matroid is free");
  std::vector<bits> basis = gf2_kernel_basis(m.matrix());
  gf2_matrix b;
  b.rows = static_cast<int>(basis.size());
  b.cols = m.size();
  b.row = std::move(basis);
  return matroid(binary_matroid(m.ground(), std::move(b)));
}

matroid dual_circuits(const circuit_matroid& m, const caps& c) {
  const int n = m.size();
  if (n > c.dual_ground)
    fail(errc::cap_exceeded, "dual of a circuit-presented matroid is capped at ground size " +
                                 std::to_string(c.dual_ground));
  const int full_rank = m.rank();
  if (full_rank == 0) fail(errc::free_result, "dual of an all-loop matroid is free");
  const bits mask = full_mask(n);
  // Cocircuits: minimal sets X with rank(E - X) < rank(E). Enumerate subsets
  // in canonical order and keep the ones with no kept subset.
  std::vector<bits> subsets;
  subsets.reserve(bits(1) << n);
  for (bits x = 1; x <= mask; ++x) subsets.push_back(x);
  std::sort(subsets.begin(), subsets.end(), set_less);
  std::vector<bits> cocircuits;
  for (bits x : subsets) {
    bool has_kept_subset = false;
    for (bits kept : cocircuits) {
      if ((kept & x) == kept) {
        has_kept_subset = true;
        break;
      }
    }
    if (has_kept_subset) continue;
    if (greedy_rank(m.circuits(), mask & ~x, n) < full_rank) cocircuits.push_back(x);
  }
  return matroid(circuit_matroid(m.ground(), std::move(cocircuits)));
}

}  // namespace

matroid dual(const matroid& m, const caps& c) {
  if (m.is_binary_presented()) return dual_binary(m.as_binary());
  return dual_circuits(m.as_circuits(), c);
}

// -- loops, coloops, series classes ---------------------------------------------

bits loops(const matroid& m) {
  bits out = 0;
  if (m.is_binary_presented()) {
    const auto& a = m.as_binary().matrix();
    for (int e = 0; e < a.cols; ++e) {
      bool zero = true;
      for (int r = 0; r < a.rows && zero; ++r) zero = !a.get(r, e);
      if (zero) out |= bits(1) << e;
    }
    return out;
  }
  for (bits c : m.as_circuits().circuits()) {
    if (popcount(c) == 1) out |= c;
  }
  return out;
}

bits coloops(const matroid& m) {
  // e is a coloop iff it lies in no circuit: rank drops when e is removed.
  bits out = 0;
  const int n = m.size();
  const int full_rank = subset_rank(m, full_mask(n));
  for (int e = 0; e < n; ++e) {
    if (subset_rank(m, full_mask(n) & ~(bits(1) << e)) < full_rank) out |= bits(1) << e;
  }
  return out;
}

bool is_two_cocircuit(const matroid& m, int e, int f) {
  if (e == f) return false;
  const int n = m.size();
  const bits mask = full_mask(n);
  const int full_rank = subset_rank(m, mask);
  bits ef = (bits(1) << e) | (bits(1) << f);
  if (subset_rank(m, mask & ~ef) >= full_rank) return false;
  // Minimality: neither element alone may be a coloop.
  if (subset_rank(m, mask & ~(bits(1) << e)) < full_rank) return false;
  if (subset_rank(m, mask & ~(bits(1) << f)) < full_rank) return false;
  return true;
}

std::vector<bits> coparallel_classes(const matroid& m) {
  const int n = m.size();
  const bits cl = coloops(m);
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < n; ++e) {
    if (contains(cl, e)) continue;
    for (int f = e + 1; f < n; ++f) {
      if (contains(cl, f)) continue;
      if (is_two_cocircuit(m, e, f)) parent[find(e)] = find(f);
    }
  }
  std::map<int, bits> groups;
  for (int e = 0; e < n; ++e) {
    if (contains(cl, e)) continue;
    groups[find(e)] |= bits(1) << e;
  }
  std::vector<bits> out;
  for (auto& [root, set] : groups) out.push_back(set);
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

int coparallel_count(const matroid& m) { return static_cast<int>(coparallel_classes(m).size()); }

std::vector<bits> parallel_classes(const matroid& m, const caps& c) {
  const int n = m.size();
  const bits lp = loops(m);
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (m.is_binary_presented()) {
    const auto& a = m.as_binary().matrix();
    auto column = [&](int e) {
      bits col = 0;
      for (int r = 0; r < a.rows; ++r)
        if (a.get(r, e)) col |= bits(1) << r;
      return col;
    };
    for (int e = 0; e < n; ++e) {
      if (contains(lp, e)) continue;
      for (int f = e + 1; f < n; ++f) {
        if (contains(lp, f)) continue;
        if (column(e) == column(f)) parent[find(e)] = find(f);
      }
    }
  } else {
    for (bits circ : circuits(m, c)) {
      if (popcount(circ) != 2) continue;
      int e = lowest_bit(circ);
      int f = lowest_bit(circ & (circ - 1));
      parent[find(e)] = find(f);
    }
  }
  std::map<int, bits> groups;
  for (int e = 0; e < n; ++e) {
    if (contains(lp, e)) continue;
    groups[find(e)] |= bits(1) << e;
  }
  std::vector<bits> out;
  for (auto& [root, set] : groups) out.push_back(set);
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

// -- connectivity ---------------------------------------------------------------

bool is_connected(const matroid& m, const caps& c) {
  const int n = m.size();
  std::vector<bits> covered(n, 0);
  for (bits circ : circuits(m, c)) {
    for (bits rest = circ; rest;) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      covered[e] |= circ;
    }
  }
  const bits mask = full_mask(n);
  for (int e = 0; e < n; ++e) {
    if (covered[e] != mask) return false;
  }
  return true;
}

// -- direct sum -------------------------------------------------------------------

matroid direct_sum(const matroid& m1, const matroid& m2, const caps& c) {
  const int n1 = m1.size(), n2 = m2.size();
  if (n1 + n2 > 64) fail(errc::invalid_argument, "direct sum exceeds 64 elements");
  std::vector<std::string> labels = m1.ground().labels();
  for (const auto& l : m2.ground().labels()) {
    std::string candidate = l;
    if (m1.ground().index_of(candidate)) candidate = l + "#2";
    labels.push_back(candidate);
  }
  ground_set ground(labels);

  if (m1.is_binary_presented() && m2.is_binary_presented()) {
    const auto& a = m1.as_binary().matrix();
    const auto& b = m2.as_binary().matrix();
    gf2_matrix block;
    block.rows = a.rows + b.rows;
    block.cols = n1 + n2;
    block.row.assign(block.rows, 0);
    for (int r = 0; r < a.rows; ++r) block.row[r] = a.row[r];
    for (int r = 0; r < b.rows; ++r) block.row[a.rows + r] = b.row[r] << n1;
    return matroid(binary_matroid(std::move(ground), std::move(block)));
  }
  std::vector<bits> circs = circuits(m1, c);
  for (bits circ : circuits(m2, c)) circs.push_back(circ << n1);
  return matroid(circuit_matroid(std::move(ground), std::move(circs)));
}

// -- binarity test -----------------------------------------------------------------

namespace {

bool decomposes_into_disjoint_circuits(bits x, const std::vector<bits>& circs,
                                       std::unordered_map<bits, bool>& memo) {
  if (x == 0) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  bool ok = false;
  const bits lowest = bits(1) << lowest_bit(x);
  for (bits c : circs) {
    if (!(c & lowest)) continue;
    if ((c & x) != c) continue;
    if (decomposes_into_disjoint_circuits(x & ~c, circs, memo)) {
      ok = true;
      break;
    }
  }
  memo[x] = ok;
  return ok;
}

}  // namespace

bool is_binary(const circuit_matroid& m) {
  const auto& circs = m.circuits();
  std::unordered_map<bits, bool> memo;
  for (size_t i = 0; i < circs.size(); ++i) {
    for (size_t j = i + 1; j < circs.size(); ++j) {
      if (!decomposes_into_disjoint_circuits(circs[i] ^ circs[j], circs, memo)) return false;
    }
  }
  return true;
}

// -- isomorphism --------------------------------------------------------------------

namespace {

struct iso_context {
  int n;
  std::vector<bits> circs_m;
  std::unordered_set<bits> circ_set_n;
  std::vector<std::vector<int>> candidates;  // per element of m
  std::vector<int> image;                    // -1 when unassigned
  std::vector<bool> used;
  std::uint64_t budget;

  bool assign(int e) {
    if (e == n) return true;
    for (int target : candidates[e]) {
      if (used[target]) continue;
      if (budget-- == 0) fail(errc::cap_exceeded, "isomorphism search budget exhausted");
      image[e] = target;
      used[target] = true;
      if (consistent(e) && assign(e + 1)) return true;
      image[e] = -1;
      used[target] = false;
    }
    return false;
  }

  // Circuits of m fully mapped after assigning elements 0..e must land on
  // circuits of n.
  bool consistent(int e) const {
    for (bits c : circs_m) {
      if (!contains(c, e)) continue;
      if (c >> (e + 1)) continue;  // not fully mapped yet
      bits img = 0;
      for (bits rest = c; rest;) {
        int x = lowest_bit(rest);
        rest &= rest - 1;
        img |= bits(1) << image[x];
      }
      if (!circ_set_n.count(img)) return false;
    }
    return true;
  }
};

std::vector<std::multiset<int>> element_signatures(const std::vector<bits>& circs, int n) {
  std::vector<std::multiset<int>> sig(n);
  for (bits c : circs) {
    int sz = popcount(c);
    for (bits rest = c; rest;) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      sig[e].insert(sz);
    }
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const matroid& m, const matroid& n, const caps& c) {
  if (m.size() != n.size()) return std::nullopt;
  if (m.size() > c.iso_ground)
    fail(errc::cap_exceeded, "isomorphism test capped at ground size " + std::to_string(c.iso_ground));
  std::vector<bits> cm = circuits(m, c);
  std::vector<bits> cn = circuits(n, c);
  if (cm.size() != cn.size()) return std::nullopt;
  auto sizes = [](const std::vector<bits>& circs) {
    std::multiset<int> out;
    for (bits x : circs) out.insert(popcount(x));
    return out;
  };
  if (sizes(cm) != sizes(cn)) return std::nullopt;

  auto sig_m = element_signatures(cm, m.size());
  auto sig_n = element_signatures(cn, n.size());

  iso_context ctx;
  ctx.n = m.size();
  ctx.circs_m = cm;
  ctx.circ_set_n = std::unordered_set<bits>(cn.begin(), cn.end());
  ctx.candidates.resize(ctx.n);
  for (int e = 0; e < ctx.n; ++e) {
    for (int f = 0; f < ctx.n; ++f) {
      if (sig_m[e] == sig_n[f]) ctx.candidates[e].push_back(f);
    }
    if (ctx.candidates[e].empty()) return std::nullopt;
  }
  ctx.image.assign(ctx.n, -1);
  ctx.used.assign(ctx.n, false);
  ctx.budget = c.iso_nodes;
  if (ctx.assign(0)) return ctx.image;
  return std::nullopt;
}

circuit_matroid circuit_presentation(const matroid& m, const caps& c) {
  if (!m.is_binary_presented()) return m.as_circuits();
  return circuit_matroid(m.ground(), circuits(m, c));
}

}  // namespace cyc

#include "cyc/minors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace cyc {

const char* step_kind_name(step_kind k) {
  switch (k) {
    case step_kind::del: return "delete";
    case step_kind::contract: return "contract";
    case step_kind::series_contract: return "series-contract";
    case step_kind::coloop_contract: return "coloop-contract";
    case step_kind::binary_retract: return "binary-retract";
  }
  return "?";
}

namespace {

ground_set subset_ground(const ground_set& g, bits removed) {
  std::vector<std::string> labels;
  for (int i = 0; i < g.size(); ++i) {
    if (!contains(removed, i)) labels.push_back(g.label(i));
  }
  return ground_set(std::move(labels));
}

/// Compacts a bitmask over the original ground to the ground with `removed`
/// elements dropped.
bits compact(bits v, bits removed, int n) {
  bits out = 0;
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (contains(removed, i)) continue;
    if (contains(v, i)) out |= bits(1) << j;
    ++j;
  }
  return out;
}

/// M / T \ D in one pass over the representation matrix; throws free_result
/// when nothing dependent survives.
matroid binary_minor(const binary_matroid& m, bits deleted, bits contracted) {
  const int n = m.size();
  std::vector<bits> rows = m.matrix().row;
  std::vector<bool> row_gone(rows.size(), false);
  for (bits rest = contracted; rest;) {
    int t = lowest_bit(rest);
    rest &= rest - 1;
    int pivot = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!row_gone[r] && contains(rows[r], t)) {
        pivot = static_cast<int>(r);
        break;
      }
    }
    if (pivot < 0) continue;  // t is a loop at this point: contraction = deletion
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!row_gone[r] && static_cast<int>(r) != pivot && contains(rows[r], t)) rows[r] ^= rows[pivot];
    }
    row_gone[pivot] = true;
  }
  bits removed = deleted | contracted;
  gf2_matrix out;
  out.cols = n - popcount(removed);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!row_gone[r]) out.row.push_back(compact(rows[r], removed, n));
  }
  out.rows = static_cast<int>(out.row.size());
  if (out.cols == 0 || gf2_rank(out) >= out.cols)
    fail(errc::free_result, "minor is a free matroid");
  return matroid(binary_matroid(subset_ground(m.ground(), removed), std::move(out)));
}

matroid circuit_minor(const circuit_matroid& m, bits deleted, bits contracted) {
  std::vector<bits> traces;
  for (bits c : m.circuits()) {
    bits t = c & ~contracted;
    if (t != 0) traces.push_back(t);
  }
  std::vector<bits> survivors;
  for (bits t : inclusion_minimal(std::move(traces))) {
    if (!(t & deleted)) survivors.push_back(t);
  }
  if (survivors.empty()) fail(errc::free_result, "minor is a free matroid");
  bits removed = deleted | contracted;
  const int n = m.size();
  for (auto& s : survivors) s = compact(s, removed, n);
  return matroid(circuit_matroid(subset_ground(m.ground(), removed), std::move(survivors)));
}

matroid minor_of(const matroid& m, bits deleted, bits contracted) {
  if (m.is_binary_presented()) return binary_minor(m.as_binary(), deleted, contracted);
  return circuit_minor(m.as_circuits(), deleted, contracted);
}

}  // namespace

matroid delete_elements(const matroid& m, bits x, const caps&) {
  return minor_of(m, x, 0);
}

matroid contract_elements(const matroid& m, bits t, const caps&) {
  return minor_of(m, 0, t);
}

bool duality_identities_check(const matroid& m, bits t, const caps& c) {
  matroid md = dual(m, c);
  auto same_circuits = [&](const matroid& a, const matroid& b) {
    if (!(a.ground() == b.ground())) return false;
    return circuits(a, c) == circuits(b, c);
  };
  // M*/T = (M\T)*
  if (!same_circuits(contract_elements(md, t, c), dual(delete_elements(m, t, c), c))) return false;
  // M*\T = (M/T)*
  if (!same_circuits(delete_elements(md, t, c), dual(contract_elements(m, t, c), c))) return false;
  return true;
}

bits series_contraction_candidates(const matroid& m) {
  const int n = m.size();
  bits out = 0;
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (is_two_cocircuit(m, e, f)) out |= (bits(1) << e) | (bits(1) << f);
    }
  }
  return out;
}

// -- binary matroidal retracts -------------------------------------------------

retract_check check_binary_matroidal_retract(const binary_matroid& m, const std::vector<int>& e_set,
                                             const std::vector<int>& eprime, const caps& c) {
  const int s = static_cast<int>(eprime.size());
  if (s < 1 || e_set.size() != eprime.size())
    fail(errc::invalid_argument, "E and E' must be non-empty and equally sized");
  bits mask_e = 0, mask_ep = 0;
  for (int x : e_set) {
    if (x < 0 || x >= m.size()) fail(errc::invalid_argument, "E element out of range");
    mask_e |= bits(1) << x;
  }
  for (int x : eprime) {
    if (x < 0 || x >= m.size()) fail(errc::invalid_argument, "E' element out of range");
    mask_ep |= bits(1) << x;
  }
  if (popcount(mask_e) != s || popcount(mask_ep) != s)
    fail(errc::invalid_argument, "E and E' must consist of distinct elements");
  if (mask_e & mask_ep) fail(errc::invalid_argument, "E and E' must be disjoint");

  std::vector<bits> circs = circuits(matroid(m), c);
  retract_check out;
  if (std::find(circs.begin(), circs.end(), mask_ep) == circs.end()) {
    out.failure = retract_failure::not_a_circuit;
    out.detail = "E' is not a circuit";
    return out;
  }
  for (bits circ : circs) {
    bits x = circ & mask_ep;  // trace on E'
    bits y = circ & mask_e;   // trace on E
    // Index patterns under the pairing.
    bits y_from_x = 0, x_from_y = 0;
    for (int j = 0; j < s; ++j) {
      if (contains(x, eprime[j])) y_from_x |= bits(1) << e_set[j];
      if (contains(y, e_set[j])) x_from_y |= bits(1) << eprime[j];
    }
    if (x != mask_ep) {  // pattern size at most s-1
      if (y != y_from_x && y != (mask_e & ~y_from_x)) {
        out.failure = retract_failure::pairing_fails;
        out.detail = "trace condition fails on a circuit";
        return out;
      }
    }
    if (y != mask_e) {
      if (x != x_from_y && x != (mask_ep & ~x_from_y)) {
        out.failure = retract_failure::pairing_fails;
        out.detail = "trace condition fails on a circuit";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

std::vector<retract_triple> enumerate_binary_matroidal_retracts(const binary_matroid& m,
                                                                const caps& c) {
  std::vector<retract_triple> out;
  const int n = m.size();
  std::vector<bits> circs = circuits(matroid(m), c);
  std::uint64_t budget = c.retract_budget;
  for (bits circ : circs) {
    const int s = popcount(circ);
    if (s > c.retract_circuit_size || 2 * s > n) continue;
    std::vector<int> eprime;
    for (int i = 0; i < n; ++i) {
      if (contains(circ, i)) eprime.push_back(i);
    }
    std::vector<int> others;
    for (int i = 0; i < n; ++i) {
      if (!contains(circ, i)) others.push_back(i);
    }
    // Combinations of candidate E sets, then pairings by permutation.
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::vector<int> combo(s);
      for (int i = 0; i < s; ++i) combo[i] = others[idx[i]];
      std::vector<int> perm = combo;
      do {
        if (budget-- == 0) fail(errc::cap_exceeded, "retract enumeration budget exhausted");
        if (check_binary_matroidal_retract(m, perm, eprime, c).ok) {
          out.push_back(retract_triple{perm, eprime});
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      // next combination
      int i = s - 1;
      while (i >= 0 && idx[i] == static_cast<int>(others.size()) - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// -- minor searches -------------------------------------------------------------

namespace {

std::uint64_t invariant_hash(const std::vector<bits>& circs, int n) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::uint64_t h = static_cast<std::uint64_t>(n) * 1315423911ULL;
  std::vector<int> sizes;
  for (bits c : circs) sizes.push_back(popcount(c));
  std::sort(sizes.begin(), sizes.end());
  for (int s : sizes) h = mix(h, s);
  std::vector<std::uint64_t> sigs(n, 0);
  for (bits c : circs) {
    int sz = popcount(c);
    for (bits rest = c; rest;) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      sigs[e] = sigs[e] * 1000003ULL + sz;
    }
  }
  std::sort(sigs.begin(), sigs.end());
  for (auto s : sigs) h = mix(h, s);
  return h;
}

std::vector<std::string> labels_of(const matroid& m, bits set) {
  std::vector<std::string> out;
  for (int i = 0; i < m.size(); ++i) {
    if (contains(set, i)) out.push_back(m.ground().label(i));
  }
  return out;
}

minor_witness make_witness(std::vector<minor_step> steps, const matroid& result,
                           const matroid& target, const std::vector<int>& perm) {
  minor_witness w;
  w.steps = std::move(steps);
  for (int i = 0; i < result.size(); ++i) {
    w.final_iso.emplace_back(result.ground().label(i), target.ground().label(perm[i]));
  }
  return w;
}

std::optional<minor_witness> general_minor_search(const matroid& m, const matroid& target,
                                                  const caps& c) {
  const int n = m.size();
  const int k = n - target.size();
  if (k < 0) return std::nullopt;
  if (n > 22) fail(errc::cap_exceeded, "general minor search capped at 22 ground elements");
  std::uint64_t budget = c.search_frontier;
  // All ways to split k removed elements into deletions and contractions.
  std::vector<bits> removals;
  for (bits s = 0; s < (bits(1) << n); ++s) {
    if (popcount(s) == k) removals.push_back(s);
  }
  std::sort(removals.begin(), removals.end(), set_less);
  for (bits s : removals) {
    for (bits t = s;; t = (t - 1) & s) {
      if (budget-- == 0) fail(errc::cap_exceeded, "general minor search budget exhausted");
      bits d = s & ~t;
      try {
        matroid sub = minor_of(m, d, t);
        if (auto perm = are_isomorphic(sub, target, c)) {
          std::vector<minor_step> steps;
          if (t) steps.push_back({step_kind::contract, labels_of(m, t), {}});
          if (d) steps.push_back({step_kind::del, labels_of(m, d), {}});
          return make_witness(std::move(steps), sub, target, *perm);
        }
      } catch (const error& err) {
        if (err.code() != errc::free_result) throw;
      }
      if (t == 0) break;
    }
  }
  return std::nullopt;
}

struct search_node {
  matroid m;
  std::vector<minor_step> steps;
};

std::optional<minor_witness> stepwise_minor_search(const matroid& m, const matroid& target,
                                                   bool g_series, const caps& c) {
  if (target.size() > m.size()) return std::nullopt;

  std::deque<search_node> queue;
  queue.push_back({m, {}});
  std::unordered_map<std::uint64_t, std::vector<matroid>> visited;
  auto mark_visited = [&](const matroid& state) {
    auto circs = circuits(state, c);
    std::uint64_t h = invariant_hash(circs, state.size());
    auto& bucket = visited[h];
    for (const matroid& seen : bucket) {
      if (are_isomorphic(state, seen, c)) return false;
    }
    bucket.push_back(state);
    return true;
  };
  mark_visited(m);
  std::uint64_t expanded = 0;

  while (!queue.empty()) {
    search_node node = std::move(queue.front());
    queue.pop_front();
    if (node.m.size() == target.size()) {
      if (auto perm = are_isomorphic(node.m, target, c)) {
        return make_witness(node.steps, node.m, target, *perm);
      }
      continue;  // same size but not isomorphic: every further step shrinks
    }
    if (node.m.size() < target.size()) continue;
    if (++expanded > c.search_frontier)
      fail(errc::cap_exceeded, "minor search frontier budget exhausted");

    auto push_child = [&](matroid child, minor_step step) {
      if (child.size() < target.size()) return;
      if (!mark_visited(child)) return;
      auto steps = node.steps;
      steps.push_back(std::move(step));
      queue.push_back({std::move(child), std::move(steps)});
    };

    const int n = node.m.size();
    for (int e = 0; e < n; ++e) {
      try {
        push_child(delete_elements(node.m, bits(1) << e, c),
                   {step_kind::del, {node.m.ground().label(e)}, {}});
      } catch (const error& err) {
        if (err.code() != errc::free_result) throw;
      }
    }
    bits series = series_contraction_candidates(node.m);
    for (int e = 0; e < n; ++e) {
      if (!contains(series, e)) continue;
      try {
        push_child(contract_elements(node.m, bits(1) << e, c),
                   {step_kind::series_contract, {node.m.ground().label(e)}, {}});
      } catch (const error& err) {
        if (err.code() != errc::free_result) throw;
      }
    }
    if (g_series) {
      bits cl = coloops(node.m);
      for (int e = 0; e < n; ++e) {
        if (!contains(cl, e)) continue;
        try {
          push_child(contract_elements(node.m, bits(1) << e, c),
                     {step_kind::coloop_contract, {node.m.ground().label(e)}, {}});
        } catch (const error& err) {
          if (err.code() != errc::free_result) throw;
        }
      }
      if (node.m.is_binary_presented()) {
        for (const retract_triple& rt : enumerate_binary_matroidal_retracts(node.m.as_binary(), c)) {
          bits eprime_mask = 0;
          for (int x : rt.eprime) eprime_mask |= bits(1) << x;
          std::vector<std::string> elems, paired;
          for (size_t j = 0; j < rt.eprime.size(); ++j) {
            elems.push_back(node.m.ground().label(rt.eprime[j]));
            paired.push_back(node.m.ground().label(rt.e_set[j]));
          }
          try {
            push_child(contract_elements(node.m, eprime_mask, c),
                       {step_kind::binary_retract, std::move(elems), std::move(paired)});
          } catch (const error& err) {
            if (err.code() != errc::free_result) throw;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<minor_witness> g_series_minor_search(const binary_matroid& m, const matroid& target,
                                                   const caps& c) {
  return stepwise_minor_search(matroid(m), target, true, c);
}

std::optional<minor_witness> find_minor(const matroid& m, const matroid& target, minor_kind kind,
                                        const caps& c) {
  switch (kind) {
    case minor_kind::general: return general_minor_search(m, target, c);
    case minor_kind::series: return stepwise_minor_search(m, target, false, c);
    case minor_kind::g_series: return stepwise_minor_search(m, target, true, c);
  }
  return std::nullopt;
}

bool minor_free(const matroid& m, const matroid& target, minor_kind kind, const caps& c) {
  return !find_minor(m, target, kind, c).has_value();
}

matroid replay_witness(const matroid& m, const minor_witness& w, const caps& c) {
  matroid current = m;
  for (const minor_step& step : w.steps) {
    bits set = 0;
    for (const auto& label : step.elems) {
      auto idx = current.ground().index_of(label);
      if (!idx) fail(errc::invalid_argument, "witness step names unknown element: " + label);
      set |= bits(1) << *idx;
    }
    switch (step.kind) {
      case step_kind::del:
        current = delete_elements(current, set, c);
        break;
      case step_kind::contract:
        current = contract_elements(current, set, c);
        break;
      case step_kind::series_contract: {
        if (step.elems.size() != 1) fail(errc::invalid_argument, "series contraction takes one element");
        int e = lowest_bit(set);
        if (!contains(series_contraction_candidates(current), e))
          fail(errc::invalid_argument, "element is not in a 2-cocircuit: " + step.elems[0]);
        current = contract_elements(current, set, c);
        break;
      }
      case step_kind::coloop_contract: {
        if (step.elems.size() != 1) fail(errc::invalid_argument, "coloop contraction takes one element");
        int e = lowest_bit(set);
        if (!contains(coloops(current), e))
          fail(errc::invalid_argument, "element is not a coloop: " + step.elems[0]);
        current = contract_elements(current, set, c);
        break;
      }
      case step_kind::binary_retract: {
        if (!current.is_binary_presented())
          fail(errc::invalid_argument, "binary retract on a non-binary presentation");
        std::vector<int> eprime, e_set;
        for (const auto& label : step.elems) eprime.push_back(*current.ground().index_of(label));
        for (const auto& label : step.paired) {
          auto idx = current.ground().index_of(label);
          if (!idx) fail(errc::invalid_argument, "witness pairing names unknown element: " + label);
          e_set.push_back(*idx);
        }
        if (!check_binary_matroidal_retract(current.as_binary(), e_set, eprime, c).ok)
          fail(errc::invalid_argument, "binary retract conditions fail at replay time");
        current = contract_elements(current, set, c);
        break;
      }
    }
  }
  return current;
}

}  // namespace cyc

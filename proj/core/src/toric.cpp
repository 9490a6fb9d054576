#include "cyc/toric.hpp"

#include <algorithm>
#include <unordered_map>

namespace cyc {

const char* markov_method_name(markov_method m) {
  return m == markov_method::saturation ? "saturation" : "fiber";
}

zmat cycle_matrix(const cycle_set& cs) {
  const int n = cs.count();
  const int e = cs.ground.size();
  zmat a(e + 1, zvec(n, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < e; ++i) {
      if (contains(cs.cycles[j], i)) a[i][j] = 1;
    }
    a[e][j] = 1;  // homogenizing coordinate: every x_C maps to degree 1
  }
  return a;
}

zmat lattice_kernel(const cycle_set& cs) { return integer_kernel_basis(cycle_matrix(cs)); }

namespace {

std::vector<binomial> lattice_basis_binomials(const zmat& kernel, int n, const term_order& ord) {
  std::vector<binomial> out;
  for (const zvec& row : kernel) {
    std::vector<long> w(n);
    for (int i = 0; i < n; ++i) {
      if (!row[i].fits_slong_p()) fail(errc::cap_exceeded, "lattice kernel entry overflows");
      w[i] = row[i].get_si();
      if (w[i] > 60000 || w[i] < -60000) fail(errc::cap_exceeded, "lattice kernel entry too large");
    }
    if (auto b = binomial_from_vector(w, ord)) out.push_back(*b);
  }
  return out;
}

std::vector<binomial> markov_saturation(const cycle_set& cs, const caps& c) {
  const int n = cs.count();
  term_order canonical = term_order::grevlex(n);
  std::vector<binomial> start = lattice_basis_binomials(lattice_kernel(cs), n, canonical);
  if (start.empty()) return {};
  std::vector<binomial> gens = saturate_all_variables(std::move(start), n, c);
  gens = buchberger(std::move(gens), canonical, c);
  sort_canonically(gens, canonical);
  return gens;
}

struct image_key_hash {
  size_t operator()(const std::vector<std::int64_t>& v) const {
    size_t h = v.size();
    for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct fiber_scan {
  std::vector<binomial> moves;
  std::map<int, int> histogram;
};

/// Minimal generators per multidegree: one per extra component of the fiber
/// graph whose edges join monomials with a common variable (such differences
/// lie in m*I, and connecting distinct components is exactly what a new
/// generator does).
fiber_scan fiber_decompose(const cycle_set& cs, int degree_cap, const caps& c) {
  const int n = cs.count();
  const int rows = cs.ground.size() + 1;
  zmat az = cycle_matrix(cs);
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(n));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = az[i][j].get_si();
  }
  term_order canonical = term_order::grevlex(n);
  fiber_scan out;
  std::uint64_t budget = c.fiber_monomials;

  for (int d = 2; d <= degree_cap; ++d) {
    std::unordered_map<std::vector<std::int64_t>, std::vector<expo>, image_key_hash> fibers;
    // Enumerate all degree-d monomials.
    expo mono(n, 0);
    std::vector<std::int64_t> image(rows, 0);
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
      if (var == n - 1) {
        if (budget-- == 0) fail(errc::cap_exceeded, "fiber monomial budget exhausted");
        mono[var] = static_cast<std::uint16_t>(remaining);
        std::vector<std::int64_t> key = image;
        for (int i = 0; i < rows; ++i) key[i] += std::int64_t(remaining) * a[i][var];
        fibers[key].push_back(mono);
        mono[var] = 0;
        return;
      }
      for (int take = 0; take <= remaining; ++take) {
        if (take) {
          mono[var] = static_cast<std::uint16_t>(take);
          for (int i = 0; i < rows; ++i) image[i] += std::int64_t(take) * a[i][var];
        }
        self(self, var + 1, remaining - take);
        if (take) {
          for (int i = 0; i < rows; ++i) image[i] -= std::int64_t(take) * a[i][var];
          mono[var] = 0;
        }
      }
    };
    recurse(recurse, 0, d);

    // Union-find per fiber on shared support.
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<expo>>> ordered(fibers.begin(),
                                                                                 fibers.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [key, monos] : ordered) {
      const size_t sz = monos.size();
      if (sz < 2) continue;
      std::sort(monos.begin(), monos.end());
      std::vector<size_t> parent(sz);
      for (size_t i = 0; i < sz; ++i) parent[i] = i;
      auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int var = 0; var < n; ++var) {
        size_t prev = sz;
        for (size_t i = 0; i < sz; ++i) {
          if (monos[i][var] == 0) continue;
          if (prev != sz) parent[find(prev)] = find(i);
          prev = i;
        }
      }
      std::map<size_t, expo> component_min;  // root -> lexicographically least member
      for (size_t i = 0; i < sz; ++i) {
        size_t root = find(i);
        auto it = component_min.find(root);
        if (it == component_min.end() || monos[i] < it->second) component_min[root] = monos[i];
      }
      if (component_min.size() < 2) continue;
      std::vector<expo> reps;
      for (auto& [root, rep] : component_min) reps.push_back(rep);
      std::sort(reps.begin(), reps.end());
      for (size_t i = 1; i < reps.size(); ++i) {
        binomial b{reps[i], reps[0]};
        orient(b, canonical);
        out.moves.push_back(b);
      }
      out.histogram[d] += static_cast<int>(component_min.size()) - 1;
    }
  }
  return out;
}

bool lattices_match(const std::vector<binomial>& moves, const zmat& kernel, int n) {
  zmat move_vectors;
  for (const binomial& b : moves) {
    zvec v(n);
    std::vector<long> w = direction(b);
    for (int i = 0; i < n; ++i) v[i] = w[i];
    move_vectors.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(move_vectors)) == hermite_normal_form(kernel);
}

}  // namespace

std::vector<binomial> markov_basis(const cycle_set& cs, markov_method method, int degree_cap,
                                   const caps& c, bool* cap_hit) {
  const int n = cs.count();
  if (n > c.max_cycle_variables)
    fail(errc::cap_exceeded, "cycle ideal computations capped at " +
                                 std::to_string(c.max_cycle_variables) + " cycle variables");
  if (degree_cap < 2) fail(errc::invalid_argument, "degree cap must be at least 2");
  if (cap_hit) *cap_hit = false;
  if (method == markov_method::saturation) return markov_saturation(cs, c);

  fiber_scan scan = fiber_decompose(cs, degree_cap, c);
  // Completeness certificate: the moves span the kernel lattice and generate
  // an ideal already saturated with respect to every variable. Together these
  // pin the ideal of the moves to the full cycle ideal.
  bool certified = lattices_match(scan.moves, lattice_kernel(cs), n);
  if (certified && !scan.moves.empty()) {
    term_order canonical = term_order::grevlex(n);
    std::vector<binomial> gb = buchberger(scan.moves, canonical, c);
    std::vector<binomial> saturated = saturate_all_variables(gb, n, c);
    saturated = buchberger(std::move(saturated), canonical, c);
    certified = gb == saturated;
  }
  if (!certified && cap_hit) *cap_hit = true;
  return scan.moves;
}

minimalization minimal_generators(std::vector<binomial> gens, int num_variables, const caps& c) {
  term_order canonical = term_order::grevlex(num_variables);
  std::stable_sort(gens.begin(), gens.end(), [&](const binomial& x, const binomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    int cmp = canonical.compare(x.lead, y.lead);
    if (cmp != 0) return cmp < 0;
    return canonical.compare(x.trail, y.trail) < 0;
  });
  minimalization out;
  std::vector<binomial> gb;
  for (const binomial& g : gens) {
    if (!gb.empty() && !normal_form(g, gb, canonical)) continue;  // already generated
    out.kept.push_back(g);
    out.degree_histogram[g.degree()] += 1;
    gb.push_back(g);
    gb = buchberger(std::move(gb), canonical, c);
  }
  if (!out.kept.empty()) out.mu = out.degree_histogram.rbegin()->first;
  return out;
}

bool verify_no_linear_forms(const std::vector<binomial>& gens) {
  for (const binomial& g : gens) {
    if (g.degree() <= 1) return false;
  }
  return true;
}

bool is_zero_ideal(const matroid& m, const caps& c) {
  return coparallel_count(m) == cycles(m, c).count() - 1;
}

generator_report cycle_ideal_report(const cycle_set& cs, markov_method method, int degree_cap,
                                    const caps& c) {
  generator_report report;
  report.method = method;
  report.num_cycles = cs.count();
  zmat a = cycle_matrix(cs);
  report.d = rational_rank(a) - 1;  // affine dimension of the cycle vectors
  report.height = report.num_cycles - report.d - 1;
  const int lattice_rank = static_cast<int>(lattice_kernel(cs).size());
  if (lattice_rank != report.height)
    fail(errc::property_violation, "lattice rank disagrees with the height formula");

  bool cap_hit = false;
  std::vector<binomial> basis = markov_basis(cs, method, degree_cap, c, &cap_hit);
  report.degree_cap_hit = cap_hit;
  if (!verify_no_linear_forms(basis))
    fail(errc::property_violation, "cycle ideal produced a linear form");
  minimalization mg = minimal_generators(std::move(basis), cs.count(), c);
  report.degree_histogram = mg.degree_histogram;
  report.mu = mg.mu;  // a lower bound when the degree cap was hit
  report.zero_ideal = report.height == 0;
  if (!report.degree_cap_hit && mg.kept.empty() != report.zero_ideal)
    fail(errc::property_violation, "zero-ideal criterion disagrees with the computed basis");
  return report;
}

generator_report mu_report(const matroid& m, markov_method method, int degree_cap, const caps& c) {
  cycle_set cs = cycles(m, c);
  generator_report report = cycle_ideal_report(cs, method, degree_cap, c);
  if (report.d != coparallel_count(m))
    fail(errc::property_violation, "dim P_Cyc(M) disagrees with the coparallel class count");
  return report;
}

namespace {

std::string mu_string(const generator_report& r) {
  return r.mu ? std::to_string(*r.mu) : std::string("-inf");
}

bool mu_less_equal(const generator_report& a, const generator_report& b) {
  if (!a.mu) return true;  // -inf
  if (!b.mu) return false;
  return *a.mu <= *b.mu;
}

}  // namespace

std::vector<mu_chain_entry> mu_comparisons(const matroid& m, const std::vector<minor_step>& steps,
                                           markov_method method, int degree_cap, const caps& c) {
  std::vector<mu_chain_entry> chain;
  matroid current = m;
  generator_report report = mu_report(current, method, degree_cap, c);
  chain.push_back({"start", report, "start"});
  for (const minor_step& step : steps) {
    minor_witness single;
    single.steps = {step};
    matroid next = replay_witness(current, single, c);
    generator_report next_report = mu_report(next, method, degree_cap, c);
    std::string relation;
    switch (step.kind) {
      case step_kind::series_contract:
      case step_kind::coloop_contract: {
        bool equal = (report.mu.has_value() == next_report.mu.has_value()) &&
                     (!report.mu || *report.mu == *next_report.mu);
        if (!equal)
          fail(errc::property_violation,
               "mu changed across a " + std::string(step_kind_name(step.kind)) + " step: " +
                   mu_string(report) + " -> " + mu_string(next_report));
        relation = "equal (" + std::string(step_kind_name(step.kind)) + ")";
        break;
      }
      case step_kind::del:
      case step_kind::binary_retract: {
        if (!mu_less_equal(next_report, report))
          fail(errc::property_violation,
               "mu increased across a " + std::string(step_kind_name(step.kind)) + " step: " +
                   mu_string(report) + " -> " + mu_string(next_report));
        relation = "non-increasing (" + std::string(step_kind_name(step.kind)) + ")";
        break;
      }
      case step_kind::contract:
        relation = "unconstrained (contract)";
        break;
    }
    std::string desc = step_kind_name(step.kind);
    desc += " {";
    for (size_t i = 0; i < step.elems.size(); ++i) {
      if (i) desc += ",";
      desc += step.elems[i];
    }
    desc += "}";
    chain.push_back({desc, next_report, relation});
    current = std::move(next);
    report = next_report;
  }
  return chain;
}

}  // namespace cyc

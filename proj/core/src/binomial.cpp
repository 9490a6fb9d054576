#include "cyc/binomial.hpp"

#include <algorithm>
#include <queue>

namespace cyc {

int degree_of(const expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

term_order term_order::grevlex(int n) {
  term_order ord;
  ord.cheap_to_pricey.resize(n);
  for (int i = 0; i < n; ++i) ord.cheap_to_pricey[i] = n - 1 - i;
  return ord;
}

term_order term_order::grevlex_cheapest(int n, int cheapest_var) {
  term_order ord;
  ord.cheap_to_pricey.push_back(cheapest_var);
  for (int i = n - 1; i >= 0; --i) {
    if (i != cheapest_var) ord.cheap_to_pricey.push_back(i);
  }
  return ord;
}

int term_order::compare(const expo& u, const expo& v) const {
  int du = degree_of(u), dv = degree_of(v);
  if (du != dv) return du < dv ? -1 : 1;
  for (int var : cheap_to_pricey) {
    if (u[var] != v[var]) return u[var] > v[var] ? -1 : 1;
  }
  return 0;
}

std::vector<long> direction(const binomial& b) {
  std::vector<long> w(b.lead.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = long(b.lead[i]) - long(b.trail[i]);
  return w;
}

std::optional<binomial> binomial_from_vector(const std::vector<long>& w, const term_order& ord) {
  binomial b;
  b.lead.assign(w.size(), 0);
  b.trail.assign(w.size(), 0);
  bool nonzero = false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) b.lead[i] = static_cast<std::uint16_t>(w[i]);
    if (w[i] < 0) b.trail[i] = static_cast<std::uint16_t>(-w[i]);
    nonzero |= w[i] != 0;
  }
  if (!nonzero) return std::nullopt;
  orient(b, ord);
  return b;
}

bool orient(binomial& b, const term_order& ord) {
  int cmp = ord.compare(b.lead, b.trail);
  if (cmp == 0) return false;
  if (cmp < 0) std::swap(b.lead, b.trail);
  return true;
}

namespace {

bool divides(const expo& a, const expo& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

expo normal_form_monomial(expo m, const std::vector<binomial>& basis) {
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const binomial& g : basis) {
      if (divides(g.lead, m)) {
        for (size_t i = 0; i < m.size(); ++i)
          m[i] = static_cast<std::uint16_t>(m[i] - g.lead[i] + g.trail[i]);
        reduced = true;
        break;
      }
    }
  }
  return m;
}

std::optional<binomial> normal_form(const binomial& b, const std::vector<binomial>& basis,
                                    const term_order& ord) {
  binomial out;
  out.lead = normal_form_monomial(b.lead, basis);
  out.trail = normal_form_monomial(b.trail, basis);
  if (!orient(out, ord)) return std::nullopt;
  return out;
}

namespace {

expo lcm_expo(const expo& a, const expo& b) {
  expo out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const expo& a, const expo& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

std::vector<binomial> interreduce(std::vector<binomial> basis, const term_order& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      binomial g = basis[i];
      std::vector<binomial> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(basis[j]);
      }
      auto nf = normal_form(g, others, ord);
      if (!nf) {
        basis.erase(basis.begin() + i);
        changed = true;
        break;
      }
      if (!(*nf == g)) {
        basis[i] = *nf;
        changed = true;
      }
    }
  }
  sort_canonically(basis, ord);
  return basis;
}

}  // namespace

void sort_canonically(std::vector<binomial>& gens, const term_order& ord) {
  std::sort(gens.begin(), gens.end(), [&](const binomial& x, const binomial& y) {
    int c = ord.compare(x.lead, y.lead);
    if (c != 0) return c < 0;
    return ord.compare(x.trail, y.trail) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

std::vector<binomial> buchberger(std::vector<binomial> gens, const term_order& ord, const caps&) {
  std::vector<binomial> basis;
  for (binomial g : gens) {
    if (orient(g, ord)) basis.push_back(g);
  }
  sort_canonically(basis, ord);

  struct pair_entry {
    int deg;
    size_t i, j;
    bool operator>(const pair_entry& o) const {
      if (deg != o.deg) return deg > o.deg;
      if (i != o.i) return i > o.i;
      return j > o.j;
    }
  };
  std::priority_queue<pair_entry, std::vector<pair_entry>, std::greater<pair_entry>> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead, basis[j].lead)) continue;  // product criterion
      pairs.push({degree_of(lcm_expo(basis[i].lead, basis[j].lead)), i, j});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  std::uint64_t steps = 0;
  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    if (++steps > 50'000'000) fail(errc::cap_exceeded, "Buchberger step budget exhausted");
    expo l = lcm_expo(basis[i].lead, basis[j].lead);
    binomial s;
    s.lead.resize(l.size());
    s.trail.resize(l.size());
    for (size_t t = 0; t < l.size(); ++t) {
      s.lead[t] = static_cast<std::uint16_t>(l[t] - basis[i].lead[t] + basis[i].trail[t]);
      s.trail[t] = static_cast<std::uint16_t>(l[t] - basis[j].lead[t] + basis[j].trail[t]);
    }
    if (!orient(s, ord)) continue;
    auto nf = normal_form(s, basis, ord);
    if (!nf) continue;
    basis.push_back(*nf);
    push_pairs_for(basis.size() - 1);
  }
  return interreduce(std::move(basis), ord);
}

std::vector<binomial> saturate_variable(std::vector<binomial> gens, int var, int n, const caps& c) {
  term_order ord = term_order::grevlex_cheapest(n, var);
  std::vector<binomial> gb = buchberger(std::move(gens), ord, c);
  for (binomial& g : gb) {
    std::uint16_t common = std::min(g.lead[var], g.trail[var]);
    if (common) {
      g.lead[var] = static_cast<std::uint16_t>(g.lead[var] - common);
      g.trail[var] = static_cast<std::uint16_t>(g.trail[var] - common);
      orient(g, ord);
    }
  }
  return gb;
}

std::vector<binomial> saturate_all_variables(std::vector<binomial> gens, int n, const caps& c) {
  term_order canonical = term_order::grevlex(n);
  std::vector<binomial> current = std::move(gens);
  for (int pass = 0; pass < 8; ++pass) {
    for (int var = 0; var < n; ++var) current = saturate_variable(std::move(current), var, n, c);
    std::vector<binomial> before = buchberger(current, canonical, c);
    std::vector<binomial> again = before;
    for (int var = 0; var < n; ++var) again = saturate_variable(std::move(again), var, n, c);
    std::vector<binomial> after = buchberger(again, canonical, c);
    if (before == after) return before;
    current = std::move(after);
  }
  fail(errc::property_violation, "variable saturation did not stabilize");
}

}  // namespace cyc

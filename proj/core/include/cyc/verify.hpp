#ifndef CYC_VERIFY_HPP
#define CYC_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "cyc/matroid.hpp"

namespace cyc {

struct criterion_result {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // a degree cap below the item's needs: not a failure
  std::string detail;
  double ms = 0.0;
};

/// Runs every acceptance criterion; results come back in order, one per item.
/// Items whose exact values live above `degree_cap` are marked skipped.
std::vector<criterion_result> run_paper_verification(const caps& c = {}, int degree_cap = 8);

/// Random non-free binary matroid on 4..8 elements with nullity 1..4, so the
/// cycle ideal stays desk-sized. Deterministic in the generator state.
binary_matroid random_binary_matroid(std::mt19937_64& rng);

}  // namespace cyc

#endif

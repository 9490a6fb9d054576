#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cyctest;

TEST_CASE("rref of the identity is the identity") {
  auto r = gf2_rref(matrix_from_strings({"10", "01"}));
  REQUIRE(r.rank == 2);
  REQUIRE(r.pivots == std::vector<int>{0, 1});
  REQUIRE(r.mat.row == matrix_from_strings({"10", "01"}).row);
}

TEST_CASE("rref of a zero matrix has rank 0") {
  auto r = gf2_rref(matrix_from_strings({"000", "000"}));
  REQUIRE(r.rank == 0);
  REQUIRE(r.pivots.empty());
  REQUIRE(r.mat.rows == 0);
}

TEST_CASE("rref eliminates above the pivots") {
  // {110, 011} row-reduces to {101, 011}.
  auto r = gf2_rref(matrix_from_strings({"110", "011"}));
  REQUIRE(r.rank == 2);
  REQUIRE(r.pivots == std::vector<int>{0, 1});
  REQUIRE(r.mat.row == matrix_from_strings({"101", "011"}).row);
}

TEST_CASE("kernel of an injective matrix is empty") {
  REQUIRE(gf2_kernel_basis(matrix_from_strings({"100", "010", "001"})).empty());
}

TEST_CASE("kernel of a single parity row") {
  gf2_matrix m = matrix_from_strings({"111"});
  auto basis = gf2_kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (bits v : basis) {
    REQUIRE(popcount(v & m.row[0]) % 2 == 0);  // A v = 0
    REQUIRE(v != 0);
  }
  REQUIRE(basis[0] != basis[1]);
}

TEST_CASE("kernel of the triangle incidence matrix is the triangle") {
  multigraph k3 = fixture_graph("k3");
  auto basis = gf2_kernel_basis(incidence_matrix(k3));
  REQUIRE(basis == std::vector<bits>{0b111});
}

TEST_CASE("kernel vectors always satisfy A v = 0") {
  gf2_matrix m = matrix_from_strings({"110101", "011011", "111000"});
  auto r = gf2_rref(m);
  for (bits v : gf2_kernel_basis(m)) {
    for (int row = 0; row < m.rows; ++row) REQUIRE(popcount(m.row[row] & v) % 2 == 0);
  }
  REQUIRE(static_cast<int>(gf2_kernel_basis(m).size()) == m.cols - r.rank);
}

TEST_CASE("submatrix rank and rowspace membership") {
  gf2_matrix m = matrix_from_strings({"1100", "0110"});
  REQUIRE(gf2_rank(m) == 2);
  REQUIRE(gf2_rank_submatrix(m, 0b0011) == 2);
  REQUIRE(gf2_rank_submatrix(m, 0b0001) == 1);
  auto r = gf2_rref(m);
  REQUIRE(gf2_in_rowspace(r, 0b0101));  // sum of the two rows
  REQUIRE(!gf2_in_rowspace(r, 0b0001));
}

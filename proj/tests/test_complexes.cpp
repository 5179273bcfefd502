#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "expcircle/circle_cells.hpp"
#include "expcircle/complexes.hpp"
#include "expcircle/errors.hpp"

using namespace expcircle;

namespace {

IntMat mat(long rows, long cols, std::initializer_list<long> entries) {
  IntMat M(rows, cols);
  auto it = entries.begin();
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) M(i, j) = Int(*it++);
  return M;
}

IntMat random_matrix(std::mt19937& rng, long rows, long cols) {
  IntMat M(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j)
      M(i, j) = Int(static_cast<long>(rng() % 19u) - 9);
  return M;
}

// The circle as three vertices and three edges.
DeltaComplex triangle_circle() {
  DeltaComplex X;
  X.cells = {{"v0", "v1", "v2"}, {"e01", "e12", "e20"}};
  X.faces = {{{}, {}, {}}, {{1, 0}, {2, 1}, {0, 2}}};
  return X;
}

// The projective plane from two triangles on two vertices and three edges.
DeltaComplex projective_plane() {
  DeltaComplex X;
  X.cells = {{"v", "w"}, {"a", "b", "c"}, {"U", "L"}};
  X.faces = {{{}, {}},
             {{1, 0}, {1, 0}, {0, 0}},
             // slot lists give dU = b - a + c and dL = a - b + c
             {{1, 0, 2}, {0, 1, 2}}};
  return X;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SECTION("generic 2x2") {
    SNFResult r = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
    CHECK(r.S(0, 0) == 2);
    CHECK(r.S(1, 1) == 4);
    CHECK(r.S(0, 1) == 0);
    CHECK(r.S(1, 0) == 0);
    CHECK(r.U * mat(2, 2, {2, 4, 6, 8}) * r.V == r.S);
  }
  SECTION("unimodular input") {
    SNFResult r = smith_normal_form(mat(2, 2, {-1, 0, 2, 1}));
    CHECK(r.S == IntMat::Identity(2, 2));
  }
  SECTION("zero and empty") {
    SNFResult r = smith_normal_form(IntMat::Zero(2, 3));
    CHECK(r.S == IntMat::Zero(2, 3));
    SNFResult e = smith_normal_form(IntMat(0, 4));
    CHECK(e.S.rows() == 0);
    CHECK(e.S.cols() == 4);
  }
}

TEST_CASE("smith normal form is a unimodular diagonalization") {
  std::mt19937 rng(2024u);
  for (int trial = 0; trial < 60; ++trial) {
    long rows = 1 + static_cast<long>(rng() % 6u);
    long cols = 1 + static_cast<long>(rng() % 7u);
    IntMat A = random_matrix(rng, rows, cols);
    SNFResult r = smith_normal_form(A);
    REQUIRE(r.U * A * r.V == r.S);
    Int du = determinant(r.U);
    Int dv = determinant(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    long m = std::min(rows, cols);
    for (long i = 0; i < m; ++i) {
      CHECK(r.S(i, i) >= 0);
      for (long j = 0; j < cols; ++j)
        if (j != i) CHECK(r.S(i, j) == 0);
      if (i + 1 < m && r.S(i + 1, i + 1) != 0) {
        REQUIRE(r.S(i, i) != 0);
        CHECK(r.S(i + 1, i + 1) % r.S(i, i) == 0);
      }
    }
  }
}

TEST_CASE("boundary matrices of a triangulated circle") {
  ChainComplex C = boundary_matrices(triangle_circle());
  REQUIRE(C.ranks == std::vector<long>{3, 3});
  std::vector<HomologyGroup> H = homology_all(C);
  CHECK(H[0].rank == 1);
  CHECK(H[0].torsion.empty());
  CHECK(H[1].rank == 1);
  CHECK(H[1].torsion.empty());
  CHECK(euler_characteristic(C) == 0);
}

TEST_CASE("projective plane has 2-torsion") {
  ChainComplex C = boundary_matrices(projective_plane());
  std::vector<HomologyGroup> H = homology_all(C);
  CHECK(H[0].rank == 1);
  CHECK(H[1].rank == 0);
  REQUIRE(H[1].torsion.size() == 1);
  CHECK(H[1].torsion[0] == 2);
  CHECK(H[2].rank == 0);
  CHECK(H[2].torsion.empty());
  CHECK(euler_characteristic(C) == 1);
}

TEST_CASE("malformed complexes are rejected") {
  DeltaComplex bad = triangle_circle();
  bad.faces[1][0] = {5, 0};  // dangling face index
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  ChainComplex notchain;
  notchain.ranks = {1, 1, 1};
  notchain.boundaries = {IntMat(0, 1), mat(1, 1, {1}), mat(1, 1, {1})};
  CHECK_THROWS_AS(notchain.validate(), std::invalid_argument);  // dd != 0
}

TEST_CASE("homology is invariant under a cancelling cell pair") {
  ChainComplex C = boundary_matrices(exp_cell_complex(3));
  std::vector<HomologyGroup> before = homology_all(C);

  // Append one extra 1-cell and one extra 2-cell with the 2-cell glued once
  // along the new 1-cell; the pair cancels.
  ChainComplex D = C;
  D.ranks[1] += 1;
  D.ranks[2] += 1;
  {
    IntMat B1(D.boundaries[1].rows(), D.boundaries[1].cols() + 1);
    B1.leftCols(D.boundaries[1].cols()) = D.boundaries[1];
    B1.col(D.boundaries[1].cols()).setZero();
    D.boundaries[1] = B1;

    IntMat B2 = IntMat::Zero(D.ranks[1], D.ranks[2]);
    B2.topLeftCorner(C.ranks[1], C.ranks[2]) = C.boundaries[2];
    B2(D.ranks[1] - 1, D.ranks[2] - 1) = 1;
    D.boundaries[2] = B2;

    IntMat B3 = IntMat::Zero(D.ranks[2], D.ranks[3]);
    B3.topRows(C.ranks[2]) = C.boundaries[3];
    D.boundaries[3] = B3;
  }
  D.validate();
  std::vector<HomologyGroup> after = homology_all(D);
  CHECK(before == after);
}

TEST_CASE("homology basis exposes generators as cycle coordinates") {
  ChainComplex C = boundary_matrices(exp_cell_complex(4));
  HomologyBasis basis = homology_basis(C, 3);
  REQUIRE(basis.group.rank == 1);
  CHECK(basis.group.torsion.empty());
  REQUIRE(basis.free_generators.cols() == 1);
  // The generating cycle is the odd top cell of the one-point-smaller space.
  CHECK(basis.free_generators(0, 0) == 0);
  CHECK(basis.free_generators(1, 0) == 1);

  IntVec z = basis.free_generators.col(0);
  IntVec coords = free_class_coordinates(basis, z);
  REQUIRE(coords.size() == 1);
  CHECK(coords(0) == 1);

  // The top boundary here is zero, so every dim-3 vector is a cycle. To see
  // the rejection path, use the triangle, whose edge boundary is nonzero.
  ChainComplex T = boundary_matrices(triangle_circle());
  HomologyBasis tb = homology_basis(T, 1);
  REQUIRE(tb.group.rank == 1);
  IntVec notcycle(3);
  notcycle << Int(1), Int(0), Int(0);
  CHECK_THROWS_AS(free_class_coordinates(tb, notcycle), std::invalid_argument);
}

TEST_CASE("induced maps demand actual chain maps") {
  ChainComplex C = boundary_matrices(exp_cell_complex(3));
  std::vector<IntMat> ident;
  for (long r : C.ranks) ident.push_back(IntMat::Identity(r, r));
  IntMat M = induced_map_on_homology(C, C, ident, 3);
  REQUIRE(M.rows() == 1);
  REQUIRE(M.cols() == 1);
  CHECK(M(0, 0) == 1);

  std::vector<IntMat> broken = ident;
  broken[2](0, 0) = 2;  // no longer commutes with the boundaries
  try {
    induced_map_on_homology(C, C, broken, 3);
    FAIL("expected NotAChainMapError");
  } catch (const NotAChainMapError& e) {
    // The first broken square sits over the dim-2 boundary map.
    CHECK(e.dimension == 2);
  }
}

TEST_CASE("exact determinants via fraction-free elimination") {
  CHECK(determinant(mat(1, 1, {-7})) == -7);
  CHECK(determinant(mat(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(determinant(mat(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
  CHECK(determinant(mat(2, 2, {2, 4, 1, 2})) == 0);
  CHECK(determinant(IntMat::Identity(5, 5)) == 1);

  std::mt19937 rng(99u);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat A = random_matrix(rng, 4, 4);
    IntMat B = random_matrix(rng, 4, 4);
    CHECK(determinant(IntMat(A * B)) == determinant(A) * determinant(B));
  }
}

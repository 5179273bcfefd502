#include "expcircle/complexes.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace expcircle {

namespace {

bool is_zero(const IntMat& M) {
  for (long i = 0; i < M.rows(); ++i)
    for (long j = 0; j < M.cols(); ++j)
      if (M(i, j) != 0) return false;
  return true;
}

bool same_matrix(const IntMat& A, const IntMat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j)
      if (A(i, j) != B(i, j)) return false;
  return true;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smith normal form with all four change-of-basis matrices tracked, so that
// S = U*A*V and U*Uinv = Vinv*V = I exactly. Row/column operations are applied
// to U and V while the inverse operations accumulate on the other side.
struct SnfFull {
  IntMat U, Uinv, S, V, Vinv;
  long rank = 0;
};

SnfFull snf_full(const IntMat& A) {
  const long m = A.rows(), n = A.cols();
  SnfFull f;
  f.S = A;
  f.U = IntMat::Identity(m, m);
  f.Uinv = IntMat::Identity(m, m);
  f.V = IntMat::Identity(n, n);
  f.Vinv = IntMat::Identity(n, n);
  IntMat& S = f.S;

  auto row_sub = [&](long i, long t, const Int& q) {  // row i -= q * row t
    S.row(i) -= q * S.row(t);
    f.U.row(i) -= q * f.U.row(t);
    f.Uinv.col(t) += q * f.Uinv.col(i);
  };
  auto col_sub = [&](long j, long t, const Int& q) {  // col j -= q * col t
    S.col(j) -= q * S.col(t);
    f.V.col(j) -= q * f.V.col(t);
    f.Vinv.row(t) += q * f.Vinv.row(j);
  };
  auto row_swap = [&](long i, long t) {
    S.row(i).swap(S.row(t));
    f.U.row(i).swap(f.U.row(t));
    f.Uinv.col(i).swap(f.Uinv.col(t));
  };
  auto col_swap = [&](long j, long t) {
    S.col(j).swap(S.col(t));
    f.V.col(j).swap(f.V.col(t));
    f.Vinv.row(j).swap(f.Vinv.row(t));
  };
  auto row_add = [&](long t, long i) {  // row t += row i
    S.row(t) += S.row(i);
    f.U.row(t) += f.U.row(i);
    f.Uinv.col(i) -= f.Uinv.col(t);
  };

  const long dmax = std::min(m, n);
  bool exhausted = false;
  for (long t = 0; t < dmax && !exhausted; ++t) {
    for (;;) {
      // Smallest-magnitude nonzero pivot limits coefficient growth.
      long pi = -1, pj = -1;
      Int best;
      for (long i = t; i < m; ++i)
        for (long j = t; j < n; ++j)
          if (S(i, j) != 0) {
            Int a = abs_int(S(i, j));
            if (pi < 0 || a < best) {
              best = a;
              pi = i;
              pj = j;
            }
          }
      if (pi < 0) {
        exhausted = true;  // remaining block is zero
        break;
      }
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);

      bool remainder_left = false;
      for (long i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) row_sub(i, t, q);
        if (S(i, t) != 0) remainder_left = true;
      }
      for (long j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        if (q != 0) col_sub(j, t, q);
        if (S(t, j) != 0) remainder_left = true;
      }
      if (remainder_left) continue;  // a strictly smaller pivot now exists

      // Pivot must divide the rest of the block for the divisibility chain;
      // folding an offending row into row t shrinks the pivot on the next pass.
      bool fixed = false;
      for (long i = t + 1; i < m && !fixed; ++i)
        for (long j = t + 1; j < n && !fixed; ++j)
          if (S(i, j) % S(t, t) != 0) {
            row_add(t, i);
            fixed = true;
          }
      if (!fixed) break;
    }
  }

  for (long t = 0; t < dmax; ++t) {
    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      f.U.row(t) = -f.U.row(t);
      f.Uinv.col(t) = -f.Uinv.col(t);
    }
    if (S(t, t) != 0) ++f.rank;
  }
  return f;
}

}  // namespace

void DeltaComplex::validate() const {
  if (cells.size() != faces.size())
    throw std::invalid_argument("cells/faces dimension count mismatch");
  for (std::size_t d = 0; d < cells.size(); ++d) {
    if (faces[d].size() != cells[d].size())
      throw std::invalid_argument("face table size mismatch in dimension " +
                                  std::to_string(d));
    for (const auto& fl : faces[d]) {
      if (d == 0) {
        if (!fl.empty())
          throw std::invalid_argument("dimension-0 cells must have no faces");
        continue;
      }
      if (fl.size() != d + 1)
        throw std::invalid_argument("a " + std::to_string(d) +
                                    "-cell must list " + std::to_string(d + 1) +
                                    " faces");
      for (long ref : fl)
        if (ref < 0 || ref >= static_cast<long>(cells[d - 1].size()))
          throw std::invalid_argument("face reference out of range");
    }
  }
}

void ChainComplex::validate() const {
  if (ranks.size() != boundaries.size())
    throw std::invalid_argument("ranks/boundaries length mismatch");
  if (ranks.empty()) throw std::invalid_argument("chain complex needs dimension 0");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 0) throw std::invalid_argument("negative rank");
    const long expect_rows = i == 0 ? 0 : ranks[i - 1];
    if (boundaries[i].rows() != expect_rows || boundaries[i].cols() != ranks[i])
      throw std::invalid_argument("boundary matrix shape mismatch at dimension " +
                                  std::to_string(i));
  }
  for (std::size_t i = 2; i < ranks.size(); ++i) {
    IntMat prod = boundaries[i - 1] * boundaries[i];
    if (!is_zero(prod))
      throw std::invalid_argument("boundary of boundary nonzero at dimension " +
                                  std::to_string(i));
  }
}

ChainComplex boundary_matrices(const DeltaComplex& X) {
  X.validate();
  ChainComplex C;
  const long dim = X.dimension();
  if (dim < 0) throw std::invalid_argument("empty complex");
  C.ranks.resize(dim + 1);
  C.boundaries.resize(dim + 1);
  for (long d = 0; d <= dim; ++d) C.ranks[d] = static_cast<long>(X.cells[d].size());
  C.boundaries[0] = IntMat::Zero(0, C.ranks[0]);
  for (long d = 1; d <= dim; ++d) {
    IntMat M = IntMat::Zero(C.ranks[d - 1], C.ranks[d]);
    for (long c = 0; c < C.ranks[d]; ++c)
      for (long j = 0; j <= d; ++j) {
        const long tgt = X.faces[d][c][j];
        if (j % 2 == 0)
          M(tgt, c) += 1;
        else
          M(tgt, c) -= 1;
      }
    C.boundaries[d] = std::move(M);
  }
  C.validate();
  return C;
}

SNFResult smith_normal_form(const IntMat& A) {
  auto f = snf_full(A);
  return SNFResult{std::move(f.U), std::move(f.S), std::move(f.V)};
}

HomologyBasis homology_basis(const ChainComplex& C, long i) {
  if (i < 0 || i > C.top_dimension())
    throw std::out_of_range("homology dimension out of range");
  const long n = C.ranks[i];
  const IntMat& A = C.boundaries[i];
  const IntMat B = i + 1 <= C.top_dimension() ? C.boundaries[i + 1]
                                              : IntMat::Zero(n, 0);

  // Cycles: z in ker A iff the first r coordinates of Vinv*z vanish, so the
  // last columns of V are a lattice basis K of the kernel.
  const auto fa = snf_full(A);
  const long r = fa.rank;
  const long mker = n - r;
  const IntMat K = fa.V.rightCols(mker);
  const IntMat vtop = fa.Vinv.topRows(r);
  const IntMat vbot = fa.Vinv.bottomRows(mker);

  // Boundaries land in the kernel; Y holds their K-coordinates, and the SNF
  // of Y presents H_i = Z^mker / im Y in the basis G = K * Uinv.
  const IntMat Y = vbot * B;
  auto fy = snf_full(Y);
  const long r2 = fy.rank;
  IntMat G = K * fy.Uinv;
  IntMat change = fy.U;

  for (long j = 0; j < mker; ++j) {
    for (long row = 0; row < n; ++row) {
      if (G(row, j) == 0) continue;
      if (G(row, j) < 0) {
        G.col(j) = -G.col(j);
        change.row(j) = -change.row(j);
      }
      break;
    }
  }

  HomologyBasis hb;
  hb.group.rank = mker - r2;
  std::vector<long> tslots;
  for (long j = 0; j < r2; ++j)
    if (fy.S(j, j) > 1) {
      hb.group.torsion.push_back(fy.S(j, j));
      tslots.push_back(j);
    }
  hb.free_generators = G.rightCols(mker - r2);
  hb.torsion_generators = IntMat(n, static_cast<long>(tslots.size()));
  for (std::size_t s = 0; s < tslots.size(); ++s)
    hb.torsion_generators.col(static_cast<long>(s)) = G.col(tslots[s]);
  hb.cycle_check = vtop;
  hb.to_quotient = vbot;
  hb.change = std::move(change);
  hb.inner_rank = r2;
  return hb;
}

HomologyGroup homology_at(const ChainComplex& C, long i) {
  return homology_basis(C, i).group;
}

std::vector<HomologyGroup> homology_all(const ChainComplex& C) {
  std::vector<HomologyGroup> out;
  out.reserve(C.ranks.size());
  for (long i = 0; i <= C.top_dimension(); ++i) out.push_back(homology_at(C, i));
  return out;
}

long euler_characteristic(const ChainComplex& C) {
  long chi = 0;
  for (std::size_t i = 0; i < C.ranks.size(); ++i)
    chi += (i % 2 == 0) ? C.ranks[i] : -C.ranks[i];
  return chi;
}

IntVec free_class_coordinates(const HomologyBasis& basis, const IntVec& z) {
  if (z.size() != basis.to_quotient.cols())
    throw std::invalid_argument("cycle vector has wrong length");
  for (long row = 0; row < basis.cycle_check.rows(); ++row) {
    Int acc = 0;
    for (long j = 0; j < z.size(); ++j) acc += basis.cycle_check(row, j) * z(j);
    if (acc != 0) throw std::invalid_argument("vector is not a cycle");
  }
  IntVec y = basis.change * (basis.to_quotient * z);
  return y.tail(y.size() - basis.inner_rank);
}

IntMat induced_map_on_homology(const ChainComplex& C, const ChainComplex& D,
                               const std::vector<IntMat>& f, long i) {
  const long top = C.top_dimension();
  if (static_cast<long>(f.size()) != top + 1)
    throw std::invalid_argument("chain map must cover every dimension of the source");
  for (long j = 0; j <= top; ++j) {
    const long want_rows = j <= D.top_dimension() ? D.ranks[j] : 0;
    if (f[j].rows() != want_rows || f[j].cols() != C.ranks[j])
      throw std::invalid_argument("chain map matrix shape mismatch at dimension " +
                                  std::to_string(j));
  }
  for (long j = 1; j <= top; ++j) {
    const IntMat lhs = j <= D.top_dimension()
                           ? IntMat(D.boundaries[j] * f[j])
                           : IntMat::Zero(f[j - 1].rows(), C.ranks[j]);
    const IntMat rhs = f[j - 1] * C.boundaries[j];
    if (!same_matrix(lhs, rhs)) throw NotAChainMapError(j);
  }
  if (i < 0 || i > top) throw std::out_of_range("homology dimension out of range");

  const HomologyBasis bc = homology_basis(C, i);
  if (i > D.top_dimension()) return IntMat::Zero(0, bc.group.rank);
  const HomologyBasis bd = homology_basis(D, i);
  IntMat M(bd.group.rank, bc.group.rank);
  for (long j = 0; j < bc.group.rank; ++j) {
    const IntVec z = f[i] * IntVec(bc.free_generators.col(j));
    M.col(j) = free_class_coordinates(bd, z);
  }
  return M;
}

Int determinant(const IntMat& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const long n = A.rows();
  if (n == 0) return 1;
  IntMat M = A;
  Int sign = 1, prev = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;  // exact
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

}  // namespace expcircle

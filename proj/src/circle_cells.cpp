#include "expcircle/circle_cells.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "expcircle/errors.hpp"

namespace expcircle {

namespace {

// Index of tau_i within dimension i, valid for 0 <= i: tau_0 is sigma_0.
long tau_index(long i) { return i == 0 ? 0 : 1; }

std::vector<long> sigma_faces(long i) {
  // Slots 0 and i close up onto tau_{i-1}; the middle slots are sigma_{i-1}.
  std::vector<long> f(i + 1, 0);
  f[0] = tau_index(i - 1);
  f[i] = tau_index(i - 1);
  for (long j = 1; j <= i - 1; ++j) f[j] = 0;  // sigma_{i-1}
  return f;
}

std::vector<long> tau_faces(long i, long tau_pos) {
  return std::vector<long>(i + 1, tau_pos);
}

void check_barycentric(const BarycentricPoint& w) {
  if (w.weights.empty()) throw std::invalid_argument("empty barycentric point");
  Rat sum(0);
  for (const auto& wi : w.weights) {
    if (wi < 0) throw std::invalid_argument("negative barycentric weight");
    sum += wi;
  }
  if (sum != 1) throw std::invalid_argument("barycentric weights must sum to 1");
}

void check_time(const Rat& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("time parameter outside [0, 1]");
}

// Kill the weight of vertex `s`, assuming vertices before s carry no weight.
std::vector<Rat> psi_stage(const std::vector<Rat>& w, long s, const Rat& u) {
  if (u == 0) return w;
  const Rat rest = 1 - w[s];
  std::vector<Rat> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (static_cast<long>(i) == s)
      out[i] = (1 - u) * w[i];
    else
      out[i] = (1 - u) * w[i] + u * w[i] / rest;
  }
  return out;
}

}  // namespace

DeltaComplex exp_cell_complex(long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  DeltaComplex X;
  X.cells.resize(k + 1);
  X.faces.resize(k + 1);
  X.cells[0] = {"sigma_0"};
  X.faces[0] = {{}};
  for (long i = 1; i <= k - 1; ++i) {
    X.cells[i] = {"sigma_" + std::to_string(i), "tau_" + std::to_string(i)};
    X.faces[i] = {sigma_faces(i), tau_faces(i, tau_index(i - 1))};
  }
  X.cells[k] = {"sigma_" + std::to_string(k)};
  X.faces[k] = {sigma_faces(k)};
  return X;
}

DeltaComplex expcupone_cell_complex(long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  DeltaComplex X;
  X.cells.resize(k);
  X.faces.resize(k);
  for (long i = 0; i <= k - 1; ++i) {
    X.cells[i] = {"tau_" + std::to_string(i)};
    X.faces[i] = {i == 0 ? std::vector<long>{} : std::vector<long>(i + 1, 0)};
  }
  return X;
}

DeltaComplex truncated_full_complex(long n_top) {
  if (n_top < 1) throw std::invalid_argument("truncation dimension must be positive");
  DeltaComplex X;
  X.cells.resize(n_top + 1);
  X.faces.resize(n_top + 1);
  X.cells[0] = {"sigma_0"};
  X.faces[0] = {{}};
  for (long i = 1; i <= n_top; ++i) {
    X.cells[i] = {"sigma_" + std::to_string(i), "tau_" + std::to_string(i)};
    X.faces[i] = {sigma_faces(i), tau_faces(i, tau_index(i - 1))};
  }
  return X;
}

IntMat closed_form_boundary(long i) {
  if (i < 1) throw std::invalid_argument("dimension must be positive");
  IntMat D(2, 2);
  const long c = (i % 2 == 0) ? 1 : 0;  // (1 + (-1)^i) / 2
  D << -c, 0, 2 * c, c;
  return D;
}

std::vector<std::vector<HomologyGroup>> exp_homology_table(long k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  std::vector<std::vector<HomologyGroup>> table;
  table.reserve(k_max);
  for (long k = 1; k <= k_max; ++k)
    table.push_back(homology_all(boundary_matrices(exp_cell_complex(k))));
  return table;
}

long sphere_dimension(long k) { return 2 * ((k + 1) / 2) - 1; }

std::vector<HomologyGroup> sphere_homology(long dim, long top) {
  if (dim < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  std::vector<HomologyGroup> h(top + 1);
  h[0].rank = 1;
  if (dim <= top) h[dim].rank += 1;
  return h;
}

std::vector<IntMat> inclusion_chain_map(long k_from, long k_to) {
  if (k_from < 1 || k_from >= k_to)
    throw std::invalid_argument("inclusion needs 1 <= k_from < k_to");
  std::vector<IntMat> f(k_from + 1);
  f[0] = IntMat::Identity(1, 1);
  for (long i = 1; i <= k_from - 1; ++i) f[i] = IntMat::Identity(2, 2);
  IntMat top(2, 1);
  top << 1, 0;  // sigma_{k_from} keeps its name; tau_{k_from} is not hit
  f[k_from] = top;
  return f;
}

std::vector<IntMat> union_basepoint_chain_map(long k) {
  if (k < 2) throw std::invalid_argument("basepoint union needs k >= 2");
  std::vector<IntMat> f(k);
  f[0] = IntMat::Identity(1, 1);
  for (long i = 1; i <= k - 2; ++i) {
    IntMat m(1, 2);
    m << 1, 1;  // sigma_i and tau_i both gain the basepoint: both land on tau_i
    f[i] = m;
  }
  f[k - 1] = IntMat::Identity(1, 1);  // sigma_{k-1} -> tau_{k-1}
  return f;
}

SimplexPoint prism_to_simplex(const PrismPoint& p) {
  check_time(p.t);
  const long k = static_cast<long>(p.a.size()) + 1;
  Rat prev(0);
  for (const auto& ai : p.a) {
    if (ai < prev || ai > 1)
      throw std::invalid_argument("prism coordinates must be nondecreasing in [0, 1]");
    prev = ai;
  }
  const Rat a_last = p.a.empty() ? Rat(0) : p.a.back();
  const Rat shift = (1 - a_last) * p.t;
  SimplexPoint s;
  s.x.resize(k);
  s.x[0] = shift;
  for (long i = 1; i < k; ++i) s.x[i] = p.a[i - 1] + shift;
  return s;
}

PrismPoint simplex_to_prism(const SimplexPoint& s) {
  const long k = static_cast<long>(s.x.size());
  if (k < 1) throw std::invalid_argument("empty simplex point");
  Rat prev(0);
  for (const auto& xi : s.x) {
    if (xi < prev || xi > 1)
      throw std::invalid_argument("simplex coordinates must be nondecreasing in [0, 1]");
    prev = xi;
  }
  const Rat denom = 1 - s.x.back() + s.x.front();
  if (denom == 0) throw FakeFaceError();
  PrismPoint p;
  p.a.resize(k - 1);
  for (long i = 1; i < k; ++i) p.a[i - 1] = s.x[i] - s.x[0];
  p.t = s.x[0] / denom;
  return p;
}

std::vector<Rat> monodromy_phi(const std::vector<Rat>& a) {
  if (a.empty()) return a;
  Rat prev(0);
  for (const auto& ai : a) {
    if (ai < prev || ai > 1)
      throw std::invalid_argument("prism coordinates must be nondecreasing in [0, 1]");
    prev = ai;
  }
  const long m = static_cast<long>(a.size());
  const Rat lift = 1 - a[m - 1];
  std::vector<Rat> out(m);
  out[0] = lift;
  for (long i = 1; i < m; ++i) out[i] = a[i - 1] + lift;
  return out;
}

int monodromy_orientation_sign(long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const long m = k - 1;
  IntMat L = IntMat::Zero(m, m);
  for (long i = 1; i < m; ++i) L(i, i - 1) = 1;
  for (long i = 0; i < m; ++i) L(i, m - 1) -= 1;
  const Int d = determinant(L);
  return d > 0 ? 1 : -1;  // phi is affine-invertible, so d is never 0
}

BarycentricPoint edge_retraction_psi(const BarycentricPoint& w, const Rat& t) {
  check_barycentric(w);
  check_time(t);
  if (t == 0) return w;
  if (w.weights[0] == 1)
    throw std::domain_error("input on the deleted face: all weight on vertex 0");
  return BarycentricPoint{psi_stage(w.weights, 0, t)};
}

BarycentricPoint composed_edge_retraction(const BarycentricPoint& w, const Rat& t) {
  check_barycentric(w);
  check_time(t);
  const long sz = static_cast<long>(w.weights.size());
  if (sz <= 2) return w;
  if (w.weights[sz - 2] == 0 && w.weights[sz - 1] == 0)
    throw std::domain_error("input on the deleted face: no weight on the target edge");
  const long stages = sz - 2;
  std::vector<Rat> cur = w.weights;
  for (long s = 0; s < stages; ++s) {
    Rat local = t * stages - Rat(s);
    if (local <= 0) break;
    if (local > 1) local = 1;
    cur = psi_stage(cur, s, local);
  }
  return BarycentricPoint{cur};
}

BarycentricPoint star_retraction(const BarycentricPoint& w, const Rat& t) {
  check_barycentric(w);
  check_time(t);
  const long n = static_cast<long>(w.weights.size());
  long zeros = 0;
  for (const auto& wi : w.weights)
    if (wi == 0) ++zeros;
  if (zeros > 1)
    throw std::domain_error("input on a codimension >= 2 face");
  if (n == 1) return w;

  // Sort weights descending (stable, so ties keep index order; on ties the
  // corresponding subdivision coordinate vanishes and the choice is immaterial).
  std::vector<long> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](long a, long b) { return w.weights[a] > w.weights[b]; });

  // Coordinates in the subdivision simplex [c_0, ..., c_{n-1}], where c_j is
  // the barycentre of the top j+1 coordinates.
  BarycentricPoint mu;
  mu.weights.resize(n);
  for (long j = 0; j < n - 1; ++j)
    mu.weights[j] = Rat(j + 1) * (w.weights[idx[j]] - w.weights[idx[j + 1]]);
  mu.weights[n - 1] = Rat(n) * w.weights[idx[n - 1]];

  const BarycentricPoint moved = composed_edge_retraction(mu, t);

  std::vector<Rat> out(n, Rat(0));
  Rat acc(0);
  for (long r = n - 1; r >= 0; --r) {
    acc += moved.weights[r] / Rat(r + 1);
    out[idx[r]] = acc;
  }
  return BarycentricPoint{out};
}

bool on_star_graph(const BarycentricPoint& w) {
  check_barycentric(w);
  const long n = static_cast<long>(w.weights.size());
  if (n == 1) return true;
  std::vector<Rat> d = w.weights;
  std::sort(d.begin(), d.end(), [](const Rat& a, const Rat& b) { return a > b; });
  return d[0] == d[n - 2];
}

}  // namespace expcircle

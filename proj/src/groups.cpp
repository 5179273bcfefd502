#include "expcircle/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace expcircle {

namespace {

void reduce_in_place(std::vector<int>& w) {
  std::size_t top = 0;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word letter 0 is not a generator");
    if (top > 0 && w[top - 1] == -x) {
      --top;
    } else {
      w[top++] = x;
    }
  }
  w.resize(top);
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  reduce_in_place(letters_);
}

Word Word::power(int gen, long exp) {
  if (gen < 0) throw std::invalid_argument("negative generator index");
  std::vector<int> letters;
  int letter = exp >= 0 ? gen + 1 : -(gen + 1);
  for (long i = 0, n = std::labs(exp); i < n; ++i) letters.push_back(letter);
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& x : rev) x = -x;
  Word w;
  w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<int> cat = a.letters_;
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(cat));
}

void GroupPresentation::validate() const {
  long g = static_cast<long>(generators.size());
  for (const Word& r : relators) {
    for (int x : r.letters()) {
      long idx = std::labs(static_cast<long>(x)) - 1;
      if (idx >= g) throw std::invalid_argument("relator references an undeclared generator");
    }
  }
}

void LaurentPolynomial::add_term(long exp, const Int& c) {
  if (c == 0) return;
  Int& slot = coeffs[exp];
  slot += c;
  if (slot == 0) coeffs.erase(exp);
}

LaurentPolynomial laurent_add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.coeffs) out.add_term(e, c);
  return out;
}

LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial laurent_normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  long low = p.coeffs.begin()->first;
  bool flip = p.coeffs.rbegin()->second < 0;
  LaurentPolynomial out;
  for (const auto& [e, c] : p.coeffs) out.coeffs[e - low] = flip ? Int(-c) : c;
  return out;
}

namespace {

// Dense coefficient list c[0..deg], c[deg] != 0, for polynomials in t.
using Poly = std::vector<Int>;

Poly to_poly(const LaurentPolynomial& p) {
  LaurentPolynomial n = laurent_normalize(p);
  long deg = n.coeffs.rbegin()->first;
  Poly out(static_cast<std::size_t>(deg) + 1, Int(0));
  for (const auto& [e, c] : n.coeffs) out[static_cast<std::size_t>(e)] = c;
  return out;
}

void strip_leading_zeros(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const Poly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Poly& p) {
  Int g = content(p);
  if (g <= 1) return;
  for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), made primitive afterwards.
Poly pseudo_rem(Poly a, const Poly& b) {
  const Int& lead = b.back();
  while (a.size() >= b.size()) {
    Int q = a.back();
    std::size_t shift = a.size() - b.size();
    // lead * a - q * t^shift * b cancels the top term; scale the rest of a.
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      a[i] *= lead;
      if (i >= shift) a[i] -= q * b[i - shift];
    }
    a.pop_back();
    strip_leading_zeros(a);
    make_primitive(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return laurent_normalize(b);
  if (b.is_zero()) return laurent_normalize(a);
  Poly pa = to_poly(a);
  Poly pb = to_poly(b);
  Int ca = content(pa);
  Int cb = content(pb);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  make_primitive(pa);
  make_primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    Poly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = std::move(r);
  }
  LaurentPolynomial out;
  for (std::size_t i = 0; i < pa.size(); ++i) out.add_term(static_cast<long>(i), pa[i] * cg);
  return laurent_normalize(out);
}

Int laurent_evaluate(const LaurentPolynomial& p, const Int& x) {
  Int total = 0;
  for (const auto& [e, c] : p.coeffs) {
    if (e < 0) throw std::invalid_argument("evaluation needs nonnegative exponents");
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    total += c * pw;
  }
  return total;
}

GroupPresentation complement_group(long k) {
  if (k < 2) throw std::invalid_argument("complement_group needs k >= 2");
  std::vector<int> letters;
  for (long i = 0; i < k; ++i) letters.push_back(1);
  for (long i = 0; i < k - 1; ++i) letters.push_back(-2);
  GroupPresentation G;
  G.generators = {"alpha", "beta"};
  G.relators = {Word(std::move(letters))};
  return G;
}

GroupPresentation pi1_exp3() {
  GroupPresentation G;
  G.generators = {"a", "b"};
  G.relators = {Word({1}), Word({1, 1, -2})};
  return G;
}

namespace {

// Column e of the matrix is the exponent-sum vector of relator e.
IntMat exponent_matrix(const GroupPresentation& G) {
  long g = static_cast<long>(G.generators.size());
  long r = static_cast<long>(G.relators.size());
  IntMat E = IntMat::Zero(g, r);
  for (long j = 0; j < r; ++j)
    for (int x : G.relators[static_cast<std::size_t>(j)].letters()) {
      long idx = std::labs(static_cast<long>(x)) - 1;
      E(idx, j) += x > 0 ? 1 : -1;
    }
  return E;
}

}  // namespace

AbelianGroup abelianization(const GroupPresentation& G) {
  G.validate();
  long g = static_cast<long>(G.generators.size());
  AbelianGroup out;
  if (G.relators.empty()) {
    out.rank = g;
    return out;
  }
  SNFResult snf = smith_normal_form(exponent_matrix(G));
  long rank = 0;
  long m = std::min(snf.S.rows(), snf.S.cols());
  for (long i = 0; i < m; ++i) {
    if (snf.S(i, i) == 0) break;
    ++rank;
    if (snf.S(i, i) > 1) out.torsion.push_back(snf.S(i, i));
  }
  out.rank = g - rank;
  return out;
}

namespace {

// Replaces generator `gen` (0-based) by `rep` everywhere, then removes the
// generator, shifting the indices above it down by one.
Word substitute(const Word& w, int gen, const Word& rep) {
  Word out;
  Word rep_inv = rep.inverse();
  for (int x : w.letters()) {
    int idx = std::abs(x) - 1;
    if (idx == gen) {
      out = out * (x > 0 ? rep : rep_inv);
    } else {
      out = out * Word({x});
    }
  }
  std::vector<int> shifted;
  for (int x : out.letters()) {
    int idx = std::abs(x) - 1;
    if (idx == gen) throw std::logic_error("substitution left the eliminated generator behind");
    if (idx > gen) idx -= 1;
    shifted.push_back(x > 0 ? idx + 1 : -(idx + 1));
  }
  return Word(std::move(shifted));
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& G) {
  G.validate();
  GroupPresentation cur = G;
  for (;;) {
    // Drop relators that reduced to the empty word.
    std::vector<Word> kept;
    for (const Word& r : cur.relators)
      if (!r.empty()) kept.push_back(r);
    cur.relators = std::move(kept);

    // Prefer eliminating via the shortest usable relator.
    std::vector<std::size_t> order(cur.relators.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cur.relators[a].length() < cur.relators[b].length();
    });

    bool eliminated = false;
    for (std::size_t ri : order) {
      const Word& r = cur.relators[ri];
      for (std::size_t pos = 0; pos < r.letters().size() && !eliminated; ++pos) {
        int x = r.letters()[pos];
        int gen = std::abs(x) - 1;
        int occurrences = 0;
        for (int y : r.letters())
          if (std::abs(y) == std::abs(x)) ++occurrences;
        if (occurrences != 1) continue;

        // r = u x v with x = gen^{+-1}; solve for the generator.
        std::vector<int> u(r.letters().begin(), r.letters().begin() + static_cast<long>(pos));
        std::vector<int> v(r.letters().begin() + static_cast<long>(pos) + 1, r.letters().end());
        Word wu{std::vector<int>(u)}, wv{std::vector<int>(v)};
        Word rep = x > 0 ? wu.inverse() * wv.inverse() : wv * wu;

        GroupPresentation next;
        next.generators = cur.generators;
        next.generators.erase(next.generators.begin() + gen);
        for (std::size_t j = 0; j < cur.relators.size(); ++j) {
          if (j == ri) continue;
          next.relators.push_back(substitute(cur.relators[j], gen, rep));
        }
        cur = std::move(next);
        eliminated = true;
      }
      if (eliminated) break;
    }
    if (!eliminated) break;
  }
  return cur;
}

std::vector<long> abelianization_to_z(const GroupPresentation& G) {
  G.validate();
  AbelianGroup ab = abelianization(G);
  if (ab.rank != 1 || !ab.torsion.empty())
    throw std::invalid_argument("abelianization is not infinite cyclic");
  long g = static_cast<long>(G.generators.size());
  long rank_s = g - 1;  // rank of the exponent matrix, since ab has rank 1
  std::vector<long> n(static_cast<std::size_t>(g), 0);
  if (G.relators.empty()) {
    // g == 1 here: the free group on one generator.
    n[0] = 1;
    return n;
  }
  SNFResult snf = smith_normal_form(exponent_matrix(G));
  // Row `rank_s` of U spans the annihilator of the relator columns, which is
  // exactly the induced map onto the free quotient.
  long sign = 0;
  for (long i = 0; i < g; ++i) {
    const Int& e = snf.U(rank_s, i);
    if (sign == 0 && e != 0) sign = e > 0 ? 1 : -1;
    if (!e.fits_slong_p()) throw std::overflow_error("abelianization exponent overflow");
    n[static_cast<std::size_t>(i)] = e.get_si();
  }
  if (sign < 0)
    for (long& v : n) v = -v;
  return n;
}

LaurentPolynomial fox_derivative_abelianized(const GroupPresentation& G, int gen) {
  if (G.relators.size() != 1) throw std::invalid_argument("needs exactly one relator");
  std::vector<long> n = abelianization_to_z(G);
  LaurentPolynomial out;
  long prefix = 0;  // abelianized image exponent of the prefix read so far
  for (int x : G.relators[0].letters()) {
    int idx = std::abs(x) - 1;
    long nx = n[static_cast<std::size_t>(idx)];
    if (x > 0) {
      if (idx == gen) out.add_term(prefix, Int(1));
      prefix += nx;
    } else {
      prefix -= nx;
      if (idx == gen) out.add_term(prefix, Int(-1));
    }
  }
  return out;
}

LaurentPolynomial fox_alexander(const GroupPresentation& G) {
  G.validate();
  if (G.generators.size() != 2 || G.relators.size() != 1)
    throw std::invalid_argument("needs two generators and one relator");
  AbelianGroup ab = abelianization(G);
  if (ab.rank != 1 || !ab.torsion.empty())
    throw std::invalid_argument("abelianization is not infinite cyclic");
  LaurentPolynomial d0 = fox_derivative_abelianized(G, 0);
  LaurentPolynomial d1 = fox_derivative_abelianized(G, 1);
  return laurent_gcd(d0, d1);
}

std::vector<long> seifert_alpha_solutions() {
  std::vector<long> out;
  for (long a = -10; a <= 10; ++a)
    if (std::labs(2 * a + 3) == 1) out.push_back(a);
  return out;
}

SeifertData seifert_reverse(const SeifertData& M) {
  SeifertData out = M;
  for (Rat& s : out.slopes) s = -s;
  return out;
}

Rat seifert_euler_number(const SeifertData& M) {
  Rat total = make_rat(0);
  for (const Rat& s : M.slopes) total += s;
  return total;
}

bool seifert_equivalent(const SeifertData& a, const SeifertData& b) {
  if (a.genus != b.genus || a.boundary_count != b.boundary_count)
    throw std::invalid_argument("Seifert data over different base orbifolds");
  std::vector<Rat> fa, fb;
  for (const Rat& s : a.slopes) fa.push_back(mod1(s));
  for (const Rat& s : b.slopes) fb.push_back(mod1(s));
  auto lt = [](const Rat& x, const Rat& y) { return x < y; };
  std::sort(fa.begin(), fa.end(), lt);
  std::sort(fb.begin(), fb.end(), lt);
  return fa == fb && seifert_euler_number(a) == seifert_euler_number(b);
}

SurfaceCurve dehn_twist(const SurfaceCurve& c) {
  if (std::gcd(c.p, c.q) != 1) throw std::invalid_argument("(p, q) must be coprime");
  return SurfaceCurve{c.p - c.q, c.q};
}

Word attaching_word(long k) {
  if (k < 2) throw std::invalid_argument("attaching_word needs k >= 2");
  std::vector<int> letters;
  for (long i = 0; i < k - 1; ++i) letters.push_back(1);
  letters.push_back(3);
  for (long i = 0; i < k; ++i) letters.push_back(-2);
  letters.push_back(-3);
  return Word(std::move(letters));
}

}  // namespace expcircle

#pragma once

#include <map>
#include <string>
#include <vector>

#include "expcircle/complexes.hpp"
#include "expcircle/numeric.hpp"

namespace expcircle {

// Freely reduced word: letter +g stands for generator g-1, -g for its inverse
// (g >= 1). Construction performs free reduction, so equality is exact.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  // g^e for the 0-based generator index g.
  static Word power(int gen, long exp);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long length() const { return static_cast<long>(letters_.size()); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<int> letters_;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void validate() const;  // every letter references a declared generator
};

using AbelianGroup = HomologyGroup;

// Finitely many integer coefficients indexed by integer exponents of t.
struct LaurentPolynomial {
  std::map<long, Int> coeffs;  // nonzero coefficients only

  bool is_zero() const { return coeffs.empty(); }
  void add_term(long exp, const Int& c);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }
};

LaurentPolynomial laurent_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Shift the lowest exponent to 0 and make the leading coefficient positive
// (the normal form of a polynomial defined up to units of Z[t, 1/t]).
LaurentPolynomial laurent_normalize(const LaurentPolynomial& p);

// Greatest common divisor in Z[t, 1/t], returned in normalized primitive form.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

Int laurent_evaluate(const LaurentPolynomial& p, const Int& x);  // needs exponents >= 0

// <alpha, beta | alpha^k beta^-(k-1)> for k >= 2.
GroupPresentation complement_group(long k);

// <a, b | a, a^2 b^-1>.
GroupPresentation pi1_exp3();

// Structure of G made abelian: SNF of the relator exponent matrix.
AbelianGroup abelianization(const GroupPresentation& G);

// Repeatedly eliminates a generator occurring exactly once (exponent +-1) in
// some relator; preserves the isomorphism type.
GroupPresentation tietze_simplify(const GroupPresentation& G);

// The image exponents of the generators under an isomorphism of the
// abelianization with Z (sign-normalised); throws std::invalid_argument when
// the abelianization is not infinite cyclic.
std::vector<long> abelianization_to_z(const GroupPresentation& G);

// Fox derivative of the single relator with respect to generator `gen`,
// pushed through the abelianization-to-Z map (generator g_i -> t^{n_i}).
LaurentPolynomial fox_derivative_abelianized(const GroupPresentation& G, int gen);

// Alexander polynomial of a two-generator one-relator presentation with
// infinite cyclic abelianization: the gcd of the two abelianized Fox
// derivatives, normalized.
LaurentPolynomial fox_alexander(const GroupPresentation& G);

// All integers a with |2a + 3| = 1.
std::vector<long> seifert_alpha_solutions();

// Orbit data plus exceptional slopes. Negative genus encodes a nonorientable
// orbit surface; slopes are exact reduced rationals.
struct SeifertData {
  long genus = 0;
  long boundary_count = 0;
  std::vector<Rat> slopes;
};

// Orientation reversal: negate every slope.
SeifertData seifert_reverse(const SeifertData& M);

// Sum of the slopes.
Rat seifert_euler_number(const SeifertData& M);

// Same oriented Seifert invariants under the moves that shift slopes mod 1
// while keeping their sum: equal slope fractional-part multisets and equal
// Euler numbers. Requires matching genus and boundary count.
bool seifert_equivalent(const SeifertData& a, const SeifertData& b);

struct SurfaceCurve {
  long p = 0;
  long q = 0;
};

// The twist matrix [[1, -1], [0, 1]] acting on (p, q).
SurfaceCurve dehn_twist(const SurfaceCurve& c);

// The attaching word a^{k-1} c b^{-k} c^{-1} of the top cell over generators
// a, b, c (indices 0, 1, 2); exposed as data only.
Word attaching_word(long k);

}  // namespace expcircle

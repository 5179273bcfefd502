#include "expcircle/numeric.hpp"

#include <stdexcept>

namespace expcircle {

Rat make_rat(long p, long q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat mod1(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return x - Rat(fl);
}

std::string rat_to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational string: " + s);
  }
}

}  // namespace expcircle

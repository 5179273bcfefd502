#include "expcircle/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace expcircle {

FiniteSubset::FiniteSubset(std::vector<CirclePoint> points, long capacity)
    : points_(std::move(points)), capacity_(capacity) {
  if (capacity_ < 1) throw std::invalid_argument("capacity must be positive");
  if (points_.empty()) throw std::invalid_argument("empty input list");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (static_cast<long>(points_.size()) > capacity_)
    throw std::invalid_argument("more points than capacity");
}

FiniteSubset quotient_tuple(const std::vector<CirclePoint>& xs, long k) {
  if (xs.empty()) throw std::invalid_argument("empty input list");
  if (static_cast<long>(xs.size()) > k)
    throw std::invalid_argument("tuple longer than capacity");
  return FiniteSubset(xs, k);
}

FiniteSubset rotate(const FiniteSubset& s, const Rat& theta) {
  std::vector<CirclePoint> out;
  out.reserve(s.points().size());
  for (const auto& p : s.points()) out.emplace_back(p.angle() + theta);
  return FiniteSubset(std::move(out), s.capacity());
}

long stabilizer_order(const FiniteSubset& s) {
  // A stabilizing rotation permutes the points freely, so the order divides |s|.
  const long n = s.size();
  for (long m = n; m >= 2; --m) {
    if (n % m != 0) continue;
    if (rotate(s, make_rat(1, m)) == s) return m;
  }
  return 1;
}

FiniteSubset apply_power_map(const FiniteSubset& s, long d) {
  std::vector<CirclePoint> out;
  out.reserve(s.points().size());
  for (const auto& p : s.points()) out.emplace_back(Rat(d * p.angle()));
  return FiniteSubset(std::move(out), s.capacity());
}

FiniteSubset union_with_basepoint(const FiniteSubset& s, long k) {
  if (s.size() > k - 1) throw std::invalid_argument("capacity violation");
  auto pts = s.points();
  pts.emplace_back(CirclePoint());
  return FiniteSubset(std::move(pts), k);
}

}  // namespace expcircle

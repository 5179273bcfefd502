#pragma once

#include <vector>

#include "expcircle/numeric.hpp"

namespace expcircle {

// A point of the circle as an exact angle in [0, 1), standing for e^{2*pi*i*angle}.
class CirclePoint {
 public:
  CirclePoint() : angle_(0) {}
  explicit CirclePoint(const Rat& angle) : angle_(mod1(angle)) {}
  CirclePoint(long p, long q) : angle_(mod1(make_rat(p, q))) {}

  const Rat& angle() const { return angle_; }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.angle_ == b.angle_;
  }
  friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return !(a == b); }
  friend bool operator<(const CirclePoint& a, const CirclePoint& b) {
    return a.angle_ < b.angle_;
  }

 private:
  Rat angle_;
};

// Nonempty subset of the circle with at most `capacity` points, sorted ascending.
// Immutable after construction; the constructor sorts and deduplicates.
class FiniteSubset {
 public:
  FiniteSubset(std::vector<CirclePoint> points, long capacity);

  long capacity() const { return capacity_; }
  long size() const { return static_cast<long>(points_.size()); }
  const std::vector<CirclePoint>& points() const { return points_; }

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.capacity_ == b.capacity_ && a.points_ == b.points_;
  }
  friend bool operator!=(const FiniteSubset& a, const FiniteSubset& b) { return !(a == b); }

 private:
  std::vector<CirclePoint> points_;
  long capacity_;
};

// (x_1, ..., x_m) -> {x_1} u ... u {x_m} with capacity k; m <= k required.
FiniteSubset quotient_tuple(const std::vector<CirclePoint>& xs, long k);

FiniteSubset rotate(const FiniteSubset& s, const Rat& theta);

// Largest m with rotate(s, 1/m) == s; always divides |s|.
long stabilizer_order(const FiniteSubset& s);

// Image under angle -> d*angle mod 1; the image may have fewer points.
FiniteSubset apply_power_map(const FiniteSubset& s, long d);

// s u {basepoint}, capacity k; requires |s| <= k-1.
FiniteSubset union_with_basepoint(const FiniteSubset& s, long k);

}  // namespace expcircle

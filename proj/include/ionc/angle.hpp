// Copyright 2026 The ionc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <numbers>

namespace ionc {

/// Comparison tolerance for angles, in units of pi.
inline constexpr double kAngleEps = 1e-9;

/**
 * A rotation angle stored in units of pi and kept in [0, period).
 *
 * The period is 2 (a full turn) for every parameter except the controlled
 * rotation CRy, whose unitary only repeats after 4 pi. All arithmetic wraps, so
 * `Angle(0.3) + Angle(1.7)` is zero. Classification predicates compare on the
 * circle with tolerance `kAngleEps`, which means a value like 1.9999999999
 * counts as zero.
 */
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double half_turns) : value_(wrap(half_turns, 2.0)) {}
  Angle(double half_turns, double period) : value_(wrap(half_turns, period)), period_(period) {}

  static Angle from_radians(double rad) { return Angle(rad / std::numbers::pi); }

  double period() const { return period_; }

  /// Value in units of pi, in [0, period).
  double half_turns() const { return value_; }
  double radians() const { return value_ * std::numbers::pi; }

  /// Shortest circular distance to `other`, in units of pi.
  double distance(Angle other) const {
    double d = std::fabs(value_ - wrap(other.value_, period_));
    return d > period_ / 2 ? period_ - d : d;
  }

  bool near(Angle other, double eps = kAngleEps) const { return distance(other) <= eps; }
  bool near(double half_turns, double eps = kAngleEps) const {
    return near(Angle(half_turns, period_), eps);
  }

  bool is_zero(double eps = kAngleEps) const { return near(0.0, eps); }
  bool is_pi_multiple(double eps = kAngleEps) const { return is_zero(eps) || near(1.0, eps); }
  bool is_half_pi_multiple(double eps = kAngleEps) const {
    return is_pi_multiple(eps) || near(0.5, eps) || near(1.5, eps);
  }

  Angle operator-() const { return Angle(-value_, period_); }
  Angle operator+(Angle o) const { return Angle(value_ + o.value_, period_); }
  Angle operator-(Angle o) const { return Angle(value_ - o.value_, period_); }
  Angle operator*(double k) const { return Angle(value_ * k, period_); }
  Angle& operator+=(Angle o) { return *this = *this + o; }
  Angle& operator-=(Angle o) { return *this = *this - o; }

 private:
  static double wrap(double v, double period) {
    double r = std::fmod(v, period);
    if (r < 0.0) r += period;
    // fmod of a tiny negative value can round up to exactly the period.
    if (r >= period || period - r < 1e-13) r = 0.0;
    return r;
  }

  double value_ = 0.0;
  double period_ = 2.0;
};

}  // namespace ionc

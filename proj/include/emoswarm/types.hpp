#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emoswarm {

enum class ErrorCode {
  InvalidArgument,
  DuplicatePosition,
  OutOfDomain,
  ZeroMass,
  NonpositiveSigma,
  BadMargin,
  WrongKind,
  BadTimestep,
  PlacementFailure,
  TooShort,
  MalformedLog,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return Vec2{a.x / s, a.y / s}; }
  friend constexpr Vec2 operator-(const Vec2& a) { return Vec2{-a.x, -a.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
constexpr double squared_norm(const Vec2& a) { return dot(a, a); }

/// Axis-aligned rectangular workspace, in meters.
struct Domain {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  static Domain from_size(double width, double height);

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double min_side() const { return std::min(width(), height()); }
  Vec2 center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
  bool contains(const Vec2& q) const {
    return q.x >= x_min && q.x <= x_max && q.y >= y_min && q.y <= y_max;
  }
  bool strictly_contains(const Vec2& q) const {
    return q.x > x_min && q.x < x_max && q.y > y_min && q.y < y_max;
  }
  /// Throws InvalidArgument unless x_min < x_max and y_min < y_max.
  void validate() const;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Maps any angle into [-pi, pi).
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = a - two_pi * std::floor((a + std::numbers::pi) / two_pi);
  if (r >= std::numbers::pi) r -= two_pi;
  if (r < -std::numbers::pi) r = -std::numbers::pi;
  return r;
}

}  // namespace emoswarm

#pragma once

#include <array>

#include "shadowpack/rational.hpp"

namespace shadowpack {

struct Vec3 {
  Rat x, y, z;

  Vec3() = default;
  Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }

  const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

struct Vec2 {
  Rat x, y;

  Vec2() = default;
  Vec2(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// z = c0 + cx*x + cy*y over the plane; the building block of the
/// shadow engine's entry/exit sheets.
struct Affine2 {
  Rat c0, cx, cy;

  Rat eval(const Vec2& p) const { return c0 + cx * p.x + cy * p.y; }
  Affine2 operator-(const Affine2& o) const { return {c0 - o.c0, cx - o.cx, cy - o.cy}; }
  bool operator==(const Affine2& o) const { return c0 == o.c0 && cx == o.cx && cy == o.cy; }
};

}  // namespace shadowpack

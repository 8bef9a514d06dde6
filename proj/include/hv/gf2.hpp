#pragma once

#include "hv/rational.hpp"

namespace hv {

// The two-element field. Arithmetic is total; division by zero is the
// caller's bug and asserts via internal_error at the one call site that can
// reach it (monic scaling of a zero polynomial).
struct GF2 {
  unsigned char v = 0;

  GF2() = default;
  explicit GF2(int x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}
  explicit GF2(const Integer& z) : v(static_cast<unsigned char>(z % 2 == 0 ? 0 : 1)) {}

  friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
  friend GF2 operator/(GF2 a, GF2 b) { return GF2(a.v & b.v); }  // b == 1 in all uses
  GF2 operator-() const { return *this; }
  friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
  friend bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_integer(const Integer& z) { return Rational(z); }
  static constexpr const char* name() { return "Q"; }
};

template <>
struct field_traits<GF2> {
  static GF2 zero() { return GF2(0); }
  static GF2 one() { return GF2(1); }
  static GF2 from_integer(const Integer& z) { return GF2(z); }
  static constexpr const char* name() { return "F2"; }
};

}  // namespace hv

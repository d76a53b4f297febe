#pragma once

// Exact lattice points and integer covectors in rank-1 or rank-2 ambient
// space. Shared by the abelianisation and polytope layers.

#include <array>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace onerel {

struct LatticePoint {
  int rank;                      // 1 or 2
  std::array<long long, 2> v{};  // v[1] == 0 when rank == 1

  static LatticePoint zero(int rank) {
    if (rank != 1 && rank != 2) throw std::invalid_argument("rank must be 1 or 2");
    return LatticePoint{rank, {0, 0}};
  }
  static LatticePoint of(long long a) { return LatticePoint{1, {a, 0}}; }
  static LatticePoint of(long long a, long long b) { return LatticePoint{2, {a, b}}; }

  friend LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) {
    if (p.rank != q.rank) throw std::invalid_argument("rank mismatch");
    return LatticePoint{p.rank, {p.v[0] + q.v[0], p.v[1] + q.v[1]}};
  }
  friend LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) {
    if (p.rank != q.rank) throw std::invalid_argument("rank mismatch");
    return LatticePoint{p.rank, {p.v[0] - q.v[0], p.v[1] - q.v[1]}};
  }
  LatticePoint operator-() const { return LatticePoint{rank, {-v[0], -v[1]}}; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Covector {
  int rank;
  std::array<long long, 2> v{};

  static Covector of(long long a) { return Covector{1, {a, 0}}; }
  static Covector of(long long a, long long b) { return Covector{2, {a, b}}; }

  bool is_zero() const { return v[0] == 0 && v[1] == 0; }

  long long dot(const LatticePoint& p) const {
    if (rank != p.rank) throw std::invalid_argument("rank mismatch");
    return v[0] * p.v[0] + v[1] * p.v[1];
  }

  friend auto operator<=>(const Covector&, const Covector&) = default;
};

// Oriented area of the pair; rank-2 only.
inline long long cross(const Covector& a, const Covector& b) {
  return a.v[0] * b.v[1] - a.v[1] * b.v[0];
}
inline long long dot(const Covector& a, const Covector& b) {
  return a.v[0] * b.v[0] + a.v[1] * b.v[1];
}

// cross(a - o, b - o) for points; > 0 means o -> a -> b turns left.
inline long long orient(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.v[0] - o.v[0]) * (b.v[1] - o.v[1]) - (a.v[1] - o.v[1]) * (b.v[0] - o.v[0]);
}

inline long long gcd_ll(long long a, long long b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

inline Covector primitive(Covector c) {
  const long long g = gcd_ll(c.v[0], c.v[1]);
  if (g > 1) {
    c.v[0] /= g;
    c.v[1] /= g;
  }
  return c;
}

}  // namespace onerel

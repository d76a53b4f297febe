#pragma once

// Exact integral-polytope algebra in rank 1 and 2: convex hulls, Minkowski
// sums, the polytope (Grothendieck) group and its translation quotient,
// normal fans (faces and their duals), thickness along covectors, and
// resolution of virtual polytopes into single ones.

#include <optional>
#include <span>
#include <vector>

#include "onerel/lattice.hpp"

namespace onerel {

// Vertices are exactly the extreme points of the hull, stored canonically:
// counterclockwise starting at the lexicographically minimal vertex in rank
// 2, ordered endpoints in rank 1. Degenerate inputs yield point or segment
// polytopes; every operation accepts them.
class IntegralPolytope {
public:
  static IntegralPolytope hull(std::span<const LatticePoint> points);
  static IntegralPolytope point(const LatticePoint& p);

  int rank() const { return rank_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  bool contains(const LatticePoint& p) const;
  long long max_support(const Covector& phi) const;
  long long min_support(const Covector& phi) const;
  long long width(const Covector& phi) const;  // max - min

  IntegralPolytope translated(const LatticePoint& t) const;
  LatticePoint lexmin_vertex() const { return vertices_.front(); }

  friend bool operator==(const IntegralPolytope&, const IntegralPolytope&) = default;

private:
  IntegralPolytope() = default;

  int rank_ = 0;
  std::vector<LatticePoint> vertices_;
};

IntegralPolytope minkowski_sum(const IntegralPolytope& p, const IntegralPolytope& q);

// Image under an integer linear map (rows act on rank-2 points). Intended for
// unimodular changes of basis of H, but exact for any integer matrix.
IntegralPolytope linear_image(const std::array<std::array<long long, 2>, 2>& m,
                              const IntegralPolytope& p);

// positive - negative in the polytope group P(H); equal to another pair
// exactly when the Minkowski cross-sums coincide.
struct VirtualPolytope {
  IntegralPolytope positive;
  IntegralPolytope negative;

  int rank() const { return positive.rank(); }
};

VirtualPolytope make_virtual(IntegralPolytope positive, IntegralPolytope negative);

// Grothendieck relation: P - Q == P' - Q'  iff  P + Q' == P' + Q.
bool virtual_equal(const VirtualPolytope& a, const VirtualPolytope& b);

// An element of P_T(H) = P(H)/H. The representative is normalised by
// translating positive and negative so each has its lexicographically
// minimal vertex at the origin.
class TranslationClass {
public:
  explicit TranslationClass(VirtualPolytope v);

  const VirtualPolytope& representative() const { return rep_; }
  int rank() const { return rep_.rank(); }

private:
  VirtualPolytope rep_;
};

// Classes are equal when the cross-sums agree up to one lattice translation.
bool class_equal(const TranslationClass& a, const TranslationClass& b);

TranslationClass class_sum(const TranslationClass& a, const TranslationClass& b);
TranslationClass linear_image(const std::array<std::array<long long, 2>, 2>& m,
                              const TranslationClass& c);

// Finds the integral polytope C with C + negative == positive when one
// exists (support-wise erosion of positive by negative, then an exact
// Minkowski verification); otherwise nullopt and the element is genuinely
// virtual.
std::optional<IntegralPolytope> resolve_single(const VirtualPolytope& v);

// width(positive) - width(negative) along phi; negative values occur for
// genuinely virtual elements. Extends to a homomorphism P_T(H) -> Z.
long long thickness(const VirtualPolytope& v, const Covector& phi);

// --- normal fan -----------------------------------------------------------
//
// The phi-face F_phi(P) is the set of phi-minimisers in P. A dual of a face
// is a connected component of { phi != 0 : F_phi(P) = F }. The dual sets of
// all faces partition the punctured covector space.

struct DualComponent {
  enum class Kind {
    ray,          // { t*a : t > 0 }
    sector,       // { s*a + t*b : s, t > 0 }, cross(a, b) > 0
    half_plane,   // { phi : dot(a, phi) > 0 }
    all_nonzero,  // every nonzero covector (rank-2 point polytope)
  };

  Kind kind;
  Covector a{2, {0, 0}};
  Covector b{2, {0, 0}};
};

bool contains(const DualComponent& d, const Covector& phi);

struct FaceDuals {
  IntegralPolytope face;
  std::vector<DualComponent> duals;
};

std::vector<FaceDuals> faces_and_duals(const IntegralPolytope& p);

// The phi-face computed directly from the vertex set (for cross-checks).
IntegralPolytope face_of(const IntegralPolytope& p, const Covector& phi);

}  // namespace onerel

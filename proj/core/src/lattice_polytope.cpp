#include "onerel/lattice_polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace onerel {

namespace {

void require_rank(int rank) {
  if (rank != 1 && rank != 2) throw std::invalid_argument("rank must be 1 or 2");
}

// Strict monotone chain: collinear points are dropped, result is
// counterclockwise starting at the lexicographic minimum.
std::vector<LatticePoint> hull2(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n == 1) return pts;

  bool collinear = true;
  for (std::size_t i = 2; i < n && collinear; ++i) {
    collinear = orient(pts[0], pts[1], pts[i]) == 0;
  }
  if (collinear) return {pts.front(), pts.back()};

  std::vector<LatticePoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

IntegralPolytope IntegralPolytope::hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const int rank = points.front().rank;
  require_rank(rank);
  for (const LatticePoint& p : points) {
    if (p.rank != rank) throw std::invalid_argument("rank mismatch in hull input");
  }
  IntegralPolytope out;
  out.rank_ = rank;
  if (rank == 1) {
    long long lo = points.front().v[0], hi = lo;
    for (const LatticePoint& p : points) {
      lo = std::min(lo, p.v[0]);
      hi = std::max(hi, p.v[0]);
    }
    out.vertices_.push_back(LatticePoint::of(lo));
    if (hi != lo) out.vertices_.push_back(LatticePoint::of(hi));
    return out;
  }
  out.vertices_ = hull2(std::vector<LatticePoint>(points.begin(), points.end()));
  return out;
}

IntegralPolytope IntegralPolytope::point(const LatticePoint& p) {
  return hull(std::span<const LatticePoint>(&p, 1));
}

bool IntegralPolytope::contains(const LatticePoint& p) const {
  if (p.rank != rank_) throw std::invalid_argument("rank mismatch");
  if (rank_ == 1) {
    return vertices_.front().v[0] <= p.v[0] && p.v[0] <= vertices_.back().v[0];
  }
  if (vertices_.size() == 1) return p == vertices_.front();
  if (vertices_.size() == 2) {
    const LatticePoint& a = vertices_[0];
    const LatticePoint& b = vertices_[1];
    if (orient(a, b, p) != 0) return false;
    return std::min(a.v[0], b.v[0]) <= p.v[0] && p.v[0] <= std::max(a.v[0], b.v[0]) &&
           std::min(a.v[1], b.v[1]) <= p.v[1] && p.v[1] <= std::max(a.v[1], b.v[1]);
  }
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % m], p) < 0) return false;
  }
  return true;
}

long long IntegralPolytope::max_support(const Covector& phi) const {
  long long best = phi.dot(vertices_.front());
  for (const LatticePoint& v : vertices_) best = std::max(best, phi.dot(v));
  return best;
}

long long IntegralPolytope::min_support(const Covector& phi) const {
  long long best = phi.dot(vertices_.front());
  for (const LatticePoint& v : vertices_) best = std::min(best, phi.dot(v));
  return best;
}

long long IntegralPolytope::width(const Covector& phi) const {
  return max_support(phi) - min_support(phi);
}

IntegralPolytope IntegralPolytope::translated(const LatticePoint& t) const {
  IntegralPolytope out;
  out.rank_ = rank_;
  out.vertices_.reserve(vertices_.size());
  for (const LatticePoint& v : vertices_) out.vertices_.push_back(v + t);
  return out;  // translation preserves the canonical vertex order
}

IntegralPolytope minkowski_sum(const IntegralPolytope& p, const IntegralPolytope& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("Minkowski sum rank mismatch");
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const LatticePoint& a : p.vertices()) {
    for (const LatticePoint& b : q.vertices()) sums.push_back(a + b);
  }
  return IntegralPolytope::hull(sums);
}

IntegralPolytope linear_image(const std::array<std::array<long long, 2>, 2>& m,
                              const IntegralPolytope& p) {
  if (p.rank() != 2) throw std::invalid_argument("linear_image requires rank 2");
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertices().size());
  for (const LatticePoint& v : p.vertices()) {
    pts.push_back(LatticePoint::of(m[0][0] * v.v[0] + m[0][1] * v.v[1],
                                   m[1][0] * v.v[0] + m[1][1] * v.v[1]));
  }
  return IntegralPolytope::hull(pts);
}

VirtualPolytope make_virtual(IntegralPolytope positive, IntegralPolytope negative) {
  if (positive.rank() != negative.rank()) {
    throw std::invalid_argument("virtual polytope rank mismatch");
  }
  return VirtualPolytope{std::move(positive), std::move(negative)};
}

bool virtual_equal(const VirtualPolytope& a, const VirtualPolytope& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  return minkowski_sum(a.positive, b.negative) == minkowski_sum(b.positive, a.negative);
}

TranslationClass::TranslationClass(VirtualPolytope v) : rep_(std::move(v)) {
  rep_.positive = rep_.positive.translated(-rep_.positive.lexmin_vertex());
  rep_.negative = rep_.negative.translated(-rep_.negative.lexmin_vertex());
}

bool class_equal(const TranslationClass& a, const TranslationClass& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  const IntegralPolytope s1 =
      minkowski_sum(a.representative().positive, b.representative().negative);
  const IntegralPolytope s2 =
      minkowski_sum(b.representative().positive, a.representative().negative);
  return s2.translated(s1.lexmin_vertex() - s2.lexmin_vertex()) == s1;
}

TranslationClass class_sum(const TranslationClass& a, const TranslationClass& b) {
  return TranslationClass(make_virtual(
      minkowski_sum(a.representative().positive, b.representative().positive),
      minkowski_sum(a.representative().negative, b.representative().negative)));
}

TranslationClass linear_image(const std::array<std::array<long long, 2>, 2>& m,
                              const TranslationClass& c) {
  return TranslationClass(make_virtual(linear_image(m, c.representative().positive),
                                       linear_image(m, c.representative().negative)));
}

std::optional<IntegralPolytope> resolve_single(const VirtualPolytope& v) {
  const IntegralPolytope& pos = v.positive;
  const IntegralPolytope& neg = v.negative;
  if (neg.is_point()) {
    return pos.translated(-neg.vertices().front());
  }
  // Erode positive by negative: the complement, when it exists, is exactly
  // the set of points p with p + negative contained in positive, so its
  // lattice points are found inside the coordinate box below. The final
  // Minkowski verification makes the search exact.
  const int rank = v.rank();
  std::array<long long, 2> lo{0, 0}, hi{0, 0};
  for (int i = 0; i < rank; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    long long pmin = pos.vertices().front().v[idx], pmax = pmin;
    for (const LatticePoint& p : pos.vertices()) {
      pmin = std::min(pmin, p.v[idx]);
      pmax = std::max(pmax, p.v[idx]);
    }
    long long qmin = neg.vertices().front().v[idx], qmax = qmin;
    for (const LatticePoint& q : neg.vertices()) {
      qmin = std::min(qmin, q.v[idx]);
      qmax = std::max(qmax, q.v[idx]);
    }
    lo[idx] = pmin - qmin;
    hi[idx] = pmax - qmax;
    if (lo[idx] > hi[idx]) return std::nullopt;
  }
  std::vector<LatticePoint> eroded;
  const long long b_lo = rank == 2 ? lo[1] : 0;
  const long long b_hi = rank == 2 ? hi[1] : 0;
  for (long long a = lo[0]; a <= hi[0]; ++a) {
    for (long long b = b_lo; b <= b_hi; ++b) {
      const LatticePoint p = rank == 1 ? LatticePoint::of(a) : LatticePoint::of(a, b);
      bool ok = true;
      for (const LatticePoint& q : neg.vertices()) {
        if (!pos.contains(p + q)) {
          ok = false;
          break;
        }
      }
      if (ok) eroded.push_back(p);
    }
  }
  if (eroded.empty()) return std::nullopt;
  IntegralPolytope c = IntegralPolytope::hull(eroded);
  if (minkowski_sum(c, neg) == pos) return c;
  return std::nullopt;
}

long long thickness(const VirtualPolytope& v, const Covector& phi) {
  if (phi.is_zero()) throw std::invalid_argument("thickness requires a nonzero covector");
  if (phi.rank != v.rank()) throw std::invalid_argument("rank mismatch");
  return v.positive.width(phi) - v.negative.width(phi);
}

bool contains(const DualComponent& d, const Covector& phi) {
  if (phi.is_zero()) return false;
  switch (d.kind) {
    case DualComponent::Kind::ray:
      if (phi.rank == 1) return d.a.v[0] * phi.v[0] > 0;
      return cross(d.a, phi) == 0 && dot(d.a, phi) > 0;
    case DualComponent::Kind::sector:
      return cross(d.a, phi) > 0 && cross(d.b, phi) < 0;
    case DualComponent::Kind::half_plane:
      return dot(d.a, phi) > 0;
    case DualComponent::Kind::all_nonzero:
      return true;
  }
  return false;
}

std::vector<FaceDuals> faces_and_duals(const IntegralPolytope& p) {
  std::vector<FaceDuals> out;
  const auto& vs = p.vertices();

  if (p.rank() == 1) {
    if (p.is_point()) {
      out.push_back({p, {DualComponent{DualComponent::Kind::ray, Covector::of(1), {}},
                         DualComponent{DualComponent::Kind::ray, Covector::of(-1), {}}}});
      return out;
    }
    // Minimisers: the lower endpoint for positive covectors, upper for negative.
    out.push_back({IntegralPolytope::point(vs[0]),
                   {DualComponent{DualComponent::Kind::ray, Covector::of(1), {}}}});
    out.push_back({IntegralPolytope::point(vs[1]),
                   {DualComponent{DualComponent::Kind::ray, Covector::of(-1), {}}}});
    return out;
  }

  if (p.is_point()) {
    out.push_back({p, {DualComponent{DualComponent::Kind::all_nonzero, {}, {}}}});
    return out;
  }

  if (p.is_segment()) {
    const LatticePoint d = vs[1] - vs[0];
    const Covector dir = primitive(Covector::of(d.v[0], d.v[1]));
    const Covector n = primitive(Covector::of(-d.v[1], d.v[0]));
    out.push_back({IntegralPolytope::point(vs[0]),
                   {DualComponent{DualComponent::Kind::half_plane, dir, {}}}});
    out.push_back({IntegralPolytope::point(vs[1]),
                   {DualComponent{DualComponent::Kind::half_plane,
                                  Covector::of(-dir.v[0], -dir.v[1]), {}}}});
    out.push_back({p,
                   {DualComponent{DualComponent::Kind::ray, n, {}},
                    DualComponent{DualComponent::Kind::ray,
                                  Covector::of(-n.v[0], -n.v[1]), {}}}});
    return out;
  }

  // Full-dimensional polygon, vertices counterclockwise. The dual ray of the
  // edge v[i] -> v[i+1] is spanned by the inward normal; the dual of a vertex
  // is the open sector between the rays of its two incident edges.
  const std::size_t m = vs.size();
  std::vector<Covector> inward(m);
  for (std::size_t i = 0; i < m; ++i) {
    const LatticePoint d = vs[(i + 1) % m] - vs[i];
    inward[i] = primitive(Covector::of(-d.v[1], d.v[0]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m;
    out.push_back({IntegralPolytope::point(vs[i]),
                   {DualComponent{DualComponent::Kind::sector, inward[prev], inward[i]}}});
    const std::array<LatticePoint, 2> edge{vs[i], vs[(i + 1) % m]};
    out.push_back({IntegralPolytope::hull(edge),
                   {DualComponent{DualComponent::Kind::ray, inward[i], {}}}});
  }
  return out;
}

IntegralPolytope face_of(const IntegralPolytope& p, const Covector& phi) {
  const long long lo = p.min_support(phi);
  std::vector<LatticePoint> argmin;
  for (const LatticePoint& v : p.vertices()) {
    if (phi.dot(v) == lo) argmin.push_back(v);
  }
  return IntegralPolytope::hull(argmin);
}

}  // namespace onerel

#include "onerel/verify.hpp"

#include <algorithm>
#include <sstream>

namespace onerel::verify {

namespace {

std::string word_str(const Word& w) {
  return w.empty() ? std::string("1") : render_word(w);
}

std::string point_str(const LatticePoint& p) {
  std::ostringstream os;
  os << '(' << p.v[0];
  if (p.rank == 2) os << ',' << p.v[1];
  os << ')';
  return os.str();
}

std::string points_str(std::span<const LatticePoint> pts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << point_str(pts[i]);
  }
  os << '}';
  return os.str();
}

std::string covector_str(const Covector& c) {
  std::ostringstream os;
  os << '(' << c.v[0];
  if (c.rank == 2) os << ',' << c.v[1];
  os << ')';
  return os.str();
}

// Bounded draw; bias is irrelevant for test-input generation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Gen draw_gen(std::mt19937_64& rng) { return draw(rng, 2) == 0 ? Gen::x : Gen::y; }

NielsenMove draw_move(std::mt19937_64& rng) {
  switch (draw(rng, 3)) {
    case 0: return NielsenMove::swap_generators;
    case 1: return NielsenMove::invert_x;
    default: return NielsenMove::right_multiply;
  }
}

FoxFn fox_or_default(const Options& opts) {
  if (opts.fox) return opts.fox;
  return [](const Word& w, Gen z) { return fox_derivative(w, z); };
}

// Small check harness: runs `count` cases, records the first failure text.
template <typename Fn>
SuiteResult run_suite(std::string name, const Options& opts, Fn&& one_case) {
  SuiteResult res;
  res.name = std::move(name);
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.count; ++i) {
    ++res.cases;
    std::string failure = one_case(rng, i);
    if (!failure.empty()) {
      ++res.failures;
      if (res.first_failure.empty()) {
        res.first_failure =
            res.name + " case " + std::to_string(i) + " (seed " +
            std::to_string(opts.seed) + "): " + failure;
      }
    }
  }
  return res;
}

}  // namespace

// --- generators -------------------------------------------------------------

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> ls;
  ls.reserve(length);
  while (ls.size() < length) {
    Letter l{draw_gen(rng), static_cast<std::int8_t>(draw(rng, 2) == 0 ? 1 : -1)};
    if (!ls.empty() && l == ls.back().inverse()) continue;
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

Word random_cyclically_reduced_word(std::mt19937_64& rng, std::size_t max_length) {
  for (;;) {
    const std::size_t len = 1 + draw(rng, max_length);
    const Word w = cyclic_reduce(random_word(rng, len)).first;
    if (!w.empty()) return w;
  }
}

Word random_nice_relator(std::mt19937_64& rng, std::size_t max_length) {
  for (;;) {
    const Word base = random_word(rng, 1 + draw(rng, max_length / 2));
    const auto sums = base.exponent_sums();
    const Word balanced = base * Word::generator(Gen::x, -sums[0]) *
                          Word::generator(Gen::y, -sums[1]);
    const Word r = cyclic_reduce(balanced).first;
    if (!r.empty() && r.size() <= max_length) return r;
  }
}

std::vector<LatticePoint> random_points(std::mt19937_64& rng, int rank,
                                        std::size_t max_points, long long bound) {
  const std::size_t n = 1 + draw(rng, max_points);
  std::vector<LatticePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long a = draw_range(rng, -bound, bound);
    pts.push_back(rank == 1 ? LatticePoint::of(a)
                            : LatticePoint::of(a, draw_range(rng, -bound, bound)));
  }
  return pts;
}

// --- oracles ----------------------------------------------------------------

namespace oracle {

namespace {

bool in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                 const LatticePoint& c) {
  if (orient(a, b, c) == 0) {
    // Degenerate: a, b, c on one line (possibly equal); the hull is a
    // segment or point, so test collinearity plus the bounding box.
    const LatticePoint* second = nullptr;
    if (!(b == a)) second = &b;
    else if (!(c == a)) second = &c;
    if (second == nullptr) return p == a;
    if (orient(a, *second, p) != 0) return false;
    const long long lo0 = std::min({a.v[0], b.v[0], c.v[0]});
    const long long hi0 = std::max({a.v[0], b.v[0], c.v[0]});
    const long long lo1 = std::min({a.v[1], b.v[1], c.v[1]});
    const long long hi1 = std::max({a.v[1], b.v[1], c.v[1]});
    return lo0 <= p.v[0] && p.v[0] <= hi0 && lo1 <= p.v[1] && p.v[1] <= hi1;
  }
  const long long s1 = orient(a, b, p);
  const long long s2 = orient(b, c, p);
  const long long s3 = orient(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

}  // namespace

std::vector<LatticePoint> extreme_points(std::span<const LatticePoint> pts) {
  std::vector<LatticePoint> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.front().rank == 1) {
    if (s.size() == 1) return s;
    return {s.front(), s.back()};
  }
  std::vector<LatticePoint> extremes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<LatticePoint> others;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) others.push_back(s[j]);
    }
    bool inside = false;
    for (std::size_t a = 0; a < others.size() && !inside; ++a) {
      for (std::size_t b = a; b < others.size() && !inside; ++b) {
        for (std::size_t c = b; c < others.size() && !inside; ++c) {
          inside = in_triangle(s[i], others[a], others[b], others[c]);
        }
      }
    }
    if (!inside) extremes.push_back(s[i]);
  }
  return extremes;
}

std::optional<ProperPower> proper_power_by_periods(const Word& w) {
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = ls[i] == ls[i % d];
    if (periodic) return ProperPower{w.prefix(d), static_cast<long long>(n / d)};
  }
  return std::nullopt;
}

IntegralPolytope hull_of_pairwise_sums(std::span<const LatticePoint> a,
                                       std::span<const LatticePoint> b) {
  std::vector<LatticePoint> sums;
  sums.reserve(a.size() * b.size());
  for (const LatticePoint& p : a) {
    for (const LatticePoint& q : b) sums.push_back(p + q);
  }
  return IntegralPolytope::hull(sums);
}

}  // namespace oracle

// --- suites -----------------------------------------------------------------

SuiteResult fundamental_formula_suite(const Options& opts) {
  const FoxFn fox = fox_or_default(opts);
  const FreeRingElement x1 =
      FreeRingElement::monomial(Word::generator(Gen::x)) - FreeRingElement::one();
  const FreeRingElement y1 =
      FreeRingElement::monomial(Word::generator(Gen::y)) - FreeRingElement::one();
  return run_suite("fundamental_formula", opts, [&](std::mt19937_64& rng, int) {
    const Word w = random_word(rng, draw(rng, 31));
    const FreeRingElement lhs = fox(w, Gen::x) * x1 + fox(w, Gen::y) * y1;
    const FreeRingElement rhs = FreeRingElement::monomial(w) - FreeRingElement::one();
    if (lhs == rhs) return std::string{};
    return "w = " + word_str(w);
  });
}

SuiteResult chain_rule_suite(const Options& opts) {
  const FoxFn fox = fox_or_default(opts);
  return run_suite("chain_rule", opts, [&](std::mt19937_64& rng, int i) {
    const Word r = random_word(rng, 1 + draw(rng, 20));
    const NielsenMove m = static_cast<NielsenMove>(i % 3);
    const Gen z = draw_gen(rng);
    const FreeRingElement lhs = fox(apply_nielsen(m, r), z);
    const FreeRingElement rhs =
        apply_nielsen(m, fox(r, Gen::x)) * fox(nielsen_generator_image(m, Gen::x), z) +
        apply_nielsen(m, fox(r, Gen::y)) * fox(nielsen_generator_image(m, Gen::y), z);
    if (lhs == rhs) return std::string{};
    return "move " + std::string(to_string(m)) + ", r = " + word_str(r) +
           ", z = " + std::string(1, z == Gen::x ? 'x' : 'y');
  });
}

SuiteResult product_inverse_rule_suite(const Options& opts) {
  const FoxFn fox = fox_or_default(opts);
  return run_suite("product_inverse_rules", opts, [&](std::mt19937_64& rng, int) {
    const Word u = random_word(rng, draw(rng, 16));
    const Word v = random_word(rng, draw(rng, 16));
    const Gen z = draw_gen(rng);
    const FreeRingElement product_lhs = fox(u * v, z);
    const FreeRingElement product_rhs =
        fox(u, z) + FreeRingElement::monomial(u) * fox(v, z);
    if (!(product_lhs == product_rhs)) {
      return "product rule: u = " + word_str(u) + ", v = " + word_str(v);
    }
    const FreeRingElement inverse_lhs = fox(u.inverse(), z);
    const FreeRingElement inverse_rhs =
        -(FreeRingElement::monomial(u.inverse()) * fox(u, z));
    if (!(inverse_lhs == inverse_rhs)) return "inverse rule: u = " + word_str(u);
    return std::string{};
  });
}

SuiteResult fox_route_equivalence_suite(const Options& opts) {
  const FoxFn fox = fox_or_default(opts);
  return run_suite("fox_route_equivalence", opts, [&](std::mt19937_64& rng, int i) {
    const Word r = (i % 2 == 0) ? random_word(rng, draw(rng, 31))
                                : random_nice_relator(rng, 24);
    const Gen z = draw_gen(rng);
    const FoxTermList terms = fox_term_list(r, z);
    if (terms.size() != r.occurrences(z)) {
      return "term count != occurrences for r = " + word_str(r);
    }
    for (std::size_t a = 0; a < terms.size(); ++a) {
      for (std::size_t b = a + 1; b < terms.size(); ++b) {
        if (terms[a].word == terms[b].word) {
          return "equal term words in r = " + word_str(r);
        }
      }
    }
    if (!(collapse(terms) == fox(r, z))) {
      return "occurrence scan != recursion for r = " + word_str(r) + ", z = " +
             std::string(1, z == Gen::x ? 'x' : 'y');
    }
    return std::string{};
  });
}

namespace {

TranslationClass formula_class(const Word& r, Gen z, const AbelianizationData& ab) {
  std::vector<LatticePoint> pts;
  for (const FoxTerm& t : fox_term_list(r, z)) pts.push_back(abelian_image(t.word, ab));
  const std::array<LatticePoint, 2> sub{LatticePoint::zero(ab.b1),
                                        generator_image(other(z), ab)};
  return TranslationClass(
      make_virtual(IntegralPolytope::hull(pts), IntegralPolytope::hull(sub)));
}

}  // namespace

SuiteResult two_formula_suite(const Options& opts) {
  return run_suite("two_formula_equality", opts, [&](std::mt19937_64& rng, int) {
    const Word r = random_nice_relator(rng, 24);
    const AbelianizationData ab =
        analyze_abelianization(make_presentation(GeneratorNames{}, r));
    if (!class_equal(formula_class(r, Gen::x, ab), formula_class(r, Gen::y, ab))) {
      return "r = " + word_str(r);
    }
    return std::string{};
  });
}

SuiteResult class_invariance_suite(const Options& opts) {
  return run_suite("class_invariance", opts, [&](std::mt19937_64& rng, int) {
    const Word r = random_nice_relator(rng, 20);
    const Presentation p = make_presentation(GeneratorNames{}, r);
    const TranslationClass base = compute_polytope(p).class_pt;

    // Composed Nielsen sequence of length <= 4 against the composed
    // pushforward on H.
    const std::size_t steps = 1 + draw(rng, 4);
    Word image = r;
    std::array<std::array<long long, 2>, 2> total{{{1, 0}, {0, 1}}};
    std::string trail;
    for (std::size_t s = 0; s < steps; ++s) {
      const NielsenMove m = draw_move(rng);
      trail += trail.empty() ? "" : ",";
      trail += to_string(m);
      image = apply_nielsen(m, image);
      const auto mm = nielsen_abelian_matrix(m);
      total = {{{mm[0][0] * total[0][0] + mm[0][1] * total[1][0],
                 mm[0][0] * total[0][1] + mm[0][1] * total[1][1]},
                {mm[1][0] * total[0][0] + mm[1][1] * total[1][0],
                 mm[1][0] * total[0][1] + mm[1][1] * total[1][1]}}};
    }
    const TranslationClass moved =
        compute_polytope(make_presentation(GeneratorNames{}, image)).class_pt;
    if (!class_equal(moved, linear_image(total, base))) {
      return "Nielsen sequence [" + trail + "] on r = " + word_str(r);
    }

    // Single moves, cyclic shifts and the inverse via the pipeline op.
    const std::array<NielsenMove, 3> all_moves{NielsenMove::swap_generators,
                                               NielsenMove::invert_x,
                                               NielsenMove::right_multiply};
    const std::array<long long, 2> shifts{
        static_cast<long long>(draw(rng, r.size())),
        static_cast<long long>(draw(rng, r.size()))};
    if (!invariance_suite(p, all_moves, shifts)) {
      return "invariance_suite failed for r = " + word_str(r);
    }
    return std::string{};
  });
}

SuiteResult minkowski_algebra_suite(const Options& opts) {
  return run_suite("minkowski_algebra", opts, [&](std::mt19937_64& rng, int i) {
    const int rank = (i % 2) + 1;
    const auto s = random_points(rng, rank, 8, 50);
    const auto t = random_points(rng, rank, 8, 50);
    const auto u = random_points(rng, rank, 8, 50);
    const IntegralPolytope P = IntegralPolytope::hull(s);
    const IntegralPolytope Q = IntegralPolytope::hull(t);
    const IntegralPolytope R = IntegralPolytope::hull(u);
    const IntegralPolytope zero = IntegralPolytope::point(LatticePoint::zero(rank));

    if (!(minkowski_sum(P, Q) == minkowski_sum(Q, P))) {
      return "commutativity: S = " + points_str(s) + ", T = " + points_str(t);
    }
    if (!(minkowski_sum(minkowski_sum(P, Q), R) == minkowski_sum(P, minkowski_sum(Q, R)))) {
      return "associativity: S = " + points_str(s) + ", T = " + points_str(t) +
             ", U = " + points_str(u);
    }
    if (!(minkowski_sum(P, zero) == P)) return "neutral element: S = " + points_str(s);
    const bool sums_equal = minkowski_sum(P, R) == minkowski_sum(Q, R);
    if (sums_equal != (P == Q)) {
      return "cancellation: S = " + points_str(s) + ", T = " + points_str(t) +
             ", U = " + points_str(u);
    }
    if (!(minkowski_sum(P, Q) == oracle::hull_of_pairwise_sums(s, t))) {
      return "pairwise-sum oracle: S = " + points_str(s) + ", T = " + points_str(t);
    }
    return std::string{};
  });
}

SuiteResult hull_oracle_suite(const Options& opts) {
  return run_suite("hull_oracle", opts, [&](std::mt19937_64& rng, int i) {
    const int rank = (i % 2) + 1;
    auto pts = random_points(rng, rank, 12, 100);
    const IntegralPolytope h = IntegralPolytope::hull(pts);

    std::vector<LatticePoint> expected = oracle::extreme_points(pts);
    std::vector<LatticePoint> got = h.vertices();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) return "extreme points differ for S = " + points_str(pts);

    if (!(IntegralPolytope::hull(h.vertices()) == h)) {
      return "hull not idempotent for S = " + points_str(pts);
    }
    auto doubled = pts;
    doubled.insert(doubled.end(), pts.begin(), pts.end());
    if (!(IntegralPolytope::hull(doubled) == h)) {
      return "hull multiplicity-sensitive for S = " + points_str(pts);
    }
    return std::string{};
  });
}

SuiteResult proper_power_oracle_suite(const Options& opts) {
  return run_suite("proper_power_oracle", opts, [&](std::mt19937_64& rng, int i) {
    Word w;
    if (i % 2 == 0) {
      w = random_cyclically_reduced_word(rng, 40);
    } else {
      const Word root = random_cyclically_reduced_word(rng, 8);
      const long long k = draw_range(rng, 2, 4);
      for (long long c = 0; c < k; ++c) w = w * root;
    }
    const auto got = is_proper_power(w);
    const auto expected = oracle::proper_power_by_periods(w);
    if (got == expected) return std::string{};
    return "w = " + word_str(w);
  });
}

SuiteResult thickness_suite(const Options& opts) {
  return run_suite("thickness", opts, [&](std::mt19937_64& rng, int i) {
    const int rank = (i % 2) + 1;
    Covector phi = rank == 1 ? Covector::of(draw_range(rng, -6, 6))
                             : Covector::of(draw_range(rng, -6, 6), draw_range(rng, -6, 6));
    if (phi.is_zero()) phi.v[0] = 1;

    const auto s1 = random_points(rng, rank, 6, 40);
    const auto s2 = random_points(rng, rank, 6, 40);
    const auto t1 = random_points(rng, rank, 6, 40);
    const auto t2 = random_points(rng, rank, 6, 40);
    const VirtualPolytope A =
        make_virtual(IntegralPolytope::hull(s1), IntegralPolytope::hull(s2));
    const VirtualPolytope B =
        make_virtual(IntegralPolytope::hull(t1), IntegralPolytope::hull(t2));
    const VirtualPolytope sum = make_virtual(minkowski_sum(A.positive, B.positive),
                                             minkowski_sum(A.negative, B.negative));
    if (thickness(sum, phi) != thickness(A, phi) + thickness(B, phi)) {
      return "homomorphism: A = (" + points_str(s1) + "," + points_str(s2) + "), B = (" +
             points_str(t1) + "," + points_str(t2) + "), phi = " + covector_str(phi);
    }

    const LatticePoint pt = random_points(rng, rank, 1, 40).front();
    const VirtualPolytope single_point = make_virtual(
        IntegralPolytope::point(pt), IntegralPolytope::point(LatticePoint::zero(rank)));
    if (thickness(single_point, phi) != 0) {
      return "point thickness: p = " + point_str(pt) + ", phi = " + covector_str(phi);
    }

    const LatticePoint tr1 = random_points(rng, rank, 1, 20).front();
    const LatticePoint tr2 = random_points(rng, rank, 1, 20).front();
    const VirtualPolytope translated =
        make_virtual(A.positive.translated(tr1), A.negative.translated(tr2));
    if (thickness(translated, phi) != thickness(A, phi)) {
      return "translation invariance: A = (" + points_str(s1) + "," + points_str(s2) +
             "), phi = " + covector_str(phi);
    }

    // Newton/degree compatibility: width of the hull equals the spread of phi
    // over the generating multiset.
    long long lo = phi.dot(s1.front()), hi = lo;
    for (const LatticePoint& p : s1) {
      lo = std::min(lo, phi.dot(p));
      hi = std::max(hi, phi.dot(p));
    }
    if (A.positive.width(phi) != hi - lo) {
      return "degree compatibility: S = " + points_str(s1) +
             ", phi = " + covector_str(phi);
    }
    return std::string{};
  });
}

SuiteResult faces_duals_partition_suite(const Options& opts) {
  return run_suite("faces_duals_partition", opts, [&](std::mt19937_64& rng, int i) {
    const int rank = (i % 2) + 1;
    // Mix shapes: points and segments show up on their own as well.
    const std::size_t max_points = 1 + draw(rng, 3) * 3;
    const auto pts = random_points(rng, rank, max_points, 9);
    const IntegralPolytope P = IntegralPolytope::hull(pts);
    const auto fans = faces_and_duals(P);

    std::vector<Covector> grid;
    if (rank == 1) {
      for (long long a = -8; a <= 8; ++a) {
        if (a != 0) grid.push_back(Covector::of(a));
      }
    } else {
      for (long long a = -8; a <= 8; ++a) {
        for (long long b = -8; b <= 8; ++b) {
          if (a != 0 || b != 0) grid.push_back(Covector::of(a, b));
        }
      }
    }

    for (const Covector& phi : grid) {
      int owners = 0;
      const IntegralPolytope* owner_face = nullptr;
      for (const FaceDuals& fd : fans) {
        for (const DualComponent& d : fd.duals) {
          if (contains(d, phi)) {
            ++owners;
            owner_face = &fd.face;
          }
        }
      }
      if (owners != 1) {
        return "phi = " + covector_str(phi) + " has " + std::to_string(owners) +
               " owning duals for P = " + points_str(P.vertices());
      }
      if (!(face_of(P, phi) == *owner_face)) {
        return "face mismatch at phi = " + covector_str(phi) +
               " for P = " + points_str(P.vertices());
      }
    }
    return std::string{};
  });
}

bool Summary::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.ok(); });
}

long long Summary::total_cases() const {
  long long n = 0;
  for (const SuiteResult& s : suites) n += s.cases;
  return n;
}

Summary run_all(const Options& opts) {
  Summary summary;
  summary.suites.push_back(fundamental_formula_suite(opts));
  summary.suites.push_back(chain_rule_suite(opts));
  summary.suites.push_back(product_inverse_rule_suite(opts));
  summary.suites.push_back(fox_route_equivalence_suite(opts));
  summary.suites.push_back(two_formula_suite(opts));
  summary.suites.push_back(class_invariance_suite(opts));
  summary.suites.push_back(minkowski_algebra_suite(opts));
  summary.suites.push_back(hull_oracle_suite(opts));
  summary.suites.push_back(proper_power_oracle_suite(opts));
  summary.suites.push_back(thickness_suite(opts));
  summary.suites.push_back(faces_duals_partition_suite(opts));
  return summary;
}

}  // namespace onerel::verify

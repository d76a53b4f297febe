#include "onerel/invariants.hpp"

#include <algorithm>

namespace onerel {

std::string_view to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::nice: return "nice";
    case PresentationKind::simple: return "simple";
    case PresentationKind::free_rank2: return "free_rank2";
    case PresentationKind::free_rank1: return "free_rank1";
    case PresentationKind::torsion: return "torsion";
    case PresentationKind::other_b1_1: return "other_b1_1";
  }
  return "?";
}

namespace {

struct Prepared {
  Word relator;  // cyclically reduced
  AbelianizationData ab;
  Classification cls;
};

Prepared prepare(const Presentation& p) {
  Prepared out;
  auto [core, conj] = cyclic_reduce(p.relator);
  out.relator = std::move(core);
  out.ab = analyze_abelianization(make_presentation(p.names, out.relator));

  Classification c;
  c.relator_conjugated = !conj.empty();
  c.power = out.relator.empty() ? std::nullopt : is_proper_power(out.relator);
  c.torsion_free = !c.power.has_value();

  const bool simple_shape = (out.ab.e_x == 0) != (out.ab.e_y == 0);
  if (out.relator.empty()) {
    c.kind = PresentationKind::free_rank2;
  } else if (out.relator.size() == 1) {
    c.kind = PresentationKind::free_rank1;
  } else if (out.ab.b1 == 2) {
    c.kind = PresentationKind::nice;
  } else if (simple_shape) {
    c.kind = PresentationKind::simple;
  } else if (!c.torsion_free) {
    c.kind = PresentationKind::torsion;
  } else {
    c.kind = PresentationKind::other_b1_1;
  }
  out.cls = c;
  return out;
}

bool polytope_defined(PresentationKind k) {
  return k == PresentationKind::nice || k == PresentationKind::simple ||
         k == PresentationKind::free_rank1;
}

Gen choose_witness(const Word& r) {
  const std::size_t nx = r.occurrences(Gen::x);
  const std::size_t ny = r.occurrences(Gen::y);
  if (nx == 0) return Gen::y;
  if (ny == 0) return Gen::x;
  return nx <= ny ? Gen::x : Gen::y;  // fewer Fox terms; ties go to x
}

std::vector<SignedImage> term_image_multiset(const Word& r, Gen z,
                                             const AbelianizationData& ab) {
  std::vector<SignedImage> out;
  for (const FoxTerm& t : fox_term_list(r, z)) {
    out.push_back(SignedImage{t.sign, abelian_image(t.word, ab), t.position});
  }
  return out;
}

PolytopeInvariant compute_from(const Prepared& pre) {
  if (!polytope_defined(pre.cls.kind)) {
    throw ClassificationError(
        "polytope construction refused: presentation classified as " +
            std::string(to_string(pre.cls.kind)) +
            " (it is defined for nice, simple and single-letter relators only)",
        pre.cls.kind);
  }
  const Gen z = choose_witness(pre.relator);
  std::vector<SignedImage> images = term_image_multiset(pre.relator, z, pre.ab);

  // Support semantics: the hull is taken over the signed multiset of term
  // images with no integer cancellation between distinct Fox terms.
  std::vector<LatticePoint> pts;
  pts.reserve(images.size());
  for (const SignedImage& s : images) pts.push_back(s.image);

  const Gen w = other(z);
  const std::array<LatticePoint, 2> sub{LatticePoint::zero(pre.ab.b1),
                                        generator_image(w, pre.ab)};

  TranslationClass cls(make_virtual(IntegralPolytope::hull(pts),
                                    IntegralPolytope::hull(sub)));
  PolytopeInvariant inv{cls, resolve_single(cls.representative()), z, std::move(images)};
  return inv;
}

}  // namespace

Classification classify(const Presentation& p) { return prepare(p).cls; }

PolytopeInvariant compute_polytope(const Presentation& p) {
  return compute_from(prepare(p));
}

MarkingReport markings(const Presentation& p, std::span<const Character> chars) {
  const Prepared pre = prepare(p);
  const bool defined = polytope_defined(pre.cls.kind) ||
                       pre.cls.kind == PresentationKind::torsion;
  if (!defined) {
    throw ClassificationError(
        "markings refused: presentation classified as " +
            std::string(to_string(pre.cls.kind)),
        pre.cls.kind);
  }

  MarkingReport report;
  report.torsion_override = !pre.cls.torsion_free;

  std::vector<std::vector<SignedImage>> image_sets;
  if (!report.torsion_override) {
    for (Gen z : {Gen::x, Gen::y}) {
      if (pre.relator.occurrences(z) > 0) {
        image_sets.push_back(term_image_multiset(pre.relator, z, pre.ab));
      }
    }
  }

  for (const Character& chi : chars) {
    bool marked = false;
    for (const auto& images : image_sets) {
      long long best = 0;
      std::size_t hits = 0;
      for (const SignedImage& s : images) {
        const long long val = chi.induced.dot(s.image);
        if (hits == 0 || val > best) {
          best = val;
          hits = 1;
        } else if (val == best) {
          ++hits;
        }
      }
      if (hits == 1) {
        marked = true;
        break;
      }
    }
    report.verdicts.push_back(MarkingVerdict{chi, marked});
    if (marked) ++report.marked_count;
  }
  return report;
}

SplittingReport splitting_complexity(const Presentation& p, const Character& chi) {
  const Prepared pre = prepare(p);
  if (pre.cls.kind == PresentationKind::free_rank2) {
    throw ClassificationError(
        "splitting complexity is not defined for the free group on two generators",
        pre.cls.kind);
  }
  if (!pre.cls.torsion_free) {
    throw TorsionError(
        "splitting complexity refused: the relator is a proper power, so the group "
        "has torsion");
  }
  const PolytopeInvariant inv = compute_from(pre);

  // The formula applies to epimorphisms; scaling acts linearly on thickness,
  // so a non-primitive character is replaced by its primitive rescaling.
  const Covector phi = primitive(chi.induced);
  const long long th = thickness(inv.class_pt.representative(), phi);
  return SplittingReport{chi, th, th + 1};
}

std::array<std::array<long long, 2>, 2> nielsen_abelian_matrix(NielsenMove m) {
  switch (m) {
    case NielsenMove::swap_generators:
      return {{{0, 1}, {1, 0}}};
    case NielsenMove::invert_x:
      return {{{-1, 0}, {0, 1}}};
    case NielsenMove::right_multiply:
      // x -> xy adds the x-exponent to the y-exponent of the image.
      return {{{1, 0}, {1, 1}}};
  }
  throw std::logic_error("unknown Nielsen move");
}

bool invariance_suite(const Presentation& p, std::span<const NielsenMove> moves,
                      std::span<const long long> cyclic_shifts) {
  const Prepared pre = prepare(p);
  if (pre.cls.kind != PresentationKind::nice) {
    throw ClassificationError("invariance suite requires a nice presentation",
                              pre.cls.kind);
  }
  const TranslationClass base = compute_from(pre).class_pt;

  auto class_of = [&](const Word& relator) {
    return compute_polytope(make_presentation(p.names, relator)).class_pt;
  };

  for (NielsenMove m : moves) {
    const Word image = apply_nielsen(m, pre.relator);
    const TranslationClass expected = linear_image(nielsen_abelian_matrix(m), base);
    if (!class_equal(class_of(image), expected)) return false;
  }
  for (long long k : cyclic_shifts) {
    if (!class_equal(class_of(cyclic_permute(pre.relator, k)), base)) return false;
  }
  return class_equal(class_of(pre.relator.inverse()), base);
}

}  // namespace onerel

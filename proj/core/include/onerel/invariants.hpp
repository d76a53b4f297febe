#pragma once

// End-to-end pipeline: classify a presentation, build the polytope invariant
// from the Fox-term images, decide markings, and compute thickness and
// splitting complexity along integral characters.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onerel/abelian.hpp"
#include "onerel/foxcalc.hpp"
#include "onerel/lattice_polytope.hpp"
#include "onerel/words.hpp"

namespace onerel {

enum class PresentationKind {
  nice,        // nonempty cyclically reduced relator with b1 = 2
  simple,      // b1 = 1, one generator maps to a free-part generator, the other to 0
  free_rank2,  // empty relator
  free_rank1,  // relator is a single letter, the group is infinite cyclic
  torsion,     // b1 = 1, not simple, relator a proper power (markings still defined)
  other_b1_1,  // b1 = 1 with both generators nonzero in H; outside the construction
};

std::string_view to_string(PresentationKind k);

struct Classification {
  PresentationKind kind;
  bool torsion_free;  // relator is not a proper power
  std::optional<ProperPower> power;
  bool relator_conjugated;  // input was not cyclically reduced; reduced first
};

// A presentation whose classification rules out the polytope construction
// (empty relator, or b1 = 1 with neither generator trivial in H).
class ClassificationError : public std::runtime_error {
public:
  ClassificationError(const std::string& what, PresentationKind kind)
      : std::runtime_error(what), kind_(kind) {}
  PresentationKind kind() const { return kind_; }

private:
  PresentationKind kind_;
};

// Splitting complexity requested for a presentation with torsion.
class TorsionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Classification classify(const Presentation& p);

// One Fox term pushed to the lattice; the signed multiset of these images is
// the computable support of the derivative, kept with no integer cancellation
// across equal lattice points.
struct SignedImage {
  int sign;
  LatticePoint image;
  std::size_t position;  // occurrence index in the relator

  friend bool operator==(const SignedImage&, const SignedImage&) = default;
};

struct PolytopeInvariant {
  TranslationClass class_pt;                // hull(term images) - hull{0, image of w}
  std::optional<IntegralPolytope> single;   // complement polytope when one exists
  Gen witness;                              // generator the derivative was taken in
  std::vector<SignedImage> term_images;
};

// Requires a nice, simple or single-letter presentation; throws
// ClassificationError otherwise. Non-cyclically-reduced relators are reduced
// first (a translation in P_T).
PolytopeInvariant compute_polytope(const Presentation& p);

struct MarkingVerdict {
  Character character;
  bool marked;
};

struct MarkingReport {
  std::vector<MarkingVerdict> verdicts;
  std::size_t marked_count = 0;
  bool torsion_override = false;  // all-unmarked because the group has torsion
};

// Marking rule: phi is marked iff some generator z occurring in the relator
// has the phi-maximal value over the term-image multiset of dr/dz attained by
// exactly one term. Presentations with torsion are entirely unmarked.
MarkingReport markings(const Presentation& p, std::span<const Character> chars);

struct SplittingReport {
  Character character;
  long long thickness;   // along the primitive rescaling of the character
  long long complexity;  // thickness + 1
};

// Requires a torsion-free presentation other than the free one; non-primitive
// characters are rescaled to the primitive one.
SplittingReport splitting_complexity(const Presentation& p, const Character& chi);

// Recomputes the class for every transformed relator (each Nielsen image,
// cyclically reduced; each cyclic shift; the inverse relator) and compares
// with the pushforward of the original class under the induced map on H.
// Requires a nice presentation.
bool invariance_suite(const Presentation& p, std::span<const NielsenMove> moves,
                      std::span<const long long> cyclic_shifts);

// Induced action of a Nielsen move on H = Z^2 (exponent vectors).
std::array<std::array<long long, 2>, 2> nielsen_abelian_matrix(NielsenMove m);

}  // namespace onerel

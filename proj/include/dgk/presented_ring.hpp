#pragma once

#include <string>
#include <vector>

#include "dgk/bigint.hpp"
#include "dgk/delta.hpp"

namespace dgk {

/// A word in the generators of a presentation; empty word = ring unit.
using Word = std::vector<int>;

struct Term {
  BigInt coef;
  Word word;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Integer linear combination of words, kept normalized: like terms
/// combined, zero coefficients dropped, leading (degree-then-lex largest)
/// term first.
using LinComb = std::vector<Term>;

bool word_less(const Word& a, const Word& b);  // degree, then lexicographic
LinComb normalized(LinComb c);
LinComb lc_word(Word w, BigInt coef = 1);
LinComb lc_int(long long v);
LinComb lc_add(const LinComb& a, const LinComb& b);
LinComb lc_sub(const LinComb& a, const LinComb& b);
LinComb lc_neg(LinComb a);
LinComb lc_scale(const LinComb& a, const BigInt& c);
LinComb lc_mul(const LinComb& a, const LinComb& b);
bool lc_mentions(const LinComb& c, int gen);

struct RingGenerator {
  std::string id;
  bool invertible = false;
  int inverse = -1;  // partner index when invertible (may be self)
  friend bool operator==(const RingGenerator&, const RingGenerator&) = default;
};

/// Finitely presented associative unital ring over the integers.
/// `relations` holds the explicit relations; the inverse relations
/// g g' - 1 and g' g - 1 of invertible pairs are materialized on demand by
/// all_relations() in a canonical order (explicit first, then pairs by
/// generator index).
struct PresentedRing {
  std::vector<RingGenerator> generators;
  std::vector<LinComb> relations;

  int generator_index(const std::string& id) const;
  std::vector<LinComb> inverse_relations() const;
  std::vector<LinComb> all_relations() const;
  int n_generators() const { return static_cast<int>(generators.size()); }

  /// The distinguished presentation of the one-element ring: no generators,
  /// relation 1 = 0.
  static PresentedRing zero();
  bool is_zero_presentation() const;

  friend bool operator==(const PresentedRing&, const PresentedRing&) = default;
};

/// The (left, right) generator pairs whose relations left*right - 1 are
/// materialized, in the canonical order used by all_relations().
std::vector<std::pair<int, int>> inverse_pair_layout(const PresentedRing& p);

/// One step of a rewrite trace: subtract mult * left * relation * right
/// from the running combination.  `rel` indexes target.all_relations().
struct TraceStep {
  int rel = 0;
  BigInt mult;
  Word left, right;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Witness for a ring homomorphism between presentations: generator images
/// plus, for every source relation (in all_relations() order), a trace
/// reducing its image to zero in the target.
struct RingHomCertificate {
  PresentedRing source, target;
  std::vector<LinComb> images;                  // per source generator
  std::vector<std::vector<TraceStep>> traces;   // per source.all_relations()
};

struct CertCheck {
  bool ok = false;
  int relation = -1;  // failing relation index when !ok
  int step = -1;      // failing step index, or -1 if the residue is nonzero
  std::string detail;
};

/// Replays every trace step by step; each step must cite a target relation
/// applied inside a word context, the rest is integer-linear arithmetic.
CertCheck check_certificate(const RingHomCertificate& c);

/// Evaluate a combination under generator images (a free-algebra hom).
LinComb evaluate(const LinComb& c, const std::vector<LinComb>& images);

RingHomCertificate identity_certificate(const PresentedRing& p);
/// Certificate composition: (then o first), fully mechanical.
RingHomCertificate compose(const RingHomCertificate& first, const RingHomCertificate& then);

/// The universal ring of a Delta-groupoid: one invertible generator per
/// groupoid element (formal inverse = the inverse element), relations
/// u - 1 for units, x y - z for composable pairs, and k(x) + x - 1 on h.
/// The empty Delta-groupoid yields the ZERO presentation.
PresentedRing universal_ring(const DeltaGroupoid& d);

PresentedRing presentation_z();
PresentedRing presentation_zfree(const std::vector<std::string>& gens);
/// ZFree(gens) plus a fresh generator t with t*w - 1 and w*t - 1, where the
/// localized element w is given over the zfree generators.
PresentedRing presentation_localized_zfree(const std::vector<std::string>& gens,
                                           const LinComb& w);
/// "z" | "zfree:k" | "localized-zfree:k" (at x0 - 1) | "localized-zfree4".
PresentedRing parse_presentation_spec(const std::string& spec);

struct SimplifyResult {
  PresentedRing simplified;
  RingHomCertificate forward;   // original -> simplified
  RingHomCertificate backward;  // simplified -> original
};

/// Tietze-style fixpoint: drop zero/duplicate relations and eliminate
/// generators pinned by a relation with a stray +-1 single-letter term.
/// Both certificates are built move by move and composed.
SimplifyResult simplify(const PresentedRing& p);

}  // namespace dgk

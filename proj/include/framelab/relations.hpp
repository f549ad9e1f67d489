#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "framelab/calculus.hpp"
#include "framelab/frames.hpp"

namespace framelab {

enum class Provenance { LiftedLogical, TermInduced, Composed };

const char* provenance_name(Provenance p);

struct TypedPairs {
  // Sorted lexicographically, duplicates removed.
  std::vector<std::pair<int32_t, int32_t>> pairs;

  bool contains(int32_t x, int32_t y) const;
};

// A type-indexed family of binary relations between two frames.  `exact`
// marks relations whose pair sets are the full relation at each listed type
// (lifted-logical); term-induced sets are bounded evidence.
struct Relation {
  Family source = Family::S;
  Family target = Family::S;
  Provenance provenance = Provenance::LiftedLogical;
  std::string detail;
  bool exact = false;
  std::map<TypeRef, TypedPairs, TypeStrLess> by_type;
};

// All subtypes of the given types, deduplicated, ordered so that the parts
// of an arrow type precede it.
std::vector<TypeRef> subtype_closure(const std::vector<TypeRef>& types);

// Logical lifting of ground pairs to every subtype of the given types.
// The parallel kernel splits candidate pairs by source row and merges in row
// order; the serial reference is kept for equivalence testing.
Relation lift_logical(FrameStore& store, Family src, Family tgt,
                      const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                      const std::vector<TypeRef>& types);
Relation lift_logical_serial(FrameStore& store, Family src, Family tgt,
                             const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                             const std::vector<TypeRef>& types);

// E_sigma = {(den(P, source), den(P, target))} over the depth-bounded closed
// term corpus at each listed type.  Requires both families to model the
// signature.
Relation term_induced_relation(FrameStore& store, const Signature& sig, Family src, Family tgt,
                               const std::vector<TypeRef>& types, int depth);

// Same construction over explicit witness terms per type (synthesizer or
// saturation driven).
Relation term_induced_from_terms(FrameStore& store, const Signature& sig, Family src, Family tgt,
                                 const std::map<TypeRef, std::vector<TermPtr>, TypeStrLess>& terms,
                                 const std::string& detail);

// Pairwise union of two relations over the same families; pair sets merge
// per type.  Exact only if both inputs are exact.
Relation relation_union(const Relation& a, const Relation& b);

struct PartialFunctionVerdict {
  bool ok = false;
  // (x, y, y') with (x,y) and (x,y') both present, y != y'.
  std::optional<std::tuple<int32_t, int32_t, int32_t>> counterexample;
};
std::map<TypeRef, PartialFunctionVerdict, TypeStrLess> check_partial_function(const Relation& rel);

enum class Surjectivity { Yes, No, Undecided };
const char* surjectivity_name(Surjectivity s);

struct SurjectiveVerdict {
  Surjectivity verdict = Surjectivity::Undecided;
  long long hit = 0;
  long long total = 0;
  std::vector<int32_t> unhit;  // capped sample
};
// Verdict per type against the target layer.  For inexact relations a miss
// is Undecided (deeper generators might hit it); exact relations give No.
std::map<TypeRef, SurjectiveVerdict, TypeStrLess> check_surjective(FrameStore& store,
                                                                   const Relation& rel);

// Relational composition per common type.  Errors FamilyMismatch.
Relation compose(const Relation& first, const Relation& second);

struct CollapseCertificate {
  Family source = Family::S;
  Family target = Family::S;
  std::string method;
  bool certified = false;
  struct PerType {
    TypeRef type = nullptr;
    bool required = false;
    bool skipped = false;
    std::string skip_reason;
    PartialFunctionVerdict pf;
    SurjectiveVerdict surj;
  };
  std::vector<PerType> per_type;
  long long budget = 0;
  std::string notes;
};

// Checks partial-function and surjectivity per type.  Certified means: no
// partial-function violation anywhere, surjectivity Yes at every required
// type, and nothing definitely non-surjective at extended types (Undecided is
// allowed there and reported).  Types whose layers exceed the budget are
// reported as skipped, never silently dropped.
CollapseCertificate certify_collapse(FrameStore& store, const Relation& rel,
                                     const std::vector<TypeRef>& required_types,
                                     const std::vector<TypeRef>& extended_types);

struct IsoCertificate {
  Family left = Family::S;
  Family right = Family::S;
  bool certified = false;
  struct PerType {
    TypeRef type = nullptr;
    bool skipped = false;
    std::string skip_reason;
    long long pairs = 0;
    bool bijection = false;
    bool order_reversal = false;
    std::string failure;
  };
  std::vector<PerType> per_type;
  long long budget = 0;
};

// Lifts the ground pairs logically and checks, at every subtype of the given
// types, that the relation is a bijection and order-reversing:
// x <= x'  iff  y' <= y for related (x,y), (x',y').
IsoCertificate certify_iso(FrameStore& store, Family left, Family right,
                           const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                           const std::vector<TypeRef>& types);

struct FundamentalReport {
  bool ok = false;
  bool constants_ok = false;
  long long terms_checked = 0;
  struct Violation {
    TypeRef type;
    TermPtr term;
    int32_t source_value;
    int32_t target_value;
  };
  std::vector<Violation> violations;  // capped sample
};

// Verifies the constants' denotation pairs belong to the relation (errors
// PreconditionFailed naming the constant otherwise), then checks every
// enumerated closed term of depth <= depth at each of the relation's types.
FundamentalReport check_fundamental_property(FrameStore& store, const Relation& rel,
                                             const Signature& sig, int depth);

}  // namespace framelab

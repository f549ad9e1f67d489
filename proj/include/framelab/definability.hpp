#pragma once

#include <map>
#include <string>
#include <vector>

#include "framelab/calculus.hpp"
#include "framelab/frames.hpp"
#include "framelab/order.hpp"

namespace framelab {

struct SynthesisResult {
  Element target;
  TermPtr term;
  bool verified = false;  // denotation recheck; always true on return
};

// A closed LambdaS term denoting exactly the target element of an S layer:
// at bool, true/false; at an arrow type, every lambda is bound up front and
// one ground decision tree branches on the arguments observed at synthesized
// closed domain points.  In the full hierarchy those observations determine
// the arguments, so each leaf is the target's value at the profiled tuple;
// no interior lambda is ever tabulated, which keeps synthesis inside the
// frontier layers.  The result is re-interpreted and must match (hard
// assertion).  Errors BudgetExceeded, MismatchedSpaces.
SynthesisResult synthesize_S(FrameStore& store, const Element& target);

// A closed LambdaS term of type sigma -> sigma -> bool denoting the equality
// predicate of the S layer at sigma, verified exhaustively.  At arrow types
// the conjunction over domain points folds right-associatively through
// `if c rest false`.
TermPtr synthesize_eq_S(FrameStore& store, TypeRef sigma);

// Derived terms used as saturation seeds: not, and for LambdaC the parallel
// conjunction pand (de Morgan through por) and the parallel conditional pif
// (por of pand guards plus the branch-agreement conjunct).  Aids, not
// trusted primitives; tests pin their tables.
struct Macro {
  std::string name;
  TermPtr term;
};
std::vector<Macro> macro_library(const Signature& sig);

struct SaturationReport {
  std::string signature;
  Family family = Family::S;
  TypeRef target_type = nullptr;
  int skeleton_depth = 0;
  int passes = 0;
  bool fixpoint = false;
  struct PerType {
    TypeRef type = nullptr;
    long long layer_size = 0;
    std::vector<int32_t> defined;    // ascending element indices
    std::vector<int32_t> undefined;  // ascending element indices
    std::map<int32_t, TermPtr> witnesses;
    bool full() const { return undefined.empty(); }
  };
  std::vector<PerType> per_type;  // subtype closure of target_type, parts first
};

// Grows, for every subtype of the target type, the set of elements known
// definable by a closed term of the signature: seeded by constants and
// macros of those types, closed under application of known definables, and
// extended by abstracting type-directed application skeletons whose leaves
// are context variables and known definables (skeleton height capped by
// skeleton_depth).  Iterates until a full pass adds nothing.  Every witness
// is round-trip verified by interpretation.  The skeleton evaluation
// parallelizes over argument combinations; accumulation order is fixed, so
// the result is deterministic.  Errors ModelConditionFailed, BudgetExceeded.
SaturationReport saturate_definables(FrameStore& store, const Signature& sig, Family f,
                                     TypeRef target_type, int skeleton_depth = 3);

// The witness terms of a saturation report, keyed by type.  Terms appear in
// ascending element-index order.
std::map<TypeRef, std::vector<TermPtr>, TypeStrLess> witness_terms(const SaturationReport& report);

struct TotalityClass {
  int32_t base = -1;              // element index in the S layer
  std::vector<int32_t> members;   // ascending element indices in the C layer
  LatticeReport lattice;          // under the eagerness order (dual pointwise)
  int32_t laziest = -1;           // = lattice.bottom
  int32_t most_eager = -1;        // = lattice.top
};

struct TotalityReport {
  TypeRef type = nullptr;
  std::vector<TotalityClass> classes;   // ascending base index
  std::vector<int32_t> non_total;       // C elements related to no S element
  bool all_lattices = false;
};

// Lifts the ground totality relation {(tt,tt),(ff,ff)} logically from C to S
// and groups the C layer at sigma by S image.  The lifted relation must be a
// partial function (violations error Internal); each fiber gets a lattice
// report under the eagerness order, where the laziest implementation is the
// bottom and the most eager the top.  Errors BudgetExceeded.
TotalityReport totality_classes(FrameStore& store, TypeRef sigma);

// Exact sizes of the totality class of n-ary disjunction for n = 1..max_n.
// n = 3 is counted through the layer at bool -> bool -> bool without
// enumerating the layer of its own type.  max_n above 3 errors Usage.
std::vector<long long> disjunction_implementation_counts(FrameStore& store, int max_n);

}  // namespace framelab

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framelab/calculus.hpp"
#include "framelab/frames.hpp"

namespace framelab {

// Corpus comparison of two equational theories: does source-equality imply
// target-equality on every enumerated pair?  "Holds" always means "on this
// corpus".
struct TheoryReport {
  std::string signature;
  Family source = Family::S;
  Family target = Family::S;
  int depth = 0;
  std::vector<TypeRef> types;
  long long terms = 0;
  bool inclusion_holds = false;
  struct Violation {
    TypeRef type;
    TermPtr left, right;      // equal in source, distinct in target
    int32_t source_value;
    int32_t target_left, target_right;
  };
  std::vector<Violation> violations;  // capped sample
  struct Strictness {
    TypeRef type;
    TermPtr left, right;      // equal in target, distinct in source
    int32_t target_value;
    int32_t source_left, source_right;
  };
  std::vector<Strictness> strictness;  // one witness per target class, capped
};

// Groups the closed corpus at each type by source and by target denotation.
// Inclusion holds iff every source class is target-constant; strictness
// witnesses are the first corpus-order pairs target-equal but
// source-distinct.  Every reported pair is re-verified by interpretation.
// Errors ModelConditionFailed.
TheoryReport compare_theories(FrameStore& store, const Signature& sig, Family source,
                              Family target, int depth, const std::vector<TypeRef>& types);

// The first corpus-order pair equal in family a and distinct in family b, or
// nothing at this depth.
std::optional<std::pair<TermPtr, TermPtr>> find_separating_pair(FrameStore& store,
                                                                const Signature& sig, Family a,
                                                                Family b, int depth, TypeRef type);

}  // namespace framelab

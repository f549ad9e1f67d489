#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "framelab/calculus.hpp"
#include "framelab/frames.hpp"

namespace framelab {

// Which constants a family interprets.  S and E support only the LambdaS
// constants; omega and por exist in C and L.
bool has_constant(Family f, std::string_view name);

// Semantic action of a constant on fully evaluated ground arguments: the
// single source of truth for the if/por tables of every family.  args are
// canonical ground indices; the result is a canonical ground index.
// Errors MissingConstantInterpretation.
int semantic_apply_ground(Family f, std::string_view name, std::span<const int> args);

// The constant as an element of its own type's layer (tabulated).  Builds
// that layer, which for higher-arity constants can be expensive; the
// interpreter only needs it for partially applied constants.
Element constant_element(FrameStore& store, Family f, const Constant& c);

// Environment for de Bruijn terms: env[i] interprets variable i, innermost
// binder first.
using Env = std::vector<Element>;

// Compositional interpretation with a cache for closed subterms.
class Interpreter {
 public:
  explicit Interpreter(FrameStore& store) : store_(store) {}

  FrameStore& store() { return store_; }

  Element interpret(const TermPtr& term, Family f, const Env& env = {});

 private:
  Element eval(const TermPtr& term, Family f, const Env& env);

  FrameStore& store_;
  std::mutex mutex_;
  std::map<std::pair<const Term*, Family>, Element> cache_;
  std::vector<TermPtr> pinned_;  // keeps cache keys alive
};

struct DeltaRuleVerdict {
  std::string rule;
  long long instantiations = 0;
  bool sound = false;
  // On failure: the first (row-major) failing metavariable assignment.
  std::vector<Element> counterexample;
  std::optional<Element> lhs_value, rhs_value;
};

struct DeltaReport {
  std::string signature;
  Family family = Family::S;
  bool sound = false;
  std::vector<DeltaRuleVerdict> rules;
};

// Model condition 2: every delta rule holds denotationally under every
// instantiation of its metavariables by layer elements.  Errors
// MissingConstantInterpretation when the family lacks one of the signature's
// constants (model condition 1).
DeltaReport validate_delta_soundness(FrameStore& store, const Signature& sig, Family f);

// Throws ModelConditionFailed unless the family is a model of the signature.
void require_model(FrameStore& store, const Signature& sig, Family f);

// Every element of the constant's type layer that satisfies all delta rules
// mentioning the constant, other constants held canonical.  Ascending index
// order.  The parallel kernel and the serial reference agree exactly.
std::vector<Element> unique_sound_constant(FrameStore& store, const Signature& sig, Family f,
                                           std::string_view constant);
std::vector<Element> unique_sound_constant_serial(FrameStore& store, const Signature& sig,
                                                  Family f, std::string_view constant);

// Interprets a corpus of closed terms in one family; results are positional,
// so the parallel kernel is deterministic.  Serial reference kept for tests.
std::vector<int32_t> interpret_corpus(FrameStore& store, const std::vector<TermPtr>& terms,
                                      Family f);
std::vector<int32_t> interpret_corpus_serial(FrameStore& store, const std::vector<TermPtr>& terms,
                                             Family f);

}  // namespace framelab

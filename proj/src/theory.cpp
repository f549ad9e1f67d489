#include "framelab/theory.hpp"

#include <map>

#include "framelab/errors.hpp"
#include "framelab/semantics.hpp"

namespace framelab {

namespace {

constexpr int kViolationCap = 10;
constexpr int kStrictnessCap = 32;

void reverify(FrameStore& store, Family fa, Family fb, const TermPtr& left, const TermPtr& right,
              bool equal_in_a, bool equal_in_b) {
  Interpreter interp(store);
  bool ea = interp.interpret(left, fa) == interp.interpret(right, fa);
  bool eb = interp.interpret(left, fb) == interp.interpret(right, fb);
  if (ea != equal_in_a || eb != equal_in_b) {
    fail(ErrorKind::Internal, "theory witness failed its recheck");
  }
}

}  // namespace

TheoryReport compare_theories(FrameStore& store, const Signature& sig, Family source,
                              Family target, int depth, const std::vector<TypeRef>& types) {
  require_model(store, sig, source);
  require_model(store, sig, target);

  TheoryReport report;
  report.signature = sig.name();
  report.source = source;
  report.target = target;
  report.depth = depth;
  report.types = types;
  report.inclusion_holds = true;

  for (TypeRef t : types) {
    auto corpus = enumerate_closed_terms(sig, t, depth);
    auto vs = interpret_corpus(store, corpus, source);
    auto vt = interpret_corpus(store, corpus, target);
    report.terms += static_cast<long long>(corpus.size());

    // representative (first corpus index) per source class
    std::map<int32_t, size_t> src_rep;
    for (size_t i = 0; i < corpus.size(); ++i) {
      auto [it, fresh] = src_rep.emplace(vs[i], i);
      if (fresh) continue;
      size_t j = it->second;
      if (vt[i] != vt[j]) {
        report.inclusion_holds = false;
        if (static_cast<int>(report.violations.size()) < kViolationCap) {
          reverify(store, source, target, corpus[j], corpus[i], true, false);
          report.violations.push_back({t, corpus[j], corpus[i], vs[i], vt[j], vt[i]});
        }
      }
    }

    // first source-distinct pair per target class
    std::map<int32_t, size_t> tgt_rep;
    for (size_t i = 0; i < corpus.size(); ++i) {
      auto [it, fresh] = tgt_rep.emplace(vt[i], i);
      if (fresh) continue;
      size_t j = it->second;
      if (j == static_cast<size_t>(-1)) continue;  // class already witnessed
      if (vs[i] != vs[j]) {
        if (static_cast<int>(report.strictness.size()) < kStrictnessCap) {
          reverify(store, source, target, corpus[j], corpus[i], false, true);
          report.strictness.push_back({t, corpus[j], corpus[i], vt[i], vs[j], vs[i]});
        }
        it->second = static_cast<size_t>(-1);
      }
    }
  }
  return report;
}

std::optional<std::pair<TermPtr, TermPtr>> find_separating_pair(FrameStore& store,
                                                                const Signature& sig, Family a,
                                                                Family b, int depth,
                                                                TypeRef type) {
  require_model(store, sig, a);
  require_model(store, sig, b);

  auto corpus = enumerate_closed_terms(sig, type, depth);
  auto va = interpret_corpus(store, corpus, a);
  auto vb = interpret_corpus(store, corpus, b);
  for (size_t j = 0; j < corpus.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (va[i] == va[j] && vb[i] != vb[j]) {
        return std::make_pair(corpus[i], corpus[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace framelab

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "framelab/arrows.hpp"
#include "framelab/definability.hpp"
#include "framelab/errors.hpp"
#include "framelab/relations.hpp"
#include "framelab/semantics.hpp"

using namespace framelab;

namespace {

TypeRef b() { return Type::ground(); }
TypeRef bb() { return Type::arrow(b(), b()); }
TypeRef bbb() { return Type::arrow(b(), bb()); }
TypeRef obb() { return Type::arrow(bb(), b()); }

int32_t den(FrameStore& store, const char* src, const Signature& sig, Family f) {
  Interpreter interp(store);
  return interp.interpret(parse_term(src, sig), f).index;
}

}  // namespace

TEST_CASE("synthesis covers every element of every frontier S layer") {
  FrameStore store;
  for (TypeRef t : {b(), bb(), bbb(), obb()}) {
    const Layer& lay = store.layer(Family::S, t);
    for (int i = 0; i < lay.size(); ++i) {
      SynthesisResult r = synthesize_S(store, Element{&lay, i});
      CHECK(r.verified);
      CHECK(r.term->closed());
      CHECK(typecheck(r.term, {}, Signature::lambda_s()) == t);
      // Independent recheck on a fresh interpreter.
      Interpreter interp(store);
      CHECK(interp.interpret(r.term, Family::S) == Element{&lay, i});
    }
  }
}

TEST_CASE("synthesis rejects non-S targets") {
  FrameStore store;
  const Layer& lay = store.layer(Family::C, b());
  CHECK_THROWS_AS(synthesize_S(store, Element{&lay, 0}), Error);
}

TEST_CASE("the equality synthesizer matches the displayed EQ term at bool") {
  FrameStore store;
  TermPtr eq = synthesize_eq_S(store, b());

  // The usual hand-written predicate.
  TermPtr displayed = parse_term(
      "\\x:bool. \\y:bool. if x (if y true false) (if y false true)",
      Signature::lambda_s());
  Interpreter interp(store);
  CHECK(interp.interpret(eq, Family::S) == interp.interpret(displayed, Family::S));

  // And the denotation is the equality table.
  const Layer& g = store.layer(Family::S, b());
  Element e = interp.interpret(eq, Family::S);
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      CHECK(apply(apply(e, Element{&g, a}), Element{&g, c}).index == (a == c ? 0 : 1));
    }
  }
}

TEST_CASE("equality synthesis extends to higher types") {
  FrameStore store;
  TermPtr eq = synthesize_eq_S(store, bb());
  Interpreter interp(store);
  Element e = interp.interpret(eq, Family::S);
  const Layer& lay = store.layer(Family::S, bb());
  for (int a = 0; a < lay.size(); ++a) {
    for (int c = 0; c < lay.size(); ++c) {
      CHECK(apply(apply(e, Element{&lay, a}), Element{&lay, c}).index == (a == c ? 0 : 1));
    }
  }
}

TEST_CASE("macro tables behave like the guarded connectives") {
  FrameStore store;
  auto macros = macro_library(Signature::lambda_c());
  REQUIRE(macros.size() == 3);
  CHECK(macros[0].name == "not");
  CHECK(macros[1].name == "pand");
  CHECK(macros[2].name == "pif");

  Interpreter interp(store);
  const Layer& g = store.layer(Family::C, b());
  Element nt = interp.interpret(macros[0].term, Family::C);
  CHECK(apply(nt, Element{&g, 0}).index == 0);
  CHECK(apply(nt, Element{&g, 1}).index == 2);
  CHECK(apply(nt, Element{&g, 2}).index == 1);

  Element pand = interp.interpret(macros[1].term, Family::C);
  auto pand_at = [&](int x, int y) {
    return apply(apply(pand, Element{&g, x}), Element{&g, y}).index;
  };
  // Parallel conjunction: ff wins from either side, bot otherwise unless
  // both are tt.
  CHECK(pand_at(0, 2) == 2);
  CHECK(pand_at(2, 0) == 2);
  CHECK(pand_at(1, 1) == 1);
  CHECK(pand_at(0, 1) == 0);
  CHECK(pand_at(0, 0) == 0);
}

TEST_CASE("saturation in C over the sequential signature reaches its known fixpoint") {
  FrameStore store;
  SaturationReport sat = saturate_definables(store, Signature::lambda_s(), Family::C, bb());
  CHECK(sat.fixpoint);
  CHECK(sat.passes >= 2);

  REQUIRE(sat.per_type.size() == 2);
  const auto& ground_row = sat.per_type[0];
  const auto& row = sat.per_type[1];
  CHECK(ground_row.type == b());
  CHECK(row.type == bb());

  // The corpus oracle: distinct denotations of all closed terms to depth 6.
  auto corpus = enumerate_closed_terms(Signature::lambda_s(), bb(), 6);
  auto values = interpret_corpus(store, corpus, Family::C);
  std::set<int32_t> oracle(values.begin(), values.end());
  CHECK(oracle.size() == 6);

  std::set<int32_t> defined(row.defined.begin(), row.defined.end());
  CHECK(defined == oracle);
  CHECK(row.layer_size == 11);
  CHECK(row.undefined.size() == 5);

  // Every witness denotes its element.
  Interpreter interp(store);
  const Layer& lay = store.layer(Family::C, bb());
  for (const auto& [idx, term] : row.witnesses) {
    CHECK(interp.interpret(term, Family::C) == Element{&lay, idx});
  }
}

TEST_CASE("saturation over the parallel signature defines every C map at bool -> bool") {
  FrameStore store;
  SaturationReport sat = saturate_definables(store, Signature::lambda_c(), Family::C, bb());
  CHECK(sat.fixpoint);
  const auto& row = sat.per_type.back();
  CHECK(row.type == bb());
  CHECK(row.full());
  CHECK(row.defined.size() == 11);

  auto wit = witness_terms(sat);
  CHECK(wit.at(bb()).size() == 11);
}

TEST_CASE("totality classes at bool -> bool form the known lattices") {
  FrameStore store;
  TotalityReport rep = totality_classes(store, bb());
  CHECK(rep.all_lattices);
  REQUIRE(rep.classes.size() == 4);
  CHECK(rep.non_total.size() == 5);

  std::vector<size_t> sizes;
  for (const auto& cls : rep.classes) sizes.push_back(cls.members.size());
  CHECK(sizes == std::vector<size_t>{2, 1, 1, 2});

  // The constant-tt class: lazy \x.true above eager \x. if x true true.
  int32_t lazy = den(store, "\\x:bool. true", Signature::lambda_s(), Family::C);
  int32_t eager = den(store, "\\x:bool. if x true true", Signature::lambda_s(), Family::C);
  const auto& cls0 = rep.classes[0];
  std::vector<int32_t> want = {eager, lazy};
  std::sort(want.begin(), want.end());
  CHECK(cls0.members == want);
  CHECK(cls0.laziest == lazy);
  CHECK(cls0.most_eager == eager);
  CHECK(cls0.lattice.is_lattice);

  // Identity and negation implement themselves alone.
  int32_t id = den(store, "\\x:bool. x", Signature::lambda_s(), Family::C);
  int32_t neg = den(store, "\\x:bool. if x false true", Signature::lambda_s(), Family::C);
  CHECK(rep.classes[1].members == std::vector<int32_t>{id});
  CHECK(rep.classes[2].members == std::vector<int32_t>{neg});
}

TEST_CASE("the binary disjunction class is the four known implementations") {
  FrameStore store;
  TotalityReport rep = totality_classes(store, bbb());
  CHECK(rep.all_lattices);

  const Layer& s_layer = store.layer(Family::S, bbb());
  Interpreter interp(store);
  int32_t or_s = interp.interpret(
      parse_term("\\x:bool. \\y:bool. if x true y", Signature::lambda_s()), Family::S).index;

  const TotalityClass* cls = nullptr;
  for (const auto& c : rep.classes) {
    if (c.base == or_s) cls = &c;
  }
  REQUIRE(cls != nullptr);
  REQUIRE(cls->members.size() == 4);

  int32_t por = den(store, "por", Signature::lambda_c(), Family::C);
  int32_t lor = den(store, "\\x:bool. \\y:bool. if x true y", Signature::lambda_c(), Family::C);
  int32_t ror = den(store, "\\x:bool. \\y:bool. if y true x", Signature::lambda_c(), Family::C);
  int32_t sor = den(store, "\\x:bool. \\y:bool. if x (if y true true) y",
                    Signature::lambda_c(), Family::C);
  std::vector<int32_t> want = {por, lor, ror, sor};
  std::sort(want.begin(), want.end());
  CHECK(cls->members == want);

  // Laziest meets eagerest: por answers first, the strict or last.
  CHECK(cls->laziest == por);
  CHECK(cls->most_eager == sor);
  CHECK(s_layer.size() == 16);
}

TEST_CASE("disjunction implementation counts grow with arity") {
  FrameStore store;
  auto counts = disjunction_implementation_counts(store, 3);
  REQUIRE(counts.size() == 3);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 621);

  CHECK_THROWS_AS(disjunction_implementation_counts(store, 4), Error);
}

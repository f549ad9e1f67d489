#include <doctest.h>

#include <vector>

#include "framelab/arrows.hpp"
#include "framelab/errors.hpp"
#include "framelab/relations.hpp"
#include "framelab/semantics.hpp"

using namespace framelab;

namespace {

TypeRef b() { return Type::ground(); }
TypeRef bb() { return Type::arrow(b(), b()); }
TypeRef bbb() { return Type::arrow(b(), bb()); }

}  // namespace

TEST_CASE("subtype closure keeps parts before arrows") {
  auto closure = subtype_closure({Type::arrow(bb(), b()), bbb()});
  REQUIRE(closure.size() == 4);
  CHECK(closure[0] == b());
  CHECK(closure[1] == bb());
  // Both remaining types list their parts earlier.
  for (size_t i = 0; i < closure.size(); ++i) {
    if (!closure[i]->is_arrow()) continue;
    bool arg_seen = false, res_seen = false;
    for (size_t j = 0; j < i; ++j) {
      arg_seen |= closure[j] == closure[i]->arg();
      res_seen |= closure[j] == closure[i]->res();
    }
    CHECK(arg_seen);
    CHECK(res_seen);
  }
}

TEST_CASE("the lifted bijection between C and E is total and functional everywhere") {
  FrameStore store;
  Relation rel = lift_logical(store, Family::C, Family::E, e_bool_pairs(), {bb(), bbb()});
  CHECK(rel.exact);

  CHECK(rel.by_type.at(b()).pairs.size() == 3);
  CHECK(rel.by_type.at(bb()).pairs.size() == 11);
  CHECK(rel.by_type.at(bbb()).pairs.size() == 197);

  auto pf = check_partial_function(rel);
  for (const auto& [t, verdict] : pf) CHECK(verdict.ok);

  auto surj = check_surjective(store, rel);
  for (const auto& [t, verdict] : surj) {
    CHECK(verdict.verdict == Surjectivity::Yes);
    CHECK(verdict.hit == verdict.total);
  }
}

TEST_CASE("the parallel lift matches the serial reference") {
  FrameStore store;
  Relation par = lift_logical(store, Family::C, Family::E, e_bool_pairs(), {bbb()});
  Relation ser = lift_logical_serial(store, Family::C, Family::E, e_bool_pairs(), {bbb()});
  REQUIRE(par.by_type.size() == ser.by_type.size());
  for (const auto& [t, tp] : par.by_type) {
    CHECK(tp.pairs == ser.by_type.at(t).pairs);
  }
}

TEST_CASE("the totality lift relates strict implementations to their S originals") {
  FrameStore store;
  Relation rel = lift_logical(store, Family::C, Family::S, totality_pairs(), {bb()});
  // Six of the eleven C maps implement some total function.
  CHECK(rel.by_type.at(bb()).pairs.size() == 6);
  auto pf = check_partial_function(rel);
  CHECK(pf.at(bb()).ok);

  // Every S element is implemented: the relation is surjective.
  auto surj = check_surjective(store, rel);
  CHECK(surj.at(bb()).verdict == Surjectivity::Yes);
  CHECK(surj.at(bb()).total == 4);
}

TEST_CASE("partial function violations carry a counterexample") {
  Relation rel;
  rel.source = Family::C;
  rel.target = Family::S;
  rel.exact = true;
  rel.by_type[b()].pairs = {{0, 0}, {0, 1}, {1, 0}};
  auto pf = check_partial_function(rel);
  REQUIRE(!pf.at(b()).ok);
  auto [x, y1, y2] = *pf.at(b()).counterexample;
  CHECK(x == 0);
  CHECK(y1 == 0);
  CHECK(y2 == 1);
}

TEST_CASE("surjectivity distinguishes exact misses from bounded evidence") {
  FrameStore store;
  Relation rel;
  rel.source = Family::C;
  rel.target = Family::S;
  rel.exact = true;
  rel.by_type[b()].pairs = {{1, 0}};
  auto surj = check_surjective(store, rel);
  CHECK(surj.at(b()).verdict == Surjectivity::No);
  CHECK(surj.at(b()).hit == 1);
  CHECK(surj.at(b()).total == 2);
  REQUIRE(!surj.at(b()).unhit.empty());
  CHECK(surj.at(b()).unhit[0] == 1);

  rel.exact = false;
  auto soft = check_surjective(store, rel);
  CHECK(soft.at(b()).verdict == Surjectivity::Undecided);
}

TEST_CASE("composition with the inverse bijection gives the identity") {
  FrameStore store;
  std::vector<TypeRef> types = {bb()};
  Relation fwd = lift_logical(store, Family::C, Family::E, e_bool_pairs(), types);
  std::vector<std::pair<int32_t, int32_t>> inverse;
  for (auto [x, y] : e_bool_pairs()) inverse.emplace_back(y, x);
  Relation bwd = lift_logical(store, Family::E, Family::C, inverse, types);

  Relation loop = compose(fwd, bwd);
  CHECK(loop.source == Family::C);
  CHECK(loop.target == Family::C);
  for (const auto& [t, tp] : loop.by_type) {
    const Layer& lay = store.layer(Family::C, t);
    REQUIRE(static_cast<int>(tp.pairs.size()) == lay.size());
    for (const auto& [x, y] : tp.pairs) CHECK(x == y);
  }

  CHECK_THROWS_AS(compose(fwd, fwd), Error);
}

TEST_CASE("term-induced relations record denotation pairs only") {
  FrameStore store;
  Relation rel = term_induced_relation(store, Signature::lambda_s(), Family::C, Family::S,
                                       {b()}, 3);
  CHECK(!rel.exact);
  // Depth 3 reaches just the two truth constants: (tt,tt) and (ff,ff) by
  // canonical index.
  std::vector<std::pair<int32_t, int32_t>> want = {{1, 0}, {2, 1}};
  CHECK(rel.by_type.at(b()).pairs == want);
}

TEST_CASE("relation union merges pair sets per type") {
  FrameStore store;
  Relation a = term_induced_relation(store, Signature::lambda_s(), Family::C, Family::S, {b()}, 3);
  Relation bee = lift_logical(store, Family::C, Family::S, totality_pairs(), {b()});
  Relation u = relation_union(a, bee);
  CHECK(u.by_type.at(b()).pairs == bee.by_type.at(b()).pairs);
  CHECK(!u.exact);

  Relation wrong = lift_logical(store, Family::C, Family::E, e_bool_pairs(), {b()});
  CHECK_THROWS_AS(relation_union(a, wrong), Error);
}

TEST_CASE("certify_collapse reports skipped types instead of dropping them") {
  FrameStore store;
  Relation rel = lift_logical(store, Family::C, Family::S, totality_pairs(), {b()});
  CollapseCertificate cert = certify_collapse(store, rel, {b()}, {bb()});
  CHECK(cert.certified);
  REQUIRE(cert.per_type.size() == 2);
  CHECK(cert.per_type[0].required);
  CHECK(!cert.per_type[0].skipped);
  CHECK(cert.per_type[1].skipped);
  CHECK(!cert.per_type[1].skip_reason.empty());

  // The same missing type as required sinks the certificate.
  CollapseCertificate strict = certify_collapse(store, rel, {b(), bb()}, {});
  CHECK(!strict.certified);
}

TEST_CASE("the fundamental property holds for the lifted relations") {
  FrameStore store;
  std::vector<TypeRef> types = {b(), bb(), bbb()};

  Relation ebool = lift_logical(store, Family::C, Family::E, e_bool_pairs(), types);
  FundamentalReport r1 = check_fundamental_property(store, ebool, Signature::lambda_s(), 4);
  CHECK(r1.ok);
  CHECK(r1.constants_ok);
  CHECK(r1.terms_checked > 0);
  CHECK(r1.violations.empty());

  Relation totality = lift_logical(store, Family::C, Family::S, totality_pairs(), types);
  FundamentalReport r2 = check_fundamental_property(store, totality, Signature::lambda_s(), 4);
  CHECK(r2.ok);
  CHECK(r2.constants_ok);
}

TEST_CASE("the fundamental check rejects relations that miss a constant") {
  FrameStore store;
  Relation rel;
  rel.source = Family::C;
  rel.target = Family::S;
  rel.exact = true;
  rel.by_type[b()].pairs = {{1, 0}};  // false is unrelated
  try {
    check_fundamental_property(store, rel, Signature::lambda_s(), 3);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("iso certification validates bijection and order reversal") {
  FrameStore store;
  IsoCertificate cert = certify_iso(store, Family::C, Family::E, e_bool_pairs(), {bb(), bbb()});
  CHECK(cert.certified);
  for (const auto& row : cert.per_type) {
    CHECK(!row.skipped);
    CHECK(row.bijection);
    CHECK(row.order_reversal);
  }

  // A wrong ground matching is caught.
  std::vector<std::pair<int32_t, int32_t>> wrong = {{0, 0}, {1, 1}, {2, 2}};
  IsoCertificate bad = certify_iso(store, Family::C, Family::E, wrong, {bb()});
  CHECK(!bad.certified);
}

#include <doctest.h>

#include <vector>

#include "framelab/arrows.hpp"
#include "framelab/order.hpp"
#include "framelab/parallel.hpp"
#include "framelab/relations.hpp"
#include "framelab/semantics.hpp"

using namespace framelab;

namespace {

TypeRef b() { return Type::ground(); }
TypeRef bb() { return Type::arrow(b(), b()); }

}  // namespace

TEST_CASE("the thread cap is settable and guarded") {
  int before = par::thread_cap();
  {
    par::ThreadCapGuard guard(1);
    CHECK(par::thread_cap() == 1);
    CHECK(par::serial_only());
    CHECK(par::effective_threads() == 1);
  }
  CHECK(par::thread_cap() == before);
  CHECK(par::effective_threads() >= 1);
}

TEST_CASE("every parallel kernel agrees with its serial reference under any cap") {
  Poset d = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  TableSet ser = enumerate_monotone_tables_serial(d, d, 1'000'000, "test");

  auto corpus = enumerate_closed_terms(Signature::lambda_c(), bb(), 4);

  for (int cap : {1, 2, 4}) {
    par::ThreadCapGuard guard(cap);

    TableSet ts = enumerate_monotone_tables(d, d, 1'000'000, "test");
    CHECK(ts.flat == ser.flat);

    FrameStore store;
    auto sound = unique_sound_constant(store, Signature::lambda_c(), Family::L, "por");
    auto sound_ser = unique_sound_constant_serial(store, Signature::lambda_c(), Family::L, "por");
    REQUIRE(sound.size() == sound_ser.size());
    CHECK(sound[0].index == sound_ser[0].index);

    CHECK(interpret_corpus(store, corpus, Family::L) ==
          interpret_corpus_serial(store, corpus, Family::L));

    Relation par_lift = lift_logical(store, Family::C, Family::E, e_bool_pairs(),
                                     {Type::arrow(b(), bb())});
    Relation ser_lift = lift_logical_serial(store, Family::C, Family::E, e_bool_pairs(),
                                            {Type::arrow(b(), bb())});
    for (const auto& [t, tp] : par_lift.by_type) {
      CHECK(tp.pairs == ser_lift.by_type.at(t).pairs);
    }
  }
}

TEST_CASE("repeated runs are deterministic") {
  Poset d = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  TableSet first = enumerate_monotone_tables(d, d, 1'000'000, "test");
  for (int i = 0; i < 3; ++i) {
    TableSet again = enumerate_monotone_tables(d, d, 1'000'000, "test");
    CHECK(again.flat == first.flat);
  }
}

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "framelab/errors.hpp"
#include "framelab/frames.hpp"

using namespace framelab;

namespace {

TypeRef b() { return Type::ground(); }
TypeRef bb() { return Type::arrow(b(), b()); }

}  // namespace

TEST_CASE("ground layers have the canonical sizes and literals") {
  FrameStore store;
  CHECK(store.layer(Family::S, b()).size() == 2);
  CHECK(store.layer(Family::C, b()).size() == 3);
  CHECK(store.layer(Family::E, b()).size() == 3);
  CHECK(store.layer(Family::L, b()).size() == 4);

  CHECK(ground_literals(Family::S) == std::vector<std::string>{"tt", "ff"});
  CHECK(ground_literals(Family::C) == std::vector<std::string>{"bot", "tt", "ff"});
  CHECK(ground_literals(Family::E) == std::vector<std::string>{"tt", "ff", "top"});
  CHECK(ground_literals(Family::L) == std::vector<std::string>{"bot", "tt", "ff", "top"});

  for (Family f : {Family::S, Family::C, Family::E, Family::L}) {
    const auto& names = ground_literals(f);
    for (size_t i = 0; i < names.size(); ++i) {
      CHECK(ground_index_of(f, names[i]) == static_cast<int>(i));
    }
  }
  CHECK_THROWS_AS(ground_index_of(Family::S, "bot"), Error);
}

TEST_CASE("arrow layers have the known cardinalities") {
  FrameStore store;
  CHECK(store.layer(Family::S, bb()).size() == 4);
  CHECK(store.layer(Family::C, bb()).size() == 11);
  CHECK(store.layer(Family::E, bb()).size() == 11);
  CHECK(store.layer(Family::L, bb()).size() == 36);
  CHECK(store.layer(Family::C, Type::arrow(b(), bb())).size() == 197);
  CHECK(store.layer(Family::S, Type::arrow(b(), bb())).size() == 16);
  CHECK(store.layer(Family::S, Type::arrow(bb(), b())).size() == 16);
}

TEST_CASE("S layers are full function spaces") {
  // The discrete order makes every table monotone.
  FrameStore store;
  const Layer& l1 = store.layer(Family::S, bb());
  CHECK(l1.size() == 4);
  for (int i = 0; i < l1.size(); ++i) {
    for (int j = 0; j < l1.size(); ++j) {
      CHECK(l1.leq(i, j) == (i == j));
    }
  }
}

TEST_CASE("layer element order is the lex order on tables and a linear extension") {
  FrameStore store;
  for (Family f : {Family::C, Family::E, Family::L}) {
    const Layer& lay = store.layer(f, bb());
    CHECK(cover_structure(lay).index_order_is_linear_extension);
    for (int i = 0; i + 1 < lay.size(); ++i) {
      auto a = lay.table(i);
      auto c = lay.table(i + 1);
      CHECK(std::lexicographical_compare(a.begin(), a.end(), c.begin(), c.end()));
    }
  }
}

TEST_CASE("tables round-trip through index_of_table and apply reads them back") {
  FrameStore store;
  const Layer& lay = store.layer(Family::C, bb());
  for (int i = 0; i < lay.size(); ++i) {
    auto t = lay.table(i);
    auto back = lay.index_of_table(t);
    REQUIRE(back.has_value());
    CHECK(*back == i);
    for (int x = 0; x < lay.dom()->size(); ++x) CHECK(lay.apply(i, x) == t[x]);
  }

  // The identity on C ground: bot->bot, tt->tt, ff->ff.
  std::vector<int32_t> id = {0, 1, 2};
  Element e = element_of_table(lay, id);
  CHECK(e.layer == &lay);
  CHECK(lay.apply(e.index, 1) == 1);
}

TEST_CASE("element_of_table rejects non-monotone tables") {
  FrameStore store;
  const Layer& lay = store.layer(Family::C, bb());
  // bot maps above its successors: f(bot)=tt but f(tt)=bot.
  std::vector<int32_t> bad = {1, 0, 0};
  try {
    element_of_table(lay, bad);
    FAIL("expected NotMonotone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonotone);
  }
}

TEST_CASE("a blown budget evicts the entry so a retry can rebuild") {
  FrameStore store(10);
  CHECK_THROWS_AS(store.layer(Family::C, bb()), Error);
  store.set_budget(1'000'000);
  CHECK(store.layer(Family::C, bb()).size() == 11);
}

TEST_CASE("apply checks family and store compatibility") {
  FrameStore store;
  FrameStore other;
  const Layer& cbb = store.layer(Family::C, bb());
  const Layer& cb = store.layer(Family::C, b());
  const Layer& eb = store.layer(Family::E, b());
  Element f{&cbb, 0};

  CHECK(apply(f, Element{&cb, 1}).layer == &cb);

  try {
    apply(f, Element{&eb, 0});
    FAIL("expected FamilyMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FamilyMismatch);
  }

  const Layer& foreign = other.layer(Family::C, b());
  try {
    apply(f, Element{&foreign, 1});
    FAIL("expected MismatchedSpaces");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MismatchedSpaces);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::S, Family::C, Family::E, Family::L}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("Q"), Error);
}

#include "framelab/arrows.hpp"

#include "framelab/definability.hpp"
#include "framelab/errors.hpp"
#include "framelab/semantics.hpp"

namespace framelab {

namespace {

Relation synthesized_relation(FrameStore& store, Family src,
                              const std::vector<TypeRef>& types) {
  std::map<TypeRef, std::vector<TermPtr>, TypeStrLess> witnesses;
  for (TypeRef t : types) {
    const Layer& lay = store.layer(Family::S, t);
    auto& dst = witnesses[t];
    for (int i = 0; i < lay.size(); ++i) {
      dst.push_back(synthesize_S(store, Element{&lay, i}).term);
    }
  }
  return term_induced_from_terms(store, Signature::lambda_s(), src, Family::S, witnesses,
                                 "synthesized witnesses for every S element");
}

Relation saturation_relation(FrameStore& store) {
  // Saturate within C at bool->bool (covering bool); the witness terms then
  // relate their L and C denotations.
  TypeRef target = Type::arrow(Type::ground(), Type::ground());
  SaturationReport sat = saturate_definables(store, Signature::lambda_c(), Family::C, target);
  return term_induced_from_terms(store, Signature::lambda_c(), Family::L, Family::C,
                                 witness_terms(sat),
                                 "saturation witnesses, skeleton depth " +
                                     std::to_string(sat.skeleton_depth));
}

}  // namespace

std::vector<TypeRef> default_frontier(int max_order) {
  TypeRef b = Type::ground();
  TypeRef bb = Type::arrow(b, b);
  std::vector<TypeRef> all = {b, bb, Type::arrow(b, bb), Type::arrow(bb, b)};
  std::vector<TypeRef> out;
  for (TypeRef t : all) {
    if (t->order() <= max_order) out.push_back(t);
  }
  return out;
}

const std::vector<std::pair<int32_t, int32_t>>& e_bool_pairs() {
  static const std::vector<std::pair<int32_t, int32_t>> pairs = {{0, 2}, {1, 0}, {2, 1}};
  return pairs;
}

const std::vector<std::pair<int32_t, int32_t>>& totality_pairs() {
  static const std::vector<std::pair<int32_t, int32_t>> pairs = {{1, 0}, {2, 1}};
  return pairs;
}

const std::vector<std::pair<Family, Family>>& collapse_arrows() {
  static const std::vector<std::pair<Family, Family>> arrows = {
      {Family::C, Family::S}, {Family::E, Family::S}, {Family::C, Family::E},
      {Family::E, Family::C}, {Family::L, Family::C}, {Family::L, Family::E}};
  return arrows;
}

Relation arrow_relation(FrameStore& store, Family src, Family tgt,
                        const std::vector<TypeRef>& types, int corpus_depth) {
  if ((src == Family::C || src == Family::E) && tgt == Family::S) {
    Relation corpus = term_induced_relation(store, Signature::lambda_s(), src, Family::S, types,
                                            corpus_depth);
    return relation_union(corpus, synthesized_relation(store, src, types));
  }
  if (src == Family::C && tgt == Family::E) {
    return lift_logical(store, Family::C, Family::E, e_bool_pairs(), types);
  }
  if (src == Family::E && tgt == Family::C) {
    std::vector<std::pair<int32_t, int32_t>> inverse;
    for (auto [x, y] : e_bool_pairs()) inverse.emplace_back(y, x);
    return lift_logical(store, Family::E, Family::C, inverse, types);
  }
  if (src == Family::L && tgt == Family::C) {
    // The L frame outgrows the budget above order 1; keep the corpus to the
    // types whose layers both sides can build and report the rest as skipped.
    std::vector<TypeRef> feasible;
    for (TypeRef t : types) {
      try {
        store.layer(Family::L, t);
        store.layer(Family::C, t);
        feasible.push_back(t);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
      }
    }
    Relation corpus = term_induced_relation(store, Signature::lambda_c(), Family::L, Family::C,
                                            feasible, corpus_depth);
    return relation_union(corpus, saturation_relation(store));
  }
  if (src == Family::L && (tgt == Family::E || tgt == Family::S)) {
    Relation first = arrow_relation(store, Family::L, Family::C, types, corpus_depth);
    Relation second = arrow_relation(store, Family::C, tgt, types, corpus_depth);
    return compose(first, second);
  }
  fail(ErrorKind::Usage, std::string("no collapse recipe for ") + family_name(src) + " -> " +
                             family_name(tgt));
}

CollapseCertificate certify_arrow(FrameStore& store, Family src, Family tgt, int max_order,
                                  int corpus_depth) {
  auto frontier = default_frontier(max_order);
  Relation rel = arrow_relation(store, src, tgt, frontier, corpus_depth);
  std::vector<TypeRef> required, extended;
  for (TypeRef t : frontier) {
    bool req = src != Family::L || t->is_ground() || t == Type::arrow(Type::ground(), Type::ground());
    (req ? required : extended).push_back(t);
  }
  return certify_collapse(store, rel, required, extended);
}

CollapseCertificate certify_composed(FrameStore& store, Family src, Family via, Family tgt,
                                     int max_order, int corpus_depth) {
  auto frontier = default_frontier(max_order);
  Relation first = arrow_relation(store, src, via, frontier, corpus_depth);
  Relation second = arrow_relation(store, via, tgt, frontier, corpus_depth);
  Relation composed = compose(first, second);
  std::vector<TypeRef> required, extended;
  for (TypeRef t : frontier) {
    bool req = src != Family::L || t->is_ground() || t == Type::arrow(Type::ground(), Type::ground());
    (req ? required : extended).push_back(t);
  }
  return certify_collapse(store, composed, required, extended);
}

}  // namespace framelab

#include "framelab/relations.hpp"

#include <algorithm>
#include <set>

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"
#include "framelab/semantics.hpp"

namespace framelab {

namespace {

constexpr int kUnhitCap = 16;
constexpr int kViolationCap = 10;

void sort_unique(std::vector<std::pair<int32_t, int32_t>>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<std::pair<int32_t, int32_t>> checked_ground_pairs(
    Family src, Family tgt, const std::vector<std::pair<int32_t, int32_t>>& raw) {
  const int ns = ground_poset(src).size();
  const int nt = ground_poset(tgt).size();
  for (auto [x, y] : raw) {
    if (x < 0 || x >= ns || y < 0 || y >= nt) {
      fail(ErrorKind::NoSuchElement,
           "ground pair (" + std::to_string(x) + ", " + std::to_string(y) +
               ") out of range for " + std::string(family_name(src)) + " x " +
               std::string(family_name(tgt)));
    }
  }
  auto pairs = raw;
  sort_unique(pairs);
  return pairs;
}

void collect_subtypes(TypeRef t, std::set<TypeRef, TypeStrLess>& out) {
  if (!out.insert(t).second) return;
  if (t->is_arrow()) {
    collect_subtypes(t->arg(), out);
    collect_subtypes(t->res(), out);
  }
}

// All (f, g) with f R g pointwise along the argument relation.  Candidate
// rows are split by f; row order makes the parallel concatenation identical
// to the serial scan.
TypedPairs lift_arrow_pairs(const Layer& sl, const Layer& tl, const TypedPairs& rarg,
                            const TypedPairs& rres, bool parallel) {
  const int n1 = sl.size();
  const int n2 = tl.size();
  auto accept = [&](int f, int g) {
    for (auto [x, y] : rarg.pairs) {
      if (!rres.contains(sl.apply(f, x), tl.apply(g, y))) return false;
    }
    return true;
  };

  TypedPairs out;
  if (!parallel || par::serial_only()) {
    for (int f = 0; f < n1; ++f) {
      for (int g = 0; g < n2; ++g) {
        if (accept(f, g)) out.pairs.emplace_back(f, g);
      }
    }
    return out;
  }

  std::vector<std::vector<std::pair<int32_t, int32_t>>> rows(n1);
#pragma omp parallel for schedule(dynamic) num_threads(par::effective_threads())
  for (int f = 0; f < n1; ++f) {
    for (int g = 0; g < n2; ++g) {
      if (accept(f, g)) rows[f].emplace_back(f, g);
    }
  }
  for (auto& row : rows) {
    out.pairs.insert(out.pairs.end(), row.begin(), row.end());
  }
  return out;
}

Relation lift_core(FrameStore& store, Family src, Family tgt,
                   const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                   const std::vector<TypeRef>& types, bool parallel) {
  Relation rel;
  rel.source = src;
  rel.target = tgt;
  rel.provenance = Provenance::LiftedLogical;
  rel.detail = "logical lift of " + std::to_string(ground_pairs.size()) + " ground pairs";
  rel.exact = true;

  auto base = checked_ground_pairs(src, tgt, ground_pairs);
  for (TypeRef t : subtype_closure(types)) {
    if (t->is_ground()) {
      rel.by_type[t] = TypedPairs{base};
      continue;
    }
    const Layer& sl = store.layer(src, t);
    const Layer& tl = store.layer(tgt, t);
    const TypedPairs& rarg = rel.by_type.at(t->arg());
    const TypedPairs& rres = rel.by_type.at(t->res());
    rel.by_type[t] = lift_arrow_pairs(sl, tl, rarg, rres, parallel);
  }
  return rel;
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::LiftedLogical: return "lifted-logical";
    case Provenance::TermInduced: return "term-induced";
    case Provenance::Composed: return "composed";
  }
  return "unknown";
}

const char* surjectivity_name(Surjectivity s) {
  switch (s) {
    case Surjectivity::Yes: return "yes";
    case Surjectivity::No: return "no";
    case Surjectivity::Undecided: return "undecided-at-budget";
  }
  return "unknown";
}

bool TypedPairs::contains(int32_t x, int32_t y) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair<int32_t, int32_t>{x, y});
}

std::vector<TypeRef> subtype_closure(const std::vector<TypeRef>& types) {
  std::set<TypeRef, TypeStrLess> seen;
  for (TypeRef t : types) collect_subtypes(t, seen);
  // TypeStrLess orders by rendered length first, so the parts of an arrow
  // type always precede it.
  return {seen.begin(), seen.end()};
}

Relation lift_logical(FrameStore& store, Family src, Family tgt,
                      const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                      const std::vector<TypeRef>& types) {
  return lift_core(store, src, tgt, ground_pairs, types, true);
}

Relation lift_logical_serial(FrameStore& store, Family src, Family tgt,
                             const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                             const std::vector<TypeRef>& types) {
  return lift_core(store, src, tgt, ground_pairs, types, false);
}

Relation term_induced_relation(FrameStore& store, const Signature& sig, Family src, Family tgt,
                               const std::vector<TypeRef>& types, int depth) {
  require_model(store, sig, src);
  require_model(store, sig, tgt);

  Relation rel;
  rel.source = src;
  rel.target = tgt;
  rel.provenance = Provenance::TermInduced;
  rel.detail = sig.name() + " corpus to depth " + std::to_string(depth);
  rel.exact = false;

  for (TypeRef t : types) {
    if (rel.by_type.count(t)) continue;
    auto corpus = enumerate_closed_terms(sig, t, depth);
    auto vs = interpret_corpus(store, corpus, src);
    auto vt = interpret_corpus(store, corpus, tgt);
    TypedPairs tp;
    tp.pairs.reserve(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) tp.pairs.emplace_back(vs[i], vt[i]);
    sort_unique(tp.pairs);
    rel.by_type[t] = std::move(tp);
  }
  return rel;
}

Relation term_induced_from_terms(FrameStore& store, const Signature& sig, Family src, Family tgt,
                                 const std::map<TypeRef, std::vector<TermPtr>, TypeStrLess>& terms,
                                 const std::string& detail) {
  require_model(store, sig, src);
  require_model(store, sig, tgt);

  Relation rel;
  rel.source = src;
  rel.target = tgt;
  rel.provenance = Provenance::TermInduced;
  rel.detail = detail;
  rel.exact = false;

  for (const auto& [t, ts] : terms) {
    auto vs = interpret_corpus(store, ts, src);
    auto vt = interpret_corpus(store, ts, tgt);
    TypedPairs tp;
    tp.pairs.reserve(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) tp.pairs.emplace_back(vs[i], vt[i]);
    sort_unique(tp.pairs);
    rel.by_type[t] = std::move(tp);
  }
  return rel;
}

Relation relation_union(const Relation& a, const Relation& b) {
  if (a.source != b.source || a.target != b.target) {
    fail(ErrorKind::FamilyMismatch, "cannot union relations over different frame pairs");
  }
  Relation rel;
  rel.source = a.source;
  rel.target = a.target;
  rel.provenance = a.provenance == b.provenance ? a.provenance : Provenance::Composed;
  rel.detail = a.detail + " + " + b.detail;
  rel.exact = a.exact && b.exact;
  rel.by_type = a.by_type;
  for (const auto& [t, tp] : b.by_type) {
    auto& dst = rel.by_type[t];
    dst.pairs.insert(dst.pairs.end(), tp.pairs.begin(), tp.pairs.end());
    sort_unique(dst.pairs);
  }
  return rel;
}

std::map<TypeRef, PartialFunctionVerdict, TypeStrLess> check_partial_function(const Relation& rel) {
  std::map<TypeRef, PartialFunctionVerdict, TypeStrLess> out;
  for (const auto& [t, tp] : rel.by_type) {
    PartialFunctionVerdict v;
    v.ok = true;
    for (size_t i = 1; i < tp.pairs.size(); ++i) {
      const auto& prev = tp.pairs[i - 1];
      const auto& cur = tp.pairs[i];
      if (prev.first == cur.first && prev.second != cur.second) {
        v.ok = false;
        v.counterexample = {prev.first, prev.second, cur.second};
        break;
      }
    }
    out[t] = v;
  }
  return out;
}

std::map<TypeRef, SurjectiveVerdict, TypeStrLess> check_surjective(FrameStore& store,
                                                                   const Relation& rel) {
  std::map<TypeRef, SurjectiveVerdict, TypeStrLess> out;
  for (const auto& [t, tp] : rel.by_type) {
    SurjectiveVerdict v;
    v.total = store.layer(rel.target, t).size();
    std::vector<char> hit(static_cast<size_t>(v.total), 0);
    for (auto [x, y] : tp.pairs) hit[static_cast<size_t>(y)] = 1;
    for (int32_t y = 0; y < v.total; ++y) {
      if (hit[static_cast<size_t>(y)]) {
        ++v.hit;
      } else if (static_cast<int>(v.unhit.size()) < kUnhitCap) {
        v.unhit.push_back(y);
      }
    }
    if (v.hit == v.total) {
      v.verdict = Surjectivity::Yes;
    } else {
      v.verdict = rel.exact ? Surjectivity::No : Surjectivity::Undecided;
    }
    out[t] = v;
  }
  return out;
}

Relation compose(const Relation& first, const Relation& second) {
  if (first.target != second.source) {
    fail(ErrorKind::FamilyMismatch,
         std::string("cannot compose: first relation targets ") + family_name(first.target) +
             " but second starts from " + family_name(second.source));
  }
  Relation rel;
  rel.source = first.source;
  rel.target = second.target;
  rel.provenance = Provenance::Composed;
  rel.detail = "(" + first.detail + ") ; (" + second.detail + ")";
  rel.exact = first.exact && second.exact;

  for (const auto& [t, tp] : first.by_type) {
    auto it = second.by_type.find(t);
    if (it == second.by_type.end()) continue;
    const auto& sp = it->second.pairs;
    TypedPairs tpout;
    for (auto [x, y] : tp.pairs) {
      auto lo = std::lower_bound(sp.begin(), sp.end(),
                                 std::pair<int32_t, int32_t>{y, INT32_MIN});
      for (auto jt = lo; jt != sp.end() && jt->first == y; ++jt) {
        tpout.pairs.emplace_back(x, jt->second);
      }
    }
    sort_unique(tpout.pairs);
    rel.by_type[t] = std::move(tpout);
  }
  return rel;
}

CollapseCertificate certify_collapse(FrameStore& store, const Relation& rel,
                                     const std::vector<TypeRef>& required_types,
                                     const std::vector<TypeRef>& extended_types) {
  CollapseCertificate cert;
  cert.source = rel.source;
  cert.target = rel.target;
  cert.method = std::string(provenance_name(rel.provenance)) + ": " + rel.detail;
  cert.budget = store.budget();
  cert.notes =
      "Partial functionality is exhaustive at the ground type and the relation is "
      "pre-logical by construction, so surjectivity at every listed type gives a "
      "pre-logical surjection by the reduction lemma; the higher-type "
      "partial-function checks are retained as cross-validation.";

  std::vector<std::pair<TypeRef, bool>> order;
  std::set<TypeRef, TypeStrLess> seen;
  for (TypeRef t : required_types) {
    if (seen.insert(t).second) order.emplace_back(t, true);
  }
  for (TypeRef t : extended_types) {
    if (seen.insert(t).second) order.emplace_back(t, false);
  }

  bool ok = true;
  for (auto [t, required] : order) {
    CollapseCertificate::PerType row;
    row.type = t;
    row.required = required;

    auto it = rel.by_type.find(t);
    if (it == rel.by_type.end()) {
      row.skipped = true;
      row.skip_reason = "no pairs recorded at this type";
      try {
        store.layer(rel.source, t);
        store.layer(rel.target, t);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        row.skip_reason = e.what();
      }
      if (required) ok = false;
      cert.per_type.push_back(std::move(row));
      continue;
    }
    const TypedPairs& tp = it->second;

    row.pf.ok = true;
    for (size_t i = 1; i < tp.pairs.size(); ++i) {
      if (tp.pairs[i - 1].first == tp.pairs[i].first &&
          tp.pairs[i - 1].second != tp.pairs[i].second) {
        row.pf.ok = false;
        row.pf.counterexample = {tp.pairs[i].first, tp.pairs[i - 1].second, tp.pairs[i].second};
        break;
      }
    }
    if (!row.pf.ok) ok = false;

    try {
      row.surj.total = store.layer(rel.target, t).size();
      std::vector<char> hit(static_cast<size_t>(row.surj.total), 0);
      for (auto [x, y] : tp.pairs) hit[static_cast<size_t>(y)] = 1;
      for (int32_t y = 0; y < row.surj.total; ++y) {
        if (hit[static_cast<size_t>(y)]) {
          ++row.surj.hit;
        } else if (static_cast<int>(row.surj.unhit.size()) < kUnhitCap) {
          row.surj.unhit.push_back(y);
        }
      }
      if (row.surj.hit == row.surj.total) {
        row.surj.verdict = Surjectivity::Yes;
      } else {
        row.surj.verdict = rel.exact ? Surjectivity::No : Surjectivity::Undecided;
      }
      if (required && row.surj.verdict != Surjectivity::Yes) ok = false;
      if (!required && row.surj.verdict == Surjectivity::No) ok = false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      row.skipped = true;
      row.skip_reason = e.what();
      if (required) ok = false;
    }
    cert.per_type.push_back(std::move(row));
  }
  cert.certified = ok;
  return cert;
}

IsoCertificate certify_iso(FrameStore& store, Family left, Family right,
                           const std::vector<std::pair<int32_t, int32_t>>& ground_pairs,
                           const std::vector<TypeRef>& types) {
  IsoCertificate cert;
  cert.left = left;
  cert.right = right;
  cert.budget = store.budget();

  // Feasibility is downward closed: an arrow layer builds its parts first,
  // so filtering by layer construction keeps the closure self-contained.
  std::vector<TypeRef> feasible;
  std::vector<std::pair<TypeRef, std::string>> skipped;
  for (TypeRef t : subtype_closure(types)) {
    try {
      store.layer(left, t);
      store.layer(right, t);
      feasible.push_back(t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      skipped.emplace_back(t, e.what());
    }
  }

  Relation rel = lift_logical(store, left, right, ground_pairs, feasible);

  bool ok = true;
  for (TypeRef t : feasible) {
    IsoCertificate::PerType row;
    row.type = t;
    const Layer& ll = store.layer(left, t);
    const Layer& rl = store.layer(right, t);
    const auto& pairs = rel.by_type.at(t).pairs;
    row.pairs = static_cast<long long>(pairs.size());

    std::vector<char> sx(static_cast<size_t>(ll.size()), 0);
    std::vector<char> sy(static_cast<size_t>(rl.size()), 0);
    bool dup = false;
    for (auto [x, y] : pairs) {
      if (sx[static_cast<size_t>(x)]++ || sy[static_cast<size_t>(y)]++) dup = true;
    }
    row.bijection = !dup && row.pairs == ll.size() && row.pairs == rl.size();
    if (!row.bijection) {
      row.failure = "not a bijection: " + std::to_string(row.pairs) + " pairs over " +
                    std::to_string(ll.size()) + " and " + std::to_string(rl.size()) + " elements";
    }

    row.order_reversal = true;
    for (size_t i = 0; i < pairs.size() && row.order_reversal; ++i) {
      for (size_t j = 0; j < pairs.size(); ++j) {
        auto [x, y] = pairs[i];
        auto [x2, y2] = pairs[j];
        if (ll.leq(x, x2) != rl.leq(y2, y)) {
          row.order_reversal = false;
          row.failure = "order reversal fails at pairs (" + std::to_string(x) + "," +
                        std::to_string(y) + ") and (" + std::to_string(x2) + "," +
                        std::to_string(y2) + ")";
          break;
        }
      }
    }
    if (!row.bijection || !row.order_reversal) ok = false;
    cert.per_type.push_back(std::move(row));
  }
  for (auto& [t, reason] : skipped) {
    IsoCertificate::PerType row;
    row.type = t;
    row.skipped = true;
    row.skip_reason = reason;
    cert.per_type.push_back(std::move(row));
  }
  cert.certified = ok;
  return cert;
}

namespace {

// Membership of the constant's denotation pair, computed pointwise from the
// relations at its (ground) argument types; avoids building the constant's
// own layer.
bool constant_pair_related(const Relation& rel, const Constant& c) {
  std::vector<TypeRef> args;
  TypeRef t = c.type;
  while (t->is_arrow()) {
    args.push_back(t->arg());
    t = t->res();
  }
  auto need = [&](TypeRef u) -> const TypedPairs& {
    auto it = rel.by_type.find(u);
    if (it == rel.by_type.end()) {
      fail(ErrorKind::PreconditionFailed,
           "cannot verify constant " + c.name + ": relation has no pairs at type " + u->str());
    }
    return it->second;
  };
  for (TypeRef a : args) {
    if (!a->is_ground()) {
      fail(ErrorKind::PreconditionFailed,
           "cannot verify constant " + c.name + ": higher-order argument type " + a->str());
    }
  }
  const TypedPairs& res = need(t);
  if (args.empty()) {
    int x = semantic_apply_ground(rel.source, c.name, {});
    int y = semantic_apply_ground(rel.target, c.name, {});
    return res.contains(x, y);
  }

  std::vector<const TypedPairs*> argrels;
  for (TypeRef a : args) argrels.push_back(&need(a));
  std::vector<size_t> idx(args.size(), 0);
  for (;;) {
    std::vector<int> xs, ys;
    for (size_t i = 0; i < args.size(); ++i) {
      auto [x, y] = argrels[i]->pairs[idx[i]];
      xs.push_back(x);
      ys.push_back(y);
    }
    int rx = semantic_apply_ground(rel.source, c.name, std::span<const int>(xs));
    int ry = semantic_apply_ground(rel.target, c.name, std::span<const int>(ys));
    if (!res.contains(rx, ry)) return false;
    size_t k = args.size();
    while (k > 0) {
      if (++idx[k - 1] < argrels[k - 1]->pairs.size()) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return true;
}

}  // namespace

FundamentalReport check_fundamental_property(FrameStore& store, const Relation& rel,
                                             const Signature& sig, int depth) {
  require_model(store, sig, rel.source);
  require_model(store, sig, rel.target);

  FundamentalReport report;
  for (const Constant& c : sig.constants()) {
    if (!constant_pair_related(rel, c)) {
      fail(ErrorKind::PreconditionFailed,
           "constant " + c.name + " is not related to itself at type " + c.type->str());
    }
  }
  report.constants_ok = true;

  bool ok = true;
  for (const auto& [t, tp] : rel.by_type) {
    auto corpus = enumerate_closed_terms(sig, t, depth);
    auto vs = interpret_corpus(store, corpus, rel.source);
    auto vt = interpret_corpus(store, corpus, rel.target);
    report.terms_checked += static_cast<long long>(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
      if (!tp.contains(vs[i], vt[i])) {
        ok = false;
        if (static_cast<int>(report.violations.size()) < kViolationCap) {
          report.violations.push_back({t, corpus[i], vs[i], vt[i]});
        }
      }
    }
  }
  report.ok = ok && report.constants_ok;
  return report;
}

}  // namespace framelab

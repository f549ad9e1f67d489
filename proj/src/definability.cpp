#include "framelab/definability.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"
#include "framelab/relations.hpp"
#include "framelab/semantics.hpp"

namespace framelab {

namespace {

constexpr long long kBlock = 1 << 15;

TermPtr sig_const(const Signature& sig, std::string_view name) {
  const Constant* c = sig.find(name);
  if (!c) {
    fail(ErrorKind::UnknownConstant, "signature " + sig.name() + " has no constant " +
                                         std::string(name));
  }
  return Term::constant(*c);
}

TermPtr mk_if(const Signature& sig, TermPtr cond, TermPtr then_b, TermPtr else_b) {
  return Term::app(Term::app(Term::app(sig_const(sig, "if"), cond), then_b), else_b);
}

const Layer& s_layer(FrameStore& store, TypeRef t) { return store.layer(Family::S, t); }

}  // namespace

TermPtr synthesize_eq_S(FrameStore& store, TypeRef sigma) {
  const Signature& sig = Signature::lambda_s();
  TypeRef b = Type::ground();
  TermPtr eq;
  if (sigma->is_ground()) {
    auto tt = sig_const(sig, "true");
    auto ff = sig_const(sig, "false");
    auto y = Term::var(0, b);
    auto x = Term::var(1, b);
    auto same = mk_if(sig, y, tt, ff);
    auto diff = mk_if(sig, y, ff, tt);
    eq = Term::lam(b, Term::lam(b, mk_if(sig, x, same, diff)));
  } else {
    const Layer& dom = s_layer(store, sigma->arg());
    TermPtr eq_res = synthesize_eq_S(store, sigma->res());
    auto f = Term::var(1, sigma);
    auto g = Term::var(0, sigma);
    TermPtr acc;
    for (int i = dom.size() - 1; i >= 0; --i) {
      TermPtr a = synthesize_S(store, Element{&dom, i}).term;
      TermPtr test = Term::app(Term::app(eq_res, Term::app(f, a)), Term::app(g, a));
      acc = acc ? mk_if(sig, test, acc, sig_const(sig, "false")) : test;
    }
    eq = Term::lam(sigma, Term::lam(sigma, acc));
  }

  const Layer& lay = s_layer(store, sigma);
  Interpreter interp(store);
  Element e = interp.interpret(eq, Family::S);
  for (int a = 0; a < lay.size(); ++a) {
    for (int c = 0; c < lay.size(); ++c) {
      Element r = apply(apply(e, Element{&lay, a}), Element{&lay, c});
      int want = a == c ? 0 : 1;
      if (r.index != want) {
        fail(ErrorKind::Internal, "equality synthesis failed its recheck at " + sigma->str());
      }
    }
  }
  return eq;
}

SynthesisResult synthesize_S(FrameStore& store, const Element& target) {
  if (!target.layer) fail(ErrorKind::NoSuchElement, "synthesis target has no layer");
  if (target.layer->family() != Family::S) {
    fail(ErrorKind::FamilyMismatch, "synthesis targets the S family only");
  }
  TypeRef t = target.layer->type();
  if (target.layer != &s_layer(store, t)) {
    fail(ErrorKind::MismatchedSpaces, "synthesis target belongs to a different store");
  }
  const Signature& sig = Signature::lambda_s();

  // Uncurry t as t1 -> ... -> tk -> bool.  Every S layer is the full function
  // space, so an argument of type ti is pinned down by its ground
  // observations: its values on every tuple of closed domain points.  The
  // body is a single ground conditional tree over those observations, with a
  // truth constant at each leaf.
  std::vector<TypeRef> argtys;
  for (TypeRef g = t; g->is_arrow(); g = g->res()) argtys.push_back(g->arg());
  const int k = static_cast<int>(argtys.size());

  struct Probe {
    std::vector<TermPtr> tuple;        // closed terms fed to the argument
    std::vector<Element> values;       // their denotations, for evaluation
  };
  struct ArgPlan {
    const Layer* layer;
    std::vector<Probe> probes;
    std::map<std::vector<int>, int> element_by_obs;
  };
  std::vector<ArgPlan> plan(k);
  for (int i = 0; i < k; ++i) {
    ArgPlan& ap = plan[i];
    ap.layer = &s_layer(store, argtys[i]);
    ap.probes.push_back({});
    for (TypeRef g = argtys[i]; g->is_arrow(); g = g->res()) {
      const Layer& dom = s_layer(store, g->arg());
      std::vector<Probe> next;
      for (const Probe& p : ap.probes) {
        for (int d = 0; d < dom.size(); ++d) {
          Probe q = p;
          q.tuple.push_back(synthesize_S(store, Element{&dom, d}).term);
          q.values.push_back(Element{&dom, d});
          next.push_back(std::move(q));
        }
      }
      ap.probes = std::move(next);
    }
    for (int e = 0; e < ap.layer->size(); ++e) {
      std::vector<int> obs;
      for (const Probe& p : ap.probes) {
        Element v{ap.layer, e};
        for (const Element& a : p.values) v = apply(v, a);
        obs.push_back(v.index);
      }
      bool fresh = ap.element_by_obs.emplace(std::move(obs), e).second;
      if (!fresh) fail(ErrorKind::Internal, "S elements share an observation profile");
    }
  }

  // Leaves need the target applied through one element per argument; the
  // tree is walked depth first, one observation bit per conditional.
  std::function<TermPtr(int, size_t, std::vector<int>&, Element)> tree =
      [&](int i, size_t probe_at, std::vector<int>& obs, Element value) -> TermPtr {
    if (i == k) return sig_const(sig, value.index == 0 ? "true" : "false");
    ArgPlan& ap = plan[i];
    if (probe_at == ap.probes.size()) {
      auto hit = ap.element_by_obs.find(obs);
      if (hit == ap.element_by_obs.end()) {
        fail(ErrorKind::Internal, "observation profile misses every S element");
      }
      std::vector<int> fresh;
      return tree(i + 1, 0, fresh, apply(value, Element{ap.layer, hit->second}));
    }
    TermPtr probe = Term::var(k - 1 - i, argtys[i]);
    for (const TermPtr& a : ap.probes[probe_at].tuple) probe = Term::app(probe, a);
    obs.push_back(0);
    TermPtr then_b = tree(i, probe_at + 1, obs, value);
    obs.back() = 1;
    TermPtr else_b = tree(i, probe_at + 1, obs, value);
    obs.pop_back();
    return mk_if(sig, probe, then_b, else_b);
  };

  TermPtr term;
  if (k == 0) {
    term = sig_const(sig, target.index == 0 ? "true" : "false");
  } else {
    std::vector<int> obs;
    term = tree(0, 0, obs, target);
    for (int i = k - 1; i >= 0; --i) term = Term::lam(argtys[i], term);
  }

  Interpreter interp(store);
  Element back = interp.interpret(term, Family::S);
  if (!(back == target)) {
    fail(ErrorKind::Internal, "synthesis failed its denotation recheck at " + t->str());
  }
  return SynthesisResult{target, term, true};
}

std::vector<Macro> macro_library(const Signature& sig) {
  std::vector<Macro> out;
  if (!sig.find("if")) return out;
  TypeRef b = Type::ground();
  TermPtr nt = Term::lam(
      b, mk_if(sig, Term::var(0, b), sig_const(sig, "false"), sig_const(sig, "true")));
  out.push_back({"not", nt});
  if (sig.find("por")) {
    auto por = sig_const(sig, "por");
    auto neg = [&](TermPtr m) { return Term::app(nt, m); };
    auto por2 = [&](TermPtr m, TermPtr n) { return Term::app(Term::app(por, m), n); };
    TermPtr pand = Term::lam(
        b, Term::lam(b, neg(por2(neg(Term::var(1, b)), neg(Term::var(0, b))))));
    out.push_back({"pand", pand});
    auto pand2 = [&](TermPtr m, TermPtr n) { return Term::app(Term::app(pand, m), n); };
    auto c = Term::var(2, b);
    auto m = Term::var(1, b);
    auto n = Term::var(0, b);
    TermPtr pif = Term::lam(
        b, Term::lam(b, Term::lam(b, por2(pand2(c, m), por2(pand2(neg(c), n), pand2(m, n))))));
    out.push_back({"pif", pif});
  }
  return out;
}

namespace {

// One skeleton body: its term and its value at every context assignment.
struct Rep {
  TermPtr term;
  std::vector<int32_t> vec;
};

struct SkeletonContext {
  FrameStore& store;
  const Signature& sig;
  Family family;
  const std::set<TypeRef, TypeStrLess>& universe;
  const std::map<TypeRef, std::map<int32_t, TermPtr>, TypeStrLess>& known;

  TypeRef type;
  std::vector<TypeRef> binders;  // x1..xk, outermost first
  std::vector<long long> strides;
  long long envs = 1;

  std::vector<Rep> pool;  // bodies of ground type, discovery order
  std::set<std::vector<int32_t>> seen;

  int32_t digit(long long e, int j) const {
    int m = store.layer(family, binders[static_cast<size_t>(j)]).size();
    return static_cast<int32_t>((e / strides[static_cast<size_t>(j)]) % m);
  }
};

// Argument pools for arrow positions: context variables of that exact type,
// then known definables at it.
std::vector<Rep> arrow_atoms(SkeletonContext& ctx, TypeRef u) {
  std::vector<Rep> atoms;
  const int k = static_cast<int>(ctx.binders.size());
  for (int j = 0; j < k; ++j) {
    if (ctx.binders[static_cast<size_t>(j)] != u) continue;
    Rep r;
    r.term = Term::var(k - 1 - j, u);
    r.vec.resize(static_cast<size_t>(ctx.envs));
    for (long long e = 0; e < ctx.envs; ++e) r.vec[static_cast<size_t>(e)] = ctx.digit(e, j);
    atoms.push_back(std::move(r));
  }
  auto it = ctx.known.find(u);
  if (it != ctx.known.end()) {
    for (const auto& [idx, w] : it->second) {
      Rep r;
      r.term = w;
      r.vec.assign(static_cast<size_t>(ctx.envs), idx);
      atoms.push_back(std::move(r));
    }
  }
  return atoms;
}

// Evaluates and collects every full application of one head over the given
// argument pools, in flat odometer order (rightmost fastest).  Values are
// computed in parallel into positional blocks; the dedup merge scans blocks
// in order, so the outcome matches the serial reference exactly.
void sweep_head(SkeletonContext& ctx, const TermPtr& head_term, std::string_view constant,
                const std::vector<const std::vector<Rep>*>& pools,
                const std::vector<const Layer*>& chain, std::vector<Rep>& fresh) {
  const size_t r = pools.size();
  long long total = 1;
  for (const auto* p : pools) {
    if (p->empty()) return;
    total *= static_cast<long long>(p->size());
  }
  if (total > 64 * ctx.store.budget()) {
    fail(ErrorKind::BudgetExceeded,
         "skeleton product at " + ctx.type->str() + " exceeds the scan guard");
  }

  const long long E = ctx.envs;
  std::vector<int32_t> buf;
  std::vector<size_t> digits(r);
  auto decode = [&](long long flat, std::vector<size_t>& d) {
    for (size_t i = r; i-- > 0;) {
      d[i] = static_cast<size_t>(flat % static_cast<long long>(pools[i]->size()));
      flat /= static_cast<long long>(pools[i]->size());
    }
  };

  for (long long start = 0; start < total; start += kBlock) {
    const long long n = std::min(kBlock, total - start);
    buf.assign(static_cast<size_t>(n * E), 0);
    const bool serial = par::serial_only();
#pragma omp parallel for schedule(static) num_threads(par::effective_threads()) if (!serial)
    for (long long i = 0; i < n; ++i) {
      std::vector<size_t> d(r);
      decode(start + i, d);
      std::vector<int> args(r);
      for (long long e = 0; e < E; ++e) {
        int32_t v;
        if (!constant.empty()) {
          for (size_t a = 0; a < r; ++a) {
            args[a] = (*pools[a])[d[a]].vec[static_cast<size_t>(e)];
          }
          v = static_cast<int32_t>(semantic_apply_ground(
              ctx.family, constant, std::span<const int>(args.data(), args.size())));
        } else {
          // Head is a chained element: start value then layer applications.
          int32_t cur = (*pools[0])[d[0]].vec[static_cast<size_t>(e)];
          if (chain.empty()) {
            v = cur;
          } else {
            v = cur;
            for (size_t a = 1; a < r; ++a) {
              v = chain[a - 1]->apply(v, (*pools[a])[d[a]].vec[static_cast<size_t>(e)]);
            }
          }
        }
        buf[static_cast<size_t>(i * E + e)] = v;
      }
    }
    for (long long i = 0; i < n; ++i) {
      std::vector<int32_t> vec(buf.begin() + static_cast<long long>(i * E),
                               buf.begin() + static_cast<long long>((i + 1) * E));
      if (!ctx.seen.insert(vec).second) continue;
      decode(start + i, digits);
      TermPtr term = head_term;
      size_t first_arg = constant.empty() ? 1 : 0;
      if (constant.empty()) term = (*pools[0])[digits[0]].term;
      for (size_t a = first_arg; a < r; ++a) {
        term = Term::app(term, (*pools[a])[digits[a]].term);
      }
      fresh.push_back(Rep{std::move(term), std::move(vec)});
    }
  }
}

// One spine level: constants first (declaration order), then context
// variables, then known definables at arrow types (universe order).
void sweep_level(SkeletonContext& ctx, std::vector<Rep>& fresh) {
  const int k = static_cast<int>(ctx.binders.size());
  std::map<TypeRef, std::vector<Rep>, TypeStrLess> atom_cache;
  auto pools_for = [&](const std::vector<TypeRef>& argtys,
                       std::vector<const std::vector<Rep>*>& pools) {
    for (TypeRef u : argtys) {
      if (u->is_ground()) {
        pools.push_back(&ctx.pool);
      } else {
        auto it = atom_cache.find(u);
        if (it == atom_cache.end()) it = atom_cache.emplace(u, arrow_atoms(ctx, u)).first;
        pools.push_back(&it->second);
      }
    }
  };
  auto spine_types = [](TypeRef t) {
    std::vector<TypeRef> args;
    while (t->is_arrow()) {
      args.push_back(t->arg());
      t = t->res();
    }
    return args;
  };

  for (const Constant& c : ctx.sig.constants()) {
    if (c.type->is_ground() || !has_constant(ctx.family, c.name)) continue;
    auto argtys = spine_types(c.type);
    std::vector<const std::vector<Rep>*> pools;
    pools_for(argtys, pools);
    sweep_head(ctx, Term::constant(c), c.name, pools, {}, fresh);
  }

  auto chain_layers = [&](TypeRef t) {
    std::vector<const Layer*> chain;
    while (t->is_arrow()) {
      chain.push_back(&ctx.store.layer(ctx.family, t));
      t = t->res();
    }
    return chain;
  };

  for (int j = 0; j < k; ++j) {
    TypeRef u = ctx.binders[static_cast<size_t>(j)];
    if (u->is_ground()) continue;
    Rep self;
    self.term = Term::var(k - 1 - j, u);
    self.vec.resize(static_cast<size_t>(ctx.envs));
    for (long long e = 0; e < ctx.envs; ++e) self.vec[static_cast<size_t>(e)] = ctx.digit(e, j);
    std::vector<Rep> head_pool;
    head_pool.push_back(std::move(self));
    auto argtys = spine_types(u);
    std::vector<const std::vector<Rep>*> pools;
    pools.push_back(&head_pool);
    pools_for(argtys, pools);
    sweep_head(ctx, nullptr, "", pools, chain_layers(u), fresh);
  }

  for (TypeRef u : ctx.universe) {
    if (u->is_ground()) continue;
    auto it = ctx.known.find(u);
    if (it == ctx.known.end() || it->second.empty()) continue;
    std::vector<Rep> head_pool;
    for (const auto& [idx, w] : it->second) {
      Rep r;
      r.term = w;
      r.vec.assign(static_cast<size_t>(ctx.envs), idx);
      head_pool.push_back(std::move(r));
    }
    auto argtys = spine_types(u);
    std::vector<const std::vector<Rep>*> pools;
    pools.push_back(&head_pool);
    pools_for(argtys, pools);
    sweep_head(ctx, nullptr, "", pools, chain_layers(u), fresh);
  }
}

int32_t fold_vec(FrameStore& store, Family f, TypeRef t, std::span<const int32_t> vec) {
  if (t->is_ground()) return vec[0];
  const Layer& lay = store.layer(f, t);
  const int m = store.layer(f, t->arg()).size();
  const size_t block = vec.size() / static_cast<size_t>(m);
  std::vector<int32_t> table(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    table[static_cast<size_t>(i)] = fold_vec(store, f, t->res(), vec.subspan(i * block, block));
  }
  auto idx = lay.index_of_table(table);
  if (!idx) fail(ErrorKind::Internal, "skeleton value is not monotone at " + t->str());
  return static_cast<int32_t>(*idx);
}

class EagernessOrder final : public Order {
 public:
  explicit EagernessOrder(const Order& base) : base_(base) {}
  int size() const override { return base_.size(); }
  bool leq(int a, int b) const override { return base_.leq(b, a); }

 private:
  const Order& base_;
};

}  // namespace

SaturationReport saturate_definables(FrameStore& store, const Signature& sig, Family f,
                                     TypeRef target_type, int skeleton_depth) {
  require_model(store, sig, f);
  SaturationReport report;
  report.signature = sig.name();
  report.family = f;
  report.target_type = target_type;
  report.skeleton_depth = skeleton_depth;

  auto closure = subtype_closure({target_type});
  std::set<TypeRef, TypeStrLess> universe(closure.begin(), closure.end());
  std::map<TypeRef, std::map<int32_t, TermPtr>, TypeStrLess> known;
  for (TypeRef t : closure) known[t];

  Interpreter interp(store);
  auto add = [&](TypeRef t, int32_t idx, const TermPtr& witness, bool verify) {
    auto& slot = known[t];
    if (slot.count(idx)) return false;
    if (verify) {
      Element back = interp.interpret(witness, f);
      if (!(back == Element{&store.layer(f, t), idx})) {
        fail(ErrorKind::Internal, "saturation witness failed its recheck at " + t->str());
      }
    }
    slot.emplace(idx, witness);
    return true;
  };

  for (const Constant& c : sig.constants()) {
    if (!universe.count(c.type)) continue;
    Element e = constant_element(store, f, c);
    add(c.type, e.index, Term::constant(c), true);
  }
  for (const Macro& m : macro_library(sig)) {
    TypeRef t = m.term->type();
    if (!universe.count(t)) continue;
    Element e = interp.interpret(m.term, f);
    add(t, e.index, m.term, false);
  }

  for (;;) {
    ++report.passes;
    bool changed = false;

    // Application closure over known definables.
    for (TypeRef t : closure) {
      if (!t->is_arrow()) continue;
      const Layer& lay = store.layer(f, t);
      std::vector<std::pair<int32_t, TermPtr>> fns(known[t].begin(), known[t].end());
      std::vector<std::pair<int32_t, TermPtr>> args(known[t->arg()].begin(),
                                                    known[t->arg()].end());
      for (const auto& [fi, fw] : fns) {
        for (const auto& [xi, xw] : args) {
          int32_t ri = lay.apply(fi, xi);
          if (add(t->res(), ri, Term::app(fw, xw), true)) changed = true;
        }
      }
    }

    // Abstraction over type-directed skeletons.
    for (TypeRef t : closure) {
      SkeletonContext ctx{store, sig, f, universe, known, t, {}, {}, 1, {}, {}};
      TypeRef g = t;
      while (g->is_arrow()) {
        ctx.binders.push_back(g->arg());
        g = g->res();
      }
      const int k = static_cast<int>(ctx.binders.size());
      ctx.strides.assign(static_cast<size_t>(k), 1);
      for (int j = k - 2; j >= 0; --j) {
        ctx.strides[static_cast<size_t>(j)] =
            ctx.strides[static_cast<size_t>(j + 1)] *
            store.layer(f, ctx.binders[static_cast<size_t>(j + 1)]).size();
      }
      for (int j = 0; j < k; ++j) {
        ctx.envs *= store.layer(f, ctx.binders[static_cast<size_t>(j)]).size();
      }

      // Depth-1 atoms: ground context variables, then known ground
      // definables.
      for (int j = 0; j < k; ++j) {
        if (!ctx.binders[static_cast<size_t>(j)]->is_ground()) continue;
        Rep r;
        r.term = Term::var(k - 1 - j, ctx.binders[static_cast<size_t>(j)]);
        r.vec.resize(static_cast<size_t>(ctx.envs));
        for (long long e = 0; e < ctx.envs; ++e) r.vec[static_cast<size_t>(e)] = ctx.digit(e, j);
        if (ctx.seen.insert(r.vec).second) ctx.pool.push_back(std::move(r));
      }
      for (const auto& [idx, w] : known[Type::ground()]) {
        Rep r;
        r.term = w;
        r.vec.assign(static_cast<size_t>(ctx.envs), idx);
        if (ctx.seen.insert(r.vec).second) ctx.pool.push_back(std::move(r));
      }

      for (int level = 2; level <= skeleton_depth; ++level) {
        std::vector<Rep> fresh;
        sweep_level(ctx, fresh);
        for (auto& r : fresh) ctx.pool.push_back(std::move(r));
      }

      for (const Rep& r : ctx.pool) {
        int32_t idx = fold_vec(store, f, t, r.vec);
        TermPtr wrapped = r.term;
        for (int j = k - 1; j >= 0; --j) {
          wrapped = Term::lam(ctx.binders[static_cast<size_t>(j)], wrapped);
        }
        if (add(t, idx, wrapped, true)) changed = true;
      }
    }

    if (!changed) {
      report.fixpoint = true;
      break;
    }
  }

  for (TypeRef t : closure) {
    SaturationReport::PerType row;
    row.type = t;
    row.layer_size = store.layer(f, t).size();
    row.witnesses = known[t];
    for (const auto& [idx, w] : row.witnesses) row.defined.push_back(idx);
    for (int32_t i = 0; i < row.layer_size; ++i) {
      if (!row.witnesses.count(i)) row.undefined.push_back(i);
    }
    report.per_type.push_back(std::move(row));
  }
  return report;
}

std::map<TypeRef, std::vector<TermPtr>, TypeStrLess> witness_terms(
    const SaturationReport& report) {
  std::map<TypeRef, std::vector<TermPtr>, TypeStrLess> out;
  for (const auto& row : report.per_type) {
    auto& dst = out[row.type];
    for (const auto& [idx, w] : row.witnesses) dst.push_back(w);
  }
  return out;
}

TotalityReport totality_classes(FrameStore& store, TypeRef sigma) {
  TotalityReport report;
  report.type = sigma;
  Relation tot = lift_logical(store, Family::C, Family::S, {{1, 0}, {2, 1}}, {sigma});
  const auto& pairs = tot.by_type.at(sigma).pairs;
  for (size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i - 1].first == pairs[i].first && pairs[i - 1].second != pairs[i].second) {
      fail(ErrorKind::Internal, "lifted totality relation is not a partial function at " +
                                    sigma->str());
    }
  }

  std::map<int32_t, std::vector<int32_t>> fibers;
  std::vector<char> total(static_cast<size_t>(store.layer(Family::C, sigma).size()), 0);
  for (auto [c, s] : pairs) {
    fibers[s].push_back(c);
    total[static_cast<size_t>(c)] = 1;
  }

  const Layer& clay = store.layer(Family::C, sigma);
  EagernessOrder eager(clay);
  report.all_lattices = true;
  for (auto& [s, members] : fibers) {
    TotalityClass cls;
    cls.base = s;
    std::sort(members.begin(), members.end());
    cls.members = members;
    std::vector<int> ambient(members.begin(), members.end());
    cls.lattice = is_lattice(eager, ambient);
    cls.laziest = cls.lattice.bottom;
    cls.most_eager = cls.lattice.top;
    if (!cls.lattice.is_lattice) report.all_lattices = false;
    report.classes.push_back(std::move(cls));
  }
  for (size_t i = 0; i < total.size(); ++i) {
    if (!total[i]) report.non_total.push_back(static_cast<int32_t>(i));
  }
  return report;
}

namespace {

// Implementations of the boolean function P (S values indexed by argument
// bits, tt first) inside the C layer of bool -> ... -> bool, n arguments.
std::vector<int32_t> implementation_set(FrameStore& store, int n, const std::vector<int>& P) {
  if (n == 0) {
    return {P[0] == 0 ? 1 : 2};
  }
  TypeRef t = Type::ground();
  for (int i = 0; i < n; ++i) t = Type::arrow(Type::ground(), t);
  const Layer& lay = store.layer(Family::C, t);
  std::vector<int> ptt(P.begin(), P.begin() + (1 << (n - 1)));
  std::vector<int> pff(P.begin() + (1 << (n - 1)), P.end());
  auto set_tt = implementation_set(store, n - 1, ptt);
  auto set_ff = implementation_set(store, n - 1, pff);
  std::vector<int32_t> out;
  for (int c = 0; c < lay.size(); ++c) {
    if (std::binary_search(set_tt.begin(), set_tt.end(), lay.apply(c, 1)) &&
        std::binary_search(set_ff.begin(), set_ff.end(), lay.apply(c, 2))) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<int> or_pattern(int n) {
  std::vector<int> p(static_cast<size_t>(1) << n, 0);
  p.back() = 1;  // all arguments ff
  return p;
}

}  // namespace

std::vector<long long> disjunction_implementation_counts(FrameStore& store, int max_n) {
  if (max_n < 1 || max_n > 3) {
    fail(ErrorKind::Usage, "disjunction implementation counts cover n = 1..3");
  }
  std::vector<long long> counts;
  for (int n = 1; n <= std::min(max_n, 2); ++n) {
    counts.push_back(
        static_cast<long long>(implementation_set(store, n, or_pattern(n)).size()));
  }
  if (max_n == 3) {
    // f(tt,y,z) implements the constant tt, f(ff,y,z) implements binary
    // disjunction, and f(bot,y,z) is any common lower bound; counting the
    // lower bounds avoids enumerating the three-argument layer.
    TypeRef t2 = Type::arrow(Type::ground(), Type::arrow(Type::ground(), Type::ground()));
    const Layer& lay2 = store.layer(Family::C, t2);
    auto set_tt = implementation_set(store, 2, std::vector<int>(4, 0));
    auto set_ff = implementation_set(store, 2, or_pattern(2));
    long long total = 0;
    for (int32_t a : set_tt) {
      for (int32_t b : set_ff) {
        for (int e = 0; e < lay2.size(); ++e) {
          if (lay2.leq(e, a) && lay2.leq(e, b)) ++total;
        }
      }
    }
    counts.push_back(total);
  }
  return counts;
}

}  // namespace framelab

#include "framelab/semantics.hpp"

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

namespace framelab {

namespace {

// Ground indices per family, following the canonical order with absent
// values skipped.
struct GroundIx {
  int bot, tt, ff, top;
};

GroundIx ground_ix(Family f) {
  switch (f) {
    case Family::S: return {-1, 0, 1, -1};
    case Family::C: return {0, 1, 2, -1};
    case Family::E: return {-1, 0, 1, 2};
    case Family::L: return {0, 1, 2, 3};
  }
  fail(ErrorKind::Internal, "bad family");
}

[[noreturn]] void missing(Family f, std::string_view name) {
  fail(ErrorKind::MissingConstantInterpretation,
       "constant \"" + std::string(name) + "\" has no interpretation in family " +
           family_name(f));
}

}  // namespace

bool has_constant(Family f, std::string_view name) {
  if (name == "true" || name == "false" || name == "if") return true;
  if (name == "omega" || name == "por") return f == Family::C || f == Family::L;
  return false;
}

int semantic_apply_ground(Family f, std::string_view name, std::span<const int> args) {
  const GroundIx g = ground_ix(f);
  if (name == "true" && args.empty()) return g.tt;
  if (name == "false" && args.empty()) return g.ff;
  if (name == "omega" && args.empty()) {
    if (g.bot < 0) missing(f, name);
    return g.bot;
  }
  if (name == "if" && args.size() == 3) {
    int d = args[0], e = args[1], ff_ = args[2];
    if (d == g.tt) return e;
    if (d == g.ff) return ff_;
    // Off the total values: bot otherwise in C, top otherwise in E, and in L
    // bot for bot, top for top.
    switch (f) {
      case Family::S: fail(ErrorKind::Internal, "non-total condition in S");
      case Family::C: return g.bot;
      case Family::E: return g.top;
      case Family::L: return d == g.bot ? g.bot : g.top;
    }
  }
  if (name == "por" && args.size() == 2) {
    if (f != Family::C && f != Family::L) missing(f, name);
    int x = args[0], y = args[1];
    if (x == g.tt || y == g.tt) return g.tt;
    if (x == g.ff && y == g.ff) return g.ff;
    if (f == Family::C) return g.bot;
    // L: remaining cells of the canonical table.  bot paired with top gives tt
    // (the cell that forces uniqueness); bot with bot/ff gives bot; top with
    // ff/top gives top.
    bool xb = x == g.bot, yb = y == g.bot;
    bool xt = x == g.top, yt = y == g.top;
    if ((xb && yt) || (xt && yb)) return g.tt;
    if (xb || yb) return g.bot;
    return g.top;
  }
  missing(f, name);
}

Element constant_element(FrameStore& store, Family f, const Constant& c) {
  if (!has_constant(f, c.name)) missing(f, c.name);
  const Layer& lay = store.layer(f, c.type);
  if (c.type->is_ground())
    return Element{&lay, semantic_apply_ground(f, c.name, {})};
  // Tabulate the curried tables bottom-up over ground argument tuples.
  std::vector<TypeRef> argtys = c.type->spine_args();
  for (TypeRef t : argtys)
    if (!t->is_ground()) fail(ErrorKind::Internal, "constant with higher-order type");
  int k = static_cast<int>(argtys.size());
  std::function<int32_t(const Layer&, std::vector<int>&)> build =
      [&](const Layer& at, std::vector<int>& args) -> int32_t {
    if (at.is_ground())
      return semantic_apply_ground(f, c.name, std::span<const int>(args.data(), args.size()));
    std::vector<int32_t> table(at.dom()->size());
    for (int x = 0; x < at.dom()->size(); ++x) {
      args.push_back(x);
      table[x] = build(*at.cod(), args);
      args.pop_back();
    }
    auto idx = at.index_of_table(table);
    if (!idx) fail(ErrorKind::Internal, "constant table escapes its layer");
    return *idx;
  };
  std::vector<int> args;
  args.reserve(k);
  return Element{&lay, build(lay, args)};
}

Element Interpreter::interpret(const TermPtr& term, Family f, const Env& env) {
  if (!term) fail(ErrorKind::Internal, "null term");
  if (term->free_span() > static_cast<int>(env.size()))
    fail(ErrorKind::Internal, "environment does not cover the term's free variables");
  return eval(term, f, env);
}

Element Interpreter::eval(const TermPtr& term, Family f, const Env& env) {
  bool cacheable = term->closed();
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({term.get(), f});
    if (it != cache_.end()) return it->second;
  }
  Element result;
  switch (term->kind()) {
    case Term::Kind::Var:
      return env[term->var_index()];
    case Term::Kind::Const: {
      const Signature& sig = Signature::lambda_c();
      const Constant* c = sig.find(term->const_name());
      if (c == nullptr)
        fail(ErrorKind::UnknownConstant, "constant \"" + term->const_name() + "\"");
      result = constant_element(store_, f, *c);
      break;
    }
    case Term::Kind::App: {
      // Fast path: a constant spine applied to all its (ground) arguments is
      // computed from the semantic table directly, so interpreting e.g. an
      // if-term never materialises the layer of if's own type.
      TermPtr head = term;
      std::vector<const Term*> spine;
      while (head->kind() == Term::Kind::App) {
        spine.push_back(head->arg().get());
        head = head->fn();
      }
      if (head->kind() == Term::Kind::Const && head->type()->spine_args().size() == spine.size() &&
          term->type()->is_ground()) {
        std::vector<TypeRef> argtys = head->type()->spine_args();
        bool all_ground = true;
        for (TypeRef t : argtys) all_ground = all_ground && t->is_ground();
        if (all_ground) {
          std::vector<int> args(spine.size());
          for (size_t i = 0; i < spine.size(); ++i) {
            // spine holds args innermost-last; reverse order.
            const Term* a = spine[spine.size() - 1 - i];
            // Wrap in a TermPtr alias that shares ownership with `term`.
            TermPtr alias(term, a);
            args[i] = eval(alias, f, env).index;
          }
          const Layer& ground = store_.layer(f, Type::ground());
          result = Element{&ground,
                           semantic_apply_ground(f, head->const_name(),
                                                 std::span<const int>(args.data(), args.size()))};
          break;
        }
      }
      Element fe = eval(term->fn(), f, env);
      Element ae = eval(term->arg(), f, env);
      result = apply(fe, ae);
      break;
    }
    case Term::Kind::Lam: {
      const Layer& lay = store_.layer(f, term->type());
      const Layer& dom = *lay.dom();
      std::vector<int32_t> table(dom.size());
      for (int x = 0; x < dom.size(); ++x) {
        Env extended;
        extended.reserve(env.size() + 1);
        extended.push_back(Element{&dom, x});
        extended.insert(extended.end(), env.begin(), env.end());
        table[x] = eval(term->body(), f, extended).index;
      }
      auto idx = lay.index_of_table(table);
      if (!idx) fail(ErrorKind::Internal, "abstraction table escapes its layer");
      result = Element{&lay, *idx};
      break;
    }
  }
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::make_pair(term.get(), f), result);
    pinned_.push_back(term);
  }
  return result;
}

DeltaReport validate_delta_soundness(FrameStore& store, const Signature& sig, Family f) {
  // Model condition 1: every constant interpreted.
  for (const Constant& c : sig.constants())
    if (!has_constant(f, c.name)) missing(f, c.name);

  DeltaReport report;
  report.signature = sig.name();
  report.family = f;
  report.sound = true;

  const Layer& ground = store.layer(f, Type::ground());

  for (const DeltaRule& rule : sig.delta_rules()) {
    DeltaRuleVerdict v;
    v.rule = rule.display;
    // All metavariables in these calculi are ground-typed.
    for (TypeRef t : rule.meta_types)
      if (!t->is_ground()) fail(ErrorKind::Internal, "non-ground metavariable");
    int metas = static_cast<int>(rule.meta_types.size());
    long long total = 1;
    for (int i = 0; i < metas; ++i) total *= ground.size();
    v.instantiations = total;
    v.sound = true;

    auto atom_value = [&](const DeltaRule::Atom& a, const std::vector<int>& assign) -> int {
      if (a.is_meta) return assign[a.meta];
      return semantic_apply_ground(f, a.constant, {});
    };

    std::vector<int> assign(metas);
    for (long long it = 0; it < total; ++it) {
      long long rest = it;
      for (int i = metas - 1; i >= 0; --i) {
        assign[i] = static_cast<int>(rest % ground.size());
        rest /= ground.size();
      }
      std::vector<int> lhs_args(rule.lhs_args.size());
      for (size_t i = 0; i < rule.lhs_args.size(); ++i)
        lhs_args[i] = atom_value(rule.lhs_args[i], assign);
      int lhs = semantic_apply_ground(f, rule.head,
                                      std::span<const int>(lhs_args.data(), lhs_args.size()));
      int rhs = atom_value(rule.rhs, assign);
      if (lhs != rhs) {
        v.sound = false;
        for (int i = 0; i < metas; ++i) v.counterexample.push_back(Element{&ground, assign[i]});
        v.lhs_value = Element{&ground, lhs};
        v.rhs_value = Element{&ground, rhs};
        break;
      }
    }
    report.sound = report.sound && v.sound;
    report.rules.push_back(std::move(v));
  }
  return report;
}

void require_model(FrameStore& store, const Signature& sig, Family f) {
  DeltaReport r = validate_delta_soundness(store, sig, f);
  if (!r.sound)
    fail(ErrorKind::ModelConditionFailed, "family " + std::string(family_name(f)) +
                                              " does not validate the delta rules of " +
                                              sig.name());
}

namespace {

// Evaluates one rule side with the target constant overridden by `candidate`.
// Heads other than the target act through their canonical semantic tables;
// atom arguments are always ground.
bool rule_holds_with(FrameStore& store, Family f, std::string_view constant,
                     const Element& candidate, const DeltaRule& rule,
                     const std::vector<int>& assign) {
  const Layer& ground = store.layer(f, Type::ground());
  auto atom_value = [&](const DeltaRule::Atom& a) -> Element {
    if (a.is_meta) return Element{&ground, assign[a.meta]};
    if (a.constant == constant) return candidate;
    return Element{&ground, semantic_apply_ground(f, a.constant, {})};
  };
  Element lhs;
  if (rule.head == constant) {
    lhs = candidate;
    for (const auto& a : rule.lhs_args) lhs = apply(lhs, atom_value(a));
  } else {
    std::vector<int> args(rule.lhs_args.size());
    for (size_t i = 0; i < rule.lhs_args.size(); ++i) {
      Element e = atom_value(rule.lhs_args[i]);
      if (!e.layer->is_ground()) return false;  // higher-order arg to a ground slot
      args[i] = e.index;
    }
    lhs = Element{&ground,
                  semantic_apply_ground(f, rule.head, std::span<const int>(args.data(), args.size()))};
  }
  Element rhs = atom_value(rule.rhs);
  return lhs.layer == rhs.layer && lhs.index == rhs.index;
}

std::vector<Element> sound_candidates(FrameStore& store, const Signature& sig, Family f,
                                      std::string_view constant, bool parallel) {
  const Constant* c = sig.find(constant);
  if (c == nullptr)
    fail(ErrorKind::UnknownConstant,
         "constant \"" + std::string(constant) + "\" is not in signature " + sig.name());
  const Layer& lay = store.layer(f, c->type);
  const Layer& ground = store.layer(f, Type::ground());

  std::vector<const DeltaRule*> rules;
  for (const DeltaRule& r : sig.delta_rules()) {
    bool mentions = r.head == constant;
    for (const auto& a : r.lhs_args) mentions = mentions || (!a.is_meta && a.constant == constant);
    if (!r.rhs.is_meta) mentions = mentions || r.rhs.constant == constant;
    if (mentions) rules.push_back(&r);
  }

  auto candidate_ok = [&](int idx) {
    Element cand{&lay, idx};
    for (const DeltaRule* r : rules) {
      int metas = static_cast<int>(r->meta_types.size());
      long long total = 1;
      for (int i = 0; i < metas; ++i) total *= ground.size();
      std::vector<int> assign(metas);
      for (long long it = 0; it < total; ++it) {
        long long rest = it;
        for (int i = metas - 1; i >= 0; --i) {
          assign[i] = static_cast<int>(rest % ground.size());
          rest /= ground.size();
        }
        if (!rule_holds_with(store, f, constant, cand, *r, assign)) return false;
      }
    }
    return true;
  };

  std::vector<uint8_t> ok(lay.size(), 0);
  if (parallel && !par::serial_only()) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(par::effective_threads())
#endif
    for (int i = 0; i < lay.size(); ++i) ok[i] = candidate_ok(i) ? 1 : 0;
  } else {
    for (int i = 0; i < lay.size(); ++i) ok[i] = candidate_ok(i) ? 1 : 0;
  }
  std::vector<Element> out;
  for (int i = 0; i < lay.size(); ++i)
    if (ok[i]) out.push_back(Element{&lay, i});
  return out;
}

}  // namespace

std::vector<Element> unique_sound_constant(FrameStore& store, const Signature& sig, Family f,
                                           std::string_view constant) {
  return sound_candidates(store, sig, f, constant, true);
}

std::vector<Element> unique_sound_constant_serial(FrameStore& store, const Signature& sig,
                                                  Family f, std::string_view constant) {
  return sound_candidates(store, sig, f, constant, false);
}

namespace {

std::vector<int32_t> corpus_values(FrameStore& store, const std::vector<TermPtr>& terms, Family f,
                                   bool parallel) {
  std::vector<int32_t> out(terms.size(), -1);
  if (terms.empty()) return out;
  // Warm the layers serially so parallel workers mostly read.
  Interpreter warm(store);
  out[0] = warm.interpret(terms.front(), f).index;
  if (parallel && !par::serial_only()) {
#if defined(_OPENMP)
#pragma omp parallel num_threads(par::effective_threads())
    {
      Interpreter local(store);
#pragma omp for schedule(dynamic, 64)
      for (long long i = 1; i < static_cast<long long>(terms.size()); ++i)
        out[i] = local.interpret(terms[i], f).index;
    }
#endif
  } else {
    for (size_t i = 1; i < terms.size(); ++i) out[i] = warm.interpret(terms[i], f).index;
  }
  return out;
}

}  // namespace

std::vector<int32_t> interpret_corpus(FrameStore& store, const std::vector<TermPtr>& terms,
                                      Family f) {
  return corpus_values(store, terms, f, true);
}

std::vector<int32_t> interpret_corpus_serial(FrameStore& store, const std::vector<TermPtr>& terms,
                                             Family f) {
  return corpus_values(store, terms, f, false);
}

}  // namespace framelab

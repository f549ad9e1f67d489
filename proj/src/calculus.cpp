#include "framelab/calculus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "framelab/errors.hpp"

namespace framelab {

// --- signatures ---

const Constant* Signature::find(std::string_view name) const {
  for (const auto& c : constants_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Signature::is_reserved(std::string_view word) {
  return word == "true" || word == "false" || word == "if" || word == "omega" || word == "por";
}

namespace {

DeltaRule::Atom meta(int i) { return DeltaRule::Atom{true, "", i}; }
DeltaRule::Atom lit(const char* c) { return DeltaRule::Atom{false, c, -1}; }

std::vector<DeltaRule> rules_s() {
  TypeRef b = Type::ground();
  return {
      DeltaRule{"if", {lit("true"), meta(0), meta(1)}, meta(0), {b, b}, "if true M N -> M"},
      DeltaRule{"if", {lit("false"), meta(0), meta(1)}, meta(1), {b, b}, "if false M N -> N"},
  };
}

std::vector<DeltaRule> rules_c() {
  TypeRef b = Type::ground();
  auto rules = rules_s();
  rules.push_back(DeltaRule{"por", {lit("true"), meta(0)}, lit("true"), {b}, "por true M -> true"});
  rules.push_back(DeltaRule{"por", {meta(0), lit("true")}, lit("true"), {b}, "por M true -> true"});
  rules.push_back(DeltaRule{"por", {lit("false"), lit("false")}, lit("false"), {}, "por false false -> false"});
  return rules;
}

}  // namespace

const Signature& Signature::lambda() {
  static const Signature sig("lambda", {}, {});
  return sig;
}

const Signature& Signature::lambda_s() {
  TypeRef b = Type::ground();
  TypeRef if_ty = Type::fun({b, b, b}, b);
  static const Signature sig("lambdaS",
                             {{"true", b}, {"false", b}, {"if", if_ty}},
                             rules_s());
  return sig;
}

const Signature& Signature::lambda_c() {
  TypeRef b = Type::ground();
  TypeRef if_ty = Type::fun({b, b, b}, b);
  TypeRef por_ty = Type::fun({b, b}, b);
  static const Signature sig(
      "lambdaC",
      {{"true", b}, {"false", b}, {"if", if_ty}, {"omega", b}, {"por", por_ty}},
      rules_c());
  return sig;
}

const Signature& Signature::by_name(std::string_view name) {
  if (name == "lambda") return lambda();
  if (name == "lambdaS") return lambda_s();
  if (name == "lambdaC") return lambda_c();
  fail(ErrorKind::Usage,
       "unknown signature \"" + std::string(name) + "\" (expected lambda, lambdaS or lambdaC)");
}

// --- terms ---

TermPtr Term::var(int index, TypeRef t) {
  if (index < 0) fail(ErrorKind::Internal, "negative de Bruijn index");
  auto node = std::make_shared<Term>(Term());
  auto* m = const_cast<Term*>(node.get());
  m->kind_ = Kind::Var;
  m->type_ = t;
  m->depth_ = 1;
  m->free_span_ = index + 1;
  m->var_index_ = index;
  return node;
}

TermPtr Term::constant(const Constant& c) {
  auto node = std::make_shared<Term>(Term());
  auto* m = const_cast<Term*>(node.get());
  m->kind_ = Kind::Const;
  m->type_ = c.type;
  m->depth_ = 1;
  m->free_span_ = 0;
  m->const_name_ = c.name;
  return node;
}

TermPtr Term::app(TermPtr f, TermPtr a) {
  if (!f || !a) fail(ErrorKind::Internal, "null subterm");
  if (!f->type()->is_arrow())
    fail(ErrorKind::Type, "applying a term of ground type bool");
  if (f->type()->arg() != a->type())
    fail(ErrorKind::Type, "argument type " + a->type()->str() + " does not match expected " +
                              f->type()->arg()->str());
  auto node = std::make_shared<Term>(Term());
  auto* m = const_cast<Term*>(node.get());
  m->kind_ = Kind::App;
  m->type_ = f->type()->res();
  m->depth_ = 1 + std::max(f->depth(), a->depth());
  m->free_span_ = std::max(f->free_span(), a->free_span());
  m->left_ = std::move(f);
  m->right_ = std::move(a);
  return node;
}

TermPtr Term::lam(TypeRef binder, TermPtr body) {
  if (!binder || !body) fail(ErrorKind::Internal, "null subterm");
  auto node = std::make_shared<Term>(Term());
  auto* m = const_cast<Term*>(node.get());
  m->kind_ = Kind::Lam;
  m->type_ = Type::arrow(binder, body->type());
  m->depth_ = 1 + body->depth();
  m->free_span_ = std::max(0, body->free_span() - 1);
  m->left_ = std::move(body);
  return node;
}

bool Term::equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->type() != b->type()) return false;
  switch (a->kind()) {
    case Kind::Var: return a->var_index() == b->var_index();
    case Kind::Const: return a->const_name() == b->const_name();
    case Kind::App: return equal(a->fn(), b->fn()) && equal(a->arg(), b->arg());
    case Kind::Lam: return equal(a->body(), b->body());
  }
  return false;
}

TypeRef typecheck(const TermPtr& t, const std::vector<TypeRef>& context, const Signature& sig) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      int i = t->var_index();
      if (i < 0 || i >= static_cast<int>(context.size()))
        fail(ErrorKind::UnboundVariable, "de Bruijn index " + std::to_string(i) +
                                             " escapes a context of size " +
                                             std::to_string(context.size()));
      if (context[i] != t->type()) fail(ErrorKind::Type, "variable annotation disagrees with binder");
      return t->type();
    }
    case Term::Kind::Const: {
      const Constant* c = sig.find(t->const_name());
      if (c == nullptr)
        fail(ErrorKind::UnknownConstant,
             "constant \"" + t->const_name() + "\" is not in signature " + sig.name());
      if (c->type != t->type()) fail(ErrorKind::Type, "constant annotation disagrees with signature");
      return t->type();
    }
    case Term::Kind::App: {
      TypeRef ft = typecheck(t->fn(), context, sig);
      TypeRef at = typecheck(t->arg(), context, sig);
      if (!ft->is_arrow() || ft->arg() != at)
        fail(ErrorKind::Type, "ill-typed application");
      if (ft->res() != t->type()) fail(ErrorKind::Type, "application annotation mismatch");
      return t->type();
    }
    case Term::Kind::Lam: {
      std::vector<TypeRef> extended;
      extended.reserve(context.size() + 1);
      extended.push_back(t->binder());
      extended.insert(extended.end(), context.begin(), context.end());
      TypeRef bt = typecheck(t->body(), extended, sig);
      if (Type::arrow(t->binder(), bt) != t->type())
        fail(ErrorKind::Type, "abstraction annotation mismatch");
      return t->type();
    }
  }
  fail(ErrorKind::Internal, "bad term kind");
}

// --- parser ---

namespace {

struct Token {
  enum class Kind { Ident, Lambda, Colon, Dot, LParen, RParen, Arrow, End } kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  Token next() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos;
      } else if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    if (pos >= text.size()) return {Token::Kind::End, "", pos};
    size_t here = pos;
    char c = text[pos];
    if (c == '\\') { ++pos; return {Token::Kind::Lambda, "\\", here}; }
    if (c == ':') { ++pos; return {Token::Kind::Colon, ":", here}; }
    if (c == '.') { ++pos; return {Token::Kind::Dot, ".", here}; }
    if (c == '(') { ++pos; return {Token::Kind::LParen, "(", here}; }
    if (c == ')') { ++pos; return {Token::Kind::RParen, ")", here}; }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return {Token::Kind::Arrow, "->", here};
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') || (text[pos] >= 'A' && text[pos] <= 'Z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      return {Token::Kind::Ident, std::string(text.substr(start, pos - start)), here};
    }
    fail(ErrorKind::Syntax, "unexpected character '" + std::string(1, c) + "' at offset " +
                                std::to_string(pos));
  }
};

struct TermParser {
  Lexer lex;
  Token tok;
  const Signature& sig;
  std::vector<std::pair<std::string, TypeRef>> scope;  // innermost last

  TermParser(std::string_view text, const Signature& s) : lex{text}, sig(s) { tok = lex.next(); }

  void advance() { tok = lex.next(); }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::Syntax, "at offset " + std::to_string(tok.pos) + ": " + what);
  }

  void expect(Token::Kind k, const char* what) {
    if (tok.kind != k) error(std::string("expected ") + what);
    advance();
  }

  TypeRef parse_type_atom() {
    if (tok.kind == Token::Kind::LParen) {
      advance();
      TypeRef t = parse_type();
      expect(Token::Kind::RParen, "')'");
      return t;
    }
    if (tok.kind == Token::Kind::Ident && tok.text == "bool") {
      advance();
      return Type::ground();
    }
    error("expected a type");
  }

  TypeRef parse_type() {
    TypeRef left = parse_type_atom();
    if (tok.kind == Token::Kind::Arrow) {
      advance();
      return Type::arrow(left, parse_type());
    }
    return left;
  }

  TermPtr parse_ident() {
    std::string name = tok.text;
    size_t at = tok.pos;
    advance();
    if (Signature::is_reserved(name)) {
      const Constant* c = sig.find(name);
      if (c == nullptr)
        fail(ErrorKind::UnknownConstant,
             "constant \"" + name + "\" is not in signature " + sig.name());
      return Term::constant(*c);
    }
    if (name == "bool")
      fail(ErrorKind::Syntax, "at offset " + std::to_string(at) + ": 'bool' is a type, not a term");
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
      if (scope[i].first == name)
        return Term::var(static_cast<int>(scope.size()) - 1 - i, scope[i].second);
    fail(ErrorKind::UnboundVariable,
         "variable \"" + name + "\" is not bound (at offset " + std::to_string(at) + ")");
  }

  TermPtr parse_atom() {
    if (tok.kind == Token::Kind::LParen) {
      advance();
      TermPtr t = parse_term();
      expect(Token::Kind::RParen, "')'");
      return t;
    }
    if (tok.kind == Token::Kind::Ident) return parse_ident();
    error("expected a term");
  }

  bool starts_atom() const {
    return tok.kind == Token::Kind::LParen || tok.kind == Token::Kind::Ident;
  }

  TermPtr parse_term() {
    if (tok.kind == Token::Kind::Lambda) {
      advance();
      if (tok.kind != Token::Kind::Ident || Signature::is_reserved(tok.text) || tok.text == "bool")
        error("expected a variable name after '\\'");
      std::string name = tok.text;
      advance();
      expect(Token::Kind::Colon, "':'");
      TypeRef binder = parse_type();
      expect(Token::Kind::Dot, "'.'");
      scope.emplace_back(name, binder);
      TermPtr body = parse_term();
      scope.pop_back();
      return Term::lam(binder, body);
    }
    TermPtr head = parse_atom();
    while (starts_atom() || tok.kind == Token::Kind::Lambda) {
      TermPtr arg = tok.kind == Token::Kind::Lambda ? parse_term() : parse_atom();
      if (!head->type()->is_arrow())
        fail(ErrorKind::Type, "applying a term of ground type bool");
      if (head->type()->arg() != arg->type())
        fail(ErrorKind::Type, "argument type " + arg->type()->str() +
                                  " does not match expected " + head->type()->arg()->str());
      head = Term::app(std::move(head), std::move(arg));
    }
    return head;
  }
};

}  // namespace

TermPtr parse_term(std::string_view text, const Signature& sig) {
  TermParser p(text, sig);
  TermPtr t = p.parse_term();
  if (p.tok.kind != Token::Kind::End) p.error("trailing input");
  return t;
}

// --- printer ---

namespace {

const char* kNamePool[] = {"x", "y", "z", "u", "v", "w", "p", "q", "r", "s"};

std::string fresh_name(const std::vector<std::string>& scope) {
  for (const char* base : kNamePool)
    if (std::find(scope.begin(), scope.end(), base) == scope.end()) return base;
  for (int i = 1;; ++i) {
    std::string cand = "x" + std::to_string(i);
    if (std::find(scope.begin(), scope.end(), cand) == scope.end()) return cand;
  }
}

void print_rec(const TermPtr& t, std::vector<std::string>& scope, bool fn_pos, bool arg_pos,
               std::string& out) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      int i = t->var_index();
      int at = static_cast<int>(scope.size()) - 1 - i;
      out += at >= 0 ? scope[at] : "?" + std::to_string(i);
      return;
    }
    case Term::Kind::Const:
      out += t->const_name();
      return;
    case Term::Kind::App: {
      bool parens = arg_pos;
      if (parens) out += "(";
      print_rec(t->fn(), scope, true, false, out);
      out += " ";
      print_rec(t->arg(), scope, false, true, out);
      if (parens) out += ")";
      return;
    }
    case Term::Kind::Lam: {
      bool parens = fn_pos || arg_pos;
      if (parens) out += "(";
      std::string name = fresh_name(scope);
      out += "\\" + name + ":" + t->binder()->str() + ". ";
      scope.push_back(name);
      print_rec(t->body(), scope, false, false, out);
      scope.pop_back();
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  std::vector<std::string> scope;
  print_rec(t, scope, false, false, out);
  return out;
}

// --- reduction ---

namespace {

TermPtr shift(const TermPtr& t, int d, int cutoff) {
  if (t->free_span() <= cutoff) return t;  // no free index >= cutoff
  switch (t->kind()) {
    case Term::Kind::Var:
      return t->var_index() < cutoff ? t : Term::var(t->var_index() + d, t->type());
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return Term::app(shift(t->fn(), d, cutoff), shift(t->arg(), d, cutoff));
    case Term::Kind::Lam:
      return Term::lam(t->binder(), shift(t->body(), d, cutoff + 1));
  }
  fail(ErrorKind::Internal, "bad term kind");
}

// Substitutes s for index j in t, closing the binder (indices above j drop).
TermPtr subst(const TermPtr& t, int j, const TermPtr& s) {
  if (t->free_span() <= j) return t;  // j does not occur free, no index above it either
  switch (t->kind()) {
    case Term::Kind::Var: {
      int i = t->var_index();
      if (i == j) return shift(s, j, 0);
      return i > j ? Term::var(i - 1, t->type()) : t;
    }
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return Term::app(subst(t->fn(), j, s), subst(t->arg(), j, s));
    case Term::Kind::Lam:
      return Term::lam(t->binder(), subst(t->body(), j + 1, s));
  }
  fail(ErrorKind::Internal, "bad term kind");
}

// Spine view of nested applications.
void spine_of(const TermPtr& t, TermPtr& head, std::vector<TermPtr>& args) {
  if (t->kind() == Term::Kind::App) {
    spine_of(t->fn(), head, args);
    args.push_back(t->arg());
  } else {
    head = t;
  }
}

bool atom_matches(const DeltaRule::Atom& pat, const TermPtr& arg) {
  if (pat.is_meta) return true;
  return arg->kind() == Term::Kind::Const && arg->const_name() == pat.constant;
}

// One leftmost-outermost step; nullptr when t is normal.
TermPtr step(const TermPtr& t, const Signature& sig) {
  switch (t->kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return nullptr;
    case Term::Kind::Lam: {
      TermPtr b = step(t->body(), sig);
      return b ? Term::lam(t->binder(), b) : nullptr;
    }
    case Term::Kind::App: {
      // Beta at this node.
      if (t->fn()->kind() == Term::Kind::Lam)
        return subst(t->fn()->body(), 0, t->arg());
      // Delta at this node: the whole spine must match a rule exactly.
      TermPtr head;
      std::vector<TermPtr> args;
      spine_of(t, head, args);
      if (head->kind() == Term::Kind::Const) {
        for (const DeltaRule& rule : sig.delta_rules()) {
          if (rule.head != head->const_name() || rule.lhs_args.size() != args.size()) continue;
          bool match = true;
          for (size_t i = 0; i < args.size() && match; ++i)
            match = atom_matches(rule.lhs_args[i], args[i]);
          if (!match) continue;
          if (rule.rhs.is_meta) {
            for (size_t i = 0; i < args.size(); ++i)
              if (rule.lhs_args[i].is_meta && rule.lhs_args[i].meta == rule.rhs.meta)
                return args[i];
            fail(ErrorKind::Internal, "delta rule rhs metavariable unbound");
          }
          const Constant* c = sig.find(rule.rhs.constant);
          if (c == nullptr) fail(ErrorKind::Internal, "delta rule rhs constant missing");
          return Term::constant(*c);
        }
      }
      // Otherwise reduce inside, leftmost first.
      if (TermPtr f = step(t->fn(), sig)) return Term::app(f, t->arg());
      if (TermPtr a = step(t->arg(), sig)) return Term::app(t->fn(), a);
      return nullptr;
    }
  }
  fail(ErrorKind::Internal, "bad term kind");
}

}  // namespace

ReduceResult reduce(const TermPtr& t, const Signature& sig, long long fuel) {
  ReduceResult r{t, 0, false};
  while (true) {
    if (r.steps >= fuel) {
      if (step(r.term, sig)) r.fuel_exhausted = true;
      return r;
    }
    TermPtr next = step(r.term, sig);
    if (!next) return r;
    r.term = next;
    r.steps += 1;
  }
}

// --- enumeration ---

namespace {

// Eta-long skeletons: at arrow types every term is an abstraction; at ground
// type a head (context variable or constant) fully applied.  Heads come in
// context order (innermost binder first) then signature order; argument
// tuples vary rightmost-fastest.
struct Enumerator {
  const Signature& sig;
  // Memo keyed by (type, depth, full context): different binder paths can
  // reach the same type and depth with different contexts in scope.
  std::map<std::tuple<TypeRef, int, std::vector<TypeRef>>, std::vector<TermPtr>> memo;
  std::vector<TypeRef> context;  // innermost first

  explicit Enumerator(const Signature& s) : sig(s) {}

  const std::vector<TermPtr>& all(TypeRef type, int depth) {
    auto key = std::make_tuple(type, depth, context);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<TermPtr> out;
    if (depth >= 1) generate(type, depth, [&](const TermPtr& t) { out.push_back(t); });
    return memo.emplace(key, std::move(out)).first->second;
  }

  void generate(TypeRef type, int depth, const std::function<void(const TermPtr&)>& emit) {
    if (depth < 1) return;
    if (type->is_arrow()) {
      context.insert(context.begin(), type->arg());
      generate(type->res(), depth - 1, [&](const TermPtr& body) {
        emit(Term::lam(type->arg(), body));
      });
      context.erase(context.begin());
      return;
    }
    // Ground type: spines.
    for (size_t v = 0; v < context.size(); ++v)
      spines(Term::var(static_cast<int>(v), context[v]), depth, emit);
    for (const Constant& c : sig.constants()) spines(Term::constant(c), depth, emit);
  }

  void spines(const TermPtr& head, int depth, const std::function<void(const TermPtr&)>& emit) {
    std::vector<TypeRef> argtys = head->type()->spine_args();
    int k = static_cast<int>(argtys.size());
    // depth of the full spine: k applications over the head, argument i
    // (0-based) sits under k - i applications.
    if (k + 1 > depth && k > 0) return;
    if (k == 0) {
      if (head->depth() <= depth) emit(head);
      return;
    }
    std::vector<const std::vector<TermPtr>*> pools(k);
    for (int i = 0; i < k; ++i) {
      pools[i] = &all(argtys[i], depth - 1 - (k - 1 - i));
      if (pools[i]->empty()) return;
    }
    std::vector<size_t> idx(k, 0);
    while (true) {
      TermPtr t = head;
      for (int i = 0; i < k; ++i) t = Term::app(t, (*pools[i])[idx[i]]);
      emit(t);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == pools[pos]->size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
};

}  // namespace

void for_each_closed_term(const Signature& sig, TypeRef type, int depth,
                          const std::function<void(const TermPtr&)>& fn) {
  if (depth < 1) return;
  Enumerator e(sig);
  e.generate(type, depth, fn);
}

std::vector<TermPtr> enumerate_closed_terms(const Signature& sig, TypeRef type, int depth) {
  std::vector<TermPtr> out;
  for_each_closed_term(sig, type, depth, [&](const TermPtr& t) { out.push_back(t); });
  return out;
}

}  // namespace framelab

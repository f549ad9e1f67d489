#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "framelab/types.hpp"

namespace framelab {

struct Constant {
  std::string name;
  TypeRef type;
};

// A delta rule: head constant applied to argument patterns, each pattern a
// literal constant or a typed metavariable.  The right-hand side uses only
// the left's metavariables (or a constant).
struct DeltaRule {
  struct Atom {
    bool is_meta = false;
    std::string constant;  // when !is_meta
    int meta = -1;         // when is_meta
  };
  std::string head;
  std::vector<Atom> lhs_args;
  Atom rhs;
  std::vector<TypeRef> meta_types;
  std::string display;
};

// An applied lambda calculus: a constant signature plus its delta rules.
// The three instances are Lambda (pure), LambdaS (true, false, if) and
// LambdaC (LambdaS plus omega and por).
class Signature {
 public:
  const std::string& name() const { return name_; }
  const std::vector<Constant>& constants() const { return constants_; }
  const Constant* find(std::string_view name) const;
  const std::vector<DeltaRule>& delta_rules() const { return rules_; }

  static const Signature& lambda();
  static const Signature& lambda_s();
  static const Signature& lambda_c();
  static const Signature& by_name(std::string_view name);

  // Reserved words that always lex as constants, whatever the signature.
  static bool is_reserved(std::string_view word);

 private:
  Signature(std::string name, std::vector<Constant> constants, std::vector<DeltaRule> rules)
      : name_(std::move(name)), constants_(std::move(constants)), rules_(std::move(rules)) {}

  std::string name_;
  std::vector<Constant> constants_;
  std::vector<DeltaRule> rules_;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable de Bruijn terms.  Every node caches its type, its depth (leaves
// count 1, App and Lam count 1 + the max over children) and its free-variable
// span (0 means closed).
class Term {
 public:
  enum class Kind : uint8_t { Var, Const, App, Lam };

  Kind kind() const { return kind_; }
  TypeRef type() const { return type_; }
  int depth() const { return depth_; }
  int free_span() const { return free_span_; }
  bool closed() const { return free_span_ == 0; }

  int var_index() const { return var_index_; }
  const std::string& const_name() const { return const_name_; }
  const TermPtr& fn() const { return left_; }
  const TermPtr& arg() const { return right_; }
  TypeRef binder() const { return type_->arg(); }
  const TermPtr& body() const { return left_; }

  static TermPtr var(int index, TypeRef t);
  static TermPtr constant(const Constant& c);
  static TermPtr app(TermPtr f, TermPtr a);
  static TermPtr lam(TypeRef binder, TermPtr body);

  static bool equal(const TermPtr& a, const TermPtr& b);

 private:
  Term() = default;

  Kind kind_ = Kind::Var;
  TypeRef type_ = nullptr;
  int depth_ = 1;
  int free_span_ = 0;
  int var_index_ = -1;
  std::string const_name_;
  TermPtr left_;
  TermPtr right_;
};

// Re-derives the type under the given context (innermost binder first) and
// verifies every constant belongs to the signature.  Errors Type,
// UnboundVariable, UnknownConstant.
TypeRef typecheck(const TermPtr& t, const std::vector<TypeRef>& context, const Signature& sig);

// Parses the surface syntax:  \x:T. M,  juxtaposition application, parens,
// '#' line comments.  The result is closed and fully typed.  Errors Syntax,
// UnboundVariable, UnknownConstant, Type.
TermPtr parse_term(std::string_view text, const Signature& sig);

std::string print_term(const TermPtr& t);

struct ReduceResult {
  TermPtr term;
  long long steps = 0;
  bool fuel_exhausted = false;
};

// Leftmost-outermost beta/delta reduction to normal form.  Delta rules fire
// in declaration order.  Rewriting is strongly normalising (omega is a
// constant, not a diverging term); fuel is a backstop, and running out
// returns the partial reduct flagged rather than throwing.
ReduceResult reduce(const TermPtr& t, const Signature& sig, long long fuel = 1'000'000);

// All closed terms of the type in eta-long beta-normal skeleton form with
// Term::depth() <= depth, deterministically ordered.
std::vector<TermPtr> enumerate_closed_terms(const Signature& sig, TypeRef type, int depth);
// Streaming variant; enumeration order is identical.
void for_each_closed_term(const Signature& sig, TypeRef type, int depth,
                          const std::function<void(const TermPtr&)>& fn);

}  // namespace framelab

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace framelab {

class Type;

// Types are hash-consed: one immutable node per distinct type for the whole
// process, so equality is pointer equality and TypeRef is freely copyable.
using TypeRef = const Type*;

class Type {
 public:
  bool is_ground() const { return arg_ == nullptr; }
  bool is_arrow() const { return arg_ != nullptr; }
  TypeRef arg() const { return arg_; }
  TypeRef res() const { return res_; }

  // order(bool) = 0, order(s -> t) = max(order(s) + 1, order(t)).
  int order() const { return order_; }

  const std::string& str() const { return str_; }

  // s1 -> s2 -> ... -> sk -> bool viewed as a spine: args() = [s1..sk].
  std::vector<TypeRef> spine_args() const;

  static TypeRef ground();
  static TypeRef arrow(TypeRef a, TypeRef r);
  static TypeRef fun(const std::vector<TypeRef>& args, TypeRef result);
  static TypeRef parse(std::string_view text);

 private:
  friend struct TypeFactory;
  Type(TypeRef a, TypeRef r, int order, std::string str)
      : arg_(a), res_(r), order_(order), str_(std::move(str)) {}

  TypeRef arg_;
  TypeRef res_;
  int order_;
  std::string str_;
};

// Stable ordering for deterministic maps keyed by type.
struct TypeStrLess {
  bool operator()(TypeRef a, TypeRef b) const {
    if (a == b) return false;
    if (a->str().size() != b->str().size()) return a->str().size() < b->str().size();
    return a->str() < b->str();
  }
};

}  // namespace framelab

#include "framelab/types.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "framelab/errors.hpp"

namespace framelab {

namespace {

std::mutex g_intern_mutex;
std::vector<std::unique_ptr<Type>>& intern_pool() {
  static std::vector<std::unique_ptr<Type>> pool;
  return pool;
}
std::map<std::pair<TypeRef, TypeRef>, TypeRef>& arrow_table() {
  static std::map<std::pair<TypeRef, TypeRef>, TypeRef> table;
  return table;
}

}  // namespace

struct TypeFactory {
  static TypeRef make(TypeRef a, TypeRef r, int order, std::string str) {
    intern_pool().push_back(std::unique_ptr<Type>(new Type(a, r, order, std::move(str))));
    return intern_pool().back().get();
  }
};

std::vector<TypeRef> Type::spine_args() const {
  std::vector<TypeRef> args;
  const Type* t = this;
  while (t->is_arrow()) {
    args.push_back(t->arg());
    t = t->res();
  }
  return args;
}

TypeRef Type::ground() {
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  static TypeRef g = TypeFactory::make(nullptr, nullptr, 0, "bool");
  return g;
}

TypeRef Type::arrow(TypeRef a, TypeRef r) {
  if (a == nullptr || r == nullptr) fail(ErrorKind::Internal, "null type in arrow");
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  auto key = std::make_pair(a, r);
  auto it = arrow_table().find(key);
  if (it != arrow_table().end()) return it->second;
  std::string str = (a->is_arrow() ? "(" + a->str() + ")" : a->str()) + " -> " + r->str();
  int order = std::max(a->order() + 1, r->order());
  TypeRef t = TypeFactory::make(a, r, order, std::move(str));
  arrow_table().emplace(key, t);
  return t;
}

TypeRef Type::fun(const std::vector<TypeRef>& args, TypeRef result) {
  TypeRef t = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = arrow(*it, t);
  return t;
}

namespace {

struct TypeParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::Syntax,
         "in type \"" + std::string(text) + "\" at offset " + std::to_string(pos) + ": " + what);
  }

  TypeRef parse_atom() {
    skip_ws();
    if (eat("(")) {
      TypeRef t = parse_type();
      if (!eat(")")) error("expected ')'");
      return t;
    }
    if (eat("bool")) return Type::ground();
    error("expected 'bool' or '('");
  }

  TypeRef parse_type() {
    TypeRef left = parse_atom();
    skip_ws();
    if (eat("->")) return Type::arrow(left, parse_type());
    return left;
  }
};

}  // namespace

TypeRef Type::parse(std::string_view text) {
  TypeParser p{text};
  TypeRef t = p.parse_type();
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return t;
}

}  // namespace framelab

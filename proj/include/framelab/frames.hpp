#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>

#include "framelab/order.hpp"
#include "framelab/types.hpp"

namespace framelab {

inline constexpr long long kDefaultBudget = 1'000'000;

// The four frame families over the booleans: S is the full set-theoretic
// hierarchy (discrete orders), C is flat bot < tt, ff; E is the dual
// tt, ff < top; L is the diamond bot < tt, ff < top.
enum class Family : uint8_t { S, C, E, L };

const char* family_name(Family f);
Family family_from_name(std::string_view name);

const Poset& ground_poset(Family f);
// Canonical ground element names, by canonical index.
const std::vector<std::string>& ground_literals(Family f);
int ground_index_of(Family f, std::string_view literal);

// One type layer of a frame.  Elements are canonical indices; at arrow types
// the element with index i is the i-th monotone table in lexicographic order,
// which is also a linear extension of the pointwise order.
class Layer final : public Order {
 public:
  Family family() const { return family_; }
  TypeRef type() const { return type_; }
  const Layer* dom() const { return dom_; }
  const Layer* cod() const { return cod_; }
  bool is_ground() const { return dom_ == nullptr; }

  int size() const override { return n_; }
  bool leq(int a, int b) const override;

  // f applied to x, both canonical indices.
  int32_t apply(int f, int x) const;
  std::span<const int32_t> table(int f) const;
  std::optional<int> index_of_table(std::span<const int32_t> table) const;

 private:
  friend class FrameStore;
  Layer() = default;

  Family family_ = Family::S;
  TypeRef type_ = nullptr;
  const Layer* dom_ = nullptr;
  const Layer* cod_ = nullptr;
  int n_ = 0;
  std::vector<int32_t> tables_;  // row-major, lex-sorted; empty at ground
};

// Memoised builder for frame layers.  Thread-safe; a layer is built at most
// once per store.  Layer construction that would enumerate more than the
// budget throws BudgetExceeded naming the offending type; the failed entry is
// evicted so a retry (e.g. after set_budget) can rebuild.
class FrameStore {
 public:
  explicit FrameStore(long long budget = kDefaultBudget) : budget_(budget) {}

  long long budget() const;
  void set_budget(long long budget);

  const Layer& layer(Family f, TypeRef t);

 private:
  const Layer* build(Family f, TypeRef t);

  mutable std::mutex mutex_;
  long long budget_;
  std::map<std::pair<Family, TypeRef>, std::shared_future<const Layer*>> futures_;
  std::vector<std::unique_ptr<Layer>> owned_;
};

// An element of a frame layer.
struct Element {
  const Layer* layer = nullptr;
  int32_t index = -1;

  bool operator==(const Element& o) const = default;
};

// Application with full compatibility checking: FamilyMismatch, TypeMismatch,
// or MismatchedSpaces (elements from different stores).
Element apply(const Element& f, const Element& x);

// Looks up the element of an arrow layer with the given table.  Errors
// NotMonotone when the table breaks monotonicity, NoSuchElement otherwise
// when absent.
Element element_of_table(const Layer& layer, std::span<const int32_t> table);

}  // namespace framelab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace framelab {

// A finite order presented abstractly: size plus a reflexive partial order on
// 0..size-1.  Ground posets implement it with a dense matrix; frame layers
// implement it recursively (pointwise on tables) so large layers never
// materialise a size^2 matrix.
class Order {
 public:
  virtual ~Order() = default;
  virtual int size() const = 0;
  virtual bool leq(int a, int b) const = 0;

  bool equiv(int a, int b) const { return a == b; }
  bool strictly_below(int a, int b) const { return a != b && leq(a, b); }
};

// Dense explicit poset.  Construction validates reflexivity, antisymmetry and
// transitivity; an invalid relation throws Internal.
class Poset final : public Order {
 public:
  Poset(int n, std::vector<std::pair<int, int>> leq_pairs);

  static Poset discrete(int n);
  // Transitive-reflexive closure of the given cover pairs.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const override { return n_; }
  bool leq(int a, int b) const override { return matrix_[static_cast<size_t>(a) * n_ + b] != 0; }

 private:
  Poset(int n, std::vector<uint8_t> matrix);
  void validate() const;

  int n_;
  std::vector<uint8_t> matrix_;
};

// covers[i] lists the immediate predecessors of i.  Also reports whether the
// index order 0,1,...,n-1 is a linear extension of the given order.
struct CoverStructure {
  std::vector<std::vector<int>> predecessors;
  bool index_order_is_linear_extension;
};
CoverStructure cover_structure(const Order& ord);

// A monotone table dom -> cod.  table[i] is the codomain index assigned to
// domain index i.
struct MonotoneMap {
  const Order* dom;
  const Order* cod;
  std::vector<int32_t> table;
};

enum class Cmp { Equal, Below, Above, Incomparable };

// Pointwise comparison of two maps over the same spaces.
// Errors MismatchedSpaces when dom/cod sizes differ.
Cmp pointwise_order(const MonotoneMap& f, const MonotoneMap& g);

bool is_monotone(const Order& dom, const Order& cod, const std::vector<int32_t>& table);

// Flat enumeration result: count tables of dom.size() entries each, stored
// row-major in canonical order (lexicographic in the table read through
// canonical element indices).
struct TableSet {
  int width = 0;
  long long count = 0;
  std::vector<int32_t> flat;

  const int32_t* row(long long i) const { return flat.data() + i * width; }
};

// Enumerates every monotone map dom -> cod in canonical order.  Throws
// BudgetExceeded (message includes `what`) as soon as the count would pass
// `budget`, and also guards the raw search-node count so unproductive scans
// terminate deterministically.  The parallel variant splits the search by
// table prefix and concatenates block results in prefix order, so its output
// is byte-identical to the serial reference.
TableSet enumerate_monotone_tables_serial(const Order& dom, const Order& cod,
                                          long long budget, const std::string& what);
TableSet enumerate_monotone_tables(const Order& dom, const Order& cod,
                                   long long budget, const std::string& what);

std::vector<MonotoneMap> enumerate_monotone_maps(const Order& dom, const Order& cod,
                                                 long long budget);

// Lattice check of `subset` under the ambient order: every pair must have a
// least upper bound and greatest lower bound inside the subset.
struct LatticeReport {
  bool is_lattice = false;
  int bottom = -1;  // ambient indices, meaningful when is_lattice
  int top = -1;
  // First offending pair and which bound was missing, when not a lattice.
  std::optional<std::pair<int, int>> witness;
  std::string missing;  // "join" or "meet"
};
LatticeReport is_lattice(const Order& ambient, const std::vector<int>& subset);

}  // namespace framelab

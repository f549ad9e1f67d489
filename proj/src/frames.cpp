#include "framelab/frames.hpp"

#include <algorithm>

#include "framelab/errors.hpp"

namespace framelab {

const char* family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::C: return "C";
    case Family::E: return "E";
    case Family::L: return "L";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "S") return Family::S;
  if (name == "C") return Family::C;
  if (name == "E") return Family::E;
  if (name == "L") return Family::L;
  fail(ErrorKind::Usage, "unknown family \"" + std::string(name) + "\" (expected S, C, E or L)");
}

const Poset& ground_poset(Family f) {
  // Canonical ground indices: absent values are skipped, the rest keep the
  // order bot, tt, ff, top.
  static const Poset s = Poset::discrete(2);
  static const Poset c = Poset::from_covers(3, {{0, 1}, {0, 2}});
  static const Poset e = Poset::from_covers(3, {{0, 2}, {1, 2}});
  static const Poset l = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  switch (f) {
    case Family::S: return s;
    case Family::C: return c;
    case Family::E: return e;
    case Family::L: return l;
  }
  fail(ErrorKind::Internal, "bad family");
}

const std::vector<std::string>& ground_literals(Family f) {
  static const std::vector<std::string> s{"tt", "ff"};
  static const std::vector<std::string> c{"bot", "tt", "ff"};
  static const std::vector<std::string> e{"tt", "ff", "top"};
  static const std::vector<std::string> l{"bot", "tt", "ff", "top"};
  switch (f) {
    case Family::S: return s;
    case Family::C: return c;
    case Family::E: return e;
    case Family::L: return l;
  }
  fail(ErrorKind::Internal, "bad family");
}

int ground_index_of(Family f, std::string_view literal) {
  const auto& names = ground_literals(f);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == literal) return static_cast<int>(i);
  fail(ErrorKind::NoSuchElement, "family " + std::string(family_name(f)) +
                                     " has no ground element \"" + std::string(literal) + "\"");
}

bool Layer::leq(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    fail(ErrorKind::Internal, "layer leq index out of range");
  if (is_ground()) return ground_poset(family_).leq(a, b);
  if (a == b) return true;
  int w = dom_->size();
  const int32_t* ta = tables_.data() + static_cast<size_t>(a) * w;
  const int32_t* tb = tables_.data() + static_cast<size_t>(b) * w;
  for (int i = 0; i < w; ++i)
    if (!cod_->leq(ta[i], tb[i])) return false;
  return true;
}

int32_t Layer::apply(int f, int x) const {
  if (is_ground()) fail(ErrorKind::Internal, "apply on a ground layer");
  if (f < 0 || f >= n_ || x < 0 || x >= dom_->size())
    fail(ErrorKind::Internal, "apply index out of range");
  return tables_[static_cast<size_t>(f) * dom_->size() + x];
}

std::span<const int32_t> Layer::table(int f) const {
  if (is_ground()) fail(ErrorKind::Internal, "table of a ground element");
  if (f < 0 || f >= n_) fail(ErrorKind::Internal, "table index out of range");
  int w = dom_->size();
  return {tables_.data() + static_cast<size_t>(f) * w, static_cast<size_t>(w)};
}

std::optional<int> Layer::index_of_table(std::span<const int32_t> table) const {
  if (is_ground() || static_cast<int>(table.size()) != dom_->size()) return std::nullopt;
  int w = dom_->size();
  long long lo = 0, hi = n_;
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    const int32_t* row = tables_.data() + mid * w;
    if (std::lexicographical_compare(row, row + w, table.begin(), table.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < n_) {
    const int32_t* row = tables_.data() + lo * w;
    if (std::equal(row, row + w, table.begin(), table.end())) return static_cast<int>(lo);
  }
  return std::nullopt;
}

long long FrameStore::budget() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return budget_;
}

void FrameStore::set_budget(long long budget) {
  std::lock_guard<std::mutex> lock(mutex_);
  budget_ = budget;
}

const Layer& FrameStore::layer(Family f, TypeRef t) {
  auto key = std::make_pair(f, t);
  std::shared_future<const Layer*> fut;
  std::promise<const Layer*> prom;
  bool builder = false;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = futures_.find(key);
    if (it != futures_.end()) {
      fut = it->second;
    } else {
      fut = prom.get_future().share();
      futures_.emplace(key, fut);
      builder = true;
    }
  }
  if (builder) {
    // Build outside the lock; recursion re-enters layer() for subtypes.
    try {
      prom.set_value(build(f, t));
    } catch (...) {
      prom.set_exception(std::current_exception());
      std::lock_guard<std::mutex> lock(mutex_);
      futures_.erase(key);
      throw;
    }
  }
  return *fut.get();
}

const Layer* FrameStore::build(Family f, TypeRef t) {
  std::unique_ptr<Layer> lay(new Layer());
  lay->family_ = f;
  lay->type_ = t;
  if (t->is_ground()) {
    lay->n_ = ground_poset(f).size();
  } else {
    const Layer& dom = layer(f, t->arg());
    const Layer& cod = layer(f, t->res());
    lay->dom_ = &dom;
    lay->cod_ = &cod;
    long long budget;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      budget = budget_;
    }
    TableSet ts = enumerate_monotone_tables(
        dom, cod, budget, std::string(family_name(f)) + " layer at " + t->str());
    lay->n_ = static_cast<int>(ts.count);
    lay->tables_ = std::move(ts.flat);
  }
  const Layer* out = lay.get();
  std::lock_guard<std::mutex> lock(mutex_);
  owned_.push_back(std::move(lay));
  return out;
}

Element apply(const Element& f, const Element& x) {
  if (f.layer == nullptr || x.layer == nullptr) fail(ErrorKind::Internal, "null element");
  if (f.layer->is_ground())
    fail(ErrorKind::TypeMismatch, "cannot apply a ground element of type bool");
  if (f.layer->family() != x.layer->family())
    fail(ErrorKind::FamilyMismatch,
         std::string("applying a ") + family_name(f.layer->family()) + " element to a " +
             family_name(x.layer->family()) + " element");
  if (f.layer->type()->arg() != x.layer->type())
    fail(ErrorKind::TypeMismatch, "argument has type " + x.layer->type()->str() +
                                      " but the function expects " + f.layer->type()->arg()->str());
  if (f.layer->dom() != x.layer)
    fail(ErrorKind::MismatchedSpaces, "elements come from different frame stores");
  return Element{f.layer->cod(), f.layer->apply(f.index, x.index)};
}

Element element_of_table(const Layer& layer, std::span<const int32_t> table) {
  if (layer.is_ground())
    fail(ErrorKind::NoSuchElement, "ground layers have no function tables");
  if (static_cast<int>(table.size()) != layer.dom()->size())
    fail(ErrorKind::NoSuchElement,
         "table has " + std::to_string(table.size()) + " entries, expected " +
             std::to_string(layer.dom()->size()));
  for (int32_t v : table)
    if (v < 0 || v >= layer.cod()->size())
      fail(ErrorKind::NoSuchElement, "table entry " + std::to_string(v) + " is out of range");
  std::vector<int32_t> copy(table.begin(), table.end());
  if (!is_monotone(*layer.dom(), *layer.cod(), copy))
    fail(ErrorKind::NotMonotone, "table is not monotone for " +
                                     std::string(family_name(layer.family())) + " at " +
                                     layer.type()->str());
  auto idx = layer.index_of_table(table);
  if (!idx)
    fail(ErrorKind::NoSuchElement, "no element of " + std::string(family_name(layer.family())) +
                                       " at " + layer.type()->str() + " has this table");
  return Element{&layer, *idx};
}

}  // namespace framelab

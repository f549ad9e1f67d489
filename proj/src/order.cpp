#include "framelab/order.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

namespace framelab {

Poset::Poset(int n, std::vector<uint8_t> matrix) : n_(n), matrix_(std::move(matrix)) {
  validate();
}

Poset::Poset(int n, std::vector<std::pair<int, int>> leq_pairs) : n_(n) {
  if (n < 0) fail(ErrorKind::Internal, "negative poset size");
  matrix_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) matrix_[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::Internal, "poset pair out of range");
    matrix_[static_cast<size_t>(a) * n + b] = 1;
  }
  validate();
}

Poset Poset::discrete(int n) {
  std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  return Poset(n, std::move(m));
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::Internal, "cover pair out of range");
    m[static_cast<size_t>(a) * n + b] = 1;
  }
  // Floyd-Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (m[static_cast<size_t>(k) * n + j]) m[static_cast<size_t>(i) * n + j] = 1;
  return Poset(n, std::move(m));
}

void Poset::validate() const {
  if (n_ < 1) fail(ErrorKind::Internal, "poset must have at least one element");
  for (int i = 0; i < n_; ++i)
    if (!leq(i, i)) fail(ErrorKind::Internal, "poset relation not reflexive");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        fail(ErrorKind::Internal, "poset relation not antisymmetric");
      if (leq(i, j))
        for (int k = 0; k < n_; ++k)
          if (leq(j, k) && !leq(i, k)) fail(ErrorKind::Internal, "poset relation not transitive");
    }
}

CoverStructure cover_structure(const Order& ord) {
  int n = ord.size();
  CoverStructure cs;
  cs.predecessors.resize(n);
  cs.index_order_is_linear_extension = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !ord.leq(j, i)) continue;
      if (j > i) cs.index_order_is_linear_extension = false;
      bool immediate = true;
      for (int k = 0; k < n && immediate; ++k)
        if (k != i && k != j && ord.leq(j, k) && ord.leq(k, i)) immediate = false;
      if (immediate) cs.predecessors[i].push_back(j);
    }
  return cs;
}

Cmp pointwise_order(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom->size() != g.dom->size() || f.cod->size() != g.cod->size() ||
      f.table.size() != g.table.size())
    fail(ErrorKind::MismatchedSpaces, "pointwise comparison over different spaces");
  if (f.table == g.table) return Cmp::Equal;
  bool below = true, above = true;
  for (size_t i = 0; i < f.table.size(); ++i) {
    if (!f.cod->leq(f.table[i], g.table[i])) below = false;
    if (!f.cod->leq(g.table[i], f.table[i])) above = false;
    if (!below && !above) return Cmp::Incomparable;
  }
  return below ? Cmp::Below : Cmp::Above;
}

bool is_monotone(const Order& dom, const Order& cod, const std::vector<int32_t>& table) {
  int n = dom.size();
  if (static_cast<int>(table.size()) != n) return false;
  for (int32_t v : table)
    if (v < 0 || v >= cod.size()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (dom.leq(x, y) && !cod.leq(table[x], table[y])) return false;
  return true;
}

namespace {

constexpr long long kScanFactor = 64;

long long scan_cap_for(long long budget) {
  long long cap = budget * kScanFactor + (1 << 16);
  return cap < budget ? budget : cap;  // overflow paranoia
}

[[noreturn]] void throw_budget(const std::string& what, long long budget) {
  fail(ErrorKind::BudgetExceeded,
       what + ": more than " + std::to_string(budget) + " monotone maps");
}

[[noreturn]] void throw_scan(const std::string& what, long long cap) {
  fail(ErrorKind::BudgetExceeded,
       what + ": enumeration scanned more than " + std::to_string(cap) + " nodes");
}

// Positions are filled in a linear-extension order `pi` of the domain, so
// only already-assigned immediate predecessors constrain a candidate value.
struct SearchPlan {
  int n;
  std::vector<int> pi;                        // pi[k] = domain index filled at step k
  std::vector<std::vector<int>> pred_steps;   // per step: earlier steps whose value must be leq
  bool identity;

  static SearchPlan build(const Order& dom) {
    SearchPlan plan;
    plan.n = dom.size();
    CoverStructure cs = cover_structure(dom);
    plan.identity = cs.index_order_is_linear_extension;
    plan.pi.resize(plan.n);
    if (plan.identity) {
      std::iota(plan.pi.begin(), plan.pi.end(), 0);
    } else {
      // Kahn topological sort, smallest index first: deterministic.
      std::vector<int> indeg(plan.n, 0);
      for (int i = 0; i < plan.n; ++i) indeg[i] = static_cast<int>(cs.predecessors[i].size());
      std::vector<uint8_t> done(plan.n, 0);
      for (int k = 0; k < plan.n; ++k) {
        int pick = -1;
        for (int i = 0; i < plan.n; ++i)
          if (!done[i] && indeg[i] == 0) {
            pick = i;
            break;
          }
        if (pick < 0) fail(ErrorKind::Internal, "cyclic order in search plan");
        plan.pi[k] = pick;
        done[pick] = 1;
        for (int i = 0; i < plan.n; ++i)
          if (!done[i])
            for (int p : cs.predecessors[i])
              if (p == pick) --indeg[i];
      }
    }
    std::vector<int> step_of(plan.n);
    for (int k = 0; k < plan.n; ++k) step_of[plan.pi[k]] = k;
    plan.pred_steps.resize(plan.n);
    for (int k = 0; k < plan.n; ++k)
      for (int p : cs.predecessors[plan.pi[k]]) plan.pred_steps[k].push_back(step_of[p]);
    return plan;
  }
};

struct Budgets {
  long long budget;
  long long scan_cap;
  std::atomic<long long>* accepted;
  std::atomic<long long>* nodes;
};

// Depth-first completion of a fixed prefix.  `values` holds assignments in
// step order.  Appends accepted tables (re-ordered to domain-index layout)
// and stops early once shared counters show the budget is already blown.
void complete(const SearchPlan& plan, const Order& cod, std::vector<int32_t>& values, int step,
              const Budgets& b, TableSet& out) {
  if (b.accepted->load(std::memory_order_relaxed) > b.budget) return;
  if (step == plan.n) {
    b.accepted->fetch_add(1, std::memory_order_relaxed);
    size_t base = out.flat.size();
    out.flat.resize(base + plan.n);
    for (int k = 0; k < plan.n; ++k) out.flat[base + plan.pi[k]] = values[k];
    out.count += 1;
    return;
  }
  int cn = cod.size();
  for (int v = 0; v < cn; ++v) {
    if (b.nodes->fetch_add(1, std::memory_order_relaxed) > b.scan_cap) return;
    bool ok = true;
    for (int ps : plan.pred_steps[step])
      if (!cod.leq(values[ps], v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    values[step] = v;
    complete(plan, cod, values, step + 1, b, out);
  }
}

// Enumerate all valid assignments of steps [0, prefix_len) in step-lex order.
// Counts candidate nodes so the scan guard sees the same totals as the
// serial reference.
void prefixes(const SearchPlan& plan, const Order& cod, std::vector<int32_t>& values, int step,
              int prefix_len, long long& nodes, std::vector<std::vector<int32_t>>& out) {
  if (step == prefix_len) {
    out.emplace_back(values.begin(), values.begin() + prefix_len);
    return;
  }
  int cn = cod.size();
  for (int v = 0; v < cn; ++v) {
    ++nodes;
    bool ok = true;
    for (int ps : plan.pred_steps[step])
      if (!cod.leq(values[ps], v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    values[step] = v;
    prefixes(plan, cod, values, step + 1, prefix_len, nodes, out);
  }
}

void sort_rows_if_needed(const SearchPlan& plan, TableSet& ts) {
  if (plan.identity) return;  // generation order is already index-lex
  std::vector<long long> perm(ts.count);
  std::iota(perm.begin(), perm.end(), 0);
  int w = ts.width;
  const int32_t* data = ts.flat.data();
  std::sort(perm.begin(), perm.end(), [&](long long a, long long b) {
    return std::lexicographical_compare(data + a * w, data + (a + 1) * w, data + b * w,
                                        data + (b + 1) * w);
  });
  std::vector<int32_t> sorted(ts.flat.size());
  for (long long i = 0; i < ts.count; ++i)
    std::copy(data + perm[i] * w, data + (perm[i] + 1) * w, sorted.begin() + i * w);
  ts.flat = std::move(sorted);
}

}  // namespace

TableSet enumerate_monotone_tables_serial(const Order& dom, const Order& cod, long long budget,
                                          const std::string& what) {
  SearchPlan plan = SearchPlan::build(dom);
  TableSet out;
  out.width = plan.n;
  long long scan_cap = scan_cap_for(budget);
  std::atomic<long long> accepted{0}, nodes{0};
  Budgets b{budget, scan_cap, &accepted, &nodes};
  if (plan.n == 0) {
    // One empty map.
    out.count = 1;
    if (out.count > budget) throw_budget(what, budget);
    return out;
  }
  if (cod.size() == 0) return out;  // no maps from a nonempty domain
  std::vector<int32_t> values(plan.n, 0);
  complete(plan, cod, values, 0, b, out);
  if (accepted.load() > budget) throw_budget(what, budget);
  if (nodes.load() > scan_cap) throw_scan(what, scan_cap);
  sort_rows_if_needed(plan, out);
  return out;
}

TableSet enumerate_monotone_tables(const Order& dom, const Order& cod, long long budget,
                                   const std::string& what) {
  int threads = par::effective_threads();
  if (threads <= 1) return enumerate_monotone_tables_serial(dom, cod, budget, what);

  SearchPlan plan = SearchPlan::build(dom);
  if (plan.n == 0 || cod.size() == 0)
    return enumerate_monotone_tables_serial(dom, cod, budget, what);

  // Deepen the prefix until there is enough fan-out to share.
  int prefix_len = 0;
  long long prefix_nodes = 0;
  std::vector<std::vector<int32_t>> pre;
  {
    std::vector<int32_t> values(plan.n, 0);
    long long want = static_cast<long long>(threads) * 8;
    for (prefix_len = 1; prefix_len <= plan.n; ++prefix_len) {
      pre.clear();
      prefix_nodes = 0;
      prefixes(plan, cod, values, 0, prefix_len, prefix_nodes, pre);
      if (static_cast<long long>(pre.size()) >= want || prefix_len == plan.n) break;
    }
  }

  long long scan_cap = scan_cap_for(budget);
  std::atomic<long long> accepted{0}, nodes{prefix_nodes};
  Budgets b{budget, scan_cap, &accepted, &nodes};
  std::vector<TableSet> blocks(pre.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(pre.size()); ++i) {
    TableSet& block = blocks[i];
    block.width = plan.n;
    std::vector<int32_t> values(plan.n, 0);
    std::copy(pre[i].begin(), pre[i].end(), values.begin());
    complete(plan, cod, values, prefix_len, b, block);
  }

  // The overflow predicates depend only on the true search tree, so the
  // outcome is identical to the serial reference even though counters are
  // updated concurrently.
  if (accepted.load() > budget) throw_budget(what, budget);
  if (nodes.load() > scan_cap) throw_scan(what, scan_cap);

  TableSet out;
  out.width = plan.n;
  for (auto& block : blocks) {
    out.count += block.count;
    out.flat.insert(out.flat.end(), block.flat.begin(), block.flat.end());
  }
  sort_rows_if_needed(plan, out);
  return out;
}

std::vector<MonotoneMap> enumerate_monotone_maps(const Order& dom, const Order& cod,
                                                 long long budget) {
  TableSet ts = enumerate_monotone_tables(dom, cod, budget, "monotone map enumeration");
  std::vector<MonotoneMap> maps;
  maps.reserve(static_cast<size_t>(ts.count));
  for (long long i = 0; i < ts.count; ++i)
    maps.push_back(MonotoneMap{&dom, &cod, std::vector<int32_t>(ts.row(i), ts.row(i) + ts.width)});
  return maps;
}

LatticeReport is_lattice(const Order& ambient, const std::vector<int>& subset) {
  LatticeReport rep;
  int k = static_cast<int>(subset.size());
  if (k == 0) {
    rep.is_lattice = true;
    return rep;
  }
  // Dense k x k relation over the subset, one bitset row per element.
  int words = (k + 63) / 64;
  std::vector<uint64_t> up(static_cast<size_t>(k) * words, 0);    // up[i]: j with i leq j
  std::vector<uint64_t> down(static_cast<size_t>(k) * words, 0);  // down[i]: j with j leq i
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (ambient.leq(subset[i], subset[j])) {
        up[static_cast<size_t>(i) * words + j / 64] |= 1ull << (j % 64);
        down[static_cast<size_t>(j) * words + i / 64] |= 1ull << (i % 64);
      }

  auto subset_of = [&](const uint64_t* a, const uint64_t* b) {
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  };

  std::vector<uint64_t> bound(words);
  auto find_extreme = [&](const std::vector<uint64_t>& dir, int a, int bnd,
                          const std::vector<uint64_t>& dual) -> int {
    // bound := dir[a] & dir[bnd]; return the member u of bound with
    // bound `subset_of` dual[u], i.e. the least (or greatest) bound.
    for (int w = 0; w < words; ++w)
      bound[w] = dir[static_cast<size_t>(a) * words + w] & dir[static_cast<size_t>(bnd) * words + w];
    for (int u = 0; u < k; ++u) {
      if (!(bound[u / 64] >> (u % 64) & 1)) continue;
      if (subset_of(bound.data(), dual.data() + static_cast<size_t>(u) * words)) return u;
    }
    return -1;
  };

  for (int i = 0; i < k && rep.witness == std::nullopt; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (find_extreme(up, i, j, up) < 0) {
        rep.witness = std::make_pair(subset[i], subset[j]);
        rep.missing = "join";
        break;
      }
      if (find_extreme(down, i, j, down) < 0) {
        rep.witness = std::make_pair(subset[i], subset[j]);
        rep.missing = "meet";
        break;
      }
    }
  if (rep.witness) return rep;

  rep.is_lattice = true;
  for (int u = 0; u < k; ++u) {
    bool least = true, greatest = true;
    for (int v = 0; v < k; ++v) {
      if (!ambient.leq(subset[u], subset[v])) least = false;
      if (!ambient.leq(subset[v], subset[u])) greatest = false;
    }
    if (least) rep.bottom = subset[u];
    if (greatest) rep.top = subset[u];
  }
  return rep;
}

}  // namespace framelab

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "hoops/algebra.hpp"

namespace hoops {

// ---------------------------------------------------------------- canonical form

namespace {

struct Labeling {
  std::vector<std::uint8_t> form;
  std::vector<int> new_of_old;
};

std::vector<std::uint8_t> relabeled_bytes(const FiniteAlgebra& a, const std::vector<int>& new_of_old,
                                          const std::vector<int>& old_of_new) {
  const int n = a.size();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(2 * n * n));
  for (int pass = 0; pass < 2; ++pass)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int ox = old_of_new[static_cast<std::size_t>(x)], oy = old_of_new[static_cast<std::size_t>(y)];
        int v = pass == 0 ? a.add(ox, oy) : a.imp(ox, oy);
        out.push_back(static_cast<std::uint8_t>(new_of_old[static_cast<std::size_t>(v)]));
      }
  return out;
}

// Least relabeling over the linear extensions of >=.
Labeling canonical_labeling(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> old_of_new, new_of_old(static_cast<std::size_t>(n), -1);
  Labeling best;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(old_of_new.size()) == n) {
      auto f = relabeled_bytes(a, new_of_old, old_of_new);
      if (best.form.empty() || f < best.form) best = {std::move(f), new_of_old};
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (new_of_old[static_cast<std::size_t>(e)] >= 0) continue;
      bool ready = true;
      for (int y = 0; y < n && ready; ++y)
        if (y != e && a.geq(e, y) && new_of_old[static_cast<std::size_t>(y)] < 0) ready = false;
      if (!ready) continue;
      new_of_old[static_cast<std::size_t>(e)] = static_cast<int>(old_of_new.size());
      old_of_new.push_back(e);
      self(self);
      old_of_new.pop_back();
      new_of_old[static_cast<std::size_t>(e)] = -1;
    }
  };
  rec(rec);
  if (best.form.empty()) {
    // >= is not acyclic: fall back to the identity labeling
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    best = {relabeled_bytes(a, id, id), id};
  }
  return best;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const FiniteAlgebra& a) { return canonical_labeling(a).form; }

FiniteAlgebra canonical(const FiniteAlgebra& a) {
  auto lab = canonical_labeling(a);
  const int n = a.size();
  std::vector<int> add(lab.form.begin(), lab.form.begin() + n * n), imp(lab.form.begin() + n * n, lab.form.end());
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) names[static_cast<std::size_t>(lab.new_of_old[static_cast<std::size_t>(x)])] = a.name(x);
  return FiniteAlgebra(n, std::move(add), std::move(imp), std::move(names));
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto la = canonical_labeling(a), lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  const int n = a.size();
  std::vector<int> b_old_of_new(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) b_old_of_new[static_cast<std::size_t>(lb.new_of_old[static_cast<std::size_t>(x)])] = x;
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    f[static_cast<std::size_t>(x)] = b_old_of_new[static_cast<std::size_t>(la.new_of_old[static_cast<std::size_t>(x)])];
  return f;
}

// ---------------------------------------------------------------- enumeration

bool EnumFilter::accepts(const FiniteAlgebra& a) const {
  if (!(hoop || involutive || wajsberg || idempotent)) return true;
  auto c = classify(a);
  return (!hoop || c.hoop.value) && (!involutive || c.involutive.value) && (!wajsberg || c.wajsberg.value) &&
         (!idempotent || c.idempotent.value);
}

namespace {

using Order = std::vector<char>;  // ge[x*n+y]

// Partial orders with bottom 0, top n-1, where x >= y implies x >= y as integers.
std::vector<Order> labeled_orders(int n) {
  std::vector<Order> out;
  Order ge(static_cast<std::size_t>(n * n), 0);
  auto at = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  for (int x = 0; x < n; ++x) {
    ge[at(x, x)] = 1;
    ge[at(x, 0)] = 1;
    ge[at(n - 1, x)] = 1;
  }
  auto rec = [&](auto&& self, int j) -> void {
    if (j >= n - 1) {
      out.push_back(ge);
      return;
    }
    const int k = j - 1;  // candidates 1..j-1
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      bool down = true;
      for (int i = 1; i < j && down; ++i) {
        if (!(mask & (1u << (i - 1)))) continue;
        for (int l = 1; l < j && down; ++l)
          if (ge[at(i, l)] && !(mask & (1u << (l - 1)))) down = false;
      }
      if (!down) continue;
      for (int i = 1; i < j; ++i) ge[at(j, i)] = (mask & (1u << (i - 1))) ? 1 : 0;
      self(self, j + 1);
    }
    for (int i = 1; i < j; ++i) ge[at(j, i)] = 0;
  };
  rec(rec, 1);
  return out;
}

class TableSearch {
 public:
  TableSearch(int n, const Order& ge, std::uint64_t budget, std::atomic<std::uint64_t>& nodes,
              std::atomic<bool>& aborted)
      : n_(n), ge_(ge), budget_(budget), nodes_(nodes), aborted_(aborted),
        add_(static_cast<std::size_t>(n * n), -1) {
    for (int x = 0; x < n; ++x) {
      set(x, 0, x);
      set(x, n - 1, n - 1);
    }
    for (int x = 1; x < n - 1; ++x)
      for (int y = x; y < n - 1; ++y) cells_.emplace_back(x, y);
  }

  void run(std::map<std::vector<std::uint8_t>, FiniteAlgebra>& found) { rec(0, found); }

 private:
  bool ge(int x, int y) const { return ge_[static_cast<std::size_t>(x * n_ + y)]; }
  int get(int x, int y) const { return add_[static_cast<std::size_t>(x * n_ + y)]; }
  void set(int x, int y, int v) {
    add_[static_cast<std::size_t>(x * n_ + y)] = v;
    add_[static_cast<std::size_t>(y * n_ + x)] = v;
  }

  bool monotone_ok(int x, int y, int v) const {
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) {
        int w = get(p, q);
        if (w < 0) continue;
        if (ge(p, x) && ge(q, y) && !ge(w, v)) return false;
        if (ge(x, p) && ge(y, q) && !ge(v, w)) return false;
      }
    return true;
  }

  bool assoc_ok() const {
    for (int a = 1; a < n_ - 1; ++a)
      for (int b = 1; b < n_ - 1; ++b) {
        int ab = get(a, b);
        if (ab < 0) continue;
        for (int c = 1; c < n_ - 1; ++c) {
          int bc = get(b, c);
          if (bc < 0) continue;
          int l = get(ab, c), r = get(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  void rec(std::size_t k, std::map<std::vector<std::uint8_t>, FiniteAlgebra>& found) {
    if (aborted_) return;
    if (k == cells_.size()) {
      leaf(found);
      return;
    }
    auto [x, y] = cells_[k];
    for (int v = 0; v < n_; ++v) {
      if (!ge(v, x) || !ge(v, y)) continue;
      if (budget_ && ++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      if (!budget_) ++nodes_;
      if (!monotone_ok(x, y, v)) continue;
      set(x, y, v);
      if (assoc_ok()) rec(k + 1, found);
      set(x, y, -1);
    }
  }

  void leaf(std::map<std::vector<std::uint8_t>, FiniteAlgebra>& found) {
    std::vector<int> imp(static_cast<std::size_t>(n_ * n_));
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z) {
        int least = -1;
        for (int m = 0; m < n_ && least < 0; ++m) {
          if (!ge(get(m, y), z)) continue;
          bool below_all = true;
          for (int s = 0; s < n_ && below_all; ++s)
            if (ge(get(s, y), z) && !ge(s, m)) below_all = false;
          if (below_all) least = m;
        }
        if (least < 0) return;  // residuation set has no minimum
        imp[static_cast<std::size_t>(y * n_ + z)] = least;
      }
    FiniteAlgebra a(n_, add_, std::move(imp));
    if (!is_pocrim(a)) return;
    auto c = canonical(a);
    auto form = canonical_form(c);
    found.emplace(std::move(form), std::move(c));
  }

  int n_;
  const Order& ge_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& aborted_;
  std::vector<int> add_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace

EnumResult enumerate_pocrims(int n, const EnumFilter& filter, const EnumOptions& opts) {
  if (n < 1) throw AlgebraError("order must be positive");
  EnumResult res;
  std::map<std::vector<std::uint8_t>, FiniteAlgebra> found;
  if (n == 1) {
    found.emplace(std::vector<std::uint8_t>{0, 0}, FiniteAlgebra(1, {0}, {0}));
  } else {
    auto orders = labeled_orders(n);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
      std::map<std::vector<std::uint8_t>, FiniteAlgebra> local;
      for (std::size_t i; (i = next++) < orders.size();) {
        TableSearch s(n, orders[i], opts.node_budget, nodes, aborted);
        s.run(local);
      }
      std::lock_guard<std::mutex> lock(mu);
      found.merge(local);
    };
    int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    res.nodes = nodes;
    res.complete = !aborted;
  }
  for (auto& [form, alg] : found)
    if (filter.accepts(alg)) res.algebras.push_back(alg);
  return res;
}

const std::vector<FiniteAlgebra>& pocrims_of_order(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_pocrims(n).algebras).first;
  return it->second;
}

}  // namespace hoops

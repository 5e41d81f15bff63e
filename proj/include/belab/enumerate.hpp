#pragma once

// Exhaustive enumeration of involutive bounded BE algebras of a given size,
// with optional isomorphism rejection and class/axiom filtering.
//
// Search layout (carrier {0,...,n-1}, zero = 0, one = n-1):
//   - rows/columns forced by the axioms: row 0 is all-one (boundedness),
//     row one is the identity, column one is all-one, diagonal is all-one;
//   - the involution sigma (= column 0) is chosen first: any involution of
//     the carrier with sigma(0) = one;
//   - the remaining free cells are x -> y with x, y interior and x != y,
//     filled depth-first with incremental exchange-axiom checking.
// Every complete table is revalidated through build_algebra/check_involutive.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "belab/classify.hpp"

namespace belab {

inline constexpr int kDefaultSizeCap = 6;

struct EnumerationTask {
  int size = 2;
  bool modulo_iso = true;
  int workers = 1;
  std::vector<std::string> filter_axioms;  // conjunction; class ids expand to these
  int size_cap = kDefaultSizeCap;
};

// Minimal row-major arrow encoding over carrier permutations fixing 0 and one.
using CanonicalForm = std::string;

inline CanonicalForm canonical_form(const Algebra& a) {
  int n = a.size;
  std::vector<Elem> perm(n);     // perm[old index] = new index
  std::vector<int> interior;
  for (Elem x = 0; x < n; ++x)
    if (x != a.zero && x != a.one) interior.push_back(x);
  std::vector<int> target = interior;  // new labels for the interior, in order

  std::string best;
  std::string cur(static_cast<std::size_t>(n) * n, '\0');
  std::sort(target.begin(), target.end());
  do {
    perm[a.zero] = 0;
    perm[a.one] = n - 1;
    for (std::size_t i = 0; i < interior.size(); ++i) perm[interior[i]] = target[i];
    // relabeled table: cell (perm x, perm y) = perm(arrow(x,y)); emit row-major
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        cur[perm[x] * n + perm[y]] = static_cast<char>(perm[a.imp(x, y)]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(target.begin(), target.end()));
  return best;
}

inline CanonicalForm canonical_form(const InvolutiveAlgebra& a) { return canonical_form(a.base); }

namespace detail {

// All involutions sigma of {0..n-1} with sigma(0) = n-1 (hence sigma(n-1) = 0),
// in lexicographic order of the sigma vector.
inline std::vector<std::vector<Elem>> involutions_fixing_bounds(int n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> sigma(n, -1);
  sigma[0] = n - 1;
  if (n > 1) sigma[n - 1] = 0;
  auto rec = [&](auto&& self, Elem x) -> void {
    while (x < n && sigma[x] != -1) ++x;
    if (x >= n) {
      out.push_back(sigma);
      return;
    }
    for (Elem y = x; y < n; ++y) {
      if (y != x && sigma[y] != -1) continue;
      if (y == 0 || y == n - 1) continue;
      sigma[x] = y;
      sigma[y] = x;
      self(self, x + 1);
      sigma[x] = -1;
      if (y != x) sigma[y] = -1;
    }
  };
  if (n == 1) out.push_back({0});
  else rec(rec, 1);
  return out;
}

// Exchange axiom over all triples whose every subterm is already assigned.
// `arrow` uses -1 for unassigned cells.  Checking only triples that touch the
// last-assigned cell would be faster; full scans are cheap at size <= 6.
inline bool exchange_consistent(const std::vector<Elem>& arrow, int n) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem yz = arrow[y * n + z];
        Elem xz = arrow[x * n + z];
        if (yz < 0 || xz < 0) continue;
        Elem l = arrow[x * n + yz];
        Elem r = arrow[y * n + xz];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
  return true;
}

struct SearchUnit {
  std::vector<Elem> sigma;
  Elem first_value = -1;  // value of the first free cell; -1 when no free cells
};

inline void dfs_fill(std::vector<Elem>& arrow, int n, const std::vector<int>& cells,
                     std::size_t idx, std::vector<std::vector<Elem>>& out) {
  if (idx == cells.size()) {
    if (exchange_consistent(arrow, n)) out.push_back(arrow);
    return;
  }
  int cell = cells[idx];
  for (Elem v = 0; v < n; ++v) {
    arrow[cell] = v;
    if (exchange_consistent(arrow, n)) dfs_fill(arrow, n, cells, idx + 1, out);
  }
  arrow[cell] = -1;
}

inline std::vector<int> free_cells(int n) {
  std::vector<int> cells;
  for (Elem x = 1; x < n - 1; ++x)
    for (Elem y = 1; y < n - 1; ++y)
      if (x != y) cells.push_back(x * n + y);
  return cells;
}

inline std::vector<Elem> seeded_table(int n, const std::vector<Elem>& sigma) {
  std::vector<Elem> arrow(static_cast<std::size_t>(n) * n, -1);
  Elem one = n - 1;
  for (Elem y = 0; y < n; ++y) arrow[0 * n + y] = one;      // boundedness
  for (Elem y = 0; y < n; ++y) arrow[one * n + y] = y;      // identity row
  for (Elem x = 0; x < n; ++x) {
    arrow[x * n + one] = one;                               // all-one column
    arrow[x * n + x] = one;                                 // diagonal
    arrow[x * n + 0] = sigma[x];                            // star column
  }
  return arrow;
}

inline void run_unit(const SearchUnit& u, int n, std::vector<std::vector<Elem>>& out) {
  std::vector<Elem> arrow = seeded_table(n, u.sigma);
  std::vector<int> cells = free_cells(n);
  if (cells.empty()) {
    if (exchange_consistent(arrow, n)) out.push_back(arrow);
    return;
  }
  arrow[cells[0]] = u.first_value;
  if (exchange_consistent(arrow, n))
    dfs_fill(arrow, n, cells, 1, out);
}

}  // namespace detail

struct EnumeratedModel {
  InvolutiveAlgebra algebra;
  CanonicalForm canonical;
};

// Deterministic, worker-count independent enumeration.  Output is sorted by
// (canonical form, raw table); with modulo_iso one representative per
// canonical form is kept.
inline std::vector<EnumeratedModel> enumerate_models(const EnumerationTask& task,
                                                     const AxiomCatalog& cat) {
  int n = task.size;
  if (n < 1) throw std::invalid_argument("size must be >= 1");
  if (n > task.size_cap)
    throw std::invalid_argument("size " + std::to_string(n) + " exceeds the configured cap of " +
                                std::to_string(task.size_cap) +
                                "; raise the cap explicitly to proceed");

  // expand class ids in the filter to their defining axioms
  std::vector<std::string> axioms;
  for (const auto& f : task.filter_axioms) {
    if (is_class_id(f)) {
      for (const auto& ax : class_definition(f).axioms) axioms.push_back(ax);
    } else {
      cat.get(f);  // throws on unknown axiom
      axioms.push_back(f);
    }
  }

  // build the work units: (involution, first free-cell value)
  std::vector<detail::SearchUnit> units;
  bool has_free = !detail::free_cells(n).empty();
  for (auto& sigma : detail::involutions_fixing_bounds(n)) {
    if (!has_free) {
      units.push_back({sigma, -1});
    } else {
      for (Elem v = 0; v < n; ++v) units.push_back({sigma, v});
    }
  }

  int workers = std::max(1, task.workers);
  std::vector<std::vector<std::vector<Elem>>> buckets(units.size());
  auto work = [&](int w) {
    for (std::size_t i = w; i < units.size(); i += workers)
      detail::run_unit(units[i], n, buckets[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // revalidate, filter, canonicalize
  std::vector<EnumeratedModel> models;
  for (auto& bucket : buckets)
    for (auto& arrow : bucket) {
      BuildResult b = build_algebra(n, arrow, n - 1, 0);
      if (!b.algebra) continue;
      InvolutionResult ir = check_involutive(*b.algebra);
      if (!ir.algebra) continue;
      bool pass = true;
      for (const auto& ax : axioms)
        if (!check_axiom(*ir.algebra, cat, ax).holds) {
          pass = false;
          break;
        }
      if (!pass) continue;
      CanonicalForm cf = canonical_form(*ir.algebra);
      models.push_back({std::move(*ir.algebra), std::move(cf)});
    }

  std::sort(models.begin(), models.end(), [](const EnumeratedModel& a, const EnumeratedModel& b) {
    if (a.canonical != b.canonical) return a.canonical < b.canonical;
    return a.algebra.base.arrow < b.algebra.base.arrow;
  });
  if (task.modulo_iso) {
    models.erase(std::unique(models.begin(), models.end(),
                             [](const EnumeratedModel& a, const EnumeratedModel& b) {
                               return a.canonical == b.canonical;
                             }),
                 models.end());
  }
  return models;
}

// Convenience: enumerate all sizes 1..max_size (modulo isomorphism by default).
inline std::vector<EnumeratedModel> enumerate_up_to(int max_size, const AxiomCatalog& cat,
                                                    bool modulo_iso = true, int workers = 1,
                                                    int size_cap = kDefaultSizeCap) {
  std::vector<EnumeratedModel> all;
  for (int n = 1; n <= max_size; ++n) {
    EnumerationTask t;
    t.size = n;
    t.modulo_iso = modulo_iso;
    t.workers = workers;
    t.size_cap = size_cap;
    auto ms = enumerate_models(t, cat);
    for (auto& m : ms) all.push_back(std::move(m));
  }
  return all;
}

}  // namespace belab

#include "qss/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace qss {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr std::uint64_t kCap = 1ull << 63;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kCap / base) return kCap;
    result *= base;
  }
  return result;
}

namespace {

void check_map(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& map,
               const char* what) {
  if (map.size() != static_cast<std::size_t>(q.order())) {
    throw input_error(std::string(what) + ": map is not total on the domain");
  }
  for (int v : map) {
    if (v < 0 || v >= r.order()) {
      throw input_error(std::string(what) + ": image out of codomain range");
    }
  }
}

bool homomorphism_identity(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& m) {
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.mul(m[x], m[y]) != m[q.mul(x, y)]) return false;
    }
  }
  return true;
}

bool homotopy_identity(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& f1,
                       const std::vector<int>& f2, const std::vector<int>& f3) {
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.mul(f1[x], f2[y]) != f3[q.mul(x, y)]) return false;
    }
  }
  return true;
}

// Lexicographic odometer over map vectors with values in 0..base-1.
bool next_map(std::vector<int>& m, int base) {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (++m[i] < base) return true;
    m[i] = 0;
  }
  return false;
}

bool is_bijection(const std::vector<int>& m, int cod_order) {
  if (m.size() != static_cast<std::size_t>(cod_order)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(cod_order), false);
  for (int v : m) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

bool is_homomorphism(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& map) {
  check_map(q, r, map, "is_homomorphism");
  return homomorphism_identity(q, r, map);
}

bool is_homomorphism(const Homomorphism& h) { return is_homomorphism(h.dom, h.cod, h.map); }

bool is_homotopy(const Quasigroup& q, const Quasigroup& r, const std::vector<int>& f1,
                 const std::vector<int>& f2, const std::vector<int>& f3) {
  check_map(q, r, f1, "is_homotopy(f1)");
  check_map(q, r, f2, "is_homotopy(f2)");
  check_map(q, r, f3, "is_homotopy(f3)");
  return homotopy_identity(q, r, f1, f2, f3);
}

bool is_homotopy(const Homotopy& h) { return is_homotopy(h.dom, h.cod, h.f[0], h.f[1], h.f[2]); }

HomotopyIdentityReport homotopy_identity_report(const Quasigroup& q, const Quasigroup& r,
                                                const std::vector<int>& f1,
                                                const std::vector<int>& f2,
                                                const std::vector<int>& f3) {
  check_map(q, r, f1, "homotopy_identity_report(f1)");
  check_map(q, r, f2, "homotopy_identity_report(f2)");
  check_map(q, r, f3, "homotopy_identity_report(f3)");
  const int n = q.order();
  HomotopyIdentityReport rep{true, true, true, true, true};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.mul(f1[x], f2[y]) != f3[q.mul(x, y)]) rep.mul_id = false;
      if (r.rd(f3[x], f2[y]) != f1[q.rd(x, y)]) rep.rdiv_id = false;
      if (r.ld(f1[x], f3[y]) != f2[q.ld(x, y)]) rep.ldiv_id = false;
      if (r.drd(f2[x], f3[y]) != f1[q.drd(x, y)]) rep.drd_id = false;
      if (r.dld(f3[x], f1[y]) != f2[q.dld(x, y)]) rep.dld_id = false;
    }
  }
  return rep;
}

std::optional<Homotopy> complete_homotopy(const Quasigroup& q, const Quasigroup& r,
                                          const std::vector<int>& f1, const std::vector<int>& f2) {
  check_map(q, r, f1, "complete_homotopy(f1)");
  check_map(q, r, f2, "complete_homotopy(f2)");
  const int n = q.order();
  std::vector<int> f3(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    f3[x] = r.mul(f1[0], f2[q.ld(0, x)]);  // x = 0*(0\x)
  }
  if (!homotopy_identity(q, r, f1, f2, f3)) return std::nullopt;
  return Homotopy{q, r, {f1, f2, std::move(f3)}};
}

Homotopy identity_homotopy(const Quasigroup& q) {
  std::vector<int> id(static_cast<std::size_t>(q.order()));
  std::iota(id.begin(), id.end(), 0);
  return Homotopy{q, q, {id, id, id}};
}

Homotopy compose_homotopies(const Homotopy& g, const Homotopy& f) {
  if (!(f.cod == g.dom)) {
    throw input_error("compose_homotopies: cod(f) != dom(g)");
  }
  Homotopy out{f.dom, g.cod, {}};
  for (int i = 0; i < 3; ++i) {
    out.f[i].resize(f.f[i].size());
    for (std::size_t x = 0; x < f.f[i].size(); ++x) out.f[i][x] = g.f[i][f.f[i][x]];
  }
  return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const Quasigroup& q, const Quasigroup& r,
                                                  Budget& budget) {
  const std::uint64_t space =
      saturating_pow(static_cast<std::uint64_t>(r.order()), static_cast<std::uint64_t>(q.order()));
  budget.require_headroom(space);
  std::vector<Homomorphism> out;
  std::vector<int> m(static_cast<std::size_t>(q.order()), 0);
  do {
    budget.charge();
    if (homomorphism_identity(q, r, m)) out.push_back(Homomorphism{q, r, m});
  } while (next_map(m, r.order()));
  return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const Quasigroup& q, const Quasigroup& r) {
  Budget budget;
  return enumerate_homomorphisms(q, r, budget);
}

std::vector<Homotopy> enumerate_homotopies(const Quasigroup& q, const Quasigroup& r,
                                           Budget& budget) {
  const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(r.order()),
                                             2 * static_cast<std::uint64_t>(q.order()));
  budget.require_headroom(space);
  std::vector<Homotopy> out;
  const std::size_t n = static_cast<std::size_t>(q.order());
  std::vector<int> pair(2 * n, 0);  // f1 then f2, flattened
  do {
    budget.charge();
    std::vector<int> f1(pair.begin(), pair.begin() + n);
    std::vector<int> f2(pair.begin() + n, pair.end());
    if (auto h = complete_homotopy(q, r, f1, f2)) out.push_back(std::move(*h));
  } while (next_map(pair, r.order()));
  return out;
}

std::vector<Homotopy> enumerate_homotopies(const Quasigroup& q, const Quasigroup& r) {
  Budget budget;
  return enumerate_homotopies(q, r, budget);
}

namespace {

// Backtracking over partial injective maps. Branches on the smallest
// unassigned element with images tried in increasing order, so the first
// solution is the lexicographically least one. Each assignment propagates:
// once f(a) and f(b) are known, f(a*b) is forced, which both prunes and
// cascades through the generated subquasigroup.
struct IsoSearch {
  const Quasigroup& q;
  const Quasigroup& r;
  std::vector<int> f;
  std::vector<int> assigned;  // indices in assignment order, for undo
  std::vector<bool> used;
  Budget& budget;

  IsoSearch(const Quasigroup& q_, const Quasigroup& r_, Budget& b)
      : q(q_),
        r(r_),
        f(static_cast<std::size_t>(q_.order()), -1),
        used(static_cast<std::size_t>(q_.order()), false),
        budget(b) {}

  bool force(int c, int t) {
    if (f[c] != -1) return f[c] == t;
    if (used[t]) return false;
    f[c] = t;
    used[t] = true;
    assigned.push_back(c);
    return true;
  }

  // Closes the assignment under products starting from the worklist position;
  // returns false on contradiction.
  bool propagate(std::size_t frontier) {
    while (frontier < assigned.size()) {
      int a = assigned[frontier++];
      for (std::size_t i = 0; i < assigned.size(); ++i) {
        int b = assigned[i];
        if (!force(q.mul(a, b), r.mul(f[a], f[b]))) return false;
        if (!force(q.mul(b, a), r.mul(f[b], f[a]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (assigned.size() > mark) {
      int c = assigned.back();
      assigned.pop_back();
      used[f[c]] = false;
      f[c] = -1;
    }
  }

  bool run() {
    int k = 0;
    while (k < q.order() && f[k] != -1) ++k;
    if (k == q.order()) return true;
    for (int v = 0; v < q.order(); ++v) {
      if (used[v]) continue;
      budget.charge();
      std::size_t mark = assigned.size();
      if (force(k, v) && propagate(mark) && run()) return true;
      undo(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Quasigroup& q, const Quasigroup& r,
                                                 Budget& budget) {
  if (q.order() != r.order()) return std::nullopt;
  IsoSearch search(q, r, budget);
  if (search.run()) return search.f;
  return std::nullopt;
}

std::optional<std::vector<int>> find_isomorphism(const Quasigroup& q, const Quasigroup& r) {
  Budget budget;
  return find_isomorphism(q, r, budget);
}

std::optional<Homotopy> find_isotopy(const Quasigroup& q, const Quasigroup& r, Budget& budget) {
  if (q.order() != r.order()) return std::nullopt;
  const int n = q.order();
  const std::uint64_t fact = [n] {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  }();
  budget.require_headroom(saturating_pow(fact, 2));

  std::vector<int> f1(static_cast<std::size_t>(n));
  std::iota(f1.begin(), f1.end(), 0);
  std::vector<int> f3(static_cast<std::size_t>(n));
  do {
    std::vector<int> f2(static_cast<std::size_t>(n));
    std::iota(f2.begin(), f2.end(), 0);
    do {
      budget.charge();
      std::fill(f3.begin(), f3.end(), -1);
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          int z = q.mul(x, y);
          int v = r.mul(f1[x], f2[y]);
          if (f3[z] == -1) {
            f3[z] = v;
          } else if (f3[z] != v) {
            ok = false;
          }
        }
      }
      if (ok && is_bijection(f3, n)) {
        return Homotopy{q, r, {f1, f2, f3}};
      }
    } while (std::next_permutation(f2.begin(), f2.end()));
  } while (std::next_permutation(f1.begin(), f1.end()));
  return std::nullopt;
}

std::optional<Homotopy> find_isotopy(const Quasigroup& q, const Quasigroup& r) {
  Budget budget;
  return find_isotopy(q, r, budget);
}

}  // namespace qss

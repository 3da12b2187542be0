#include "qss/catcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qss/enumerate.hpp"
#include "qss/qgt.hpp"

namespace qss {

namespace {

std::vector<int> diagonal_map(int n) {
  const TripleCodec codec{n};
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) map[x] = codec.encode({x, x, x});
  return map;
}

}  // namespace

Homomorphism unit_arrow(const Quasigroup& p) {
  if (!is_semisymmetric(p)) {
    throw precondition_error("unit_arrow requires a semisymmetric source");
  }
  return Homomorphism{p, delta_object(p), diagonal_map(p.order())};
}

AdjunctionWitness make_adjunction_witness(const Quasigroup& p) {
  return AdjunctionWitness{unit_arrow(p), counit_arrow(p)};
}

bool diagonal_is_homomorphism(const Quasigroup& q) {
  const int n = q.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = q.mul(x, y);
      if (delta_cell(q, {x, x, x}, {y, y, y}) != std::array<int, 3>{xy, xy, xy}) return false;
    }
  }
  return true;
}

Homotopy counit_arrow(const Quasigroup& q) {
  const int n = q.order();
  const TripleCodec codec{n};
  Homotopy h{delta_object(q), q, {}};
  for (int i = 0; i < 3; ++i) h.f[i].resize(static_cast<std::size_t>(codec.size()));
  for (int v = 0; v < codec.size(); ++v) {
    const auto x = codec.decode(v);
    for (int i = 0; i < 3; ++i) h.f[i][v] = x[i];
  }
  return h;
}

bool counit_components_surjective(const Quasigroup& q) {
  const int n = q.order();
  const TripleCodec codec{n};
  for (int i = 0; i < 3; ++i) {
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v = 0; v < codec.size(); ++v) hit[codec.decode(v)[i]] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

std::pair<bool, bool> check_triangular(const Quasigroup& q, const Quasigroup& p) {
  if (!is_semisymmetric(p)) {
    throw precondition_error("check_triangular requires a semisymmetric second argument");
  }

  // First identity, elementwise on the cube of q: the diagonal of the cube
  // object followed by the projection product. Evaluated without building the
  // double-cube table.
  const TripleCodec codec{q.order()};
  bool first = true;
  for (int v = 0; v < codec.size() && first; ++v) {
    const auto x = codec.decode(v);
    // diag(v) = (v,v,v) in the double cube; the projection product picks the
    // i-th coordinate of the i-th copy.
    int image = codec.encode({x[0], x[1], x[2]});
    if (image != v) first = false;
  }

  bool second = true;
  for (int x = 0; x < p.order() && second; ++x) {
    const TripleCodec pc{p.order()};
    const auto diag = pc.decode(pc.encode({x, x, x}));
    for (int i = 0; i < 3; ++i) {
      if (diag[i] != x) second = false;
    }
  }
  return {first, second};
}

bool check_unit_naturality(const Homomorphism& f) {
  if (!is_semisymmetric(f.dom) || !is_semisymmetric(f.cod)) {
    throw input_error("check_unit_naturality: both objects must be semisymmetric");
  }
  if (!is_homomorphism(f)) {
    throw input_error("check_unit_naturality: the arrow is not a homomorphism");
  }
  Homomorphism big = delta_arrow(Homotopy{f.dom, f.cod, {f.map, f.map, f.map}});
  const TripleCodec dom_codec{f.dom.order()};
  const TripleCodec cod_codec{f.cod.order()};
  for (int x = 0; x < f.dom.order(); ++x) {
    int lhs = big.map[dom_codec.encode({x, x, x})];
    int rhs = cod_codec.encode({f.map[x], f.map[x], f.map[x]});
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_counit_naturality(const Homotopy& h) {
  if (!is_homotopy(h)) {
    throw input_error("check_counit_naturality: the triple is not a homotopy");
  }
  Homomorphism big = delta_arrow(h);
  const TripleCodec dom_codec{h.dom.order()};
  const TripleCodec cod_codec{h.cod.order()};
  for (int v = 0; v < dom_codec.size(); ++v) {
    const auto x = dom_codec.decode(v);
    const auto fx = cod_codec.decode(big.map[v]);
    for (int i = 0; i < 3; ++i) {
      if (fx[i] != h.f[i][x[i]]) return false;
    }
  }
  return true;
}

bool check_faithful(const Quasigroup& q, const Quasigroup& r, FunctorKind functor,
                    Budget& budget) {
  const std::vector<Homotopy> arrows = enumerate_homotopies(q, r, budget);
  std::vector<std::vector<int>> images;
  images.reserve(arrows.size());
  const TripleCodec t_dom{q.order()}, t_cod{r.order()};
  const PairCodec p_dom{q.order()}, p_cod{r.order()};
  for (const Homotopy& h : arrows) {
    std::vector<int> img;
    if (functor == FunctorKind::Delta) {
      img.resize(static_cast<std::size_t>(t_dom.size()));
      for (int v = 0; v < t_dom.size(); ++v) {
        const auto x = t_dom.decode(v);
        img[v] = t_cod.encode({h.f[0][x[0]], h.f[1][x[1]], h.f[2][x[2]]});
      }
    } else {
      img.resize(static_cast<std::size_t>(p_dom.size()));
      for (int v = 0; v < p_dom.size(); ++v) {
        const auto x = p_dom.decode(v);
        img[v] = p_cod.encode({h.f[0][x[0]], h.f[1][x[1]]});
      }
    }
    images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

ObjectInjectivityReport check_object_injectivity(const std::vector<Quasigroup>& qs,
                                                 InjectivityFunctor functor) {
  ObjectInjectivityReport report;

  std::vector<Quasigroup> images;
  std::vector<std::string> tags;
  images.reserve(qs.size());
  for (const Quasigroup& q : qs) {
    switch (functor) {
      case InjectivityFunctor::Delta:
        images.push_back(delta_object(q));
        break;
      case InjectivityFunctor::GammaTagged: {
        TaggedQuasigroup t = gamma_tagged(q);
        images.push_back(std::move(t.object));
        tags.push_back(std::move(t.tag));
        break;
      }
      case InjectivityFunctor::GammaUntagged:
        images.push_back(gamma_object(q));
        break;
    }
  }

  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      bool equal = images[i] == images[j];
      if (functor == InjectivityFunctor::GammaTagged) {
        equal = equal && tags[i] == tags[j];
      }
      if (equal) {
        report.injective = false;
        report.collisions.emplace_back(i, j);
      }
      if (qs[i].order() == qs[j].order() && !(qs[i] == qs[j])) {
        // Same carrier, different multiplication: record the differing cell.
        for (int x = 0; x < qs[i].order(); ++x) {
          for (int y = 0; y < qs[i].order(); ++y) {
            if (qs[i].mul(x, y) != qs[j].mul(x, y)) {
              report.witnesses.push_back(DiagonalWitness{i, j, x, y});
              x = qs[i].order();
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

GfAlgebraInstance make_gf_algebra(const Quasigroup& q) {
  return GfAlgebraInstance{delta_object(q), q.order()};
}

Homomorphism structure_homomorphism(const GfAlgebraInstance& a) {
  if (a.source_order > 2) {
    throw budget_error("structure_homomorphism materializes the double cube; source order " +
                       std::to_string(a.source_order) + " > 2");
  }
  Quasigroup dom = delta_object(a.carrier);
  const TripleCodec codec{a.carrier.order()};
  std::vector<int> map(static_cast<std::size_t>(codec.size()));
  for (int v = 0; v < codec.size(); ++v) {
    const auto u = codec.decode(v);
    map[v] = a.structure(u[0], u[1], u[2]);
  }
  return Homomorphism{std::move(dom), a.carrier, std::move(map)};
}

GfCheckResult check_gf_algebra(const Quasigroup& q, GfCheckMode mode) {
  const GfAlgebraInstance alg = make_gf_algebra(q);
  const int m = alg.carrier.order();
  GfCheckResult result;

  result.unit_law = true;
  for (int u = 0; u < m; ++u) {
    if (alg.structure(u, u, u) != u) {
      result.unit_law = false;
      break;
    }
  }

  // Both sides of the main law map a 3x3 grid of carrier elements to the
  // carrier: the left side applies the structure map to each row first, the
  // right side keeps the diagonal entries.
  const auto main_law_holds = [&alg](const std::array<std::array<int, 3>, 3>& w) {
    int lhs = alg.structure(alg.structure(w[0][0], w[0][1], w[0][2]),
                            alg.structure(w[1][0], w[1][1], w[1][2]),
                            alg.structure(w[2][0], w[2][1], w[2][2]));
    int rhs = alg.structure(w[0][0], w[1][1], w[2][2]);
    return lhs == rhs;
  };

  result.main_law = true;
  if (mode.kind == GfCheckMode::Kind::Exhaustive) {
    const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(m), 9);
    if (total > Budget::kDefaultLimit) {
      throw budget_error("exhaustive main-law check needs " + std::to_string(total) +
                         " points; use sampled mode");
    }
    std::array<std::array<int, 3>, 3> w{};
    std::function<bool(int)> rec = [&](int idx) -> bool {
      if (idx == 9) {
        ++result.points_checked;
        return main_law_holds(w);
      }
      for (int v = 0; v < m; ++v) {
        w[idx / 3][idx % 3] = v;
        if (!rec(idx + 1)) return false;
      }
      return true;
    };
    result.main_law = rec(0);
  } else {
    std::minstd_rand rng(static_cast<std::uint32_t>(mode.seed));
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      std::array<std::array<int, 3>, 3> w;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          w[i][j] = static_cast<int>(rng() % static_cast<std::uint32_t>(m));
        }
      }
      ++result.points_checked;
      if (!main_law_holds(w)) {
        result.main_law = false;
        break;
      }
    }
  }
  return result;
}

namespace {

// All homomorphisms a -> b by DFS over images in increasing order, pruning on
// the constraints of the assigned prefix.
void enumerate_homs_backtracking(const Quasigroup& a, const Quasigroup& b, std::vector<int>& f,
                                 int k, Budget& budget,
                                 const std::function<void(const std::vector<int>&)>& emit) {
  const int n = a.order();
  if (k == n) {
    emit(f);
    return;
  }
  for (int v = 0; v < b.order(); ++v) {
    budget.charge();
    f[k] = v;
    bool ok = true;
    for (int i = 0; i <= k && ok; ++i) {
      for (int j = 0; j <= k && ok; ++j) {
        int c = a.mul(i, j);
        if (c > k) continue;
        if (i != k && j != k && c != k) continue;
        if (b.mul(f[i], f[j]) != f[c]) ok = false;
      }
    }
    if (ok) enumerate_homs_backtracking(a, b, f, k + 1, budget, emit);
  }
  f[k] = -1;
}

}  // namespace

AlgebraMorphismFormResult check_algebra_morphism_form(const Quasigroup& q, const Quasigroup& r,
                                                      Budget& budget) {
  if (q.order() > 2 || r.order() > 2) {
    throw budget_error("check_algebra_morphism_form is limited to source orders <= 2");
  }
  const Quasigroup dq = delta_object(q);
  const Quasigroup dr = delta_object(r);
  const GfAlgebraInstance aq = make_gf_algebra(q);
  const GfAlgebraInstance ar = make_gf_algebra(r);
  const int m = dq.order();
  const TripleCodec q_codec{q.order()};
  const TripleCodec r_codec{r.order()};

  AlgebraMorphismFormResult result;
  result.ok = true;

  std::vector<int> f(static_cast<std::size_t>(m), -1);
  enumerate_homs_backtracking(dq, dr, f, 0, budget, [&](const std::vector<int>& hom) {
    // Algebra-morphism square over all triples of carrier elements.
    for (int u1 = 0; u1 < m; ++u1) {
      for (int u2 = 0; u2 < m; ++u2) {
        for (int u3 = 0; u3 < m; ++u3) {
          if (hom[aq.structure(u1, u2, u3)] != ar.structure(hom[u1], hom[u2], hom[u3])) {
            return;  // not an algebra morphism; out of scope
          }
        }
      }
    }
    ++result.maps_checked;

    // Recover the components from the diagonal and test the decomposition.
    std::array<std::vector<int>, 3> comp;
    for (int i = 0; i < 3; ++i) comp[i].resize(static_cast<std::size_t>(q.order()));
    for (int u = 0; u < q.order(); ++u) {
      const auto img = r_codec.decode(hom[q_codec.encode({u, u, u})]);
      for (int i = 0; i < 3; ++i) comp[i][u] = img[i];
    }
    for (int v = 0; v < m; ++v) {
      const auto x = q_codec.decode(v);
      if (hom[v] != r_codec.encode({comp[0][x[0]], comp[1][x[1]], comp[2][x[2]]})) {
        result.ok = false;
        return;
      }
    }
    if (!is_homotopy(q, r, comp[0], comp[1], comp[2])) result.ok = false;
  });
  return result;
}

AlgebraMorphismFormResult check_algebra_morphism_form(const Quasigroup& q, const Quasigroup& r) {
  Budget budget;
  return check_algebra_morphism_form(q, r, budget);
}

ProbeReport probe_isotopy_vs_ss_iso(const Quasigroup& q, const Quasigroup& r, Budget& budget) {
  ProbeReport report;
  report.gamma_tables_equal = gamma_object(q) == gamma_object(r);
  try {
    report.isotopic = find_isotopy(q, r, budget).has_value();
    report.delta_images_isomorphic =
        find_isomorphism(delta_object(q), delta_object(r), budget).has_value();
  } catch (const budget_error&) {
    // Partial report: unset fields stay empty.
  }
  return report;
}

std::string format_check_line(const CheckLine& line) {
  std::ostringstream out;
  out << "CHECK " << line.name;
  if (!line.args.empty()) out << ' ' << line.args;
  out << ' ' << (line.pass ? "PASS" : "FAIL");
  if (!line.witness.empty()) out << ' ' << line.witness;
  return out.str();
}

bool all_pass(const std::vector<CheckLine>& lines) {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

namespace {

std::string order_index_args(int order, std::size_t index) {
  std::ostringstream out;
  out << "order=" << order << " index=" << index;
  return out.str();
}

std::string pair_args(int oi, std::size_t i, int oj, std::size_t j) {
  std::ostringstream out;
  out << "pair=(" << oi << ':' << i << ',' << oj << ':' << j << ')';
  return out.str();
}

struct IndexedCatalog {
  std::vector<Quasigroup> items;
  std::vector<int> orders;
  std::vector<std::size_t> index_within_order;
};

IndexedCatalog indexed_catalog(int max_order) {
  IndexedCatalog cat;
  for (int n = 1; n <= max_order; ++n) {
    auto batch = all_quasigroups_of_order(n);
    for (std::size_t k = 0; k < batch.size(); ++k) {
      cat.items.push_back(std::move(batch[k]));
      cat.orders.push_back(n);
      cat.index_within_order.push_back(k);
    }
  }
  return cat;
}

}  // namespace

std::vector<CheckLine> adjunction_sweep(int max_order, Budget& budget) {
  std::vector<CheckLine> lines;
  IndexedCatalog cat = indexed_catalog(max_order);

  for (std::size_t k = 0; k < cat.items.size(); ++k) {
    const Quasigroup& q = cat.items[k];
    const std::string args = order_index_args(cat.orders[k], cat.index_within_order[k]);

    bool ss = is_semisymmetric(q);
    bool diag = diagonal_is_homomorphism(q);
    lines.push_back({"unit-iff-ss", args, ss == diag,
                     ss == diag ? "" : (std::string("ss=") + (ss ? "1" : "0") + " diag=" +
                                        (diag ? "1" : "0"))});

    bool counit_ok = is_homotopy(counit_arrow(q)) && counit_components_surjective(q);
    lines.push_back({"counit-homotopy", args, counit_ok, ""});

    auto [tri1, tri2] = check_triangular(q, delta_object(q));
    lines.push_back({"triangular", args, tri1 && tri2, ""});
    if (ss) {
      auto [t1, t2] = check_triangular(q, q);
      lines.push_back({"triangular-ss-source", args, t1 && t2, ""});
    }
  }

  // Unit naturality over all homomorphisms between semisymmetric objects.
  for (std::size_t i = 0; i < cat.items.size(); ++i) {
    if (!is_semisymmetric(cat.items[i])) continue;
    for (std::size_t j = 0; j < cat.items.size(); ++j) {
      if (!is_semisymmetric(cat.items[j])) continue;
      bool ok = true;
      std::size_t arrows = 0;
      for (const Homomorphism& f :
           enumerate_homomorphisms(cat.items[i], cat.items[j], budget)) {
        ++arrows;
        if (!check_unit_naturality(f)) ok = false;
      }
      std::ostringstream args;
      args << pair_args(cat.orders[i], cat.index_within_order[i], cat.orders[j],
                        cat.index_within_order[j])
           << " arrows=" << arrows;
      lines.push_back({"unit-naturality", args.str(), ok, ""});
    }
  }

  // Counit naturality over all homotopies between catalog objects.
  for (std::size_t i = 0; i < cat.items.size(); ++i) {
    for (std::size_t j = 0; j < cat.items.size(); ++j) {
      bool ok = true;
      std::size_t arrows = 0;
      for (const Homotopy& h : enumerate_homotopies(cat.items[i], cat.items[j], budget)) {
        ++arrows;
        if (!check_counit_naturality(h)) ok = false;
      }
      std::ostringstream args;
      args << pair_args(cat.orders[i], cat.index_within_order[i], cat.orders[j],
                        cat.index_within_order[j])
           << " arrows=" << arrows;
      lines.push_back({"counit-naturality", args.str(), ok, ""});
    }
  }
  return lines;
}

std::vector<CheckLine> faithful_sweep(int max_order, Budget& budget) {
  std::vector<CheckLine> lines;
  IndexedCatalog cat = indexed_catalog(max_order);
  for (std::size_t i = 0; i < cat.items.size(); ++i) {
    for (std::size_t j = 0; j < cat.items.size(); ++j) {
      for (FunctorKind functor : {FunctorKind::Delta, FunctorKind::Gamma}) {
        bool ok = check_faithful(cat.items[i], cat.items[j], functor, budget);
        std::ostringstream args;
        args << "functor=" << (functor == FunctorKind::Delta ? "delta" : "gamma") << ' '
             << pair_args(cat.orders[i], cat.index_within_order[i], cat.orders[j],
                          cat.index_within_order[j]);
        lines.push_back({"faithful", args.str(), ok, ""});
      }
    }
  }
  return lines;
}

std::vector<CheckLine> gf_sweep(int max_order, std::uint64_t samples, std::uint64_t seed,
                                Budget& budget) {
  std::vector<CheckLine> lines;
  IndexedCatalog cat = indexed_catalog(max_order);
  for (std::size_t k = 0; k < cat.items.size(); ++k) {
    const Quasigroup& q = cat.items[k];
    const std::string args = order_index_args(cat.orders[k], cat.index_within_order[k]);
    GfCheckMode mode = q.order() == 1 ? GfCheckMode::exhaustive()
                                      : GfCheckMode::sampled(samples, seed);
    GfCheckResult res = check_gf_algebra(q, mode);
    std::ostringstream a1;
    a1 << args << (mode.kind == GfCheckMode::Kind::Exhaustive ? " mode=exhaustive"
                                                              : " mode=sampled")
       << " points=" << res.points_checked;
    lines.push_back({"gf-unit-law", args, res.unit_law, ""});
    lines.push_back({"gf-main-law", a1.str(), res.main_law, ""});
  }
  for (std::size_t k = 0; k < cat.items.size(); ++k) {
    if (cat.orders[k] > 2) continue;
    const std::string args = order_index_args(cat.orders[k], cat.index_within_order[k]);
    AlgebraMorphismFormResult res = check_algebra_morphism_form(cat.items[k], cat.items[k], budget);
    std::ostringstream a;
    a << args << " maps=" << res.maps_checked;
    lines.push_back({"gf-algebra-morphism-form", a.str(), res.ok && res.maps_checked > 0, ""});
  }
  return lines;
}

std::vector<CheckLine> object_injectivity_sweep(int max_order, InjectivityFunctor functor) {
  std::vector<CheckLine> lines;
  std::vector<Quasigroup> catalog = quasigroup_catalog(max_order);
  ObjectInjectivityReport report = check_object_injectivity(catalog, functor);
  std::ostringstream args;
  const char* name = functor == InjectivityFunctor::Delta
                         ? "delta"
                         : (functor == InjectivityFunctor::GammaTagged ? "gamma-tagged"
                                                                       : "gamma-untagged");
  args << "functor=" << name << " max-order=" << max_order << " objects=" << catalog.size();
  std::ostringstream witness;
  if (!report.collisions.empty()) {
    witness << "collisions=";
    for (std::size_t c = 0; c < report.collisions.size(); ++c) {
      if (c) witness << ',';
      witness << '(' << report.collisions[c].first << ',' << report.collisions[c].second << ')';
    }
  }
  lines.push_back({"object-injectivity", args.str(), report.injective, witness.str()});
  return lines;
}

}  // namespace qss

#include "stonet/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stonet {

namespace {

  std::string num(std::size_t i) { return std::to_string(i); }

  std::optional<std::size_t> first(const IsoClass& c) {
    if (c.empty()) {
      return std::nullopt;
    }
    return c.front();
  }

  /// Objects s whose column hom(-, s) equals `col`; first match.
  std::optional<std::size_t> find_col(const VCategory& a, const std::vector<Elem>& col) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool ok = true;
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        ok = a.hom(y, s) == col[y];
      }
      if (ok) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> find_row(const VCategory& a, const std::vector<Elem>& row) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool ok = true;
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        ok = a.hom(s, y) == row[y];
      }
      if (ok) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::vector<VMatrix> vcategory_structures(const QuantalePtr& q, std::size_t m) {
    std::vector<VMatrix> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m * m; ++i) {
      total *= q->size();
    }
    for (std::size_t c = 0; c < total; ++c) {
      VMatrix r = decode(q, m, m, c);
      if (check_vcategory(r)) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::string family(const TFrame& a, std::span<const std::size_t> d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
      s += (i ? ", " : "") + a.name(d[i]);
    }
    return s + "}";
  }

  std::string fn_name(const Quantale& q, std::span<const Elem> fn) {
    std::string s = "[";
    for (std::size_t i = 0; i < fn.size(); ++i) {
      s += (i ? " " : "") + q.name(fn[i]);
    }
    return s + "]";
  }

}  // namespace

TFrame::TFrame(TheoryPtr th,
               VCategory cat,
               VMatrix graph,
               std::vector<std::vector<Elem>> functions,
               std::string provenance,
               std::size_t max_index)
    : th_(std::move(th)),
      cat_(std::move(cat)),
      graph_(std::move(graph)),
      functions_(std::move(functions)),
      provenance_(std::move(provenance)),
      max_index_(max_index) {
  if (!functions_.empty() && !std::is_sorted(functions_.begin(), functions_.end())) {
    throw Error("TFrame: functions must be sorted");
  }
  const Quantale& q = quantale();
  std::size_t const n = size();
  complete_ = is_complete(cat_);
  top_ = first(infimum(cat_, {}));
  bottom_ = first(supremum(cat_, {}));
  meet_.assign(n * n, std::nullopt);
  join_.assign(n * n, std::nullopt);
  std::vector<Elem> line(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t y = 0; y < n; ++y) {
        line[y] = q.meet(cat_.hom(y, a), cat_.hom(y, b));
      }
      meet_[a * n + b] = find_col(cat_, line);
      for (std::size_t y = 0; y < n; ++y) {
        line[y] = q.meet(cat_.hom(a, y), cat_.hom(b, y));
      }
      join_[a * n + b] = find_row(cat_, line);
    }
  }
  tensor_.assign(q.size() * n, std::nullopt);
  cotensor_.assign(q.size() * n, std::nullopt);
  for (Elem v : q.elements()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t y = 0; y < n; ++y) {
        line[y] = q.hom(v, cat_.hom(a, y));
      }
      tensor_[v.index() * n + a] = find_row(cat_, line);
      for (std::size_t y = 0; y < n; ++y) {
        line[y] = q.hom(v, cat_.hom(y, a));
      }
      cotensor_[v.index() * n + a] = find_col(cat_, line);
    }
  }
  diagrams_ = enumerate_t_diagrams(*this, max_index_);
}

std::string TFrame::name(std::size_t i) const {
  if (provenance_ == "V") {
    return quantale().name(Elem(i));
  }
  if (!functions_.empty()) {
    return fn_name(quantale(), functions_[i]);
  }
  return cat_.name(i);
}

std::optional<std::size_t> TFrame::find(std::span<const Elem> fn) const {
  auto it = std::lower_bound(functions_.begin(), functions_.end(), fn,
                             [](const std::vector<Elem>& lhs, std::span<const Elem> rhs) {
                               return std::lexicographical_compare(
                                   lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
                             });
  if (it != functions_.end() && std::equal(it->begin(), it->end(), fn.begin(), fn.end())) {
    return static_cast<std::size_t>(it - functions_.begin());
  }
  return std::nullopt;
}

bool is_t_diagram(const TFrame& a, const FinMap& alpha, std::span<const std::size_t> d) {
  const Theory& th = a.theory();
  const Quantale& q = th.quantale();
  FinMap const td = th.map(FinMap{a.size(), {d.begin(), d.end()}});
  for (std::size_t fi = 0; fi < alpha.domain(); ++fi) {
    if (!q.leq(q.unit(), a.graph()(td(fi), d[alpha(fi)]))) {
      return false;
    }
  }
  return true;
}

std::vector<TDiagram> enumerate_t_diagrams(const TFrame& a, std::size_t max_index) {
  std::vector<TDiagram> out;
  for (std::size_t m = 0; m <= max_index; ++m) {
    for (const FinMap& alpha : enumerate_algebras(a.theory(), m)) {
      for_each_tuple(m, a.size(), [&](const std::vector<std::size_t>& d) {
        if (is_t_diagram(a, alpha, d)) {
          out.push_back(TDiagram{alpha, d, first(supremum(a.cat(), d))});
        }
      });
    }
  }
  return out;
}

IsoClass t_supremum(const TFrame& a, std::span<const std::size_t> d) {
  return supremum(a.cat(), d);
}

TFrame omega(const TCategory& x, std::size_t max_index) {
  auto fns = t_functors_to_v(x);
  const Quantale& q = x.quantale();
  std::size_t const n = fns.size();
  VMatrix hom(x.theory().quantale_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom.set(i, j, presheaf_hom(q, fns[i], fns[j]));
    }
  }
  VMatrix graph = exponential_structure(x, fns);
  std::vector<std::string> names;
  for (const auto& f : fns) {
    names.push_back(fn_name(q, f));
  }
  return TFrame(x.theory_ptr(), VCategory::trusted(std::move(hom), std::move(names)),
                std::move(graph), std::move(fns), "omega", max_index);
}

TFrame v_frame(const TheoryPtr& th, std::size_t max_index) {
  const Quantale& q = th->quantale();
  std::size_t const n = q.size();
  VMatrix hom(th->quantale_ptr(), n, n);
  std::vector<std::vector<Elem>> fns;
  std::vector<std::string> names;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      hom.set(u, v, q.hom(Elem(u), Elem(v)));
    }
    fns.push_back({Elem(u)});
    names.push_back(q.name(Elem(u)));
  }
  VMatrix graph = v_as_tcategory(th).structure();
  return TFrame(th, VCategory::trusted(std::move(hom), std::move(names)), std::move(graph),
                std::move(fns), "V", max_index);
}

bool is_t_weighted_diagram(const TFrame& a, const TWeightedDiagram& w) {
  const Theory& th = a.theory();
  const Quantale& q = th.quantale();
  std::size_t const m = w.h.size();
  if (!is_algebra(th, w.alpha) || w.alpha.codomain != m || w.psi.size() != m) {
    return false;
  }
  if (!check_vcategory(w.r)) {
    return false;
  }
  VCategory const index = VCategory::trusted(w.r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!q.leq(w.r(i, j), a.cat().hom(w.h[i], w.h[j]))) {
        return false;
      }
    }
  }
  if (!is_closed(index, w.psi, Variance::contravariant)) {
    return false;
  }
  FinMap g{a.size(), std::vector<std::size_t>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    auto const t = a.tensor(w.psi[i], w.h[i]);
    if (!t) {
      return false;
    }
    g.images[i] = *t;
  }
  FinMap const tg = th.map(g);
  for (std::size_t fi = 0; fi < w.alpha.domain(); ++fi) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!q.leq(w.r(w.alpha(fi), i), a.graph()(tg(fi), g(i)))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<TWeightedDiagram> enumerate_t_weighted_diagrams(const TFrame& a,
                                                           std::size_t max_index) {
  const Theory& th = a.theory();
  std::vector<TWeightedDiagram> out;
  for (std::size_t m = 0; m <= max_index; ++m) {
    auto const algebras = enumerate_algebras(th, m);
    for (const VMatrix& r : vcategory_structures(th.quantale_ptr(), m)) {
      auto const weights = enumerate_presheaves(VCategory::trusted(r), Variance::contravariant);
      for (const FinMap& alpha : algebras) {
        for_each_tuple(m, a.size(), [&](const std::vector<std::size_t>& h) {
          for (const auto& psi : weights) {
            TWeightedDiagram w{alpha, r, h, psi};
            if (is_t_weighted_diagram(a, w)) {
              out.push_back(std::move(w));
            }
          }
        });
      }
    }
  }
  return out;
}

IsoClass t_colimit(const TFrame& a, const TWeightedDiagram& w) {
  return weighted_colimit(a.cat(), w.psi, w.h);
}

std::vector<Elem> generated_presheaf(const TFrame& a, const TWeightedDiagram& w) {
  const Quantale& q = a.quantale();
  std::vector<Elem> out(a.size(), q.bottom());
  for (std::size_t y = 0; y < a.size(); ++y) {
    for (std::size_t i = 0; i < w.h.size(); ++i) {
      out[y] = q.join(out[y], q.tensor(a.cat().hom(y, w.h[i]), w.psi[i]));
    }
  }
  return out;
}

Verdict is_t_generated(const TFrame& a, std::span<const Elem> phi, std::size_t max_index) {
  for (const auto& w : enumerate_t_weighted_diagrams(a, max_index)) {
    auto const g = generated_presheaf(a, w);
    if (std::equal(g.begin(), g.end(), phi.begin(), phi.end())) {
      Verdict v;
      v.witness = "generated by h = " + family(a, w.h) + " with |I| = " + num(w.h.size());
      return v;
    }
  }
  return Verdict::unknown("no generating diagram with |I| <= " + num(max_index));
}

CocompletenessReport is_t_cocomplete(const TFrame& a, std::size_t max_index) {
  CocompletenessReport r;
  const Quantale& q = a.quantale();
  auto const ws = enumerate_t_weighted_diagrams(a, max_index);
  for (const auto& w : ws) {
    if (r.t_colimits && t_colimit(a, w).empty()) {
      r.t_colimits = Verdict::fail("no colimit of h = " + family(a, w.h));
    }
    if (r.generated_suprema && sup_of_presheaf(a.cat(), generated_presheaf(a, w)).empty()) {
      r.generated_suprema = Verdict::fail("no supremum of the presheaf generated by h = "
                                          + family(a, w.h));
    }
  }
  for (Elem v : q.elements()) {
    for (std::size_t x = 0; x < a.size() && r.tensors_t_suprema; ++x) {
      if (!a.tensor(v, x)) {
        r.tensors_t_suprema = Verdict::fail("no tensor " + q.name(v) + " (x) " + a.name(x));
      }
    }
  }
  for (const auto& d : enumerate_t_diagrams(a, max_index)) {
    if (r.tensors_t_suprema && !d.sup) {
      r.tensors_t_suprema = Verdict::fail("no supremum of T-diagram " + family(a, d.d));
    }
  }
  return r;
}

Verdict check_distributivity(const TFrame& a, std::size_t max_index) {
  const Quantale& q = a.quantale();
  std::size_t const n = a.size();
  if (Verdict c = a.complete(); !c) {
    return Verdict::fail("not complete: " + c.witness);
  }
  std::map<std::vector<Elem>, std::size_t> sup_of;
  for (const auto& w : enumerate_t_weighted_diagrams(a, max_index)) {
    auto g = generated_presheaf(a, w);
    if (sup_of.contains(g)) {
      continue;
    }
    auto const s = first(sup_of_presheaf(a.cat(), g));
    if (!s) {
      return Verdict::fail("a T-generated presheaf has no supremum");
    }
    sup_of.emplace(std::move(g), *s);
  }
  // The discrete structure on I admits every weight and every diagram, so it
  // subsumes all other structures.  An index i contributes the cotensor
  // hom(phi(i), g_i(-)) to the limit and (phi(i), sup g_i) to its image.
  struct Term {
    std::vector<Elem> cotensor;
    std::size_t scaled_sup;

    auto operator<=>(const Term&) const = default;
  };
  std::set<Term> term_set;
  for (const auto& [g, s] : sup_of) {
    for (Elem v : q.elements()) {
      std::vector<Elem> c(n);
      for (std::size_t y = 0; y < n; ++y) {
        c[y] = q.hom(v, g[y]);
      }
      term_set.insert(Term{std::move(c), v.index() * n + s});
    }
  }
  std::vector<Term> const terms(term_set.begin(), term_set.end());
  std::map<std::vector<std::size_t>, std::optional<std::size_t>> limits;
  auto limit_of_sups = [&](std::vector<std::size_t> key) {
    std::sort(key.begin(), key.end());
    auto it = limits.find(key);
    if (it == limits.end()) {
      std::vector<Elem> phi;
      std::vector<std::size_t> sh;
      for (std::size_t k : key) {
        phi.push_back(Elem(k / n));
        sh.push_back(k % n);
      }
      it = limits.emplace(key, first(weighted_limit(a.cat(), phi, sh))).first;
    }
    return it->second;
  };
  for (std::size_t m = 0; m <= max_index && (m == 0 || !terms.empty()); ++m) {
    // Both sides are symmetric in the index, so nondecreasing tuples suffice.
    std::vector<std::size_t> t(m, 0);
    while (true) {
      std::vector<Elem> lim(n, q.top());
      std::vector<std::size_t> key(m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t y = 0; y < n; ++y) {
          lim[y] = q.meet(lim[y], terms[t[i]].cotensor[y]);
        }
        key[i] = terms[t[i]].scaled_sup;
      }
      if (auto g = sup_of.find(lim); g != sup_of.end()) {
        auto const rhs = limit_of_sups(key);
        if (!rhs || !a.cat().is_iso(g->second, *rhs)) {
          return Verdict::fail("sup of lim differs from lim of sups for |I| = " + num(m));
        }
      }
      std::size_t i = m;
      while (i > 0 && t[i - 1] + 1 == terms.size()) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++t[i - 1];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), t[i - 1]);
    }
  }
  return Verdict::pass();
}

PreservationReport preservation(const TFrame& src, const TFrame& dst, const FinMap& f) {
  PreservationReport r;
  const Quantale& q = src.quantale();
  std::size_t const n = src.size();
  auto same = [&](std::size_t a, std::optional<std::size_t> b) {
    return b.has_value() && dst.cat().is_iso(a, *b);
  };
  for (std::size_t a = 0; a < n && r.v_functor; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!q.leq(src.cat().hom(a, b), dst.cat().hom(f(a), f(b)))) {
        r.v_functor = Verdict::fail("hom(" + src.name(a) + ", " + src.name(b)
                                    + ") is not below the hom of the images");
        break;
      }
    }
  }
  if (auto t = src.top(); t && !same(f(*t), dst.top())) {
    r.infima = Verdict::fail("top is sent to " + dst.name(f(*t)));
  }
  if (auto b = src.bottom(); b && !same(f(*b), dst.bottom())) {
    r.finite_suprema = Verdict::fail("bottom is sent to " + dst.name(f(*b)));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r.infima) {
        if (auto m = src.meet(a, b); m && !same(f(*m), dst.meet(f(a), f(b)))) {
          r.infima = Verdict::fail("meet of " + src.name(a) + " and " + src.name(b));
        }
      }
      if (r.finite_suprema) {
        if (auto j = src.join(a, b); j && !same(f(*j), dst.join(f(a), f(b)))) {
          r.finite_suprema = Verdict::fail("join of " + src.name(a) + " and " + src.name(b));
        }
      }
    }
  }
  for (Elem v : q.elements()) {
    for (std::size_t a = 0; a < n; ++a) {
      if (r.tensors) {
        if (auto t = src.tensor(v, a); t && !same(f(*t), dst.tensor(v, f(a)))) {
          r.tensors = Verdict::fail(q.name(v) + " (x) " + src.name(a));
        }
      }
      if (r.cotensors) {
        if (auto t = src.cotensor(v, a); t && !same(f(*t), dst.cotensor(v, f(a)))) {
          r.cotensors = Verdict::fail(q.name(v) + " -o " + src.name(a));
        }
      }
    }
  }
  std::vector<std::size_t> image;
  for (const auto& d : src.diagrams()) {
    image.resize(d.d.size());
    for (std::size_t i = 0; i < d.d.size(); ++i) {
      image[i] = f(d.d[i]);
    }
    if (r.t_compatible && !is_t_diagram(dst, d.alpha, image)) {
      r.t_compatible = Verdict::fail("image of T-diagram " + family(src, d.d)
                                     + " is not a T-diagram");
    }
    if (r.t_suprema && d.sup && !same(f(*d.sup), first(t_supremum(dst, image)))) {
      r.t_suprema = Verdict::fail("supremum of T-diagram " + family(src, d.d));
    }
  }
  return r;
}

FrmHom omega_map(const TFrame& oy, const TFrame& ox, const FinMap& f) {
  FrmHom h{FinMap{ox.size(), std::vector<std::size_t>(oy.size())}, {}};
  std::vector<Elem> pulled(f.domain());
  for (std::size_t j = 0; j < oy.size(); ++j) {
    for (std::size_t x = 0; x < f.domain(); ++x) {
      pulled[x] = oy.functions()[j][f(x)];
    }
    auto const idx = ox.find(pulled);
    if (!idx) {
      throw Error("omega_map: precomposition leaves Omega(X); f is not a T-functor");
    }
    h.map.images[j] = *idx;
  }
  h.certificates = preservation(oy, ox, h.map);
  return h;
}

OmegaSpace analyse(const TCategory& x, std::size_t max_index) {
  OmegaSpace s{x, omega(x, max_index), v_frame(x.theory_ptr(), max_index), {}, {}, {}, {}};
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  s.pairs = left_adjoint_distributors(x);
  for (const auto& p : s.pairs) {
    auto const idx = s.frame.find(p.right);
    if (!idx) {
      throw Error("analyse: a right adjoint is not a T-functor");
    }
    s.right_index.push_back(*idx);
  }
  for (const auto& fn : s.frame.functions()) {
    s.hat.push_back(th.xi_hat(fn));
  }
  s.generator.resize(x.tsize() * q.size());
  std::vector<Elem> g(x.size());
  for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
    for (Elem c : q.elements()) {
      for (std::size_t y = 0; y < x.size(); ++y) {
        g[y] = q.tensor(x(fx, y), c);
      }
      auto const idx = s.frame.find(g);
      if (!idx) {
        throw Error("analyse: a(fx, -) (x) c is not a T-functor");
      }
      s.generator[fx * q.size() + c.index()] = *idx;
    }
  }
  return s;
}

FrameMap represented_by(const OmegaSpace& s, std::size_t phi) {
  FrameMap out(s.frame.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = s.frame.cat().hom(phi, j);
  }
  return out;
}

namespace {

  FinMap as_finmap(const OmegaSpace& s, std::span<const Elem> phi) {
    FinMap f{s.v.size(), std::vector<std::size_t>(phi.size())};
    for (std::size_t i = 0; i < phi.size(); ++i) {
      f.images[i] = phi[i].index();
    }
    return f;
  }

}  // namespace

FrmHomReport is_frm_hom(const OmegaSpace& s, std::span<const Elem> phi) {
  const Quantale& q = s.x.quantale();
  FrmHomReport r;
  r.preservation = preservation(s.frame, s.v, as_finmap(s, phi));

  r.representable = Verdict::fail("not of the form [phi, -] for a right adjoint phi");
  for (std::size_t p = 0; p < s.pairs.size(); ++p) {
    FrameMap const rep = represented_by(s, s.right_index[p]);
    if (std::equal(rep.begin(), rep.end(), phi.begin(), phi.end())) {
      r.representable = Verdict::pass();
      r.representable.witness = "[" + s.frame.name(s.right_index[p]) + ", -]";
      break;
    }
  }

  for (std::size_t j = 0; j < s.frame.size() && r.star; ++j) {
    Elem acc = q.bottom();
    for (std::size_t fx = 0; fx < s.x.tsize(); ++fx) {
      acc = q.join(acc, phi[s.gen(fx, s.hat[j][fx])]);
    }
    if (acc != phi[j]) {
      r.star = Verdict::fail("at " + s.frame.name(j) + ": Phi = " + q.name(phi[j])
                             + ", reconstruction = " + q.name(acc));
    }
  }

  const PreservationReport& p = r.preservation;
  Verdict base = p.v_functor;
  base &= p.infima;
  base &= p.tensors;
  base &= p.cotensors;
  r.condition_ii = base;
  r.condition_ii &= p.t_compatible;
  r.condition_ii &= p.t_suprema;
  r.condition_iii = base;
  r.condition_iii &= r.star;
  return r;
}

std::optional<std::vector<std::vector<std::size_t>>> enumerate_v_functors(const VCategory& src,
                                                                        const VCategory& dst,
                                                                        std::size_t cap) {
  const Quantale& q = src.quantale();
  std::size_t const n = src.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n);
  bool overflow = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (overflow) {
      return;
    }
    if (i == n) {
      if (out.size() >= cap) {
        overflow = true;
        return;
      }
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < dst.size(); ++v) {
      f[i] = v;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        ok = q.leq(src.hom(i, j), dst.hom(f[i], f[j]))
             && q.leq(src.hom(j, i), dst.hom(f[j], f[i]));
      }
      if (ok) {
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  if (overflow) {
    return std::nullopt;
  }
  return out;
}

std::vector<FrameMap> generator_extensions(const OmegaSpace& s) {
  const Quantale& q = s.x.quantale();
  std::set<FrameMap> found;
  FrameMap phi(s.frame.size());
  for_each_tuple(s.x.tsize(), q.size(), [&](const std::vector<std::size_t>& c) {
    for (std::size_t j = 0; j < s.frame.size(); ++j) {
      Elem acc = q.bottom();
      for (std::size_t fx = 0; fx < c.size(); ++fx) {
        acc = q.join(acc, q.tensor(Elem(c[fx]), s.hat[j][fx]));
      }
      phi[j] = acc;
    }
    found.insert(phi);
  });
  return {found.begin(), found.end()};
}

TCategory points_structure(const TFrame& f, const std::vector<FrameMap>& homs) {
  const Theory& th = f.theory();
  const Quantale& q = th.quantale();
  std::size_t const n = homs.size();
  VMatrix d(th.quantale_ptr(), n, th.t(n), q.top());
  std::vector<Elem> ev(n);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      ev[j] = homs[j][a];
    }
    auto const hat = th.xi_hat(ev);
    for (std::size_t fp = 0; fp < d.target(); ++fp) {
      for (std::size_t j = 0; j < n; ++j) {
        d.set(fp, j, q.meet(d(fp, j), q.hom(hat[fp], ev[j])));
      }
    }
  }
  if (Verdict const v = is_tcategory(th, d); !v) {
    throw Error("pt: the initial structure is not a T-category (" + v.witness + ")");
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) {
    names.push_back("p" + num(j));
  }
  return TCategory::trusted(f.theory_ptr(), std::move(d), std::move(names));
}

Points pt(const OmegaSpace& s) {
  std::vector<FrameMap> homs;
  for (auto& cand : generator_extensions(s)) {
    if (preservation(s.frame, s.v, as_finmap(s, cand)).frame_hom()) {
      homs.push_back(std::move(cand));
    }
  }
  TCategory space = points_structure(s.frame, homs);
  return Points{std::move(homs), std::move(space), Verdict::pass()};
}

Points pt_by_backtracking(const TFrame& f, std::size_t cap) {
  TFrame const v = v_frame(f.theory_ptr(), f.max_index());
  auto const vf = enumerate_v_functors(f.cat(), v.cat(), cap);
  if (!vf) {
    return Points{{}, points_structure(f, {}),
                  Verdict::unknown("more than " + num(cap) + " V-functors into V")};
  }
  std::vector<FrameMap> homs;
  for (const auto& m : *vf) {
    if (preservation(f, v, FinMap{v.size(), m}).frame_hom()) {
      FrameMap h(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        h[i] = Elem(m[i]);
      }
      homs.push_back(std::move(h));
    }
  }
  std::sort(homs.begin(), homs.end());
  TCategory space = points_structure(f, homs);
  return Points{std::move(homs), std::move(space), Verdict::pass()};
}

Eta eta(const OmegaSpace& s, const Points& p) {
  const TCategory& x = s.x;
  const Theory& th = x.theory();
  Eta r;
  r.map = FinMap{p.homs.size(), std::vector<std::size_t>(x.size())};
  FrameMap ev(s.frame.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t j = 0; j < ev.size(); ++j) {
      ev[j] = s.frame.functions()[j][a];
    }
    auto it = std::lower_bound(p.homs.begin(), p.homs.end(), ev);
    if (it == p.homs.end() || *it != ev) {
      throw Error("eta: evaluation at " + x.name(a) + " is not a point");
    }
    r.map.images[a] = static_cast<std::size_t>(it - p.homs.begin());
  }
  r.functor = is_tfunctor(x, p.space, r.map);
  std::vector<bool> hit(p.homs.size(), false);
  std::set<std::size_t> distinct;
  for (std::size_t a = 0; a < x.size(); ++a) {
    hit[r.map(a)] = true;
    distinct.insert(r.map(a));
  }
  r.injective = distinct.size() == x.size();
  r.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  FinMap const e = th.unit(x.size());
  FinMap const ep = th.unit(p.homs.size());
  FinMap const teta = th.map(r.map);
  r.fully_faithful_v = true;
  r.fully_faithful = true;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x(e(a), b) != p.space(ep(r.map(a)), r.map(b))) {
        r.fully_faithful_v = false;
      }
    }
  }
  for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x(fx, b) != p.space(teta(fx), r.map(b))) {
        r.fully_faithful = false;
      }
    }
  }
  return r;
}

Verdict check_naturality(const OmegaSpace& sx,
                         const Points& px,
                         const OmegaSpace& sy,
                         const Points& py,
                         const FinMap& f) {
  FrmHom const of = omega_map(sy.frame, sx.frame, f);
  Eta const ex = eta(sx, px);
  Eta const ey = eta(sy, py);
  for (std::size_t a = 0; a < sx.x.size(); ++a) {
    const FrameMap& point = px.homs[ex.map(a)];
    FrameMap pushed(sy.frame.size());
    for (std::size_t j = 0; j < pushed.size(); ++j) {
      pushed[j] = point[of.map(j)];
    }
    if (pushed != py.homs[ey.map(f(a))]) {
      return Verdict::fail("square fails at " + sx.x.name(a));
    }
  }
  return Verdict::pass();
}

MainThmReport main_thm(const OmegaSpace& s) {
  return main_thm(s, pt(s));
}

MainThmReport main_thm(const OmegaSpace& s, const Points& p) {
  const TCategory& x = s.x;
  const Quantale& q = x.quantale();
  MainThmReport r;
  r.completion_size = s.pairs.size();
  r.points = p.homs.size();

  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < s.pairs.size() && r.bijection; ++i) {
    FrameMap const rep = represented_by(s, s.right_index[i]);
    auto it = std::lower_bound(p.homs.begin(), p.homs.end(), rep);
    if (it == p.homs.end() || *it != rep) {
      r.bijection = Verdict::fail("[phi, -] is not a point for pair " + num(i));
      break;
    }
    image.push_back(static_cast<std::size_t>(it - p.homs.begin()));
  }
  if (r.bijection) {
    std::set<std::size_t> const distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) {
      r.bijection = Verdict::fail("two adjoint pairs give the same point");
    } else if (image.size() != p.homs.size()) {
      r.bijection = Verdict::fail(num(p.homs.size()) + " points but "
                                  + num(image.size()) + " left adjoints");
    }
  }
  if (r.bijection) {
    auto pointwise = [&](std::span<const Elem> a, std::span<const Elem> b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!q.leq(a[i], b[i])) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t i = 0; i < s.pairs.size() && r.order_iso; ++i) {
      for (std::size_t j = 0; j < s.pairs.size(); ++j) {
        bool const lhs = pointwise(s.pairs[i].left, s.pairs[j].left);
        bool const rhs = pointwise(p.homs[image[i]], p.homs[image[j]]);
        if (lhs != rhs) {
          r.order_iso = Verdict::fail("pairs " + num(i) + " and " + num(j));
          break;
        }
      }
    }
  } else {
    r.order_iso = Verdict::unknown("no bijection");
  }

  for (std::size_t a = 0; a < x.size() && r.triangle; ++a) {
    auto const idx = s.frame.find(upper_representable(x, a));
    if (!idx) {
      r.triangle = Verdict::fail(x.name(a) + "^* is not a T-functor");
      break;
    }
    FrameMap const rep = represented_by(s, *idx);
    for (std::size_t j = 0; j < s.frame.size(); ++j) {
      if (rep[j] != s.frame.functions()[j][a]) {
        r.triangle = Verdict::fail("[" + x.name(a) + "^*, " + s.frame.name(j) + "] = "
                                   + q.name(rep[j]));
        break;
      }
    }
  }

  r.eta = eta(s, p);
  r.cauchy_complete = is_cauchy_complete(x);
  r.separated = is_separated(x);
  if (r.eta.surjective != r.cauchy_complete) {
    r.surjective_iff_cauchy = Verdict::fail(std::string("eta surjective: ")
                                            + (r.eta.surjective ? "yes" : "no")
                                            + ", Cauchy complete: "
                                            + (r.cauchy_complete ? "yes" : "no"));
  }
  bool const bij = r.eta.injective && r.eta.surjective;
  if (bij != (r.separated && r.cauchy_complete)) {
    r.bijective_iff_separated = Verdict::fail(std::string("eta bijective: ")
                                              + (bij ? "yes" : "no") + ", separated: "
                                              + (r.separated ? "yes" : "no"));
  }
  return r;
}

std::vector<Elem> reconstruct(const TCategory& x, std::span<const Elem> phi) {
  const Quantale& q = x.quantale();
  auto const hat = x.theory().xi_hat(phi);
  std::vector<Elem> out(x.size(), q.bottom());
  for (std::size_t y = 0; y < x.size(); ++y) {
    for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
      out[y] = q.join(out[y], q.tensor(x(fx, y), hat[fx]));
    }
  }
  return out;
}

FiniteSupReport finite_sup_equivalence(const OmegaSpace& s, std::span<const Elem> phi) {
  FiniteSupReport r;
  const Theory& th = s.x.theory();
  FrmHypotheses const h = check_frm_hypotheses(th.quantale());
  r.applicable = true;
  if (dynamic_cast<const FiniteUltrafilterMonad*>(&th.monad()) == nullptr) {
    r.applicable = false;
    r.reason = "theory is not the finite ultrafilter theory";
  } else if (!h.all()) {
    r.applicable = false;
    r.reason = "quantale hypotheses fail: " + h.witness;
  }
  PreservationReport const p = preservation(s.frame, s.v, as_finmap(s, phi));
  r.premises = p.v_functor;
  r.premises &= p.infima;
  r.premises &= p.tensors;
  r.premises &= p.cotensors;
  r.t_suprema = p.t_compatible;
  r.t_suprema &= p.t_suprema;
  r.finite_suprema = p.finite_suprema;
  return r;
}

std::vector<Elem> phi_A(const TCategory& x, std::size_t subset) {
  if (dynamic_cast<const FiniteUltrafilterMonad*>(&x.theory().monad()) == nullptr) {
    throw Error("phi_A: needs the finite ultrafilter theory");
  }
  const Quantale& q = x.quantale();
  std::vector<Elem> out(x.size(), q.bottom());
  // The ultrafilter with index i is principal at i, so A belongs to it iff i is in A.
  for (std::size_t i = 0; i < x.tsize(); ++i) {
    if (!(subset >> i & 1u)) {
      continue;
    }
    for (std::size_t y = 0; y < x.size(); ++y) {
      out[y] = q.join(out[y], x(i, y));
    }
  }
  return out;
}

}  // namespace stonet

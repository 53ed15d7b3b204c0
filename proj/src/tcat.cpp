#include "stonet/tcat.hpp"

#include <algorithm>
#include <set>

namespace stonet {

namespace {

  std::string num(std::size_t i) { return std::to_string(i); }

  std::vector<std::string> object_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(num(i));
      }
    }
    if (names.size() != n) {
      throw ShapeError("TCategory: expected " + num(n) + " object names");
    }
    return names;
  }

  VMatrix fn_matrix(const Theory& th, const FinMap& f) {
    return VMatrix::from_map(th.quantale_ptr(), f);
  }

  /// The entries of a T-matrix as a function on TY x X (pair_index(fy, x, |X|)).
  std::vector<Elem> flatten(const TMatrix& psi) {
    std::vector<Elem> out(psi.m.target() * psi.from);
    for (std::size_t fy = 0; fy < psi.m.target(); ++fy) {
      for (std::size_t x = 0; x < psi.from; ++x) {
        out[pair_index(fy, x, psi.from)] = psi.m(fy, x);
      }
    }
    return out;
  }

}  // namespace

Verdict is_tgraph(const Theory& th, const VMatrix& a) {
  if (a.target() != th.t(a.source())) {
    return Verdict::fail("structure is not a matrix X -|-> TX");
  }
  const Quantale& q = th.quantale();
  FinMap const e = th.unit(a.source());
  for (std::size_t x = 0; x < a.source(); ++x) {
    if (!q.leq(q.unit(), a(e(x), x))) {
      return Verdict::fail("reflexivity fails at " + num(x) + ": a(e(x), x) = "
                           + q.name(a(e(x), x)));
    }
  }
  return Verdict::pass();
}

Verdict is_tcategory(const Theory& th, const VMatrix& a) {
  Verdict v = is_tgraph(th, a);
  if (!v) {
    return v;
  }
  std::size_t const n = a.source();
  TMatrix const t{n, n, a};
  TMatrix const aa = kleisli_compose(th, t, t);
  const Quantale& q = th.quantale();
  for (std::size_t fx = 0; fx < a.target(); ++fx) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!q.leq(aa.m(fx, x), a(fx, x))) {
        return Verdict::fail("transitivity fails at (" + num(fx) + ", " + num(x)
                             + "): (a o a) = " + q.name(aa.m(fx, x)) + " > "
                             + q.name(a(fx, x)));
      }
    }
  }
  return Verdict::pass();
}

TCategory::TCategory(TheoryPtr th, VMatrix a, std::vector<std::string> names)
    : th_(std::move(th)), a_(std::move(a)), names_(object_names(a_.source(), std::move(names))) {
  Verdict const v = is_tcategory(*th_, a_);
  if (!v) {
    throw ValidationError({{"t-category", v.witness}});
  }
}

TCategory TCategory::trusted(TheoryPtr th, VMatrix a, std::vector<std::string> names) {
  TCategory c;
  c.th_ = std::move(th);
  c.a_ = std::move(a);
  c.names_ = object_names(c.a_.source(), std::move(names));
  return c;
}

std::string TCategory::tname(std::size_t fx) const {
  return th_->monad().element_name(names_, fx);
}

Verdict is_graph_morphism(const Theory& th,
                          const VMatrix& a,
                          const VMatrix& b,
                          const FinMap& f) {
  if (f.domain() != a.source() || f.codomain != b.source()) {
    return Verdict::fail("map does not fit the carriers");
  }
  const Quantale& q = th.quantale();
  FinMap const tf = th.map(f);
  for (std::size_t fx = 0; fx < a.target(); ++fx) {
    for (std::size_t x = 0; x < a.source(); ++x) {
      if (!q.leq(a(fx, x), b(tf(fx), f(x)))) {
        return Verdict::fail("a(" + num(fx) + ", " + num(x) + ") = " + q.name(a(fx, x))
                             + " exceeds b(Tf, f) = " + q.name(b(tf(fx), f(x))));
      }
    }
  }
  return Verdict::pass();
}

Verdict is_tfunctor(const TCategory& x, const TCategory& y, const FinMap& f) {
  return is_graph_morphism(x.theory(), x.structure(), y.structure(), f);
}

Verdict is_tdistributor(const TCategory& x, const TCategory& y, const TMatrix& phi) {
  if (phi.from != x.size() || phi.to != y.size()) {
    return Verdict::fail("T-matrix does not fit the carriers");
  }
  const Theory& th = x.theory();
  if (!kleisli_compose(th, phi, x.as_tmatrix()).m.leq(phi.m)) {
    return Verdict::fail("phi o a > phi for phi = " + phi.m.to_string());
  }
  if (!kleisli_compose(th, y.as_tmatrix(), phi).m.leq(phi.m)) {
    return Verdict::fail("b o phi > phi for phi = " + phi.m.to_string());
  }
  return Verdict::pass();
}

Verdict is_tfunctor_to_v(const Theory& th, const VMatrix& a, std::span<const Elem> phi) {
  const Quantale& q = th.quantale();
  auto const hat = th.xi_hat(phi);
  for (std::size_t fx = 0; fx < a.target(); ++fx) {
    for (std::size_t x = 0; x < a.source(); ++x) {
      if (!q.leq(a(fx, x), q.hom(hat[fx], phi[x]))) {
        return Verdict::fail("at (" + num(fx) + ", " + num(x) + "): a = "
                             + q.name(a(fx, x)) + ", hom(xi T phi, phi x) = "
                             + q.name(q.hom(hat[fx], phi[x])));
      }
    }
  }
  return Verdict::pass();
}

Verdict is_tfunctor_to_v(const TCategory& x, std::span<const Elem> phi) {
  return is_tfunctor_to_v(x.theory(), x.structure(), phi);
}

FunctorGraphs graphs_of_functor(const TCategory& x, const TCategory& y, const FinMap& f) {
  if (Verdict const v = is_tfunctor(x, y, f); !v) {
    throw Error("graphs_of_functor: not a T-functor (" + v.witness + ")");
  }
  const Theory& th = x.theory();
  FinMap const tf = th.map(f);
  FunctorGraphs g;
  g.lower = TMatrix{x.size(), y.size(), compose(y.structure(), fn_matrix(th, f))};
  VMatrix upper(th.quantale_ptr(), y.size(), x.tsize());
  for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
    for (std::size_t yy = 0; yy < y.size(); ++yy) {
      upper.set(fx, yy, y(tf(fx), yy));
    }
  }
  g.upper = TMatrix{y.size(), x.size(), std::move(upper)};
  TMatrix const unit = kleisli_compose(th, g.upper, g.lower);
  TMatrix const counit = kleisli_compose(th, g.lower, g.upper);
  if (!x.structure().leq(unit.m)) {
    g.adjunction = Verdict::fail("a is not below f^* o f_* for f = " + to_string(f));
  } else if (!counit.m.leq(y.structure())) {
    g.adjunction = Verdict::fail("f_* o f^* is not below b for f = " + to_string(f));
  }
  return g;
}

bool functor_leq(const TCategory& x, const TCategory& y, const FinMap& f, const FinMap& g) {
  return graphs_of_functor(x, y, f).lower.m.leq(graphs_of_functor(x, y, g).lower.m);
}

bool functor_leq_upper(const TCategory& x,
                       const TCategory& y,
                       const FinMap& f,
                       const FinMap& g) {
  return graphs_of_functor(x, y, g).upper.m.leq(graphs_of_functor(x, y, f).upper.m);
}

VCategory underlying_vcat(const TCategory& x) {
  const Theory& th = x.theory();
  return VCategory::trusted(compose(involution(fn_matrix(th, th.unit(x.size()))), x.structure()),
                            x.names());
}

TCategory alexandrov(const TheoryPtr& th, const VCategory& r) {
  VMatrix a = compose(lax_extend(*th, r.matrix()), fn_matrix(*th, th->unit(r.size())));
  return TCategory(th, std::move(a), r.names());
}

VCategory m_functor(const TCategory& x) {
  const Theory& th = x.theory();
  VMatrix m = compose(fn_matrix(th, th.mult(x.size())), lax_extend(th, x.structure()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < x.tsize(); ++i) {
    names.push_back(x.tname(i));
  }
  return VCategory(std::move(m), std::move(names));
}

VCategory opposite(const VCategory& a) {
  return VCategory::trusted(involution(a.matrix()), a.names());
}

TCategory dual(const TCategory& x) {
  return alexandrov(x.theory_ptr(), opposite(m_functor(x)));
}

bool is_algebra(const Theory& th, const FinMap& alpha) {
  std::size_t const n = alpha.codomain;
  if (alpha.domain() != th.t(n)) {
    return false;
  }
  return compose(alpha, th.unit(n)) == identity_map(n)
         && compose(alpha, th.map(alpha)) == compose(alpha, th.mult(n));
}

std::vector<FinMap> enumerate_algebras(const Theory& th, std::size_t n) {
  std::vector<FinMap> out;
  for_each_tuple(th.t(n), n, [&](const std::vector<std::size_t>& t) {
    FinMap const alpha{n, t};
    if (is_algebra(th, alpha)) {
      out.push_back(alpha);
    }
  });
  return out;
}

TCategory discrete(const TheoryPtr& th, const FinMap& alpha) {
  return TCategory(th, involution(fn_matrix(*th, alpha)));
}

TCategory free_discrete(const TheoryPtr& th, std::size_t n) {
  std::size_t const tn = th->t(n);
  std::vector<std::string> names;
  std::vector<std::string> base;
  for (std::size_t i = 0; i < n; ++i) {
    base.push_back(num(i));
  }
  for (std::size_t i = 0; i < tn; ++i) {
    names.push_back(th->monad().element_name(base, i));
  }
  return TCategory(th, involution(fn_matrix(*th, th->mult(n))), std::move(names));
}

TCategory discrete_tcategory(const TheoryPtr& th, std::size_t n) {
  return TCategory(th, fn_matrix(*th, th->unit(n)));
}

TCategory tensor_product(const TCategory& x, const TCategory& y) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  std::size_t const nx = x.size(), ny = y.size();
  FinMap const p1 = th.map(first_projection(nx, ny));
  FinMap const p2 = th.map(second_projection(nx, ny));
  VMatrix c(th.quantale_ptr(), nx * ny, p1.domain());
  for (std::size_t w = 0; w < p1.domain(); ++w) {
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = 0; b < ny; ++b) {
        c.set(w, pair_index(a, b, ny), q.tensor(x(p1(w), a), y(p2(w), b)));
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = 0; b < ny; ++b) {
      names.push_back("(" + x.name(a) + "," + y.name(b) + ")");
    }
  }
  return TCategory::trusted(x.theory_ptr(), std::move(c), std::move(names));
}

TCategory unit_E(const TheoryPtr& th) {
  const Quantale& q = th->quantale();
  return TCategory(th, VMatrix(th->quantale_ptr(), 1, th->t(1), q.unit()), {"*"});
}

TCategory v_as_tcategory(const TheoryPtr& th) {
  const Quantale& q = th->quantale();
  std::size_t const n = q.size();
  VMatrix a(th->quantale_ptr(), n, th->t(n));
  for (std::size_t fv = 0; fv < th->t(n); ++fv) {
    for (std::size_t v = 0; v < n; ++v) {
      a.set(fv, v, q.hom(th->xi(fv), Elem(v)));
    }
  }
  std::vector<std::string> names;
  for (Elem v : q.elements()) {
    names.push_back(q.name(v));
  }
  return TCategory(th, std::move(a), std::move(names));
}

std::vector<std::vector<Elem>> t_functors_to_v(const TCategory& x) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> phi(x.size());
  for_each_tuple(x.size(), x.quantale().size(), [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      phi[i] = Elem(t[i]);
    }
    if (is_tfunctor_to_v(x, phi)) {
      out.push_back(phi);
    }
  });
  return out;
}

VMatrix exponential_structure(const TCategory& x, const std::vector<std::vector<Elem>>& fns) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  std::size_t const nx = x.size(), nf = fns.size();
  FinMap const p1 = th.map(first_projection(nx, nf));
  FinMap const p2 = th.map(second_projection(nx, nf));
  FinMap ev{q.size(), std::vector<std::size_t>(nx * nf)};
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t j = 0; j < nf; ++j) {
      ev.images[pair_index(a, j, nf)] = fns[j][a].index();
    }
  }
  FinMap const tev = th.map(ev);
  VMatrix out(th.quantale_ptr(), nf, th.t(nf), q.top());
  for (std::size_t w = 0; w < p1.domain(); ++w) {
    std::size_t const fp = p2(w);
    Elem const xe = th.xi(tev(w));
    for (std::size_t a = 0; a < nx; ++a) {
      Elem const ax = x(p1(w), a);
      for (std::size_t j = 0; j < nf; ++j) {
        out.set(fp, j, q.meet(out(fp, j), q.hom(ax, q.hom(xe, fns[j][a]))));
      }
    }
  }
  return out;
}

ExponentialGraph exponential_graph(const TCategory& x) {
  ExponentialGraph g;
  g.functions = t_functors_to_v(x);
  g.structure = exponential_structure(x, g.functions);
  return g;
}

CharTModReport char_tmod(const TCategory& x, const TCategory& y, const TMatrix& psi) {
  CharTModReport r;
  r.distributor = is_tdistributor(x, y, psi);
  auto const values = flatten(psi);
  TCategory const left = tensor_product(free_discrete(y.theory_ptr(), y.size()), x);
  TCategory const right = tensor_product(dual(y), x);
  r.discrete_side = is_tfunctor_to_v(left, values);
  r.dual_side = is_tfunctor_to_v(right, values);
  return r;
}

Verdict is_compact(const TCategory& x) {
  const Quantale& q = x.quantale();
  for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
    Elem acc = q.bottom();
    for (std::size_t a = 0; a < x.size(); ++a) {
      acc = q.join(acc, x(fx, a));
    }
    if (!q.leq(q.unit(), acc)) {
      return Verdict::fail("\\/ a(" + x.tname(fx) + ", -) = " + q.name(acc));
    }
  }
  return Verdict::pass();
}

Verdict sup_is_graph_morphism(const TCategory& x) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  ExponentialGraph const g = exponential_graph(x);
  std::vector<Elem> sup(g.functions.size());
  for (std::size_t j = 0; j < sup.size(); ++j) {
    sup[j] = q.join(g.functions[j]);
  }
  return is_tfunctor_to_v(th, g.structure, sup);
}

namespace {

  /// Structure of the relabelled T-category along a bijection s.
  std::vector<Elem> relabel(const TCategory& x, const FinMap& s) {
    FinMap const ts = x.theory().map(s);
    std::vector<Elem> out(x.structure().entries().size());
    for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
      for (std::size_t a = 0; a < x.size(); ++a) {
        out[ts(fx) * x.size() + s(a)] = x(fx, a);
      }
    }
    return out;
  }

}  // namespace

std::vector<TCategory> enumerate_tcategories(const TheoryPtr& th, std::size_t n) {
  const Quantale& q = th->quantale();
  std::size_t const tn = th->t(n);
  FinMap const e = th->unit(n);
  std::vector<bool> diag(tn * n, false);
  for (std::size_t x = 0; x < n; ++x) {
    diag[e(x) * n + x] = true;
  }
  std::vector<Elem> above_k;
  for (Elem v : q.elements()) {
    if (q.leq(q.unit(), v)) {
      above_k.push_back(v);
    }
  }
  std::vector<TCategory> out;
  VMatrix a(th->quantale_ptr(), n, tn);
  auto& es = a.entries();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == es.size()) {
      if (is_tcategory(*th, a)) {
        out.push_back(TCategory::trusted(th, a));
      }
      return;
    }
    if (diag[i]) {
      for (Elem v : above_k) {
        es[i] = v;
        self(self, i + 1);
      }
    } else {
      for (Elem v : q.elements()) {
        es[i] = v;
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Elem> canonical_form(const TCategory& x) {
  std::vector<Elem> best = x.structure().entries();
  for (const auto& p : permutations(x.size())) {
    auto cand = relabel(x, FinMap{x.size(), p});
    if (cand < best) {
      best = std::move(cand);
    }
  }
  return best;
}

std::vector<TCategory> up_to_isomorphism(const std::vector<TCategory>& cats) {
  std::set<std::pair<std::size_t, std::vector<Elem>>> seen;
  std::vector<TCategory> out;
  for (const auto& c : cats) {
    if (seen.insert({c.size(), canonical_form(c)}).second) {
      out.push_back(c);
    }
  }
  return out;
}

std::optional<FinMap> find_isomorphism(const TCategory& x, const TCategory& y) {
  if (x.size() != y.size() || x.tsize() != y.tsize()) {
    return std::nullopt;
  }
  for (const auto& p : permutations(x.size())) {
    FinMap const s{x.size(), p};
    if (relabel(x, s) == y.structure().entries()) {
      return s;
    }
  }
  return std::nullopt;
}

bool is_separated(const TCategory& x) {
  return underlying_vcat(x).is_skeletal();
}

}  // namespace stonet

#include "stonet/theory.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace stonet {

std::vector<std::vector<bool>> enumerate_ultrafilters(std::size_t n) {
  if (n > 4) {
    throw Error("enumerate_ultrafilters: n must be at most 4");
  }
  std::size_t const subsets = std::size_t{1} << n;
  std::size_t const full = subsets - 1;
  std::vector<std::vector<bool>> out;
  std::size_t const families = std::size_t{1} << subsets;
  for (std::size_t fam = 0; fam < families; ++fam) {
    auto has = [&](std::size_t s) { return (fam >> s & 1u) != 0; };
    if (has(0) || !has(full)) {
      continue;
    }
    bool ok = true;
    for (std::size_t a = 0; a < subsets && ok; ++a) {
      // Exactly one of A and its complement.
      if (has(a) == has(full & ~a)) {
        ok = false;
      }
      for (std::size_t b = 0; b < subsets && ok; ++b) {
        if (has(a) && has(b) && !has(a & b)) {
          ok = false;
        }
        if (has(a) && (a & b) == a && !has(b)) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<bool> bits(subsets);
      for (std::size_t s = 0; s < subsets; ++s) {
        bits[s] = has(s);
      }
      out.push_back(std::move(bits));
    }
  }
  return out;
}

Theory::Theory(QuantalePtr q,
               std::shared_ptr<const Monad> monad,
               std::vector<Elem> xi,
               std::string name,
               std::string note)
    : q_(std::move(q)),
      monad_(std::move(monad)),
      xi_(std::move(xi)),
      name_(std::move(name)),
      note_(std::move(note)) {
  if (monad_->apply(1) != 1) {
    throw Error("theory '" + name_ + "': T1 has " + std::to_string(monad_->apply(1))
                + " elements; only theories with T1 = 1 are supported");
  }
  if (xi_.size() != monad_->apply(q_->size())) {
    throw Error("theory '" + name_ + "': xi must be defined on all of T(V)");
  }
}

std::vector<Elem> Theory::xi_hat(std::span<const Elem> phi) const {
  FinMap f{q_->size(), std::vector<std::size_t>(phi.size())};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    f.images[i] = phi[i].index();
  }
  FinMap const tf = map(f);
  std::vector<Elem> out(tf.domain());
  for (std::size_t i = 0; i < tf.domain(); ++i) {
    out[i] = xi_[tf(i)];
  }
  return out;
}

TheoryPtr identity_theory(QuantalePtr q) {
  std::vector<Elem> xi = q->elements();
  return std::make_shared<const Theory>(q, std::make_shared<IdentityMonad>(),
                                        std::move(xi), "identity");
}

TheoryPtr finite_ultrafilter_theory(QuantalePtr q) {
  std::size_t const n = q->size();
  if (n > 16) {
    throw Error("finite_ultrafilter_theory: quantale too large");
  }
  // xi(principal at v) = /\ { \/A : v in A }.
  std::vector<Elem> xi(n);
  for (std::size_t v = 0; v < n; ++v) {
    Elem acc = q->top();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (!(mask >> v & 1u)) {
        continue;
      }
      Elem sup = q->bottom();
      for (std::size_t a = 0; a < n; ++a) {
        if (mask >> a & 1u) {
          sup = q->join(sup, Elem(a));
        }
      }
      acc = q->meet(acc, sup);
    }
    xi[v] = acc;
  }
  auto hyp = check_frm_hypotheses(*q);
  std::string note =
      "ultrafilters on finite sets are principal: U X is isomorphic to X and "
      "this theory is isomorphic to the identity theory";
  if (!hyp.all()) {
    note += "; quantale fails the frame hypotheses (" + hyp.witness + ")";
  }
  return std::make_shared<const Theory>(q, std::make_shared<FiniteUltrafilterMonad>(),
                                        std::move(xi), "finite-ultrafilter",
                                        std::move(note));
}

VMatrix lax_extend(const Theory& th, const VMatrix& r) {
  const Quantale& q = th.quantale();
  std::size_t const nx = r.source();
  std::size_t const ny = r.target();
  // r as a function Y x X -> V.
  FinMap rf{q.size(), std::vector<std::size_t>(ny * nx)};
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < nx; ++x) {
      rf.images[pair_index(y, x, nx)] = r(y, x).index();
    }
  }
  FinMap const tp1 = th.map(first_projection(ny, nx));
  FinMap const tp2 = th.map(second_projection(ny, nx));
  FinMap const tr = th.map(rf);
  VMatrix out(r.quantale_ptr(), th.t(nx), th.t(ny));
  for (std::size_t w = 0; w < tr.domain(); ++w) {
    std::size_t const fy = tp1(w);
    std::size_t const fx = tp2(w);
    out.set(fy, fx, q.join(out(fy, fx), th.xi(tr(w))));
  }
  return out;
}

TMatrix kleisli_unit(const Theory& th, std::size_t n) {
  return TMatrix{n, n, VMatrix::from_map(th.quantale_ptr(), th.unit(n))};
}

namespace {

  /// f . M for a function f read as a matrix, without materializing it.
  VMatrix push_forward(const FinMap& f, const VMatrix& m) {
    const Quantale& q = m.quantale();
    VMatrix out(m.quantale_ptr(), m.source(), f.codomain);
    for (std::size_t i = 0; i < m.target(); ++i) {
      for (std::size_t j = 0; j < m.source(); ++j) {
        out.set(f(i), j, q.join(out(f(i), j), m(i, j)));
      }
    }
    return out;
  }

  std::string tshape(const TMatrix& a) {
    return std::to_string(a.from) + "=>" + std::to_string(a.to);
  }

}  // namespace

TMatrix kleisli_compose(const Theory& th, const TMatrix& beta, const TMatrix& alpha) {
  if (alpha.to != beta.from) {
    throw ShapeError("kleisli_compose: " + tshape(beta) + " after " + tshape(alpha));
  }
  VMatrix const tb = lax_extend(th, beta.m);
  return TMatrix{alpha.from, beta.to,
                 push_forward(th.mult(beta.to), compose(tb, alpha.m))};
}

TMatrix kleisli_lifting(const Theory& th, const TMatrix& psi, const TMatrix& gamma) {
  if (psi.to != gamma.to) {
    throw ShapeError("kleisli_lifting: " + tshape(psi) + " through " + tshape(gamma));
  }
  VMatrix const r = push_forward(th.mult(psi.to), lax_extend(th, psi.m));
  return TMatrix{gamma.from, psi.from, lifting(r, gamma.m)};
}

std::vector<Elem> as_function(const TMatrix& phi) {
  if (phi.to != 1 || phi.m.target() != 1) {
    throw ShapeError("as_function: expected a T-matrix into the one-point set");
  }
  std::vector<Elem> out(phi.from);
  for (std::size_t x = 0; x < phi.from; ++x) {
    out[x] = phi.m(0, x);
  }
  return out;
}

TMatrix from_function(const Theory& th, std::span<const Elem> phi) {
  TMatrix out{phi.size(), 1, VMatrix(th.quantale_ptr(), phi.size(), th.t(1))};
  for (std::size_t x = 0; x < phi.size(); ++x) {
    out.m.set(0, x, phi[x]);
  }
  return out;
}

std::vector<Elem> as_cofunction(const TMatrix& psi) {
  if (psi.from != 1) {
    throw ShapeError("as_cofunction: expected a T-matrix out of the one-point set");
  }
  std::vector<Elem> out(psi.m.target());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = psi.m(i, 0);
  }
  return out;
}

TMatrix from_cofunction(const Theory& th, std::size_t x, std::span<const Elem> psi) {
  if (psi.size() != th.t(x)) {
    throw ShapeError("from_cofunction: weight must be defined on all of TX");
  }
  TMatrix out{1, x, VMatrix(th.quantale_ptr(), 1, th.t(x))};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out.m.set(i, 0, psi[i]);
  }
  return out;
}

bool TheoryReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoryCheck& c) { return c.holds; });
}

const TheoryCheck* TheoryReport::find(std::string_view law) const {
  for (const auto& c : checks) {
    if (c.law == law) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

  class Recorder {
   public:
    explicit Recorder(TheoryReport& r) : report_(r) {}

    TheoryCheck& law(const std::string& name) {
      for (auto& c : report_.checks) {
        if (c.law == name) {
          return c;
        }
      }
      report_.checks.push_back({name, true, {}});
      return report_.checks.back();
    }

    void expect(const std::string& name, bool ok, const std::string& witness) {
      auto& c = law(name);
      if (!ok && c.holds) {
        c.holds = false;
        c.witness = witness;
      }
    }

   private:
    TheoryReport& report_;
  };

  std::vector<FinMap> all_maps(std::size_t a, std::size_t b) {
    std::vector<FinMap> out;
    for_each_tuple(a, b, [&](const std::vector<std::size_t>& t) {
      out.push_back(FinMap{b, t});
    });
    return out;
  }

  FinMap quantale_binary(const Quantale& q, bool use_hom) {
    std::size_t const n = q.size();
    FinMap f{n, std::vector<std::size_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem const r = use_hom ? q.hom(Elem(a), Elem(b)) : q.tensor(Elem(a), Elem(b));
        f.images[pair_index(a, b, n)] = r.index();
      }
    }
    return f;
  }

  /// r (x) s : X x Y -|-> X' x Y'.
  VMatrix tensor_matrices(const VMatrix& r, const VMatrix& s) {
    const Quantale& q = r.quantale();
    std::size_t const nx = r.source(), ny = s.source();
    std::size_t const mx = r.target(), my = s.target();
    VMatrix out(r.quantale_ptr(), nx * ny, mx * my);
    for (std::size_t x2 = 0; x2 < mx; ++x2) {
      for (std::size_t y2 = 0; y2 < my; ++y2) {
        for (std::size_t x = 0; x < nx; ++x) {
          for (std::size_t y = 0; y < ny; ++y) {
            out.set(pair_index(x2, y2, my), pair_index(x, y, ny),
                    q.tensor(r(x2, x), s(y2, y)));
          }
        }
      }
    }
    return out;
  }

  /// tau_{X,Y} = <T pi1, T pi2> : T(X x Y) -> TX x TY.
  FinMap pairing(const Theory& th, std::size_t nx, std::size_t ny) {
    FinMap const p1 = th.map(first_projection(nx, ny));
    FinMap const p2 = th.map(second_projection(nx, ny));
    std::size_t const tx = th.t(nx), ty = th.t(ny);
    FinMap out{tx * ty, std::vector<std::size_t>(p1.domain())};
    for (std::size_t w = 0; w < p1.domain(); ++w) {
      out.images[w] = pair_index(p1(w), p2(w), ty);
    }
    return out;
  }

  std::vector<VMatrix> sample_matrices(const Quantale& q,
                                       const QuantalePtr& qp,
                                       std::size_t source,
                                       std::size_t target,
                                       std::mt19937& rng) {
    std::vector<VMatrix> out;
    std::size_t const cells = source * target;
    std::size_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= q.size();
      if (total > 256) {
        small = false;
        break;
      }
    }
    if (small) {
      for (std::size_t c = 0; c < total; ++c) {
        out.push_back(decode(qp, source, target, c));
      }
      return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
    for (std::size_t k = 0; k < 64; ++k) {
      VMatrix m(qp, source, target);
      for (auto& e : m.entries()) {
        e = Elem(pick(rng));
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  std::string vec(const Quantale& q, std::span<const Elem> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? " " : "") + q.name(v[i]);
    }
    return s + ")";
  }

}  // namespace

TheoryReport validate_theory(const Theory& th, std::span<const std::size_t> sample_sizes) {
  TheoryReport report;
  Recorder rec(report);
  const Quantale& q = th.quantale();
  std::size_t const nv = q.size();

  rec.expect("T1=1", th.t(1) == 1, "|T1| = " + std::to_string(th.t(1)));

  // Functor and monad laws.
  for (std::size_t a : sample_sizes) {
    rec.expect("functor-identity", th.map(identity_map(a)) == identity_map(th.t(a)),
               "n=" + std::to_string(a));
    FinMap const e = th.unit(a);
    FinMap const m = th.mult(a);
    std::size_t const ta = th.t(a);
    rec.expect("monad-left-unit", compose(m, th.unit(ta)) == identity_map(ta),
               "m . e_T on n=" + std::to_string(a));
    rec.expect("monad-right-unit", compose(m, th.map(e)) == identity_map(ta),
               "m . Te on n=" + std::to_string(a));
    rec.expect("monad-associativity",
               compose(m, th.map(m)) == compose(m, th.mult(ta)),
               "m . Tm vs m . m_T on n=" + std::to_string(a));
    for (std::size_t b : sample_sizes) {
      for (const FinMap& f : all_maps(a, b)) {
        FinMap const tf = th.map(f);
        rec.expect("unit-naturality", compose(tf, e) == compose(th.unit(b), f),
                   "f=" + to_string(f));
        rec.expect("mult-naturality",
                   compose(tf, m) == compose(th.mult(b), th.map(tf)),
                   "f=" + to_string(f));
        for (std::size_t c : sample_sizes) {
          if (a * b * c > 12) {
            continue;
          }
          for (const FinMap& g : all_maps(b, c)) {
            rec.expect("functor-composition",
                       th.map(compose(g, f)) == compose(th.map(g), tf),
                       "f=" + to_string(f) + ", g=" + to_string(g));
          }
        }
      }
    }
  }

  // (V, xi) is an algebra.
  FinMap xi{nv, std::vector<std::size_t>(th.t(nv))};
  for (std::size_t i = 0; i < xi.domain(); ++i) {
    xi.images[i] = th.xi(i).index();
  }
  {
    FinMap const xe = compose(xi, th.unit(nv));
    for (std::size_t v = 0; v < nv; ++v) {
      rec.expect("xi-unit", xe(v) == v, "xi(e(" + q.name(Elem(v)) + ")) = "
                                            + q.name(Elem(xe(v))));
    }
    rec.expect("xi-associativity",
               compose(xi, th.map(xi)) == compose(xi, th.mult(nv)),
               "xi . T xi differs from xi . m_V");
  }

  // The monoid (V, (x), k) lifts to algebras; hom is oplax.
  {
    FinMap const p1 = th.map(first_projection(nv, nv));
    FinMap const p2 = th.map(second_projection(nv, nv));
    FinMap const tt = th.map(quantale_binary(q, false));
    FinMap const th_hom = th.map(quantale_binary(q, true));
    for (std::size_t w = 0; w < p1.domain(); ++w) {
      Elem const a = th.xi(p1(w));
      Elem const b = th.xi(p2(w));
      rec.expect("tensor-homomorphism", th.xi(tt(w)) == q.tensor(a, b),
                 "w=" + std::to_string(w) + ": xi(T tensor) = " + q.name(th.xi(tt(w)))
                     + ", tensor of components = " + q.name(q.tensor(a, b)));
      rec.expect("hom-oplax", q.leq(q.hom(a, b), th.xi(th_hom(w))),
                 "w=" + std::to_string(w));
    }
    FinMap const tk = th.map(constant_map(1, nv, q.unit().index()));
    for (std::size_t u = 0; u < tk.domain(); ++u) {
      rec.expect("unit-homomorphism", th.xi(tk(u)) == q.unit(),
                 "xi(Tk(" + std::to_string(u) + ")) = " + q.name(th.xi(tk(u))));
    }
  }

  // Naturality of xi_X : P_V => P_V . T.
  for (std::size_t a : sample_sizes) {
    for (std::size_t b : sample_sizes) {
      if (a > 3 || b > 3) {
        continue;
      }
      for (const FinMap& f : all_maps(a, b)) {
        FinMap const tf = th.map(f);
        for_each_tuple(a, nv, [&](const std::vector<std::size_t>& t) {
          std::vector<Elem> phi(a);
          for (std::size_t i = 0; i < a; ++i) {
            phi[i] = Elem(t[i]);
          }
          std::vector<Elem> pushed(b, q.bottom());
          for (std::size_t i = 0; i < a; ++i) {
            pushed[f(i)] = q.join(pushed[f(i)], phi[i]);
          }
          auto const lhs = th.xi_hat(pushed);
          auto const hat = th.xi_hat(phi);
          std::vector<Elem> rhs(th.t(b), q.bottom());
          for (std::size_t i = 0; i < hat.size(); ++i) {
            rhs[tf(i)] = q.join(rhs[tf(i)], hat[i]);
          }
          rec.expect("xi-naturality", lhs == rhs,
                     "f=" + to_string(f) + ", phi=" + vec(q, phi));
        });
      }
    }
  }

  // Lax extension: Hopf squares, oplax e, strict m.
  std::mt19937 rng(20100401u);
  for (std::size_t a : sample_sizes) {
    for (std::size_t b : sample_sizes) {
      if (a == 0 || b == 0 || a > 2 || b > 2) {
        continue;
      }
      auto const rs = sample_matrices(q, th.quantale_ptr(), a, b, rng);
      for (const VMatrix& r : rs) {
        VMatrix const tr = lax_extend(th, r);
        rec.expect("e-oplax",
                   compose(VMatrix::from_map(th.quantale_ptr(), th.unit(b)), r)
                       .leq(compose(tr, VMatrix::from_map(th.quantale_ptr(), th.unit(a)))),
                   "r=" + r.to_string());
        rec.expect("m-natural",
                   compose(VMatrix::from_map(th.quantale_ptr(), th.mult(b)),
                           lax_extend(th, tr))
                       == compose(tr, VMatrix::from_map(th.quantale_ptr(), th.mult(a))),
                   "r=" + r.to_string());
        rec.expect("lax-extension-involution",
                   lax_extend(th, involution(r)) == involution(tr), "r=" + r.to_string());
      }
      if (rs.size() > 16) {
        continue;
      }
      for (const VMatrix& r : rs) {
        for (const VMatrix& s : rs) {
          VMatrix const lhs = compose(
              VMatrix::from_map(th.quantale_ptr(), pairing(th, r.target(), s.target())),
              lax_extend(th, tensor_matrices(r, s)));
          VMatrix const rhs = compose(
              tensor_matrices(lax_extend(th, r), lax_extend(th, s)),
              VMatrix::from_map(th.quantale_ptr(), pairing(th, r.source(), s.source())));
          rec.expect("hopf-tau", lhs == rhs, "r=" + r.to_string() + ", s=" + s.to_string());
        }
      }
    }
  }
  for (Elem v : q.elements()) {
    VMatrix const scalar(th.quantale_ptr(), 1, 1, v);
    rec.expect("hopf-unit", lax_extend(th, scalar) == scalar,
               "T_xi of the scalar " + q.name(v));
  }

  // Weak pullbacks (Beck-Chevalley), spot-checked.
  for (std::size_t a : sample_sizes) {
    for (std::size_t b : sample_sizes) {
      for (std::size_t c : sample_sizes) {
        if (a > 2 || b > 2 || c > 2) {
          continue;
        }
        for (const FinMap& f : all_maps(a, c)) {
          for (const FinMap& g : all_maps(b, c)) {
            FinMap p1{a, {}}, p2{b, {}};
            for (std::size_t x = 0; x < a; ++x) {
              for (std::size_t y = 0; y < b; ++y) {
                if (f(x) == g(y)) {
                  p1.images.push_back(x);
                  p2.images.push_back(y);
                }
              }
            }
            FinMap const tp1 = th.map(p1), tp2 = th.map(p2);
            FinMap const tf = th.map(f), tg = th.map(g);
            for (std::size_t fx = 0; fx < th.t(a); ++fx) {
              for (std::size_t fy = 0; fy < th.t(b); ++fy) {
                if (tf(fx) != tg(fy)) {
                  continue;
                }
                bool found = false;
                for (std::size_t w = 0; w < tp1.domain() && !found; ++w) {
                  found = tp1(w) == fx && tp2(w) == fy;
                }
                rec.expect("weak-pullback-T", found,
                           "f=" + to_string(f) + ", g=" + to_string(g));
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t a : sample_sizes) {
    for (std::size_t b : sample_sizes) {
      if (a > 3 || b > 3) {
        continue;
      }
      for (const FinMap& f : all_maps(a, b)) {
        FinMap const tf = th.map(f);
        FinMap const ttf = th.map(tf);
        FinMap const ma = th.mult(a), mb = th.mult(b);
        for (std::size_t fx = 0; fx < tf.domain(); ++fx) {
          for (std::size_t big = 0; big < mb.domain(); ++big) {
            if (tf(fx) != mb(big)) {
              continue;
            }
            bool found = false;
            for (std::size_t w = 0; w < ma.domain() && !found; ++w) {
              found = ma(w) == fx && ttf(w) == big;
            }
            rec.expect("weak-pullback-m", found, "f=" + to_string(f));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace stonet

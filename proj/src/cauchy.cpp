#include "stonet/cauchy.hpp"

#include <algorithm>

namespace stonet {

std::vector<Elem> lower_representable(const TCategory& x, std::size_t point) {
  std::vector<Elem> out(x.tsize());
  for (std::size_t fx = 0; fx < x.tsize(); ++fx) {
    out[fx] = x(fx, point);
  }
  return out;
}

std::vector<Elem> upper_representable(const TCategory& x, std::size_t point) {
  FinMap const e = x.theory().unit(x.size());
  std::vector<Elem> out(x.size());
  for (std::size_t y = 0; y < x.size(); ++y) {
    out[y] = x(e(point), y);
  }
  return out;
}

Elem scalar_compose(const TCategory& x, std::span<const Elem> phi, std::span<const Elem> psi) {
  const Theory& th = x.theory();
  TMatrix const c = kleisli_compose(th, from_function(th, phi),
                                    from_cofunction(th, x.size(), psi));
  return c.m(0, 0);
}

Verdict is_left_distributor(const TCategory& x, std::span<const Elem> psi) {
  const Theory& th = x.theory();
  TCategory const e = unit_E(x.theory_ptr());
  return is_tdistributor(e, x, from_cofunction(th, x.size(), psi));
}

Verdict is_right_distributor(const TCategory& x, std::span<const Elem> phi) {
  TCategory const e = unit_E(x.theory_ptr());
  return is_tdistributor(x, e, from_function(x.theory(), phi));
}

Verdict is_adjoint_pair(const TCategory& x, const AdjointPair& p) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  if (Verdict v = is_left_distributor(x, p.left); !v) {
    return Verdict::fail("left part: " + v.witness);
  }
  if (Verdict v = is_right_distributor(x, p.right); !v) {
    return Verdict::fail("right part: " + v.witness);
  }
  if (!q.leq(q.unit(), scalar_compose(x, p.right, p.left))) {
    return Verdict::fail("unit: phi o psi is below k");
  }
  TMatrix const counit = kleisli_compose(th, from_cofunction(th, x.size(), p.left),
                                         from_function(th, p.right));
  if (!counit.m.leq(x.structure())) {
    return Verdict::fail("counit: psi o phi is not below a");
  }
  return Verdict::pass();
}

std::vector<Elem> right_adjoint_candidate(const TCategory& x, std::span<const Elem> psi) {
  const Theory& th = x.theory();
  TMatrix const r = kleisli_lifting(th, from_cofunction(th, x.size(), psi), x.as_tmatrix());
  return as_function(r);
}

std::vector<AdjointPair> left_adjoint_distributors(const TCategory& x) {
  const Quantale& q = x.quantale();
  std::vector<AdjointPair> out;
  std::vector<Elem> psi(x.tsize());
  for_each_tuple(x.tsize(), q.size(), [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      psi[i] = Elem(t[i]);
    }
    if (!is_left_distributor(x, psi)) {
      return;
    }
    AdjointPair p{psi, right_adjoint_candidate(x, psi)};
    if (is_adjoint_pair(x, p)) {
      out.push_back(std::move(p));
    }
  });
  return out;
}

std::vector<AdjointPair> adjoint_pairs_by_enumeration(const TCategory& x) {
  const Quantale& q = x.quantale();
  std::vector<AdjointPair> out;
  AdjointPair p{std::vector<Elem>(x.tsize()), std::vector<Elem>(x.size())};
  for_each_tuple(x.tsize() + x.size(), q.size(), [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < x.tsize(); ++i) {
      p.left[i] = Elem(t[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      p.right[i] = Elem(t[x.tsize() + i]);
    }
    if (is_adjoint_pair(x, p)) {
      out.push_back(p);
    }
  });
  return out;
}

CauchyCompletion cauchy_completion(const TCategory& x) {
  const Theory& th = x.theory();
  const Quantale& q = th.quantale();
  CauchyCompletion c{left_adjoint_distributors(x), TCategory::trusted(x.theory_ptr(), VMatrix(th.quantale_ptr(), 0, th.t(0))), {}};
  std::size_t const n = c.pairs.size();
  auto const opens = t_functors_to_v(x);

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "~" + std::to_string(i);
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (c.pairs[i].left == lower_representable(x, p)) {
        names[i] = x.name(p);
        break;
      }
    }
  }

  VMatrix a(th.quantale_ptr(), n, th.t(n), q.top());
  std::vector<Elem> g(n);
  for (const auto& phi : opens) {
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = scalar_compose(x, phi, c.pairs[i].left);
    }
    auto const hat = th.xi_hat(g);
    for (std::size_t fp = 0; fp < a.target(); ++fp) {
      for (std::size_t i = 0; i < n; ++i) {
        a.set(fp, i, q.meet(a(fp, i), q.hom(hat[fp], g[i])));
      }
    }
  }
  if (Verdict const v = is_tcategory(th, a); !v) {
    throw Error("cauchy_completion: induced structure is not a T-category (" + v.witness + ")");
  }
  c.completion = TCategory::trusted(x.theory_ptr(), std::move(a), std::move(names));

  c.yoneda = FinMap{n, std::vector<std::size_t>(x.size())};
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto const rep = lower_representable(x, p);
    auto it = std::find_if(c.pairs.begin(), c.pairs.end(),
                           [&](const AdjointPair& ap) { return ap.left == rep; });
    if (it == c.pairs.end()) {
      throw Error("cauchy_completion: x_* is not a left adjoint");
    }
    c.yoneda.images[p] = static_cast<std::size_t>(it - c.pairs.begin());
  }
  return c;
}

bool is_cauchy_complete(const TCategory& x) {
  for (const auto& p : left_adjoint_distributors(x)) {
    bool found = false;
    for (std::size_t point = 0; point < x.size() && !found; ++point) {
      found = p.left == lower_representable(x, point);
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

}  // namespace stonet

#include "stonet/vcat.hpp"

#include <algorithm>

namespace stonet {

namespace {

  std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
    }
    if (names.size() != n) {
      throw ShapeError("VCategory: expected " + std::to_string(n) + " object names");
    }
    return names;
  }

  /// Objects s whose row hom(s, -) equals `row`.
  IsoClass match_row(const VCategory& a, std::span<const Elem> row) {
    IsoClass out;
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool ok = true;
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        ok = a.hom(s, y) == row[y];
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  /// Objects s whose column hom(-, s) equals `col`.
  IsoClass match_col(const VCategory& a, std::span<const Elem> col) {
    IsoClass out;
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool ok = true;
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        ok = a.hom(y, s) == col[y];
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace

Verdict check_vcategory(const VMatrix& m) {
  if (m.source() != m.target()) {
    return Verdict::fail("structure matrix is not square");
  }
  const Quantale& q = m.quantale();
  std::size_t const n = m.source();
  for (std::size_t x = 0; x < n; ++x) {
    if (!q.leq(q.unit(), m(x, x))) {
      return Verdict::fail("reflexivity fails at " + std::to_string(x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!q.leq(q.tensor(m(x, y), m(y, z)), m(x, z))) {
          return Verdict::fail("transitivity fails at (" + std::to_string(x) + ","
                               + std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  return Verdict::pass();
}

VCategory::VCategory(VMatrix hom, std::vector<std::string> names)
    : m_(std::move(hom)), names_(default_names(m_.source(), std::move(names))) {
  Verdict const v = check_vcategory(m_);
  if (!v) {
    throw ValidationError({{"v-category", v.witness}});
  }
}

VCategory VCategory::trusted(VMatrix hom, std::vector<std::string> names) {
  VCategory c;
  c.m_ = std::move(hom);
  c.names_ = default_names(c.m_.source(), std::move(names));
  return c;
}

bool VCategory::is_iso(std::size_t x, std::size_t y) const {
  const Quantale& q = quantale();
  return q.leq(q.unit(), hom(x, y)) && q.leq(q.unit(), hom(y, x));
}

bool VCategory::is_skeletal() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (is_iso(x, y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_closed(const VCategory& a, std::span<const Elem> w, Variance v) {
  const Quantale& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      bool const ok = v == Variance::covariant
                          ? q.leq(q.tensor(a.hom(x, y), w[x]), w[y])
                          : q.leq(q.tensor(a.hom(x, y), w[y]), w[x]);
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Elem> representable(const VCategory& a, std::size_t x, Variance v) {
  std::vector<Elem> w(a.size());
  for (std::size_t y = 0; y < a.size(); ++y) {
    w[y] = v == Variance::covariant ? a.hom(x, y) : a.hom(y, x);
  }
  return w;
}

Elem presheaf_hom(const Quantale& q, std::span<const Elem> w, std::span<const Elem> w2) {
  Elem acc = q.top();
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc = q.meet(acc, q.hom(w[i], w2[i]));
  }
  return acc;
}

std::vector<std::vector<Elem>> enumerate_presheaves(const VCategory& a, Variance v) {
  const Quantale& q = a.quantale();
  std::size_t const n = a.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> w(n);
  // Constraint between a new position i and every earlier j, both ways.
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        bool const ok = v == Variance::covariant
                            ? q.leq(q.tensor(a.hom(x, y), w[x]), w[y])
                            : q.leq(q.tensor(a.hom(x, y), w[y]), w[x]);
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (std::size_t e = 0; e < q.size(); ++e) {
      w[i] = Elem(e);
      if (consistent(i)) {
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<std::size_t> PresheafCategory::find(std::span<const Elem> w) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), w,
                             [](const std::vector<Elem>& lhs, std::span<const Elem> rhs) {
                               return std::lexicographical_compare(
                                   lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
                             });
  if (it != weights.end() && std::equal(it->begin(), it->end(), w.begin(), w.end())) {
    return static_cast<std::size_t>(it - weights.begin());
  }
  return std::nullopt;
}

PresheafCategory presheaf_cat(const VCategory& a, Variance v) {
  PresheafCategory p;
  p.variance = v;
  p.weights = enumerate_presheaves(a, v);
  const Quantale& q = a.quantale();
  std::size_t const n = p.weights.size();
  VMatrix m(a.quantale_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.set(i, j, presheaf_hom(q, p.weights[i], p.weights[j]));
    }
  }
  p.cat = VCategory::trusted(std::move(m));
  return p;
}

IsoClass tensor(const VCategory& a, Elem v, std::size_t x) {
  std::vector<Elem> row(a.size());
  for (std::size_t y = 0; y < a.size(); ++y) {
    row[y] = a.quantale().hom(v, a.hom(x, y));
  }
  return match_row(a, row);
}

IsoClass cotensor(const VCategory& a, Elem v, std::size_t x) {
  std::vector<Elem> col(a.size());
  for (std::size_t y = 0; y < a.size(); ++y) {
    col[y] = a.quantale().hom(v, a.hom(y, x));
  }
  return match_col(a, col);
}

IsoClass weighted_colimit(const VCategory& a,
                          std::span<const Elem> psi,
                          std::span<const std::size_t> h) {
  const Quantale& q = a.quantale();
  std::vector<Elem> row(a.size(), q.top());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      row[y] = q.meet(row[y], q.hom(psi[i], a.hom(h[i], y)));
    }
  }
  return match_row(a, row);
}

IsoClass weighted_limit(const VCategory& a,
                        std::span<const Elem> phi,
                        std::span<const std::size_t> h) {
  const Quantale& q = a.quantale();
  std::vector<Elem> col(a.size(), q.top());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      col[y] = q.meet(col[y], q.hom(phi[i], a.hom(y, h[i])));
    }
  }
  return match_col(a, col);
}

namespace {
  std::vector<std::size_t> all_objects(std::size_t n) {
    std::vector<std::size_t> h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = i;
    }
    return h;
  }
}  // namespace

IsoClass sup_of_presheaf(const VCategory& a, std::span<const Elem> psi) {
  return weighted_colimit(a, psi, all_objects(a.size()));
}

IsoClass inf_of_presheaf(const VCategory& a, std::span<const Elem> phi) {
  return weighted_limit(a, phi, all_objects(a.size()));
}

IsoClass supremum(const VCategory& a, std::span<const std::size_t> family) {
  std::vector<Elem> const k(family.size(), a.quantale().unit());
  return weighted_colimit(a, k, family);
}

IsoClass infimum(const VCategory& a, std::span<const std::size_t> family) {
  std::vector<Elem> const k(family.size(), a.quantale().unit());
  return weighted_limit(a, k, family);
}

Verdict is_complete(const VCategory& a) {
  if (infimum(a, {}).empty()) {
    return Verdict::fail("no top object");
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      std::size_t const fam[] = {x, y};
      if (infimum(a, fam).empty()) {
        return Verdict::fail("no infimum of " + a.name(x) + " and " + a.name(y));
      }
    }
    for (Elem v : a.quantale().elements()) {
      if (cotensor(a, v, x).empty()) {
        return Verdict::fail("no cotensor of " + a.name(x) + " by "
                             + a.quantale().name(v));
      }
    }
  }
  return Verdict::pass();
}

std::optional<std::vector<std::vector<Elem>>> sup_left_adjoint(const VCategory& a) {
  if (Verdict const c = is_complete(a); !c) {
    throw Error("sup_left_adjoint: not complete (" + c.witness + ")");
  }
  const Quantale& q = a.quantale();
  std::size_t const n = a.size();
  auto const presheaves = enumerate_presheaves(a, Variance::contravariant);
  std::vector<std::size_t> sup(presheaves.size());
  for (std::size_t p = 0; p < presheaves.size(); ++p) {
    IsoClass const s = sup_of_presheaf(a, presheaves[p]);
    if (s.empty()) {
      throw Error("sup_left_adjoint: complete category without a supremum");
    }
    sup[p] = s.front();
  }
  // The only possible left adjoint: t(x) = /\_psi hom(x, sup psi) -o psi.
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n, q.top()));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < presheaves.size(); ++p) {
      Elem const c = a.hom(x, sup[p]);
      for (std::size_t z = 0; z < n; ++z) {
        t[x][z] = q.meet(t[x][z], q.hom(c, presheaves[p][z]));
      }
    }
    if (!is_closed(a, t[x], Variance::contravariant)) {
      return std::nullopt;
    }
    for (std::size_t p = 0; p < presheaves.size(); ++p) {
      if (presheaf_hom(q, t[x], presheaves[p]) != a.hom(x, sup[p])) {
        return std::nullopt;
      }
    }
  }
  return t;
}

bool is_completely_distributive(const VCategory& a) {
  return sup_left_adjoint(a).has_value();
}

bool is_totally_algebraic(const VCategory& a) {
  auto const t = sup_left_adjoint(a);
  if (!t) {
    return false;
  }
  const Quantale& q = a.quantale();
  std::size_t const n = a.size();
  std::vector<std::size_t> gens;
  for (std::size_t x = 0; x < n; ++x) {
    if ((*t)[x] == representable(a, x, Variance::contravariant)) {
      gens.push_back(x);
    }
  }
  VMatrix sub(a.quantale_ptr(), gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      sub.set(i, j, a.hom(gens[i], gens[j]));
    }
  }
  VCategory const small = VCategory::trusted(std::move(sub));
  auto const ps = enumerate_presheaves(small, Variance::contravariant);
  // F(psi) = sup of the left Kan extension of psi along the inclusion.
  std::vector<std::size_t> image(ps.size());
  for (std::size_t p = 0; p < ps.size(); ++p) {
    std::vector<Elem> ext(n, q.bottom());
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        ext[z] = q.join(ext[z], q.tensor(a.hom(z, gens[i]), ps[p][i]));
      }
    }
    IsoClass const s = sup_of_presheaf(a, ext);
    if (s.empty()) {
      return false;
    }
    image[p] = s.front();
  }
  for (std::size_t p = 0; p < ps.size(); ++p) {
    for (std::size_t r = 0; r < ps.size(); ++r) {
      if (presheaf_hom(q, ps[p], ps[r]) != a.hom(image[p], image[r])) {
        return false;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool hit = false;
    for (std::size_t p = 0; p < ps.size() && !hit; ++p) {
      hit = a.is_iso(x, image[p]);
    }
    if (!hit) {
      return false;
    }
  }
  return true;
}

}  // namespace stonet

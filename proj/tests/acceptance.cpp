// Runs the acceptance criteria with their time limits and prints one line per
// criterion.  `acceptance N` runs criterion N alone.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "stonet/duality.hpp"

using namespace stonet;

namespace {

/// Empty when the criterion holds, otherwise the first failure.
using Failure = std::string;

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Failure()> run;
};

std::vector<TheoryPtr> theories(const QuantalePtr& q) {
  return {identity_theory(q), finite_ultrafilter_theory(q)};
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

/// All n x m matrices, indexed by code.
std::vector<VMatrix> all_matrices(const QuantalePtr& q, std::size_t src, std::size_t tgt) {
  std::vector<VMatrix> out;
  for (std::size_t c = 0; c < power(q->size(), src * tgt); ++c) {
    out.push_back(decode(q, src, tgt, c));
  }
  return out;
}

/// leq[a * n + b] for all matrices of one shape.
std::vector<bool> leq_table(const std::vector<VMatrix>& ms) {
  std::vector<bool> t(ms.size() * ms.size());
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = 0; b < ms.size(); ++b) {
      t[a * ms.size() + b] = ms[a].leq(ms[b]);
    }
  }
  return t;
}

std::string text(const VMatrix& m) { return m.to_string(); }

Failure residuation() {
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    for (Elem x : q->elements()) {
      for (Elem y : q->elements()) {
        for (Elem z : q->elements()) {
          if (q->leq(q->tensor(x, y), z) != q->leq(x, q->hom(y, z))) {
            return q->label() + ": x (x) y <= z disagrees with x <= hom(y, z) at (" + q->name(x)
                   + ", " + q->name(y) + ", " + q->name(z) + ")";
          }
        }
      }
    }
    // r : X -|-> Y, s : Y -|-> Z, t : X -|-> Z.
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      for (std::size_t ny = 1; ny <= 2; ++ny) {
        for (std::size_t nz = 1; nz <= 2; ++nz) {
          auto const rs = all_matrices(q, nx, ny);
          auto const ss = all_matrices(q, ny, nz);
          auto const ts = all_matrices(q, nx, nz);
          auto const leq_s = leq_table(ss);
          auto const leq_t = leq_table(ts);
          for (const auto& r : rs) {
            std::vector<std::size_t> sr(ss.size());
            for (std::size_t s = 0; s < ss.size(); ++s) {
              sr[s] = encode(compose(ss[s], r));
            }
            for (std::size_t t = 0; t < ts.size(); ++t) {
              std::size_t const ext = encode(extension(ts[t], r));
              for (std::size_t s = 0; s < ss.size(); ++s) {
                if (leq_t[sr[s] * ts.size() + t] != leq_s[s * ss.size() + ext]) {
                  return q->label() + ": extension adjunction fails at r = " + text(r)
                         + ", s = " + text(ss[s]) + ", t = " + text(ts[t]);
                }
              }
            }
          }
          // s : X -|-> Y, r : Y -|-> Z, t : X -|-> Z; r o s <= t iff s <= r \ t.
          auto const ls = all_matrices(q, nx, ny);
          auto const lr = all_matrices(q, ny, nz);
          auto const leq_ls = leq_table(ls);
          for (const auto& r : lr) {
            std::vector<std::size_t> rs2(ls.size());
            for (std::size_t s = 0; s < ls.size(); ++s) {
              rs2[s] = encode(compose(r, ls[s]));
            }
            for (std::size_t t = 0; t < ts.size(); ++t) {
              std::size_t const lift = encode(lifting(r, ts[t]));
              for (std::size_t s = 0; s < ls.size(); ++s) {
                if (leq_t[rs2[s] * ts.size() + t] != leq_ls[s * ls.size() + lift]) {
                  return q->label() + ": lifting adjunction fails at r = " + text(r)
                         + ", s = " + text(ls[s]) + ", t = " + text(ts[t]);
                }
              }
            }
          }
        }
      }
    }
  }
  return {};
}

Failure kleisli_laws() {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    std::string const tn = th->name();
    // Every T-matrix X -|-> Y for |X|, |Y| <= 3, by code.
    std::array<std::array<std::vector<TMatrix>, 4>, 4> ms;
    for (std::size_t x = 0; x <= 3; ++x) {
      for (std::size_t y = 0; y <= 3; ++y) {
        for (const auto& m : all_matrices(q, x, th->t(y))) {
          ms[x][y].push_back(TMatrix{x, y, m});
        }
      }
    }
    for (std::size_t x = 0; x <= 3; ++x) {
      for (std::size_t y = 0; y <= 3; ++y) {
        TMatrix const ex = kleisli_unit(*th, x);
        TMatrix const ey = kleisli_unit(*th, y);
        for (const auto& a : ms[x][y]) {
          if (!(kleisli_compose(*th, ey, a) == a)) {
            return tn + ": e o alpha != alpha at " + text(a.m);
          }
          if (!a.m.leq(kleisli_compose(*th, a, ex).m)) {
            return tn + ": alpha o e < alpha at " + text(a.m);
          }
        }
      }
    }
    // comp[x][y][z][b * |X->Y| + a] = code of beta o alpha.
    std::size_t const n = 4;
    std::vector<std::vector<std::uint16_t>> comp(n * n * n);
    auto slot = [&](std::size_t x, std::size_t y, std::size_t z) { return (x * n + y) * n + z; };
    for (std::size_t x = 0; x <= 3; ++x) {
      for (std::size_t y = 0; y <= 3; ++y) {
        for (std::size_t z = 0; z <= 3; ++z) {
          auto& t = comp[slot(x, y, z)];
          const auto& as = ms[x][y];
          const auto& bs = ms[y][z];
          t.resize(as.size() * bs.size());
          for (std::size_t b = 0; b < bs.size(); ++b) {
            for (std::size_t a = 0; a < as.size(); ++a) {
              t[b * as.size() + a] =
                  static_cast<std::uint16_t>(encode(kleisli_compose(*th, bs[b], as[a]).m));
            }
          }
        }
      }
    }
    for (std::size_t x = 0; x <= 3; ++x) {
      for (std::size_t y = 0; y <= 3; ++y) {
        for (std::size_t z = 0; z <= 3; ++z) {
          for (std::size_t w = 0; w <= 3; ++w) {
            const auto& ba = comp[slot(x, y, z)];
            const auto& cb = comp[slot(y, z, w)];
            const auto& c_ba = comp[slot(x, z, w)];
            const auto& cb_a = comp[slot(x, y, w)];
            std::size_t const na = ms[x][y].size();
            std::size_t const nb = ms[y][z].size();
            std::size_t const nc = ms[z][w].size();
            std::size_t const nxz = ms[x][z].size();
            for (std::size_t c = 0; c < nc; ++c) {
              for (std::size_t b = 0; b < nb; ++b) {
                std::size_t const cbv = cb[c * nb + b];
                for (std::size_t a = 0; a < na; ++a) {
                  std::size_t const lhs = c_ba[c * nxz + ba[b * na + a]];
                  std::size_t const rhs = cb_a[cbv * na + a];
                  if (lhs != rhs) {
                    return tn + ": associativity fails at alpha = " + text(ms[x][y][a].m)
                           + ", beta = " + text(ms[y][z][b].m) + ", gamma = "
                           + text(ms[z][w][c].m);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return {};
}

bool monotone(const oracle::Preorder& x, const oracle::Preorder& y, const FinMap& f) {
  for (std::size_t a = 0; a < x.n; ++a) {
    for (std::size_t b = 0; b < x.n; ++b) {
      if (x(a, b) && !y(f(a), f(b))) {
        return false;
      }
    }
  }
  return true;
}

Failure adjoint_graphs() {
  auto th = identity_theory(make_two());
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (const auto& px : oracle::all_preorders(n)) {
        TCategory const x = oracle::as_tcategory(th, px);
        for (const auto& py : oracle::all_preorders(m)) {
          TCategory const y = oracle::as_tcategory(th, py);
          Failure out;
          for_each_tuple(n, m, [&](const std::vector<std::size_t>& t) {
            FinMap const f{m, t};
            if (!out.empty() || !monotone(px, py, f)) {
              return;
            }
            Verdict const v = graphs_of_functor(x, y, f).adjunction;
            if (!v.holds()) {
              out = "f = " + to_string(f) + ": " + v.witness;
            }
          });
          if (!out.empty()) {
            return out;
          }
        }
      }
    }
  }
  return {};
}

Failure char_tmod_agreement() {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (std::size_t m = 0; m <= 2; ++m) {
        for (const auto& x : enumerate_tcategories(th, n)) {
          for (const auto& y : enumerate_tcategories(th, m)) {
            for (const auto& psi : all_matrices(q, n, th->t(m))) {
              CharTModReport const r = char_tmod(x, y, TMatrix{n, m, psi});
              if (!r.agree()) {
                return th->name() + ": psi = " + text(psi) + " on X = " + text(x.structure())
                       + ", Y = " + text(y.structure());
              }
            }
          }
        }
      }
    }
  }
  return {};
}

Failure compactness() {
  for (const auto& q : {make_two(), make_goedel_chain(3)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (const auto& x : enumerate_tcategories(th, n)) {
          if (is_compact(x).holds() != sup_is_graph_morphism(x).holds()) {
            return q->label() + " " + th->name() + ": disagreement at " + text(x.structure());
          }
        }
      }
    }
  }
  return {};
}

Failure reconstruction() {
  for (const auto& q : {make_two(), make_goedel_chain(3)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& x : enumerate_tcategories(th, n)) {
          for (const auto& phi : t_functors_to_v(x)) {
            if (reconstruct(x, phi) != phi) {
              return q->label() + " " + th->name() + ": fails on " + text(x.structure());
            }
          }
        }
      }
    }
  }
  return {};
}

Failure frm_morph() {
  std::size_t homs = 0;
  for (const auto& q : {make_two(), make_goedel_chain(3)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& x : enumerate_tcategories(th, n)) {
          OmegaSpace const s = analyse(x);
          auto const vf = enumerate_v_functors(s.frame.cat(), s.v.cat(), 2000000);
          if (!vf) {
            return q->label() + ": V-functor search cut off on " + text(x.structure());
          }
          for (const auto& m : *vf) {
            FrameMap phi;
            for (std::size_t i : m) {
              phi.push_back(Elem(i));
            }
            FrmHomReport const r = is_frm_hom(s, phi);
            homs += r.representable.holds() ? 1 : 0;
            if (!r.agree()) {
              return q->label() + " " + th->name() + ": conditions disagree on "
                     + text(x.structure());
            }
          }
        }
      }
    }
  }
  return homs > 0 ? Failure{} : Failure{"no candidate was a homomorphism"};
}

Failure main_theorem() {
  auto th = identity_theory(make_two());
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& p : oracle::all_preorders(n)) {
      TCategory const x = oracle::as_tcategory(th, p);
      OmegaSpace const s = analyse(x);
      MainThmReport const m = main_thm(s, pt(s));
      std::string const at = " at " + text(x.structure());
      std::size_t const tilde = cauchy_completion(x).completion.size();
      if (m.points != tilde || tilde != oracle::adjoint_pairs(x.structure()).size()) {
        return "|pt| = " + std::to_string(m.points) + ", |X~| = " + std::to_string(tilde) + at;
      }
      if (!m.bijection.holds() || !m.order_iso.holds()) {
        return "bijection" + at;
      }
      if (!m.triangle.holds()) {
        return "triangle" + at;
      }
      if (m.eta.surjective != is_cauchy_complete(x) || !m.surjective_iff_cauchy.holds()) {
        return "surjectivity" + at;
      }
      if ((m.eta.injective && m.eta.surjective) != oracle::antisymmetric(p)) {
        return "bijectivity" + at;
      }
    }
  }
  return {};
}

Failure classical() {
  auto q = make_two();
  auto th = identity_theory(q);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& p : oracle::all_preorders(n)) {
      TCategory const x = oracle::as_tcategory(th, p);
      OmegaSpace const s = analyse(x);
      const TFrame& o = s.frame;
      std::string const at = " at " + text(x.structure());
      // Co-frame: a v /\S = /\ (a v s) for every subset S.
      std::size_t const k = o.size();
      for (std::size_t a = 0; a < k; ++a) {
        for (std::uint32_t set = 0; set < (1u << k); ++set) {
          std::size_t meet = *o.top();
          std::size_t joined = *o.top();
          for (std::size_t i = 0; i < k; ++i) {
            if (set >> i & 1u) {
              meet = *o.meet(meet, i);
              joined = *o.meet(joined, *o.join(a, i));
            }
          }
          if (!o.cat().is_iso(*o.join(a, meet), joined)) {
            return "co-frame law" + at;
          }
        }
      }
      if (!is_completely_distributive(o.cat())) {
        return "not completely distributive" + at;
      }
      if (!is_totally_algebraic(o.cat())) {
        return "not totally algebraic" + at;
      }
      Points const pts = pt(s);
      if (!find_isomorphism(pts.space, oracle::as_tcategory(th, oracle::reflection(p)))) {
        return "pt is not the poset reflection" + at;
      }
    }
  }
  return {};
}

Failure metric_chain() {
  auto q = make_lawvere_chain(4);
  for (const auto& th : theories(q)) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& x : enumerate_tcategories(th, n)) {
        std::string const at = " at " + text(x.structure());
        if (!is_cauchy_complete(x)) {
          return "not Cauchy complete" + at;
        }
        auto const fns = t_functors_to_v(x);
        auto bracket = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
          Elem r = q->top();
          for (std::size_t i = 0; i < a.size(); ++i) {
            r = q->meet(r, q->hom(a[i], b[i]));
          }
          return r;
        };
        for (const auto& pair : left_adjoint_distributors(x)) {
          const auto& phi = pair.right;
          for (const auto& other : fns) {
            Elem const base = bracket(phi, other);
            for (Elem v : q->elements()) {
              std::vector<Elem> scaled(other.size());
              for (std::size_t i = 0; i < other.size(); ++i) {
                scaled[i] = q->tensor(v, other[i]);
              }
              if (bracket(phi, scaled) != q->tensor(v, base)) {
                return "[phi, v (x) phi'] != v (x) [phi, phi'] with v = " + q->name(v) + at;
              }
            }
          }
        }
      }
    }
  }
  return {};
}

Failure ultrafilter_case() {
  if (!check_frm_hypotheses(*make_two()).all()) {
    return "hypotheses fail for two";
  }
  if (!check_frm_hypotheses(*make_lawvere_chain(4)).all()) {
    return "hypotheses fail for lawvere-chain(4)";
  }
  if (check_frm_hypotheses(*make_product(*make_two(), *make_two())).all()) {
    return "hypotheses hold for product(two, two)";
  }
  auto q = make_two();
  auto th = finite_ultrafilter_theory(q);
  std::size_t premised = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& x : enumerate_tcategories(th, n)) {
      OmegaSpace const s = analyse(x);
      Failure out;
      for_each_tuple(s.frame.size(), q->size(), [&](const std::vector<std::size_t>& t) {
        if (!out.empty()) {
          return;
        }
        FrameMap phi;
        for (std::size_t i : t) {
          phi.push_back(Elem(i));
        }
        FiniteSupReport const r = finite_sup_equivalence(s, phi);
        if (!r.applicable) {
          out = "inapplicable: " + r.reason;
        } else if (r.premises.holds()) {
          ++premised;
          if (!r.agree()) {
            out = "T-suprema and finite suprema disagree at " + text(x.structure());
          }
        }
      });
      if (!out.empty()) {
        return out;
      }
    }
  }
  return premised > 0 ? Failure{} : Failure{"no candidate met the premises"};
}

std::string capture(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    out.append(buf.data(), got);
  }
  status = pclose(pipe.release());
  return out;
}

Failure determinism() {
  std::string const cmd = std::string(STONET_CLI) + " sweep --max-objects 3";
  int s1 = 0;
  int s2 = 0;
  std::string const a = capture(cmd, s1);
  std::string const b = capture(cmd, s2);
  if (s1 != 0 || s2 != 0) {
    return "sweep exited with status " + std::to_string(s1) + " and " + std::to_string(s2);
  }
  if (a.empty()) {
    return "sweep printed nothing";
  }
  return a == b ? Failure{} : Failure{"reports differ"};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> const all{
      {1, "quantale and matrix residuation", 10, residuation},
      {2, "Kleisli unit and associativity laws", 30, kleisli_laws},
      {3, "adjoint graphs of monotone maps", 60, adjoint_graphs},
      {4, "distributors as T-functors", 60, char_tmod_agreement},
      {5, "compactness predicates", 60, compactness},
      {6, "reconstruction identity", 120, reconstruction},
      {7, "frame homomorphism conditions", 300, frm_morph},
      {8, "points, triangle and eta over preorders", 300, main_theorem},
      {9, "classical specialization", 300, classical},
      {10, "metric-chain specialization", 300, metric_chain},
      {11, "finite suprema under ultrafilters", 120, ultrafilter_case},
      {12, "sweep reports are byte-identical", 120, determinism},
  };
  int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) {
      continue;
    }
    auto const start = std::chrono::steady_clock::now();
    Failure out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = std::string("exception: ") + e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.empty() && secs > c.limit_s) {
      out = "over the time limit";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (out.empty() ? "PASS" : "FAIL") << " (" << secs
         << " s, limit " << c.limit_s << " s) " << c.title;
    if (!out.empty()) {
      line << ": " << out;
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

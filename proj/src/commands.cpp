#include "stonet/commands.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <tuple>

namespace stonet {

Json Flags::to_json() const {
  Json j;
  j["max-objects"] = max_objects;
  j["max-index"] = max_index;
  j["theory"] = theory;
  j["quantale"] = quantale;
  j["oracle"] = oracle;
  j["seed"] = seed;
  if (target) {
    j["target"] = *target;
  }
  return j;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "validate", "check", "dual", "tensor", "compact", "omega", "points",
      "eta", "cauchy", "main-thm", "frm-check", "sweep"};
  return names;
}

QuantalePtr builtin_quantale(std::string_view spec) {
  std::string base(spec);
  std::size_t n = 0;
  auto parse_n = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw UsageError("bad quantale size in '" + std::string(spec) + "'");
    }
    n = std::stoul(std::string(digits));
  };
  if (auto open = base.find('('); open != std::string::npos) {
    if (base.back() != ')') {
      throw UsageError("malformed quantale '" + std::string(spec) + "'");
    }
    parse_n(std::string_view(base).substr(open + 1, base.size() - open - 2));
    base = base.substr(0, open);
  } else if (auto space = base.find(' '); space != std::string::npos) {
    parse_n(std::string_view(base).substr(space + 1));
    base = base.substr(0, space);
  }
  if (base != "two" && base != "goedel-chain" && base != "lawvere-chain") {
    throw UsageError("unknown quantale '" + std::string(spec) + "'");
  }
  try {
    return make_builtin(base, n);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

namespace {

  std::string where(const Provenance& p) { return p.file + ":" + std::to_string(p.line); }

  bool selected(const Flags& f, const std::string& name) { return !f.target || *f.target == name; }

  std::string fn_text(const Quantale& q, std::span<const Elem> fn) {
    std::string s = "[";
    for (std::size_t i = 0; i < fn.size(); ++i) {
      s += (i ? " " : "") + q.name(fn[i]);
    }
    return s + "]";
  }

  template <typename Fn>
  void each_tcategory(const Workspace& ws, const Flags& flags, Fn&& fn) {
    for (const auto& x : ws.tcategories) {
      if (selected(flags, x.name)) {
        fn(x.name, x.value);
      }
    }
  }

  void rejections(const Workspace& ws, Report& r) {
    for (const auto& rej : ws.rejected) {
      r.add(rej.entity, rej.law, Verdict::fail(where(rej.where) + ": " + rej.witness));
    }
  }

  bool classical(const TCategory& x) {
    return x.theory().monad().name() == "identity" && x.quantale().size() == 2
           && x.quantale().label() == "two";
  }

  /// a v (b ^ c) = (a v b) ^ (a v c) on the frame tables.
  Verdict coframe_law(const TFrame& f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < f.size(); ++b) {
        for (std::size_t c = 0; c < f.size(); ++c) {
          auto bc = f.meet(b, c);
          auto ab = f.join(a, b);
          auto ac = f.join(a, c);
          if (!bc || !ab || !ac) {
            return Verdict::fail("missing binary meet or join");
          }
          auto lhs = f.join(a, *bc);
          auto rhs = f.meet(*ab, *ac);
          if (!lhs || !rhs || !f.cat().is_iso(*lhs, *rhs)) {
            return Verdict::fail("a = " + f.name(a) + ", b = " + f.name(b) + ", c = " + f.name(c));
          }
        }
      }
    }
    return Verdict::pass();
  }

  void validate_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    rejections(ws, r);
    for (const auto& q : ws.quantales) {
      if (!selected(flags, q.name)) {
        continue;
      }
      FrmHypotheses const h = check_frm_hypotheses(*q.value);
      r.add(q.name, "quantale-laws", Verdict::pass(),
            Json{{"size", q.value->size()},
                 {"top-is-unit", h.top_is_unit},
                 {"below-unit-directed", h.below_unit_directed},
                 {"unit-join-prime", h.unit_join_prime}});
    }
    std::array<std::size_t, 4> const sizes{0, 1, 2, 3};
    for (const auto& t : ws.theories) {
      if (!selected(flags, t.name)) {
        continue;
      }
      for (const auto& c : validate_theory(*t.value, sizes).checks) {
        r.add(t.name, c.law, c.holds, c.witness);
      }
    }
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      r.add(name, "t-category", Verdict::pass(),
            Json{{"size", x.size()}, {"separated", is_separated(x)}});
      r.add(name, "dual-t-category", is_tcategory(x.theory(), dual(x).structure()));
    });
    for (const auto& f : ws.tfunctors) {
      if (!selected(flags, f.name)) {
        continue;
      }
      const TCategory& x = *ws.tcategory(f.value.source);
      const TCategory& y = *ws.tcategory(f.value.target);
      r.add(f.name, "t-functor", Verdict::pass());
      r.add(f.name, "adjoint-graphs", graphs_of_functor(x, y, f.value.map).adjunction);
    }
    for (const auto& fr : ws.frames) {
      if (!selected(flags, fr.name)) {
        continue;
      }
      TFrame const f = omega(*ws.tcategory(fr.value.of), fr.value.max_index);
      r.add(fr.name, "complete", f.complete(), Json{{"size", f.size()}});
      CocompletenessReport const c = is_t_cocomplete(f, fr.value.max_index);
      r.add(fr.name, "t-cocomplete", c.tensors_t_suprema);
      r.add(fr.name, "t-cocompleteness-agreement", c.agree(),
            "colimits: " + std::string(to_string(c.t_colimits.outcome))
                + ", generated suprema: " + std::string(to_string(c.generated_suprema.outcome)));
      r.add(fr.name, "distributivity", check_distributivity(f, fr.value.max_index));
    }
  }

  void dual_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      TCategory const d = dual(x);
      r.add(name, "dual-t-category", is_tcategory(x.theory(), d.structure()),
            Json{{"size", d.size()}});
      r.add(name, "m-functor-v-category", check_vcategory(m_functor(x).matrix()));
    });
  }

  void tensor_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    for (const auto& x : ws.tcategories) {
      for (const auto& y : ws.tcategories) {
        if (x.value.theory_ptr() != y.value.theory_ptr()
            || !(selected(flags, x.name) || selected(flags, y.name))) {
          continue;
        }
        TCategory const t = tensor_product(x.value, y.value);
        r.add(x.name + "*" + y.name, "tensor-t-category", is_tcategory(t.theory(), t.structure()),
              Json{{"size", t.size()}});
      }
    }
  }

  void compact_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      Verdict const c = is_compact(x);
      Verdict const s = sup_is_graph_morphism(x);
      r.add(name, "compact-agreement", c.holds() == s.holds(),
            "compact: " + std::string(to_string(c.outcome)) + ", sup graph morphism: "
                + std::string(to_string(s.outcome)),
            Json{{"compact", c.holds()}});
    });
  }

  void omega_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      TFrame const f = omega(x, flags.max_index);
      Json fns = Json::array();
      for (const auto& fn : f.functions()) {
        fns.push_back(fn_text(x.quantale(), fn));
      }
      r.add(name, "omega-complete", f.complete(), Json{{"size", f.size()}, {"functions", fns}});
      CocompletenessReport const c = is_t_cocomplete(f, flags.max_index);
      r.add(name, "omega-t-cocomplete", c.tensors_t_suprema);
      r.add(name, "omega-t-cocompleteness-agreement", c.agree(),
            "colimits: " + std::string(to_string(c.t_colimits.outcome)));
      r.add(name, "omega-distributivity", check_distributivity(f, flags.max_index));
      Verdict reconstruct_ok;
      for (const auto& fn : f.functions()) {
        if (reconstruct(x, fn) != fn) {
          reconstruct_ok = Verdict::fail("at " + fn_text(x.quantale(), fn));
          break;
        }
      }
      r.add(name, "reconstruction", reconstruct_ok);
      if (classical(x)) {
        r.add(name, "omega-coframe", coframe_law(f));
        r.add(name, "omega-completely-distributive", is_completely_distributive(f.cat()), "");
        r.add(name, "omega-totally-algebraic", is_totally_algebraic(f.cat()), "");
      }
    });
  }

  Json points_json(const Quantale& q, const Points& p) {
    Json pts = Json::array();
    for (const auto& h : p.homs) {
      pts.push_back(fn_text(q, h));
    }
    return pts;
  }

  void points_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      OmegaSpace const s = analyse(x, flags.max_index);
      Points const p = pt(s);
      r.add(name, "points", p.search,
            Json{{"count", p.homs.size()}, {"points", points_json(x.quantale(), p)}});
      if (flags.oracle) {
        Points const o = pt_by_backtracking(s.frame, flags.cap);
        if (o.search.holds()) {
          r.add(name, "points-oracle", o.homs == p.homs, "backtracking finds "
                + std::to_string(o.homs.size()) + " points");
        } else {
          r.add(name, "points-oracle", o.search);
        }
      }
    });
  }

  Json eta_json(const Eta& e) {
    return Json{{"injective", e.injective},
                {"surjective", e.surjective},
                {"fully-faithful-v", e.fully_faithful_v},
                {"fully-faithful", e.fully_faithful}};
  }

  void eta_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      OmegaSpace const s = analyse(x, flags.max_index);
      Eta const e = eta(s, pt(s));
      r.add(name, "eta-t-functor", e.functor, eta_json(e));
    });
  }

  void cauchy_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      CauchyCompletion const c = cauchy_completion(x);
      const Quantale& q = x.quantale();
      Json pairs = Json::array();
      for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        pairs.push_back(Json{{"name", c.completion.name(i)},
                             {"left", fn_text(q, c.pairs[i].left)},
                             {"right", fn_text(q, c.pairs[i].right)}});
      }
      std::vector<std::size_t> img = c.yoneda.images;
      std::sort(img.begin(), img.end());
      bool const inj = std::adjacent_find(img.begin(), img.end()) == img.end();
      img.erase(std::unique(img.begin(), img.end()), img.end());
      bool const surj = img.size() == c.pairs.size();
      r.add(name, "completion-t-category", is_tcategory(x.theory(), c.completion.structure()),
            Json{{"size", c.pairs.size()},
                 {"pairs", pairs},
                 {"yoneda-injective", inj},
                 {"yoneda-surjective", surj},
                 {"cauchy-complete", is_cauchy_complete(x)}});
      if (flags.oracle) {
        auto slow = adjoint_pairs_by_enumeration(x);
        auto fast = c.pairs;
        auto by_left = [](const AdjointPair& a, const AdjointPair& b) {
          return std::tie(a.left, a.right) < std::tie(b.left, b.right);
        };
        std::sort(slow.begin(), slow.end(), by_left);
        std::sort(fast.begin(), fast.end(), by_left);
        r.add(name, "adjoint-pairs-oracle", slow == fast,
              "enumeration finds " + std::to_string(slow.size()) + " pairs");
      }
    });
  }

  void main_thm_entries(Report& r, const std::string& name, const MainThmReport& m) {
    Json const data{{"completion-size", m.completion_size},
                    {"points", m.points},
                    {"cauchy-complete", m.cauchy_complete},
                    {"separated", m.separated},
                    {"eta", eta_json(m.eta)}};
    r.add(name, "pt-bijection", m.bijection, data);
    r.add(name, "pt-order-iso", m.order_iso);
    r.add(name, "triangle", m.triangle);
    r.add(name, "eta-surjective-iff-cauchy-complete", m.surjective_iff_cauchy);
    r.add(name, "eta-bijective-iff-separated-cauchy-complete", m.bijective_iff_separated);
  }

  void main_thm_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    std::map<std::string, std::pair<OmegaSpace, Points>> cache;
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      OmegaSpace s = analyse(x, flags.max_index);
      Points p = pt(s);
      main_thm_entries(r, name, main_thm(s, p));
      cache.emplace(name, std::make_pair(std::move(s), std::move(p)));
    });
    for (const auto& f : ws.tfunctors) {
      auto sx = cache.find(f.value.source);
      auto sy = cache.find(f.value.target);
      if (sx == cache.end() || sy == cache.end()) {
        continue;
      }
      r.add(f.name, "eta-naturality",
            check_naturality(sx->second.first, sx->second.second, sy->second.first,
                             sy->second.second, f.value.map));
    }
  }

  void frm_check_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    each_tcategory(ws, flags, [&](const std::string& name, const TCategory& x) {
      OmegaSpace const s = analyse(x, flags.max_index);
      std::vector<FrameMap> cands;
      std::string source = "generator extensions";
      if (flags.oracle) {
        auto vf = enumerate_v_functors(s.frame.cat(), s.v.cat(), flags.cap);
        if (!vf) {
          r.add(name, "frm-agreement",
                Verdict::unknown("more than " + std::to_string(flags.cap) + " V-functors"));
          return;
        }
        source = "V-functors";
        for (const auto& m : *vf) {
          FrameMap h(m.size());
          std::transform(m.begin(), m.end(), h.begin(), [](std::size_t i) { return Elem(i); });
          cands.push_back(std::move(h));
        }
      } else {
        cands = generator_extensions(s);
      }
      Verdict agree;
      Verdict finite;
      bool applicable = false;
      std::size_t homs = 0;
      for (const auto& c : cands) {
        FrmHomReport const h = is_frm_hom(s, c);
        homs += h.representable.holds() ? 1 : 0;
        if (agree && !h.agree()) {
          agree = Verdict::fail(fn_text(x.quantale(), c) + ": (i) "
                                + std::string(to_string(h.representable.outcome)) + ", (ii) "
                                + std::string(to_string(h.condition_ii.outcome)) + ", (iii) "
                                + std::string(to_string(h.condition_iii.outcome)));
        }
        FiniteSupReport const fs = finite_sup_equivalence(s, c);
        applicable = fs.applicable;
        if (fs.applicable && fs.premises.holds() && finite && !fs.agree()) {
          finite = Verdict::fail(fn_text(x.quantale(), c));
        }
      }
      r.add(name, "frm-agreement", agree,
            Json{{"candidates", cands.size()}, {"source", source}, {"frame-homs", homs}});
      if (applicable) {
        r.add(name, "finite-sup-agreement", finite);
      }
    });
  }

  TheoryPtr sweep_theory(const Workspace& ws, const Flags& flags) {
    QuantalePtr q;
    if (auto const* named = ws.quantale(flags.quantale)) {
      q = *named;
    } else {
      q = builtin_quantale(flags.quantale);
    }
    if (flags.theory == "identity") {
      return identity_theory(q);
    }
    if (flags.theory == "finite-ultrafilter") {
      return finite_ultrafilter_theory(q);
    }
    throw UsageError("unknown theory '" + flags.theory + "'");
  }

  void sweep_cmd(const Workspace& ws, const Flags& flags, Report& r) {
    TheoryPtr const th = sweep_theory(ws, flags);
    const Quantale& q = th->quantale();
    Json sizes = Json::array();
    std::size_t total = 0;
    std::size_t fully_faithful = 0;
    for (std::size_t n = 0; n <= flags.max_objects; ++n) {
      auto const reps = up_to_isomorphism(enumerate_tcategories(th, n));
      sizes.push_back(Json{{"objects", n}, {"classes", reps.size()}});
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const TCategory& x = reps[i];
        std::string const name = "X" + std::to_string(n) + "." + std::to_string(i);
        OmegaSpace const s = analyse(x, flags.max_index);
        Points const p = pt(s);
        MainThmReport const m = main_thm(s, p);
        main_thm_entries(r, name, m);
        Verdict const c = is_compact(x);
        Verdict const g = sup_is_graph_morphism(x);
        r.add(name, "compact-agreement", c.holds() == g.holds(), "predicates disagree");
        Verdict rec;
        for (const auto& fn : s.frame.functions()) {
          if (reconstruct(x, fn) != fn) {
            rec = Verdict::fail("at " + fn_text(q, fn));
            break;
          }
        }
        r.add(name, "reconstruction", rec);
        if (flags.oracle) {
          r.add(name, "cauchy-oracle",
                adjoint_pairs_by_enumeration(x).size() == s.pairs.size(),
                "enumeration disagrees on the number of adjoint pairs");
        }
        ++total;
        fully_faithful += m.eta.fully_faithful ? 1 : 0;
      }
    }
    r.add("sweep", "summary", Verdict::pass(),
          Json{{"quantale", q.label()},
               {"theory", th->name()},
               {"sizes", sizes},
               {"instances", total},
               {"eta-fully-faithful", fully_faithful}});
  }

}  // namespace

Report run(const Workspace& ws, std::string_view command, const Flags& flags) {
  using Handler = void (*)(const Workspace&, const Flags&, Report&);
  static const std::map<std::string, Handler, std::less<>> handlers{
      {"validate", validate_cmd}, {"check", validate_cmd},   {"dual", dual_cmd},
      {"tensor", tensor_cmd},     {"compact", compact_cmd},  {"omega", omega_cmd},
      {"points", points_cmd},     {"eta", eta_cmd},          {"cauchy", cauchy_cmd},
      {"main-thm", main_thm_cmd}, {"frm-check", frm_check_cmd}, {"sweep", sweep_cmd}};
  auto it = handlers.find(command);
  if (it == handlers.end()) {
    throw UsageError("unknown command '" + std::string(command) + "'");
  }
  if (flags.target && !ws.defines(*flags.target)) {
    throw UsageError("no entity named '" + *flags.target + "'");
  }
  Report r(std::string(command), flags.to_json());
  it->second(ws, flags, r);
  return r;
}

}  // namespace stonet

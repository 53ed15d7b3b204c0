#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonet/cauchy.hpp"
#include "stonet/tcat.hpp"
#include "stonet/vcat.hpp"

namespace stonet {

/// A T-diagram D : (I, alpha°) -> A; `sup` caches its supremum when it exists.
struct TDiagram {
  FinMap alpha;
  std::vector<std::size_t> d;
  std::optional<std::size_t> sup;
};

/// A T-frame candidate: a V-category with a T-graph structure on the same
/// objects, plus cached limit and colimit tables.
class TFrame {
 public:
  /// `functions` records the carrier when the frame is Omega(X) or V itself.
  /// `max_index` bounds |I| for every T-diagram the frame caches.
  TFrame(TheoryPtr th,
         VCategory cat,
         VMatrix graph,
         std::vector<std::vector<Elem>> functions,
         std::string provenance,
         std::size_t max_index = 2);

  const Theory& theory() const noexcept { return *th_; }
  const TheoryPtr& theory_ptr() const noexcept { return th_; }
  const Quantale& quantale() const noexcept { return th_->quantale(); }
  std::size_t size() const noexcept { return cat_.size(); }
  const VCategory& cat() const noexcept { return cat_; }
  const VMatrix& graph() const noexcept { return graph_; }
  const std::vector<std::vector<Elem>>& functions() const noexcept { return functions_; }
  const std::string& provenance() const noexcept { return provenance_; }
  std::size_t max_index() const noexcept { return max_index_; }
  const Verdict& complete() const noexcept { return complete_; }
  std::string name(std::size_t i) const;

  /// Index of a function in `functions`, which is kept sorted.
  std::optional<std::size_t> find(std::span<const Elem> fn) const;

  /// Representatives of limits and colimits; nullopt when absent.
  std::optional<std::size_t> top() const { return top_; }
  std::optional<std::size_t> bottom() const { return bottom_; }
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::optional<std::size_t> tensor(Elem v, std::size_t a) const { return tensor_[v.index() * size() + a]; }
  std::optional<std::size_t> cotensor(Elem v, std::size_t a) const { return cotensor_[v.index() * size() + a]; }

  const std::vector<TDiagram>& diagrams() const noexcept { return diagrams_; }

 private:
  TheoryPtr th_;
  VCategory cat_;
  VMatrix graph_;
  std::vector<std::vector<Elem>> functions_;
  std::string provenance_;
  std::size_t max_index_;
  Verdict complete_;
  std::optional<std::size_t> top_, bottom_;
  std::vector<std::optional<std::size_t>> meet_, join_, tensor_, cotensor_;
  std::vector<TDiagram> diagrams_;
};

/// k <= graph(TD(fi), D(alpha(fi))) for all fi in TI.
bool is_t_diagram(const TFrame& a, const FinMap& alpha, std::span<const std::size_t> d);
/// All T-diagrams with |I| <= max_index.
std::vector<TDiagram> enumerate_t_diagrams(const TFrame& a, std::size_t max_index);
IsoClass t_supremum(const TFrame& a, std::span<const std::size_t> d);

/// Omega(X): the T-functors X -> V with [phi, phi'] and the exponential
/// T-graph structure.
TFrame omega(const TCategory& x, std::size_t max_index = 2);
/// V itself, with hom and hom_xi.
TFrame v_frame(const TheoryPtr& th, std::size_t max_index = 2);

/// (I, alpha, r), a V-functor h : I -> A and a contravariant weight psi on
/// (I, r) such that i |-> psi(i) (x) h(i) is a T-graph morphism from
/// (I, a_I), a_I(fi, i) = r(alpha(fi), i).
struct TWeightedDiagram {
  FinMap alpha;
  VMatrix r;
  std::vector<std::size_t> h;
  std::vector<Elem> psi;
};

bool is_t_weighted_diagram(const TFrame& a, const TWeightedDiagram& w);
std::vector<TWeightedDiagram> enumerate_t_weighted_diagrams(const TFrame& a,
                                                           std::size_t max_index);
IsoClass t_colimit(const TFrame& a, const TWeightedDiagram& w);
/// h_* . psi as a contravariant weight on A.
std::vector<Elem> generated_presheaf(const TFrame& a, const TWeightedDiagram& w);

/// holds with a witness diagram, or unknown when no diagram within the bound
/// generates phi.
Verdict is_t_generated(const TFrame& a, std::span<const Elem> phi, std::size_t max_index);

struct CocompletenessReport {
  Verdict t_colimits;          ///< every T-weighted diagram has a colimit
  Verdict tensors_t_suprema;   ///< all tensors and all T-suprema
  Verdict generated_suprema;   ///< every T-generated presheaf has a supremum
  bool agree() const {
    return t_colimits.holds() == tensors_t_suprema.holds()
           && t_colimits.holds() == generated_suprema.holds();
  }
};

CocompletenessReport is_t_cocomplete(const TFrame& a, std::size_t max_index);

/// The distributivity law of T-frames for |I| <= max_index.
Verdict check_distributivity(const TFrame& a, std::size_t max_index);

/// What a map between frames preserves.
struct PreservationReport {
  Verdict v_functor;
  Verdict t_compatible;
  Verdict infima;
  Verdict tensors;
  Verdict cotensors;
  Verdict t_suprema;
  Verdict finite_suprema;

  /// A T-frame homomorphism.
  bool frame_hom() const {
    return v_functor.holds() && t_compatible.holds() && infima.holds() && tensors.holds()
           && cotensors.holds() && t_suprema.holds();
  }
};

PreservationReport preservation(const TFrame& src, const TFrame& dst, const FinMap& f);

struct FrmHom {
  FinMap map;
  PreservationReport certificates;
};

/// V^f : Omega(Y) -> Omega(X), psi |-> psi . f.
FrmHom omega_map(const TFrame& oy, const TFrame& ox, const FinMap& f);

/// Everything about X that the duality checks reuse.
struct OmegaSpace {
  TCategory x;
  TFrame frame;
  TFrame v;
  std::vector<AdjointPair> pairs;
  /// Index in `frame` of the right part of each pair.
  std::vector<std::size_t> right_index;
  /// hat[j][fx] = xi . T phi_j (fx)
  std::vector<std::vector<Elem>> hat;
  /// generator[fx * |V| + c] = index of a(fx, -) (x) c
  std::vector<std::size_t> generator;

  std::size_t gen(std::size_t fx, Elem c) const {
    return generator[fx * v.size() + c.index()];
  }
};

OmegaSpace analyse(const TCategory& x, std::size_t max_index = 2);

/// Phi : Omega(X) -> V as the images of the frame objects.
using FrameMap = std::vector<Elem>;

struct FrmHomReport {
  PreservationReport preservation;
  Verdict representable;   ///< (i) Phi = [phi, -] with phi a right adjoint
  Verdict star;            ///< Phi(phi) = \/ Phi(a(fx, -) (x) xi.T phi(fx))
  Verdict condition_ii;    ///< infima, tensors, cotensors, T-suprema
  Verdict condition_iii;   ///< infima, tensors, cotensors and (*)

  bool agree() const {
    return representable.holds() == condition_ii.holds()
           && representable.holds() == condition_iii.holds();
  }
};

FrmHomReport is_frm_hom(const OmegaSpace& s, std::span<const Elem> phi);

/// [phi, -] over the frame.
FrameMap represented_by(const OmegaSpace& s, std::size_t phi);

/// All V-functors src -> dst, by backtracking; nullopt once more than `cap`
/// have been found.
std::optional<std::vector<std::vector<std::size_t>>> enumerate_v_functors(const VCategory& src,
                                                                        const VCategory& dst,
                                                                        std::size_t cap);

/// Candidates c : TX -> V extended by Phi(phi) = \/ c(fx) (x) xi.T phi(fx),
/// deduplicated.
std::vector<FrameMap> generator_extensions(const OmegaSpace& s);

struct Points {
  std::vector<FrameMap> homs;
  TCategory space;
  /// unknown if the search was cut off.
  Verdict search;
};

/// pt(Omega(X)) via generator extensions, each verified in full.
Points pt(const OmegaSpace& s);
/// pt of an arbitrary frame by backtracking over all V-functors into V.
Points pt_by_backtracking(const TFrame& f, std::size_t cap);
/// The largest structure on a set of frame maps making every evaluation a
/// T-functor.
TCategory points_structure(const TFrame& f, const std::vector<FrameMap>& homs);

struct Eta {
  FinMap map;
  Verdict functor;
  bool injective = false;
  bool surjective = false;
  /// a(e(x), y) = d(e(eta x), eta y)
  bool fully_faithful_v = false;
  /// a(fx, y) = d(T eta (fx), eta y)
  bool fully_faithful = false;
};

/// x |-> ev_x.  Throws Error if some ev_x is not a point.
Eta eta(const OmegaSpace& s, const Points& p);

/// pt(Omega(f)) . eta_X = eta_Y . f, pointwise.
Verdict check_naturality(const OmegaSpace& sx,
                         const Points& px,
                         const OmegaSpace& sy,
                         const Points& py,
                         const FinMap& f);

struct MainThmReport {
  std::size_t completion_size = 0;
  std::size_t points = 0;
  Verdict bijection;            ///< psi |-> [phi, -] is a bijection onto pt
  Verdict order_iso;            ///< and an order isomorphism
  Verdict triangle;             ///< [x^*, -] = ev_x
  Verdict surjective_iff_cauchy;
  Verdict bijective_iff_separated;  ///< eta bijective iff separated and Cauchy complete
  bool cauchy_complete = false;
  bool separated = false;
  Eta eta;

  bool holds() const {
    return bijection.holds() && order_iso.holds() && triangle.holds()
           && surjective_iff_cauchy.holds() && bijective_iff_separated.holds();
  }
};

MainThmReport main_thm(const OmegaSpace& s);
MainThmReport main_thm(const OmegaSpace& s, const Points& p);

/// \/_fx a(fx, -) (x) xi.T phi(fx)
std::vector<Elem> reconstruct(const TCategory& x, std::span<const Elem> phi);

struct FiniteSupReport {
  bool applicable = false;
  std::string reason;
  Verdict premises;   ///< V-functor preserving infima, tensors, cotensors
  Verdict t_suprema;
  Verdict finite_suprema;
  bool agree() const { return t_suprema.holds() == finite_suprema.holds(); }
};

/// Compares preservation of T-suprema with preservation of finite suprema.
FiniteSupReport finite_sup_equivalence(const OmegaSpace& s, std::span<const Elem> phi);

/// phi_A(x) = \/ { a(fa, x) : A in fa } for the finite ultrafilter theory;
/// `subset` is a bitmask over X.  Throws Error for other theories.
std::vector<Elem> phi_A(const TCategory& x, std::size_t subset);

}  // namespace stonet

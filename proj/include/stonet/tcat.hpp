#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonet/theory.hpp"
#include "stonet/vcat.hpp"
#include "stonet/verdict.hpp"

namespace stonet {

/// e_X <= a, i.e. k <= a(e(x), x).
Verdict is_tgraph(const Theory& th, const VMatrix& a);
/// Reflexive and a o a <= a.
Verdict is_tcategory(const Theory& th, const VMatrix& a);

/// A T-category (X, a) with a : X -|-> TX stored as a matrix whose entry
/// (fx, x) is a(fx, x).
class TCategory {
 public:
  /// Throws ValidationError unless (X, a) is a T-category.
  TCategory(TheoryPtr th, VMatrix a, std::vector<std::string> names = {});

  static TCategory trusted(TheoryPtr th, VMatrix a, std::vector<std::string> names = {});

  const Theory& theory() const noexcept { return *th_; }
  const TheoryPtr& theory_ptr() const noexcept { return th_; }
  const Quantale& quantale() const noexcept { return th_->quantale(); }

  std::size_t size() const noexcept { return a_.source(); }
  /// |TX|
  std::size_t tsize() const noexcept { return a_.target(); }
  const VMatrix& structure() const noexcept { return a_; }
  Elem operator()(std::size_t fx, std::size_t x) const { return a_(fx, x); }
  TMatrix as_tmatrix() const { return TMatrix{size(), size(), a_}; }

  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string tname(std::size_t fx) const;

 private:
  TCategory() = default;

  TheoryPtr th_;
  VMatrix a_;
  std::vector<std::string> names_;
};

/// a(fx, x) <= b(Tf(fx), f(x)) for T-graph structures a and b.
Verdict is_graph_morphism(const Theory& th,
                          const VMatrix& a,
                          const VMatrix& b,
                          const FinMap& f);
Verdict is_tfunctor(const TCategory& x, const TCategory& y, const FinMap& f);

/// phi o a <= phi and b o phi <= phi.
Verdict is_tdistributor(const TCategory& x, const TCategory& y, const TMatrix& phi);

/// phi : X -> V into (V, hom_xi): a(fx, x) <= hom(xi.T phi(fx), phi(x)).
Verdict is_tfunctor_to_v(const Theory& th, const VMatrix& a, std::span<const Elem> phi);
Verdict is_tfunctor_to_v(const TCategory& x, std::span<const Elem> phi);

struct FunctorGraphs {
  TMatrix lower;  ///< f_* = b . f : X -|-> Y
  TMatrix upper;  ///< f^* = Tf° . b : Y -|-> X
  Verdict adjunction;  ///< a <= f^* o f_*  and  f_* o f^* <= b
};

/// Throws Error if f is not a T-functor.
FunctorGraphs graphs_of_functor(const TCategory& x, const TCategory& y, const FinMap& f);

/// f <= g iff f_* <= g_*.
bool functor_leq(const TCategory& x, const TCategory& y, const FinMap& f, const FinMap& g);
/// The same order read off the right adjoints: g^* <= f^*.
bool functor_leq_upper(const TCategory& x,
                       const TCategory& y,
                       const FinMap& f,
                       const FinMap& g);

/// S(X, a) = (X, e° . a)
VCategory underlying_vcat(const TCategory& x);
/// A(X, r) = (X, T_xi r . e_X)
TCategory alexandrov(const TheoryPtr& th, const VCategory& r);
/// M(X, a) = (TX, m_X . T_xi a)
VCategory m_functor(const TCategory& x);
VCategory opposite(const VCategory& a);
/// X^op = A(M(X)^op), carried by TX.
TCategory dual(const TCategory& x);

/// alpha . e = id  and  alpha . T alpha = alpha . m.
bool is_algebra(const Theory& th, const FinMap& alpha);
/// All Eilenberg-Moore structures TI -> I with |I| = n.
std::vector<FinMap> enumerate_algebras(const Theory& th, std::size_t n);
/// D(X, alpha) = (X, alpha°)
TCategory discrete(const TheoryPtr& th, const FinMap& alpha);
/// |X| = D(TX, m_X), carried by TX.
TCategory free_discrete(const TheoryPtr& th, std::size_t n);
/// (X, e_X)
TCategory discrete_tcategory(const TheoryPtr& th, std::size_t n);

/// X (x) Y on X x Y (pairs encoded by pair_index) with
/// c(w, (x, y)) = a(T pi1 w, x) (x) b(T pi2 w, y).
TCategory tensor_product(const TCategory& x, const TCategory& y);
/// E = (1, k)
TCategory unit_E(const TheoryPtr& th);
/// (V, hom_xi)
TCategory v_as_tcategory(const TheoryPtr& th);

/// All T-functors X -> V, lexicographic.
std::vector<std::vector<Elem>> t_functors_to_v(const TCategory& x);

/// The T-graph structure <<p, phi>> on a set of functions X -> V, as a
/// matrix F -|-> TF.
VMatrix exponential_structure(const TCategory& x, const std::vector<std::vector<Elem>>& fns);

struct ExponentialGraph {
  std::vector<std::vector<Elem>> functions;
  VMatrix structure;
};

/// V^X on the T-functors X -> V.
ExponentialGraph exponential_graph(const TCategory& x);

struct CharTModReport {
  Verdict distributor;    ///< (i)
  Verdict discrete_side;  ///< psi : |Y| (x) X -> V
  Verdict dual_side;      ///< psi : Y^op (x) X -> V
  bool functors() const { return discrete_side.holds() && dual_side.holds(); }
  bool agree() const { return distributor.holds() == functors(); }
};

CharTModReport char_tmod(const TCategory& x, const TCategory& y, const TMatrix& psi);

/// k <= \/_x a(fx, x) for every fx in TX.
Verdict is_compact(const TCategory& x);
/// \/ : V^X -> V is a T-graph morphism.
Verdict sup_is_graph_morphism(const TCategory& x);

/// Every T-category on n points, in order of the structure matrix code.
std::vector<TCategory> enumerate_tcategories(const TheoryPtr& th, std::size_t n);
/// One representative per isomorphism class, keeping the first seen.
std::vector<TCategory> up_to_isomorphism(const std::vector<TCategory>& cats);

/// Entries of the smallest relabelling of the structure, comparable across
/// isomorphic T-categories.
std::vector<Elem> canonical_form(const TCategory& x);
/// A bijection f with a(fx, x) = b(Tf(fx), f(x)).
std::optional<FinMap> find_isomorphism(const TCategory& x, const TCategory& y);

/// k <= hom(x, y) and k <= hom(y, x) in S(X) imply x = y.
bool is_separated(const TCategory& x);

}  // namespace stonet

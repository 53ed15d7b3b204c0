#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonet/quantale.hpp"
#include "stonet/verdict.hpp"
#include "stonet/vmat.hpp"

namespace stonet {

/// Reflexivity and transitivity of a square matrix read as hom(x, y) = m(x, y).
Verdict check_vcategory(const VMatrix& m);

/// A V-category on {0..n-1}.  hom(x, y) is the entry (x, y) of the structure
/// matrix, so transitivity reads hom(x, y) (x) hom(y, z) <= hom(x, z).
class VCategory {
 public:
  VCategory() = default;
  /// Throws ValidationError if the structure is not reflexive and transitive.
  explicit VCategory(VMatrix hom, std::vector<std::string> names = {});

  /// Skips validation; for structures already known to satisfy the laws.
  static VCategory trusted(VMatrix hom, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return m_.source(); }
  const Quantale& quantale() const noexcept { return m_.quantale(); }
  const QuantalePtr& quantale_ptr() const noexcept { return m_.quantale_ptr(); }
  const VMatrix& matrix() const noexcept { return m_; }
  Elem hom(std::size_t x, std::size_t y) const { return m_(x, y); }
  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// k <= hom(x, y) and k <= hom(y, x).
  bool is_iso(std::size_t x, std::size_t y) const;
  /// No two distinct objects are isomorphic.
  bool is_skeletal() const;

 private:
  VMatrix m_;
  std::vector<std::string> names_;
};

enum class Variance { covariant, contravariant };

/// Covariant: hom(x, y) (x) w(x) <= w(y).  Contravariant: hom(x, y) (x) w(y) <= w(x).
bool is_closed(const VCategory& a, std::span<const Elem> w, Variance v);

/// hom(x, -) for covariant, hom(-, x) for contravariant.
std::vector<Elem> representable(const VCategory& a, std::size_t x, Variance v);

/// [w, w'] = /\_x hom(w(x), w'(x)).
Elem presheaf_hom(const Quantale& q, std::span<const Elem> w, std::span<const Elem> w2);

/// All closed weights in lexicographic order, by backtracking.
std::vector<std::vector<Elem>> enumerate_presheaves(const VCategory& a, Variance v);

struct PresheafCategory {
  Variance variance = Variance::contravariant;
  std::vector<std::vector<Elem>> weights;
  VCategory cat;

  /// Index of a weight, if it is one of the objects.
  std::optional<std::size_t> find(std::span<const Elem> w) const;
};

PresheafCategory presheaf_cat(const VCategory& a, Variance v);

/// Objects representing a (co)limit: the full isomorphism class, in
/// ascending order; empty when the (co)limit does not exist.
using IsoClass = std::vector<std::size_t>;

/// t with hom(t, y) = hom(v, hom(x, y)) for all y.
IsoClass tensor(const VCategory& a, Elem v, std::size_t x);
/// c with hom(y, c) = hom(v, hom(y, x)) for all y.
IsoClass cotensor(const VCategory& a, Elem v, std::size_t x);
/// s with hom(s, y) = /\_x hom(psi(x), hom(x, y)); psi is a contravariant weight.
IsoClass sup_of_presheaf(const VCategory& a, std::span<const Elem> psi);
/// m with hom(y, m) = /\_x hom(phi(x), hom(y, x)); phi is a covariant weight.
IsoClass inf_of_presheaf(const VCategory& a, std::span<const Elem> phi);

/// Colimit of h : I -> A weighted by psi : I -> V.
IsoClass weighted_colimit(const VCategory& a,
                          std::span<const Elem> psi,
                          std::span<const std::size_t> h);
/// Limit of h : I -> A weighted by phi : I -> V.
IsoClass weighted_limit(const VCategory& a,
                        std::span<const Elem> phi,
                        std::span<const std::size_t> h);

/// Conical supremum and infimum of a family of objects.
IsoClass supremum(const VCategory& a, std::span<const std::size_t> family);
IsoClass infimum(const VCategory& a, std::span<const std::size_t> family);

/// All cotensors and all conical infima (binary and empty, which give all
/// finite ones).
Verdict is_complete(const VCategory& a);

/// The left adjoint t of sup : P(A) -> A, as contravariant weights indexed
/// by the objects of A; empty when sup has no left adjoint.  Throws Error if
/// A is not complete.
std::optional<std::vector<std::vector<Elem>>> sup_left_adjoint(const VCategory& a);

bool is_completely_distributive(const VCategory& a);

/// Completely distributive, and P(A') -> A is an equivalence where A' is the
/// full subcategory on {x : t(x) = hom(-, x)} and the map is left Kan
/// extension followed by sup.  Throws Error if A is not complete.
bool is_totally_algebraic(const VCategory& a);

}  // namespace stonet

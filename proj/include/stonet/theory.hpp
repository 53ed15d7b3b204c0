#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stonet/error.hpp"
#include "stonet/finset.hpp"
#include "stonet/quantale.hpp"
#include "stonet/vmat.hpp"

namespace stonet {

/// A monad on finite sets, evaluated on the sets that actually occur.  A
/// finite set is identified with its size n; elements of T n are indices.
///
/// This is the extension point for new theories: implement the four
/// components and hand the monad to Theory together with a structure map
/// T(V) -> V.
class Monad {
 public:
  virtual ~Monad() = default;

  virtual std::string name() const = 0;
  /// |T n|
  virtual std::size_t apply(std::size_t n) const = 0;
  /// T f
  virtual FinMap map(const FinMap& f) const = 0;
  /// e_n : n -> T n
  virtual FinMap unit(std::size_t n) const = 0;
  /// m_n : T T n -> T n
  virtual FinMap mult(std::size_t n) const = 0;
  /// Printable name of an element of T n, given names of the elements of n.
  virtual std::string element_name(std::span<const std::string> names,
                                   std::size_t i) const = 0;
};

class IdentityMonad final : public Monad {
 public:
  std::string name() const override { return "identity"; }
  std::size_t apply(std::size_t n) const override { return n; }
  FinMap map(const FinMap& f) const override { return f; }
  FinMap unit(std::size_t n) const override { return identity_map(n); }
  FinMap mult(std::size_t n) const override { return identity_map(n); }
  std::string element_name(std::span<const std::string> names,
                           std::size_t i) const override {
    return names[i];
  }
};

/// The ultrafilter monad restricted to finite sets.  Every ultrafilter on a
/// finite set is principal, so U n is represented by the generating points;
/// `enumerate_ultrafilters` checks this by brute force.
class FiniteUltrafilterMonad final : public Monad {
 public:
  std::string name() const override { return "finite-ultrafilter"; }
  std::size_t apply(std::size_t n) const override { return n; }
  /// U f sends the principal ultrafilter at x to the one at f(x).
  FinMap map(const FinMap& f) const override { return f; }
  FinMap unit(std::size_t n) const override { return identity_map(n); }
  /// The principal ultrafilter at a principal ultrafilter at x flattens to
  /// the principal ultrafilter at x.
  FinMap mult(std::size_t n) const override { return identity_map(n); }
  std::string element_name(std::span<const std::string> names,
                           std::size_t i) const override {
    return "^" + names[i];
  }
};

/// All ultrafilters on {0..n-1} by exhaustive search over families of
/// subsets.  Each family is a bitset over the 2^n subsets.  n <= 4.
std::vector<std::vector<bool>> enumerate_ultrafilters(std::size_t n);

/// A strict topological theory: a monad, a quantale and xi : T(V) -> V.
class Theory {
 public:
  /// Throws Error if T1 != 1.
  Theory(QuantalePtr q,
         std::shared_ptr<const Monad> monad,
         std::vector<Elem> xi,
         std::string name,
         std::string note = {});

  const Quantale& quantale() const noexcept { return *q_; }
  const QuantalePtr& quantale_ptr() const noexcept { return q_; }
  const Monad& monad() const noexcept { return *monad_; }
  const std::string& name() const noexcept { return name_; }
  /// Free-form metadata, e.g. a record that the theory degenerates to the
  /// identity theory on finite carriers.
  const std::string& note() const noexcept { return note_; }

  std::size_t t(std::size_t n) const { return monad_->apply(n); }
  FinMap map(const FinMap& f) const { return monad_->map(f); }
  FinMap unit(std::size_t n) const { return monad_->unit(n); }
  FinMap mult(std::size_t n) const { return monad_->mult(n); }

  Elem xi(std::size_t tv) const { return xi_[tv]; }
  const std::vector<Elem>& xi_table() const noexcept { return xi_; }

  /// xi . T(phi) for phi : n -> V, as a function T n -> V.
  std::vector<Elem> xi_hat(std::span<const Elem> phi) const;

 private:
  QuantalePtr q_;
  std::shared_ptr<const Monad> monad_;
  std::vector<Elem> xi_;
  std::string name_;
  std::string note_;
};

using TheoryPtr = std::shared_ptr<const Theory>;

/// The identity monad with xi = id.
TheoryPtr identity_theory(QuantalePtr q);

/// Ultrafilter monad on finite carriers with xi(x) = /\_{A in x} \/A,
/// computed over all subsets A of V.
TheoryPtr finite_ultrafilter_theory(QuantalePtr q);

/// A T-matrix alpha : X -|-> Y, i.e. a V-matrix X -|-> TY.
struct TMatrix {
  std::size_t from = 0;
  std::size_t to = 0;
  VMatrix m;

  friend bool operator==(const TMatrix&, const TMatrix&) = default;
};

/// T_xi r : TX -|-> TY for r : X -|-> Y.
VMatrix lax_extend(const Theory& th, const VMatrix& r);

/// e_X as a T-matrix X -|-> X.
TMatrix kleisli_unit(const Theory& th, std::size_t n);

/// beta o alpha = m . T_xi(beta) . alpha.
TMatrix kleisli_compose(const Theory& th, const TMatrix& beta, const TMatrix& alpha);

/// psi <| gamma = (m_X . T_xi psi) ~> gamma : Z -|-> Y for psi : Y -|-> X and
/// gamma : Z -|-> X.  Right adjoint to psi o -.
TMatrix kleisli_lifting(const Theory& th, const TMatrix& psi, const TMatrix& gamma);

/// Read a T-matrix X -|-> 1 (with T1 = 1) as a function X -> V.
std::vector<Elem> as_function(const TMatrix& phi);
/// The T-matrix X -|-> 1 of a function X -> V.
TMatrix from_function(const Theory& th, std::span<const Elem> phi);
/// A T-matrix 1 -|-> X read as a function TX -> V, and back.
std::vector<Elem> as_cofunction(const TMatrix& psi);
TMatrix from_cofunction(const Theory& th, std::size_t x, std::span<const Elem> psi);

struct TheoryCheck {
  std::string law;
  bool holds = true;
  std::string witness;
};

struct TheoryReport {
  std::vector<TheoryCheck> checks;
  bool ok() const;
  const TheoryCheck* find(std::string_view law) const;
};

/// Checks the theory axioms on all sets of the given sizes: functor and
/// monad laws, T1 = 1, the algebra and monoid squares for (V, xi), the hom
/// inequality, naturality of xi_X, the Hopf squares for tau, oplax
/// naturality of e, and weak-pullback spot checks.
TheoryReport validate_theory(const Theory& th, std::span<const std::size_t> sample_sizes);

}  // namespace stonet

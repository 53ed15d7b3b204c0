#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stonet/tcat.hpp"

namespace stonet {

/// psi -| phi with psi : E -o-> X a function TX -> V and phi : X -o-> E a
/// function X -> V.
struct AdjointPair {
  std::vector<Elem> left;
  std::vector<Elem> right;

  friend bool operator==(const AdjointPair&, const AdjointPair&) = default;
};

/// x_* : E -o-> X, i.e. fx |-> a(fx, x).
std::vector<Elem> lower_representable(const TCategory& x, std::size_t point);
/// x^* : X -o-> E, i.e. y |-> a(e(x), y).
std::vector<Elem> upper_representable(const TCategory& x, std::size_t point);

/// phi o psi : E -o-> E as a scalar.
Elem scalar_compose(const TCategory& x, std::span<const Elem> phi, std::span<const Elem> psi);

Verdict is_left_distributor(const TCategory& x, std::span<const Elem> psi);
Verdict is_right_distributor(const TCategory& x, std::span<const Elem> phi);

/// k <= phi o psi and psi o phi <= a, plus both distributor laws.
Verdict is_adjoint_pair(const TCategory& x, const AdjointPair& p);

/// psi <| a, the largest phi with psi o phi <= a.
std::vector<Elem> right_adjoint_candidate(const TCategory& x, std::span<const Elem> psi);

/// Every left adjoint distributor E -o-> X with its right adjoint, in
/// lexicographic order of the left part.
std::vector<AdjointPair> left_adjoint_distributors(const TCategory& x);

/// The same set found by enumerating all pairs of functions; slow.
std::vector<AdjointPair> adjoint_pairs_by_enumeration(const TCategory& x);

struct CauchyCompletion {
  std::vector<AdjointPair> pairs;
  TCategory completion;
  /// x |-> x_*
  FinMap yoneda;
};

/// Objects are the left adjoints; the structure is the largest one making
/// every psi |-> phi o psi (phi a T-functor X -> V) a T-functor.  Throws
/// Error if the result fails the T-category laws.
CauchyCompletion cauchy_completion(const TCategory& x);

/// Every left adjoint is x_* for some x.
bool is_cauchy_complete(const TCategory& x);

}  // namespace stonet

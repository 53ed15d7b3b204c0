#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stonet/finset.hpp"
#include "stonet/quantale.hpp"

namespace stonet {

/// A V-valued matrix r : X -|-> Y, stored densely with entries r(y, x)
/// indexed by (target, source).  Arrows of the quantaloid Mat(V).
class VMatrix {
 public:
  VMatrix() = default;
  /// All entries start at bottom.
  VMatrix(QuantalePtr q, std::size_t source, std::size_t target);
  VMatrix(QuantalePtr q, std::size_t source, std::size_t target, Elem fill);

  /// k on the diagonal, bottom elsewhere.
  static VMatrix identity(QuantalePtr q, std::size_t n);
  /// The graph of a function f : X -> Y read as a matrix X -|-> Y.
  static VMatrix from_map(QuantalePtr q, const FinMap& f);

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  const Quantale& quantale() const noexcept { return *q_; }
  const QuantalePtr& quantale_ptr() const noexcept { return q_; }

  Elem operator()(std::size_t y, std::size_t x) const {
    return entries_[y * source_ + x];
  }
  void set(std::size_t y, std::size_t x, Elem v) { entries_[y * source_ + x] = v; }

  const std::vector<Elem>& entries() const noexcept { return entries_; }
  std::vector<Elem>& entries() noexcept { return entries_; }

  /// Entrywise order.
  bool leq(const VMatrix& other) const;

  friend bool operator==(const VMatrix& a, const VMatrix& b) {
    return a.source_ == b.source_ && a.target_ == b.target_
           && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  QuantalePtr q_;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::vector<Elem> entries_;
};

/// (s . r)(z, x) = \/_y s(z, y) (x) r(y, x).
VMatrix compose(const VMatrix& s, const VMatrix& r);

/// r°(x, y) = r(y, x).
VMatrix involution(const VMatrix& r);

/// t <~ r : Y -|-> Z for t : X -|-> Z and r : X -|-> Y, right adjoint to - . r:
/// s . r <= t  iff  s <= t <~ r.
VMatrix extension(const VMatrix& t, const VMatrix& r);

/// r ~> q : Z -|-> X for r : X -|-> Y and q : Z -|-> Y, right adjoint to r . -:
/// r . p <= q  iff  p <= r ~> q.
VMatrix lifting(const VMatrix& r, const VMatrix& q);

/// Entrywise join and meet of parallel matrices.
VMatrix matrix_join(const VMatrix& a, const VMatrix& b);
VMatrix matrix_meet(const VMatrix& a, const VMatrix& b);

/// Mixed-radix code of the entries; a bijection between matrices of one
/// shape and {0, ..., |V|^(rows*cols) - 1}.
std::size_t encode(const VMatrix& m);
VMatrix decode(QuantalePtr q, std::size_t source, std::size_t target, std::size_t code);

}  // namespace stonet

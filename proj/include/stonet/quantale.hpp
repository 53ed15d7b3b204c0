#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stonet/error.hpp"

namespace stonet {

/// An element of a finite quantale, identified by its index in the carrier.
struct Elem {
  std::uint8_t id = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::size_t i) : id(static_cast<std::uint8_t>(i)) {}

  constexpr std::size_t index() const noexcept { return id; }

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Raw, unvalidated description of a finite commutative unital quantale.
///
/// `leq` and `tensor` are row-major tables over carrier x carrier.  The order
/// is given in full (not as a generating relation); nothing is inferred.
struct QuantaleTable {
  std::vector<std::string> names;
  std::vector<bool> leq;
  std::vector<std::size_t> tensor;
  std::size_t unit = 0;
};

struct QuantaleReport {
  std::vector<LawViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustively checks the quantale laws on a raw table: partial order,
/// completeness, associativity, commutativity, unit, preservation of joins
/// (binary and empty) by tensor in each argument, and residuation.
QuantaleReport validate(const QuantaleTable& table);

/// A validated finite commutative unital quantale.  Immutable.
class Quantale {
 public:
  /// Throws ValidationError naming every failed law.
  static Quantale from_table(QuantaleTable table, std::string label = "custom");

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& label() const noexcept { return label_; }
  const QuantaleTable& table() const noexcept { return table_; }

  Elem unit() const noexcept { return unit_; }
  Elem top() const noexcept { return top_; }
  Elem bottom() const noexcept { return bottom_; }

  bool leq(Elem a, Elem b) const { return leq_[a.index() * size() + b.index()]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[a.index() * size() + b.index()]; }
  Elem join(Elem a, Elem b) const { return join_[a.index() * size() + b.index()]; }
  Elem meet(Elem a, Elem b) const { return meet_[a.index() * size() + b.index()]; }
  /// Internal hom: x (x) y <= z  iff  x <= hom(y, z).
  Elem hom(Elem y, Elem z) const { return hom_[y.index() * size() + z.index()]; }

  Elem join(std::span<const Elem> xs) const;
  Elem meet(std::span<const Elem> xs) const;

  const std::string& name(Elem e) const { return names_[e.index()]; }
  std::optional<Elem> find(std::string_view name) const;

  std::vector<Elem> elements() const;

 private:
  Quantale() = default;

  std::string label_;
  QuantaleTable table_;
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Elem> tensor_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> hom_;
  Elem unit_;
  Elem top_;
  Elem bottom_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// The two-element chain {0, 1} with meet as tensor.
QuantalePtr make_two();

/// {0, ..., n-1} with min as tensor and unit n-1.
QuantalePtr make_goedel_chain(std::size_t n);

/// {0, 1, ..., n-2, inf} ordered by reversed numeric order (0 is top and
/// unit, inf is bottom) with addition that saturates to inf once the numeric
/// sum exceeds n-2.
QuantalePtr make_lawvere_chain(std::size_t n);

/// Componentwise product.  Element names are "(a,b)".
QuantalePtr make_product(const Quantale& a, const Quantale& b);

/// Builder dispatch by name: two, goedel-chain, lawvere-chain.  `n` is
/// ignored for `two`.
QuantalePtr make_builtin(std::string_view name, std::size_t n = 0);

/// u << v iff every subset S with v <= \/S contains some s with u <= s.
/// Computed by quantifying over all subsets of the carrier.  Row-major.
std::vector<bool> totally_below(const Quantale& q);

struct FrmHypotheses {
  bool top_is_unit = false;
  bool below_unit_directed = false;
  bool unit_join_prime = false;
  std::string witness;

  bool all() const noexcept {
    return top_is_unit && below_unit_directed && unit_join_prime;
  }
};

/// The three quantale conditions under which preservation of finite suprema
/// and preservation of ultrafilter suprema coincide.
FrmHypotheses check_frm_hypotheses(const Quantale& q);

}  // namespace stonet

#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace stonet {

enum class Outcome { holds, fails, unknown };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::unknown:
      break;
  }
  return "unknown";
}

/// Outcome of a law check, with a counterexample (or the reason a bounded
/// search gave up) when it does not hold.
struct Verdict {
  Outcome outcome = Outcome::holds;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {Outcome::fails, std::move(w)}; }
  static Verdict unknown(std::string why) { return {Outcome::unknown, std::move(why)}; }

  bool holds() const noexcept { return outcome == Outcome::holds; }
  bool fails() const noexcept { return outcome == Outcome::fails; }
  explicit operator bool() const noexcept { return holds(); }
};

/// The first failure wins; unknown beats holds.
inline Verdict& operator&=(Verdict& a, const Verdict& b) {
  if (a.outcome == Outcome::fails) {
    return a;
  }
  if (b.outcome != Outcome::holds) {
    if (!(a.outcome == Outcome::unknown && b.outcome == Outcome::unknown)) {
      a = b;
    }
  }
  return a;
}

}  // namespace stonet

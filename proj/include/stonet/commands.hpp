#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonet/report.hpp"
#include "stonet/workspace.hpp"

namespace stonet {

/// Bad command line or flag value.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::size_t max_objects = 4;
  std::size_t max_index = 2;
  std::string theory = "identity";
  std::string quantale = "two";
  bool oracle = false;
  std::uint64_t seed = 20100401;
  /// Restrict per-entity commands to one named entity.
  std::optional<std::string> target;
  /// Give up on a V-functor search after this many candidates.
  std::size_t cap = 200000;

  Json to_json() const;
};

const std::vector<std::string>& command_names();

/// Throws UsageError for an unknown command or unusable flags.
Report run(const Workspace& ws, std::string_view command, const Flags& flags);

/// "two", "goedel-chain(3)", "lawvere-chain(4)" or "goedel-chain 3".
QuantalePtr builtin_quantale(std::string_view spec);

}  // namespace stonet

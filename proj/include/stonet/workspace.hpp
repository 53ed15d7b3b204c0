#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonet/duality.hpp"
#include "stonet/tcat.hpp"
#include "stonet/theory.hpp"

namespace stonet {

/// Malformed input; `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Provenance {
  std::string file;
  std::size_t line = 0;
};

template <typename T>
struct Named {
  std::string name;
  T value;
  Provenance where;
};

struct FunctorDecl {
  std::string source;
  std::string target;
  FinMap map;
};

struct FrameDecl {
  std::string of;
  std::size_t max_index = 2;
};

/// An entity that parsed but failed one of its laws, or refers to one that did.
struct Rejection {
  std::string entity;
  std::string law;
  std::string witness;
  Provenance where;
};

struct Workspace {
  std::vector<Named<QuantalePtr>> quantales;
  std::vector<Named<TheoryPtr>> theories;
  std::vector<Named<TCategory>> tcategories;
  std::vector<Named<FunctorDecl>> tfunctors;
  std::vector<Named<FrameDecl>> frames;
  std::vector<Rejection> rejected;

  const QuantalePtr* quantale(std::string_view name) const;
  const TheoryPtr* theory(std::string_view name) const;
  const TCategory* tcategory(std::string_view name) const;
  bool defines(std::string_view name) const;
};

/// Parses the declarative format:
///
///     quantale Q = builtin lawvere-chain(4)
///     quantale R = table { elements 0 1; leq 0 1; unit 1; default = 0; tensor 1 1 = 1 }
///     theory U = finite-ultrafilter over Q
///     tcategory X over Q theory identity { objects a b; default = inf; hom a a = 0 }
///     tfunctor f : X -> Y { a -> c; b -> c }
///     frame F = omega X
///
/// Newlines and `;` separate statements; `#` starts a comment.  Syntax errors
/// throw ParseError.  Law violations are collected in `rejected`.
Workspace parse(std::string_view text, const std::string& file = "<input>");

}  // namespace stonet

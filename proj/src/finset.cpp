#include "stonet/finset.hpp"

#include <algorithm>
#include <numeric>

#include "stonet/error.hpp"

namespace stonet {

FinMap identity_map(std::size_t n) {
  FinMap f{n, std::vector<std::size_t>(n)};
  std::iota(f.images.begin(), f.images.end(), std::size_t{0});
  return f;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.codomain != g.domain()) {
    throw ShapeError("cannot compose maps: codomain " + std::to_string(f.codomain)
                     + " vs domain " + std::to_string(g.domain()));
  }
  FinMap h{g.codomain, std::vector<std::size_t>(f.domain())};
  for (std::size_t i = 0; i < f.domain(); ++i) {
    h.images[i] = g(f(i));
  }
  return h;
}

FinMap first_projection(std::size_t na, std::size_t nb) {
  FinMap p{na, std::vector<std::size_t>(na * nb)};
  for (std::size_t i = 0; i < na * nb; ++i) {
    p.images[i] = i / nb;
  }
  return p;
}

FinMap second_projection(std::size_t na, std::size_t nb) {
  FinMap p{nb, std::vector<std::size_t>(na * nb)};
  for (std::size_t i = 0; i < na * nb; ++i) {
    p.images[i] = i % nb;
  }
  return p;
}

FinMap constant_map(std::size_t n, std::size_t m, std::size_t value) {
  return FinMap{m, std::vector<std::size_t>(n, value)};
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string to_string(const FinMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.domain(); ++i) {
    s += (i ? " " : "") + std::to_string(f(i));
  }
  return s + "]";
}

}  // namespace stonet

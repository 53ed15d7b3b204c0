#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stonet/theory.hpp"

using namespace stonet;

namespace {

std::size_t count(const QuantalePtr& q, std::size_t cells) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    c *= q->size();
  }
  return c;
}

std::vector<TheoryPtr> theories(const QuantalePtr& q) {
  return {identity_theory(q), finite_ultrafilter_theory(q)};
}

}  // namespace

TEST_CASE("ultrafilters on a finite set are principal") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const us = enumerate_ultrafilters(n);
    CHECK(us.size() == n);
    for (std::size_t i = 0; i < us.size(); ++i) {
      // The ultrafilter contains exactly the subsets holding its point.
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        CHECK(us[i][mask] == static_cast<bool>(mask >> i & 1u));
      }
    }
  }
}

TEST_CASE("T1 = 1 and xi on principal elements") {
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    for (const auto& th : theories(q)) {
      CHECK(th->t(1) == 1);
      FinMap const e = th->unit(q->size());
      for (Elem v : q->elements()) {
        CHECK(th->xi(e(v.index())) == v);
      }
    }
  }
}

TEST_CASE("the ultrafilter theory records its degeneracy") {
  auto th = finite_ultrafilter_theory(make_two());
  CHECK(th->name() == "finite-ultrafilter");
  CHECK_FALSE(th->note().empty());
  CHECK(th->monad().element_name(std::vector<std::string>{"a", "b"}, 1) == "^b");
}

TEST_CASE("lax extension is the identity on matrices for both theories") {
  std::mt19937 rng(5);
  auto q = make_lawvere_chain(4);
  std::uniform_int_distribution<std::size_t> d(0, q->size() - 1);
  for (const auto& th : theories(q)) {
    for (int trial = 0; trial < 40; ++trial) {
      VMatrix r(q, 3, 2);
      for (auto& e : r.entries()) {
        e = Elem(d(rng));
      }
      CHECK(lax_extend(*th, r) == r);
    }
    CHECK(lax_extend(*th, VMatrix::identity(q, 3)) == VMatrix::identity(q, 3));
  }
}

TEST_CASE("lax extension is functorial at sizes up to 3 over two") {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    for (std::size_t a = 0; a < count(q, 6); ++a) {
      VMatrix const r = decode(q, 2, 3, a);
      for (std::size_t b = 0; b < count(q, 6); ++b) {
        VMatrix const s = decode(q, 3, 2, b);
        VMatrix const lhs = lax_extend(*th, compose(s, r));
        VMatrix const rhs = compose(lax_extend(*th, s), lax_extend(*th, r));
        CHECK(rhs.leq(lhs));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("identity theory: Kleisli composition is matrix composition") {
  auto q = make_goedel_chain(3);
  auto th = identity_theory(q);
  for (std::size_t a = 0; a < count(q, 4); ++a) {
    for (std::size_t b = 0; b < count(q, 4); b += 7) {
      TMatrix const alpha{2, 2, decode(q, 2, 2, a)};
      TMatrix const beta{2, 2, decode(q, 2, 2, b)};
      CHECK(kleisli_compose(*th, beta, alpha).m == compose(beta.m, alpha.m));
    }
  }
}

TEST_CASE("Kleisli unit laws and associativity on random triples") {
  std::mt19937 rng(17);
  for (const auto& q : {make_two(), make_lawvere_chain(4)}) {
    std::uniform_int_distribution<std::size_t> d(0, q->size() - 1);
    auto rnd = [&](std::size_t from, std::size_t to, const Theory& th) {
      TMatrix m{from, to, VMatrix(q, from, th.t(to))};
      for (auto& e : m.m.entries()) {
        e = Elem(d(rng));
      }
      return m;
    };
    for (const auto& th : theories(q)) {
      for (int trial = 0; trial < 100; ++trial) {
        TMatrix const a = rnd(2, 3, *th);
        TMatrix const b = rnd(3, 2, *th);
        TMatrix const c = rnd(2, 3, *th);
        CHECK(kleisli_compose(*th, kleisli_unit(*th, 3), a) == a);
        CHECK(a.m.leq(kleisli_compose(*th, a, kleisli_unit(*th, 2)).m));
        CHECK(kleisli_compose(*th, c, kleisli_compose(*th, b, a))
              == kleisli_compose(*th, kleisli_compose(*th, c, b), a));
      }
    }
  }
}

TEST_CASE("Kleisli lifting is right adjoint to composition, exhaustively over two") {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    for (std::size_t nx = 1; nx <= 2; ++nx) {
      for (std::size_t ny = 1; ny <= 2; ++ny) {
        for (std::size_t nz = 1; nz <= 2; ++nz) {
          // psi : Y -|-> X, gamma : Z -|-> X, delta : Z -|-> Y.
          for (std::size_t p = 0; p < count(q, ny * nx); ++p) {
            TMatrix const psi{ny, nx, decode(q, ny, nx, p)};
            for (std::size_t g = 0; g < count(q, nz * nx); ++g) {
              TMatrix const gamma{nz, nx, decode(q, nz, nx, g)};
              TMatrix const lift = kleisli_lifting(*th, psi, gamma);
              for (std::size_t dd = 0; dd < count(q, nz * ny); ++dd) {
                TMatrix const delta{nz, ny, decode(q, nz, ny, dd)};
                CHECK(kleisli_compose(*th, psi, delta).m.leq(gamma.m) == delta.m.leq(lift.m));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lifting of a composite dominates the original") {
  auto q = make_goedel_chain(3);
  auto th = identity_theory(q);
  for (std::size_t p = 0; p < count(q, 4); p += 3) {
    TMatrix const psi{2, 2, decode(q, 2, 2, p)};
    for (std::size_t dd = 0; dd < count(q, 4); dd += 5) {
      TMatrix const delta{2, 2, decode(q, 2, 2, dd)};
      CHECK(delta.m.leq(kleisli_lifting(*th, psi, kleisli_compose(*th, psi, delta)).m));
    }
  }
}

TEST_CASE("identity theory over two: lifting is the relational residual") {
  auto q = make_two();
  auto th = identity_theory(q);
  for (std::size_t p = 0; p < count(q, 4); ++p) {
    for (std::size_t g = 0; g < count(q, 4); ++g) {
      TMatrix const psi{2, 2, decode(q, 2, 2, p)};
      TMatrix const gamma{2, 2, decode(q, 2, 2, g)};
      VMatrix const l = kleisli_lifting(*th, psi, gamma).m;
      for (std::size_t z = 0; z < 2; ++z) {
        for (std::size_t y = 0; y < 2; ++y) {
          // y (psi <| gamma) z iff every x with x psi y has x gamma z.
          bool all = true;
          for (std::size_t x = 0; x < 2; ++x) {
            all = all && (psi.m(x, y).index() == 0 || gamma.m(x, z).index() == 1);
          }
          CHECK((l(y, z).index() == 1) == all);
        }
      }
    }
  }
}

TEST_CASE("validate_theory passes on the shipped instances") {
  std::array<std::size_t, 4> const sizes{0, 1, 2, 3};
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    for (const auto& th : theories(q)) {
      TheoryReport const r = validate_theory(*th, sizes);
      for (const auto& c : r.checks) {
        CAPTURE(c.law);
        CAPTURE(c.witness);
        CHECK(c.holds);
      }
      CHECK(r.ok());
      CHECK(r.find("xi-unit") != nullptr);
    }
  }
}

TEST_CASE("a corrupted xi fails the algebra law with a witness") {
  auto q = make_two();
  std::vector<Elem> xi{Elem(1), Elem(0)};
  Theory const bad(q, std::make_shared<IdentityMonad>(), xi, "corrupt");
  std::array<std::size_t, 2> const sizes{1, 2};
  TheoryReport const r = validate_theory(bad, sizes);
  CHECK_FALSE(r.ok());
  const TheoryCheck* c = r.find("xi-unit");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->holds);
  CHECK_FALSE(c->witness.empty());
}

TEST_CASE("functions and cofunctions round-trip through T-matrices") {
  auto q = make_goedel_chain(3);
  auto th = finite_ultrafilter_theory(q);
  std::vector<Elem> const phi{Elem(0), Elem(2), Elem(1)};
  CHECK(as_function(from_function(*th, phi)) == phi);
  CHECK(as_cofunction(from_cofunction(*th, 3, phi)) == phi);
  CHECK(th->xi_hat(phi) == phi);
}

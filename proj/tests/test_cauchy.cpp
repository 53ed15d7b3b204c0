#include "doctest.h"
#include "oracles.hpp"
#include "stonet/cauchy.hpp"

using namespace stonet;

namespace {

std::vector<TheoryPtr> theories(const QuantalePtr& q) {
  return {identity_theory(q), finite_ultrafilter_theory(q)};
}

std::vector<oracle::Pair> as_oracle(const std::vector<AdjointPair>& ps) {
  std::vector<oracle::Pair> out;
  for (const auto& p : ps) {
    out.push_back(oracle::Pair{p.left, p.right});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("a two-point antichain has exactly its representables") {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    TCategory const x = discrete_tcategory(th, 2);
    auto const pairs = left_adjoint_distributors(x);
    REQUIRE(pairs.size() == 2);
    for (std::size_t p = 0; p < 2; ++p) {
      CHECK(pairs[p].left == lower_representable(x, 1 - p));
      CHECK(pairs[p].right == upper_representable(x, 1 - p));
      CHECK(is_adjoint_pair(x, pairs[p]).holds());
    }
    CHECK(is_cauchy_complete(x));
  }
}

TEST_CASE("isomorphic points share one adjoint pair") {
  auto q = make_two();
  for (const auto& th : theories(q)) {
    TCategory const x(th, VMatrix(q, 2, 2, q->top()));
    CHECK(left_adjoint_distributors(x).size() == 1);
    CauchyCompletion const c = cauchy_completion(x);
    CHECK(c.completion.size() == 1);
    CHECK(c.yoneda(0) == c.yoneda(1));
    CHECK_FALSE(is_separated(x));
    CHECK(is_cauchy_complete(x));
  }
}

TEST_CASE("the unit object is its own completion") {
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    for (const auto& th : theories(q)) {
      TCategory const e = unit_E(th);
      auto const pairs = left_adjoint_distributors(e);
      REQUIRE(pairs.size() == 1);
      CHECK(pairs.front().left == std::vector<Elem>{q->unit()});
      CHECK(pairs.front().right == std::vector<Elem>{q->unit()});
    }
  }
}

TEST_CASE("the empty T-category is Cauchy complete") {
  auto th = identity_theory(make_goedel_chain(3));
  TCategory const x = discrete_tcategory(th, 0);
  CHECK(left_adjoint_distributors(x).empty());
  CHECK(is_cauchy_complete(x));
  CHECK(cauchy_completion(x).completion.size() == 0);
}

TEST_CASE("adjoint pairs agree with the defining inequalities") {
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    auto th = identity_theory(q);
    std::size_t const max_n = q->size() > 3 ? 2 : 3;
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (const auto& x : up_to_isomorphism(enumerate_tcategories(th, n))) {
        auto const fast = left_adjoint_distributors(x);
        CHECK(as_oracle(fast) == oracle::adjoint_pairs(x.structure()));
        CHECK(fast == adjoint_pairs_by_enumeration(x));
        for (const auto& p : fast) {
          CHECK(p.right == right_adjoint_candidate(x, p.left));
        }
      }
    }
  }
}

TEST_CASE("the ultrafilter theory finds the same pairs as the identity theory") {
  auto q = make_goedel_chain(3);
  auto id = identity_theory(q);
  auto uf = finite_ultrafilter_theory(q);
  for (const auto& x : enumerate_tcategories(id, 2)) {
    TCategory const y(uf, x.structure());
    CHECK(left_adjoint_distributors(x) == left_adjoint_distributors(y));
  }
}

TEST_CASE("preorders: Cauchy complete, and the completion is the poset reflection") {
  auto q = make_two();
  auto th = identity_theory(q);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& p : oracle::all_preorders(n)) {
      TCategory const x = oracle::as_tcategory(th, p);
      CHECK(is_cauchy_complete(x));
      CauchyCompletion const c = cauchy_completion(x);
      CHECK(c.pairs.size() == oracle::class_count(p));
      CHECK(is_separated(c.completion));
      CHECK(find_isomorphism(c.completion, oracle::as_tcategory(th, oracle::reflection(p))).has_value());
      bool const injective = c.pairs.size() == n;
      CHECK(injective == oracle::antisymmetric(p));
    }
  }
}

TEST_CASE("finite metric spaces over the lawvere chain are Cauchy complete") {
  auto q = make_lawvere_chain(4);
  for (const auto& th : theories(q)) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& x : up_to_isomorphism(enumerate_tcategories(th, n))) {
        CHECK(is_cauchy_complete(x));
      }
    }
  }
}

TEST_CASE("completion is idempotent up to isomorphism") {
  for (const auto& q : {make_two(), make_goedel_chain(3)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& x : up_to_isomorphism(enumerate_tcategories(th, n))) {
          CauchyCompletion const c = cauchy_completion(x);
          CHECK(is_tcategory(*th, c.completion.structure()).holds());
          CHECK(is_tfunctor(x, c.completion, c.yoneda).holds());
          CHECK(is_cauchy_complete(c.completion));
          CauchyCompletion const cc = cauchy_completion(c.completion);
          CHECK(find_isomorphism(cc.completion, c.completion).has_value());
        }
      }
    }
  }
}

TEST_CASE("a lower representable composed with its upper partner contains the unit") {
  auto q = make_goedel_chain(3);
  auto th = identity_theory(q);
  for (const auto& x : enumerate_tcategories(th, 2)) {
    for (std::size_t p = 0; p < 2; ++p) {
      auto const psi = lower_representable(x, p);
      auto const phi = upper_representable(x, p);
      CHECK(q->leq(q->unit(), scalar_compose(x, phi, psi)));
      CHECK(is_left_distributor(x, psi).holds());
      CHECK(is_right_distributor(x, phi).holds());
    }
  }
}

TEST_CASE("the Yoneda map is fully faithful") {
  for (const auto& q : {make_two(), make_goedel_chain(3), make_lawvere_chain(4)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& x : up_to_isomorphism(enumerate_tcategories(th, n))) {
          CauchyCompletion const c = cauchy_completion(x);
          FinMap const e = th->unit(n);
          FinMap const ec = th->unit(c.completion.size());
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              CHECK(c.completion(ec(c.yoneda(a)), c.yoneda(b)) == x(e(a), b));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("restriction along Yoneda identifies the T-functors into V") {
  for (const auto& q : {make_two(), make_goedel_chain(3)}) {
    for (const auto& th : theories(q)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& x : up_to_isomorphism(enumerate_tcategories(th, n))) {
          CauchyCompletion const c = cauchy_completion(x);
          auto const on_x = t_functors_to_v(x);
          auto const on_c = t_functors_to_v(c.completion);
          std::vector<std::vector<Elem>> restricted;
          for (const auto& phi : on_c) {
            std::vector<Elem> r(n);
            for (std::size_t a = 0; a < n; ++a) {
              r[a] = phi[c.yoneda(a)];
            }
            restricted.push_back(std::move(r));
          }
          std::sort(restricted.begin(), restricted.end());
          CHECK(std::adjacent_find(restricted.begin(), restricted.end()) == restricted.end());
          CHECK(restricted == on_x);
        }
      }
    }
  }
}

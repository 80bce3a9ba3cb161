#include <doctest.h>

#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/random.hpp"
#include "support.hpp"

using namespace leibniz;
using testing_support::vec;

namespace {

// Index-level evaluation of [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] straight from the
// structure constants c(i,j,k) = coefficient of e_k in [e_i,e_j].
std::vector<std::array<Index, 3>> failing_triples(const Algebra& a) {
  const Index n = a.dim();
  auto c = [&](Index i, Index j, Index k) { return a.bracket().coeff()(k, i * n + j); };
  std::vector<std::array<Index, 3>> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        bool bad = false;
        for (Index m = 0; m < n; ++m) {
          Scalar s(0);
          for (Index l = 0; l < n; ++l) s += c(j, k, l) * c(i, l, m) - c(i, j, l) * c(l, k, m) + c(i, k, l) * c(l, j, m);
          if (!s.is_zero()) bad = true;
        }
        if (bad) out.push_back({i, j, k});
      }
  return out;
}

Algebra non_leibniz() {
  return Algebra::from_products("bad", 2, {{{0, 0}, unit(2, 1)}, {{1, 0}, unit(2, 0)}});
}

}  // namespace

TEST_CASE("check_leibniz on fixtures") {
  CHECK(check_leibniz(fixtures::a1()).passed());
  CHECK(check_leibniz(fixtures::l2()).passed());
  CHECK(check_leibniz(fixtures::r2()).passed());
  CHECK(failing_triples(fixtures::l2()).empty());

  Report bad = check_leibniz(non_leibniz());
  CHECK(!bad.passed());
  auto expected = failing_triples(non_leibniz());
  REQUIRE(bad.failures().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(bad.failures()[i].axiom == "Leibniz");
    CHECK(bad.failures()[i].indices == std::vector<Index>(expected[i].begin(), expected[i].end()));
  }
}

TEST_CASE("check_antisymmetry") {
  CHECK(check_antisymmetry(fixtures::a1()).passed());
  Report l2 = check_antisymmetry(fixtures::l2());
  REQUIRE(l2.failures().size() == 1);
  CHECK(l2.failures()[0].indices == std::vector<Index>{1, 1});
  CHECK(check_antisymmetry(fixtures::r2()).passed());
  CHECK(is_lie(fixtures::r2()));
  CHECK(!is_lie(fixtures::l2()));
}

TEST_CASE("check_hom") {
  const Algebra l2 = fixtures::l2();
  CHECK(check_hom(l2, l2, Matrix::Identity(2, 2)).passed());
  CHECK(check_hom(l2, fixtures::r2(), Matrix::Zero(2, 2)).passed());
  auto lie = lieization(l2);
  CHECK(check_hom(l2, lie.algebra, lie.proj()).passed());
  // Swapping the basis of L2 is not a homomorphism.
  Matrix swap(2, 2);
  swap << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  CHECK(!check_hom(l2, l2, swap).passed());
}

TEST_CASE("ideal_closure") {
  const Algebra l2 = fixtures::l2(), r2 = fixtures::r2();
  CHECK(ideal_closure(l2, Subspace::zero(2)).dim() == 0);
  CHECK(ideal_closure(l2, Subspace::span(2, {vec({1, 0})})) == Subspace::span(2, {vec({1, 0})}));
  CHECK(ideal_closure(r2, Subspace::span(2, {vec({1, 0})})) == Subspace::span(2, {vec({1, 0})}));
  CHECK(ideal_closure(r2, Subspace::span(2, {vec({0, 1})})) == Subspace::full(2));
}

TEST_CASE("quotient_algebra") {
  const Algebra l2 = fixtures::l2();
  auto same = quotient_algebra(l2, Subspace::zero(2));
  CHECK(same.algebra == l2);
  CHECK(same.proj() == Matrix(Matrix::Identity(2, 2)));

  auto q = quotient_algebra(l2, Subspace::span(2, {vec({1, 0})}));
  CHECK(q.algebra.dim() == 1);
  CHECK(q.algebra == Algebra::abelian("A1", 1));

  CHECK(quotient_algebra(l2, Subspace::full(2)).algebra.dim() == 0);
  CHECK_THROWS_AS(quotient_algebra(fixtures::r2(), Subspace::span(2, {vec({0, 1})})), Error);
}

TEST_CASE("lieization") {
  auto r2 = lieization(fixtures::r2());
  CHECK(r2.ideal().dim() == 0);
  CHECK(r2.algebra == fixtures::r2());
  auto l2 = lieization(fixtures::l2());
  CHECK(l2.ideal() == Subspace::span(2, {vec({1, 0})}));
  CHECK(l2.algebra == Algebra::abelian("A1", 1));
  CHECK(lieization(fixtures::a1()).algebra == fixtures::a1());
  try {
    lieization(non_leibniz());
    FAIL("expected NotLeibniz");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLeibniz);
  }
}

TEST_CASE("property: basis checks agree with evaluation on random vectors") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Algebra a = trial % 2 ? random_leibniz(rng, 3) : random_perturbed(rng, 3);
    bool all = true;
    for (int s = 0; s < 30; ++s) {
      auto x = testing_support::random_vector(rng, a.dim()), y = testing_support::random_vector(rng, a.dim()),
           z = testing_support::random_vector(rng, a.dim());
      all = all && testing_support::leibniz_on(a, x, y, z);
    }
    CHECK(check_leibniz(a).passed() == all);
    CHECK(check_leibniz(a).passed() == failing_triples(a).empty());
  }
}

TEST_CASE("property: lieization is Lie and its projection is a surjective hom with kernel the ideal") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    Algebra a = random_leibniz(rng, 4);
    REQUIRE(is_leibniz(a));
    auto lie = lieization(a);
    CHECK(check_antisymmetry(lie.algebra).passed());
    CHECK(check_leibniz(lie.algebra).passed());
    CHECK(check_hom(a, lie.algebra, lie.proj()).passed());
    CHECK(rank(lie.proj()) == lie.algebra.dim());
    CHECK(kernel(lie.proj()) == lie.ideal());
    // [x, x] always dies.
    Vector x = testing_support::random_vector(rng, a.dim());
    CHECK(lie.ideal().contains(a(x, x)));
  }
}

TEST_CASE("property: ideal_closure is idempotent and monotone") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Algebra a = random_leibniz(rng, 4);
    Subspace small = Subspace::span(a.dim(), {testing_support::random_vector(rng, a.dim())});
    Subspace big = small.join(testing_support::random_vector(rng, a.dim()));
    Subspace cs = ideal_closure(a, small), cb = ideal_closure(a, big);
    CHECK(ideal_closure(a, cs) == cs);
    CHECK(cb.contains(cs));
    CHECK(cs.contains(small));
    CHECK(is_ideal(a, cs));
  }
}

TEST_CASE("random generator bases are Leibniz") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 60; ++trial) CHECK(is_leibniz(random_leibniz(rng, 4)));
}

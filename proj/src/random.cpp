#include "leibniz/random.hpp"

#include "leibniz/fixtures.hpp"

namespace leibniz {

namespace {

std::vector<Algebra> bases(Index max_dim) {
  using namespace fixtures;
  std::vector<Algebra> all = {
      a1(),
      l2(),
      r2(),
      Algebra::abelian("A2", 2),
      direct_sum(a1(), l2()),
      direct_sum(a1(), r2()),
      Algebra::abelian("A3", 3),
      Algebra::from_products("N3", 3, {{{0, 0}, unit(3, 2)}, {{1, 1}, unit(3, 2)}, {{0, 1}, unit(3, 2)}}),
      Algebra::from_products("H3", 3, {{{0, 1}, unit(3, 2)}, {{1, 0}, Vector(-unit(3, 2))}}),
      Algebra::from_products("S3", 3, {{{0, 2}, unit(3, 0)}, {{1, 2}, unit(3, 1)}}),
      direct_sum(l2(), Algebra::abelian("A2", 2)),
      direct_sum(l2(), r2()),
  };
  std::vector<Algebra> out;
  for (auto& a : all)
    if (a.dim() <= max_dim) out.push_back(std::move(a));
  return out;
}

Algebra moved(std::mt19937& rng, Index max_dim) {
  auto pool = bases(max_dim);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const Algebra& base = pool[pick(rng)];
  Scalar c = random_rational(rng, 3);
  if (c.is_zero()) c = Scalar(1);
  return change_basis(scaled(base, c), random_invertible(rng, base.dim()), "random-" + base.name());
}

Algebra perturb(std::mt19937& rng, const Algebra& a) {
  std::uniform_int_distribution<Index> idx(0, a.dim() - 1);
  BilinearMap b = a.bracket();
  const Index i = idx(rng), j = idx(rng), k = idx(rng);
  b.at(i, j)(k) += random_rational(rng, 3);
  return {a.name(), std::move(b)};
}

}  // namespace

Scalar random_rational(std::mt19937& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Scalar(num(rng), den(rng));
}

Matrix random_invertible(std::mt19937& rng, Index n) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) p(i, j) = Scalar(entry(rng));
    if (rank(p) == n) return p;
  }
}

Algebra random_leibniz(std::mt19937& rng, Index max_dim) {
  Algebra a = moved(rng, max_dim);
  std::bernoulli_distribution try_perturb(0.5);
  if (try_perturb(rng)) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Algebra p = perturb(rng, a);
      if (is_leibniz(p)) return p;
    }
  }
  return a;
}

Algebra random_perturbed(std::mt19937& rng, Index max_dim) { return perturb(rng, moved(rng, max_dim)); }

}  // namespace leibniz

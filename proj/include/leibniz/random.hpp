#pragma once

#include <random>

#include "leibniz/algebra.hpp"

namespace leibniz {

Scalar random_rational(std::mt19937& rng, long range);
// Invertible matrix with small entries.
Matrix random_invertible(std::mt19937& rng, Index n);
// A fixture or small direct sum, moved by a random change of basis and scaling, then with
// one structure constant perturbed when the perturbation keeps the Leibniz identity.
Algebra random_leibniz(std::mt19937& rng, Index max_dim);
// Same construction without the filter: the perturbation is kept whatever it breaks.
Algebra random_perturbed(std::mt19937& rng, Index max_dim);

}  // namespace leibniz

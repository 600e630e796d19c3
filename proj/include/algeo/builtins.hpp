#pragma once

#include <cstdint>
#include <vector>

#include "algeo/algebra.hpp"

namespace algeo {
namespace builtins {

AlgebraPtr m2q();         // 2x2 matrices over Q, basis e11 e12 e21 e22
AlgebraPtr qz3();         // group algebra Q[Z/3]
AlgebraPtr sl2();         // sl2(Q) with mu = [,]
AlgebraPtr sl2half();     // sl2(Q) with mu = (1/2)[,] and supplied bracket [,]
AlgebraPtr octonions();   // Cayley-Dickson doubling of the quaternions
AlgebraPtr zero_algebra(int dim); // mu = 0
AlgebraPtr poisson_sl2(); // mu = 0, bracket = sl2

/// Random dense structure constants over F_p, reproducible from the seed.
AlgebraPtr random_fp(std::uint64_t p, int dim, std::uint64_t seed);

/// Lookup by CLI name ("m2q", "qz3", "sl2", "sl2half", "octonions", "zero3",
/// "poisson-sl2"); nullptr when unknown.
AlgebraPtr by_name(const std::string &name);
std::vector<std::string> names();

} // namespace builtins
} // namespace algeo

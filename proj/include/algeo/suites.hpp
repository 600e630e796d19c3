#pragma once

#include <random>

#include "algeo/builtins.hpp"
#include "algeo/forms.hpp"
#include "algeo/gerstenhaber.hpp"
#include "algeo/report.hpp"

namespace algeo {
namespace suites {

struct Options {
    int trials = 64;
    std::uint64_t seed = 0;
    int max_order = 4;
    int max_degree = 1; // coherence: degree of tested basis cochains
};

/// Dense cochain with uniformly drawn coefficients (small integers over Q).
Cochain random_cochain(const AlgebraPtr &alg, int degree, std::mt19937_64 &rng);

/// Largest degree sum s such that an s-degree cochain stays cheap on dim n.
int degree_sum_cap(int n);

/// Randomized identities of the comp calculus: graded antisymmetry and
/// Jacobi, the adjoint Leibniz rule, insertion associativity, the two-slot
/// insertion expansion of the comp associator, the associator swap symmetry,
/// alternation constants of the symmetric/skew squares, and the vanishing of
/// the graded alternation of the associator.  Uses the algebra only as a
/// coefficient carrier.
void graded_calculus(Report &r, const AlgebraPtr &alg, const Options &o);

/// Identities of the quasi-complex (d = [mu, .]): unit adjoint, d I = mu,
/// d mu = 2 alpha, Bianchi, d^2 s = [alpha, s], parity self-bracket facts,
/// and the alternation cross-check of the pre-Lie classification.
void quasi_complex_suite(Report &r, const AlgebraPtr &alg, const Options &o);

/// Curvatures of the left-regular quasi-representation.
void curvature_suite(Report &r, const AlgebraPtr &alg);

/// Function algebra: dimension, closure, the left-multiplication cross-check
/// against the left nucleus, the six derivation-law claims, regularity.
void functions_suite(Report &r, const AlgebraPtr &alg);

/// Smallest N with d^N = 0 on the tested degrees, plus the consistency check
/// order == 2 <=> associative (for mu != 0).
void coherence_suite(Report &r, const AlgebraPtr &alg, const Options &o);

/// Differential forms over one carrier ('C' = vector fields, 'A' =
/// functions): dd u = K u, curvature antisymmetry, the per-degree constants
/// relating the unnormalized alternation differential to the cyclic-sum
/// formula, interior square, and the homotopy identity for the normalized
/// differential.
void forms_suite(Report &r, const AlgebraPtr &alg, char carrier, const Options &o);

/// The truncated graded carrier of cochains of a v_dim-dimensional module:
/// zero torsion, degree-0 left-multiplications are functions (and a
/// homomorphism), every degree-1 basis element has a violating pair.
void truncation_suite(Report &r, int v_dim, int max_arity);

} // namespace suites
} // namespace algeo

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "algeo/algebra.hpp"

namespace algeo {

/// Scalar budget for cochain results (count of coefficients); operations that
/// would exceed it throw BudgetExceeded instead of exhausting memory.
std::size_t scalar_budget();
void set_scalar_budget(std::size_t budget);

/// A dense multilinear map A^{(p+1)} -> A of degree p >= -1 over the basis of
/// a fixed algebra.  deg(f) = arity(f) - 1; degree -1 cochains are elements
/// of A.  Coefficients are indexed by (input tuple, output component), the
/// tuple in mixed radix with the first argument most significant.
class Cochain {
  public:
    Cochain(AlgebraPtr alg, int degree); // zero cochain

    static Cochain element(AlgebraPtr alg, std::vector<Scalar> coords);
    static Cochain identity(AlgebraPtr alg);      // I in C^0
    static Cochain mu(const AlgebraPtr &alg);     // multiplication in C^1
    static Cochain lie(const AlgebraPtr &alg);    // supplied bracket in C^1
    static Cochain from_coefficients(AlgebraPtr alg, int degree, std::vector<Scalar> coef);
    static Cochain basis_cochain(AlgebraPtr alg, int degree, std::size_t tuple, int out);

    const AlgebraPtr &algebra() const { return alg_; }
    int degree() const { return degree_; }
    int arity() const { return degree_ + 1; }
    std::size_t tuple_count() const;
    const std::vector<Scalar> &coefficients() const { return coef_; }

    const Scalar &coef(std::size_t tuple, int out) const;
    Scalar &coef(std::size_t tuple, int out);

    bool is_zero() const;

    Cochain operator-() const;
    Cochain operator+(const Cochain &o) const;
    Cochain operator-(const Cochain &o) const;
    Cochain scaled(const Scalar &s) const;
    bool operator==(const Cochain &o) const;
    bool operator!=(const Cochain &o) const { return !(*this == o); }

    /// Multilinear contraction against degree -1 arguments.
    Cochain eval(const std::vector<Cochain> &args) const;

  private:
    AlgebraPtr alg_;
    int degree_;
    std::vector<Scalar> coef_;
};

/// Insertion composition: g into input slot i of f (1-based), no sign.
Cochain comp_i(const Cochain &f, const Cochain &g, int i);

/// Gerstenhaber comp: signed sum of insertions; zero when deg(f) = -1.
Cochain comp(const Cochain &f, const Cochain &g);

/// Simultaneous insertion of g and h into slots i and j of f (f's original
/// slot numbering).
Cochain insert_pair(const Cochain &f, const Cochain &g, const Cochain &h, int i, int j);

/// Graded commutator [f,g] = f o g - (-1)^{pq} g o f.
Cochain bracket(const Cochain &f, const Cochain &g);

/// Associator of comp: (f o g) o h - f o (g o h).
Cochain associator3(const Cochain &f, const Cochain &g, const Cochain &h);

/// (symmetric, skew) parts of a binary cochain, unnormalized:
/// mu_+ + mu_- = 2 mu.
std::pair<Cochain, Cochain> split_mu(const Cochain &f);

/// Permute input slots: result(a_1..a_k) = f(a_{perm[0]+1}, ..).
Cochain permute_inputs(const Cochain &f, const std::vector<int> &perm);

/// Ungraded alternation over input slots, no normalization factor.
Cochain alt_cochain(const Cochain &f);

using TrilinearOp = std::function<Cochain(const Cochain &, const Cochain &, const Cochain &)>;

/// Graded alternation of a trilinear cochain operation with Koszul signs.
Cochain graded_alt3(const TrilinearOp &op, const Cochain &f, const Cochain &g, const Cochain &h);

} // namespace algeo

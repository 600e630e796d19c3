#include "algeo/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "algeo/hochschild.hpp"
#include "algeo/torsion.hpp"

namespace algeo {
namespace suites {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv64(const std::string &s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::mt19937_64 trial_rng(const std::string &id, std::uint64_t seed, int trial) {
    std::uint64_t s = fnv64(id);
    s ^= seed * 0x9e3779b97f4a7c15ull;
    s ^= (static_cast<std::uint64_t>(trial) + 1) * 0xff51afd7ed558ccdull;
    return std::mt19937_64(s);
}

int sgn_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

Cochain signed_copy(const Cochain &c, int sign) { return sign > 0 ? c : -c; }

/// Runs trials until the first counterexample; one report record either way.
void run_randomized(Report &r, const std::string &suite, const std::string &id,
                    const std::string &identity, std::uint64_t seed, int trials,
                    const std::function<std::optional<std::string>(std::mt19937_64 &, int)> &body) {
    auto t0 = Clock::now();
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(id, seed, t);
        if (auto w = body(rng, t)) {
            r.add_fail(suite, id, identity,
                       "trial " + std::to_string(t) + " (seed " + std::to_string(seed) +
                           "): " + *w,
                       ms_since(t0));
            return;
        }
    }
    r.add({suite, id, identity, CheckStatus::pass, "trials=" + std::to_string(trials),
           ms_since(t0)});
}

void single(Report &r, const std::string &suite, const std::string &id,
            const std::string &identity, bool ok, const std::string &witness, double ms) {
    r.add({suite, id, identity, ok ? CheckStatus::pass : CheckStatus::fail,
           ok ? "" : witness, ms});
}

std::string tuple_str(std::size_t tuple, int arity, int n) {
    std::vector<int> ix(static_cast<std::size_t>(arity));
    for (int a = arity - 1; a >= 0; --a) {
        ix[static_cast<std::size_t>(a)] = static_cast<int>(tuple % n);
        tuple /= static_cast<std::size_t>(n);
    }
    std::ostringstream out;
    out << "(";
    for (int a = 0; a < arity; ++a)
        out << (a ? "," : "") << ix[static_cast<std::size_t>(a)];
    out << ")";
    return out.str();
}

} // namespace

Cochain random_cochain(const AlgebraPtr &alg, int degree, std::mt19937_64 &rng) {
    FieldSpec f = alg->field();
    Cochain c(alg, degree);
    std::size_t tuples = c.tuple_count();
    for (std::size_t t = 0; t < tuples; ++t)
        for (int out = 0; out < alg->dim(); ++out) {
            long long v = f.kind == FieldKind::prime
                              ? static_cast<long long>(rng() % f.modulus)
                              : static_cast<long long>(rng() % 7) - 3;
            c.coef(t, out) = Scalar::from_int(f, v);
        }
    return c;
}

int degree_sum_cap(int n) {
    if (n <= 1)
        return 9;
    int s = 0;
    double w = static_cast<double>(n) * n;
    while (s < 9 && w * n <= 20000.0) {
        w *= n;
        ++s;
    }
    return s;
}

namespace {

std::array<int, 3> pick_degrees(int n, std::mt19937_64 &rng) {
    int cap = degree_sum_cap(n);
    for (;;) {
        int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4),
            r = static_cast<int>(rng() % 4);
        if (p + q + r <= cap)
            return {p, q, r};
    }
}

std::string degrees_str(int p, int q, int r) {
    std::ostringstream out;
    out << "degrees (" << p << "," << q << "," << r << ")";
    return out.str();
}

} // namespace

void graded_calculus(Report &r, const AlgebraPtr &alg, const Options &o) {
    const std::string S = "graded-calculus";
    const int n = alg->dim();
    FieldSpec field = alg->field();

    run_randomized(r, S, "bracket-antisymmetry", "[f,g] = -(-1)^{pq}[g,f]", o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       auto [p, q, r3] = pick_degrees(n, rng);
                       (void)r3;
                       Cochain f = random_cochain(alg, p, rng);
                       Cochain g = random_cochain(alg, q, rng);
                       Cochain lhs = bracket(f, g), rhs = bracket(g, f);
                       if (!(lhs + signed_copy(rhs, sgn_pow(p * q))).is_zero())
                           return degrees_str(p, q, 0);
                       return std::nullopt;
                   });

    run_randomized(
        r, S, "graded-jacobi",
        "(-1)^{pr}[f,[g,h]] + (-1)^{qp}[g,[h,f]] + (-1)^{rq}[h,[f,g]] = 0", o.seed, o.trials,
        [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
            auto [p, q, rr] = pick_degrees(n, rng);
            Cochain f = random_cochain(alg, p, rng);
            Cochain g = random_cochain(alg, q, rng);
            Cochain h = random_cochain(alg, rr, rng);
            Cochain sum = signed_copy(bracket(f, bracket(g, h)), sgn_pow(p * rr)) +
                          signed_copy(bracket(g, bracket(h, f)), sgn_pow(q * p)) +
                          signed_copy(bracket(h, bracket(f, g)), sgn_pow(rr * q));
            if (!sum.is_zero())
                return degrees_str(p, q, rr);
            return std::nullopt;
        });

    run_randomized(r, S, "bracket-leibniz", "[f,[g,h]] = [[f,g],h] + (-1)^{pq}[g,[f,h]]",
                   o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       auto [p, q, rr] = pick_degrees(n, rng);
                       Cochain f = random_cochain(alg, p, rng);
                       Cochain g = random_cochain(alg, q, rng);
                       Cochain h = random_cochain(alg, rr, rng);
                       Cochain lhs = bracket(f, bracket(g, h));
                       Cochain rhs = bracket(bracket(f, g), h) +
                                     signed_copy(bracket(g, bracket(f, h)), sgn_pow(p * q));
                       if (lhs != rhs)
                           return degrees_str(p, q, rr);
                       return std::nullopt;
                   });

    run_randomized(r, S, "insertion-associativity",
                   "f o_i (g o_j h) = (f o_i g) o_{i-1+j} h", o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       auto [p, q, rr] = pick_degrees(n, rng);
                       Cochain f = random_cochain(alg, p, rng);
                       Cochain g = random_cochain(alg, q, rng);
                       Cochain h = random_cochain(alg, rr, rng);
                       int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1));
                       int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(q + 1));
                       Cochain lhs = comp_i(f, comp_i(g, h, j), i);
                       Cochain rhs = comp_i(comp_i(f, g, i), h, i - 1 + j);
                       if (lhs != rhs) {
                           std::ostringstream w;
                           w << degrees_str(p, q, rr) << ", i=" << i << ", j=" << j;
                           return w.str();
                       }
                       return std::nullopt;
                   });

    run_randomized(
        r, S, "insertion-pair-expansion",
        "(f o g) o h - f o (g o h) = sum_{i != j} eps(i,j)(-1)^{(i-1)q+(j-1)r} f o_{(i,j)} (g,h)",
        o.seed, o.trials, [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
            auto [p, q, rr] = pick_degrees(n, rng);
            Cochain f = random_cochain(alg, p, rng);
            Cochain g = random_cochain(alg, q, rng);
            Cochain h = random_cochain(alg, rr, rng);
            Cochain acc(alg, p + q + rr);
            for (int i = 1; i <= p + 1; ++i)
                for (int j = 1; j <= p + 1; ++j) {
                    if (i == j)
                        continue;
                    int sign = sgn_pow((i - 1) * q + (j - 1) * rr);
                    if (i < j)
                        sign *= sgn_pow(q * rr);
                    acc = acc + signed_copy(insert_pair(f, g, h, i, j), sign);
                }
            if (associator3(f, g, h) != acc)
                return degrees_str(p, q, rr);
            return std::nullopt;
        });

    run_randomized(r, S, "associator-swap-sign", "assoc(f,g,h) = (-1)^{qr} assoc(f,h,g)",
                   o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       auto [p, q, rr] = pick_degrees(n, rng);
                       Cochain f = random_cochain(alg, p, rng);
                       Cochain g = random_cochain(alg, q, rng);
                       Cochain h = random_cochain(alg, rr, rng);
                       if (associator3(f, g, h) !=
                           signed_copy(associator3(f, h, g), sgn_pow(q * rr)))
                           return degrees_str(p, q, rr);
                       return std::nullopt;
                   });

    run_randomized(r, S, "alternation-of-symmetric-square", "Alt(assoc of m_+) = 0", o.seed,
                   o.trials, [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       Cochain m = random_cochain(alg, 1, rng);
                       Cochain mp = split_mu(m).first;
                       if (!alt_cochain(comp(mp, mp)).is_zero())
                           return std::string("random binary cochain");
                       return std::nullopt;
                   });

    run_randomized(r, S, "alternation-of-skew-square", "Alt(assoc of m_-) = 4 Alt(assoc of m)",
                   o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       Cochain m = random_cochain(alg, 1, rng);
                       Cochain mm = split_mu(m).second;
                       Cochain lhs = alt_cochain(comp(mm, mm));
                       Cochain rhs = alt_cochain(comp(m, m)).scaled(Scalar::from_int(field, 4));
                       if (lhs != rhs)
                           return std::string("random binary cochain");
                       return std::nullopt;
                   });

    run_randomized(r, S, "alternation-kills-associator",
                   "graded alternation of assoc(f,g,h) vanishes", o.seed, o.trials,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       auto [p, q, rr] = pick_degrees(n, rng);
                       Cochain f = random_cochain(alg, p, rng);
                       Cochain g = random_cochain(alg, q, rng);
                       Cochain h = random_cochain(alg, rr, rng);
                       TrilinearOp op = [](const Cochain &a, const Cochain &b,
                                           const Cochain &c) { return associator3(a, b, c); };
                       if (!graded_alt3(op, f, g, h).is_zero())
                           return degrees_str(p, q, rr);
                       return std::nullopt;
                   });
}

void quasi_complex_suite(Report &r, const AlgebraPtr &alg, const Options &o) {
    const std::string S = "quasi-complex";
    const int n = alg->dim();
    FieldSpec field = alg->field();
    QuasiComplex qc(alg);
    const int small = n >= 8 ? 2 : 8;
    // n^{d+2} coefficients for a degree-d cochain; keep d^2 results in budget
    const int dmax = n >= 8 ? 2 : std::min(3, degree_sum_cap(n));

    run_randomized(r, S, "unit-adjoint", "[I,f] = -deg(f) f", o.seed, small,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       int p = static_cast<int>(rng() % static_cast<std::uint64_t>(dmax + 1));
                       Cochain f = random_cochain(alg, p, rng);
                       if (bracket(qc.identity_cochain(), f) !=
                           f.scaled(Scalar::from_int(field, -p)))
                           return "degree " + std::to_string(p);
                       return std::nullopt;
                   });

    {
        auto t0 = Clock::now();
        bool ok = qc.differential(qc.identity_cochain()) == qc.mu();
        single(r, S, "unit-coboundary", "d I = mu", ok, "d I != mu", ms_since(t0));
    }
    {
        auto t0 = Clock::now();
        bool ok = qc.differential(qc.mu()) == qc.curvature().scaled(Scalar::from_int(field, 2));
        single(r, S, "mu-coboundary", "d mu = 2 alpha", ok, "d mu != 2 alpha", ms_since(t0));
    }
    {
        auto t0 = Clock::now();
        bool ok = qc.bianchi_check();
        single(r, S, "bianchi", "d alpha = 0", ok, "d alpha != 0", ms_since(t0));
    }

    run_randomized(r, S, "square-is-curvature-bracket", "d d s = [alpha, s]", o.seed, small,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       int p = static_cast<int>(rng() % static_cast<std::uint64_t>(dmax + 1));
                       Cochain s = random_cochain(alg, p, rng);
                       if (!qc.square_formula_check(s))
                           return "degree " + std::to_string(p);
                       return std::nullopt;
                   });

    run_randomized(r, S, "even-self-bracket", "[x,x] = 0 for even-degree x", o.seed, small,
                   [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       int p = (rng() % 2 == 0 || dmax < 2) ? 0 : 2;
                       Cochain x = random_cochain(alg, p, rng);
                       if (!bracket(x, x).is_zero())
                           return "degree " + std::to_string(p);
                       return std::nullopt;
                   });

    run_randomized(r, S, "odd-self-bracket-cube", "[x,[x,x]] = 0 for odd-degree x", o.seed,
                   small, [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       Cochain x = random_cochain(alg, 1, rng);
                       if (!bracket(x, bracket(x, x)).is_zero())
                           return std::string("degree 1");
                       return std::nullopt;
                   });

    run_randomized(r, S, "odd-adjoint-square", "[[x,x],t] = 2[x,[x,t]] for odd-degree x",
                   o.seed, small, [&](std::mt19937_64 &rng, int) -> std::optional<std::string> {
                       Cochain x = random_cochain(alg, 1, rng);
                       int p = static_cast<int>(rng() %
                                                static_cast<std::uint64_t>(std::max(1, dmax - 1)));
                       Cochain t = random_cochain(alg, p, rng);
                       Cochain lhs = bracket(bracket(x, x), t);
                       Cochain rhs = bracket(x, bracket(x, t)).scaled(Scalar::from_int(field, 2));
                       if (lhs != rhs)
                           return "t degree " + std::to_string(p);
                       return std::nullopt;
                   });

    {
        auto t0 = Clock::now();
        Cochain mu_minus = split_mu(qc.mu()).second;
        bool commutator_lie = !lie_violation(mu_minus.coefficients(), n, field).has_value();
        bool ok = qc.is_pre_lie() == commutator_lie;
        single(r, S, "pre-lie-crosscheck",
               "Alt(alpha) = 0 iff the commutator satisfies the Jacobi identity", ok,
               "alternation test and direct Jacobi test disagree", ms_since(t0));
    }
    {
        std::ostringstream w;
        w << "associative=" << (qc.is_associative() ? "true" : "false")
          << ", pre_lie=" << (qc.is_pre_lie() ? "true" : "false");
        r.add({S, "classification", "alpha = 0; Alt(alpha) = 0", CheckStatus::pass, w.str(),
               0.0});
    }
}

void curvature_suite(Report &r, const AlgebraPtr &alg) {
    const std::string S = "quasi-representation";
    const int n = alg->dim();
    QuasiComplex qc(alg);
    const Cochain &alpha = qc.curvature();

    auto t0 = Clock::now();
    std::string witness;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
            std::vector<Scalar> ex(static_cast<std::size_t>(n), Scalar::zero(alg->field()));
            std::vector<Scalar> ey = ex;
            ex[static_cast<std::size_t>(x)] = Scalar::one(alg->field());
            ey[static_cast<std::size_t>(y)] = Scalar::one(alg->field());
            Matrix sigma = qc.rep_curvatures(ex, ey).first;
            for (int z = 0; z < n && ok; ++z) {
                std::size_t tuple =
                    (static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n +
                    static_cast<std::size_t>(z);
                for (int k = 0; k < n; ++k)
                    if (sigma.at(k, z) != -alpha.coef(tuple, k)) {
                        ok = false;
                        std::ostringstream w;
                        w << "basis triple (" << x << "," << y << "," << z << "), component "
                          << k;
                        witness = w.str();
                        break;
                    }
            }
        }
    single(r, S, "sigma-is-minus-associator", "sigma(x,y)(z) = -alpha(x,y,z)", ok, witness,
           ms_since(t0));

    if (qc.is_associative()) {
        auto t1 = Clock::now();
        std::string w2;
        bool flat = true;
        for (int x = 0; x < n && flat; ++x)
            for (int y = 0; y < n && flat; ++y) {
                std::vector<Scalar> ex(static_cast<std::size_t>(n), Scalar::zero(alg->field()));
                std::vector<Scalar> ey = ex;
                ex[static_cast<std::size_t>(x)] = Scalar::one(alg->field());
                ey[static_cast<std::size_t>(y)] = Scalar::one(alg->field());
                if (!qc.rep_curvatures(ex, ey).second.is_zero()) {
                    flat = false;
                    w2 = "basis pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        single(r, S, "kappa-flat", "kappa = 0 for associative mu", flat, w2, ms_since(t1));
    } else {
        r.add_skip(S, "kappa-flat", "kappa = 0 for associative mu",
                   "mu is not associative; kappa need not vanish");
    }
}

void functions_suite(Report &r, const AlgebraPtr &alg) {
    const std::string S = "function-algebra";
    const int n = alg->dim();
    TorsionAlgebra ta(alg);

    std::optional<FunctionAlgebra> fa;
    auto t0 = Clock::now();
    try {
        fa.emplace(ta);
    } catch (const ValidationError &e) {
        r.add_fail(S, "closure", "the function space is closed under composition", e.what(),
                   ms_since(t0));
        return;
    }
    single(r, S, "closure", "the function space is closed under composition", true, "",
           ms_since(t0));
    r.add({S, "dimension", "dim of the function algebra", CheckStatus::pass,
           "dim=" + std::to_string(fa->dimension()), 0.0});

    {
        auto t1 = Clock::now();
        KernelBasis nucleus = left_nucleus(alg);
        bool ok = true;
        std::string w;
        for (std::size_t v = 0; v < nucleus.vectors.size() && ok; ++v) {
            // left multiplication by a left-nucleus element is a function
            Matrix lc(n, n, alg->field());
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) {
                    Scalar acc = Scalar::zero(alg->field());
                    for (int i = 0; i < n; ++i)
                        acc.add_mul(nucleus.vectors[v][static_cast<std::size_t>(i)],
                                    alg->mu(i, j, k));
                    lc.at(k, j) = acc;
                }
            if (!fa->coordinates(lc).has_value()) {
                ok = false;
                w = "left-nucleus basis vector " + std::to_string(v);
            }
        }
        single(r, S, "left-nucleus-embedding",
               "left multiplication by the left nucleus lands in the function algebra", ok, w,
               ms_since(t1));
        r.add({S, "left-nucleus-dimension", "dim of the left nucleus", CheckStatus::pass,
               "dim=" + std::to_string(nucleus.vectors.size()), 0.0});
    }

    bool regular = false;
    {
        auto t1 = Clock::now();
        auto viol = regularity_violation(ta, *fa);
        regular = !viol.has_value();
        std::ostringstream w;
        if (viol)
            w << "condition " << viol->condition << " at (phi=" << viol->phi << ", x=" << viol->x
              << ", y=" << viol->y << ", z=" << viol->z << ")";
        else
            w << "regular";
        r.add({S, "regularity", "torsion and associator bilinear over the function algebra",
               CheckStatus::pass, w.str(), ms_since(t1)});
    }
    r.add({S, "torsion", "torsion tensor", CheckStatus::pass,
           ta.torsion().is_zero() ? "zero" : "nonzero", 0.0});

    if (ta.bracket_is_lie() && regular) {
        auto t1 = Clock::now();
        for (const ClaimResult &c : theorem1_suite(ta, *fa))
            single(r, S, "claim-" + c.claim, c.claim, c.pass, c.witness, ms_since(t1));
    } else {
        std::string why = !ta.bracket_is_lie()
                              ? "bracket fails the Jacobi identity; derivation laws need a Lie "
                                "bracket"
                              : "algebra is not regular";
        for (const char *c :
             {"action-stays-in-function-algebra", "action-is-derivation",
              "associator-function-linear", "bracket-derivation-law",
              "connection-derivation-law", "torsion-function-bilinear"})
            r.add_skip(S, std::string("claim-") + c, c, why);
    }
}

void coherence_suite(Report &r, const AlgebraPtr &alg, const Options &o) {
    const std::string S = "coherence";
    QuasiComplex qc(alg);
    auto t0 = Clock::now();
    CoherenceReport cr = coherence_order(qc, o.max_order, o.max_degree);
    std::ostringstream w;
    if (cr.order)
        w << "order=" << *cr.order;
    else {
        w << "none found up to order " << cr.max_order_tested << " on degrees <= "
          << cr.max_degree_tested;
        if (cr.witness)
            w << "; witness: degree " << cr.witness->degree << " basis cochain "
              << tuple_str(cr.witness->tuple, cr.witness->degree + 1, alg->dim()) << "->"
              << cr.witness->out << " survives d^" << cr.witness->surviving_order;
    }
    r.add({S, "order", "smallest N with d^N = 0 on tested degrees", CheckStatus::pass, w.str(),
           ms_since(t0)});

    if (!qc.mu().is_zero()) {
        bool order_two = cr.order.has_value() && *cr.order == 2;
        bool ok = order_two == qc.is_associative();
        single(r, S, "associative-iff-order-two",
               "alpha = 0 iff the differential squares to zero", ok,
               "associativity and coherence order disagree", 0.0);
    } else {
        r.add_skip(S, "associative-iff-order-two",
                   "alpha = 0 iff the differential squares to zero", "mu = 0");
    }
}

namespace {

std::vector<int> decode_tuple(std::size_t tuple, int arity, int n) {
    std::vector<int> ix(static_cast<std::size_t>(arity));
    for (int a = arity - 1; a >= 0; --a) {
        ix[static_cast<std::size_t>(a)] = static_cast<int>(tuple % static_cast<std::size_t>(n));
        tuple /= static_cast<std::size_t>(n);
    }
    return ix;
}

/// The cyclic-sum differential: sum_i (-1)^i D_{X_i} w(..^i..)
/// + sum_{i<j} (-1)^{i+j} w([X_i,X_j], ..^i..^j..).
DForm cyclic_differential(const DForm &w) {
    const CarrierPtr &mc = w.carrier();
    const TorsionAlgebra &ta = mc->torsion_algebra();
    int n = mc->base_dim(), m = mc->dim(), p = w.degree();
    FieldSpec field = mc->field();
    std::size_t tuples = 1;
    for (int a = 0; a <= p; ++a)
        tuples *= static_cast<std::size_t>(n);
    std::vector<Scalar> values(tuples * static_cast<std::size_t>(m), Scalar::zero(field));
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<int> args = decode_tuple(t, p + 1, n);
        std::vector<Scalar> acc(static_cast<std::size_t>(m), Scalar::zero(field));
        for (int i = 0; i <= p; ++i) {
            std::vector<int> rest;
            for (int a = 0; a <= p; ++a)
                if (a != i)
                    rest.push_back(args[static_cast<std::size_t>(a)]);
            std::vector<Scalar> term =
                mc->derivation(args[static_cast<std::size_t>(i)]).apply(w.value(rest));
            for (int c = 0; c < m; ++c)
                if (sgn_pow(i) > 0)
                    acc[static_cast<std::size_t>(c)] += term[static_cast<std::size_t>(c)];
                else
                    acc[static_cast<std::size_t>(c)] -= term[static_cast<std::size_t>(c)];
        }
        for (int i = 0; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                std::vector<Scalar> br = ta.lie_apply(
                    ta.basis_element(args[static_cast<std::size_t>(i)]),
                    ta.basis_element(args[static_cast<std::size_t>(j)]));
                std::vector<int> rest;
                for (int a = 0; a <= p; ++a)
                    if (a != i && a != j)
                        rest.push_back(args[static_cast<std::size_t>(a)]);
                for (int k = 0; k < n; ++k) {
                    if (br[static_cast<std::size_t>(k)].is_zero())
                        continue;
                    std::vector<int> sub;
                    sub.push_back(k);
                    sub.insert(sub.end(), rest.begin(), rest.end());
                    std::vector<Scalar> term = w.value(sub);
                    for (int c = 0; c < m; ++c) {
                        Scalar s = br[static_cast<std::size_t>(k)] *
                                   term[static_cast<std::size_t>(c)];
                        if (sgn_pow(i + j) > 0)
                            acc[static_cast<std::size_t>(c)] += s;
                        else
                            acc[static_cast<std::size_t>(c)] -= s;
                    }
                }
            }
        for (int c = 0; c < m; ++c)
            values[t * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] =
                acc[static_cast<std::size_t>(c)];
    }
    return DForm::from_values(mc, p + 1, std::move(values));
}

DForm random_form(const CarrierPtr &mc, int degree, std::mt19937_64 &rng) {
    int n = mc->base_dim(), m = mc->dim();
    FieldSpec field = mc->field();
    std::size_t tuples = 1;
    for (int a = 0; a < degree; ++a)
        tuples *= static_cast<std::size_t>(n);
    FormTensor t{mc, degree, {}};
    t.values.assign(tuples * static_cast<std::size_t>(m), Scalar::zero(field));
    for (auto &v : t.values)
        v = Scalar::from_int(field, static_cast<long long>(rng() % 7) - 3);
    FormTensor alt = degree >= 2 ? alternate(t) : t;
    return DForm::from_values(mc, degree, std::move(alt.values));
}

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

} // namespace

void forms_suite(Report &r, const AlgebraPtr &alg, char carrier, const Options &o) {
    const std::string S =
        carrier == 'A' ? std::string("forms-functions") : std::string("forms-vector-fields");
    TorsionAlgebra ta(alg);
    FieldSpec field = alg->field();
    int n = alg->dim();

    CarrierPtr mc;
    if (carrier == 'A') {
        FunctionAlgebra fa(ta);
        if (!is_regular(ta, fa)) {
            r.add_skip(S, "carrier", "function-valued forms need a regular algebra",
                       "algebra is not regular; function carrier inadmissible");
            return;
        }
        try {
            mc = std::make_shared<const ModuleCarrier>(ta, ModuleCarrier::Kind::functions);
        } catch (const CarrierClosure &e) {
            r.add_fail(S, "carrier", "the action preserves the function algebra", e.what(),
                       0.0);
            return;
        }
    } else {
        mc = std::make_shared<const ModuleCarrier>(ta, ModuleCarrier::Kind::vector_fields);
    }
    int m = mc->dim();

    auto basis_vec = [&](int i) {
        std::vector<Scalar> e(static_cast<std::size_t>(n), Scalar::zero(field));
        e[static_cast<std::size_t>(i)] = Scalar::one(field);
        return e;
    };

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        bool flat = true;
        int kx = -1, ky = -1;
        for (int u = 0; u < m && ok; ++u) {
            std::vector<Scalar> vals(static_cast<std::size_t>(m), Scalar::zero(field));
            vals[static_cast<std::size_t>(u)] = Scalar::one(field);
            DForm u0 = DForm::from_values(mc, 0, vals);
            FormTensor ddu = hoch_form_differential(hoch_form_differential(u0));
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    Matrix K = curvature_K(*mc, basis_vec(x), basis_vec(y));
                    if (!K.is_zero() && kx < 0) {
                        kx = x;
                        ky = y;
                    }
                    std::vector<Scalar> lhs = ddu.value({x, y});
                    std::vector<Scalar> eu(static_cast<std::size_t>(m), Scalar::zero(field));
                    eu[static_cast<std::size_t>(u)] = Scalar::one(field);
                    std::vector<Scalar> rhs = K.apply(eu);
                    if (lhs != rhs) {
                        ok = false;
                        w = "u=" + std::to_string(u) + ", (X,Y)=(" + std::to_string(x) + "," +
                            std::to_string(y) + ")";
                    }
                }
        }
        single(r, S, "second-differential-is-curvature", "dd u (X,Y) = K(X,Y) u", ok, w,
               ms_since(t0));
        r.add({S, "curvature", "K(X,Y) = 2(D_X D_Y - D_Y D_X - D_[X,Y])", CheckStatus::pass,
               kx < 0 ? std::string("flat")
                      : "nonzero at basis pair (" + std::to_string(kx) + "," +
                            std::to_string(ky) + ")",
               0.0});
        (void)flat;
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                Matrix kxy = curvature_K(*mc, basis_vec(x), basis_vec(y));
                Matrix kyx = curvature_K(*mc, basis_vec(y), basis_vec(x));
                if (!(kxy + kyx).is_zero()) {
                    ok = false;
                    w = "(X,Y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        single(r, S, "curvature-antisymmetry", "K(X,Y) = -K(Y,X)", ok, w, ms_since(t0));
    }

    // constants relating Alt of the term-for-term differential to the
    // cyclic-sum formula, measured per form degree
    const int forms_per_degree = 3;
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        std::ostringstream constants;
        for (int p = 0; p <= 2 && ok; ++p) {
            long long expected = 2 * factorial(p);
            for (int t = 0; t < forms_per_degree && ok; ++t) {
                std::mt19937_64 rng = trial_rng(S + "-normalization", o.seed,
                                                p * forms_per_degree + t);
                DForm wform = random_form(mc, p, rng);
                DForm ce = ce_differential(wform);
                DForm cyc = cyclic_differential(wform);
                Scalar c = Scalar::from_int(field, expected);
                bool match = true;
                for (std::size_t i = 0; i < ce.values().size(); ++i)
                    if (ce.values()[i] != c * cyc.values()[i]) {
                        match = false;
                        break;
                    }
                if (!match) {
                    ok = false;
                    w = "degree " + std::to_string(p) + ", test form " + std::to_string(t);
                }
            }
            if (ok)
                constants << (p ? ", " : "") << "degree " << p << ": " << expected;
        }
        r.add({S, "alternation-normalization",
               "Alt of the term-for-term differential = c_p * cyclic sum, c_p = 2 p!",
               ok ? CheckStatus::pass : CheckStatus::fail, ok ? constants.str() : w,
               ms_since(t0)});
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        std::mt19937_64 rng = trial_rng(S + "-interior", o.seed, 0);
        DForm w2 = random_form(mc, 2, rng);
        for (int x = 0; x < n && ok; ++x) {
            DForm once = interior(basis_vec(x), w2);
            if (!interior(basis_vec(x), DForm::from_values(mc, 1, once.values())).is_zero()) {
                ok = false;
                w = "X=" + std::to_string(x);
            }
        }
        single(r, S, "interior-square", "i_X i_X = 0", ok, w, ms_since(t0));
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (int p = 0; p <= 2 && ok; ++p)
            for (int t = 0; t < forms_per_degree && ok; ++t) {
                std::mt19937_64 rng =
                    trial_rng(S + "-homotopy", o.seed, p * forms_per_degree + t);
                DForm wform = random_form(mc, p, rng);
                for (int x = 0; x < n && ok; ++x) {
                    DForm lhs = lie_derivative(basis_vec(x), wform);
                    DForm rhs = interior(basis_vec(x), cyclic_differential(wform));
                    if (p >= 1) {
                        DForm inner = interior(basis_vec(x), wform);
                        rhs = rhs + cyclic_differential(inner);
                    }
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "degree " + std::to_string(p) + ", X=" + std::to_string(x);
                    }
                }
            }
        single(r, S, "homotopy",
               "L_X = i_X d + d i_X for the degree-normalized differential (constant 1)", ok, w,
               ms_since(t0));
    }

    if (carrier == 'A') {
        auto t0 = Clock::now();
        std::ostringstream w;
        std::mt19937_64 rng = trial_rng(S + "-multilinearity", o.seed, 0);
        DForm w1 = random_form(mc, 1, rng);
        auto viol = ce_differential(w1).a_multilinearity_violation();
        if (viol)
            w << "first violation at phi=" << viol->phi << ", slot " << viol->slot << ", tuple "
              << viol->tuple;
        else
            w << "holds on the sampled form";
        r.add({S, "multilinearity-survey",
               "function-linearity of the differential of a sampled form", CheckStatus::pass,
               w.str(), ms_since(t0)});
    }
}

void truncation_suite(Report &r, int v_dim, int max_arity) {
    const std::string S = "graded-truncation";
    GerstenhaberCarrier gc(v_dim, max_arity);
    const auto &basis = gc.basis();

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (std::size_t x = 0; x < basis.size() && ok; ++x)
            for (std::size_t y = 0; y < basis.size() && ok; ++y) {
                if (basis[x].degree + basis[y].degree > gc.max_degree())
                    continue;
                auto tr = gc.torsion(gc.basis_element(x), gc.basis_element(y));
                if (tr.truncated || !tr.value.is_zero()) {
                    ok = false;
                    w = "basis pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        single(r, S, "torsion-vanishes", "skew part of comp equals the graded commutator", ok,
               w, ms_since(t0));
    }

    std::vector<std::size_t> deg0, deg1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree == 0)
            deg0.push_back(i);
        if (basis[i].degree == 1)
            deg1.push_back(i);
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (std::size_t i : deg0)
            if (gc.function_violation(gc.basis_element(i))) {
                ok = false;
                w = "degree-0 basis element " + std::to_string(i);
                break;
            }
        single(r, S, "degree-zero-left-functions",
               "comp-multiplication by degree-0 elements satisfies the function condition", ok,
               w, ms_since(t0));
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (std::size_t i : deg1)
            if (!gc.function_violation(gc.basis_element(i))) {
                ok = false;
                w = "degree-1 basis element " + std::to_string(i) + " found no witness";
                break;
            }
        single(r, S, "degree-one-witnesses",
               "every degree-1 basis element violates the function condition", ok, w,
               ms_since(t0));
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string w;
        for (std::size_t i : deg0)
            for (std::size_t j : deg0) {
                GradedCochain f = gc.basis_element(i), g = gc.basis_element(j);
                auto fg = gc.comp(f, g);
                Matrix lhs = gc.left_mult_matrix(f) * gc.left_mult_matrix(g);
                Matrix rhs = gc.left_mult_matrix(fg.value);
                if (fg.truncated || !(lhs == rhs)) {
                    ok = false;
                    w = "degree-0 pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        single(r, S, "left-mult-homomorphism", "L_f L_g = L_{f comp g} on degree 0", ok, w,
               ms_since(t0));
    }
}

} // namespace suites
} // namespace algeo

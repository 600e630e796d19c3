#include "algeo/cochain.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace algeo {

namespace {

std::atomic<std::size_t> g_budget{10'000'000};

std::size_t pow_sz(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

void require_same_algebra(const Cochain &a, const Cochain &b) {
    if (a.algebra() != b.algebra())
        throw MixedAlgebras();
}

// Nonzero entries of g grouped by output component.
struct GroupedByOut {
    struct Entry {
        std::size_t tuple;
        const Scalar *value;
    };
    std::vector<std::vector<Entry>> by_out;

    explicit GroupedByOut(const Cochain &g) {
        int n = g.algebra()->dim();
        by_out.resize(n);
        std::size_t tuples = g.tuple_count();
        for (std::size_t t = 0; t < tuples; ++t)
            for (int out = 0; out < n; ++out) {
                const Scalar &v = g.coef(t, out);
                if (!v.is_zero())
                    by_out[out].push_back({t, &v});
            }
    }
};

int parity(int a) { return a & 1; }

} // namespace

std::size_t scalar_budget() { return g_budget.load(); }
void set_scalar_budget(std::size_t budget) { g_budget.store(budget); }

Cochain::Cochain(AlgebraPtr alg, int degree) : alg_(std::move(alg)), degree_(degree) {
    if (degree_ < -1)
        throw ArityMismatch("cochain degree must be >= -1, got " + std::to_string(degree_));
    std::size_t n = static_cast<std::size_t>(alg_->dim());
    std::size_t count = pow_sz(n, arity()) * n;
    if (count > scalar_budget())
        throw BudgetExceeded("cochain of degree " + std::to_string(degree_) + " needs " +
                             std::to_string(count) + " scalars, budget is " +
                             std::to_string(scalar_budget()));
    coef_.assign(count, Scalar::zero(alg_->field()));
}

Cochain Cochain::element(AlgebraPtr alg, std::vector<Scalar> coords) {
    if (static_cast<int>(coords.size()) != alg->dim())
        throw DimensionMismatch("element coordinate length differs from algebra dimension");
    Cochain c(std::move(alg), -1);
    c.coef_ = std::move(coords);
    return c;
}

Cochain Cochain::identity(AlgebraPtr alg) {
    Cochain c(std::move(alg), 0);
    int n = c.alg_->dim();
    for (int i = 0; i < n; ++i)
        c.coef(static_cast<std::size_t>(i), i) = Scalar::one(c.alg_->field());
    return c;
}

Cochain Cochain::mu(const AlgebraPtr &alg) {
    Cochain c(alg, 1);
    int n = alg->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                c.coef(static_cast<std::size_t>(i) * n + j, k) = alg->mu(i, j, k);
    return c;
}

Cochain Cochain::lie(const AlgebraPtr &alg) {
    if (!alg->has_bracket())
        throw ValidationError("algebra '" + alg->name() + "' has no supplied bracket");
    Cochain c(alg, 1);
    int n = alg->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                c.coef(static_cast<std::size_t>(i) * n + j, k) = alg->bracket(i, j, k);
    return c;
}

Cochain Cochain::from_coefficients(AlgebraPtr alg, int degree, std::vector<Scalar> coef) {
    Cochain c(std::move(alg), degree);
    if (coef.size() != c.coef_.size())
        throw DimensionMismatch("coefficient count differs from n^(arity) * n");
    c.coef_ = std::move(coef);
    return c;
}

Cochain Cochain::basis_cochain(AlgebraPtr alg, int degree, std::size_t tuple, int out) {
    Cochain c(std::move(alg), degree);
    c.coef(tuple, out) = Scalar::one(c.alg_->field());
    return c;
}

std::size_t Cochain::tuple_count() const {
    return pow_sz(static_cast<std::size_t>(alg_->dim()), arity());
}

const Scalar &Cochain::coef(std::size_t tuple, int out) const {
    return coef_[tuple * alg_->dim() + out];
}

Scalar &Cochain::coef(std::size_t tuple, int out) { return coef_[tuple * alg_->dim() + out]; }

bool Cochain::is_zero() const {
    return std::all_of(coef_.begin(), coef_.end(), [](const Scalar &s) { return s.is_zero(); });
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto &c : r.coef_)
        c = -c;
    return r;
}

Cochain Cochain::operator+(const Cochain &o) const {
    require_same_algebra(*this, o);
    if (degree_ != o.degree_)
        throw ArityMismatch("cochain sum of different degrees");
    Cochain r = *this;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        r.coef_[i] += o.coef_[i];
    return r;
}

Cochain Cochain::operator-(const Cochain &o) const {
    require_same_algebra(*this, o);
    if (degree_ != o.degree_)
        throw ArityMismatch("cochain difference of different degrees");
    Cochain r = *this;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        r.coef_[i] -= o.coef_[i];
    return r;
}

Cochain Cochain::scaled(const Scalar &s) const {
    Cochain r = *this;
    for (auto &c : r.coef_)
        c *= s;
    return r;
}

bool Cochain::operator==(const Cochain &o) const {
    require_same_algebra(*this, o);
    return degree_ == o.degree_ && coef_ == o.coef_;
}

Cochain Cochain::eval(const std::vector<Cochain> &args) const {
    if (static_cast<int>(args.size()) != arity())
        throw ArityMismatch("eval expects " + std::to_string(arity()) + " arguments, got " +
                            std::to_string(args.size()));
    for (const auto &a : args) {
        require_same_algebra(*this, a);
        if (a.degree() != -1)
            throw ArityMismatch("eval arguments must be degree -1 cochains");
    }
    int n = alg_->dim();
    Cochain r(alg_, -1);
    std::size_t tuples = tuple_count();
    std::size_t radix = pow_sz(static_cast<std::size_t>(n), arity() - 1);
    for (std::size_t t = 0; t < tuples; ++t) {
        // product of argument coordinates along this tuple
        Scalar prod = Scalar::one(alg_->field());
        bool zero = false;
        std::size_t rem = t, div = radix;
        for (int s = 0; s < arity(); ++s) {
            int digit = static_cast<int>(rem / div);
            rem %= div;
            if (s + 1 < arity())
                div /= n;
            const Scalar &a = args[s].coef(0, digit);
            if (a.is_zero()) {
                zero = true;
                break;
            }
            prod *= a;
        }
        if (zero)
            continue;
        for (int out = 0; out < n; ++out) {
            const Scalar &c = coef(t, out);
            if (!c.is_zero())
                r.coef(0, out).add_mul(prod, c);
        }
    }
    return r;
}

Cochain comp_i(const Cochain &f, const Cochain &g, int i) {
    require_same_algebra(f, g);
    int p = f.degree(), q = g.degree();
    if (p < 0)
        throw SlotOutOfRange("comp_i left factor must have degree >= 0");
    if (i < 1 || i > p + 1)
        throw SlotOutOfRange("insertion slot " + std::to_string(i) + " outside [1," +
                             std::to_string(p + 1) + "]");
    std::size_t n = static_cast<std::size_t>(f.algebra()->dim());
    Cochain r(f.algebra(), p + q);

    GroupedByOut gg(g);
    std::size_t g_tuples = pow_sz(n, q + 1);
    std::size_t suffix_radix = pow_sz(n, p + 1 - i); // digits after slot i in f
    std::size_t f_tuples = f.tuple_count();
    int dim = f.algebra()->dim();

    for (std::size_t ft = 0; ft < f_tuples; ++ft) {
        std::size_t suffix = ft % suffix_radix;
        std::size_t head = ft / suffix_radix;
        int m = static_cast<int>(head % n);
        std::size_t prefix = head / n;
        const auto &bucket = gg.by_out[m];
        if (bucket.empty())
            continue;
        for (int out = 0; out < dim; ++out) {
            const Scalar &fv = f.coef(ft, out);
            if (fv.is_zero())
                continue;
            for (const auto &e : bucket) {
                std::size_t rt = (prefix * g_tuples + e.tuple) * suffix_radix + suffix;
                r.coef(rt, out).add_mul(fv, *e.value);
            }
        }
    }
    return r;
}

Cochain comp(const Cochain &f, const Cochain &g) {
    require_same_algebra(f, g);
    int p = f.degree(), q = g.degree();
    if (p == -1)
        return Cochain(f.algebra(), std::max(p + q, -1));
    Cochain r(f.algebra(), p + q);
    for (int i = 1; i <= p + 1; ++i) {
        Cochain term = comp_i(f, g, i);
        if (parity(i - 1) && parity(q))
            r = r - term;
        else
            r = r + term;
    }
    return r;
}

Cochain insert_pair(const Cochain &f, const Cochain &g, const Cochain &h, int i, int j) {
    require_same_algebra(f, g);
    require_same_algebra(f, h);
    int p = f.degree(), q = g.degree(), rdeg = h.degree();
    if (i == j)
        throw SlotCollision("insert_pair slots must differ");
    if (i < 1 || i > p + 1 || j < 1 || j > p + 1)
        throw SlotOutOfRange("insert_pair slot outside [1," + std::to_string(p + 1) + "]");

    std::size_t n = static_cast<std::size_t>(f.algebra()->dim());
    Cochain res(f.algebra(), p + q + rdeg);

    // Normalize to positions lo < hi; glo goes in slot i, h in slot j.
    int lo = std::min(i, j), hi = std::max(i, j);
    const Cochain &at_lo = (i < j) ? g : h;
    const Cochain &at_hi = (i < j) ? h : g;
    GroupedByOut grp_lo(at_lo), grp_hi(at_hi);
    std::size_t lo_tuples = pow_sz(n, at_lo.arity());
    std::size_t hi_tuples = pow_sz(n, at_hi.arity());

    int arity_f = p + 1;
    std::size_t radix_c = pow_sz(n, arity_f - hi);      // digits after slot hi
    std::size_t radix_b = pow_sz(n, hi - lo - 1);       // digits between
    std::size_t f_tuples = f.tuple_count();
    int dim = f.algebra()->dim();

    for (std::size_t ft = 0; ft < f_tuples; ++ft) {
        std::size_t rest = ft;
        std::size_t seg_c = rest % radix_c;
        rest /= radix_c;
        int m_hi = static_cast<int>(rest % n);
        rest /= n;
        std::size_t seg_b = rest % radix_b;
        rest /= radix_b;
        int m_lo = static_cast<int>(rest % n);
        std::size_t seg_a = rest / n;

        const auto &bucket_lo = grp_lo.by_out[m_lo];
        const auto &bucket_hi = grp_hi.by_out[m_hi];
        if (bucket_lo.empty() || bucket_hi.empty())
            continue;
        for (int out = 0; out < dim; ++out) {
            const Scalar &fv = f.coef(ft, out);
            if (fv.is_zero())
                continue;
            for (const auto &el : bucket_lo) {
                Scalar fl = fv;
                fl *= *el.value;
                for (const auto &eh : bucket_hi) {
                    std::size_t rt =
                        ((((seg_a * lo_tuples + el.tuple) * radix_b + seg_b) * hi_tuples +
                          eh.tuple) *
                         radix_c) +
                        seg_c;
                    res.coef(rt, out).add_mul(fl, *eh.value);
                }
            }
        }
    }
    return res;
}

Cochain bracket(const Cochain &f, const Cochain &g) {
    int p = f.degree(), q = g.degree();
    Cochain fg = comp(f, g);
    Cochain gf = comp(g, f);
    if (parity(p) && parity(q))
        return fg + gf;
    return fg - gf;
}

Cochain associator3(const Cochain &f, const Cochain &g, const Cochain &h) {
    return comp(comp(f, g), h) - comp(f, comp(g, h));
}

std::pair<Cochain, Cochain> split_mu(const Cochain &f) {
    if (f.arity() != 2)
        throw ArityMismatch("split_mu expects a binary cochain");
    Cochain swapped = permute_inputs(f, {1, 0});
    return {f + swapped, f - swapped};
}

Cochain permute_inputs(const Cochain &f, const std::vector<int> &perm) {
    int k = f.arity();
    if (static_cast<int>(perm.size()) != k)
        throw ArityMismatch("permutation length differs from arity");
    std::size_t n = static_cast<std::size_t>(f.algebra()->dim());
    Cochain r(f.algebra(), f.degree());
    std::size_t tuples = f.tuple_count();
    std::vector<int> digits(k);
    int dim = f.algebra()->dim();
    for (std::size_t t = 0; t < tuples; ++t) {
        // digits of t, most significant = slot 0
        std::size_t rest = t;
        for (int s = k - 1; s >= 0; --s) {
            digits[s] = static_cast<int>(rest % n);
            rest /= n;
        }
        // (f^perm)(a_1..a_k) = f(a_{perm[0]+1}, ...):
        // coefficient at result tuple t reads f at (t_{perm[0]}, ..).
        std::size_t ft = 0;
        for (int s = 0; s < k; ++s)
            ft = ft * n + digits[perm[s]];
        for (int out = 0; out < dim; ++out) {
            const Scalar &v = f.coef(ft, out);
            if (!v.is_zero())
                r.coef(t, out) = v;
        }
    }
    return r;
}

Cochain alt_cochain(const Cochain &f) {
    int k = f.arity();
    if (k <= 0)
        return f;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Cochain acc(f.algebra(), f.degree());
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Cochain term = permute_inputs(f, perm);
        acc = (inversions & 1) ? acc - term : acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Cochain graded_alt3(const TrilinearOp &op, const Cochain &f, const Cochain &g, const Cochain &h) {
    const Cochain *items[3] = {&f, &g, &h};
    int deg[3] = {f.degree(), g.degree(), h.degree()};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    Cochain acc = Cochain(f.algebra(), f.degree() + g.degree() + h.degree());
    for (const auto &pm : perms) {
        int inversions = 0;
        int koszul = 0; // parity of sum over inverted pairs of d_a*d_b
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (pm[a] > pm[b]) {
                    ++inversions;
                    koszul += parity(deg[pm[a]]) & parity(deg[pm[b]]);
                }
        Cochain term = op(*items[pm[0]], *items[pm[1]], *items[pm[2]]);
        bool negative = ((inversions + koszul) & 1) != 0;
        acc = negative ? acc - term : acc + term;
    }
    return acc;
}

} // namespace algeo

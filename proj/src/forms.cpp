#include "algeo/forms.hpp"

#include <algorithm>
#include <numeric>

namespace algeo {

namespace {

std::size_t pow_sz(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

std::size_t tuple_index(const std::vector<int> &args, int n) {
    std::size_t t = 0;
    for (int a : args)
        t = t * n + a;
    return t;
}

void digits_of(std::size_t t, int n, std::vector<int> &out) {
    for (int s = static_cast<int>(out.size()) - 1; s >= 0; --s) {
        out[s] = static_cast<int>(t % n);
        t /= n;
    }
}

} // namespace

ModuleCarrier::ModuleCarrier(const TorsionAlgebra &ta, Kind kind) : ta_(ta), kind_(kind) {
    int n = ta_.algebra()->dim();
    if (kind_ == Kind::vector_fields) {
        dim_ = n;
        for (int x = 0; x < n; ++x)
            dmat_.push_back(ta_.connection(ta_.basis_element(x)));
    } else {
        fa_ = std::make_shared<FunctionAlgebra>(ta_);
        dim_ = fa_->dimension();
        for (int x = 0; x < n; ++x) {
            Matrix d(dim_, dim_, field());
            for (int a = 0; a < dim_; ++a) {
                Matrix acted = ta_.vf_action(ta_.basis_element(x), fa_->basis()[a]);
                auto coords = fa_->coordinates(acted);
                if (!coords)
                    throw CarrierClosure(
                        "functions carrier requires the vector-field action to preserve the "
                        "function algebra (a regular torsion algebra); X = basis " +
                        std::to_string(x) + ", phi = basis " + std::to_string(a));
                for (int r = 0; r < dim_; ++r)
                    d.at(r, a) = (*coords)[r];
            }
            dmat_.push_back(std::move(d));
        }
    }
}

const FunctionAlgebra &ModuleCarrier::functions() const {
    if (!fa_)
        throw ValidationError("vector-fields carrier has no function-algebra coordinates");
    return *fa_;
}

Matrix ModuleCarrier::derivation_of(const std::vector<Scalar> &x) const {
    Matrix m(dim_, dim_, field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                m.at(r, c).add_mul(x[i], dmat_[i].at(r, c));
    }
    return m;
}

Matrix ModuleCarrier::function_action(int a) const {
    if (kind_ == Kind::vector_fields) {
        // need fa basis to act on C
        throw ValidationError("function_action on the vector-fields carrier requires an "
                              "explicit FunctionAlgebra; use DForm helpers");
    }
    // left composition by basis phi_a in function-algebra coordinates
    int d = dim_;
    Matrix m(d, d, field());
    for (int b = 0; b < d; ++b) {
        const auto &coords = fa_->table(a, b);
        for (int r = 0; r < d; ++r)
            m.at(r, b) = coords[r];
    }
    return m;
}

std::vector<Scalar> FormTensor::value(const std::vector<int> &args) const {
    int n = carrier->base_dim(), m = carrier->dim();
    std::size_t t = tuple_index(args, n);
    std::vector<Scalar> v(m, Scalar::zero(carrier->field()));
    for (int c = 0; c < m; ++c)
        v[c] = values[t * m + c];
    return v;
}

DForm::DForm(CarrierPtr carrier, int degree) : carrier_(std::move(carrier)), degree_(degree) {
    if (degree_ < 0)
        throw DegreeUnderflow("form degree must be >= 0");
    std::size_t count =
        pow_sz(static_cast<std::size_t>(carrier_->base_dim()), degree_) * carrier_->dim();
    values_.assign(count, Scalar::zero(carrier_->field()));
}

DForm DForm::from_values(CarrierPtr carrier, int degree, std::vector<Scalar> values) {
    DForm f(std::move(carrier), degree);
    if (values.size() != f.values_.size())
        throw DimensionMismatch("form value count differs from n^p * dim(M)");
    f.values_ = std::move(values);
    // alternating invariant: adjacent transpositions negate
    int n = f.carrier_->base_dim(), m = f.carrier_->dim();
    std::size_t tuples = pow_sz(static_cast<std::size_t>(n), degree);
    std::vector<int> d(degree);
    for (std::size_t t = 0; t < tuples; ++t) {
        digits_of(t, n, d);
        for (int s = 0; s + 1 < degree; ++s) {
            std::swap(d[s], d[s + 1]);
            std::size_t ts = tuple_index(d, n);
            std::swap(d[s], d[s + 1]);
            for (int c = 0; c < m; ++c)
                if (f.values_[t * m + c] != -f.values_[ts * m + c])
                    throw ValidationError("form is not alternating at tuple " +
                                          std::to_string(t) + ", adjacent slot " +
                                          std::to_string(s));
        }
    }
    return f;
}

std::vector<Scalar> DForm::value(const std::vector<int> &args) const {
    int n = carrier_->base_dim(), m = carrier_->dim();
    std::size_t t = tuple_index(args, n);
    std::vector<Scalar> v(m, Scalar::zero(carrier_->field()));
    for (int c = 0; c < m; ++c)
        v[c] = values_[t * m + c];
    return v;
}

bool DForm::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Scalar &s) { return s.is_zero(); });
}

DForm DForm::operator+(const DForm &o) const {
    if (carrier_ != o.carrier_ || degree_ != o.degree_)
        throw DimensionMismatch("form sum of different carriers or degrees");
    DForm r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i)
        r.values_[i] += o.values_[i];
    return r;
}

DForm DForm::operator-(const DForm &o) const {
    if (carrier_ != o.carrier_ || degree_ != o.degree_)
        throw DimensionMismatch("form difference of different carriers or degrees");
    DForm r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i)
        r.values_[i] -= o.values_[i];
    return r;
}

bool DForm::operator==(const DForm &o) const {
    return carrier_ == o.carrier_ && degree_ == o.degree_ && values_ == o.values_;
}

FormTensor DForm::tensor() const { return {carrier_, degree_, values_}; }

std::optional<DForm::MultilinearityWitness> DForm::a_multilinearity_violation() const {
    const ModuleCarrier &car = *carrier_;
    const TorsionAlgebra &ta = car.torsion_algebra();
    const FunctionAlgebra &fa = car.functions();
    int n = car.base_dim(), m = car.dim();
    std::size_t tuples = pow_sz(static_cast<std::size_t>(n), degree_);
    std::vector<int> d(degree_);
    for (int p = 0; p < fa.dimension(); ++p) {
        const Matrix &phi = fa.basis()[p];
        Matrix act = car.kind() == ModuleCarrier::Kind::functions
                         ? car.function_action(p)
                         : phi; // A acts on C directly
        for (std::size_t t = 0; t < tuples; ++t) {
            digits_of(t, n, d);
            auto base_val = value(d);
            auto want = act.apply(base_val);
            for (int s = 0; s < degree_; ++s) {
                // w(.., phi e_{d[s]}, ..) expanded linearly
                std::vector<Scalar> got(m, Scalar::zero(car.field()));
                for (int b = 0; b < n; ++b) {
                    const Scalar &c = phi.at(b, d[s]);
                    if (c.is_zero())
                        continue;
                    int saved = d[s];
                    d[s] = b;
                    auto v = value(d);
                    d[s] = saved;
                    for (int comp = 0; comp < m; ++comp)
                        got[comp].add_mul(c, v[comp]);
                }
                bool same = true;
                for (int comp = 0; comp < m; ++comp)
                    if (got[comp] != want[comp]) {
                        same = false;
                        break;
                    }
                if (!same)
                    return MultilinearityWitness{p, s, t};
            }
        }
    }
    return std::nullopt;
}

FormTensor hoch_form_differential(const FormTensor &w) {
    const CarrierPtr &car = w.carrier;
    const TorsionAlgebra &ta = car->torsion_algebra();
    int n = car->base_dim(), m = car->dim();
    int a = w.degree; // input arity
    FormTensor r{car, a + 1,
                 std::vector<Scalar>(pow_sz(static_cast<std::size_t>(n), a + 1) * m,
                                     Scalar::zero(car->field()))};
    std::size_t tuples = pow_sz(static_cast<std::size_t>(n), a + 1);
    std::vector<int> d(a + 1), inner(a);
    for (std::size_t t = 0; t < tuples; ++t) {
        digits_of(t, n, d);
        std::vector<Scalar> acc(m, Scalar::zero(car->field()));
        // leading term: D^M_{a_1} w(a_2, ..)
        {
            std::copy(d.begin() + 1, d.end(), inner.begin());
            auto v = car->derivation(d[0]).apply(w.value(inner));
            for (int c = 0; c < m; ++c)
                acc[c] += v[c];
        }
        // middle terms: (-1)^i w(.., [a_i, a_{i+1}]_C, ..)
        for (int i = 1; i <= a; ++i) {
            auto br = ta.lie_apply(ta.basis_element(d[i - 1]), ta.basis_element(d[i]));
            for (int b = 0; b < n; ++b) {
                if (br[b].is_zero())
                    continue;
                // merged argument list
                int pos = 0;
                for (int s = 0; s < i - 1; ++s)
                    inner[pos++] = d[s];
                inner[pos++] = b;
                for (int s = i + 1; s <= a; ++s)
                    inner[pos++] = d[s];
                auto v = w.value(inner);
                for (int c = 0; c < m; ++c) {
                    Scalar term = br[b];
                    term *= v[c];
                    if (i & 1)
                        acc[c] -= term;
                    else
                        acc[c] += term;
                }
            }
        }
        // trailing term: (-1)^a D^M_{a_{a+1}} w(a_1, .., a_a)
        {
            std::copy(d.begin(), d.end() - 1, inner.begin());
            auto v = car->derivation(d[a]).apply(w.value(inner));
            for (int c = 0; c < m; ++c)
                if (a & 1)
                    acc[c] -= v[c];
                else
                    acc[c] += v[c];
        }
        for (int c = 0; c < m; ++c)
            r.values[t * m + c] = std::move(acc[c]);
    }
    return r;
}

FormTensor hoch_form_differential(const DForm &w) { return hoch_form_differential(w.tensor()); }

FormTensor alternate(const FormTensor &t) {
    int n = t.carrier->base_dim(), m = t.carrier->dim();
    int k = t.degree;
    FormTensor r{t.carrier, k, std::vector<Scalar>(t.values.size(),
                                                  Scalar::zero(t.carrier->field()))};
    std::size_t tuples = pow_sz(static_cast<std::size_t>(n), k);
    std::vector<int> perm(k), d(k), pd(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                if (perm[x] > perm[y])
                    ++inversions;
        for (std::size_t tp = 0; tp < tuples; ++tp) {
            digits_of(tp, n, d);
            for (int s = 0; s < k; ++s)
                pd[s] = d[perm[s]];
            std::size_t src = tuple_index(pd, n);
            for (int c = 0; c < m; ++c) {
                if (inversions & 1)
                    r.values[tp * m + c] -= t.values[src * m + c];
                else
                    r.values[tp * m + c] += t.values[src * m + c];
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

DForm ce_differential(const DForm &w) {
    FormTensor d = alternate(hoch_form_differential(w));
    return DForm::from_values(d.carrier, d.degree, std::move(d.values));
}

Matrix curvature_K(const ModuleCarrier &carrier, const std::vector<Scalar> &x,
                   const std::vector<Scalar> &y) {
    Matrix dx = carrier.derivation_of(x), dy = carrier.derivation_of(y);
    Matrix dbr = carrier.derivation_of(carrier.torsion_algebra().lie_apply(x, y));
    Matrix k = dx * dy - dy * dx - dbr;
    return k + k; // the literal factor 2
}

DForm interior(const std::vector<Scalar> &x, const DForm &w) {
    if (w.degree() < 1)
        throw DegreeUnderflow("interior product needs a form of degree >= 1");
    const CarrierPtr &car = w.carrier();
    int n = car->base_dim(), m = car->dim();
    DForm r(car, w.degree() - 1);
    std::vector<Scalar> vals(r.values().size(), Scalar::zero(car->field()));
    std::size_t inner_tuples = pow_sz(static_cast<std::size_t>(n), w.degree() - 1);
    for (int b = 0; b < n; ++b) {
        if (x[b].is_zero())
            continue;
        for (std::size_t t = 0; t < inner_tuples; ++t) {
            std::size_t src = (static_cast<std::size_t>(b) * inner_tuples + t) * m;
            for (int c = 0; c < m; ++c)
                vals[t * m + c].add_mul(x[b], w.values()[src + c]);
        }
    }
    return DForm::from_values(car, w.degree() - 1, std::move(vals));
}

DForm lie_derivative(const std::vector<Scalar> &x, const DForm &w) {
    const CarrierPtr &car = w.carrier();
    const TorsionAlgebra &ta = car->torsion_algebra();
    int n = car->base_dim(), m = car->dim();
    int p = w.degree();
    Matrix dx = car->derivation_of(x);
    std::size_t tuples = pow_sz(static_cast<std::size_t>(n), p);
    std::vector<Scalar> vals(tuples * m, Scalar::zero(car->field()));
    std::vector<int> d(p);
    for (std::size_t t = 0; t < tuples; ++t) {
        digits_of(t, n, d);
        auto acc = dx.apply(w.value(d));
        for (int s = 0; s < p; ++s) {
            auto br = ta.lie_apply(x, ta.basis_element(d[s]));
            for (int b = 0; b < n; ++b) {
                if (br[b].is_zero())
                    continue;
                int saved = d[s];
                d[s] = b;
                auto v = w.value(d);
                d[s] = saved;
                for (int c = 0; c < m; ++c) {
                    Scalar term = br[b];
                    term *= v[c];
                    acc[c] -= term;
                }
            }
        }
        for (int c = 0; c < m; ++c)
            vals[t * m + c] = std::move(acc[c]);
    }
    return DForm::from_values(car, p, std::move(vals));
}

} // namespace algeo

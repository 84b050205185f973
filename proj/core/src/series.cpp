#include "shallowperm/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "shallowperm/error.hpp"

namespace shallowperm {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
    if (mp::denominator(r) == 1) return mp::numerator(r).str();
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Polynomial poly_from_ints(std::initializer_list<long> coeffs) {
    Polynomial p;
    for (long c : coeffs) p.emplace_back(c);
    return p;
}

// ---------------------------------------------------------------------------
// RationalSeries

RationalSeries::RationalSeries(std::vector<Rational> coeffs, bool counting)
    : coeffs_(std::move(coeffs)), counting_(counting) {}

RationalSeries expand_rational(const Polynomial& numerator, const Polynomial& denominator,
                               std::size_t order) {
    if (denominator.empty() || denominator[0] == 0) {
        throw ZeroConstantTerm("denominator has zero constant term");
    }
    std::vector<Rational> s(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = n < numerator.size() ? numerator[n] : Rational(0);
        for (std::size_t i = 1; i <= n && i < denominator.size(); ++i) acc -= denominator[i] * s[n - i];
        s[n] = acc / denominator[0];
    }
    return RationalSeries(std::move(s));
}

namespace {

void check_count(const Rational& c, std::size_t n) {
    if (mp::denominator(c) != 1 || c < 0) {
        throw NonIntegerCount("counting series has coefficient " + to_string(c) + " at n=" +
                              std::to_string(n));
    }
}

}  // namespace

Rational coefficient(const RationalSeries& s, std::size_t n) {
    if (n > s.order() || s.coefficients().empty()) {
        throw OrderExceeded("coefficient " + std::to_string(n) + " requested from a series of order " +
                            std::to_string(s.order()));
    }
    const Rational& c = s.coefficients()[n];
    if (s.counting()) check_count(c, n);
    return c;
}

BigInt integer_coefficient(const RationalSeries& s, std::size_t n) {
    const Rational c = coefficient(s, n);
    if (mp::denominator(c) != 1) {
        throw NonIntegerCount("coefficient " + to_string(c) + " at n=" + std::to_string(n) +
                              " is not an integer");
    }
    return mp::numerator(c);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(Rational c, int exponent) {
    return LaurentPoly(exponent, {std::move(c)});
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    normalize();
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coefficient(int exponent) const {
    if (exponent < low_ || exponent > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Rational LaurentPoly::sum() const {
    Rational s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += by;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_degree(), o.max_degree());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coefficient(e) + o.coefficient(e);
    *this = LaurentPoly(lo, std::move(c));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += Rational(-1) * o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly operator*(const Rational& k, const LaurentPoly& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= k;
    return LaurentPoly(a.low_, std::move(c));
}

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(std::size_t order, std::vector<LaurentPoly> terms)
    : terms_(std::move(terms)) {
    terms_.resize(order + 1);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    const std::size_t m = std::min(order(), o.order());
    terms_.resize(m + 1);
    for (std::size_t n = 0; n <= m; ++n) terms_[n] += o.terms_[n];
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    const std::size_t m = std::min(order(), o.order());
    terms_.resize(m + 1);
    for (std::size_t n = 0; n <= m; ++n) terms_[n] -= o.terms_[n];
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const std::size_t m = std::min(a.order(), b.order());
    LaurentSeries out(m);
    for (std::size_t i = 0; i <= m; ++i) {
        if (a.terms_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= m; ++j) out.terms_[i + j] += a.terms_[i] * b.terms_[j];
    }
    return out;
}

LaurentSeries LaurentSeries::stat_shifted(int by) const {
    LaurentSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.terms_[n] = terms_[n].shifted(by);
    return out;
}

LaurentSeries LaurentSeries::divided_by_size_variable() const {
    if (!terms_[0].is_zero()) {
        throw NegativeDegreeResidue("division by the size variable leaves a negative power");
    }
    if (order() == 0) throw OrderExceeded("cannot divide an order-0 series by the size variable");
    LaurentSeries out(order() - 1);
    for (std::size_t n = 1; n <= order(); ++n) out.terms_[n - 1] = terms_[n];
    return out;
}

LaurentSeries LaurentSeries::inverse() const {
    const LaurentPoly& a0 = terms_[0];
    if (a0.is_zero() || a0.min_degree() != a0.max_degree()) {
        throw ZeroConstantTerm("series inverse needs a nonzero monomial constant term");
    }
    const LaurentPoly inv0 = LaurentPoly::monomial(1 / a0.coefficient(a0.min_degree()), -a0.min_degree());
    LaurentSeries out(order());
    out.terms_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        LaurentPoly acc;
        for (std::size_t i = 1; i <= n; ++i) acc += terms_[i] * out.terms_[n - i];
        out.terms_[n] = Rational(-1) * (inv0 * acc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries::BivariateSeries(std::vector<std::vector<Rational>> rows, VariableRoles roles,
                                 bool counting)
    : rows_(std::move(rows)), roles_(std::move(roles)), counting_(counting) {
    for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n].resize(n + 1);
}

BivariateSeries BivariateSeries::from_laurent(const LaurentSeries& s, VariableRoles roles,
                                              std::size_t order) {
    if (order > s.order()) throw OrderExceeded("laurent series shorter than requested order");
    std::vector<std::vector<Rational>> rows(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const LaurentPoly& p = s[n];
        rows[n].assign(n + 1, Rational(0));
        if (p.is_zero()) continue;
        if (p.min_degree() < 0) {
            throw NegativeDegreeResidue("statistic power " + std::to_string(p.min_degree()) +
                                        " survives at size " + std::to_string(n));
        }
        if (p.max_degree() > static_cast<int>(n)) {
            throw std::logic_error("statistic degree exceeds size at n=" + std::to_string(n));
        }
        for (int k = 0; k <= p.max_degree(); ++k) rows[n][static_cast<std::size_t>(k)] = p.coefficient(k);
    }
    return BivariateSeries(std::move(rows), std::move(roles));
}

Rational BivariateSeries::at(std::size_t n, std::size_t k) const {
    if (n > order() || rows_.empty()) {
        throw OrderExceeded("row " + std::to_string(n) + " requested from a series of order " +
                            std::to_string(order()));
    }
    if (k > n) return 0;
    const Rational& c = rows_[n][k];
    if (counting_) check_count(c, n);
    return c;
}

RationalSeries BivariateSeries::row_sums() const {
    std::vector<Rational> s;
    for (const auto& row : rows_) {
        Rational acc = 0;
        for (const auto& c : row) acc += c;
        s.push_back(acc);
    }
    return RationalSeries(std::move(s), counting_);
}

namespace {

LaurentSeries to_laurent(const Polynomial2& p, std::size_t order) {
    LaurentSeries s(order);
    for (std::size_t n = 0; n < p.size() && n <= order; ++n) s[n] = LaurentPoly(0, p[n]);
    return s;
}

}  // namespace

BivariateSeries expand_rational2(const Polynomial2& numerator, const Polynomial2& denominator,
                                 std::size_t order, VariableRoles roles) {
    if (denominator.empty()) throw ZeroConstantTerm("empty denominator");
    const LaurentSeries s = to_laurent(numerator, order) * to_laurent(denominator, order).inverse();
    return BivariateSeries::from_laurent(s, std::move(roles), order);
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<GfName>& all_gf_names() {
    static const std::vector<GfName> names{
        GfName::T231,   GfName::T123,   GfName::P132,   GfName::P231,
        GfName::P123,   GfName::A321xz, GfName::C231xt, GfName::B231xt,
        GfName::T231xt, GfName::FibOdd, GfName::DescBinom132, GfName::Grassmannian};
    return names;
}

std::string_view to_string(GfName name) noexcept {
    switch (name) {
        case GfName::T231: return "T231";
        case GfName::T123: return "T123";
        case GfName::P132: return "P132";
        case GfName::P231: return "P231";
        case GfName::P123: return "P123";
        case GfName::A321xz: return "A321xz";
        case GfName::C231xt: return "C231xt";
        case GfName::B231xt: return "B231xt";
        case GfName::T231xt: return "T231xt";
        case GfName::FibOdd: return "FibOdd";
        case GfName::DescBinom132: return "DescBinom132";
        case GfName::Grassmannian: return "Grassmannian";
    }
    return "?";
}

std::optional<GfName> parse_gf_name(std::string_view text) {
    for (GfName n : all_gf_names())
        if (to_string(n) == text) return n;
    return std::nullopt;
}

namespace {

Polynomial2 lift(const Polynomial& p) {
    Polynomial2 out;
    for (const auto& c : p) out.push_back({c});
    return out;
}

Polynomial2 poly2(std::initializer_list<std::initializer_list<long>> rows) {
    Polynomial2 out;
    for (auto row : rows) {
        std::vector<Rational> r;
        for (long c : row) r.emplace_back(c);
        out.push_back(std::move(r));
    }
    return out;
}

CatalogEntry univariate(GfName name, std::string description, std::string var,
                        const Polynomial& num, const Polynomial& den, std::size_t order) {
    CatalogEntry e{name, std::move(description), VariableRoles{std::move(var), "", ""},
                   RationalSeries{}, RationalForm{lift(num), lift(den)}, 0};
    RationalSeries raw = expand_rational(num, den, order);
    e.series = RationalSeries(raw.coefficients(), true);
    return e;
}

CatalogEntry bivariate(GfName name, std::string description, VariableRoles roles,
                       const Polynomial2& num, const Polynomial2& den, std::size_t order) {
    CatalogEntry e{name, std::move(description), roles, RationalSeries{}, RationalForm{num, den}, 0};
    e.series = expand_rational2(num, den, order, std::move(roles));
    return e;
}

// Series of shallow 231-avoiders refined by descents, assembled from the
// generating function for those starting with n(n-1):
//   C = t^2 x^4 + t x^2 / (1 - x t) + 3 t^3 x^5 / (1 - x t)^2
//   B = (x + C - C/t) / (1 - C/(x t))
//   T = 1 / (1 - B)
struct Composed231 {
    LaurentSeries c, b, t;
};

Composed231 compose_231(std::size_t order) {
    const std::size_t work = order + 2;
    auto mono = [&](long coeff, std::size_t xdeg, int tdeg) {
        LaurentSeries s(work);
        if (xdeg <= work) s[xdeg] = LaurentPoly::monomial(coeff, tdeg);
        return s;
    };
    const LaurentSeries one = mono(1, 0, 0);
    const LaurentSeries x = mono(1, 1, 0);
    const LaurentSeries geometric = (one - mono(1, 1, 1)).inverse();  // 1/(1 - x t)

    LaurentSeries c = mono(1, 4, 2) + mono(1, 2, 1) * geometric +
                      mono(3, 5, 3) * geometric * geometric;

    const LaurentSeries c_over_xt = c.stat_shifted(-1).divided_by_size_variable();
    LaurentSeries numerator = x + c - c.stat_shifted(-1);
    LaurentSeries b = numerator * (one - c_over_xt).inverse();
    LaurentSeries t = (one - b).inverse();
    return {std::move(c), std::move(b), std::move(t)};
}

CatalogEntry composed(GfName name, std::size_t order) {
    const Composed231 parts = compose_231(order);
    VariableRoles roles{"x", "t", "descents"};
    CatalogEntry e{name, "", roles, RationalSeries{}, std::nullopt, 0};
    switch (name) {
        case GfName::C231xt:
            e.description = "shallow 231-avoiders starting n(n-1), by size x and descents t";
            e.series = BivariateSeries::from_laurent(parts.c, roles, order);
            break;
        case GfName::B231xt:
            e.description = "shallow 231-avoiders starting with n, by size x and descents t";
            e.series = BivariateSeries::from_laurent(parts.b, roles, order);
            break;
        default:
            e.description = "shallow 231-avoiders by size x and descents t";
            e.series = BivariateSeries::from_laurent(parts.t, roles, order);
            break;
    }
    return e;
}

}  // namespace

CatalogEntry catalog(GfName name, std::size_t order, const SeriesLimits& limits) {
    if (order > limits.max_order) {
        throw OrderExceeded("order " + std::to_string(order) + " exceeds the configured cap " +
                            std::to_string(limits.max_order));
    }
    const Polynomial one_minus_x = poly_from_ints({1, -1});
    const Polynomial q = poly_from_ints({1, 0, -2, 0, -1});  // 1 - 2x^2 - x^4
    switch (name) {
        case GfName::T231:
            return univariate(name, "shallow 231-avoiding permutations", "x",
                              poly_from_ints({1, -3, 2, -1, -1, -1}),
                              poly_from_ints({1, -4, 4, -2, -1, -1}), order);
        case GfName::T123: {
            // (1 - x)^4 (1 - 4x^2 + x^4)
            Polynomial den = poly_from_ints({1});
            for (int i = 0; i < 4; ++i) den = poly_multiply(den, one_minus_x);
            den = poly_multiply(den, poly_from_ints({1, 0, -4, 0, 1}));
            return univariate(name, "shallow 123-avoiding permutations", "x",
                              poly_from_ints({1, -3, 0, 11, -13, 7, 6, 3}), den, order);
        }
        case GfName::P132:
            return univariate(name, "shallow 132-avoiding persymmetric permutations", "x",
                              poly_from_ints({1, 0, -1, 2}), poly_multiply(one_minus_x, q), order);
        case GfName::P231:
            return univariate(name, "shallow 231-avoiding persymmetric permutations", "x",
                              poly_from_ints({-1, -1, 2, 1, -2, -1, 1, 1, 2, 0, 1}),
                              poly_from_ints({-1, 0, 4, 0, -4, 0, 2, 0, 1, 0, 1}), order);
        case GfName::P123: {
            // (x - 1)^2 (x + 1) (1 - 2x^2 - x^4)
            Polynomial den = poly_multiply(poly_from_ints({-1, 1}), poly_from_ints({-1, 1}));
            den = poly_multiply(den, poly_from_ints({1, 1}));
            den = poly_multiply(den, q);
            return univariate(name, "shallow 123-avoiding persymmetric permutations", "x",
                              poly_from_ints({1, 0, -2, 1, 0, 1, 1}), den, order);
        }
        case GfName::FibOdd:
            // sum F_{2n-1} x^n with constant term 1 for the empty permutation
            return univariate(name, "F_{2n-1}: shallow 132-, 213- or 321-avoiding permutations", "x",
                              poly_from_ints({1, -2}), poly_from_ints({1, -3, 1}), order);
        case GfName::Grassmannian:
            // 1/(1-z) + z^2/(1-z)^4
            return univariate(name, "shallow Grassmannian permutations", "z",
                              poly_from_ints({1, -3, 4, -1}), poly_from_ints({1, -4, 6, -4, 1}),
                              order);
        case GfName::A321xz:
            return bivariate(name, "shallow 321-avoiders by size z and descents x",
                             VariableRoles{"z", "x", "descents"},
                             poly2({{0}, {1}, {-2, 1}, {1, -1}}),
                             poly2({{1}, {-3}, {3, -2}, {-1, 1}}), order);
        case GfName::DescBinom132:
            // a_{n,k} = binom(2n-2-k, k), obeying a_{n,k} = a_{n-1,k} + 2a_{n-1,k-1} - a_{n-2,k-2}
            return bivariate(name, "shallow 132-avoiders by size x and descents t",
                             VariableRoles{"x", "t", "descents"}, poly2({{1}, {0, -2}, {0, -1, 1}}),
                             poly2({{1}, {-1, -2}, {0, 0, 1}}), order);
        case GfName::C231xt:
        case GfName::B231xt:
        case GfName::T231xt:
            return composed(name, order);
    }
    throw std::invalid_argument("unknown catalog name");
}

bool round_trips(const CatalogEntry& entry) {
    if (!entry.form) return true;
    const auto& form = *entry.form;
    if (!entry.bivariate()) {
        const auto& s = std::get<RationalSeries>(entry.series);
        Polynomial den;
        for (const auto& row : form.denominator) den.push_back(row.empty() ? Rational(0) : row[0]);
        Polynomial num;
        for (const auto& row : form.numerator) num.push_back(row.empty() ? Rational(0) : row[0]);
        const Polynomial product = poly_multiply(s.coefficients(), den);
        for (std::size_t n = 0; n <= s.order(); ++n) {
            const Rational lhs = n < product.size() ? product[n] : Rational(0);
            const Rational rhs = n < num.size() ? num[n] : Rational(0);
            if (lhs != rhs) return false;
        }
        return true;
    }
    const auto& s = std::get<BivariateSeries>(entry.series);
    LaurentSeries series(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) series[n] = LaurentPoly(0, s.rows()[n]);
    const LaurentSeries product = series * to_laurent(form.denominator, s.order());
    const LaurentSeries numerator = to_laurent(form.numerator, s.order());
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (!(product[n] == numerator[n])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Integer sequences

BigInt fibonacci(long m) {
    if (m <= 0) {
        // F_{-k} = (-1)^{k+1} F_k
        const long k = -m;
        BigInt f = k == 0 ? BigInt(0) : fibonacci(k);
        return (k % 2 == 0) ? BigInt(-f) : f;
    }
    BigInt a = 0, b = 1;  // F_0, F_1
    for (long i = 1; i < m; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

const std::vector<ClosedForm>& all_closed_forms() {
    static const std::vector<ClosedForm> forms{
        ClosedForm::FibOdd,         ClosedForm::Involutions132, ClosedForm::Centro132,
        ClosedForm::Involutions231, ClosedForm::Centro231,      ClosedForm::Involutions123,
        ClosedForm::Centro123,      ClosedForm::Involutions321, ClosedForm::Centro321,
        ClosedForm::Persym321,      ClosedForm::StartNNm1_231,  ClosedForm::Interior123,
        ClosedForm::Grassmannian};
    return forms;
}

std::string_view to_string(ClosedForm family) noexcept {
    switch (family) {
        case ClosedForm::FibOdd: return "fibodd";
        case ClosedForm::Involutions132: return "inv132";
        case ClosedForm::Centro132: return "centro132";
        case ClosedForm::Involutions231: return "inv231";
        case ClosedForm::Centro231: return "centro231";
        case ClosedForm::Involutions123: return "inv123";
        case ClosedForm::Centro123: return "centro123";
        case ClosedForm::Involutions321: return "inv321";
        case ClosedForm::Centro321: return "centro321";
        case ClosedForm::Persym321: return "persym321";
        case ClosedForm::StartNNm1_231: return "start-nn1-231";
        case ClosedForm::Interior123: return "interior123";
        case ClosedForm::Grassmannian: return "grassmannian";
    }
    return "?";
}

std::optional<ClosedForm> parse_closed_form(std::string_view text) {
    for (ClosedForm f : all_closed_forms())
        if (to_string(f) == text) return f;
    return std::nullopt;
}

std::size_t min_size(ClosedForm family) noexcept {
    switch (family) {
        case ClosedForm::StartNNm1_231: return 5;
        case ClosedForm::Interior123: return 3;
        case ClosedForm::Grassmannian: return 2;
        default: return 1;
    }
}

BigInt closed_form(ClosedForm family, std::size_t n) {
    if (n < min_size(family)) {
        throw OutOfDomain(std::string(to_string(family)) + " is defined for n >= " +
                          std::to_string(min_size(family)) + ", got n=" + std::to_string(n));
    }
    const long m = static_cast<long>(n);
    switch (family) {
        case ClosedForm::FibOdd: return fibonacci(2 * m - 1);
        case ClosedForm::Involutions132: return fibonacci(m + 1);
        case ClosedForm::Centro132: return (m + 2) / 2;
        case ClosedForm::Involutions231: return BigInt(1) << (m - 1);
        case ClosedForm::Centro231: return BigInt(1) << (m / 2);
        case ClosedForm::Involutions123: return m * m / 4 + 1;
        case ClosedForm::Centro123: return m % 2 == 0 ? BigInt(m * m / 4 + 1) : BigInt(1);
        case ClosedForm::Involutions321: return fibonacci(m + 1);
        case ClosedForm::Centro321: return m % 2 == 0 ? fibonacci(m + 1) : fibonacci(m - 2);
        case ClosedForm::Persym321: return fibonacci(m + 1);
        case ClosedForm::StartNNm1_231: return 3 * m - 11;
        case ClosedForm::Interior123: return 2 * binomial(m - 1, 3) + (m - 1);
        case ClosedForm::Grassmannian: return binomial(m + 1, 3) + 1;
    }
    throw std::invalid_argument("unknown closed form");
}

}  // namespace shallowperm

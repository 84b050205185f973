#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shallowperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, index = degree.
using Polynomial = std::vector<Rational>;

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
Polynomial poly_from_ints(std::initializer_list<long> coeffs);

/// Truncated power series with exact rational coefficients c_0..c_order.
class RationalSeries {
public:
    RationalSeries() = default;
    RationalSeries(std::vector<Rational> coeffs, bool counting = false);

    std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Counting series must have nonnegative integer coefficients; coefficient()
    /// enforces that on every read.
    bool counting() const noexcept { return counting_; }

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    std::vector<Rational> coeffs_;
    bool counting_ = false;
};

/// Unique S with S * denominator = numerator through x^order.
/// Throws ZeroConstantTerm when denominator(0) = 0.
RationalSeries expand_rational(const Polynomial& numerator, const Polynomial& denominator,
                               std::size_t order);

/// Throws OrderExceeded past the truncation order and NonIntegerCount when a
/// counting series yields a negative or fractional coefficient.
Rational coefficient(const RationalSeries& s, std::size_t n);

/// coefficient() narrowed to an integer; the series need not be flagged counting.
BigInt integer_coefficient(const RationalSeries& s, std::size_t n);

/// Laurent polynomial in one variable with exact rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    /// c * t^exponent
    static LaurentPoly monomial(Rational c, int exponent);
    /// Coefficients for t^low, t^(low+1), ...
    LaurentPoly(int low, std::vector<Rational> coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_degree() const noexcept { return low_; }
    int max_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int exponent) const;
    /// Value at t = 1.
    Rational sum() const;

    LaurentPoly shifted(int by) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void normalize();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Power series in a size variable whose coefficients are Laurent
/// polynomials in a statistic variable. Intermediate representation for
/// bivariate generating functions; negative statistic powers are allowed
/// here and rejected when converting to a BivariateSeries.
class LaurentSeries {
public:
    explicit LaurentSeries(std::size_t order) : terms_(order + 1) {}
    LaurentSeries(std::size_t order, std::vector<LaurentPoly> terms);

    std::size_t order() const noexcept { return terms_.size() - 1; }
    const LaurentPoly& operator[](std::size_t n) const { return terms_[n]; }
    LaurentPoly& operator[](std::size_t n) { return terms_[n]; }

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    /// Multiply by statistic^by.
    LaurentSeries stat_shifted(int by) const;
    /// Divide by the size variable. The constant term must vanish; the
    /// result is one order shorter.
    LaurentSeries divided_by_size_variable() const;
    /// Multiplicative inverse; the constant term must be a nonzero monomial.
    LaurentSeries inverse() const;

private:
    std::vector<LaurentPoly> terms_;
};

/// Which formal variable marks which quantity. The size/statistic letters
/// differ between catalog entries, so every entry records them explicitly.
struct VariableRoles {
    std::string size_variable;
    std::string statistic_variable;  // empty for univariate entries
    std::string statistic;           // e.g. "descents"; empty for univariate entries
};

/// Coefficient table c[n][k] for 0 <= k <= n <= order.
class BivariateSeries {
public:
    BivariateSeries() = default;
    BivariateSeries(std::vector<std::vector<Rational>> rows, VariableRoles roles,
                    bool counting = true);

    /// Throws NegativeDegreeResidue if any negative statistic power survives
    /// and std::logic_error if some c[n][k] with k > n is nonzero.
    static BivariateSeries from_laurent(const LaurentSeries& s, VariableRoles roles,
                                        std::size_t order);

    std::size_t order() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
    const VariableRoles& roles() const noexcept { return roles_; }
    bool counting() const noexcept { return counting_; }

    /// c[n][k]; zero for k > n. Same checks as coefficient(RationalSeries).
    Rational at(std::size_t n, std::size_t k) const;
    /// Specialization at statistic = 1.
    RationalSeries row_sums() const;

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
    VariableRoles roles_;
    bool counting_ = true;
};

/// Bivariate polynomial: outer index = size degree, inner = statistic degree.
using Polynomial2 = std::vector<std::vector<Rational>>;

/// Expansion of a bivariate rational function whose denominator has
/// constant term 1 in the size variable.
BivariateSeries expand_rational2(const Polynomial2& numerator, const Polynomial2& denominator,
                                 std::size_t order, VariableRoles roles);

enum class GfName {
    T231,
    T123,
    P132,
    P231,
    P123,
    A321xz,
    C231xt,
    B231xt,
    T231xt,
    FibOdd,
    DescBinom132,
    Grassmannian,
};

const std::vector<GfName>& all_gf_names();
std::string_view to_string(GfName name) noexcept;
std::optional<GfName> parse_gf_name(std::string_view text);

/// A closed rational form N/D. Bivariate entries use the statistic index.
struct RationalForm {
    Polynomial2 numerator;
    Polynomial2 denominator;
};

struct CatalogEntry {
    GfName name;
    std::string description;
    VariableRoles roles;
    std::variant<RationalSeries, BivariateSeries> series;
    /// Present for entries given directly as a rational function; absent for
    /// entries composed by series algebra (C231xt, B231xt, T231xt).
    std::optional<RationalForm> form;
    /// Smallest size at which the entry counts the class it describes.
    std::size_t min_size = 0;

    bool bivariate() const noexcept { return series.index() == 1; }
};

struct SeriesLimits {
    std::size_t default_order = 12;
    std::size_t max_order = 64;
};

/// Throws OrderExceeded beyond limits.max_order and NegativeDegreeResidue
/// if a composed entry fails to cancel its 1/t or 1/(xt) factors.
CatalogEntry catalog(GfName name, std::size_t order, const SeriesLimits& limits = {});

/// series * denominator == numerator through the series order, exactly.
/// Always true for composed entries (they carry no rational form).
bool round_trips(const CatalogEntry& entry);

/// F_m with F_1 = F_2 = 1, extended to m <= 0 by F_m = F_{m+2} - F_{m+1}.
BigInt fibonacci(long m);

/// Zero when k < 0 or k > n.
BigInt binomial(long n, long k);

enum class ClosedForm {
    FibOdd,            // F_{2n-1}: totals for 132, 213, 321
    Involutions132,    // F_{n+1}
    Centro132,         // ceil((n+1)/2)
    Involutions231,    // 2^{n-1}
    Centro231,         // 2^{floor(n/2)}
    Involutions123,    // floor(n^2/4) + 1
    Centro123,         // n^2/4 + 1 (even), 1 (odd)
    Involutions321,    // F_{n+1}
    Centro321,         // F_{n+1} (even), F_{n-2} (odd)
    Persym321,         // F_{n+1}
    StartNNm1_231,     // 3n - 11, n >= 5
    Interior123,       // 2 binom(n-1,3) + (n-1), n >= 3
    Grassmannian,      // binom(n+1,3) + 1, n >= 2
};

const std::vector<ClosedForm>& all_closed_forms();
std::string_view to_string(ClosedForm family) noexcept;
std::optional<ClosedForm> parse_closed_form(std::string_view text);
std::size_t min_size(ClosedForm family) noexcept;

/// Throws OutOfDomain below min_size(family).
BigInt closed_form(ClosedForm family, std::size_t n);

std::string to_string(const Rational& r);

}  // namespace shallowperm

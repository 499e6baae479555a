// real.hpp
// Arbitrary-precision real scalar backed by MPFR.
//
// Every value carries its own binary precision. Results of arithmetic take
// the larger precision of their operands, so precision flows from the data
// rather than from any process-wide default. Literals built from int/double
// are exact and use 64 bits, which never lowers the precision of an
// expression they take part in.

#ifndef HEAWOOD_REAL_HPP
#define HEAWOOD_REAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include <Eigen/Core>

namespace heawood {

/// Working precision in significant decimal digits.
class Precision {
public:
    constexpr explicit Precision(int digits) : digits_(digits) {}

    constexpr int digits() const { return digits_; }

    // Enough bits that a `digits`-digit decimal string survives
    // parse -> print unchanged, plus a few guard bits.
    mpfr_prec_t bits() const;

    friend constexpr bool operator==(Precision, Precision) = default;
    friend constexpr auto operator<=>(Precision, Precision) = default;

private:
    int digits_;
};

inline constexpr Precision kDefaultPrecision{60};

class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(double v);
    Real(double v, Precision p);
    Real(const mpq_class& q, Precision p);

    /// Parses a decimal string, rounding to nearest at precision `p`.
    /// Throws std::invalid_argument on malformed input.
    static Real parse(std::string_view text, Precision p);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    /// Copy rounded (or exactly widened) to precision `p`.
    Real at(Precision p) const;

    double to_double() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific notation with `digits` significant digits, e.g.
    /// "-7.30124164909779e-01". Deterministic for fixed input.
    std::string to_string(int digits) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator-(const Real& a);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b);
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    explicit Real(mpfr_prec_t bits, int /*tag*/);

    mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// pi rounded to precision `p`.
Real pi(Precision p);

/// 10^exponent rounded to precision `p`.
Real pow10(int exponent, Precision p);

/// Exact binary value of `x` as a rational.
mpq_class to_rational(const Real& x);

/// Decimal exponent of |x|, i.e. floor(log10|x|); a very negative value for 0.
long decimal_exponent(const Real& x);

// Overloads so templated numerics can use one spelling for double and Real.
inline double to_double(double x) { return x; }
inline double to_double(const Real& x) { return x.to_double(); }

} // namespace heawood

namespace Eigen {

template <>
struct NumTraits<heawood::Real> : GenericNumTraits<heawood::Real> {
    using Real = heawood::Real;
    using NonInteger = heawood::Real;
    using Nested = heawood::Real;
    using Literal = heawood::Real;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };

    // Eigen asks for these without a value in hand. Only the LU path is
    // used with this scalar and it does not depend on them; they are set
    // far below any working precision this library uses.
    static Real epsilon() { return heawood::pow10(-400, heawood::Precision(20)); }
    static Real dummy_precision() { return heawood::pow10(-300, heawood::Precision(20)); }
    static Real highest() { return heawood::pow10(400, heawood::Precision(20)); }
    static Real lowest() { return -highest(); }
    static int digits10() { return 400; }
};

} // namespace Eigen

#endif // HEAWOOD_REAL_HPP

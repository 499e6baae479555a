#include "heawood/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heawood {

namespace {

constexpr mpfr_prec_t kLiteralBits = 64;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

} // namespace

mpfr_prec_t Precision::bits() const
{
    // log2(10) = 3.32192809...
    const double raw = std::ceil(static_cast<double>(digits_) * 3.3219280948873623);
    return static_cast<mpfr_prec_t>(raw) + 8;
}

Real::Real(mpfr_prec_t bits, int) { mpfr_init2(v_, bits); }

Real::Real() : Real(kLiteralBits, 0) { mpfr_set_zero(v_, 1); }

Real::Real(int v) : Real(kLiteralBits, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(long v) : Real(kLiteralBits, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(double v) : Real(kLiteralBits, 0) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(double v, Precision p) : Real(p.bits(), 0) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const mpq_class& q, Precision p) : Real(p.bits(), 0)
{
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, Precision p)
{
    Real r(p.bits(), 0);
    const std::string s(text);
    char* end = nullptr;
    if (!s.empty())
        mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(r.v_))
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    return r;
}

Real::Real(const Real& other) : Real(other.bits(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(MPFR_PREC_MIN, 0) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::at(Precision p) const
{
    Real r(p.bits(), 0);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::to_string(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& rhs)
{
    if (rhs.bits() > bits())
        mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    if (rhs.bits() > bits())
        mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    if (rhs.bits() > bits())
        mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    if (rhs.bits() > bits())
        mpfr_prec_round(v_, rhs.bits(), MPFR_RNDN);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& a)
{
    Real r(a.bits(), 0);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(wider(a, b), 0);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(wider(a, b), 0);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(wider(a, b), 0);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(wider(a, b), 0);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.v_, b.v_))
        return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0)
        return std::partial_ordering::less;
    if (c > 0)
        return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real sqrt(const Real& x)
{
    Real r = x;
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real abs(const Real& x)
{
    Real r = x;
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x)
{
    Real r = x;
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x)
{
    Real r = x;
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x)
{
    Real r = y.bits() >= x.bits() ? y : x;
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi(Precision p)
{
    Real r(0.0, p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real pow10(int exponent, Precision p)
{
    Real r(10.0, p);
    mpfr_pow_si(r.get(), r.get(), exponent, MPFR_RNDN);
    return r;
}

mpq_class to_rational(const Real& x)
{
    if (!mpfr_number_p(x.get()))
        throw std::domain_error("to_rational: non-finite value");
    mpz_class mant;
    const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.get());
    mpq_class q(mant);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    q.canonicalize();
    return q;
}

long decimal_exponent(const Real& x)
{
    if (x.is_zero())
        return -1000000;
    Real a = abs(x);
    mpfr_log10(a.get(), a.get(), MPFR_RNDD);
    mpfr_floor(a.get(), a.get());
    return mpfr_get_si(a.get(), MPFR_RNDN);
}

} // namespace heawood

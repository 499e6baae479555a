// charpoly.hpp
// Exact integer polynomials, Sturm sequences and real-root isolation, plus
// the degree-79 polynomial whose real roots are the x-coordinates of l4
// over all real solutions of the chain system.

#ifndef HEAWOOD_CHARPOLY_HPP
#define HEAWOOD_CHARPOLY_HPP

#include <stdexcept>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "heawood/real.hpp"

namespace heawood {

/// Integer-coefficient univariate polynomial; coefficient k multiplies T^k.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class BigPoly {
public:
    BigPoly() = default;
    explicit BigPoly(std::vector<mpz_class> coefficients);
    BigPoly(std::initializer_list<long> coefficients);

    /// Parses decimal coefficient strings, constant term first.
    static BigPoly from_strings(const std::vector<std::string_view>& coefficients);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    const mpz_class& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const mpz_class& leading() const { return c_.back(); }

    BigPoly derivative() const;

    /// Sign of p(t) computed exactly.
    int sign_at(const mpq_class& t) const;

    /// Divides out the gcd of the coefficients, keeping the sign.
    BigPoly primitive() const;

    friend bool operator==(const BigPoly&, const BigPoly&) = default;

private:
    void trim();

    std::vector<mpz_class> c_;
};

/// The degree-79 polynomial in x_{l4}.
const BigPoly& charpoly_xl4();

/// The coefficient strings, constant term first.
const std::vector<std::string_view>& charpoly_xl4_strings();

mpq_class eval_exact(const BigPoly& p, const mpq_class& t);

/// Greatest common divisor up to a constant factor, as a primitive
/// polynomial with positive leading coefficient.
BigPoly poly_gcd(const BigPoly& a, const BigPoly& b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a
/// over the rationals with integer result after making it primitive.
BigPoly exact_quotient(const BigPoly& a, const BigPoly& b);

bool is_squarefree(const BigPoly& p);
BigPoly squarefree_part(const BigPoly& p);

class NotSquarefree : public std::runtime_error {
public:
    explicit NotSquarefree(BigPoly squarefree_part)
        : std::runtime_error("polynomial is not squarefree"), part_(std::move(squarefree_part))
    {
    }
    const BigPoly& squarefree_part() const { return part_; }

private:
    BigPoly part_;
};

/// Sturm sequence p, p', -rem(p, p'), ... with each member scaled by a
/// positive rational so that coefficients stay integral and primitive.
class SturmSequence {
public:
    explicit SturmSequence(const BigPoly& p);

    const std::vector<BigPoly>& polys() const { return seq_; }

    int variations_at(const mpq_class& t) const;
    int variations_at_neg_infinity() const;
    int variations_at_pos_infinity() const;

    /// Distinct real roots in (lo, hi].
    int count(const mpq_class& lo, const mpq_class& hi) const;
    int count_all() const;

private:
    std::vector<BigPoly> seq_;
};

/// Distinct real roots of p in (lo, hi]. Throws NotSquarefree when gcd(p,p')
/// is not constant; the exception carries the squarefree part.
int count_real_roots(const BigPoly& p, const mpq_class& lo, const mpq_class& hi);

/// Distinct real roots over the whole line, same error contract.
int count_real_roots(const BigPoly& p);

/// A rational interval (lo, hi] containing exactly one real root, with
/// p(lo) and p(hi) both nonzero.
struct IsolatingInterval {
    mpq_class lo;
    mpq_class hi;
};

/// Disjoint isolating intervals for every distinct real root, ascending.
std::vector<IsolatingInterval> isolate_real_roots(const BigPoly& p);

/// Bisects an isolating interval until it is narrower than 10^-digits and
/// returns the midpoint at `digits` precision. If a bisection point is an
/// exact root it is returned as is.
Real refine_root(const BigPoly& p, const IsolatingInterval& iv, int digits);

/// Power of two bounding |root| for every complex root (Cauchy bound).
mpq_class root_bound(const BigPoly& p);

} // namespace heawood

#endif // HEAWOOD_CHARPOLY_HPP

#include "hecke/rational.hpp"

#include <cmath>
#include <ostream>

namespace hecke {

void Rational::normalize() {
    if (den_.is_zero()) throw internal_error("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = Int::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (num_.is_zero()) den_ = Int(1);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw validation_error("Rational::from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, 0.5 <= |m| < 1
    // 53 doublings make the mantissa integral.
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Int num(mant), den(1);
    if (exp >= 0)
        num *= Int(2).pow(static_cast<unsigned>(exp));
    else
        den = Int(2).pow(static_cast<unsigned>(-exp));
    return Rational(num, den);
}

double Rational::to_double() const {
    mpq_class q(mpz_class(num_.to_string()), mpz_class(den_.to_string()));
    return q.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace hecke

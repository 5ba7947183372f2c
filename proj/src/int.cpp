#include "hecke/int.hpp"

#include <ostream>

namespace hecke {

namespace {

mpz_class mpz_of_i64(long long v) {
    mpz_class z;
    // mpz_class has no long long ctor on LP64-agnostic paths; go through set_si.
    static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

bool mpz_fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

} // namespace

void Int::set_mpz(const mpz_class& z) {
    if (mpz_fits_i64(z)) {
        small_ = mpz_get_si(z.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

mpz_class Int::as_mpz() const { return big_ ? *big_ : mpz_of_i64(small_); }

Int Int::from_string(const std::string& s) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw validation_error("not an integer literal: '" + s + "'");
    Int r;
    r.set_mpz(z);
    return r;
}

long long Int::to_i64() const {
    if (big_) throw internal_error("Int::to_i64: value exceeds 64 bits");
    return small_;
}

double Int::to_double() const {
    return big_ ? big_->get_d() : static_cast<double>(small_);
}

std::string Int::to_string() const {
    return big_ ? big_->get_str() : std::to_string(small_);
}

int Int::sign() const {
    if (big_) return sgn(*big_);
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

Int Int::operator-() const {
    if (!big_) {
        long long r;
        if (!__builtin_sub_overflow(0LL, small_, &r)) return Int(r);
    }
    Int out;
    out.set_mpz(mpz_class(-as_mpz()));
    return out;
}

Int operator+(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    Int out;
    out.set_mpz(mpz_class(a.as_mpz() + b.as_mpz()));
    return out;
}

Int operator-(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    Int out;
    out.set_mpz(mpz_class(a.as_mpz() - b.as_mpz()));
    return out;
}

Int operator*(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    Int out;
    out.set_mpz(mpz_class(a.as_mpz() * b.as_mpz()));
    return out;
}

Int Int::divexact(const Int& d) const {
    if (d.is_zero()) throw internal_error("Int::divexact: division by zero");
    if (!big_ && !d.big_) {
        // INT64_MIN / -1 is the lone overflowing case; route it through GMP.
        if (!(small_ == INT64_MIN && d.small_ == -1)) {
            if (small_ % d.small_ != 0)
                throw internal_error("Int::divexact: inexact division " + to_string() + " / " + d.to_string());
            return Int(small_ / d.small_);
        }
    }
    mpz_class n = as_mpz(), m = d.as_mpz(), q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    if (r != 0)
        throw internal_error("Int::divexact: inexact division " + to_string() + " / " + d.to_string());
    Int out;
    out.set_mpz(q);
    return out;
}

Int Int::fdiv_q(const Int& d) const {
    if (d.is_zero()) throw internal_error("Int::fdiv_q: division by zero");
    if (!big_ && !d.big_ && !(small_ == INT64_MIN && d.small_ == -1)) {
        long long q = small_ / d.small_;
        long long r = small_ % d.small_;
        if (r != 0 && ((r < 0) != (d.small_ < 0))) --q;
        return Int(q);
    }
    mpz_class n = as_mpz(), m = d.as_mpz(), q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    Int out;
    out.set_mpz(q);
    return out;
}

Int Int::fdiv_r(const Int& d) const {
    if (d.is_zero()) throw internal_error("Int::fdiv_r: division by zero");
    if (!big_ && !d.big_ && !(small_ == INT64_MIN && d.small_ == -1)) {
        long long r = small_ % d.small_;
        if (r != 0 && ((r < 0) != (d.small_ < 0))) r += d.small_;
        return Int(r);
    }
    mpz_class n = as_mpz(), m = d.as_mpz(), r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    Int out;
    out.set_mpz(r);
    return out;
}

bool Int::divisible_by(const Int& d) const {
    if (d.is_zero()) return is_zero();
    if (!big_ && !d.big_ && !(small_ == INT64_MIN && d.small_ == -1))
        return small_ % d.small_ == 0;
    mpz_class n = as_mpz(), m = d.as_mpz();
    return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

Int Int::pow(unsigned e) const {
    Int r(1), base(*this);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

Int Int::gcd(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
        unsigned long long x = a.small_ < 0 ? 0ULL - static_cast<unsigned long long>(a.small_)
                                            : static_cast<unsigned long long>(a.small_);
        unsigned long long y = b.small_ < 0 ? 0ULL - static_cast<unsigned long long>(b.small_)
                                            : static_cast<unsigned long long>(b.small_);
        while (y) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        if (x <= static_cast<unsigned long long>(INT64_MAX)) return Int(static_cast<long long>(x));
    }
    mpz_class g, x = a.as_mpz(), y = b.as_mpz();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int out;
    out.set_mpz(g);
    return out;
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // one of them is outside int64 range
}

int Int::cmp(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
    mpz_class x = a.as_mpz(), y = b.as_mpz();
    return ::cmp(x, y) < 0 ? -1 : (::cmp(x, y) > 0 ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

} // namespace hecke

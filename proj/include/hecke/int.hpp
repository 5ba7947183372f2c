#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <iosfwd>

#include <gmpxx.h>

#include "hecke/errors.hpp"

namespace hecke {

// Exact signed integer. Values that fit in 64 bits stay on a checked
// fast path; anything wider is promoted to a GMP integer. The invariant
// is that big_ is non-null exactly when the value does not fit int64,
// so equality and ordering can branch on the representation.
class Int {
public:
    Int() = default;
    Int(long long v) : small_(v) {}
    Int(int v) : small_(v) {}
    explicit Int(const mpz_class& z) { set_mpz(z); }

    static Int from_string(const std::string& s);

    Int(const Int& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;
    ~Int() = default;

    bool fits_i64() const { return !big_; }
    long long to_i64() const;
    double to_double() const;
    std::string to_string() const;

    int sign() const;
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Int operator-() const;
    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    Int& operator+=(const Int& o) { *this = *this + o; return *this; }
    Int& operator-=(const Int& o) { *this = *this - o; return *this; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    // Quotient of an exact division; throws internal_error on remainder.
    Int divexact(const Int& d) const;
    // Floor division and the matching nonnegative residue for d > 0.
    Int fdiv_q(const Int& d) const;
    Int fdiv_r(const Int& d) const;
    bool divisible_by(const Int& d) const;

    Int abs() const;
    Int pow(unsigned e) const;
    static Int gcd(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }
    static int cmp(const Int& a, const Int& b);

    friend std::ostream& operator<<(std::ostream& os, const Int& v);

private:
    long long small_ = 0;
    std::unique_ptr<mpz_class> big_;

    void set_mpz(const mpz_class& z);
    mpz_class as_mpz() const;
};

} // namespace hecke

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

bool is_prime(long long p);

// Name of the double coset GL_n(Z) diag(p^e1, ..., p^en) GL_n(Z) with
// nondecreasing exponents. Two labels are equal iff all fields are equal.
struct CosetLabel {
    int n = 0;
    long long p = 0;
    std::vector<int> exps; // nondecreasing, nonnegative

    CosetLabel() = default;
    CosetLabel(long long prime, std::vector<int> exponents);

    int min_exp() const { return exps.front(); }
    int max_exp() const { return exps.back(); }
    // Total valuation of the determinant.
    int weight() const;
    bool is_scalar() const { return exps.front() == exps.back(); }

    CosetLabel shifted(int delta) const;
    CosetLabel reduced() const { return shifted(-min_exp()); }

    IntMatrix diagonal_matrix() const;
    std::vector<Int> reference_vector() const; // determinantal vector of diagonal_matrix()

    std::string to_string() const;

    friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
        return a.n == b.n && a.p == b.p && a.exps == b.exps;
    }
    friend bool operator!=(const CosetLabel& a, const CosetLabel& b) { return !(a == b); }
    friend bool operator<(const CosetLabel& a, const CosetLabel& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.p != b.p) return a.p < b.p;
        return a.exps < b.exps;
    }
    friend std::ostream& operator<<(std::ostream& os, const CosetLabel& l);
};

// Classify an integral matrix into its double-coset label at the prime p.
// Throws validation_error when some elementary divisor is not a power of p.
CosetLabel label_of_matrix(const IntMatrix& m, long long p);

// The reference n-uple (1, p, ..., p^{n-2}, p^n): determinantal vector of
// diag(1, p, ..., p, p^2).
std::vector<Int> reference_dn(int n, long long p);

// Double coset of a product over several distinct primes, named by its
// per-prime exponent types.
struct CompositeCosetLabel {
    int n = 0;
    std::map<long long, std::vector<int>> exps_by_prime;

    IntMatrix diagonal_matrix() const;
    std::string to_string() const;

    friend bool operator==(const CompositeCosetLabel& a, const CompositeCosetLabel& b) {
        return a.n == b.n && a.exps_by_prime == b.exps_by_prime;
    }
    friend bool operator<(const CompositeCosetLabel& a, const CompositeCosetLabel& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.exps_by_prime < b.exps_by_prime;
    }
};

} // namespace hecke

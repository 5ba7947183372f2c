#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "hecke/int.hpp"

namespace hecke {

// Dense square matrix with exact integer entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Int(0)) {
        if (n < 1) throw validation_error("IntMatrix: dimension must be positive");
    }
    IntMatrix(int n, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    int n() const { return n_; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Int>& entries() const { return e_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    // Lexicographic on the row-major entry sequence.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

private:
    int n_ = 0;
    std::vector<Int> e_;
};

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

// Determinantal minor on strictly increasing 1-based index sets of equal size.
Int minor(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Hermite form of the left coset: the unique upper-triangular C with
// unimodular * m = C, positive diagonal and 0 <= c(i,j) < c(j,j) for i < j.
// Throws validation_error("singular matrix") when det(m) = 0.
IntMatrix hnf(const IntMatrix& m);

// Invariant factors s_1 | s_2 | ... | s_n >= 0 (Smith form diagonal, signs dropped;
// zeros trail once the rank is exhausted).
std::vector<Int> elementary_divisors(const IntMatrix& m);

// d_k = gcd of all k x k minors (0 when they all vanish), computed from the
// invariant factors as d_k = s_1 * ... * s_k.
std::vector<Int> determinantal_vector(const IntMatrix& m);

// Membership criterion for integral double cosets under GL_n(Z) x GL_n(Z):
// equal determinantal vectors.
bool same_double_coset(const IntMatrix& g, const IntMatrix& h);

} // namespace hecke

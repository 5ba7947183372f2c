#include "hecke/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hecke {

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw validation_error("IntMatrix: dimension must be positive");
    if (e_.size() != static_cast<size_t>(n) * n)
        throw validation_error("IntMatrix: entry count does not match dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1) throw validation_error("IntMatrix: dimension must be positive");
    e_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n_)
            throw validation_error("IntMatrix: ragged initializer");
        for (long long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Int(1);
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw validation_error("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) {
                const Int& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t i = 0; i < a.e_.size(); ++i) {
        int c = Int::cmp(a.e_[i], b.e_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (int i = 0; i < m.n(); ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < m.n(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "]" << (i + 1 == m.n() ? "]" : "\n");
    }
    return os;
}

namespace {

// Bareiss fraction-free elimination; every intermediate entry is an exact
// minor of the input, so divisions are exact by construction.
Int bareiss_det(std::vector<Int> a, int n) {
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k) * n + k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[static_cast<size_t>(r) * n + k].is_zero()) { piv = r; break; }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(piv) * n + j]);
            sign = -sign;
        }
        const Int pivot = a[static_cast<size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = a[static_cast<size_t>(i) * n + j] * pivot -
                        a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j];
                a[static_cast<size_t>(i) * n + j] = v.divexact(prev);
            }
        prev = pivot;
    }
    Int d = a[static_cast<size_t>(n - 1) * n + (n - 1)];
    return sign < 0 ? -d : d;
}

} // namespace

Int determinant(const IntMatrix& m) { return bareiss_det(m.entries(), m.n()); }

Int minor(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty())
        throw validation_error("minor: row and column sets must be nonempty and equal-sized");
    auto check = [&](const std::vector<int>& idx) {
        for (size_t t = 0; t < idx.size(); ++t) {
            if (idx[t] < 1 || idx[t] > m.n()) throw validation_error("minor: index out of range");
            if (t > 0 && idx[t] <= idx[t - 1])
                throw validation_error("minor: index set must be strictly increasing");
        }
    };
    check(rows);
    check(cols);
    const int k = static_cast<int>(rows.size());
    std::vector<Int> sub;
    sub.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.push_back(m.at(rows[static_cast<size_t>(i)] - 1,
                                                       cols[static_cast<size_t>(j)] - 1));
    return bareiss_det(std::move(sub), k);
}

IntMatrix hnf(const IntMatrix& m) {
    const int n = m.n();
    std::vector<Int> a = m.entries();
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    auto row_sub = [&](int dst, int src, const Int& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < n; ++j) at(dst, j) -= q * at(src, j);
    };

    for (int j = 0; j < n; ++j) {
        // Euclid on rows j..n-1 until column j has a single nonzero entry at (j,j).
        for (;;) {
            int piv = -1;
            for (int r = j; r < n; ++r) {
                if (at(r, j).is_zero()) continue;
                if (piv < 0 || at(r, j).abs() < at(piv, j).abs()) piv = r;
            }
            if (piv < 0) throw validation_error("singular matrix");
            if (piv != j)
                for (int c = 0; c < n; ++c) std::swap(at(j, c), at(piv, c));
            bool clean = true;
            for (int r = j + 1; r < n; ++r) {
                if (at(r, j).is_zero()) continue;
                row_sub(r, j, at(r, j).fdiv_q(at(j, j)));
                if (!at(r, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (at(j, j).sign() < 0)
            for (int c = 0; c < n; ++c) at(j, c) = -at(j, c);
        // Column reduction above the pivot: 0 <= a(i,j) < a(j,j).
        for (int i = 0; i < j; ++i) row_sub(i, j, at(i, j).fdiv_q(at(j, j)));
    }
    return IntMatrix(n, std::move(a));
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
    const int n = m.n();
    std::vector<Int> a = m.entries();
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };

    std::vector<Int> divs(static_cast<size_t>(n), Int(0));
    for (int s = 0; s < n; ++s) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j) {
                    if (at(i, j).is_zero()) continue;
                    if (pi < 0 || at(i, j).abs() < at(pi, pj).abs()) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                // Rank exhausted; the remaining invariant factors are zero.
                return divs;
            }
            if (pi != s)
                for (int c = 0; c < n; ++c) std::swap(at(s, c), at(pi, c));
            if (pj != s)
                for (int r = 0; r < n; ++r) std::swap(at(r, s), at(r, pj));
            bool clean = true;
            for (int r = s + 1; r < n; ++r) {
                Int q = at(r, s).fdiv_q(at(s, s));
                if (!q.is_zero())
                    for (int c = s; c < n; ++c) at(r, c) -= q * at(s, c);
                if (!at(r, s).is_zero()) clean = false;
            }
            for (int c = s + 1; c < n; ++c) {
                Int q = at(s, c).fdiv_q(at(s, s));
                if (!q.is_zero())
                    for (int r = s; r < n; ++r) at(r, c) -= q * at(r, s);
                if (!at(s, c).is_zero()) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide the rest of the submatrix; if not, fold the
            // offending row in and restart the step.
            bool divides = true;
            for (int i = s + 1; i < n && divides; ++i)
                for (int j = s + 1; j < n && divides; ++j)
                    if (!at(i, j).divisible_by(at(s, s))) {
                        for (int c = s; c < n; ++c) at(s, c) += at(i, c);
                        divides = false;
                    }
            if (divides) break;
        }
        divs[static_cast<size_t>(s)] = at(s, s).abs();
    }
    return divs;
}

std::vector<Int> determinantal_vector(const IntMatrix& m) {
    std::vector<Int> divs = elementary_divisors(m);
    std::vector<Int> d(divs.size());
    Int acc(1);
    for (size_t k = 0; k < divs.size(); ++k) {
        acc *= divs[k];
        d[k] = acc;
    }
    return d;
}

bool same_double_coset(const IntMatrix& g, const IntMatrix& h) {
    if (g.n() != h.n()) throw validation_error("same_double_coset: dimension mismatch");
    return determinantal_vector(g) == determinantal_vector(h);
}

} // namespace hecke

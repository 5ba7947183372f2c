#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hecke/label.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// Default cap on materialized representatives per double coset.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// phi_r(x) = prod_{k=1}^r (x^k - 1), phi_0 = 1.
Rational phi(int r, const Rational& x);
Int phi_int(int r, const Int& x);

// Degree of diag(1,...,1, p,...,p (i), p^2,...,p^2 (j)):
// p^{j(n-i-j)} phi_n(p) / (phi_{n-i-j}(p) phi_i(p) phi_j(p)).
Int degree_formula_dij(int n, long long p, int i, int j);

// Closed-form degree after stripping the scalar part, when the reduced
// exponent pattern is 0^a 1^i 2^j or one of the shapes
// (0, 2^{n-3}, 3, 3), (0, 2^{n-2}, 4), (0, 0, 1^{n-3}, 3) for n >= 4.
std::optional<Int> closed_form_degree(const CosetLabel& label);

// Number of right cosets in the double coset: closed form when available,
// otherwise an enumeration count (throws budget_error past the budget).
Int degree(const CosetLabel& label, std::uint64_t budget = kDefaultBudget);

// Sorted table of the canonical upper-triangular column-reduced
// representatives. Stored flat (row-major int64 per representative).
class CosetTable {
public:
    CosetTable(CosetLabel label, std::vector<std::int64_t> flat);

    const CosetLabel& label() const { return label_; }
    int n() const { return label_.n; }
    std::size_t size() const { return flat_.size() / stride(); }
    const std::int64_t* rep_ptr(std::size_t idx) const { return flat_.data() + idx * stride(); }
    IntMatrix rep(std::size_t idx) const;
    const std::vector<std::int64_t>& flat() const { return flat_; }

private:
    std::size_t stride() const { return static_cast<std::size_t>(label_.n) * label_.n; }
    CosetLabel label_;
    std::vector<std::int64_t> flat_;
};

// Visit every canonical representative (row-major int64, n*n entries per call)
// in unspecified order; returns the count. Throws budget_error when the count
// would exceed `limit`.
std::uint64_t enumerate_visit(const CosetLabel& label, std::uint64_t limit,
                              const std::function<void(const std::int64_t*)>& visit);

std::uint64_t count_right_cosets(const CosetLabel& label, std::uint64_t limit);

CosetTable enumerate_right_cosets(const CosetLabel& label, std::uint64_t limit = kDefaultBudget);

// R0: upper-triangular, diagonal all p, off-diagonals in [0, p), determinantal
// vector (1, p, ..., p^{n-2}, p^n). Sorted like a coset table.
std::vector<IntMatrix> r0_set(int n, long long p);
Int r0_cardinality_formula(int n, long long p); // ((n-1)p^n - np^{n-1} + 1)/(p-1)

// R1: upper-triangular column-reduced, diagonal a permutation of
// (1, p, ..., p, p^2) with exactly one 1 and one p^2, and p | c(i,j) whenever
// p | c(i,i). Sorted.
std::vector<IntMatrix> r1_set(int n, long long p);
Int r1_cardinality_formula(int n, long long p);

// Partition of R0 by the interior-zero condition
// (c(i,j) = 0 for all 2 <= i < j <= n-1, 1-based).
struct R0Split {
    std::vector<IntMatrix> interior_zero;    // C0 * D lands in diag(p, p^2...p^2, p^3)
    std::vector<IntMatrix> interior_nonzero; // C0 * D lands in diag(p, p, p^2...p^2, p^3, p^3)
    CosetLabel target_interior_zero;
    CosetLabel target_interior_nonzero;
};
R0Split r0_split(int n, long long p);
Int r0_split_interior_zero_formula(int n, long long p);    // 2p^{n-1} - p - 1
Int r0_split_interior_nonzero_formula(int n, long long p); // p^2((n-3)p^{n-2} - (n-2)p^{n-3} + 1)/(p-1)

} // namespace hecke

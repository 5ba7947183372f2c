#include "hecke/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace hecke {

Rational phi(int r, const Rational& x) {
    if (r < 0) throw validation_error("phi: r must be nonnegative");
    Rational acc(1);
    Rational xk(1);
    for (int k = 1; k <= r; ++k) {
        xk *= x;
        acc *= xk - Rational(1);
    }
    return acc;
}

Int phi_int(int r, const Int& x) {
    if (r < 0) throw validation_error("phi: r must be nonnegative");
    Int acc(1), xk(1);
    for (int k = 1; k <= r; ++k) {
        xk *= x;
        acc *= xk - Int(1);
    }
    return acc;
}

Int degree_formula_dij(int n, long long p, int i, int j) {
    if (n < 1 || i < 0 || j < 0 || i + j > n)
        throw validation_error("degree_formula_dij: need 0 <= i, j and i + j <= n");
    if (!is_prime(p)) throw validation_error("degree_formula_dij: p is not prime");
    Int P(p);
    Int num = P.pow(static_cast<unsigned>(j * (n - i - j))) * phi_int(n, P);
    Int den = phi_int(n - i - j, P) * phi_int(i, P) * phi_int(j, P);
    return num.divexact(den);
}

namespace {

// Matches 0^a 1^i 2^j with a >= 1 (the exponent tuple is reduced).
bool is_dij_pattern(const std::vector<int>& e, int& i, int& j) {
    int a = 0, ones = 0, twos = 0;
    for (int v : e) {
        if (v == 0) ++a;
        else if (v == 1) ++ones;
        else if (v == 2) ++twos;
        else return false;
    }
    i = ones;
    j = twos;
    return true;
}

bool matches_shape(const std::vector<int>& e, const std::vector<int>& shape) { return e == shape; }

std::vector<int> shape_0_2s_3_3(int n) {
    std::vector<int> s{0};
    s.insert(s.end(), static_cast<size_t>(n - 3), 2);
    s.push_back(3);
    s.push_back(3);
    return s;
}
std::vector<int> shape_0_2s_4(int n) {
    std::vector<int> s{0};
    s.insert(s.end(), static_cast<size_t>(n - 2), 2);
    s.push_back(4);
    return s;
}
std::vector<int> shape_0_0_1s_3(int n) {
    std::vector<int> s{0, 0};
    s.insert(s.end(), static_cast<size_t>(n - 3), 1);
    s.push_back(3);
    return s;
}

} // namespace

std::optional<Int> closed_form_degree(const CosetLabel& label) {
    const CosetLabel red = label.reduced();
    const int n = red.n;
    const Int P(red.p);
    if (red.is_scalar()) return Int(1);
    int i = 0, j = 0;
    if (is_dij_pattern(red.exps, i, j)) return degree_formula_dij(n, red.p, i, j);
    if (n >= 4) {
        if (matches_shape(red.exps, shape_0_2s_3_3(n)) || matches_shape(red.exps, shape_0_0_1s_3(n))) {
            // p^{n+1} (p^{n-2}-1)(p^{n-1}-1)(p^n-1) / ((p-1)^2 (p^2-1))
            Int num = P.pow(static_cast<unsigned>(n + 1)) *
                      (P.pow(static_cast<unsigned>(n - 2)) - Int(1)) *
                      (P.pow(static_cast<unsigned>(n - 1)) - Int(1)) *
                      (P.pow(static_cast<unsigned>(n)) - Int(1));
            Int den = (P - Int(1)) * (P - Int(1)) * (P * P - Int(1));
            return num.divexact(den);
        }
        if (matches_shape(red.exps, shape_0_2s_4(n))) {
            // p^{2n-1} (p^{n-1}-1)(p^n-1) / (p-1)^2
            Int num = P.pow(static_cast<unsigned>(2 * n - 1)) *
                      (P.pow(static_cast<unsigned>(n - 1)) - Int(1)) *
                      (P.pow(static_cast<unsigned>(n)) - Int(1));
            Int den = (P - Int(1)) * (P - Int(1));
            return num.divexact(den);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration of canonical representatives.
//
// A representative is upper-triangular with diagonal (p^{a_1}, ..., p^{a_n}),
// entries 0 <= c(i,j) < p^{a_j}, and prescribed determinantal valuations
// sigma_k = e_1 + ... + e_k. The diagonal composition ranges over all ways to
// split the total valuation; columns are filled left to right. For each new
// column the constraints "every k x k minor of the filled block is divisible
// by p^{sigma_k}" are linear congruences in the column entries, so the valid
// columns are read off from a Smith reduction of the constraint matrix over
// Z/p^a instead of scanning the full residue box.
// ---------------------------------------------------------------------------

namespace {

using std::int64_t;
using std::uint64_t;

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

// x^-1 mod m for x coprime to m.
int64_t invmod(int64_t x, int64_t m) {
    int64_t a = x % m, b = m, u = 1, v = 0;
    while (b) {
        int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    if (a != 1 && a != -1) throw internal_error("invmod: not invertible");
    if (a == -1) u = -u;
    u %= m;
    return u < 0 ? u + m : u;
}

int valuation_capped(int64_t v, long long p, int cap) {
    if (v == 0) return cap;
    int w = 0;
    while (w < cap && v % p == 0) {
        v /= p;
        ++w;
    }
    return w;
}

struct LinearForm {
    std::vector<int64_t> coeff; // one per unknown, mod pK
    int64_t cnst = 0;           // mod pK
    int t = 0;                  // required valuation
};

struct ColumnSolver {
    int n;
    long long p;
    std::vector<int> exps;  // reduced target, nondecreasing, exps[0] == 0
    std::vector<int> sigma; // sigma[k] for k = 1..n (sigma[0] = 0)
    int W = 0, K = 0;
    int64_t pK = 0;
    uint64_t limit;
    const std::function<void(const int64_t*)>* visit; // nullable
    std::optional<std::vector<int>> only_comp;        // restrict to one diagonal composition

    uint64_t count = 0;
    std::vector<int64_t> M;     // n*n working matrix
    std::vector<int64_t> pPow;  // p^0..p^K
    std::vector<int> comp;

    ColumnSolver(const CosetLabel& reduced, uint64_t lim,
                 const std::function<void(const int64_t*)>* vis)
        : n(reduced.n), p(reduced.p), exps(reduced.exps), limit(lim), visit(vis) {
        sigma.assign(static_cast<size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) sigma[static_cast<size_t>(k)] = sigma[static_cast<size_t>(k - 1)] + exps[static_cast<size_t>(k - 1)];
        W = sigma[static_cast<size_t>(n)];
        K = W + 1;
        pPow.assign(static_cast<size_t>(K) + 1, 1);
        for (int i = 1; i <= K; ++i) {
            if (pPow[static_cast<size_t>(i - 1)] > (int64_t{1} << 62) / p)
                throw budget_error("enumeration scale p^" + std::to_string(K) +
                                   " exceeds the supported range");
            pPow[static_cast<size_t>(i)] = pPow[static_cast<size_t>(i - 1)] * p;
        }
        pK = pPow[static_cast<size_t>(K)];
        M.assign(static_cast<size_t>(n) * n, 0);
    }

    int64_t& at(int i, int j) { return M[static_cast<size_t>(i) * n + j]; }

    void run() {
        std::vector<int> a(static_cast<size_t>(n), 0);
        gen_comp(a, 0, W);
    }

    // Diagonal compositions of the total valuation; a composition survives
    // only if every k of its smallest entries sum to at least sigma_k (each
    // principal k x k minor is a minor, so this is necessary).
    void gen_comp(std::vector<int>& a, int pos, int rem) {
        if (pos == n - 1) {
            a[static_cast<size_t>(pos)] = rem;
            std::vector<int> s = a;
            std::sort(s.begin(), s.end());
            int acc = 0;
            for (int k = 1; k <= n; ++k) {
                acc += s[static_cast<size_t>(k - 1)];
                if (acc < sigma[static_cast<size_t>(k)]) return;
            }
            if (only_comp && a != *only_comp) return;
            comp = a;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) at(i, j) = (i == j) ? pPow[static_cast<size_t>(comp[static_cast<size_t>(i)])] : 0;
            fill_column(0);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            a[static_cast<size_t>(pos)] = v;
            gen_comp(a, pos + 1, rem - v);
        }
    }

    // Minor of the filled region, rows/cols as bitmasks, mod pK. Expands along
    // the lowest column; the memo is only valid while columns < j are frozen,
    // so each fill_column call owns its own map.
    int64_t minor_mod(uint32_t rows, uint32_t cols,
                      std::unordered_map<uint64_t, int64_t>& memo) {
        if (rows == 0) return 1 % pK;
        uint64_t key = (static_cast<uint64_t>(rows) << 32) | cols;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int c = __builtin_ctz(cols);
        uint32_t cols_rest = cols & (cols - 1);
        int64_t det = 0;
        int posr = 0;
        for (uint32_t rm = rows; rm; rm &= rm - 1, ++posr) {
            int r = __builtin_ctz(rm);
            int64_t v = at(r, c) % pK;
            if (v != 0) {
                int64_t sub = minor_mod(rows & ~(uint32_t{1} << r), cols_rest, memo);
                int64_t term = mulmod(v, sub, pK);
                det = (posr % 2 == 0) ? det + term : det - term;
                det %= pK;
            }
        }
        if (det < 0) det += pK;
        memo.emplace(key, det);
        return det;
    }

    void emit() {
        if (++count > limit) throw budget_error("degree budget exceeded");
        if (visit && *visit) (*visit)(M.data());
    }

    // Smith-style check that the invariant factor valuations of the finished
    // matrix are exactly the target exponents. Destroys its copy of M.
    bool type_matches() {
        std::vector<int64_t> a = M;
        auto e = [&](int i, int j) -> int64_t& { return a[static_cast<size_t>(i) * n + j]; };
        for (int s = 0; s < n; ++s) {
            int bi = -1, bj = -1, bv = K;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j) {
                    if (e(i, j) == 0) continue;
                    int v = valuation_capped(e(i, j), p, K);
                    if (v < bv) {
                        bv = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bv != exps[static_cast<size_t>(s)]) return false; // pivot valuations arrive sorted
            if (bi != s)
                for (int c = 0; c < n; ++c) std::swap(e(s, c), e(bi, c));
            if (bj != s)
                for (int r = 0; r < n; ++r) std::swap(e(r, s), e(r, bj));
            const int64_t mod_rest = pPow[static_cast<size_t>(K - bv)];
            const int64_t unit_inv = invmod(e(s, s) / pPow[static_cast<size_t>(bv)], mod_rest);
            for (int r = s + 1; r < n; ++r) {
                if (e(r, s) == 0) continue;
                int64_t m = mulmod(e(r, s) / pPow[static_cast<size_t>(bv)], unit_inv, mod_rest);
                for (int c = s; c < n; ++c) {
                    e(r, c) = (e(r, c) - mulmod(m, e(s, c), pK)) % pK;
                    if (e(r, c) < 0) e(r, c) += pK;
                }
            }
            for (int c = s + 1; c < n; ++c) {
                if (e(s, c) == 0) continue;
                int64_t m = mulmod(e(s, c) / pPow[static_cast<size_t>(bv)], unit_inv, mod_rest);
                for (int r = s; r < n; ++r) {
                    e(r, c) = (e(r, c) - mulmod(m, e(r, s), pK)) % pK;
                    if (e(r, c) < 0) e(r, c) += pK;
                }
            }
        }
        return true;
    }

    void fill_column(int j) {
        if (j == n) {
            if (type_matches()) emit();
            return;
        }
        const int d = j; // unknowns: rows 0..j-1 of column j
        const int a = comp[static_cast<size_t>(j)];
        const int64_t pa = pPow[static_cast<size_t>(a)];

        // Assemble the divisibility constraints contributed by column j.
        std::unordered_map<uint64_t, int64_t> memo;
        std::vector<LinearForm> forms;
        std::vector<int> tau(static_cast<size_t>(n)), omega(static_cast<size_t>(n));
        for (int k = 1; k <= j + 1; ++k) {
            const int t = sigma[static_cast<size_t>(k)];
            if (t == 0) continue;
            // tau' runs over (k-1)-subsets of {0..j-1}, omega over k-subsets of {0..j}.
            std::vector<int> tsel(static_cast<size_t>(k - 1)), osel(static_cast<size_t>(k));
            iterate_subsets(j, k - 1, tsel, [&](const std::vector<int>& tp) {
                uint32_t colmask = 0;
                for (int c : tp) colmask |= uint32_t{1} << c;
                iterate_subsets(j + 1, k, osel, [&](const std::vector<int>& om) {
                    LinearForm f;
                    f.coeff.assign(static_cast<size_t>(d), 0);
                    f.t = t;
                    uint32_t rowsmask = 0;
                    for (int r : om) rowsmask |= uint32_t{1} << r;
                    bool nontrivial = false;
                    for (int pos = 0; pos < k; ++pos) {
                        const int r = om[static_cast<size_t>(pos)];
                        int64_t cof = minor_mod(rowsmask & ~(uint32_t{1} << r), colmask, memo);
                        if (cof == 0) continue;
                        // column j sits last in the sorted column set
                        if ((pos + k - 1) % 2 != 0) cof = pK - cof;
                        if (r < j) {
                            f.coeff[static_cast<size_t>(r)] = (f.coeff[static_cast<size_t>(r)] + cof) % pK;
                            nontrivial = true;
                        } else {
                            f.cnst = (f.cnst + mulmod(cof, pa % pK, pK)) % pK;
                        }
                    }
                    const int64_t pt = pPow[static_cast<size_t>(std::min(f.t, K))];
                    bool relevant = f.cnst % pt != 0;
                    for (int64_t c : f.coeff)
                        if (c % pt != 0) relevant = true;
                    if (relevant && (nontrivial || f.cnst % pt != 0)) forms.push_back(std::move(f));
                });
            });
        }

        solve_and_descend(j, d, a, pa, forms);
    }

    template <typename Fn>
    static void iterate_subsets(int limit, int k, std::vector<int>& sel, const Fn& fn) {
        if (k == 0) {
            std::vector<int> empty_or_sel(sel.begin(), sel.begin() + 0);
            // still call with the (possibly empty) selection collected so far
            fn(std::vector<int>(sel.begin(), sel.end()));
            return;
        }
        subsets_rec(limit, k, 0, 0, sel, fn);
    }

    template <typename Fn>
    static void subsets_rec(int limit, int k, int start, int depth, std::vector<int>& sel,
                            const Fn& fn) {
        if (depth == k) {
            fn(sel);
            return;
        }
        for (int v = start; v <= limit - (k - depth); ++v) {
            sel[static_cast<size_t>(depth)] = v;
            subsets_rec(limit, k, v + 1, depth + 1, sel, fn);
        }
    }

    void solve_and_descend(int j, int d, int a, int64_t pa, const std::vector<LinearForm>& forms) {
        // Split constraints: up to p^a they are congruences on the column
        // residues; anything stricter is checked per candidate afterwards.
        std::vector<const LinearForm*> post;
        std::vector<std::vector<int64_t>> A;
        std::vector<int64_t> rhs;
        for (const LinearForm& f : forms) {
            if (f.t > a) post.push_back(&f);
            const int tc = std::min(f.t, a);
            if (tc == 0 || d == 0) continue;
            const int64_t scale = pPow[static_cast<size_t>(a - tc)];
            const int64_t ptc = pPow[static_cast<size_t>(tc)];
            std::vector<int64_t> row(static_cast<size_t>(d));
            bool nonzero = false;
            for (int i = 0; i < d; ++i) {
                row[static_cast<size_t>(i)] = mulmod(f.coeff[static_cast<size_t>(i)] % ptc, scale, pa);
                if (row[static_cast<size_t>(i)]) nonzero = true;
            }
            int64_t b = mulmod((pa - (f.cnst % ptc) % pa) % pa, scale, pa); // rhs = -const
            if (!nonzero) {
                if (b % pa != 0) return; // inconsistent constant constraint
                continue;
            }
            A.push_back(std::move(row));
            rhs.push_back(b);
        }
        if (d == 0 || a == 0) {
            // Column is forced to zero above the diagonal; only the constant
            // checks remain.
            for (int i = 0; i < d; ++i) at(i, j) = 0;
            for (const LinearForm* f : post)
                if (f->cnst % pPow[static_cast<size_t>(std::min(f->t, K))] != 0) return;
            // forms with t <= a were either dropped or checked above (a == 0
            // forces t > a for every retained form)
            if (d > 0 && a == 0) {
                // constraints with t <= 0 do not exist; nothing more to check
            }
            fill_column(j + 1);
            return;
        }

        // Smith reduction of the congruence system over Z/p^a with a change
        // of variables x = U y.
        const int R = static_cast<int>(A.size());
        std::vector<std::vector<int64_t>> U(static_cast<size_t>(d),
                                            std::vector<int64_t>(static_cast<size_t>(d), 0));
        for (int i = 0; i < d; ++i) U[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        std::vector<int> piv_val;
        int s = 0;
        for (; s < std::min(R, d); ++s) {
            int bi = -1, bj = -1, bv = a;
            for (int r = s; r < R; ++r)
                for (int c = s; c < d; ++c) {
                    int64_t v = A[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    if (v == 0) continue;
                    int w = valuation_capped(v, p, a);
                    if (w < bv) {
                        bv = w;
                        bi = r;
                        bj = c;
                    }
                }
            if (bi < 0) break;
            std::swap(A[static_cast<size_t>(s)], A[static_cast<size_t>(bi)]);
            std::swap(rhs[static_cast<size_t>(s)], rhs[static_cast<size_t>(bi)]);
            if (bj != s) {
                for (int r = 0; r < R; ++r)
                    std::swap(A[static_cast<size_t>(r)][static_cast<size_t>(s)],
                              A[static_cast<size_t>(r)][static_cast<size_t>(bj)]);
                for (int r = 0; r < d; ++r)
                    std::swap(U[static_cast<size_t>(r)][static_cast<size_t>(s)],
                              U[static_cast<size_t>(r)][static_cast<size_t>(bj)]);
            }
            const int64_t mod_rest = pPow[static_cast<size_t>(a - bv)];
            const int64_t unit_inv =
                invmod(A[static_cast<size_t>(s)][static_cast<size_t>(s)] / pPow[static_cast<size_t>(bv)], mod_rest);
            for (int r = 0; r < R; ++r) {
                if (r == s || A[static_cast<size_t>(r)][static_cast<size_t>(s)] == 0) continue;
                int64_t m = mulmod(A[static_cast<size_t>(r)][static_cast<size_t>(s)] / pPow[static_cast<size_t>(bv)],
                                   unit_inv, mod_rest);
                for (int c = s; c < d; ++c) {
                    int64_t& v = A[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    v = (v - mulmod(m, A[static_cast<size_t>(s)][static_cast<size_t>(c)], pa)) % pa;
                    if (v < 0) v += pa;
                }
                rhs[static_cast<size_t>(r)] =
                    (rhs[static_cast<size_t>(r)] - mulmod(m, rhs[static_cast<size_t>(s)], pa)) % pa;
                if (rhs[static_cast<size_t>(r)] < 0) rhs[static_cast<size_t>(r)] += pa;
            }
            for (int c = s + 1; c < d; ++c) {
                int64_t v = A[static_cast<size_t>(s)][static_cast<size_t>(c)];
                if (v == 0) continue;
                int64_t m = mulmod(v / pPow[static_cast<size_t>(bv)], unit_inv, mod_rest);
                for (int r = 0; r < R; ++r) {
                    int64_t& w = A[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    w = (w - mulmod(m, A[static_cast<size_t>(r)][static_cast<size_t>(s)], pa)) % pa;
                    if (w < 0) w += pa;
                }
                for (int r = 0; r < d; ++r) {
                    int64_t& w = U[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    w = (w - mulmod(m, U[static_cast<size_t>(r)][static_cast<size_t>(s)], pa)) % pa;
                    if (w < 0) w += pa;
                }
            }
            piv_val.push_back(bv);
        }
        const int rank = static_cast<int>(piv_val.size());
        for (int r = rank; r < R; ++r)
            if (rhs[static_cast<size_t>(r)] % pa != 0) return; // inconsistent
        std::vector<int64_t> y0(static_cast<size_t>(d), 0), step(static_cast<size_t>(d), 1);
        std::vector<int64_t> nsol(static_cast<size_t>(d), 0);
        for (int i = 0; i < d; ++i) {
            if (i < rank) {
                const int v = piv_val[static_cast<size_t>(i)];
                const int64_t c = rhs[static_cast<size_t>(i)];
                if (c % pPow[static_cast<size_t>(v)] != 0) return; // no solution on this axis
                const int64_t mod_rest = pPow[static_cast<size_t>(a - v)];
                const int64_t unit_inv =
                    invmod(A[static_cast<size_t>(i)][static_cast<size_t>(i)] / pPow[static_cast<size_t>(v)], mod_rest);
                y0[static_cast<size_t>(i)] = mulmod((c / pPow[static_cast<size_t>(v)]) % mod_rest, unit_inv, mod_rest);
                step[static_cast<size_t>(i)] = mod_rest;
                nsol[static_cast<size_t>(i)] = pPow[static_cast<size_t>(v)];
            } else {
                step[static_cast<size_t>(i)] = 1;
                nsol[static_cast<size_t>(i)] = pa;
            }
        }

        // Walk the solution lattice in mixed radix and materialize x = U y.
        std::vector<int64_t> idx(static_cast<size_t>(d), 0), y(static_cast<size_t>(d));
        for (;;) {
            for (int i = 0; i < d; ++i)
                y[static_cast<size_t>(i)] =
                    (y0[static_cast<size_t>(i)] + idx[static_cast<size_t>(i)] * step[static_cast<size_t>(i)]) % pa;
            bool ok = true;
            for (int i = 0; i < d && ok; ++i) {
                int64_t x = 0;
                for (int kk = 0; kk < d; ++kk)
                    x = (x + mulmod(U[static_cast<size_t>(i)][static_cast<size_t>(kk)], y[static_cast<size_t>(kk)], pa)) % pa;
                at(i, j) = x;
            }
            for (const LinearForm* f : post) {
                const int64_t pt = pPow[static_cast<size_t>(std::min(f->t, K))];
                int64_t acc = f->cnst % pt;
                for (int i = 0; i < d; ++i)
                    acc = (acc + mulmod(f->coeff[static_cast<size_t>(i)] % pt, at(i, j) % pt, pt)) % pt;
                if (acc % pt != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) fill_column(j + 1);
            int carry = 0;
            while (carry < d) {
                if (++idx[static_cast<size_t>(carry)] < nsol[static_cast<size_t>(carry)]) break;
                idx[static_cast<size_t>(carry)] = 0;
                ++carry;
            }
            if (carry == d) break;
        }
    }
};

} // namespace

std::uint64_t enumerate_visit(const CosetLabel& label, std::uint64_t limit,
                              const std::function<void(const std::int64_t*)>& visit) {
    const int min_exp = label.min_exp();
    const CosetLabel red = label.reduced();
    int64_t scale = 1;
    for (int i = 0; i < min_exp; ++i) {
        if (scale > (int64_t{1} << 62) / label.p)
            throw budget_error("representative entries exceed the supported range");
        scale *= label.p;
    }
    std::function<void(const int64_t*)> wrapped;
    if (visit) {
        const int n = label.n;
        wrapped = [&visit, scale, n](const int64_t* m) {
            if (scale == 1) {
                visit(m);
                return;
            }
            std::vector<int64_t> s(static_cast<size_t>(n) * n);
            for (size_t i = 0; i < s.size(); ++i) s[i] = m[i] * scale;
            visit(s.data());
        };
    }
    ColumnSolver solver(red, limit, &wrapped);
    solver.run();
    return solver.count;
}

std::uint64_t count_right_cosets(const CosetLabel& label, std::uint64_t limit) {
    return enumerate_visit(label, limit, nullptr);
}

namespace {

std::mutex g_degree_mutex;
std::map<CosetLabel, Int> g_degree_cache;

} // namespace

Int degree(const CosetLabel& label, std::uint64_t budget) {
    const CosetLabel red = label.reduced();
    if (auto cf = closed_form_degree(red)) return *cf;
    {
        std::lock_guard<std::mutex> lock(g_degree_mutex);
        auto it = g_degree_cache.find(red);
        if (it != g_degree_cache.end()) return it->second;
    }
    Int d(static_cast<long long>(count_right_cosets(red, budget)));
    {
        std::lock_guard<std::mutex> lock(g_degree_mutex);
        g_degree_cache.emplace(red, d);
    }
    return d;
}

CosetTable::CosetTable(CosetLabel label, std::vector<std::int64_t> flat)
    : label_(std::move(label)), flat_(std::move(flat)) {
    if (flat_.size() % stride() != 0)
        throw internal_error("CosetTable: ragged representative buffer");
}

IntMatrix CosetTable::rep(std::size_t idx) const {
    const int n = label_.n;
    std::vector<Int> e;
    e.reserve(stride());
    const int64_t* ptr = rep_ptr(idx);
    for (std::size_t i = 0; i < stride(); ++i) e.emplace_back(ptr[i]);
    return IntMatrix(n, std::move(e));
}

namespace {

// Sort representatives lexicographically on the row-major entry sequence so
// tables are byte-reproducible.
std::vector<int64_t> sorted_flat(std::vector<int64_t> flat, int n) {
    const size_t stride = static_cast<size_t>(n) * n;
    const size_t count = flat.size() / stride;
    std::vector<size_t> order(count);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(x * stride),
                                            flat.begin() + static_cast<std::ptrdiff_t>((x + 1) * stride),
                                            flat.begin() + static_cast<std::ptrdiff_t>(y * stride),
                                            flat.begin() + static_cast<std::ptrdiff_t>((y + 1) * stride));
    });
    std::vector<int64_t> out(flat.size());
    for (size_t i = 0; i < count; ++i)
        std::copy(flat.begin() + static_cast<std::ptrdiff_t>(order[i] * stride),
                  flat.begin() + static_cast<std::ptrdiff_t>((order[i] + 1) * stride),
                  out.begin() + static_cast<std::ptrdiff_t>(i * stride));
    return out;
}

} // namespace

CosetTable enumerate_right_cosets(const CosetLabel& label, std::uint64_t limit) {
    if (auto cf = closed_form_degree(label)) {
        if (*cf > Int(static_cast<long long>(limit)))
            throw budget_error("degree budget exceeded: degree " + cf->to_string() + " > limit " +
                               std::to_string(limit));
    }
    std::vector<int64_t> flat;
    const size_t stride = static_cast<size_t>(label.n) * label.n;
    enumerate_visit(label, limit, [&](const int64_t* m) {
        flat.insert(flat.end(), m, m + stride);
    });
    return CosetTable(label, sorted_flat(std::move(flat), label.n));
}

namespace {

CosetLabel fundamental_label(int n, long long p) {
    std::vector<int> e(static_cast<size_t>(n), 1);
    e.front() = 0;
    e.back() = 2;
    return CosetLabel(p, std::move(e));
}

std::vector<IntMatrix> collect_sorted(std::vector<IntMatrix> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::vector<IntMatrix> r0_set(int n, long long p) {
    if (n < 2) throw validation_error("r0_set: need n >= 2");
    const CosetLabel label = fundamental_label(n, p);
    std::vector<IntMatrix> out;
    std::function<void(const int64_t*)> vis = [&](const int64_t* m) {
        std::vector<Int> e(static_cast<size_t>(n) * n);
        for (size_t i = 0; i < e.size(); ++i) e[i] = Int(m[i]);
        out.emplace_back(n, std::move(e));
    };
    ColumnSolver solver(label, kDefaultBudget, &vis);
    solver.only_comp = std::vector<int>(static_cast<size_t>(n), 1);
    solver.run();
    return collect_sorted(std::move(out));
}

Int r0_cardinality_formula(int n, long long p) {
    Int P(p);
    Int num = Int(n - 1) * P.pow(static_cast<unsigned>(n)) - Int(n) * P.pow(static_cast<unsigned>(n - 1)) + Int(1);
    return num.divexact(P - Int(1));
}

std::vector<IntMatrix> r1_set(int n, long long p) {
    if (n < 2) throw validation_error("r1_set: need n >= 2");
    std::vector<IntMatrix> out;
    std::vector<long long> diag(static_cast<size_t>(n));
    std::vector<long long> col_entries;
    IntMatrix work(n);
    // diagonal: exactly one 1 (at a1) and one p^2 (at a2), p elsewhere
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2) {
            if (a1 == a2) continue;
            for (int i = 0; i < n; ++i)
                diag[static_cast<size_t>(i)] = (i == a1) ? 1 : (i == a2) ? p * p : p;
            // fill columns recursively; entry (i, j) ranges over [0, diag_j),
            // restricted to multiples of p when p | diag_i
            std::vector<long long> entries(static_cast<size_t>(n) * n, 0);
            for (int i = 0; i < n; ++i) entries[static_cast<size_t>(i) * n + i] = diag[static_cast<size_t>(i)];
            std::function<void(int, int)> rec = [&](int i, int j) {
                if (j == n) {
                    std::vector<Int> e(entries.size());
                    for (size_t t = 0; t < entries.size(); ++t) e[t] = Int(entries[t]);
                    out.emplace_back(n, std::move(e));
                    return;
                }
                if (i >= j) {
                    rec(0, j + 1);
                    return;
                }
                const long long bound = diag[static_cast<size_t>(j)];
                const long long s = (diag[static_cast<size_t>(i)] % p == 0) ? p : 1;
                for (long long v = 0; v < bound; v += s) {
                    entries[static_cast<size_t>(i) * n + j] = v;
                    rec(i + 1, j);
                }
                entries[static_cast<size_t>(i) * n + j] = 0;
            };
            rec(0, 1);
        }
    return collect_sorted(std::move(out));
}

Int r1_cardinality_formula(int n, long long p) {
    Int P(p);
    Int num = P.pow(static_cast<unsigned>(2 * n)) - Int(n) * P.pow(static_cast<unsigned>(n + 1)) +
              Int(2) * Int(n - 1) * P.pow(static_cast<unsigned>(n)) - Int(n) * P.pow(static_cast<unsigned>(n - 1)) +
              Int(1);
    Int den = (P - Int(1)) * (P - Int(1));
    return num.divexact(den);
}

R0Split r0_split(int n, long long p) {
    if (n < 2) throw validation_error("r0_split: need n >= 2");
    R0Split split{{},
                  {},
                  CosetLabel(p, [&] {
                      std::vector<int> e(static_cast<size_t>(n), 2);
                      e.front() = 1;
                      e.back() = 3;
                      return e;
                  }()),
                  CosetLabel(p, [&] {
                      std::vector<int> e(static_cast<size_t>(n), 2);
                      if (n < 4)
                          throw validation_error("r0_split: the interior-nonzero class needs n >= 4");
                      e[0] = e[1] = 1;
                      e[static_cast<size_t>(n - 2)] = e[static_cast<size_t>(n - 1)] = 3;
                      return e;
                  }())};
    for (IntMatrix& m : r0_set(n, p)) {
        bool interior_zero = true;
        for (int i = 1; i < n - 1 && interior_zero; ++i) // 1-based rows 2..n-2
            for (int j = i + 1; j < n - 1; ++j)          // 1-based cols i+1..n-1
                if (!m.at(i, j).is_zero()) {
                    interior_zero = false;
                    break;
                }
        (interior_zero ? split.interior_zero : split.interior_nonzero).push_back(std::move(m));
    }
    return split;
}

Int r0_split_interior_zero_formula(int n, long long p) {
    return Int(2) * Int(p).pow(static_cast<unsigned>(n - 1)) - Int(p) - Int(1);
}

Int r0_split_interior_nonzero_formula(int n, long long p) {
    Int P(p);
    Int num = P * P *
              (Int(n - 3) * P.pow(static_cast<unsigned>(n - 2)) - Int(n - 2) * P.pow(static_cast<unsigned>(n - 3)) + Int(1));
    return num.divexact(P - Int(1));
}

} // namespace hecke

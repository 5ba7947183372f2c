#include "hecke/label.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hecke {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CosetLabel::CosetLabel(long long prime, std::vector<int> exponents)
    : n(static_cast<int>(exponents.size())), p(prime), exps(std::move(exponents)) {
    if (n < 2) throw validation_error("CosetLabel: need n >= 2");
    if (!is_prime(p)) throw validation_error("CosetLabel: p = " + std::to_string(p) + " is not prime");
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw validation_error("CosetLabel: exponents must be nonnegative");
        if (i > 0 && exps[i] < exps[i - 1])
            throw validation_error("CosetLabel: exponents must be nondecreasing");
    }
}

int CosetLabel::weight() const { return std::accumulate(exps.begin(), exps.end(), 0); }

CosetLabel CosetLabel::shifted(int delta) const {
    std::vector<int> e = exps;
    for (int& v : e) {
        v += delta;
        if (v < 0) throw validation_error("CosetLabel: shift would make an exponent negative");
    }
    return CosetLabel(p, std::move(e));
}

IntMatrix CosetLabel::diagonal_matrix() const {
    std::vector<Int> d;
    d.reserve(exps.size());
    for (int e : exps) d.push_back(Int(p).pow(static_cast<unsigned>(e)));
    return IntMatrix::diagonal(d);
}

std::vector<Int> CosetLabel::reference_vector() const {
    std::vector<Int> d(exps.size());
    int acc = 0;
    for (size_t k = 0; k < exps.size(); ++k) {
        acc += exps[k];
        d[k] = Int(p).pow(static_cast<unsigned>(acc));
    }
    return d;
}

std::string CosetLabel::to_string() const {
    std::ostringstream os;
    os << "pi(n=" << n << ", p=" << p << "; ";
    for (size_t i = 0; i < exps.size(); ++i) os << (i ? "," : "") << exps[i];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CosetLabel& l) { return os << l.to_string(); }

CosetLabel label_of_matrix(const IntMatrix& m, long long p) {
    std::vector<Int> divs = elementary_divisors(m);
    std::vector<int> exps;
    exps.reserve(divs.size());
    for (const Int& s : divs) {
        if (s.is_zero()) throw validation_error("label_of_matrix: singular matrix");
        Int v = s;
        int e = 0;
        while (!v.is_one()) {
            if (!v.divisible_by(Int(p)))
                throw validation_error("label_of_matrix: elementary divisor " + s.to_string() +
                                       " is not a power of " + std::to_string(p));
            v = v.divexact(Int(p));
            ++e;
        }
        exps.push_back(e);
    }
    std::sort(exps.begin(), exps.end());
    return CosetLabel(p, std::move(exps));
}

std::vector<Int> reference_dn(int n, long long p) {
    if (n < 2) throw validation_error("reference_dn: need n >= 2");
    std::vector<Int> d(static_cast<size_t>(n));
    for (int k = 1; k <= n - 1; ++k) d[static_cast<size_t>(k - 1)] = Int(p).pow(static_cast<unsigned>(k - 1));
    d[static_cast<size_t>(n - 1)] = Int(p).pow(static_cast<unsigned>(n));
    return d;
}

IntMatrix CompositeCosetLabel::diagonal_matrix() const {
    std::vector<Int> d(static_cast<size_t>(n), Int(1));
    for (const auto& [p, exps] : exps_by_prime) {
        if (static_cast<int>(exps.size()) != n)
            throw validation_error("CompositeCosetLabel: exponent tuple size mismatch");
        for (int i = 0; i < n; ++i)
            d[static_cast<size_t>(i)] *= Int(p).pow(static_cast<unsigned>(exps[static_cast<size_t>(i)]));
    }
    return IntMatrix::diagonal(d);
}

std::string CompositeCosetLabel::to_string() const {
    std::ostringstream os;
    os << "pi(n=" << n;
    for (const auto& [p, exps] : exps_by_prime) {
        os << "; p=" << p << ": ";
        for (size_t i = 0; i < exps.size(); ++i) os << (i ? "," : "") << exps[i];
    }
    os << ")";
    return os.str();
}

} // namespace hecke

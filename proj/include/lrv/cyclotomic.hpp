// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored on the power basis 1, zeta, ..., zeta^(phi(N)-1) with
// rational coefficients, fully reduced modulo the N-th cyclotomic polynomial
// Phi_N. The representation is canonical: equal values have equal coefficient
// vectors, so equality testing and rational extraction are plain comparisons.
// Phi_N itself is obtained by exact division of z^N - 1 by Phi_d over the
// proper divisors d | N, memoized per order together with the reduction rows
// for z^t that multiplication and root lookups need.
#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrv/errors.hpp"
#include "lrv/numeric.hpp"

namespace lrv {

namespace detail {

// Dense integer polynomials, lowest degree first, no trailing zeros.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; remainder must come out zero.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    assert(!den.empty() && den.back() == 1);
    IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt c = num[i + den.size() - 1];
        if (c == 0) continue;
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    trim(num);
    assert(num.empty());
    return quot;
}

inline IntPoly cyclotomic_polynomial(unsigned n) {
    // z^n - 1 divided by Phi_d for every proper divisor d of n, built in
    // increasing order of d so each Phi_d is already available.
    std::map<unsigned, IntPoly> phi;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        IntPoly p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (const auto& [e, q] : phi)
            if (d % e == 0) p = divide_exact(std::move(p), q);
        phi[d] = std::move(p);
    }
    return phi[n];
}

}  // namespace detail

// Per-order immutable tables: Phi_N and the reductions of z^t needed by
// products (t < 2 phi(N) - 1) and by root-of-unity lookups (t < N). Shared
// read-only after construction; the registry hands out one instance per N.
class CyclotomicBasis {
public:
    unsigned order;
    unsigned degree;                           // phi(N)
    detail::IntPoly phi;                       // monic, length degree+1
    std::vector<std::vector<BigInt>> rows;     // z^t mod Phi_N, t in [0, row_count)

    static std::shared_ptr<const CyclotomicBasis> get(unsigned n) {
        if (n == 0) throw Error("cyclotomic order must be positive");
        static std::mutex mu;
        static std::map<unsigned, std::shared_ptr<const CyclotomicBasis>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(n);
        if (it != registry.end()) return it->second;
        auto basis = std::shared_ptr<const CyclotomicBasis>(new CyclotomicBasis(n));
        registry.emplace(n, basis);
        return basis;
    }

private:
    explicit CyclotomicBasis(unsigned n) : order(n) {
        phi = detail::cyclotomic_polynomial(n);
        degree = static_cast<unsigned>(phi.size() - 1);
        const unsigned row_count = std::max(2 * degree, n);
        rows.assign(row_count, std::vector<BigInt>(degree, 0));
        for (unsigned t = 0; t < std::min(degree, row_count); ++t) rows[t][t] = 1;
        for (unsigned t = degree; t < row_count; ++t) {
            // z * rows[t-1], folding the overflow via z^degree = -sum phi_j z^j.
            const auto& prev = rows[t - 1];
            auto& cur = rows[t];
            const BigInt& top = prev[degree - 1];
            for (unsigned j = 0; j < degree; ++j) {
                cur[j] = (j ? prev[j - 1] : BigInt(0));
                if (top != 0) cur[j] -= top * phi[j];
            }
        }
    }
};

class Cyclotomic {
public:
    Cyclotomic(unsigned order, const Rational& constant = 0)
        : basis_(CyclotomicBasis::get(order)), c_(basis_->degree, 0) {
        c_[0] = constant;
    }
    Cyclotomic(std::shared_ptr<const CyclotomicBasis> basis, std::vector<Rational> coeffs)
        : basis_(std::move(basis)), c_(std::move(coeffs)) {
        assert(c_.size() == basis_->degree);
    }

    unsigned order() const { return basis_->order; }
    unsigned degree() const { return basis_->degree; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const std::shared_ptr<const CyclotomicBasis>& basis() const { return basis_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rational to_rational() const {
        if (!is_rational())
            throw NotRational("value has nonzero coefficient beyond the constant term");
        return c_[0];
    }

    std::complex<double> to_complex() const {
        const long double tau = 6.283185307179586476925286766559L;
        long double re = 0, im = 0;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            const long double v = c_[j].convert_to<long double>();
            const long double ang = tau * static_cast<long double>(j) / order();
            re += v * std::cos(ang);
            im += v * std::sin(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        check_order(o);
        const unsigned d = degree();
        std::vector<Rational> conv(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (o.c_[j] == 0) continue;
                conv[i + j] += c_[i] * o.c_[j];
            }
        }
        std::vector<Rational> out(conv.begin(), conv.begin() + d);
        for (std::size_t t = d; t < conv.size(); ++t) {
            if (conv[t] == 0) continue;
            const auto& row = basis_->rows[t];
            for (std::size_t j = 0; j < d; ++j)
                if (row[j] != 0) out[j] += conv[t] * Rational(row[j]);
        }
        c_ = std::move(out);
        return *this;
    }
    Cyclotomic& operator*=(const Rational& q) {
        for (auto& c : c_) c *= q;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
    friend Cyclotomic operator-(Cyclotomic a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order() == b.order()) return a.c_ == b.c_;
        // Cross-order values compare equal only through their rational content.
        return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
    }

    // Extended Euclid on (Phi_N, this) over Q; Phi_N is irreducible, so any
    // nonzero element has gcd 1 with it and the Bezout cofactor is the inverse.
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) -> int {
            for (std::size_t i = p.size(); i-- > 0;)
                if (p[i] != 0) return static_cast<int>(i);
            return -1;
        };
        Poly r0(basis_->phi.size());
        for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(basis_->phi[i]);
        Poly r1(c_.begin(), c_.end());
        Poly s0 = {Rational(0)}, s1 = {Rational(1)};
        while (deg(r1) > 0) {
            // r0 = q*r1 + rem
            Poly rem = r0, q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), 0);
            const int d1 = deg(r1);
            const Rational lead = r1[static_cast<std::size_t>(d1)];
            for (int i = deg(rem); i >= d1; --i) {
                const Rational c = rem[static_cast<std::size_t>(i)] / lead;
                if (c == 0) continue;
                q[static_cast<std::size_t>(i - d1)] = c;
                for (int j = 0; j <= d1; ++j)
                    rem[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
            }
            Poly s2(std::max(s0.size(), q.size() + s1.size()), 0);
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        assert(deg(r1) == 0);  // gcd with an irreducible modulus is a nonzero constant
        const Rational g = r1[0];
        std::vector<Rational> out(degree(), 0);
        for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / g;
        return Cyclotomic(basis_, std::move(out));
    }

private:
    void check_order(const Cyclotomic& o) const {
        if (basis_->order != o.basis_->order)
            throw OrderMismatch("orders " + std::to_string(order()) + " and " +
                                std::to_string(o.order()) + " cannot mix");
    }

    std::shared_ptr<const CyclotomicBasis> basis_;
    std::vector<Rational> c_;
};

// zeta_N^e, exponent reduced mod N.
inline Cyclotomic root_of_unity(unsigned n, long long e) {
    auto basis = CyclotomicBasis::get(n);
    const long long t = ((e % n) + n) % n;
    const auto& row = basis->rows[static_cast<std::size_t>(t)];
    std::vector<Rational> c(basis->degree);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(row[i]);
    return Cyclotomic(std::move(basis), std::move(c));
}

// (2 sin(pi m / N))^2 as the exact value (1 - zeta^m)(1 - zeta^-m).
inline Cyclotomic two_sin_sq(unsigned n, long long m) {
    const long long t = ((m % n) + n) % n;
    if (t == 0)
        throw ZeroAngle("two_sin_sq with m = 0 mod N (repeated summation entry?)");
    return Cyclotomic(n, 2) - root_of_unity(n, t) - root_of_unity(n, n - t);
}

}  // namespace lrv

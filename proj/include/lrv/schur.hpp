// Schur polynomial evaluation at tuples of distinct field values via the
// bialternant ratio det(z_j^(l_i+r-i)) / det(z_j^(r-i)). Generic over the
// exact cyclotomic backend and complex<double>; the denominator is taken in
// the product form prod_{i<j} (z_i - z_j).
#pragma once

#include <complex>
#include <map>
#include <vector>

#include "lrv/cyclotomic.hpp"
#include "lrv/errors.hpp"
#include "lrv/partition.hpp"

namespace lrv {

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Cyclotomic> {
    static constexpr bool exact = true;
    static Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic(x.order(), 1); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
};

template <>
struct FieldTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(); }
    static std::complex<double> inverse(const std::complex<double>& x) { return 1.0 / x; }
};

template <class T>
struct EvaluationPoint {
    std::vector<T> values;

    explicit EvaluationPoint(std::vector<T> vals) : values(std::move(vals)) {
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i] == values[j])
                    throw DegeneratePoint("evaluation point has a repeated value");
    }
    int rank() const { return static_cast<int>(values.size()); }
};

// Fraction-free (Bareiss) elimination in the exact backend, partial-pivot
// elimination in float. Matrices here are tiny (r x r) but exact entries
// carry large rational coefficients, which Bareiss keeps in check.
template <class T>
T determinant(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant needs a square matrix");
    if (n == 1) return m[0][0];

    using FT = FieldTraits<T>;
    bool negate = false;
    if constexpr (FT::exact) {
        T prev = FT::one_like(m[0][0]);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (FT::is_zero(m[k][k])) {
                std::size_t swap_row = k + 1;
                while (swap_row < n && FT::is_zero(m[swap_row][k])) ++swap_row;
                if (swap_row == n) return m[0][0] - m[0][0];  // singular: zero of the right order
                std::swap(m[k], m[swap_row]);
                negate = !negate;
            }
            const T prev_inv = FT::inverse(prev);
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) * prev_inv;
            prev = m[k][k];
        }
    } else {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
            if (FT::is_zero(m[pivot][k])) return {};
            if (pivot != k) {
                std::swap(m[k], m[pivot]);
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const T f = m[i][k] / m[k][k];
                for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            }
        }
        T det = m[0][0];
        for (std::size_t k = 1; k < n; ++k) det = det * m[k][k];
        return negate ? -det : det;
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// prod_{i<j} (z_i - z_j); equals det(z_j^(r-i)) with decreasing exponent rows.
template <class T>
T vandermonde(const EvaluationPoint<T>& pt) {
    using FT = FieldTraits<T>;
    T prod = FT::one_like(pt.values.front());
    for (std::size_t i = 0; i < pt.values.size(); ++i)
        for (std::size_t j = i + 1; j < pt.values.size(); ++j) {
            const T diff = pt.values[i] - pt.values[j];
            if (FT::is_zero(diff)) throw DegeneratePoint("coincident evaluation values");
            prod = prod * diff;
        }
    return prod;
}

// The same point powers recur across the r^2 matrix entries and across the
// partitions of a product evaluation; cache them per point value.
template <class T>
class PowerMemo {
public:
    explicit PowerMemo(const std::vector<T>& values) : values_(values), memo_(values.size()) {}

    const T& pow(std::size_t j, long e) {
        auto& cache = memo_[j];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        T result = [&] {
            if (e == 0) return FieldTraits<T>::one_like(values_[j]);
            if (e == 1) return values_[j];
            T half = pow(j, e / 2);
            T sq = half * half;
            return (e % 2) ? T(sq * values_[j]) : sq;
        }();
        return cache.emplace(e, std::move(result)).first->second;
    }

private:
    const std::vector<T>& values_;
    std::vector<std::map<long, T>> memo_;
};

template <class T>
T schur_numerator(const Partition& p, const EvaluationPoint<T>& pt, PowerMemo<T>& memo) {
    const int r = p.rank();
    std::vector<std::vector<T>> m;
    m.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const long e = p.part(i) + (r - 1 - i);
        std::vector<T> row;
        row.reserve(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) row.push_back(memo.pow(static_cast<std::size_t>(j), e));
        m.push_back(std::move(row));
    }
    return determinant(std::move(m));
}

template <class T>
T schur_eval(const Partition& p, const EvaluationPoint<T>& pt) {
    if (p.rank() != pt.rank()) throw RankMismatch("schur_eval: partition rank vs point length");
    if (p.parts().back() < 0)
        throw Error("schur_eval requires nonnegative parts; level-shift first");
    PowerMemo<T> memo(pt.values);
    const T num = schur_numerator(p, pt, memo);
    return num * FieldTraits<T>::inverse(vandermonde(pt));
}

// Product over a list of (shifted) partitions, sharing one power memo and a
// single Vandermonde inversion across all factors.
template <class T>
T schur_product_eval(const std::vector<Partition>& shifted, const EvaluationPoint<T>& pt) {
    if (shifted.empty()) return FieldTraits<T>::one_like(pt.values.front());
    PowerMemo<T> memo(pt.values);
    T num = schur_numerator(shifted.front(), pt, memo);
    for (std::size_t x = 1; x < shifted.size(); ++x)
        num = num * schur_numerator(shifted[x], pt, memo);
    const T vinv = FieldTraits<T>::inverse(vandermonde(pt));
    T result = num;
    for (std::size_t x = 0; x < shifted.size(); ++x) result = result * vinv;
    return result;
}

}  // namespace lrv

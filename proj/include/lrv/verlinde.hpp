// The closed Verlinde-type sum for LR coefficients and n-fold tensor
// multiplicities: level selection, parabolic-type assembly, summation-vector
// enumeration, per-term evaluation and the final normalized sum, in an exact
// cyclotomic backend and a complex<double> backend.
//
// The exact engine does not sum rational-coefficient field elements term by
// term. Every term of the sum is an element of (1/N^D) Z[zeta_N] for one
// fixed D: with u_m := N * (1 - zeta^m)^(-1) (an algebraic integer),
//
//   (2 sin pi m/N)^(-2)          = u_m u_{N-m} / N^2
//   V^(-1) = prod_{i<j} (zeta^{v_i} - zeta^{v_j})^(-1)
//          = (-1)^C zeta^(-sum_{i<j} v_j) prod u_{d_ij} / N^C,  d_ij = v_i - v_j
//
// so with q constituents in Sigma the whole term is an integer-coefficient
// combination of products g_d = u_d^(q+1) u_{N-d} and Schur alternants
// (permutation expansions whose entries are single roots of unity), divided
// by N^D with D = C(r,2) (q+2). Accumulating integer vectors avoids the
// per-operation gcd cost of rational arithmetic in the hot loop; the single
// division by N^D * r * N^(r-1) happens once at the end and is asserted to
// produce a nonnegative integer. The straightforward rational-backend term
// (verlinde_term) is kept and tested equal to the engine's terms.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "lrv/cyclotomic.hpp"
#include "lrv/errors.hpp"
#include "lrv/partition.hpp"
#include "lrv/schur.hpp"

namespace lrv {

enum class Backend { exact, floating };

inline const char* backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

struct SummationVector {
    std::vector<int> v;  // 0 = v_r < v_{r-1} < ... < v_1 < r+k, stored decreasing
};

inline long long summation_vector_count(int r, int k) {
    return to_ll(binomial(r + k - 1, r - 1));
}

// Yields every vector exactly once, in lexicographically decreasing order of
// (v_1, ..., v_{r-1}).
template <class Fn>
void for_each_summation_vector(int r, int k, Fn&& fn) {
    const int n = r + k;
    if (r == 1) {
        fn(SummationVector{{0}});
        return;
    }
    const int m = r - 1;
    std::vector<int> c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = n - 1 - i;
    while (true) {
        SummationVector sv;
        sv.v = c;
        sv.v.push_back(0);
        fn(sv);
        int i = m - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] < m - i + 1) --i;
        if (i < 0) break;
        --c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i)] - (j - i);
    }
}

inline std::vector<SummationVector> enumerate_vectors(int r, int k) {
    std::vector<SummationVector> out;
    out.reserve(static_cast<std::size_t>(summation_vector_count(r, k)));
    for_each_summation_vector(r, k, [&](const SummationVector& v) { out.push_back(v); });
    return out;
}

// Minimal k with (sum of spreads)/k < 1/r. The list must already contain the
// dual of the target.
inline int choose_level(const std::vector<Partition>& constituents) {
    if (constituents.empty()) throw Error("choose_level: empty list");
    const int r = constituents.front().rank();
    long long s = 0;
    for (const auto& p : constituents) {
        if (p.rank() != r) throw RankMismatch("choose_level: mixed ranks");
        s += p.spread();
    }
    return static_cast<int>(r * s + 1);
}

struct ParabolicType {
    int rank = 0;
    int level = 0;
    std::vector<Partition> shifted;  // n+1 >= 3 constituents, top entry = level
    long long sigma_size = 0;
};

// Sigma(factors..., target*): level-shift everything, padding with the zero
// partition (a determinant-character factor) when fewer than three marked
// points would result.
inline ParabolicType build_type(const std::vector<Partition>& factors, const Partition& target,
                                int k) {
    if (factors.empty()) throw Error("build_type: no factors");
    const int r = target.rank();
    long long total = 0, spreads = target.spread();
    for (const auto& f : factors) {
        if (f.rank() != r) throw RankMismatch("build_type: ranks differ");
        total += f.size();
        spreads += f.spread();
    }
    if (total != target.size())
        throw SizeMismatch("factor sizes sum to " + std::to_string(total) + ", target has " +
                           std::to_string(target.size()));
    if (k <= r * spreads)
        throw LevelTooSmall("level " + std::to_string(k) + " violates k > r * sum(spreads) = " +
                            std::to_string(r * spreads));

    ParabolicType sigma;
    sigma.rank = r;
    sigma.level = k;
    for (const auto& f : factors) sigma.shifted.push_back(f.level_shift(k));
    const Partition zero(std::vector<int>(static_cast<std::size_t>(r), 0));
    while (sigma.shifted.size() + 1 < 3) sigma.shifted.push_back(zero.level_shift(k));
    sigma.shifted.push_back(target.dual().level_shift(k));
    for (const auto& p : sigma.shifted) sigma.sigma_size += p.size();
    if (sigma.sigma_size % r != 0)
        throw Error("internal: |Sigma| not divisible by rank");  // balanced sizes guarantee this
    return sigma;
}

// One term of the sum, on the rational-coefficient cyclotomic backend.
// This is the reference the integer engine is tested against.
inline Cyclotomic verlinde_term(const ParabolicType& sigma, const SummationVector& vec) {
    const int r = sigma.rank;
    const unsigned n = static_cast<unsigned>(r + sigma.level);
    const long long sr = (sigma.sigma_size / r) % n;
    long long sumv = 0;
    for (int x : vec.v) sumv += x;
    Cyclotomic term = root_of_unity(n, -sr * (sumv % n));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            term *= two_sin_sq(n, vec.v[static_cast<std::size_t>(i)] -
                                      vec.v[static_cast<std::size_t>(j)])
                        .inverse();
    std::vector<Cyclotomic> values;
    values.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) values.push_back(root_of_unity(n, vec.v[static_cast<std::size_t>(j)]));
    EvaluationPoint<Cyclotomic> pt(std::move(values));
    return term * schur_product_eval(sigma.shifted, pt);
}

namespace detail {

struct PermTable {
    std::vector<std::vector<int>> perm;
    std::vector<int> sign;

    explicit PermTable(int r) {
        std::vector<int> p(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i;
        do {
            int inv = 0;
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = a + 1; b < p.size(); ++b)
                    if (p[a] > p[b]) ++inv;
            perm.push_back(p);
            sign.push_back(inv % 2 ? -1 : 1);
        } while (std::next_permutation(p.begin(), p.end()));
    }
};

// Shared fixed data for one summation run: basis tables, the g_d products,
// exponent vectors of the static constituents and of each candidate target.
class ExactVerlindeEngine {
public:
    using IVec = std::vector<BigInt>;

    ExactVerlindeEngine(int rank, int level, const std::vector<Partition>& static_shifted,
                        const std::vector<Partition>& cand_shifted,
                        const std::vector<long long>& cand_sigma_sizes)
        : r_(rank),
          n_(static_cast<unsigned>(rank + level)),
          basis_(CyclotomicBasis::get(n_)),
          phi_(basis_->degree),
          q_(static_cast<int>(static_shifted.size()) + 1),
          c2_(static_cast<unsigned>(rank * (rank - 1) / 2)),
          d_(c2_ * static_cast<unsigned>(q_ + 2)),
          negate_((c2_ * static_cast<unsigned>(q_)) % 2 != 0),
          perms_(rank),
          vectors_(enumerate_vectors(rank, level)) {
        for (const auto& p : static_shifted) static_exps_.push_back(exponents(p));
        for (std::size_t c = 0; c < cand_shifted.size(); ++c) {
            cand_exps_.push_back(exponents(cand_shifted[c]));
            cand_phase_.push_back((cand_sigma_sizes[c] / r_) % n_);
        }
        if (c2_ > 0) build_g_table();
    }

    long long term_count() const { return static_cast<long long>(vectors_.size()); }
    unsigned denom_power() const { return d_; }
    unsigned order() const { return n_; }

    // Per-candidate integer numerators of sum_v term(v) * N^D. Terms are
    // exact, so per-worker accumulation order cannot affect the result.
    std::vector<BigInt> run(unsigned threads) const {
        const std::size_t cands = cand_exps_.size();
        const std::size_t chunk = 16;
        const std::size_t nchunks = (vectors_.size() + chunk - 1) / chunk;
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nchunks)));

        std::vector<std::vector<IVec>> acc(threads,
                                           std::vector<IVec>(cands, IVec(phi_, 0)));
        std::atomic<std::size_t> next{0};
        auto work = [&](unsigned w) {
            Scratch s(n_, phi_);
            while (true) {
                const std::size_t ci = next.fetch_add(1);
                if (ci >= nchunks) break;
                const std::size_t lo = ci * chunk;
                const std::size_t hi = std::min(lo + chunk, vectors_.size());
                for (std::size_t i = lo; i < hi; ++i) accumulate_term(vectors_[i], acc[w], s);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }

        std::vector<BigInt> out(cands, 0);
        for (std::size_t c = 0; c < cands; ++c) {
            IVec total(phi_, 0);
            for (unsigned w = 0; w < threads; ++w)
                for (unsigned j = 0; j < phi_; ++j) total[j] += acc[w][c][j];
            for (unsigned j = 1; j < phi_; ++j)
                if (total[j] != 0)
                    throw NotRational("Verlinde sum left the rationals; this is a bug");
            out[c] = negate_ ? -total[0] : total[0];
        }
        return out;
    }

    // Single term as a rational-coefficient field element (test hook).
    Cyclotomic term_as_cyclotomic(const SummationVector& vec, std::size_t cand) const {
        Scratch s(n_, phi_);
        IVec shared = shared_factor(vec, s);
        IVec term = mul(shared, alternant(cand_exps_[cand], vec.v, cand_shift(cand, vec.v), s));
        std::vector<Rational> coeffs(phi_);
        const BigInt den = big_pow(BigInt(n_), d_);
        for (unsigned j = 0; j < phi_; ++j)
            coeffs[j] = Rational(negate_ ? -term[j] : term[j], den);
        return Cyclotomic(basis_, std::move(coeffs));
    }

private:
    struct Scratch {
        std::vector<long long> w;     // residue weights for one alternant
        std::vector<unsigned> touched;
        Scratch(unsigned n, unsigned phi) : w(n, 0) { touched.reserve(64); (void)phi; }
    };

    std::vector<long> exponents(const Partition& p) const {
        std::vector<long> e(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i)
            e[static_cast<std::size_t>(i)] = p.part(i) + (r_ - 1 - i);
        return e;
    }

    // N * (1 - zeta^m)^(-1), integral because (1 - zeta^m) divides N in Z[zeta].
    IVec u_value(unsigned m) const {
        Cyclotomic x = Cyclotomic(n_, 1) - root_of_unity(n_, m);
        Cyclotomic inv = x.inverse() * Rational(n_);
        IVec out(phi_);
        for (unsigned j = 0; j < phi_; ++j) {
            const Rational& c = inv.coeffs()[j];
            if (denominator(c) != 1)
                throw Error("internal: N/(1-zeta^m) is not integral");
            out[j] = numerator(c);
        }
        return out;
    }

    void build_g_table() {
        std::vector<IVec> u(n_);
        for (unsigned m = 1; m < n_; ++m) u[m] = u_value(m);
        g_.assign(n_, IVec());
        for (unsigned m = 1; m < n_; ++m) {
            IVec g = u[n_ - m];
            for (int e = 0; e < q_ + 1; ++e) g = mul(g, u[m]);
            g_[m] = std::move(g);
        }
    }

    IVec mul(const IVec& a, const IVec& b) const {
        std::vector<BigInt> conv(2 * phi_ - 1, 0);
        for (unsigned i = 0; i < phi_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < phi_; ++j) {
                if (b[j] == 0) continue;
                conv[i + j] += a[i] * b[j];
            }
        }
        IVec out(conv.begin(), conv.begin() + phi_);
        for (unsigned t = phi_; t < conv.size(); ++t) {
            if (conv[t] == 0) continue;
            const auto& row = basis_->rows[t];
            for (unsigned j = 0; j < phi_; ++j)
                if (row[j] != 0) out[j] += conv[t] * row[j];
        }
        return out;
    }

    // det(zeta^{e_i v_j}) with an extra zeta^shift folded in: permutation
    // expansion accumulated as integer weights per exponent residue.
    IVec alternant(const std::vector<long>& exps, const std::vector<int>& v, long long shift,
                   Scratch& s) const {
        for (unsigned t : s.touched) s.w[t] = 0;
        s.touched.clear();
        for (std::size_t p = 0; p < perms_.perm.size(); ++p) {
            long long dot = shift;
            const auto& perm = perms_.perm[p];
            for (int i = 0; i < r_; ++i)
                dot += exps[static_cast<std::size_t>(i)] *
                       v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            const unsigned t = static_cast<unsigned>(dot % n_);
            if (s.w[t] == 0) s.touched.push_back(t);
            s.w[t] += perms_.sign[p];
        }
        IVec out(phi_, 0);
        for (unsigned t : s.touched) {
            const long long wt = s.w[t];
            if (wt == 0) continue;
            const auto& row = basis_->rows[t];
            for (unsigned j = 0; j < phi_; ++j)
                if (row[j] != 0) out[j] += wt * row[j];
        }
        return out;
    }

    long long cand_shift(std::size_t cand, const std::vector<int>& v) const {
        long long sumv = 0;
        for (int x : v) sumv += x;
        const long long p = (cand_phase_[cand] * (sumv % n_)) % n_;
        return (n_ - p) % n_;
    }

    // Candidate-independent factor: prod g_{d_ij} times the static alternants,
    // with the phase zeta^(-q sum_{i<j} v_j) folded into the first alternant.
    IVec shared_factor(const SummationVector& vec, Scratch& s) const {
        const auto& v = vec.v;
        long long wsum = 0;
        for (std::size_t j = 0; j < v.size(); ++j) wsum += static_cast<long long>(j) * v[j];
        const long long static_shift = (n_ - ((static_cast<long long>(q_) * (wsum % n_)) % n_)) % n_;

        IVec prod = alternant(static_exps_[0], v, static_shift, s);
        for (std::size_t x = 1; x < static_exps_.size(); ++x)
            prod = mul(prod, alternant(static_exps_[x], v, 0, s));
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < r_; ++j) {
                const unsigned d = static_cast<unsigned>(v[static_cast<std::size_t>(i)] -
                                                         v[static_cast<std::size_t>(j)]);
                prod = mul(prod, g_[d]);
            }
        return prod;
    }

    void accumulate_term(const SummationVector& vec, std::vector<IVec>& acc, Scratch& s) const {
        const IVec shared = shared_factor(vec, s);
        for (std::size_t c = 0; c < cand_exps_.size(); ++c) {
            const IVec term =
                mul(shared, alternant(cand_exps_[c], vec.v, cand_shift(c, vec.v), s));
            auto& a = acc[c];
            for (unsigned j = 0; j < phi_; ++j) a[j] += term[j];
        }
    }

    int r_;
    unsigned n_;
    std::shared_ptr<const CyclotomicBasis> basis_;
    unsigned phi_;
    int q_;
    unsigned c2_;
    unsigned d_;
    bool negate_;
    PermTable perms_;
    std::vector<SummationVector> vectors_;
    std::vector<std::vector<long>> static_exps_;
    std::vector<std::vector<long>> cand_exps_;
    std::vector<long long> cand_phase_;
    std::vector<IVec> g_;  // indexed by difference d in [1, N-1]
};

// complex<double> mirror of the exact engine. Chunk partial sums go into
// fixed slots (chunk layout independent of the worker count) and are folded
// by pairwise reduction, so results are bit-identical for any thread count.
class FloatVerlindeEngine {
public:
    using C = std::complex<double>;

    FloatVerlindeEngine(int rank, int level, const std::vector<Partition>& static_shifted,
                        const std::vector<Partition>& cand_shifted,
                        const std::vector<long long>& cand_sigma_sizes)
        : r_(rank),
          n_(static_cast<unsigned>(rank + level)),
          q_(static_cast<int>(static_shifted.size()) + 1),
          perms_(rank),
          vectors_(enumerate_vectors(rank, level)) {
        const double pi = 3.14159265358979323846;
        pow_.resize(n_);
        for (unsigned t = 0; t < n_; ++t)
            pow_[t] = std::polar(1.0, 2.0 * pi * static_cast<double>(t) / static_cast<double>(n_));
        inv_sin_sq_.assign(n_, 0.0);
        for (unsigned m = 1; m < n_; ++m) {
            const double s = 2.0 * std::sin(pi * static_cast<double>(m) / static_cast<double>(n_));
            inv_sin_sq_[m] = 1.0 / (s * s);
        }
        for (const auto& p : static_shifted) static_exps_.push_back(exponents(p));
        for (std::size_t c = 0; c < cand_shifted.size(); ++c) {
            cand_exps_.push_back(exponents(cand_shifted[c]));
            cand_phase_.push_back((cand_sigma_sizes[c] / r_) % n_);
        }
    }

    long long term_count() const { return static_cast<long long>(vectors_.size()); }

    std::vector<C> run(unsigned threads) const {
        const std::size_t cands = cand_exps_.size();
        const std::size_t chunk = 64;
        const std::size_t nchunks = (vectors_.size() + chunk - 1) / chunk;
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nchunks)));

        std::vector<std::vector<C>> slot(nchunks, std::vector<C>(cands, C{}));
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            while (true) {
                const std::size_t ci = next.fetch_add(1);
                if (ci >= nchunks) break;
                const std::size_t lo = ci * chunk;
                const std::size_t hi = std::min(lo + chunk, vectors_.size());
                for (std::size_t i = lo; i < hi; ++i) accumulate_term(vectors_[i], slot[ci]);
            }
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }

        // Pairwise fold over chunk slots.
        std::vector<std::vector<C>> level_vals = std::move(slot);
        while (level_vals.size() > 1) {
            std::vector<std::vector<C>> up;
            up.reserve((level_vals.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < level_vals.size(); i += 2) {
                std::vector<C> s(cands);
                for (std::size_t c = 0; c < cands; ++c)
                    s[c] = level_vals[i][c] + level_vals[i + 1][c];
                up.push_back(std::move(s));
            }
            if (level_vals.size() % 2) up.push_back(std::move(level_vals.back()));
            level_vals = std::move(up);
        }
        return level_vals.empty() ? std::vector<C>(cands, C{}) : level_vals.front();
    }

private:
    std::vector<long> exponents(const Partition& p) const {
        std::vector<long> e(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i)
            e[static_cast<std::size_t>(i)] = p.part(i) + (r_ - 1 - i);
        return e;
    }

    C alternant(const std::vector<long>& exps, const std::vector<int>& v, long long shift) const {
        C out{};
        for (std::size_t p = 0; p < perms_.perm.size(); ++p) {
            long long dot = shift;
            const auto& perm = perms_.perm[p];
            for (int i = 0; i < r_; ++i)
                dot += exps[static_cast<std::size_t>(i)] *
                       v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            const C w = pow_[static_cast<std::size_t>(dot % n_)];
            out += perms_.sign[p] > 0 ? w : -w;
        }
        return out;
    }

    void accumulate_term(const SummationVector& vec, std::vector<C>& acc) const {
        const auto& v = vec.v;
        long long wsum = 0, sumv = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            wsum += static_cast<long long>(j) * v[j];
            sumv += v[j];
        }
        double sin_factor = 1.0;
        C vprod{1.0, 0.0};
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < r_; ++j) {
                const unsigned d = static_cast<unsigned>(v[static_cast<std::size_t>(i)] -
                                                         v[static_cast<std::size_t>(j)]);
                sin_factor *= inv_sin_sq_[d];
                vprod *= pow_[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])] -
                         pow_[static_cast<std::size_t>(v[static_cast<std::size_t>(j)])];
            }
        C vq{1.0, 0.0};
        for (int e = 0; e < q_; ++e) vq *= vprod;

        C stat{sin_factor, 0.0};
        for (const auto& exps : static_exps_) stat *= alternant(exps, v, 0);
        stat /= vq;

        for (std::size_t c = 0; c < cand_exps_.size(); ++c) {
            const long long p = (cand_phase_[c] * (sumv % n_)) % n_;
            const long long shift = (n_ - p) % n_;
            acc[c] += stat * alternant(cand_exps_[c], v, shift);
        }
    }

    int r_;
    unsigned n_;
    int q_;
    PermTable perms_;
    std::vector<SummationVector> vectors_;
    std::vector<C> pow_;
    std::vector<double> inv_sin_sq_;
    std::vector<std::vector<long>> static_exps_;
    std::vector<std::vector<long>> cand_exps_;
    std::vector<long long> cand_phase_;
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

}  // namespace detail

struct SumOptions {
    Backend backend = Backend::exact;
    std::optional<int> level;  // auto (condition-minimal) when absent
    double tolerance = 1e-6;
    unsigned threads = 0;  // 0: hardware default
};

struct LRResult {
    long long coefficient = 0;
    int level_used = 0;
    long long term_count = 0;
    Backend backend = Backend::exact;
    std::optional<double> float_residual;
    double elapsed_ms = 0.0;
};

namespace detail {

inline long long finalize_exact(const BigInt& numer, unsigned n, int r, unsigned d) {
    const BigInt denom = BigInt(r) * big_pow(BigInt(n), d + static_cast<unsigned>(r) - 1);
    const Rational value(numer, denom);
    if (denominator(value) != 1 || numerator(value) < 0)
        throw NonIntegerResult("sum / (r (r+k)^(r-1)) is not a nonnegative integer: " +
                               value.str());
    return to_ll(numerator(value));
}

inline std::pair<long long, double> finalize_float(const std::complex<double>& sum, unsigned n,
                                                   int r, double tolerance) {
    const double denom = r * std::pow(static_cast<double>(n), r - 1);
    const std::complex<double> value = sum / denom;
    const long long rounded = std::llround(value.real());
    const long long coeff = std::max(rounded, 0LL);
    const double residual = std::hypot(value.real() - static_cast<double>(coeff), value.imag());
    if (residual > tolerance)
        throw ResidualTooLarge("float residual " + std::to_string(residual) +
                               " exceeds tolerance; use the exact backend");
    return {coeff, residual};
}

}  // namespace detail

inline LRResult verlinde_sum(const ParabolicType& sigma, const SumOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const int r = sigma.rank;
    const unsigned n = static_cast<unsigned>(r + sigma.level);
    std::vector<Partition> statics(sigma.shifted.begin(), sigma.shifted.end() - 1);
    const std::vector<Partition> cands{sigma.shifted.back()};
    const std::vector<long long> sizes{sigma.sigma_size};
    const unsigned threads = detail::resolve_threads(opts.threads);

    LRResult res;
    res.level_used = sigma.level;
    res.backend = opts.backend;
    if (opts.backend == Backend::exact) {
        detail::ExactVerlindeEngine engine(r, sigma.level, statics, cands, sizes);
        res.term_count = engine.term_count();
        res.coefficient = detail::finalize_exact(engine.run(threads)[0], n, r, engine.denom_power());
    } else {
        detail::FloatVerlindeEngine engine(r, sigma.level, statics, cands, sizes);
        res.term_count = engine.term_count();
        auto [coeff, residual] = detail::finalize_float(engine.run(threads)[0], n, r, opts.tolerance);
        res.coefficient = coeff;
        res.float_residual = residual;
    }
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// Pre-division rational sum_v term(v); the theorem guarantees dividing it by
// r (r+k)^(r-1) yields a nonnegative integer (cf. the integrality check).
inline Rational verlinde_presum(const ParabolicType& sigma, unsigned threads = 0) {
    const int r = sigma.rank;
    std::vector<Partition> statics(sigma.shifted.begin(), sigma.shifted.end() - 1);
    detail::ExactVerlindeEngine engine(r, sigma.level, statics, {sigma.shifted.back()},
                                       {sigma.sigma_size});
    const BigInt numer = engine.run(detail::resolve_threads(threads))[0];
    return Rational(numer, big_pow(BigInt(static_cast<unsigned>(r + sigma.level)),
                                   engine.denom_power()));
}

inline LRResult tensor_multiplicity(const std::vector<Partition>& factors, const Partition& target,
                                    const SumOptions& opts = {}) {
    if (factors.empty()) throw Error("tensor_multiplicity: no factors");
    for (const auto& f : factors)
        if (f.rank() != target.rank()) throw RankMismatch("tensor_multiplicity: ranks differ");

    long long total = 0;
    for (const auto& f : factors) total += f.size();
    if (total != target.size()) {
        LRResult res;
        res.backend = opts.backend;
        return res;  // coefficient 0, term_count 0: the size-mismatch short circuit
    }
    std::vector<Partition> constituents = factors;
    constituents.push_back(target.dual());
    const int k = opts.level.value_or(choose_level(constituents));
    return verlinde_sum(build_type(factors, target, k), opts);
}

inline LRResult lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const SumOptions& opts = {}) {
    return tensor_multiplicity({lambda, mu}, nu, opts);
}

struct DecomposeResult {
    DecompositionTable table;  // positive multiplicities only; absent = computed 0
    int level_used = 0;
    long long term_count = 0;
    long long candidates_tested = 0;
};

// Tensor decomposition through the formula: every candidate in the support
// box is evaluated against one shared level (valid for all candidates by the
// condition; k-independence makes the shared choice immaterial), reusing the
// candidate-independent per-term factors.
inline DecomposeResult verlinde_decompose(const std::vector<Partition>& factors,
                                          const SumOptions& opts = {}) {
    if (factors.empty()) throw Error("verlinde_decompose: no factors");
    const int r = factors.front().rank();
    long long total = 0;
    int lo = 0, hi = 0, fspread = 0;
    for (const auto& f : factors) {
        if (f.rank() != r) throw RankMismatch("verlinde_decompose: ranks differ");
        total += f.size();
        lo += f.parts().back();
        hi += f.parts().front();
        fspread += f.spread();
    }
    const auto candidates = partitions_in_box(r, lo, hi, total);
    DecomposeResult res;
    res.candidates_tested = static_cast<long long>(candidates.size());
    if (candidates.empty()) return res;

    int max_spread = 0;
    for (const auto& c : candidates) max_spread = std::max(max_spread, c.spread());
    const int k = opts.level.value_or(r * (fspread + max_spread) + 1);
    for (const auto& c : candidates)
        if (k <= r * (static_cast<long long>(fspread) + c.spread()))
            throw LevelTooSmall("level " + std::to_string(k) +
                                " violates the condition for candidate " + c.to_string());
    res.level_used = k;

    // Shared static part: shifted factors plus padding when fewer than three
    // constituents would result.
    std::vector<Partition> statics;
    for (const auto& f : factors) statics.push_back(f.level_shift(k));
    const Partition zero(std::vector<int>(static_cast<std::size_t>(r), 0));
    while (statics.size() + 1 < 3) statics.push_back(zero.level_shift(k));
    long long static_size = 0;
    for (const auto& p : statics) static_size += p.size();

    std::vector<Partition> cand_shifted;
    std::vector<long long> cand_sizes;
    for (const auto& c : candidates) {
        cand_shifted.push_back(c.dual().level_shift(k));
        cand_sizes.push_back(static_size + cand_shifted.back().size());
        if (cand_sizes.back() % r != 0) throw Error("internal: |Sigma| not divisible by rank");
    }

    const unsigned n = static_cast<unsigned>(r + k);
    const unsigned threads = detail::resolve_threads(opts.threads);
    if (opts.backend == Backend::exact) {
        detail::ExactVerlindeEngine engine(r, k, statics, cand_shifted, cand_sizes);
        res.term_count = engine.term_count();
        const auto numers = engine.run(threads);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const long long coeff =
                detail::finalize_exact(numers[c], n, r, engine.denom_power());
            if (coeff > 0) res.table.emplace(candidates[c], coeff);
        }
    } else {
        detail::FloatVerlindeEngine engine(r, k, statics, cand_shifted, cand_sizes);
        res.term_count = engine.term_count();
        const auto sums = engine.run(threads);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            auto [coeff, residual] = detail::finalize_float(sums[c], n, r, opts.tolerance);
            if (coeff > 0) res.table.emplace(candidates[c], coeff);
        }
    }
    return res;
}

}  // namespace lrv

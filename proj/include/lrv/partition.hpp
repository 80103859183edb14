// GL_r highest weights: weakly decreasing integer vectors of a fixed rank.
// Trailing zeros are significant and entries may be negative; the rank is
// part of the identity of the object.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lrv/errors.hpp"
#include "lrv/numeric.hpp"

namespace lrv {

class Partition;

struct BlockForm {
    struct Block {
        int value;
        int multiplicity;
        friend bool operator==(const Block&, const Block&) = default;
    };
    std::vector<Block> blocks;

    std::vector<int> expand() const {
        std::vector<int> parts;
        for (const auto& b : blocks) parts.insert(parts.end(), b.multiplicity, b.value);
        return parts;
    }
    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw ParseError("partition must have at least one part");
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw ParseError("entry " + std::to_string(i + 1) +
                                 ": breaks weak decrease (" + std::to_string(parts_[i]) +
                                 " after " + std::to_string(parts_[i - 1]) + ")");
    }

    // Text form "a_1,a_2,...,a_r"; the error names the first offending entry.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::size_t pos = 0, idx = 0;
        while (true) {
            ++idx;
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            std::size_t consumed = 0;
            long v = 0;
            try {
                v = std::stol(tok, &consumed);
            } catch (const std::exception&) {
                throw ParseError("entry " + std::to_string(idx) + ": not an integer: '" + tok + "'");
            }
            if (consumed != tok.size() || tok.empty())
                throw ParseError("entry " + std::to_string(idx) + ": not an integer: '" + tok + "'");
            if (v < -1000000 || v > 1000000)
                throw ParseError("entry " + std::to_string(idx) + ": out of supported range");
            parts.push_back(static_cast<int>(v));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                throw ParseError("entry " + std::to_string(i + 1) + ": breaks weak decrease");
        return Partition(std::move(parts));
    }

    int rank() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }  // 0-based

    long long size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    Partition dual() const {
        std::vector<int> d(parts_.rbegin(), parts_.rend());
        for (int& x : d) x = -x;
        return Partition(std::move(d));
    }

    int spread() const { return parts_.front() - parts_.back(); }

    BlockForm block_form() const {
        BlockForm bf;
        for (int x : parts_) {
            if (!bf.blocks.empty() && bf.blocks.back().value == x)
                ++bf.blocks.back().multiplicity;
            else
                bf.blocks.push_back({x, 1});
        }
        return bf;
    }

    // (lambda_1 - value) per block, ascending from 0 to spread().
    std::vector<int> weights() const {
        std::vector<int> w;
        for (const auto& b : block_form().blocks) w.push_back(parts_.front() - b.value);
        return w;
    }

    // ^k lambda: entries k - lambda_1 + lambda_i, top entry exactly k.
    Partition level_shift(int k) const {
        if (k <= spread())
            throw LevelTooSmall("level " + std::to_string(k) + " <= spread " +
                                std::to_string(spread()));
        std::vector<int> s(parts_);
        for (int& x : s) x = k - parts_.front() + x;
        return Partition(std::move(s));
    }

    Partition shifted_by(int c) const {
        std::vector<int> s(parts_);
        for (int& x : s) x += c;
        return Partition(std::move(s));
    }

    // Weyl dimension of V(lambda): prod_{i<j} (l_i - l_j + j - i) / (j - i).
    BigInt gl_dimension() const {
        Rational dim = 1;
        const int r = rank();
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                dim *= Rational(parts_[i] - parts_[j] + j - i, j - i);
        assert(denominator(dim) == 1);
        return numerator(dim);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Multiplicity table of a tensor decomposition, keyed by target partition.
using DecompositionTable = std::map<Partition, long long>;

// Uniform translation making every entry nonnegative; the same shift t is
// applied to every input (LR coefficients are invariant under shifting
// lambda and nu together, so callers shift those two and leave mu alone).
inline std::pair<std::vector<Partition>, int> normalize_nonneg(const std::vector<Partition>& ps) {
    assert(!ps.empty());
    const int r = ps.front().rank();
    int lo = 0;
    for (const auto& p : ps) {
        if (p.rank() != r) throw RankMismatch("normalize_nonneg: mixed ranks");
        lo = std::min(lo, p.parts().back());
    }
    const int t = lo < 0 ? -lo : 0;
    std::vector<Partition> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.shifted_by(t));
    return {std::move(out), t};
}

// All weakly decreasing r-tuples with entries in [lo, hi] and the given sum.
// This is the complete-support box used by tensor decomposition.
inline std::vector<Partition> partitions_in_box(int rank, int lo, int hi, long long sum) {
    std::vector<Partition> out;
    if (rank <= 0 || lo > hi) return out;
    std::vector<int> cur(static_cast<std::size_t>(rank));
    auto rec = [&](auto&& self, int i, int maxv, long long rem) -> void {
        if (i == rank) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        const int left = rank - i - 1;
        const long long vmax = std::min<long long>(maxv, rem - static_cast<long long>(left) * lo);
        for (int v = static_cast<int>(std::min<long long>(vmax, hi)); v >= lo; --v) {
            if (rem - v > static_cast<long long>(left) * v) break;  // later entries can't reach rem
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v, rem - v);
        }
    };
    rec(rec, 0, hi, sum);
    return out;
}

}  // namespace lrv

#pragma once

#include "nilcox/checked.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nilcox {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is allowed and denotes the unit of degree 0.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    /// Sorts the given parts (dropping zeros) into a partition.
    static Partition sorted(std::vector<Int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Int sum() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

    bool is_bounded_by(Int k) const { return parts_.empty() || parts_.front() <= k; }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<Int> parts_;
};

/// Composition: finite sequence of positive parts, order significant.
class Composition {
  public:
    Composition() = default;

    explicit Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
        for (Int p : parts_)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }

    Composition(std::initializer_list<Int> parts) : Composition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Int sum() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

    Partition to_partition() const {
        std::vector<Int> p = parts_;
        std::sort(p.begin(), p.end(), std::greater<>());
        return Partition(std::move(p));
    }

    auto operator<=>(const Composition&) const = default;

  private:
    std::vector<Int> parts_;
};

/// All partitions of n with parts at most max_part, in decreasing
/// lexicographic order.  Decreasing lex is a linear extension of dominance
/// order, which is what the triangular solves downstream rely on.
inline std::vector<Partition> partitions_of(Int n, Int max_part) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int rem, Int cap) -> void {
        if (rem == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (Int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::max<Int>(max_part, 0));
    return out;
}

inline std::vector<Partition> partitions_of(Int n) { return partitions_of(n, n); }

/// All compositions of n (2^(n-1) of them), lexicographic by parts.
inline std::vector<Composition> compositions_of(Int n) {
    if (n < 0) return {};
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int rem) -> void {
        if (rem == 0) {
            out.emplace_back(Composition(cur));
            return;
        }
        for (Int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// Coarsenings of J: every composition obtained by merging adjacent runs.
inline std::vector<Composition> coarsenings_of(const Composition& j) {
    const auto& p = j.parts();
    if (p.empty()) return {Composition{}};
    std::vector<Composition> out;
    const std::size_t gaps = p.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        std::vector<Int> cur{p[0]};
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (std::uint64_t{1} << g))
                cur.back() += p[g + 1]; // merge across this gap
            else
                cur.push_back(p[g + 1]);
        }
        out.emplace_back(Composition(std::move(cur)));
    }
    return out;
}

/// Refinements of J: compositions splitting each part of J in place.
inline std::vector<Composition> refinements_of(const Composition& j) {
    std::vector<std::vector<Int>> acc{{}};
    for (Int part : j.parts()) {
        auto splits = compositions_of(part);
        std::vector<std::vector<Int>> next;
        for (const auto& prefix : acc)
            for (const auto& s : splits) {
                auto v = prefix;
                v.insert(v.end(), s.parts().begin(), s.parts().end());
                next.push_back(std::move(v));
            }
        acc = std::move(next);
    }
    std::vector<Composition> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(Composition(std::move(v)));
    return out;
}

} // namespace nilcox

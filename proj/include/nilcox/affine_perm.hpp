#pragma once

#include "nilcox/checked.hpp"
#include "nilcox/partition.hpp"

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilcox {

/// Rank of the affine symmetric group: k simple generators s_1..s_k plus
/// the affine generator s_0; everything is periodic with period k+1.
class Rank {
  public:
    explicit Rank(Int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("rank k must be >= 1");
    }
    Int k() const { return k_; }
    Int period() const { return k_ + 1; }
    bool operator==(const Rank&) const = default;

  private:
    Int k_;
};

/// Element of the affine symmetric group in window notation.
///
/// A permutation w : Z -> Z with w(i + k + 1) = w(i) + k + 1 is stored as
/// its window (w(1), ..., w(k+1)).  Invariants: the entries are pairwise
/// distinct mod k+1 and sum to (k+1)(k+2)/2.
///
/// Word convention: a product s_{i_1} s_{i_2} ... s_{i_l} acts with the
/// rightmost letter applied first, i.e. w(n) = s_{i_1}(s_{i_2}(...(s_{i_l}(n)))).
/// multiply(v, w) composes as functions with w applied first.
class AffinePerm {
  public:
    AffinePerm(Rank rank, std::vector<Int> window)
        : rank_(rank), window_(std::move(window)) {
        validate();
        length_ = compute_length();
    }

    const Rank& rank() const { return rank_; }
    const std::vector<Int>& window() const { return window_; }

    /// Coxeter length, computed from the window by the inversion-count
    /// formula  l(w) = sum_{1<=i<j<=k+1} |floor((w(j)-w(i))/(k+1))|.
    Int length() const { return length_; }

    /// Evaluate w(n) for any integer n via quasi-periodicity.
    Int apply(Int n) const {
        const Int p = rank_.period();
        // n = r + p*q with 1 <= r <= p
        Int q = (n - 1) / p;
        if (n - 1 < 0 && (n - 1) % p != 0) --q; // floor division
        const Int r = n - p * q;
        return window_[static_cast<std::size_t>(r - 1)] + p * q;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < window_.size(); ++i)
            if (window_[i] != static_cast<Int>(i) + 1) return false;
        return true;
    }

    bool operator==(const AffinePerm& o) const {
        return rank_ == o.rank_ && window_ == o.window_;
    }

    /// Orders by (length, window lexicographic).  This is the term order
    /// used for all serialized output.
    std::strong_ordering operator<=>(const AffinePerm& o) const {
        if (auto c = length_ <=> o.length_; c != 0) return c;
        return std::lexicographical_compare_three_way(
            window_.begin(), window_.end(), o.window_.begin(), o.window_.end());
    }

  private:
    void validate() const {
        const Int p = rank_.period();
        if (static_cast<Int>(window_.size()) != p)
            throw std::invalid_argument("window size must be k+1");
        std::set<Int> residues;
        Int sum = 0;
        for (Int v : window_) {
            residues.insert(((v % p) + p) % p);
            sum = checked_add(sum, v);
        }
        if (static_cast<Int>(residues.size()) != p)
            throw std::invalid_argument("window entries must be distinct mod k+1");
        if (sum != p * (p + 1) / 2)
            throw std::invalid_argument("window entries must sum to (k+1)(k+2)/2");
    }

    Int compute_length() const {
        const Int p = rank_.period();
        Int len = 0;
        for (std::size_t i = 0; i < window_.size(); ++i)
            for (std::size_t j = i + 1; j < window_.size(); ++j) {
                Int d = window_[j] - window_[i];
                Int q = d / p;
                if (d < 0 && d % p != 0) --q;
                len += q < 0 ? -q : q;
            }
        return len;
    }

    Rank rank_;
    std::vector<Int> window_;
    Int length_;
};

inline AffinePerm identity(Rank rank) {
    std::vector<Int> w(static_cast<std::size_t>(rank.period()));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Int>(i) + 1;
    return AffinePerm(rank, std::move(w));
}

/// Simple generator s_i: swaps i + m(k+1) and i+1 + m(k+1) for all m.
inline AffinePerm simple(Rank rank, Int i) {
    if (i < 0 || i > rank.k())
        throw std::invalid_argument("simple generator index must be in 0..k");
    const Int p = rank.period();
    std::vector<Int> w(static_cast<std::size_t>(p));
    for (Int pos = 1; pos <= p; ++pos) {
        Int v = pos;
        const Int r = pos % p; // pos in 1..p, so r in {1..p-1, 0}
        if (r == i % p)
            v = pos + 1;
        else if (r == (i + 1) % p)
            v = pos - 1;
        w[static_cast<std::size_t>(pos - 1)] = v;
    }
    return AffinePerm(rank, std::move(w));
}

/// Transposition t_{i,j}: swaps i + m(k+1) and j + m(k+1) for all m,
/// fixes every integer not congruent to i or j.  Requires i < j and
/// i != j mod k+1.
inline AffinePerm transposition(Rank rank, Int i, Int j) {
    const Int p = rank.period();
    if (i >= j) throw std::invalid_argument("transposition requires i < j");
    if (((j - i) % p) == 0)
        throw std::invalid_argument("transposition requires i != j mod k+1");
    std::vector<Int> w(static_cast<std::size_t>(p));
    const Int ri = ((i % p) + p) % p;
    const Int rj = ((j % p) + p) % p;
    for (Int pos = 1; pos <= p; ++pos) {
        const Int r = ((pos % p) + p) % p;
        Int v = pos;
        if (r == ri)
            v = pos + (j - i); // pos = i + mp maps to j + mp
        else if (r == rj)
            v = pos - (j - i);
        w[static_cast<std::size_t>(pos - 1)] = v;
    }
    return AffinePerm(rank, std::move(w));
}

/// Product v*w composed as functions, w applied first: (vw)(n) = v(w(n)).
inline AffinePerm multiply(const AffinePerm& v, const AffinePerm& w) {
    if (!(v.rank() == w.rank())) throw std::invalid_argument("rank mismatch");
    const Int p = v.rank().period();
    std::vector<Int> win(static_cast<std::size_t>(p));
    for (Int pos = 1; pos <= p; ++pos)
        win[static_cast<std::size_t>(pos - 1)] = v.apply(w.apply(pos));
    return AffinePerm(v.rank(), std::move(win));
}

inline AffinePerm inverse(const AffinePerm& w) {
    const Int p = w.rank().period();
    std::vector<Int> win(static_cast<std::size_t>(p));
    for (Int pos = 1; pos <= p; ++pos) {
        const Int v = w.window()[static_cast<std::size_t>(pos - 1)];
        // v = r + p*q with 1 <= r <= p; then w^{-1}(r) = pos - p*q.
        Int q = (v - 1) / p;
        if (v - 1 < 0 && (v - 1) % p != 0) --q;
        const Int r = v - p * q;
        win[static_cast<std::size_t>(r - 1)] = pos - p * q;
    }
    return AffinePerm(w.rank(), std::move(win));
}

/// Left descent set: residues i with l(s_i w) < l(w),
/// i.e. w^{-1}(i) > w^{-1}(i+1).
inline std::set<Int> left_descents(const AffinePerm& w) {
    const AffinePerm winv = inverse(w);
    std::set<Int> out;
    for (Int i = 0; i <= w.rank().k(); ++i)
        if (winv.apply(i) > winv.apply(i + 1)) out.insert(i);
    return out;
}

/// A reduced word [i_1, ..., i_l] with w = s_{i_1} ... s_{i_l}
/// (rightmost letter applied first).  Deterministic: peels the smallest
/// left descent at each step.
inline std::vector<Int> reduced_word(const AffinePerm& w) {
    std::vector<Int> word;
    AffinePerm cur = w;
    while (!cur.is_identity()) {
        const auto desc = left_descents(cur);
        const Int i = *desc.begin();
        word.push_back(i);
        cur = multiply(simple(cur.rank(), i), cur);
    }
    return word;
}

/// Product of a word of simple generators, rightmost applied first.
inline AffinePerm from_word(Rank rank, const std::vector<Int>& word) {
    AffinePerm w = identity(rank);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = multiply(simple(rank, *it), w);
    return w;
}

/// 0-Grassmannian test: w is a minimal length coset representative of
/// w W_0 iff its window is strictly increasing.
inline bool is_grassmannian(const AffinePerm& w) {
    const auto& win = w.window();
    for (std::size_t i = 0; i + 1 < win.size(); ++i)
        if (win[i] >= win[i + 1]) return false;
    return true;
}

/// Element of the finite subgroup W_0 = <s_1..s_k>: the window is a
/// permutation of 1..k+1.
inline bool is_finite(const AffinePerm& w) {
    for (Int v : w.window())
        if (v < 1 || v > w.rank().period()) return false;
    return true;
}

/// Factors w = w_grass * w_fin with w_grass 0-Grassmannian, w_fin in W_0,
/// lengths adding.
inline std::pair<AffinePerm, AffinePerm> grassmannian_factorize(const AffinePerm& w) {
    std::vector<Int> sorted = w.window();
    std::sort(sorted.begin(), sorted.end());
    AffinePerm grass(w.rank(), std::move(sorted));
    // w = grass * fin  =>  fin = grass^{-1} * w
    AffinePerm fin = multiply(inverse(grass), w);
    if (!is_finite(fin) || grass.length() + fin.length() != w.length())
        throw std::logic_error("grassmannian factorization failed");
    return {std::move(grass), std::move(fin)};
}

// ---------------------------------------------------------------------------
// (k+1)-cores and the bijection between k-bounded partitions and W^0
// ---------------------------------------------------------------------------

/// A (k+1)-core: partition shape with no cell of hook length k+1.
/// Residue of cell (row r, col c), 0-indexed, is (c - r) mod (k+1).
class Core {
  public:
    explicit Core(Rank rank, std::vector<Int> rows = {})
        : rank_(rank), rows_(std::move(rows)) {
        trim();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0) throw std::invalid_argument("core rows must be positive");
            if (i > 0 && rows_[i] > rows_[i - 1])
                throw std::invalid_argument("core rows must be weakly decreasing");
        }
        if (!is_core())
            throw std::invalid_argument("shape has a cell of hook length k+1");
    }

    const Rank& rank() const { return rank_; }
    const std::vector<Int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    bool operator==(const Core&) const = default;

    Int hook(std::size_t r, Int c) const {
        const Int arm = rows_[r] - 1 - c;
        Int leg = 0;
        for (std::size_t r2 = r + 1; r2 < rows_.size(); ++r2)
            if (rows_[r2] > c) ++leg;
        return arm + leg + 1;
    }

    bool is_core() const {
        const Int p = rank_.period();
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (Int c = 0; c < rows_[r]; ++c)
                if (hook(r, c) == p) return false;
        return true;
    }

    Int residue(Int row, Int col) const {
        const Int p = rank_.period();
        return (((col - row) % p) + p) % p;
    }

    /// The k-bounded partition with lambda_i = #{cells in row i of hook
    /// length <= k}.
    Partition to_k_bounded() const {
        std::vector<Int> parts;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Int cnt = 0;
            for (Int c = 0; c < rows_[r]; ++c)
                if (hook(r, c) <= rank_.k()) ++cnt;
            parts.push_back(cnt);
        }
        return Partition(std::move(parts));
    }

    /// Builds the (k+1)-core of a k-bounded partition, bottom row up: each
    /// row is shifted right by the least amount that keeps all its
    /// lambda_i rightmost cells at hook length <= k.
    static Core from_k_bounded(Rank rank, const Partition& lambda) {
        if (!lambda.is_bounded_by(rank.k()))
            throw std::invalid_argument("partition is not k-bounded");
        const auto& lp = lambda.parts();
        std::vector<Int> rows(lp.size(), 0);
        for (std::size_t ii = lp.size(); ii-- > 0;) {
            Int shift = 0;
            auto excess = [&](Int d) {
                Int leg = 0;
                for (std::size_t j = ii + 1; j < lp.size(); ++j)
                    if (rows[j] > d) ++leg;
                return lp[ii] + leg > rank.k();
            };
            while (excess(shift)) ++shift;
            rows[ii] = lp[ii] + shift;
        }
        return Core(rank, std::move(rows));
    }

    std::vector<std::pair<Int, Int>> addable_corners() const {
        std::vector<std::pair<Int, Int>> out;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (r == 0 || rows_[r] < rows_[r - 1])
                out.emplace_back(static_cast<Int>(r), rows_[r]);
        out.emplace_back(static_cast<Int>(rows_.size()), 0);
        return out;
    }

    std::vector<std::pair<Int, Int>> removable_corners() const {
        std::vector<std::pair<Int, Int>> out;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (r + 1 == rows_.size() || rows_[r] > rows_[r + 1])
                out.emplace_back(static_cast<Int>(r), rows_[r] - 1);
        return out;
    }

    /// Action of s_i on cores: adds all addable corners of residue i if
    /// there are any, otherwise removes all removable corners of residue i,
    /// otherwise fixes the core.
    Core act_simple(Int i) const {
        std::vector<Int> rows = rows_;
        bool changed = false;
        for (auto [r, c] : addable_corners())
            if (residue(r, c) == i) {
                if (static_cast<std::size_t>(r) == rows.size())
                    rows.push_back(1);
                else
                    ++rows[static_cast<std::size_t>(r)];
                changed = true;
            }
        if (!changed)
            for (auto [r, c] : removable_corners())
                if (residue(r, c) == i) {
                    --rows[static_cast<std::size_t>(r)];
                    changed = true;
                }
        return Core(rank_, std::move(rows));
    }

    Int cell_count() const {
        Int n = 0;
        for (Int r : rows_) n += r;
        return n;
    }

  private:
    void trim() {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    }

    Rank rank_;
    std::vector<Int> rows_;
};

/// The 0-Grassmannian element w_lambda attached to a k-bounded partition,
/// obtained by peeling the (k+1)-core of lambda one residue at a time.
inline AffinePerm partition_to_grassmannian(Rank rank, const Partition& lambda) {
    Core core = Core::from_k_bounded(rank, lambda);
    std::vector<Int> word;
    while (!core.empty()) {
        bool peeled = false;
        for (Int i = 0; i <= rank.k() && !peeled; ++i) {
            Core next = core.act_simple(i);
            if (next.cell_count() < core.cell_count()) {
                word.push_back(i);
                core = std::move(next);
                peeled = true;
            }
        }
        if (!peeled) throw std::logic_error("core peeling stalled");
    }
    AffinePerm w = from_word(rank, word);
    if (!is_grassmannian(w) || w.length() != lambda.sum())
        throw std::logic_error("core bijection produced a bad element");
    return w;
}

/// Inverse bijection: rejects w not in W^0.
inline Partition grassmannian_to_partition(const AffinePerm& w) {
    if (!is_grassmannian(w))
        throw std::invalid_argument("element is not 0-Grassmannian");
    const Rank rank = w.rank();
    Core core(rank);
    const auto word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Core next = core.act_simple(*it);
        if (next.cell_count() <= core.cell_count())
            throw std::logic_error("core action failed to grow");
        core = std::move(next);
    }
    return core.to_k_bounded();
}

/// All elements of length <= max_length, grouped by length, produced by
/// breadth-first closure under left multiplication by simple generators.
inline std::vector<std::vector<AffinePerm>> elements_up_to(
    Rank rank, Int max_length, std::size_t element_limit = 2'000'000) {
    if (max_length < 0) throw std::invalid_argument("length bound must be >= 0");
    std::vector<std::vector<AffinePerm>> levels;
    levels.push_back({identity(rank)});
    std::size_t total = 1;
    for (Int l = 0; l < max_length; ++l) {
        std::set<AffinePerm> next;
        for (const auto& w : levels.back())
            for (Int i = 0; i <= rank.k(); ++i) {
                AffinePerm v = multiply(simple(rank, i), w);
                if (v.length() == l + 1) next.insert(std::move(v));
            }
        total += next.size();
        if (total > element_limit)
            throw ResourceLimitError("element enumeration exceeds configured limit");
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

} // namespace nilcox

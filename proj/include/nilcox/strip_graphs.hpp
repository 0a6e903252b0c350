#pragma once

#include "nilcox/affine_perm.hpp"
#include "nilcox/fomin_stanley.hpp"
#include "nilcox/partition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace nilcox {

/// Marked strong order edge x -> y: l(x) = l(y) + 1, y t_{i,j} = x for
/// some i <= 0 < j, labelled by the marking y(j).  Distinct admissible
/// representations (i, j) of the same transposition give distinct edges.
struct StrongEdge {
    AffinePerm source;
    AffinePerm target;
    Int label;

    bool operator==(const StrongEdge&) const = default;
    auto operator<=>(const StrongEdge&) const = default;
};

/// Weak strips: all v with l(v) = l(w) + j and v w^{-1} cyclically
/// decreasing, i.e. v = w_D w over the size-j residue subsets D for which
/// lengths add.  Distinct D give distinct v, so the result is a set.
inline std::set<AffinePerm> weak_strip_targets(const AffinePerm& w, Int j) {
    const Rank rank = w.rank();
    if (j < 0 || j > rank.k())
        throw std::invalid_argument("weak strip size must be in 0..k");
    std::set<AffinePerm> out;
    std::vector<Int> subset;
    auto rec = [&](auto&& self, Int next) -> void {
        if (static_cast<Int>(subset.size()) == j) {
            AffinePerm wd = cyclically_decreasing(ResidueSet(rank, subset));
            AffinePerm v = multiply(wd, w);
            if (v.length() == w.length() + j) out.insert(std::move(v));
            return;
        }
        for (Int r = next; r <= rank.k(); ++r) {
            subset.push_back(r);
            self(self, r + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Cached strong order graph for one rank.  Edge lists are computed per
/// element on demand and never invalidated, so readers may hold references
/// across queries; insertion is serialized.
class StrongGraph {
  public:
    static StrongGraph& instance(Rank rank) {
        static std::mutex mu;
        static std::map<Int, std::unique_ptr<StrongGraph>> graphs;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = graphs[rank.k()];
        if (!slot) slot = std::unique_ptr<StrongGraph>(new StrongGraph(rank));
        return *slot;
    }

    const Rank& rank() const { return rank_; }

    const std::vector<StrongEdge>& edges_from(const AffinePerm& x) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = edges_.find(x);
        if (it != edges_.end()) return *it->second;
        auto computed = std::make_unique<std::vector<StrongEdge>>(compute_edges(x));
        return *edges_.emplace(x, std::move(computed)).first->second;
    }

    const std::vector<AffinePerm>& covers_of(const AffinePerm& x) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = covers_.find(x);
        if (it != covers_.end()) return *it->second;
        auto computed = std::make_unique<std::vector<AffinePerm>>(compute_covers(x));
        return *covers_.emplace(x, std::move(computed)).first->second;
    }

  private:
    explicit StrongGraph(Rank rank) : rank_(rank) {}

    // Enumerates the transpositions t_{a,b} (canonical 1 <= a <= k+1,
    // a < b, b - a not a multiple of k+1) that lower the length of x by
    // exactly one.  A cover transposition moves a to b, and left
    // multiplication by a simple generator displaces any value by at most
    // one, so b - a <= l(t) <= 2 l(x) - 1 bounds the sweep.
    template <typename Visit>
    void for_each_cover(const AffinePerm& x, Visit&& visit) const {
        const Int p = rank_.period();
        const Int max_span = 2 * x.length() - 1;
        for (Int a = 1; a <= p; ++a)
            for (Int span = 1; span <= max_span; ++span) {
                if (span % p == 0) continue;
                const Int b = a + span;
                AffinePerm t = transposition(rank_, a, b);
                AffinePerm y = multiply(x, t);
                if (y.length() == x.length() - 1) visit(y, a, b);
            }
    }

    std::vector<StrongEdge> compute_edges(const AffinePerm& x) const {
        std::vector<StrongEdge> out;
        const Int p = rank_.period();
        for_each_cover(x, [&](const AffinePerm& y, Int a, Int b) {
            // representations (i, j) = (a - mp, b - mp) with i <= 0 < j
            for (Int m = 1; m * p <= b - 1; ++m) {
                const Int i = a - m * p;
                const Int j = b - m * p;
                if (i <= 0 && j >= 1)
                    out.push_back(StrongEdge{x, y, y.apply(j)});
            }
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<AffinePerm> compute_covers(const AffinePerm& x) const {
        std::vector<AffinePerm> out;
        for_each_cover(x, [&](const AffinePerm& y, Int, Int) { out.push_back(y); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Rank rank_;
    std::mutex mu_;
    std::map<AffinePerm, std::unique_ptr<std::vector<StrongEdge>>> edges_;
    std::map<AffinePerm, std::unique_ptr<std::vector<AffinePerm>>> covers_;
};

inline const std::vector<StrongEdge>& strong_edges_from(const AffinePerm& x) {
    return StrongGraph::instance(x.rank()).edges_from(x);
}

/// Bruhat covers of x (underlying relation of the strong graph, without
/// markings; includes covers whose transposition has no i <= 0 < j
/// representation and therefore carries no strong edge).
inline const std::vector<AffinePerm>& bruhat_covers(const AffinePerm& x) {
    return StrongGraph::instance(x.rank()).covers_of(x);
}

/// Ascent composition of a label sequence: parts are the lengths of the
/// maximal weakly decreasing runs.
inline Composition ascent_composition(const std::vector<Int>& labels) {
    if (labels.empty())
        throw std::invalid_argument("ascent composition of an empty sequence");
    std::vector<Int> parts;
    Int run = 1;
    for (std::size_t a = 0; a + 1 < labels.size(); ++a) {
        if (labels[a] < labels[a + 1]) { // ascent at position a+1 (1-indexed)
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

/// Endpoints of all strong strips of length i from w (label-strictly-
/// decreasing paths in the strong graph), with path multiplicities.
inline std::map<AffinePerm, Int> strong_strip_targets(const AffinePerm& w, Int i) {
    if (i < 0) throw std::invalid_argument("strip size must be >= 0");
    std::map<AffinePerm, Int> out;
    auto& graph = StrongGraph::instance(w.rank());
    auto rec = [&](auto&& self, const AffinePerm& cur, Int steps_left, bool first,
                   Int last_label) -> void {
        if (steps_left == 0) {
            ++out[cur];
            return;
        }
        for (const StrongEdge& e : graph.edges_from(cur))
            if (first || e.label < last_label)
                self(self, e.target, steps_left - 1, false, e.label);
    };
    rec(rec, w, i, true, 0);
    return out;
}

/// Endpoints (with multiplicity) of all paths from w in the strong graph
/// whose label sequence has ascent composition exactly J.  The DFS tracks
/// the block structure: labels weakly descend within a block and must
/// ascend exactly at the block boundaries.
inline std::map<AffinePerm, Int> paths_with_ascomp(const AffinePerm& w,
                                                   const Composition& j) {
    std::map<AffinePerm, Int> out;
    if (j.empty()) {
        out.emplace(w, 1);
        return out;
    }
    auto& graph = StrongGraph::instance(w.rank());
    const auto& parts = j.parts();
    // state: position inside j (block index, steps taken within block)
    auto rec = [&](auto&& self, const AffinePerm& cur, std::size_t block,
                   Int in_block, Int last_label) -> void {
        if (block == parts.size()) {
            ++out[cur];
            return;
        }
        const bool first_step = block == 0 && in_block == 0;
        const bool new_block = in_block == 0;
        for (const StrongEdge& e : graph.edges_from(cur)) {
            if (!first_step) {
                if (new_block ? !(e.label > last_label) : !(e.label <= last_label))
                    continue;
            }
            const Int next_in_block = in_block + 1;
            if (next_in_block == parts[block])
                self(self, e.target, block + 1, 0, e.label);
            else
                self(self, e.target, block, next_in_block, e.label);
        }
    };
    rec(rec, w, 0, 0, 0);
    return out;
}

} // namespace nilcox

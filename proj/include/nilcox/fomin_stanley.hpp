#pragma once

#include "nilcox/affine_perm.hpp"
#include "nilcox/nilcoxeter.hpp"
#include "nilcox/partition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nilcox {

/// Proper subset D of the residues {0, ..., k}.
class ResidueSet {
  public:
    ResidueSet(Rank rank, std::vector<Int> elems) : rank_(rank), elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 0 || elems_[i] > rank.k())
                throw std::invalid_argument("residue out of range 0..k");
            if (i > 0 && elems_[i] == elems_[i - 1])
                throw std::invalid_argument("duplicate residue");
        }
        if (static_cast<Int>(elems_.size()) > rank.k())
            throw std::invalid_argument("residue set must be a proper subset of {0..k}");
    }

    const Rank& rank() const { return rank_; }
    const std::vector<Int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    bool contains(Int r) const {
        return std::binary_search(elems_.begin(), elems_.end(), r);
    }

  private:
    Rank rank_;
    std::vector<Int> elems_;
};

/// The unique cyclically decreasing element w_D: split D into maximal
/// cyclic runs a, a+1, ..., b (indices mod k+1) and emit each run as
/// s_b s_{b-1} ... s_a.  Runs commute, so their order does not matter.
inline AffinePerm cyclically_decreasing(const ResidueSet& d) {
    const Rank rank = d.rank();
    const Int p = rank.period();
    std::vector<Int> word;
    for (Int a : d.elements()) {
        if (d.contains(((a - 1) % p + p) % p)) continue; // not a run start
        Int b = a;
        while (d.contains((b + 1) % p)) b = (b + 1) % p;
        for (Int r = b;; r = ((r - 1) % p + p) % p) {
            word.push_back(r);
            if (r == a) break;
        }
    }
    AffinePerm w = from_word(rank, word);
    if (w.length() != static_cast<Int>(d.size()))
        throw std::logic_error("cyclically decreasing word is not reduced");
    return w;
}

/// h_i = sum of u_{w_D} over all i-element subsets D of {0..k}.
/// h_0 is the unit; negative i gives the zero element.
inline NilCoxElem h(Rank rank, Int i) {
    if (i > rank.k()) throw std::invalid_argument("h_i requires i <= k");
    NilCoxElem out(rank);
    if (i < 0) return out;
    if (i == 0) return NilCoxElem::scalar(rank, 1);
    std::vector<Int> subset;
    auto rec = [&](auto&& self, Int next) -> void {
        if (static_cast<Int>(subset.size()) == i) {
            out += NilCoxElem::basis(cyclically_decreasing(ResidueSet(rank, subset)));
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

/// h_lambda = h_{lambda_1} ... h_{lambda_t} for a k-bounded partition.
inline NilCoxElem h_lambda(Rank rank, const Partition& lambda) {
    if (!lambda.is_bounded_by(rank.k()))
        throw std::invalid_argument("partition is not k-bounded");
    NilCoxElem out = NilCoxElem::scalar(rank, 1);
    for (Int part : lambda.parts()) out = multiply(h(rank, part), out);
    return out;
}

/// Expansion of an element of B in one of its bases.
struct BExpansion {
    enum class Basis { h, kschur };
    Basis basis = Basis::kschur;
    std::map<Partition, Int> coeffs;
};

/// Per-rank table of noncommutative k-Schur functions, computed degree by
/// degree and memoized.  Safe for concurrent readers; insertion is
/// serialized by a mutex and computed nodes are never invalidated.
class KschurTable {
  public:
    static KschurTable& instance(Rank rank) {
        static std::mutex mu;
        static std::map<Int, std::unique_ptr<KschurTable>> tables;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = tables[rank.k()];
        if (!slot) slot = std::unique_ptr<KschurTable>(new KschurTable(rank));
        return *slot;
    }

    const Rank& rank() const { return rank_; }

    /// k-bounded partitions of n in decreasing lexicographic order (the
    /// triangularizing order for all solves at this degree).
    const std::vector<Partition>& bounded_partitions(Int n) {
        return degree(n).partitions;
    }

    /// The noncommutative k-Schur function s^(k)_lambda as an element of B.
    const NilCoxElem& kschur(const Partition& lambda) {
        if (!lambda.is_bounded_by(rank_.k()))
            throw std::invalid_argument("partition is not k-bounded");
        const DegreeData& d = degree(lambda.sum());
        for (std::size_t i = 0; i < d.partitions.size(); ++i)
            if (d.partitions[i] == lambda) return d.kschurs[i];
        throw std::logic_error("partition missing from degree table");
    }

    /// h-basis expansion of s^(k)_lambda.
    const std::map<Partition, Int>& kschur_in_h(const Partition& lambda) {
        const DegreeData& d = degree(lambda.sum());
        for (std::size_t i = 0; i < d.partitions.size(); ++i)
            if (d.partitions[i] == lambda) return d.h_expansions[i];
        throw std::logic_error("partition missing from degree table");
    }

    /// Affine Kostka entry <h_mu, u_{w_tau}>_A for k-bounded tau, mu of
    /// equal size (the coefficient of u_{w_tau} in h_mu).
    Int affine_kostka(const Partition& tau, const Partition& mu) {
        if (tau.sum() != mu.sum()) throw std::invalid_argument("size mismatch");
        const DegreeData& d = degree(mu.sum());
        return inner(d.h_products.at(mu), NilCoxElem::basis(d.grassmannians.at(tau)));
    }

    /// Memoized h_lambda products for the degree tables.
    const NilCoxElem& h_product(const Partition& lambda) {
        return degree(lambda.sum()).h_products.at(lambda);
    }

    const AffinePerm& grassmannian(const Partition& lambda) {
        return degree(lambda.sum()).grassmannians.at(lambda);
    }

  private:
    explicit KschurTable(Rank rank) : rank_(rank) {}

    struct DegreeData {
        std::vector<Partition> partitions; // decreasing lex
        std::map<Partition, AffinePerm> grassmannians;
        std::map<Partition, NilCoxElem> h_products;
        std::vector<NilCoxElem> kschurs;                // aligned with partitions
        std::vector<std::map<Partition, Int>> h_expansions; // aligned with partitions
    };

    const DegreeData& degree(Int n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = degrees_.find(n);
        if (it != degrees_.end()) return *it->second;
        auto data = std::make_unique<DegreeData>(compute_degree(n));
        return *degrees_.emplace(n, std::move(data)).first->second;
    }

    // Solves h_mu = s_mu + sum_{lambda earlier in order} C[mu][lambda] s_lambda
    // by forward substitution; C[mu][lambda] = <h_mu, u_{w_lambda}>_A is
    // unitriangular in decreasing lex order (a linear extension of
    // dominance), which is verified rather than assumed.
    DegreeData compute_degree(Int n) const {
        DegreeData d;
        d.partitions = partitions_of(n, rank_.k());
        for (const auto& lam : d.partitions) {
            d.grassmannians.emplace(lam, partition_to_grassmannian(rank_, lam));
            d.h_products.emplace(lam, h_lambda(rank_, lam));
        }
        const std::size_t m = d.partitions.size();
        for (std::size_t row = 0; row < m; ++row) {
            const Partition& mu = d.partitions[row];
            const NilCoxElem& hmu = d.h_products.at(mu);
            for (std::size_t col = 0; col < m; ++col) {
                const Int c = hmu.coeff(d.grassmannians.at(d.partitions[col]));
                if (col == row && c != 1)
                    throw std::logic_error("k-Schur transition matrix has non-unit diagonal");
                if (col > row && c != 0)
                    throw std::logic_error("k-Schur transition matrix is not triangular");
            }
        }
        for (std::size_t row = 0; row < m; ++row) {
            const Partition& mu = d.partitions[row];
            NilCoxElem s = d.h_products.at(mu);
            std::map<Partition, Int> in_h{{mu, 1}};
            for (std::size_t col = 0; col < row; ++col) {
                const Int c = d.h_products.at(mu).coeff(d.grassmannians.at(d.partitions[col]));
                if (c == 0) continue;
                s -= c * d.kschurs[col];
                for (const auto& [p, hc] : d.h_expansions[col]) {
                    auto [it, inserted] = in_h.emplace(p, checked_mul(-c, hc));
                    if (!inserted) {
                        it->second = checked_add(it->second, checked_mul(-c, hc));
                        if (it->second == 0) in_h.erase(it);
                    }
                }
            }
            d.kschurs.push_back(std::move(s));
            d.h_expansions.push_back(std::move(in_h));
        }
        return d;
    }

    Rank rank_;
    std::mutex mu_;
    std::map<Int, std::unique_ptr<DegreeData>> degrees_;
};

inline const NilCoxElem& noncomm_kschur(Rank rank, const Partition& lambda) {
    return KschurTable::instance(rank).kschur(lambda);
}

/// Expands a in the basis b_w = s^(k)_lambda u_{w_(0)} attached to the
/// 0-Grassmannian factorizations w = w_lambda w_(0).  Peels terms in
/// decreasing (length, Grassmannian-part length) order; every term the
/// peel introduces sits strictly lower, so the loop terminates.
inline std::map<AffinePerm, Int> expand_in_b_basis(const NilCoxElem& a) {
    const Rank rank = a.rank();
    auto& table = KschurTable::instance(rank);
    std::map<AffinePerm, Int> out;
    NilCoxElem rest = a;
    while (!rest.is_zero()) {
        const AffinePerm* best = nullptr;
        Int best_grass = -1;
        for (const auto& [w, c] : rest.terms()) {
            const AffinePerm& top = rest.terms().rbegin()->first;
            if (w.length() != top.length()) continue;
            Int g = grassmannian_factorize(w).first.length();
            if (best == nullptr || g > best_grass ||
                (g == best_grass && *best < w)) {
                best = &w;
                best_grass = g;
            }
        }
        const AffinePerm w = *best;
        const Int c = rest.coeff(w);
        auto [grass, fin] = grassmannian_factorize(w);
        const NilCoxElem b_w =
            multiply(table.kschur(grassmannian_to_partition(grass)), NilCoxElem::basis(fin));
        rest -= c * b_w;
        out.emplace(w, c);
    }
    return out;
}

struct BMembership {
    bool in_b = false;
    std::map<Partition, Int> kschur_expansion; // valid when in_b
};

/// Tests membership in the affine Fomin--Stanley subalgebra B.  Candidate
/// k-Schur coefficients are read off the Grassmannian terms; membership
/// holds iff they reproduce the element.  Non-homogeneous input is tested
/// one graded piece at a time.
inline BMembership is_in_B(const NilCoxElem& a) {
    const Rank rank = a.rank();
    auto& table = KschurTable::instance(rank);
    std::map<Int, NilCoxElem> pieces;
    for (const auto& [w, c] : a.terms()) {
        auto [it, inserted] = pieces.try_emplace(w.length(), rank);
        it->second.add_term(w, c);
    }
    BMembership result;
    result.in_b = true;
    for (const auto& [deg, piece] : pieces) {
        NilCoxElem candidate(rank);
        std::map<Partition, Int> coeffs;
        for (const Partition& lam : table.bounded_partitions(deg)) {
            const Int c = piece.coeff(table.grassmannian(lam));
            if (c == 0) continue;
            coeffs.emplace(lam, c);
            candidate += c * table.kschur(lam);
        }
        if (!(candidate == piece)) return BMembership{};
        for (const auto& [lam, c] : coeffs) result.kschur_expansion.emplace(lam, c);
    }
    return result;
}

} // namespace nilcox

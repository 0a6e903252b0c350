#pragma once

#include "nilcox/fomin_stanley.hpp"
#include "nilcox/partition.hpp"
#include "nilcox/pieri_ops.hpp"
#include "nilcox/strip_graphs.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace nilcox {

enum class SfBasis { m, h, M, F, kschur, dual_kschur };

inline bool basis_uses_partitions(SfBasis b) {
    return b == SfBasis::m || b == SfBasis::h || b == SfBasis::kschur ||
           b == SfBasis::dual_kschur;
}

/// Homogeneous (quasi)symmetric function with exact integer coefficients
/// in a named basis.  Partition bases (m, h, kschur, dual_kschur) index by
/// weakly decreasing part lists; composition bases (M, F) by arbitrary
/// positive part lists.  Zero coefficients are never stored.
class SymFunc {
  public:
    SymFunc(SfBasis basis, Int degree) : basis_(basis), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    }

    static SymFunc unit(SfBasis basis) {
        SymFunc f(basis, 0);
        f.coeffs_.emplace(std::vector<Int>{}, 1);
        return f;
    }

    SfBasis basis() const { return basis_; }
    Int degree() const { return degree_; }
    const std::map<std::vector<Int>, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(const std::vector<Int>& index) const {
        auto it = coeffs_.find(index);
        return it == coeffs_.end() ? 0 : it->second;
    }
    Int coeff(const Partition& p) const { return coeff(p.parts()); }
    Int coeff(const Composition& c) const { return coeff(c.parts()); }

    void add_term(const std::vector<Int>& index, Int c) {
        if (c == 0) return;
        validate_index(index);
        auto [it, inserted] = coeffs_.emplace(index, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    void add_term(const Partition& p, Int c) { add_term(p.parts(), c); }
    void add_term(const Composition& j, Int c) { add_term(j.parts(), c); }

    SymFunc& operator+=(const SymFunc& o) {
        if (o.basis_ != basis_ || o.degree_ != degree_)
            throw std::invalid_argument("basis/degree mismatch");
        for (const auto& [i, c] : o.coeffs_) add_term(i, c);
        return *this;
    }

    SymFunc& operator-=(const SymFunc& o) {
        if (o.basis_ != basis_ || o.degree_ != degree_)
            throw std::invalid_argument("basis/degree mismatch");
        for (const auto& [i, c] : o.coeffs_) add_term(i, checked_neg(c));
        return *this;
    }

    SymFunc& operator*=(Int c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [i, coef] : coeffs_) coef = checked_mul(coef, c);
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, Int c) { return a *= c; }
    friend SymFunc operator*(Int c, SymFunc a) { return a *= c; }

    bool operator==(const SymFunc& o) const {
        return basis_ == o.basis_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

  private:
    void validate_index(const std::vector<Int>& index) const {
        Int sum = 0;
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (index[i] <= 0) throw std::invalid_argument("index parts must be positive");
            if (basis_uses_partitions(basis_) && i > 0 && index[i] > index[i - 1])
                throw std::invalid_argument("partition index must be weakly decreasing");
            sum += index[i];
        }
        if (sum != degree_) throw std::invalid_argument("index size must match degree");
    }

    SfBasis basis_;
    Int degree_;
    std::map<std::vector<Int>, Int> coeffs_;
};

/// Kostka number: semistandard tableaux of shape lambda and content mu,
/// counted by direct backtracking.  Serves as the independent oracle for
/// the h <-> m transition matrices.
inline Int kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum()) throw std::invalid_argument("size mismatch");
    if (lambda.empty()) return 1;
    const auto& shape = lambda.parts();
    std::vector<Int> remaining = mu.parts();
    std::vector<std::vector<Int>> fill(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        fill[r].assign(static_cast<std::size_t>(shape[r]), 0);
    Int count = 0;
    auto rec = [&](auto&& self, std::size_t r, Int c) -> void {
        if (r == shape.size()) {
            ++count;
            return;
        }
        const std::size_t nr = c + 1 == shape[r] ? r + 1 : r;
        const Int nc = c + 1 == shape[r] ? 0 : c + 1;
        const Int min_row = c > 0 ? fill[r][static_cast<std::size_t>(c - 1)] : 1;
        const Int min_col =
            r > 0 && c < shape[r - 1] ? fill[r - 1][static_cast<std::size_t>(c)] + 1 : 1;
        for (Int v = std::max(min_row, min_col); v <= static_cast<Int>(remaining.size()); ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            fill[r][static_cast<std::size_t>(c)] = v;
            self(self, nr, nc);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return count;
}

namespace detail {

/// Distinct rearrangements of the parts of p padded with zeros to length n.
inline std::vector<std::vector<Int>> padded_rearrangements(const Partition& p, std::size_t n) {
    std::vector<Int> v(n, 0);
    std::copy(p.parts().begin(), p.parts().end(), v.begin());
    std::sort(v.begin(), v.end());
    std::vector<std::vector<Int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace detail

/// Product of monomial symmetric functions, exactly: the coefficient of
/// m_gamma in m_alpha m_beta counts pairs of padded rearrangements of
/// alpha and beta whose entrywise sum is exactly the sorted vector gamma.
inline SymFunc monomial_product(const SymFunc& a, const SymFunc& b) {
    if (a.basis() != SfBasis::m || b.basis() != SfBasis::m)
        throw std::invalid_argument("monomial_product requires m-basis inputs");
    static std::mutex mu;
    static std::map<std::pair<std::vector<Int>, std::vector<Int>>,
                    std::map<std::vector<Int>, Int>>
        memo;
    SymFunc out(SfBasis::m, a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coeffs())
        for (const auto& [ib, cb] : b.coeffs()) {
            const auto key = ia <= ib ? std::make_pair(ia, ib) : std::make_pair(ib, ia);
            std::map<std::vector<Int>, Int>* cell = nullptr;
            {
                std::lock_guard<std::mutex> lock(mu);
                auto it = memo.find(key);
                if (it != memo.end()) cell = &it->second;
            }
            if (cell == nullptr) {
                std::map<std::vector<Int>, Int> prod;
                const std::size_t n = key.first.size() + key.second.size();
                if (n == 0) {
                    prod.emplace(std::vector<Int>{}, 1);
                } else {
                    const auto lhs = detail::padded_rearrangements(
                        Partition(key.first), n);
                    const auto rhs = detail::padded_rearrangements(
                        Partition(key.second), n);
                    for (const auto& u : lhs)
                        for (const auto& v : rhs) {
                            std::vector<Int> s(n);
                            bool sorted = true;
                            for (std::size_t i = 0; i < n; ++i) {
                                s[i] = u[i] + v[i];
                                if (i > 0 && s[i] > s[i - 1]) {
                                    sorted = false;
                                    break;
                                }
                            }
                            if (!sorted) continue;
                            while (!s.empty() && s.back() == 0) s.pop_back();
                            ++prod[s];
                        }
                }
                std::lock_guard<std::mutex> lock(mu);
                cell = &memo.emplace(key, std::move(prod)).first->second;
            }
            for (const auto& [g, n] : *cell)
                out.add_term(g, checked_mul(checked_mul(ca, cb), n));
        }
    return out;
}

/// Monomial expansion of an h-basis symmetric function, via
/// h_r = sum over all partitions of r of m_mu and iterated products.
inline SymFunc h_to_m(const SymFunc& f) {
    if (f.basis() != SfBasis::h) throw std::invalid_argument("h_to_m requires h-basis input");
    static std::mutex mu;
    static std::map<std::vector<Int>, SymFunc> memo;
    SymFunc out(SfBasis::m, f.degree());
    for (const auto& [idx, c] : f.coeffs()) {
        const SymFunc* expanded = nullptr;
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = memo.find(idx);
            if (it != memo.end()) expanded = &it->second;
        }
        if (expanded == nullptr) {
            SymFunc prod = SymFunc::unit(SfBasis::m);
            for (Int part : idx) {
                SymFunc hr(SfBasis::m, part);
                for (const auto& p : partitions_of(part)) hr.add_term(p, 1);
                prod = monomial_product(prod, hr);
            }
            std::lock_guard<std::mutex> lock(mu);
            expanded = &memo.emplace(idx, std::move(prod)).first->second;
        }
        for (const auto& [g, cg] : expanded->coeffs()) out.add_term(g, checked_mul(c, cg));
    }
    return out;
}

/// F_J = sum of M_I over refinements I of J.
inline SymFunc F_to_M(const SymFunc& f) {
    if (f.basis() != SfBasis::F) throw std::invalid_argument("F_to_M requires F-basis input");
    SymFunc out(SfBasis::M, f.degree());
    for (const auto& [idx, c] : f.coeffs())
        for (const auto& i : refinements_of(Composition(idx))) out.add_term(i, c);
    return out;
}

struct SymmetrizeResult {
    std::optional<SymFunc> m; // present iff the input was symmetric
    std::optional<std::pair<Composition, Composition>> offending;
};

/// A monomial-quasisymmetric expansion is symmetric iff its coefficients
/// are constant on rearrangement classes; in that case it collapses to a
/// monomial symmetric expansion.  On failure, reports an offending pair.
inline SymmetrizeResult M_to_m_if_symmetric(const SymFunc& f) {
    if (f.basis() != SfBasis::M)
        throw std::invalid_argument("M_to_m_if_symmetric requires M-basis input");
    SymmetrizeResult res;
    SymFunc out(SfBasis::m, f.degree());
    std::set<std::vector<Int>> done;
    for (const auto& [idx, c] : f.coeffs()) {
        const Partition gamma = Composition(idx).to_partition();
        if (!done.insert(gamma.parts()).second) continue;
        std::vector<Int> arr = gamma.parts();
        std::sort(arr.begin(), arr.end());
        do {
            if (f.coeff(arr) != c) {
                res.offending = {Composition(idx), Composition(arr)};
                return res;
            }
        } while (std::next_permutation(arr.begin(), arr.end()));
        out.add_term(gamma, c);
    }
    res.m = std::move(out);
    return res;
}

/// Ribbon Schur function in the h basis via the recursion
/// s_[r] = h_r,  s_J = h_{j_1} s_{[j_2..]} - s_{[j_1+j_2, j_3..]};
/// all coefficients land in {-1, 0, 1}.
inline SymFunc ribbon_in_h(const Composition& j) {
    if (j.empty()) return SymFunc::unit(SfBasis::h);
    const auto& parts = j.parts();
    if (parts.size() == 1) {
        SymFunc out(SfBasis::h, parts[0]);
        out.add_term(Partition{parts[0]}, 1);
        return out;
    }
    const Composition rest(std::vector<Int>(parts.begin() + 1, parts.end()));
    const SymFunc tail = ribbon_in_h(rest);
    SymFunc out(SfBasis::h, j.sum());
    for (const auto& [idx, c] : tail.coeffs()) {
        std::vector<Int> merged = idx;
        merged.push_back(parts[0]);
        std::sort(merged.begin(), merged.end(), std::greater<>());
        out.add_term(merged, c);
    }
    std::vector<Int> fused = parts;
    fused[1] += fused[0];
    fused.erase(fused.begin());
    out -= ribbon_in_h(Composition(std::move(fused)));
    return out;
}

/// Affine Stanley symmetric function of w in the monomial basis: the
/// coefficient of m_lambda is <h_lambda, u_w>_A over k-bounded lambda.
inline SymFunc affine_stanley(const AffinePerm& w) {
    auto& table = KschurTable::instance(w.rank());
    SymFunc out(SfBasis::m, w.length());
    for (const Partition& lam : table.bounded_partitions(w.length())) {
        const Int c = table.h_product(lam).coeff(w);
        if (c != 0) out.add_term(lam, c);
    }
    return out;
}

/// Per-rank tables for the dual side: affine Schur functions, their
/// products in the quotient, and the perp operators on B, all memoized.
class DualTables {
  public:
    static DualTables& instance(Rank rank) {
        static std::mutex mu;
        static std::map<Int, std::unique_ptr<DualTables>> tables;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = tables[rank.k()];
        if (!slot) slot = std::unique_ptr<DualTables>(new DualTables(rank));
        return *slot;
    }

    const Rank& rank() const { return rank_; }

    /// m-expansion of the affine Schur function indexed by a k-bounded
    /// partition.
    const SymFunc& dual_schur_m(const Partition& lambda) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dual_m_.find(lambda);
        if (it != dual_m_.end()) return *it->second;
        auto f = std::make_unique<SymFunc>(
            affine_stanley(KschurTable::instance(rank_).grassmannian(lambda)));
        return *dual_m_.emplace(lambda, std::move(f)).first->second;
    }

    /// Expansion of m_sigma * dual_schur(nu) (product taken in the
    /// quotient) in the dual k-Schur basis.
    const std::map<Partition, Int>& monomial_times_dual_schur(const Partition& sigma,
                                                              const Partition& nu) {
        const auto key = std::make_pair(sigma, nu);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = mon_dual_.find(key);
            if (it != mon_dual_.end()) return *it->second;
        }
        SymFunc msig(SfBasis::m, sigma.sum());
        msig.add_term(sigma, 1);
        auto expansion = std::make_unique<std::map<Partition, Int>>(expand_product(
            msig, dual_schur_m(nu)));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mon_dual_.find(key);
        if (it != mon_dual_.end()) return *it->second;
        return *mon_dual_.emplace(key, std::move(expansion)).first->second;
    }

    /// Expansion of dual_schur(tau) * dual_schur(nu) in the dual k-Schur
    /// basis: the structure constants of the quotient ring.
    const std::map<Partition, Int>& dual_schur_times_dual_schur(const Partition& tau,
                                                                const Partition& nu) {
        const auto key = std::make_pair(tau, nu);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = dual_dual_.find(key);
            if (it != dual_dual_.end()) return *it->second;
        }
        auto expansion = std::make_unique<std::map<Partition, Int>>(expand_product(
            dual_schur_m(tau), dual_schur_m(nu)));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dual_dual_.find(key);
        if (it != dual_dual_.end()) return *it->second;
        return *dual_dual_.emplace(key, std::move(expansion)).first->second;
    }

  private:
    explicit DualTables(Rank rank) : rank_(rank) {}

    std::map<Partition, Int> expand_product(const SymFunc& a, const SymFunc& b) {
        SymFunc prod = monomial_product(a, b);
        SymFunc reduced(SfBasis::m, prod.degree());
        for (const auto& [idx, c] : prod.coeffs())
            if (Partition(idx).is_bounded_by(rank_.k())) reduced.add_term(idx, c);
        const SymFunc expanded = dual_kschur_expand_impl(reduced, prod.degree());
        std::map<Partition, Int> out;
        for (const auto& [idx, c] : expanded.coeffs()) out.emplace(Partition(idx), c);
        return out;
    }

  public:
    /// Solves f = sum over k-bounded lambda of c_lambda dual_schur(lambda)
    /// by forward substitution in decreasing lex order; the coefficient
    /// matrix is unitriangular.  Indices with a part > k are dropped first
    /// (the quotient by the ideal I_k).  Throws if the residual fails to
    /// clear, which signals an input outside the span.
    SymFunc dual_kschur_expand_impl(const SymFunc& f, Int degree) {
        if (f.basis() != SfBasis::m)
            throw std::invalid_argument("dual_kschur_expand requires an m-basis input");
        SymFunc residual(SfBasis::m, degree);
        for (const auto& [idx, c] : f.coeffs())
            if (Partition(idx).is_bounded_by(rank_.k())) residual.add_term(idx, c);
        SymFunc out(SfBasis::dual_kschur, degree);
        for (const Partition& lam : KschurTable::instance(rank_).bounded_partitions(degree)) {
            const Int c = residual.coeff(lam);
            if (c == 0) continue;
            out.add_term(lam, c);
            const SymFunc& basis_fn = dual_schur_m(lam);
            for (const auto& [idx, bc] : basis_fn.coeffs())
                if (Partition(idx).is_bounded_by(rank_.k()))
                    residual.add_term(idx, checked_mul(-c, bc));
        }
        if (!residual.is_zero())
            throw std::invalid_argument("element is not in the span of the affine Schur basis");
        return out;
    }

  private:
    Rank rank_;
    std::mutex mu_;
    std::map<Partition, std::unique_ptr<SymFunc>> dual_m_;
    std::map<std::pair<Partition, Partition>, std::unique_ptr<std::map<Partition, Int>>>
        mon_dual_;
    std::map<std::pair<Partition, Partition>, std::unique_ptr<std::map<Partition, Int>>>
        dual_dual_;
};

/// Expands an m-basis image in the quotient into the dual k-Schur basis.
inline SymFunc dual_kschur_expand(Rank rank, const SymFunc& f, Int degree) {
    return DualTables::instance(rank).dual_kschur_expand_impl(f, degree);
}

/// Perp of the monomial class: m_sigma-perp (s_mu) in k-Schur coordinates,
/// via <m_sigma-perp s_mu, dual_schur_nu> = <s_mu, m_sigma dual_schur_nu>.
inline BExpansion monomial_perp(Rank rank, const Partition& sigma, const Partition& mu) {
    auto& tables = DualTables::instance(rank);
    BExpansion out;
    out.basis = BExpansion::Basis::kschur;
    const Int d = mu.sum() - sigma.sum();
    if (d < 0) return out;
    for (const Partition& nu : KschurTable::instance(rank).bounded_partitions(d)) {
        const auto& expansion = tables.monomial_times_dual_schur(sigma, nu);
        auto it = expansion.find(mu);
        if (it != expansion.end() && it->second != 0) out.coeffs.emplace(nu, it->second);
    }
    return out;
}

/// Perp of an affine Schur class: dual_schur_tau-perp (s_mu) in k-Schur
/// coordinates.
inline BExpansion dual_schur_perp(Rank rank, const Partition& tau, const Partition& mu) {
    auto& tables = DualTables::instance(rank);
    BExpansion out;
    out.basis = BExpansion::Basis::kschur;
    const Int d = mu.sum() - tau.sum();
    if (d < 0) return out;
    for (const Partition& nu : KschurTable::instance(rank).bounded_partitions(d)) {
        const auto& expansion = tables.dual_schur_times_dual_schur(tau, nu);
        auto it = expansion.find(mu);
        if (it != expansion.end() && it->second != 0) out.coeffs.emplace(nu, it->second);
    }
    return out;
}

namespace detail {

/// h_r-bar perp applied to a k-Schur expansion: sum of monomial perps over
/// the k-bounded partitions of r.
inline BExpansion h_row_perp_apply(Rank rank, Int r, const BExpansion& x) {
    BExpansion out;
    out.basis = BExpansion::Basis::kschur;
    for (const auto& [mu, c] : x.coeffs) {
        if (c == 0) continue;
        for (const auto& sigma : partitions_of(r, rank.k()))
            for (const auto& [nu, cc] : monomial_perp(rank, sigma, mu).coeffs) {
                auto [it, inserted] = out.coeffs.emplace(nu, checked_mul(c, cc));
                if (!inserted) {
                    it->second = checked_add(it->second, checked_mul(c, cc));
                    if (it->second == 0) out.coeffs.erase(it);
                }
            }
    }
    return out;
}

} // namespace detail

/// Ribbon perp on B: the image of the ribbon Schur function s_J in the
/// quotient, perped, applied to s^(k)_mu; computed from the signed
/// h-expansion of s_J and compositions of single-row perps.  Independent
/// of the strong order graph; serves as the oracle for D_J restricted
/// to B.
inline BExpansion ribbon_perp(Rank rank, const Composition& j, const Partition& mu) {
    BExpansion acc;
    acc.basis = BExpansion::Basis::kschur;
    const SymFunc rib = ribbon_in_h(j);
    for (const auto& [idx, c] : rib.coeffs()) {
        BExpansion term;
        term.basis = BExpansion::Basis::kschur;
        term.coeffs.emplace(mu, 1);
        for (Int part : idx) term = detail::h_row_perp_apply(rank, part, term);
        for (const auto& [nu, cc] : term.coeffs) {
            auto [it, inserted] = acc.coeffs.emplace(nu, checked_mul(c, cc));
            if (!inserted) {
                it->second = checked_add(it->second, checked_mul(c, cc));
                if (it->second == 0) acc.coeffs.erase(it);
            }
        }
    }
    return acc;
}

/// Oracle equivalence for the down operators restricted to B: the graph
/// route D_J(s^(k)_mu), expanded back into k-Schur coordinates, must match
/// the ribbon-perp route, which never touches the strong graph.
inline OperatorReport verify_ribbon_oracle(Rank rank, Int max_degree, Int max_size) {
    OperatorReport report;
    report.identity_name = "ribbon-oracle";
    report.params = "k=" + std::to_string(rank.k()) + " deg<=" + std::to_string(max_degree) +
                    " |J|<=" + std::to_string(max_size);
    auto& table = KschurTable::instance(rank);
    for (Int n = 1; n <= max_size; ++n)
        for (const auto& j : compositions_of(n))
            for (Int d = 0; d <= max_degree; ++d)
                for (const auto& mu : partitions_of(d, rank.k())) {
                    const NilCoxElem via_graph = D_comp(j, table.kschur(mu));
                    const BMembership memb = is_in_B(via_graph);
                    ++report.checked;
                    if (!memb.in_b) {
                        report.failures.push_back("D_J(s_mu) left B, |J|=" + std::to_string(n) +
                                                  " deg=" + std::to_string(d));
                        continue;
                    }
                    if (memb.kschur_expansion != ribbon_perp(rank, j, mu).coeffs)
                        report.failures.push_back("route mismatch, |J|=" + std::to_string(n) +
                                                  " deg=" + std::to_string(d));
                }
    return report;
}

// ---------------------------------------------------------------------------
// Strong Schur functions
// ---------------------------------------------------------------------------

/// All downward paths from u in the strong graph, bucketed by endpoint and
/// ascent composition.  The empty path contributes (u, []) once.
inline std::map<AffinePerm, std::map<Composition, Int>> strong_paths_by_ascomp(
    const AffinePerm& u) {
    std::map<AffinePerm, std::map<Composition, Int>> out;
    auto& graph = StrongGraph::instance(u.rank());
    std::vector<Int> labels;
    auto rec = [&](auto&& self, const AffinePerm& cur) -> void {
        if (labels.empty())
            ++out[cur][Composition{}];
        else
            ++out[cur][ascent_composition(labels)];
        for (const StrongEdge& e : graph.edges_from(cur)) {
            labels.push_back(e.label);
            self(self, e.target);
            labels.pop_back();
        }
    };
    rec(rec, u);
    return out;
}

/// Strong_{u/v} in the fundamental quasisymmetric basis: the coefficient
/// of F_J counts paths u -> ... -> v with ascent composition J.
inline SymFunc strong_schur_F(const AffinePerm& u, const AffinePerm& v) {
    if (!(u.rank() == v.rank())) throw std::invalid_argument("rank mismatch");
    const Int diff = u.length() - v.length();
    SymFunc out(SfBasis::F, diff < 0 ? 0 : diff);
    if (diff < 0) return out;
    if (diff == 0) {
        if (u == v) out.add_term(Composition{}, 1);
        return out;
    }
    auto& graph = StrongGraph::instance(u.rank());
    std::vector<Int> labels;
    auto rec = [&](auto&& self, const AffinePerm& cur) -> void {
        if (static_cast<Int>(labels.size()) == diff) {
            if (cur == v) out.add_term(ascent_composition(labels), 1);
            return;
        }
        for (const StrongEdge& e : graph.edges_from(cur)) {
            labels.push_back(e.label);
            self(self, e.target);
            labels.pop_back();
        }
    };
    rec(rec, u);
    return out;
}

/// Strong_{u/v} in the monomial basis: coefficient of m_lambda is
/// <D^lambda(u_u), u_v>_A, over all partitions of l(u) - l(v).
inline SymFunc strong_schur_m(const AffinePerm& u, const AffinePerm& v) {
    if (!(u.rank() == v.rank())) throw std::invalid_argument("rank mismatch");
    const Int diff = u.length() - v.length();
    SymFunc out(SfBasis::m, diff < 0 ? 0 : diff);
    if (diff < 0) return out;
    const NilCoxElem uu = NilCoxElem::basis(u);
    for (const auto& lam : partitions_of(diff)) {
        const Int c = D_pow(lam, uu).coeff(v);
        if (c != 0) out.add_term(lam, c);
    }
    return out;
}

/// Strong_{u/v} in the homogeneous basis: coefficient of h_lambda is
/// <hat(m_lambda-perp)(u_u), u_v>_A, over k-bounded lambda.
inline SymFunc strong_schur_h(const AffinePerm& u, const AffinePerm& v) {
    if (!(u.rank() == v.rank())) throw std::invalid_argument("rank mismatch");
    const Rank rank = u.rank();
    const Int diff = u.length() - v.length();
    SymFunc out(SfBasis::h, diff < 0 ? 0 : diff);
    if (diff < 0) return out;
    const NilCoxElem uu = NilCoxElem::basis(u);
    for (const auto& lam : partitions_of(diff, rank.k())) {
        const NilCoxElem image = hat_extend(
            [&](const Partition& mu) { return monomial_perp(rank, lam, mu); }, uu);
        const Int c = image.coeff(v);
        if (c != 0) out.add_term(lam, c);
    }
    return out;
}

/// Strong_{u/v} in the k-Schur basis: coefficient of s^(k)_lambda is
/// <hat(dual_schur_lambda-perp)(u_u), u_v>_A.
inline SymFunc strong_schur_kschur(const AffinePerm& u, const AffinePerm& v) {
    if (!(u.rank() == v.rank())) throw std::invalid_argument("rank mismatch");
    const Rank rank = u.rank();
    const Int diff = u.length() - v.length();
    SymFunc out(SfBasis::kschur, diff < 0 ? 0 : diff);
    if (diff < 0) return out;
    const NilCoxElem uu = NilCoxElem::basis(u);
    for (const auto& lam : partitions_of(diff, rank.k())) {
        const NilCoxElem image = hat_extend(
            [&](const Partition& mu) { return dual_schur_perp(rank, lam, mu); }, uu);
        const Int c = image.coeff(v);
        if (c != 0) out.add_term(lam, c);
    }
    return out;
}

/// Skew k-Schur function via the strong Schur route.
inline SymFunc skew_kschur(Rank rank, const Partition& mu, const Partition& nu) {
    auto& table = KschurTable::instance(rank);
    return strong_schur_kschur(table.grassmannian(mu), table.grassmannian(nu));
}

/// Skew k-Schur function via the defining perp route
/// s^(k)_{mu/nu} = dual_schur_nu-perp (s^(k)_mu), entirely inside B.
inline SymFunc skew_kschur_via_perp(Rank rank, const Partition& mu, const Partition& nu) {
    const Int d = mu.sum() - nu.sum();
    SymFunc out(SfBasis::kschur, d < 0 ? 0 : d);
    if (d < 0) return out;
    for (const auto& [lam, c] : dual_schur_perp(rank, nu, mu).coeffs) out.add_term(lam, c);
    return out;
}

} // namespace nilcox

#pragma once

#include "nilcox/fomin_stanley.hpp"
#include "nilcox/nilcoxeter.hpp"
#include "nilcox/strip_graphs.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace nilcox {

/// U_j: left multiplication by h_j; on basis elements this sums the weak
/// strips of size j.  U_0 is the identity, negative j gives 0.
inline NilCoxElem U(Int j, const NilCoxElem& a) {
    if (j < 0) return NilCoxElem(a.rank());
    return multiply(h(a.rank(), j), a);
}

/// D_i: linear extension of strong_strip_targets.  D_0 is the identity,
/// negative i gives 0.
inline NilCoxElem D(Int i, const NilCoxElem& a) {
    NilCoxElem out(a.rank());
    if (i < 0) return out;
    if (i == 0) return a;
    for (const auto& [w, c] : a.terms())
        for (const auto& [v, mult] : strong_strip_targets(w, i))
            out.add_term(v, checked_mul(c, mult));
    return out;
}

/// D_J for a composition J: one path query with prescribed ascent
/// composition, extended linearly.
inline NilCoxElem D_comp(const Composition& j, const NilCoxElem& a) {
    NilCoxElem out(a.rank());
    for (const auto& [w, c] : a.terms())
        for (const auto& [v, mult] : paths_with_ascomp(w, j))
            out.add_term(v, checked_mul(c, mult));
    return out;
}

/// D^lambda = D_{lambda_1} o ... o D_{lambda_l} (rightmost applied first;
/// the D_i commute, so the order is immaterial).
inline NilCoxElem D_pow(const Partition& lambda, const NilCoxElem& a) {
    NilCoxElem out = a;
    const auto& parts = lambda.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = D(*it, out);
    return out;
}

/// Result of an identity sweep.  Failures collect every counterexample
/// found, not just the first.
struct OperatorReport {
    std::string identity_name;
    std::string params;
    long checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline std::string describe(const AffinePerm& w) {
    std::ostringstream os;
    os << "w=[";
    const auto word = reduced_word(w);
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << "]";
    return os.str();
}

inline std::string describe(const Composition& j) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < j.parts().size(); ++i)
        os << (i ? "," : "") << j.parts()[i];
    os << "]";
    return os.str();
}

inline std::vector<Composition> compositions_up_to(Int max_size) {
    std::vector<Composition> out;
    for (Int n = 1; n <= max_size; ++n)
        for (const auto& c : compositions_of(n)) out.push_back(c);
    return out;
}

} // namespace detail

/// I boxplus J merges the last part of I with the first part of J;
/// I boxdot J concatenates.
inline Composition box_plus(const Composition& i, const Composition& j) {
    if (i.empty() || j.empty())
        throw std::invalid_argument("box_plus requires nonempty compositions");
    std::vector<Int> parts = i.parts();
    parts.back() += j.parts().front();
    parts.insert(parts.end(), j.parts().begin() + 1, j.parts().end());
    return Composition(std::move(parts));
}

inline Composition box_dot(const Composition& i, const Composition& j) {
    std::vector<Int> parts = i.parts();
    parts.insert(parts.end(), j.parts().begin(), j.parts().end());
    return Composition(std::move(parts));
}

/// Checks D_{I boxplus J} + D_{I boxdot J} against the composite that
/// traverses an I-patterned path first and then a J-patterned one, i.e.
/// D_J(D_I(u_w)), on every u_w with l(w) <= max_length.
inline OperatorReport verify_product_rule(Rank rank, Int max_length, Int max_size) {
    OperatorReport report;
    report.identity_name = "product-rule";
    report.params = "k=" + std::to_string(rank.k()) + " L=" + std::to_string(max_length) +
                    " |I|,|J|<=" + std::to_string(max_size);
    const auto comps = detail::compositions_up_to(max_size);
    const auto levels = elements_up_to(rank, max_length);
    for (const auto& level : levels)
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            for (const auto& i : comps) {
                const NilCoxElem di = D_comp(i, uw);
                for (const auto& j : comps) {
                    const NilCoxElem lhs = D_comp(j, di);
                    const NilCoxElem rhs = D_comp(box_plus(i, j), uw) + D_comp(box_dot(i, j), uw);
                    ++report.checked;
                    if (!(lhs == rhs))
                        report.failures.push_back("I=" + detail::describe(i) +
                                                  " J=" + detail::describe(j) + " " +
                                                  detail::describe(w));
                }
            }
        }
    return report;
}

/// Checks sum over J <= I in reverse refinement order of D_J against the
/// composite D_{i_1} o ... o D_{i_r} (i_1-strip traversed first).
inline OperatorReport verify_refinement_sum(Rank rank, Int max_length, Int max_size) {
    OperatorReport report;
    report.identity_name = "refinement-sum";
    report.params = "k=" + std::to_string(rank.k()) + " L=" + std::to_string(max_length) +
                    " |I|<=" + std::to_string(max_size);
    const auto levels = elements_up_to(rank, max_length);
    for (Int n = 1; n <= max_size; ++n)
        for (const auto& i : compositions_of(n)) {
            // J <= I in reverse refinement order means J coarsens... the
            // maximal element is [1,..,1]: J ranges over refinements of I.
            const auto js = coarsenings_of(i);
            for (const auto& level : levels)
                for (const auto& w : level) {
                    const NilCoxElem uw = NilCoxElem::basis(w);
                    NilCoxElem lhs(rank);
                    for (const auto& j : js) lhs += D_comp(j, uw);
                    NilCoxElem rhs = uw;
                    for (Int part : i.parts()) rhs = D(part, rhs);
                    ++report.checked;
                    if (!(lhs == rhs))
                        report.failures.push_back("I=" + detail::describe(i) + " " +
                                                  detail::describe(w));
                }
        }
    return report;
}

/// Commutation relation D_i U_j = sum_{e>=0} U_{j-e} D_{i-e} and the
/// bracket D_i U_j - U_j D_i = D_{i-1} U_{j-1}, on all u_w with
/// l(w) <= max_length, 1 <= i <= imax, 1 <= j <= jmax <= k.
inline OperatorReport verify_commutation(Rank rank, Int max_length, Int imax, Int jmax) {
    OperatorReport report;
    report.identity_name = "commutation+bracket";
    report.params = "k=" + std::to_string(rank.k()) + " L=" + std::to_string(max_length) +
                    " i<=" + std::to_string(imax) + " j<=" + std::to_string(jmax);
    if (jmax > rank.k()) throw std::invalid_argument("jmax must be <= k");
    const auto levels = elements_up_to(rank, max_length);
    for (const auto& level : levels)
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            for (Int i = 1; i <= imax; ++i)
                for (Int j = 1; j <= jmax; ++j) {
                    const NilCoxElem lhs = D(i, U(j, uw));
                    NilCoxElem rhs(rank);
                    for (Int e = 0; e <= std::min(i, j); ++e)
                        rhs += U(j - e, D(i - e, uw));
                    ++report.checked;
                    if (!(lhs == rhs))
                        report.failures.push_back("commutation i=" + std::to_string(i) +
                                                  " j=" + std::to_string(j) + " " +
                                                  detail::describe(w));
                    const NilCoxElem bracket_lhs = lhs - U(j, D(i, uw));
                    const NilCoxElem bracket_rhs = D(i - 1, U(j - 1, uw));
                    ++report.checked;
                    if (!(bracket_lhs == bracket_rhs))
                        report.failures.push_back("bracket i=" + std::to_string(i) +
                                                  " j=" + std::to_string(j) + " " +
                                                  detail::describe(w));
                }
        }
    return report;
}

/// D_i(h_r) = h_{r-i} for all r <= k, including i > r where both sides
/// vanish.
inline OperatorReport verify_dh_identity(Rank rank) {
    OperatorReport report;
    report.identity_name = "dh-identity";
    report.params = "k=" + std::to_string(rank.k());
    for (Int r = 0; r <= rank.k(); ++r)
        for (Int i = 0; i <= rank.k() + 1; ++i) {
            const NilCoxElem lhs = D(i, h(rank, r));
            const NilCoxElem rhs = h(rank, r - i);
            ++report.checked;
            if (!(lhs == rhs))
                report.failures.push_back("i=" + std::to_string(i) + " r=" + std::to_string(r));
        }
    return report;
}

/// Right W_0-module morphism property: U_j(u_w u_v) = U_j(u_w) u_v and
/// D_i(u_w u_v) = D_i(u_w) u_v whenever lengths add, for v in W_0; plus
/// D_i(u_v) = 0 for v in W_0, i >= 1.
inline OperatorReport verify_module_morphism(Rank rank, Int max_length) {
    OperatorReport report;
    report.identity_name = "module-morphism";
    report.params = "k=" + std::to_string(rank.k()) + " L=" + std::to_string(max_length);
    std::vector<AffinePerm> finite_elems;
    for (const auto& level : elements_up_to(rank, rank.k() * (rank.k() + 1) / 2))
        for (const auto& v : level)
            if (is_finite(v)) finite_elems.push_back(v);
    for (const auto& v : finite_elems) {
        if (v.is_identity()) continue;
        for (Int i = 1; i <= rank.k(); ++i) {
            ++report.checked;
            if (!D(i, NilCoxElem::basis(v)).is_zero())
                report.failures.push_back("D_" + std::to_string(i) + "(u_v) != 0 for v=" +
                                          detail::describe(v));
        }
    }
    const auto levels = elements_up_to(rank, max_length);
    for (const auto& level : levels)
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            for (const auto& v : finite_elems) {
                const NilCoxElem uv = NilCoxElem::basis(v);
                const NilCoxElem uwv = multiply(uw, uv);
                if (uwv.is_zero()) continue; // lengths do not add
                for (Int i = 1; i <= rank.k(); ++i) {
                    ++report.checked;
                    if (!(U(i, uwv) == multiply(U(i, uw), uv)))
                        report.failures.push_back("U_" + std::to_string(i) + " " +
                                                  detail::describe(w) + " v=" +
                                                  detail::describe(v));
                    ++report.checked;
                    if (!(D(i, uwv) == multiply(D(i, uw), uv)))
                        report.failures.push_back("D_" + std::to_string(i) + " " +
                                                  detail::describe(w) + " v=" +
                                                  detail::describe(v));
                }
            }
        }
    return report;
}

/// Pairwise commutation of the D_J, on all u_w with l(w) <= max_length.
inline OperatorReport verify_commuting_family(Rank rank, Int max_length, Int max_size) {
    OperatorReport report;
    report.identity_name = "commuting-family";
    report.params = "k=" + std::to_string(rank.k()) + " L=" + std::to_string(max_length) +
                    " |J|,|K|<=" + std::to_string(max_size);
    const auto comps = detail::compositions_up_to(max_size);
    const auto levels = elements_up_to(rank, max_length);
    for (const auto& level : levels)
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            for (std::size_t a = 0; a < comps.size(); ++a) {
                const NilCoxElem da = D_comp(comps[a], uw);
                for (std::size_t b = a + 1; b < comps.size(); ++b) {
                    ++report.checked;
                    if (!(D_comp(comps[b], da) == D_comp(comps[a], D_comp(comps[b], uw))))
                        report.failures.push_back("J=" + detail::describe(comps[a]) +
                                                  " K=" + detail::describe(comps[b]) + " " +
                                                  detail::describe(w));
                }
            }
        }
    return report;
}

/// B-stability: D_J(h_lambda) lies in B for every k-bounded lambda of the
/// given degrees and every composition J of size <= max_size.
inline OperatorReport verify_b_stability(Rank rank, Int max_degree, Int max_size) {
    OperatorReport report;
    report.identity_name = "b-stability";
    report.params = "k=" + std::to_string(rank.k()) + " |lambda|<=" + std::to_string(max_degree) +
                    " |J|<=" + std::to_string(max_size);
    const auto comps = detail::compositions_up_to(max_size);
    for (Int n = 0; n <= max_degree; ++n)
        for (const auto& lam : partitions_of(n, rank.k())) {
            const NilCoxElem hl = h_lambda(rank, lam);
            for (const auto& j : comps) {
                ++report.checked;
                if (!is_in_B(D_comp(j, hl)).in_b)
                    report.failures.push_back("J=" + detail::describe(j) + " lambda sum " +
                                              std::to_string(n));
            }
        }
    return report;
}

/// The mu with a size-i strong strip w_lambda -> w_mu, with strip
/// multiplicities; by the Pieri rule these are the k-Schur coefficients of
/// D_i(s^(k)_lambda).
inline std::map<Partition, Int> kschur_pieri_perp(Rank rank, const Partition& lambda, Int i) {
    auto& table = KschurTable::instance(rank);
    std::map<Partition, Int> out;
    if (i > lambda.sum()) return out;
    const AffinePerm w = table.grassmannian(lambda);
    for (const auto& [v, mult] : strong_strip_targets(w, i))
        if (is_grassmannian(v)) out.emplace(grassmannian_to_partition(v), mult);
    return out;
}

/// Pieri rule for the perp operators: D_i(s^(k)_lambda) equals the sum of
/// s^(k)_mu over size-i strong strips w_lambda -> w_mu, with strip
/// multiplicities.
inline OperatorReport verify_pieri_perp(Rank rank, Int max_degree, Int imax) {
    OperatorReport report;
    report.identity_name = "pieri-perp";
    report.params = "k=" + std::to_string(rank.k()) + " |lambda|<=" + std::to_string(max_degree) +
                    " i<=" + std::to_string(imax);
    auto& table = KschurTable::instance(rank);
    for (Int n = 0; n <= max_degree; ++n)
        for (const auto& lam : partitions_of(n, rank.k()))
            for (Int i = 1; i <= imax; ++i) {
                NilCoxElem rhs(rank);
                for (const auto& [mu, mult] : kschur_pieri_perp(rank, lam, i))
                    rhs += mult * table.kschur(mu);
                ++report.checked;
                if (!(D(i, table.kschur(lam)) == rhs))
                    report.failures.push_back("lambda sum " + std::to_string(n) +
                                              " i=" + std::to_string(i));
            }
    return report;
}

/// Extension of a linear endomorphism of B to all of A through the b_w
/// basis: f-hat(b_w) = f(s^(k)_lambda) u_{w_(0)}.  The map is given by its
/// k-Schur coordinates lambda -> expansion of f(s^(k)_lambda).
inline NilCoxElem hat_extend(
    const std::function<BExpansion(const Partition&)>& f, const NilCoxElem& a) {
    const Rank rank = a.rank();
    auto& table = KschurTable::instance(rank);
    NilCoxElem out(rank);
    std::optional<Int> degree_shift;
    for (const auto& [w, c] : expand_in_b_basis(a)) {
        auto [grass, fin] = grassmannian_factorize(w);
        const Partition lam = grassmannian_to_partition(grass);
        const BExpansion fb = f(lam);
        NilCoxElem image(rank);
        for (const auto& [mu, cm] : fb.coeffs) {
            if (cm == 0) continue;
            const Int shift = lam.sum() - mu.sum();
            if (degree_shift && *degree_shift != shift)
                throw std::logic_error("hat_extend: inconsistent output degrees");
            degree_shift = shift;
            switch (fb.basis) {
                case BExpansion::Basis::kschur: image += cm * table.kschur(mu); break;
                case BExpansion::Basis::h: image += cm * h_lambda(rank, mu); break;
            }
        }
        out += c * multiply(image, NilCoxElem::basis(fin));
    }
    return out;
}

} // namespace nilcox

#pragma once

#include "nilcox/affine_perm.hpp"
#include "nilcox/checked.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace nilcox {

/// Element of the affine nilCoxeter algebra A: a sparse integer linear
/// combination of basis elements u_w.  Zero coefficients are never stored;
/// all keys share the rank.  Terms iterate in (length, window) order.
class NilCoxElem {
  public:
    explicit NilCoxElem(Rank rank) : rank_(rank) {}

    static NilCoxElem basis(const AffinePerm& w) {
        NilCoxElem e(w.rank());
        e.terms_.emplace(w, 1);
        return e;
    }

    static NilCoxElem scalar(Rank rank, Int c) {
        NilCoxElem e(rank);
        if (c != 0) e.terms_.emplace(identity(rank), c);
        return e;
    }

    const Rank& rank() const { return rank_; }
    const std::map<AffinePerm, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    Int coeff(const AffinePerm& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Degree of a homogeneous element; nullopt for 0 or mixed degrees.
    std::optional<Int> homogeneous_degree() const {
        std::optional<Int> deg;
        for (const auto& [w, c] : terms_) {
            if (deg && *deg != w.length()) return std::nullopt;
            deg = w.length();
        }
        return deg;
    }

    void add_term(const AffinePerm& w, Int c) {
        if (!(w.rank() == rank_)) throw std::invalid_argument("rank mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    NilCoxElem& operator+=(const NilCoxElem& o) {
        if (!(o.rank_ == rank_)) throw std::invalid_argument("rank mismatch");
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    NilCoxElem& operator-=(const NilCoxElem& o) {
        if (!(o.rank_ == rank_)) throw std::invalid_argument("rank mismatch");
        for (const auto& [w, c] : o.terms_) add_term(w, checked_neg(c));
        return *this;
    }

    NilCoxElem& operator*=(Int c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, coef] : terms_) coef = checked_mul(coef, c);
        return *this;
    }

    friend NilCoxElem operator+(NilCoxElem a, const NilCoxElem& b) { return a += b; }
    friend NilCoxElem operator-(NilCoxElem a, const NilCoxElem& b) { return a -= b; }
    friend NilCoxElem operator-(NilCoxElem a) { return a *= -1; }
    friend NilCoxElem operator*(NilCoxElem a, Int c) { return a *= c; }
    friend NilCoxElem operator*(Int c, NilCoxElem a) { return a *= c; }

    bool operator==(const NilCoxElem& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

  private:
    Rank rank_;
    std::map<AffinePerm, Int> terms_;
};

/// Nil product on basis elements: u_v u_w = u_{vw} if lengths add, else 0.
/// This single rule is equivalent to the three generator relations.
inline NilCoxElem basis_product(const AffinePerm& v, const AffinePerm& w) {
    if (!(v.rank() == w.rank())) throw std::invalid_argument("rank mismatch");
    NilCoxElem out(v.rank());
    AffinePerm vw = multiply(v, w);
    if (vw.length() == v.length() + w.length()) out.add_term(vw, 1);
    return out;
}

/// Bilinear extension of the nil product.
inline NilCoxElem multiply(const NilCoxElem& a, const NilCoxElem& b) {
    if (!(a.rank() == b.rank())) throw std::invalid_argument("rank mismatch");
    NilCoxElem out(a.rank());
    for (const auto& [v, cv] : a.terms())
        for (const auto& [w, cw] : b.terms()) {
            AffinePerm vw = multiply(v, w);
            if (vw.length() == v.length() + w.length())
                out.add_term(vw, checked_mul(cv, cw));
        }
    return out;
}

inline NilCoxElem operator*(const NilCoxElem& a, const NilCoxElem& b) {
    return multiply(a, b);
}

/// Basis inner product <u_v, u_w> = delta_{v,w}, extended bilinearly.
inline Int inner(const NilCoxElem& a, const NilCoxElem& b) {
    if (!(a.rank() == b.rank())) throw std::invalid_argument("rank mismatch");
    const auto& small = a.num_terms() <= b.num_terms() ? a : b;
    const auto& large = a.num_terms() <= b.num_terms() ? b : a;
    Int out = 0;
    for (const auto& [w, c] : small.terms())
        out = checked_add(out, checked_mul(c, large.coeff(w)));
    return out;
}

} // namespace nilcox

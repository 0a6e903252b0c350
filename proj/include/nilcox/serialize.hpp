#pragma once

#include "nilcox/affine_perm.hpp"
#include "nilcox/nilcoxeter.hpp"
#include "nilcox/strip_graphs.hpp"
#include "nilcox/symfunc.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace nilcox {

using json = nlohmann::json;

// JSON schemas:
//   AffinePerm   {"k": int, "window": [int, ...]}
//   NilCoxElem   {"k": int, "terms": [{"window": [...], "coeff": int}, ...]}
//                terms sorted by (length, window lexicographic)
//   SymFunc      {"basis": tag, "degree": n,
//                 "coeffs": [{"index": [parts], "coeff": int}, ...]}
//   StrongEdge   {"src": window, "dst": window, "label": int}

inline json to_json(const AffinePerm& w) {
    return json{{"k", w.rank().k()}, {"window", w.window()}};
}

inline AffinePerm affine_perm_from_json(const json& j) {
    return AffinePerm(Rank(j.at("k").get<Int>()), j.at("window").get<std::vector<Int>>());
}

inline json to_json(const NilCoxElem& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms())
        terms.push_back(json{{"window", w.window()}, {"coeff", c}});
    return json{{"k", a.rank().k()}, {"terms", terms}};
}

inline NilCoxElem nilcox_elem_from_json(const json& j) {
    const Rank rank(j.at("k").get<Int>());
    NilCoxElem a(rank);
    for (const auto& t : j.at("terms"))
        a.add_term(AffinePerm(rank, t.at("window").get<std::vector<Int>>()),
                   t.at("coeff").get<Int>());
    return a;
}

inline std::string basis_tag(SfBasis b) {
    switch (b) {
        case SfBasis::m: return "m";
        case SfBasis::h: return "h";
        case SfBasis::M: return "M";
        case SfBasis::F: return "F";
        case SfBasis::kschur: return "kschur";
        case SfBasis::dual_kschur: return "dual_kschur";
    }
    return "?";
}

inline SfBasis basis_from_tag(const std::string& tag) {
    if (tag == "m") return SfBasis::m;
    if (tag == "h") return SfBasis::h;
    if (tag == "M") return SfBasis::M;
    if (tag == "F") return SfBasis::F;
    if (tag == "kschur") return SfBasis::kschur;
    if (tag == "dual_kschur") return SfBasis::dual_kschur;
    throw std::invalid_argument("unknown basis tag: " + tag);
}

inline json to_json(const SymFunc& f) {
    json coeffs = json::array();
    for (const auto& [idx, c] : f.coeffs())
        coeffs.push_back(json{{"index", idx}, {"coeff", c}});
    return json{{"basis", basis_tag(f.basis())}, {"degree", f.degree()}, {"coeffs", coeffs}};
}

inline SymFunc symfunc_from_json(const json& j) {
    SymFunc f(basis_from_tag(j.at("basis").get<std::string>()), j.at("degree").get<Int>());
    for (const auto& t : j.at("coeffs"))
        f.add_term(t.at("index").get<std::vector<Int>>(), t.at("coeff").get<Int>());
    return f;
}

inline json to_json(const StrongEdge& e) {
    return json{{"src", e.source.window()}, {"dst", e.target.window()}, {"label", e.label}};
}

// --------------------------------------------------------------------------
// Text renderers
// --------------------------------------------------------------------------

/// Renders w as u[i_1,...,i_l] using its canonical reduced word; the
/// identity renders as "1".
inline std::string word_str(const AffinePerm& w) {
    if (w.is_identity()) return "1";
    std::ostringstream os;
    os << "u[";
    const auto word = reduced_word(w);
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << "]";
    return os.str();
}

inline std::string render_text(const NilCoxElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        const Int mag = c > 0 ? c : -c;
        if (mag != 1) os << mag << "*";
        os << word_str(w);
        first = false;
    }
    return os.str();
}

inline std::string render_latex(const AffinePerm& w) {
    if (w.is_identity()) return "1";
    std::ostringstream os;
    for (Int i : reduced_word(w)) os << "\\mathbf{u}_{" << i << "}";
    return os.str();
}

inline std::string render_latex(const NilCoxElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        const Int mag = c > 0 ? c : -c;
        if (mag != 1) os << mag << "\\,";
        os << render_latex(w);
        first = false;
    }
    return os.str();
}

inline std::string index_str(const std::vector<Int>& idx) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << ")";
    return os.str();
}

inline std::string basis_symbol(SfBasis b, bool latex) {
    switch (b) {
        case SfBasis::m: return "m";
        case SfBasis::h: return "h";
        case SfBasis::M: return "M";
        case SfBasis::F: return "F";
        case SfBasis::kschur: return latex ? "s^{(k)}" : "s(k)";
        case SfBasis::dual_kschur: return latex ? "\\bar{s}" : "sbar";
    }
    return "?";
}

inline std::string render_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : f.coeffs()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        const Int mag = c > 0 ? c : -c;
        if (mag != 1) os << mag << "*";
        os << basis_symbol(f.basis(), false) << "_" << index_str(idx);
        first = false;
    }
    return os.str();
}

inline std::string render_latex(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : f.coeffs()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        const Int mag = c > 0 ? c : -c;
        if (mag != 1) os << mag << "\\,";
        os << basis_symbol(f.basis(), true) << "_{" << index_str(idx) << "}";
        first = false;
    }
    return os.str();
}

} // namespace nilcox

#pragma once

#include "nilcox/partition.hpp"
#include "nilcox/pieri_ops.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace nilcox {

/// One operator atom of the CLI grammar:
///   U<j>            up operator
///   D<i>            down operator
///   D[j1,j2,...]    ascent-composition operator D_J
///   Dpow[p1,...]    composite D_{p1} o ... o D_{pl}
/// Atoms chain with '*', rightmost applied first: "D1*U2" is D_1 o U_2.
struct OpAtom {
    enum class Kind { up, down, comp, pow };
    Kind kind = Kind::up;
    Int index = 0;     // up/down
    Composition comp;  // comp
    Partition pow;     // pow
};

using OpSpec = std::vector<OpAtom>;

namespace detail {

inline std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("empty entry in list");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

} // namespace detail

inline OpAtom parse_op_atom(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty operator atom");
    OpAtom atom;
    auto bracket_list = [&](std::size_t prefix_len) {
        if (s.back() != ']') throw std::invalid_argument("missing ']' in " + s);
        return detail::parse_int_list(s.substr(prefix_len, s.size() - prefix_len - 1));
    };
    if (s.rfind("Dpow[", 0) == 0) {
        atom.kind = OpAtom::Kind::pow;
        atom.pow = Partition(bracket_list(5));
    } else if (s.rfind("D[", 0) == 0) {
        atom.kind = OpAtom::Kind::comp;
        atom.comp = Composition(bracket_list(2));
    } else if (s[0] == 'D') {
        atom.kind = OpAtom::Kind::down;
        atom.index = std::stoll(s.substr(1));
    } else if (s[0] == 'U') {
        atom.kind = OpAtom::Kind::up;
        atom.index = std::stoll(s.substr(1));
    } else {
        throw std::invalid_argument("unknown operator atom: " + s);
    }
    return atom;
}

inline OpSpec parse_op(const std::string& s) {
    OpSpec spec;
    std::string cur;
    for (char ch : s) {
        if (ch == '*') {
            spec.push_back(parse_op_atom(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    spec.push_back(parse_op_atom(cur));
    return spec;
}

inline std::string print_op(const OpSpec& spec) {
    std::ostringstream os;
    for (std::size_t a = 0; a < spec.size(); ++a) {
        if (a) os << "*";
        const OpAtom& atom = spec[a];
        switch (atom.kind) {
            case OpAtom::Kind::up: os << "U" << atom.index; break;
            case OpAtom::Kind::down: os << "D" << atom.index; break;
            case OpAtom::Kind::comp: {
                os << "D[";
                for (std::size_t i = 0; i < atom.comp.num_parts(); ++i)
                    os << (i ? "," : "") << atom.comp.parts()[i];
                os << "]";
                break;
            }
            case OpAtom::Kind::pow: {
                os << "Dpow[";
                for (std::size_t i = 0; i < atom.pow.num_parts(); ++i)
                    os << (i ? "," : "") << atom.pow.parts()[i];
                os << "]";
                break;
            }
        }
    }
    return os.str();
}

inline NilCoxElem apply_op(const OpSpec& spec, NilCoxElem a) {
    for (auto it = spec.rbegin(); it != spec.rend(); ++it) {
        switch (it->kind) {
            case OpAtom::Kind::up: a = U(it->index, a); break;
            case OpAtom::Kind::down: a = D(it->index, a); break;
            case OpAtom::Kind::comp: a = D_comp(it->comp, a); break;
            case OpAtom::Kind::pow: a = D_pow(it->pow, a); break;
        }
    }
    return a;
}

/// Element grammar: "0,1,2" is a word of simple generators (rightmost
/// applied first), "w:[0,2,4]" a window, "e" the identity.
inline AffinePerm parse_element(Rank rank, const std::string& s) {
    if (s == "e" || s.empty()) return identity(rank);
    if (s.rfind("w:[", 0) == 0) {
        if (s.back() != ']') throw std::invalid_argument("missing ']' in window");
        return AffinePerm(rank, detail::parse_int_list(s.substr(3, s.size() - 4)));
    }
    const auto word = detail::parse_int_list(s);
    for (Int i : word)
        if (i < 0 || i > rank.k())
            throw std::invalid_argument("word letter out of range 0..k");
    return from_word(rank, word);
}

} // namespace nilcox

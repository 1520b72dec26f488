#pragma once

#include <string>
#include <vector>

#include "sublat/group.hpp"

namespace sublat {

/// Abstract syntax for the group-spec grammar:
///
///   spec := term ('x' term)*
///   term := 'C'INT | 'D'INT | 'Q'INT | 'A'INT | 'S'INT | 'E27' | 'M16'
///         | 'C'INT ':' 'C'INT '[' INT ']'
///
/// The semidirect form reads actor first: "C4:C3[2]" is C4 acting on C3 by
/// x -> x^2. D and Q take the group ORDER (D8 has 8 elements); A and S take
/// the permutation DEGREE (S3 has 6 elements).
struct GroupSpec {
    enum class Kind {
        cyclic,
        dihedral,
        quaternion,
        alternating,
        symmetric,
        named_e27,
        named_m16,
        semidirect,
        product,
    };
    Kind kind = Kind::cyclic;
    int n = 1;                     // C/D/Q order, A/S degree
    int actor = 1, base = 1, k = 1;  // semidirect parameters
    std::vector<GroupSpec> parts;  // product factors

    bool operator==(const GroupSpec&) const = default;
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    GroupSpec parse() {
        GroupSpec first = term();
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
            GroupSpec prod;
            prod.kind = GroupSpec::Kind::product;
            prod.parts.push_back(std::move(first));
            while (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
                ++pos_;
                prod.parts.push_back(term());
                skip_ws();
            }
            if (pos_ != text_.size()) fail("trailing input");
            return prod;
        }
        if (pos_ != text_.size()) fail("trailing input");
        return first;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::parse, "position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    int integer() {
        skip_ws();
        if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long v = 0;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kMaxOrder * 2L) fail("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    GroupSpec term() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a group term");
        char c = text_[pos_];
        GroupSpec s;
        switch (c) {
            case 'C': {
                ++pos_;
                int n = integer();
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ':') {
                    ++pos_;
                    expect('C');
                    int base = integer();
                    expect('[');
                    int k = integer();
                    expect(']');
                    s.kind = GroupSpec::Kind::semidirect;
                    s.actor = n;
                    s.base = base;
                    s.k = k;
                    return s;
                }
                s.kind = GroupSpec::Kind::cyclic;
                s.n = n;
                return s;
            }
            case 'D':
                ++pos_;
                s.kind = GroupSpec::Kind::dihedral;
                s.n = integer();
                return s;
            case 'Q':
                ++pos_;
                s.kind = GroupSpec::Kind::quaternion;
                s.n = integer();
                return s;
            case 'A':
                ++pos_;
                s.kind = GroupSpec::Kind::alternating;
                s.n = integer();
                return s;
            case 'S':
                ++pos_;
                s.kind = GroupSpec::Kind::symmetric;
                s.n = integer();
                return s;
            case 'E': {
                ++pos_;
                int n = integer();
                if (n != 27) fail("unknown named group E" + std::to_string(n));
                s.kind = GroupSpec::Kind::named_e27;
                return s;
            }
            case 'M': {
                ++pos_;
                int n = integer();
                if (n != 16) fail("unknown named group M" + std::to_string(n));
                s.kind = GroupSpec::Kind::named_m16;
                return s;
            }
            default:
                fail("expected one of C, D, Q, A, S, E27, M16");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

inline long checked_factorial(int n, long cap) {
    long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap * 2) return cap * 2;  // saturate; caller rejects
    }
    return f;
}

}  // namespace detail

inline GroupSpec parse_spec(const std::string& text) { return detail::SpecParser(text).parse(); }

inline std::string to_string(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::cyclic: return "C" + std::to_string(s.n);
        case K::dihedral: return "D" + std::to_string(s.n);
        case K::quaternion: return "Q" + std::to_string(s.n);
        case K::alternating: return "A" + std::to_string(s.n);
        case K::symmetric: return "S" + std::to_string(s.n);
        case K::named_e27: return "E27";
        case K::named_m16: return "M16";
        case K::semidirect:
            return "C" + std::to_string(s.actor) + ":C" + std::to_string(s.base) + "[" +
                   std::to_string(s.k) + "]";
        case K::product: {
            std::string out;
            for (const auto& p : s.parts) {
                if (!out.empty()) out += "x";
                out += to_string(p);
            }
            return out;
        }
    }
    return "";
}

/// Symmetric group on [0, degree).
inline Group symmetric(int degree) {
    if (degree < 1) throw Error(Errc::invalid_argument, "symmetric: degree must be positive");
    if (detail::checked_factorial(degree, kMaxOrder) > kMaxOrder)
        throw Error(Errc::size_cap, "symmetric: order exceeds cap");
    std::vector<std::vector<int>> gens;
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    if (degree == 1) {
        gens.push_back(id);
    } else {
        auto swap01 = id;
        std::swap(swap01[0], swap01[1]);
        gens.push_back(swap01);
        if (degree > 2) {
            auto cyc = id;
            for (int i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
            gens.push_back(cyc);
        }
    }
    return from_permutations(degree, gens, "S" + std::to_string(degree));
}

/// Alternating group on [0, degree).
inline Group alternating(int degree) {
    if (degree < 1) throw Error(Errc::invalid_argument, "alternating: degree must be positive");
    if (detail::checked_factorial(degree, kMaxOrder) / 2 > kMaxOrder)
        throw Error(Errc::size_cap, "alternating: order exceeds cap");
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::vector<std::vector<int>> gens;
    if (degree <= 2) {
        gens.push_back(id);
    } else {
        auto three = id;
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push_back(three);
        if (degree > 3) {
            auto big = id;
            if (degree % 2 == 1) {
                for (int i = 0; i < degree; ++i) big[i] = (i + 1) % degree;
            } else {
                for (int i = 1; i < degree; ++i) big[i] = 1 + (i % (degree - 1));
            }
            gens.push_back(big);
        }
    }
    return from_permutations(degree, gens, "A" + std::to_string(degree));
}

inline Group build_group(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::cyclic: return cyclic(s.n);
        case K::dihedral: return dihedral(s.n);
        case K::quaternion: return quaternion(s.n);
        case K::alternating: return alternating(s.n);
        case K::symmetric: return symmetric(s.n);
        case K::named_e27: return named(NamedGroup::e27);
        case K::named_m16: return named(NamedGroup::m16);
        case K::semidirect: return semidirect_cyclic(s.base, s.actor, s.k);
        case K::product: {
            if (s.parts.empty()) throw Error(Errc::invalid_argument, "empty product");
            Group g = build_group(s.parts[0]);
            for (std::size_t i = 1; i < s.parts.size(); ++i)
                g = direct_product(g, build_group(s.parts[i]));
            return g;
        }
    }
    throw Error(Errc::invalid_argument, "unknown spec");
}

}  // namespace sublat

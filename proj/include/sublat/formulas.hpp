#pragma once

#include <string>
#include <vector>

#include "sublat/group.hpp"
#include "sublat/lattice.hpp"
#include "sublat/numeric.hpp"

namespace sublat {

/// Parameters of the family C_{p^a} acting on C_{q^b} through an
/// automorphism of order p. Realizable exactly when q = 1 (mod p).
struct TwoPrimeParams {
    int p = 2;
    int q = 3;
    int a = 1;
    int b = 1;
};

inline void check_realizable(const TwoPrimeParams& t) {
    if (!is_prime(t.p) || !is_prime(t.q) || t.p == t.q || t.a < 1 || t.b < 1)
        throw Error(Errc::invalid_argument, "two_prime_count: parameters out of domain");
    if ((t.q - 1) % t.p != 0)
        throw Error(Errc::invalid_argument,
                    "two_prime_count: no automorphism of order " + std::to_string(t.p) +
                        " on C_" + std::to_string(t.q) + "^" + std::to_string(t.b));
}

/// Subgroup count of C_{p^a} x| C_{q^b} with action of order p:
/// q^b + (q^b - q)/(q - 1) + a(b + 1) + 1.
inline long two_prime_count(const TwoPrimeParams& t) {
    check_realizable(t);
    long qb = pow_int(t.q, t.b);
    return qb + (qb - t.q) / (t.q - 1) + static_cast<long>(t.a) * (t.b + 1) + 1;
}

/// Smallest multiplier of order p modulo q^b.
inline int order_p_multiplier(int p, int q, int b) {
    int m = static_cast<int>(pow_int(q, b));
    for (int k = 2; k < m; ++k)
        if (std::gcd(k, m) == 1 && multiplicative_order(k, m) == p) return k;
    throw Error(Errc::invalid_argument, "no multiplier of the requested order");
}

/// The group behind a TwoPrimeParams cell.
inline Group build_two_prime(const TwoPrimeParams& t) {
    check_realizable(t);
    int base = static_cast<int>(pow_int(t.q, t.b));
    int actor = static_cast<int>(pow_int(t.p, t.a));
    return semidirect_cyclic(base, actor, order_p_multiplier(t.p, t.q, t.b));
}

/// Abelian p-group shapes with known subgroup-count polynomials.
enum class AbelianShape {
    r1,           // C_p x C_p            -> p + 3
    r2,           // C_{p^2} x C_p        -> 2p + 4
    r3,           // C_{p^3} x C_p        -> 3p + 5
    r4,           // C_{p^4} x C_p        -> 4p + 6
    square22,     // C_{p^2} x C_{p^2}    -> p^2 + 3p + 5
    elementary3,  // C_p x C_p x C_p      -> 2p^2 + 2p + 4
};

inline long abelian_count(AbelianShape shape, int p) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "abelian_count: p must be prime");
    switch (shape) {
        case AbelianShape::r1: return p + 3;
        case AbelianShape::r2: return 2L * p + 4;
        case AbelianShape::r3: return 3L * p + 5;
        case AbelianShape::r4: return 4L * p + 6;
        case AbelianShape::square22: return static_cast<long>(p) * p + 3L * p + 5;
        case AbelianShape::elementary3: return 2L * p * p + 2L * p + 4;
    }
    throw Error(Errc::invalid_argument, "abelian_count: unsupported shape");
}

inline long abelian_order(AbelianShape shape, int p) {
    switch (shape) {
        case AbelianShape::r1: return pow_int(p, 2);
        case AbelianShape::r2: return pow_int(p, 3);
        case AbelianShape::r3: return pow_int(p, 4);
        case AbelianShape::r4: return pow_int(p, 5);
        case AbelianShape::square22: return pow_int(p, 4);
        case AbelianShape::elementary3: return pow_int(p, 3);
    }
    return 0;
}

inline Group build_abelian(AbelianShape shape, int p) {
    switch (shape) {
        case AbelianShape::r1: return direct_product(cyclic(p), cyclic(p));
        case AbelianShape::r2: return direct_product(cyclic(p * p), cyclic(p));
        case AbelianShape::r3: return direct_product(cyclic(p * p * p), cyclic(p));
        case AbelianShape::r4: return direct_product(cyclic(p * p * p * p), cyclic(p));
        case AbelianShape::square22: return direct_product(cyclic(p * p), cyclic(p * p));
        case AbelianShape::elementary3:
            return direct_product(direct_product(cyclic(p), cyclic(p)), cyclic(p));
    }
    throw Error(Errc::invalid_argument, "build_abelian: unsupported shape");
}

inline const char* shape_name(AbelianShape shape) {
    switch (shape) {
        case AbelianShape::r1: return "(1,1)";
        case AbelianShape::r2: return "(2,1)";
        case AbelianShape::r3: return "(3,1)";
        case AbelianShape::r4: return "(4,1)";
        case AbelianShape::square22: return "(2,2)";
        case AbelianShape::elementary3: return "(1,1,1)";
    }
    return "?";
}

struct FormulaCheckRow {
    std::string family;
    std::string params;
    long order = 0;
    long expected = 0;
    long actual = 0;
    bool pass = false;
};

struct FormulaReport {
    std::vector<FormulaCheckRow> rows;
    bool all_pass = true;
};

/// Rebuild every closed-form count by explicit lattice enumeration, for all
/// instances whose group order fits under max_order. Mismatches are reported
/// in the rows, not thrown.
inline FormulaReport cross_validate(int max_order) {
    if (max_order < 1 || max_order > kMaxOrder)
        throw Error(Errc::invalid_argument, "cross_validate: max_order out of range");
    FormulaReport rep;

    auto add = [&](std::string family, std::string params, long order, long expected, long actual) {
        bool pass = expected == actual;
        rep.rows.push_back({std::move(family), std::move(params), order, expected, actual, pass});
        if (!pass) rep.all_pass = false;
    };

    struct Cell {
        int q, amax;
    };
    for (const Cell& c : {Cell{3, 5}, Cell{5, 4}, Cell{7, 3}}) {
        for (int p : {2, 3}) {
            if ((c.q - 1) % p != 0) continue;
            for (int b = 1; b <= 2; ++b)
                for (int a = 1; a <= c.amax; ++a) {
                    TwoPrimeParams t{p, c.q, a, b};
                    long order = pow_int(p, a) * pow_int(c.q, b);
                    if (order > max_order) continue;
                    Group g = build_two_prime(t);
                    add("two-prime",
                        "p=" + std::to_string(p) + " q=" + std::to_string(c.q) +
                            " a=" + std::to_string(a) + " b=" + std::to_string(b),
                        order, two_prime_count(t), count_subgroups(g));
                }
        }
    }

    for (AbelianShape shape : {AbelianShape::r1, AbelianShape::r2, AbelianShape::r3,
                               AbelianShape::r4, AbelianShape::square22, AbelianShape::elementary3}) {
        for (int p : {2, 3, 5, 7}) {
            if (p == 7 && shape != AbelianShape::r1) continue;
            long order = abelian_order(shape, p);
            if (order > max_order) continue;
            Group g = build_abelian(shape, p);
            add("abelian", std::string("shape=") + shape_name(shape) + " p=" + std::to_string(p),
                order, abelian_count(shape, p), count_subgroups(g));
        }
    }

    // C_4 acting faithfully on C_5: the one metacyclic case whose action is
    // not of prime order; its count of 14 rules the family out above 12.
    if (20 <= max_order)
        add("faithful", "C4 on C5, k=2", 20, 14, count_subgroups(semidirect_cyclic(5, 4, 2)));

    return rep;
}

}  // namespace sublat

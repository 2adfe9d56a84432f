#pragma once

#include <optional>
#include <vector>

#include "supercoil/conway.hpp"

namespace supercoil {

/// Sticks needed for a supercoiled integral tangle with c >= 1 crossings:
/// 2c/3 + 4, 2c/3 + 10/3 or 2c/3 + 11/3 as c is 0, 1 or 2 mod 3.
int lemma1_sticks(int c);

/// Stick upper bound 2c/3 + 2n + 3 - 2Q/3 - R/3 for the 2-bridge link.
int theorem2_bound(const ConwaySpec& spec);

/// Previous best bound c + 2, the comparison point for the improvement test.
int previous_bound(const ConwaySpec& spec);

/// True iff 6n + 1 - 2Q - R < c.
bool improvement_threshold(const ConwaySpec& spec);

/// Minimum bigons in a minimal crossing diagram, c - 2n + 2. Every entry
/// must be at least 2 (throws SpecError otherwise).
int lemma4_bound(const ConwaySpec& spec);

/// True iff 12n + 3 - 2Q - R < c, i.e. minimal stick representatives admit
/// no minimal crossing projection. Same precondition as lemma4_bound.
bool theorem5_obstruction(const ConwaySpec& spec);

struct Fraction {
    long long p = 0;
    long long q = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// c_1 + 1/(c_2 + 1/(... + 1/c_n)) in lowest terms.
Fraction continued_fraction(const ConwaySpec& spec);

struct BoundsReport {
    ConwaySpec spec;
    int crossing_number = 0;
    int tangle_count = 0;
    int residue_p = 0;
    int residue_q = 0;
    int residue_r = 0;
    int stick_upper_bound = 0;
    int previous_bound = 0;
    bool improvement = false;
    std::optional<int> bigon_lower_bound;  // empty unless every entry >= 2
    std::optional<bool> obstruction;
    std::vector<int> tangle_sticks;
};

BoundsReport bounds_report(const ConwaySpec& spec);

}  // namespace supercoil

#include "supercoil/bounds.hpp"

#include <boost/rational.hpp>
#include <stdexcept>

namespace supercoil {

namespace {

using Rational = boost::rational<long long>;

int exact_integer(const Rational& r, const char* what) {
    if (r.denominator() != 1) throw std::logic_error(std::string(what) + " is not an integer");
    return static_cast<int>(r.numerator());
}

void require_twists_at_least_two(const ConwaySpec& spec) {
    if (!spec.all_at_least_two()) throw SpecError("bigon bounds need every Conway entry >= 2");
}

}  // namespace

int lemma1_sticks(int c) {
    if (c < 1) throw SpecError("a tangle needs at least one crossing");
    const Rational two_thirds_c = Rational(2, 3) * c;
    switch (c % 3) {
        case 0: return exact_integer(two_thirds_c + 4, "stick count");
        case 1: return exact_integer(two_thirds_c + Rational(10, 3), "stick count");
        default: return exact_integer(two_thirds_c + Rational(11, 3), "stick count");
    }
}

int theorem2_bound(const ConwaySpec& spec) {
    const Rational bound = Rational(2, 3) * spec.crossing_number() + 2 * spec.n() + 3 -
                           Rational(2, 3) * spec.residue_q() - Rational(1, 3) * spec.residue_r();
    return exact_integer(bound, "stick upper bound");
}

int previous_bound(const ConwaySpec& spec) { return spec.crossing_number() + 2; }

bool improvement_threshold(const ConwaySpec& spec) {
    return 6 * spec.n() + 1 - 2 * spec.residue_q() - spec.residue_r() < spec.crossing_number();
}

int lemma4_bound(const ConwaySpec& spec) {
    require_twists_at_least_two(spec);
    return spec.crossing_number() - 2 * spec.n() + 2;
}

bool theorem5_obstruction(const ConwaySpec& spec) {
    require_twists_at_least_two(spec);
    return 12 * spec.n() + 3 - 2 * spec.residue_q() - spec.residue_r() < spec.crossing_number();
}

Fraction continued_fraction(const ConwaySpec& spec) {
    // Evaluate from the innermost term outward: x_n = c_n, x_i = c_i + 1/x_{i+1}.
    long long p = 1, q = 0;
    for (auto it = spec.twists().rbegin(); it != spec.twists().rend(); ++it) {
        long long np = 0;
        if (__builtin_mul_overflow(static_cast<long long>(*it), p, &np) || __builtin_add_overflow(np, q, &np))
            throw std::overflow_error("continued fraction numerator overflows 64 bits");
        q = p;
        p = np;
    }
    return {p, q};
}

BoundsReport bounds_report(const ConwaySpec& spec) {
    BoundsReport r;
    r.spec = spec;
    r.crossing_number = spec.crossing_number();
    r.tangle_count = spec.n();
    r.residue_p = spec.residue_p();
    r.residue_q = spec.residue_q();
    r.residue_r = spec.residue_r();
    r.stick_upper_bound = theorem2_bound(spec);
    r.previous_bound = previous_bound(spec);
    r.improvement = improvement_threshold(spec);
    if (spec.all_at_least_two()) {
        r.bigon_lower_bound = lemma4_bound(spec);
        r.obstruction = theorem5_obstruction(spec);
        if (*r.obstruction && !(r.stick_upper_bound < *r.bigon_lower_bound))
            throw std::logic_error("obstruction without stick bound below bigon bound");
    }
    for (int c : spec.twists()) r.tangle_sticks.push_back(lemma1_sticks(c));
    return r;
}

}  // namespace supercoil

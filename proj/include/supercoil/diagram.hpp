#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercoil/conway.hpp"
#include "supercoil/geom.hpp"

namespace supercoil {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public DiagramError {
public:
    using DiagramError::DiagramError;
};

/// Laurent polynomial in A with integer coefficients.
class BracketPolynomial {
public:
    BracketPolynomial() = default;
    static BracketPolynomial monomial(int exponent, long long coefficient = 1);

    const std::map<int, long long>& terms() const { return terms_; }
    long long coefficient(int exponent) const;
    bool is_zero() const { return terms_.empty(); }

    BracketPolynomial& operator+=(const BracketPolynomial& o);
    BracketPolynomial operator*(const BracketPolynomial& o) const;
    BracketPolynomial shifted(int by) const;  // multiply by A^by
    BracketPolynomial negated() const;
    // Exact division by the loop value -A^2 - A^-2; throws if not exact.
    BracketPolynomial divided_by_loop() const;

    /// Sorted "exponent:coefficient" pairs separated by spaces; "0" when zero.
    std::string to_string() const;

    friend bool operator==(const BracketPolynomial&, const BracketPolynomial&) = default;

private:
    void add_term(int exponent, long long coefficient);
    std::map<int, long long> terms_;
};

BracketPolynomial loop_value();  // -A^2 - A^-2

/// Oriented link diagram as a PD code. Each crossing lists four edge labels
/// counterclockwise starting at the incoming under-edge; labels run in
/// traversal order along each component. `signs` holds the right-hand-rule
/// sign of each crossing and fixes which over-edge is incoming.
struct Diagram {
    std::vector<std::array<int, 4>> pd;
    std::vector<int> signs;
    int free_loops = 0;  // crossingless split unknotted components

    std::size_t crossing_count() const { return pd.size(); }
    int writhe() const;
    int component_count() const;
    /// Component id of every edge label.
    std::map<int, int> edge_components() const;
};

/// Checks the PD invariants: four labels per crossing, each label exactly
/// twice, a sign per crossing. Throws DiagramError.
void validate(const Diagram& d);

struct Face {
    // Darts (crossing, PD position) leaving along the face boundary.
    std::vector<std::pair<int, int>> darts;
    std::size_t size() const { return darts.size(); }
};

std::vector<Face> faces(const Diagram& d);
/// Faces bounded by exactly two edges and two crossings, counted on the sphere.
int count_bigons(const Diagram& d);
bool is_alternating(const Diagram& d);
bool is_connected(const Diagram& d);

/// Reads the diagram of `link` seen along `dir`. Crossings are numbered in
/// order of first encounter walking component 0 from its first vertex, then
/// component 1, and so on. Throws DiagramError when `dir` is not generic.
Diagram extract_diagram(const PolyLink& link, const ProjectionDir& dir);

/// Crossing cap for the bracket: 20, or SUPERCOIL_BRACKET_BUDGET if set.
int bracket_crossing_cap();

/// Kauffman bracket <D> with <O> = 1. Throws BudgetExceeded above the cap.
BracketPolynomial kauffman_bracket(const Diagram& d);
/// (-A^3)^(-writhe) <D>.
BracketPolynomial normalized_bracket(const Diagram& d);
/// Normalized bracket after reversing the components whose bit is set in
/// `reversed` (writhe recomputed; the unnormalized bracket is unchanged).
BracketPolynomial normalized_bracket(const Diagram& d, unsigned reversed);
/// True when some choice of component orientations of `b` gives the same
/// normalized bracket as `a`.
bool same_bracket_up_to_orientation(const Diagram& a, const Diagram& b);

/// |V(-1)|, from the coloring matrix. Split diagrams give 0.
long long determinant(const Diagram& d);

/// Signed determinant of the reduced coloring matrix modulo a prime. Its
/// absolute value is the determinant; usable when that overflows.
unsigned long long determinant_mod(const Diagram& d, unsigned long long prime);

/// Reduced alternating diagram of the standard 2-bridge form of `spec`.
/// Odd-indexed entries are horizontal twists added to the right, even ones
/// vertical twists added below, followed by numerator closure. The first
/// twist region is right-handed unless spec.mirror() is set.
Diagram standard_diagram(const ConwaySpec& spec);

/// Alternating diagram in which each intermediate twist region i (0 < i <
/// n-1) is split as split[i] crossings on the usual side of the partial
/// tangle and c_i - split[i] on the opposite side, the flype orbit of the
/// region. split[0] and split[n-1] are ignored.
Diagram flyped_diagram(const ConwaySpec& spec, const std::vector<int>& split);

/// Brute-force minimum bigon count over every flype distribution of the
/// intermediate twist regions. Requires every entry >= 2.
int min_bigons_over_flypes(const ConwaySpec& spec);

}  // namespace supercoil

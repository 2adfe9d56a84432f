#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace supercoil {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Conway vector (c_1, ..., c_n) of a 2-bridge link in its standard
/// alternating form. n must be odd and every entry positive.
class ConwaySpec {
public:
    ConwaySpec() = default;
    explicit ConwaySpec(std::vector<int> twists, bool mirror = false);

    /// Parses "c1,c2,...,cn" (whitespace tolerated). Throws SpecError.
    static ConwaySpec parse(std::string_view text, bool mirror = false);

    const std::vector<int>& twists() const { return twists_; }
    int twist(std::size_t i) const { return twists_.at(i); }
    std::size_t size() const { return twists_.size(); }
    int n() const { return static_cast<int>(twists_.size()); }
    bool mirror() const { return mirror_; }

    int crossing_number() const;  // sum of the entries
    // Residue counts: entries congruent to 0, 1, 2 mod 3.
    int residue_p() const;
    int residue_q() const;
    int residue_r() const;
    bool all_at_least_two() const;

    std::string to_string() const;

    friend bool operator==(const ConwaySpec&, const ConwaySpec&) = default;

private:
    std::vector<int> twists_;
    bool mirror_ = false;
};

}  // namespace supercoil

#include "supercoil/conway.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace supercoil {

ConwaySpec::ConwaySpec(std::vector<int> twists, bool mirror) : twists_(std::move(twists)), mirror_(mirror) {
    if (twists_.empty()) throw SpecError("Conway vector must be non-empty");
    if (twists_.size() % 2 == 0) throw SpecError("Conway vector must have an odd number of entries");
    for (int c : twists_)
        if (c < 1) throw SpecError("Conway vector entries must be positive");
}

ConwaySpec ConwaySpec::parse(std::string_view text, bool mirror) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (tok.starts_with('+')) tok.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw SpecError("cannot parse Conway entry '" + std::string(tok) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return ConwaySpec(std::move(out), mirror);
}

int ConwaySpec::crossing_number() const { return std::accumulate(twists_.begin(), twists_.end(), 0); }

int ConwaySpec::residue_p() const {
    return static_cast<int>(std::count_if(twists_.begin(), twists_.end(), [](int c) { return c % 3 == 0; }));
}
int ConwaySpec::residue_q() const {
    return static_cast<int>(std::count_if(twists_.begin(), twists_.end(), [](int c) { return c % 3 == 1; }));
}
int ConwaySpec::residue_r() const {
    return static_cast<int>(std::count_if(twists_.begin(), twists_.end(), [](int c) { return c % 3 == 2; }));
}

bool ConwaySpec::all_at_least_two() const {
    return std::all_of(twists_.begin(), twists_.end(), [](int c) { return c >= 2; });
}

std::string ConwaySpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < twists_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(twists_[i]);
    }
    return s;
}

}  // namespace supercoil

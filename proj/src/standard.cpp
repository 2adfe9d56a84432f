// Combinatorial 2-bridge diagrams built in the 4-tangle calculus.
//
// Crossings are drawn as an X with corner slots numbered counterclockwise
// 0 = NE, 1 = NW, 2 = SW, 3 = SE; the strands run 0-2 and 1-3. Twists are
// appended on one side of the partial tangle, so every intermediate picture
// is a tangle in a disk and planarity is automatic.

#include <functional>
#include <queue>

#include "supercoil/diagram.hpp"

namespace supercoil {

namespace {

using Slot = std::pair<int, int>;  // (crossing, corner)

class TangleShadow {
public:
    TangleShadow() {
        const int x = add_crossing();
        ne_ = {x, 0};
        nw_ = {x, 1};
        sw_ = {x, 2};
        se_ = {x, 3};
    }

    void add_right() {
        const int x = add_crossing();
        join({x, 1}, ne_);
        join({x, 2}, se_);
        ne_ = {x, 0};
        se_ = {x, 3};
    }
    void add_left() {
        const int x = add_crossing();
        join({x, 0}, nw_);
        join({x, 3}, sw_);
        nw_ = {x, 1};
        sw_ = {x, 2};
    }
    void add_bottom() {
        const int x = add_crossing();
        join({x, 1}, sw_);
        join({x, 0}, se_);
        sw_ = {x, 2};
        se_ = {x, 3};
    }
    void add_top() {
        const int x = add_crossing();
        join({x, 2}, nw_);
        join({x, 3}, ne_);
        nw_ = {x, 1};
        ne_ = {x, 0};
    }
    void close_numerator() {
        join(nw_, ne_);
        join(sw_, se_);
    }

    // Over/under so that every edge joins an over-passage to an
    // under-passage. `first_axis` fixes crossing 0 (1 = strand 1-3 over).
    Diagram alternating(int first_axis) const {
        const int n = static_cast<int>(nbr_.size());
        std::vector<int> axis(n, -1);
        axis[0] = first_axis;
        std::queue<int> todo;
        todo.push(0);
        while (!todo.empty()) {
            const int c = todo.front();
            todo.pop();
            for (int k = 0; k < 4; ++k) {
                const auto [c2, k2] = nbr_[c][k];
                const bool over_here = k % 2 == axis[c];
                // The neighbour slot must be an under-passage iff ours is over.
                const int want = over_here ? 1 - k2 % 2 : k2 % 2;
                if (axis[c2] == -1) {
                    axis[c2] = want;
                    todo.push(c2);
                } else if (axis[c2] != want) {
                    throw DiagramError("shadow admits no alternating crossing choice");
                }
            }
        }
        return finalize(axis);
    }

private:
    int add_crossing() {
        nbr_.push_back({Slot{-1, -1}, Slot{-1, -1}, Slot{-1, -1}, Slot{-1, -1}});
        return static_cast<int>(nbr_.size()) - 1;
    }
    void join(Slot a, Slot b) {
        nbr_[a.first][a.second] = b;
        nbr_[b.first][b.second] = a;
    }

    Diagram finalize(const std::vector<int>& axis) const {
        const int n = static_cast<int>(nbr_.size());
        std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
        std::vector<std::array<int, 4>> outgoing(n, {-1, -1, -1, -1});  // 1 exit, 0 entry
        int next_label = 1;
        for (int c = 0; c < n; ++c) {
            for (int k = 0; k < 4; ++k) {
                if (outgoing[c][k] != -1) continue;
                int cc = c, kk = k;
                while (outgoing[cc][kk] == -1) {
                    outgoing[cc][kk] = 1;
                    const auto [c2, k2] = nbr_[cc][kk];
                    outgoing[c2][k2] = 0;
                    label[cc][kk] = next_label;
                    label[c2][k2] = next_label;
                    ++next_label;
                    cc = c2;
                    kk = (k2 + 2) % 4;
                }
            }
        }
        Diagram d;
        for (int c = 0; c < n; ++c) {
            const int under_axis = 1 - axis[c];
            const int u_in = outgoing[c][under_axis] == 0 ? under_axis : under_axis + 2;
            std::array<int, 4> x{};
            for (int p = 0; p < 4; ++p) x[p] = label[c][(u_in + p) % 4];
            d.pd.push_back(x);
            d.signs.push_back(outgoing[c][(u_in + 1) % 4] == 1 ? 1 : -1);
        }
        return d;
    }

    std::vector<std::array<Slot, 4>> nbr_;
    Slot nw_, ne_, sw_, se_;
};

Diagram build(const ConwaySpec& spec, const std::vector<int>& split) {
    TangleShadow t;
    const int n = spec.n();
    for (int i = 0; i < n; ++i) {
        const int c = spec.twist(i);
        const bool horizontal = i % 2 == 0;
        const bool distributable = i > 0 && i < n - 1;
        const int usual = distributable ? split[i] : c;
        for (int k = (i == 0 ? 1 : 0); k < usual; ++k) horizontal ? t.add_right() : t.add_bottom();
        for (int k = usual; k < c; ++k) horizontal ? t.add_left() : t.add_top();
    }
    t.close_numerator();
    return t.alternating(spec.mirror() ? 0 : 1);
}

}  // namespace

Diagram standard_diagram(const ConwaySpec& spec) {
    return build(spec, std::vector<int>(spec.twists().begin(), spec.twists().end()));
}

Diagram flyped_diagram(const ConwaySpec& spec, const std::vector<int>& split) {
    if (split.size() != spec.size()) throw SpecError("one split entry per twist region required");
    for (std::size_t i = 1; i + 1 < spec.size(); ++i)
        if (split[i] < 0 || split[i] > spec.twist(i)) throw SpecError("split entry out of range");
    return build(spec, split);
}

int min_bigons_over_flypes(const ConwaySpec& spec) {
    if (!spec.all_at_least_two()) throw SpecError("flype bigon oracle needs every twist region >= 2");
    std::vector<int> split(spec.twists().begin(), spec.twists().end());
    int best = -1;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i + 1 >= spec.size()) {
            const int b = count_bigons(flyped_diagram(spec, split));
            if (best < 0 || b < best) best = b;
            return;
        }
        for (int s = 0; s <= spec.twist(i); ++s) {
            split[i] = s;
            rec(i + 1);
        }
        split[i] = spec.twist(i);
    };
    rec(1);
    return best;
}

}  // namespace supercoil

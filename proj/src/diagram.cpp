#include "supercoil/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "supercoil/projection.hpp"

namespace supercoil {

namespace {

// Label that follows `label` along its component.
std::map<int, int> successors(const Diagram& d) {
    std::map<int, int> succ;
    for (std::size_t i = 0; i < d.pd.size(); ++i) {
        const auto& x = d.pd[i];
        succ[x[0]] = x[2];
        if (d.signs[i] > 0)
            succ[x[3]] = x[1];
        else
            succ[x[1]] = x[3];
    }
    return succ;
}

std::map<int, std::vector<std::pair<int, int>>> occurrences(const Diagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (std::size_t i = 0; i < d.pd.size(); ++i)
        for (int p = 0; p < 4; ++p) occ[d.pd[i][p]].emplace_back(static_cast<int>(i), p);
    return occ;
}

}  // namespace

int Diagram::writhe() const { return std::accumulate(signs.begin(), signs.end(), 0); }

std::map<int, int> Diagram::edge_components() const {
    const auto succ = successors(*this);
    std::map<int, int> comp;
    int next = 0;
    for (const auto& [label, _] : succ) {
        if (comp.count(label)) continue;
        int cur = label;
        while (!comp.count(cur)) {
            comp[cur] = next;
            cur = succ.at(cur);
        }
        ++next;
    }
    return comp;
}

int Diagram::component_count() const {
    const auto comp = edge_components();
    std::set<int> ids;
    for (const auto& [_, c] : comp) ids.insert(c);
    return static_cast<int>(ids.size()) + free_loops;
}

void validate(const Diagram& d) {
    if (d.signs.size() != d.pd.size()) throw DiagramError("one sign per crossing required");
    for (int s : d.signs)
        if (s != 1 && s != -1) throw DiagramError("crossing signs must be +1 or -1");
    for (const auto& [label, occ] : occurrences(d))
        if (occ.size() != 2) throw DiagramError("edge label " + std::to_string(label) + " must appear exactly twice");
    const auto succ = successors(d);
    std::set<int> targets;
    for (const auto& [_, t] : succ) targets.insert(t);
    if (targets.size() != succ.size()) throw DiagramError("signs are inconsistent with the edge labels");
}

std::vector<Face> faces(const Diagram& d) {
    const auto occ = occurrences(d);
    const int n = static_cast<int>(d.pd.size());
    std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
    std::vector<Face> out;
    for (int c = 0; c < n; ++c) {
        for (int p = 0; p < 4; ++p) {
            if (used[c][p]) continue;
            Face f;
            int cc = c, pp = p;
            while (!used[cc][pp]) {
                used[cc][pp] = true;
                f.darts.emplace_back(cc, pp);
                const auto& ends = occ.at(d.pd[cc][pp]);
                const auto other = (ends[0] == std::make_pair(cc, pp)) ? ends[1] : ends[0];
                cc = other.first;
                pp = (other.second + 3) % 4;
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

int count_bigons(const Diagram& d) {
    int b = 0;
    for (const auto& f : faces(d))
        if (f.size() == 2) ++b;
    return b;
}

bool is_alternating(const Diagram& d) {
    for (const auto& [label, occ] : occurrences(d)) {
        const bool under0 = occ[0].second % 2 == 0;
        const bool under1 = occ[1].second % 2 == 0;
        if (under0 == under1) return false;
    }
    return true;
}

bool is_connected(const Diagram& d) {
    const int n = static_cast<int>(d.pd.size());
    if (n == 0) return d.free_loops <= 1;
    if (d.free_loops > 0) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [_, occ] : occurrences(d)) parent[find(occ[0].first)] = find(occ[1].first);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

Diagram extract_diagram(const PolyLink& link, const ProjectionDir& dir) {
    const Projection proj(link, dir);
    if (const auto cert = proj.certificate(); !cert)
        throw DiagramError("projection direction is not generic: " + cert.reason);
    for (const auto& c : link.components)
        if (!c.closed) throw DiagramError("extract_diagram needs closed components");

    const auto xs = proj.crossings();

    struct Passage {
        std::size_t edge;
        double t;
        std::size_t crossing;
        bool over;
    };
    std::vector<std::vector<Passage>> walk(link.components.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& x = xs[k];
        const bool first_over = x.depth_first > x.depth_second;
        walk[x.first.component].push_back({x.first.index, x.t_first, k, first_over});
        walk[x.second.component].push_back({x.second.index, x.t_second, k, !first_over});
    }

    struct Slots {
        int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
    };
    std::vector<Slots> slots(xs.size());
    std::vector<int> order;  // crossing ids by first encounter
    std::vector<bool> seen(xs.size(), false);
    Diagram d;
    int base = 1;
    for (std::size_t ci = 0; ci < walk.size(); ++ci) {
        auto& w = walk[ci];
        std::sort(w.begin(), w.end(), [](const Passage& a, const Passage& b) {
            return a.edge != b.edge ? a.edge < b.edge : a.t < b.t;
        });
        const int m = static_cast<int>(w.size());
        if (m == 0) {
            ++d.free_loops;
            continue;
        }
        for (int k = 0; k < m; ++k) {
            const int in = base + k;
            const int out = base + (k + 1) % m;
            auto& s = slots[w[k].crossing];
            if (w[k].over) {
                s.over_in = in;
                s.over_out = out;
            } else {
                s.under_in = in;
                s.under_out = out;
            }
            if (!seen[w[k].crossing]) {
                seen[w[k].crossing] = true;
                order.push_back(static_cast<int>(w[k].crossing));
            }
        }
        base += m;
    }

    for (int k : order) {
        const auto& x = xs[k];
        const auto& s = slots[k];
        const bool first_over = x.depth_first > x.depth_second;
        auto direction = [&](const EdgeRef& e) {
            const auto& c = link.components[e.component];
            const std::size_t n = c.vertices.size();
            const Point2 a = proj.image(e.component, e.index);
            const Point2 b = proj.image(e.component, (e.index + 1) % n);
            return Point2{b.x - a.x, b.y - a.y};
        };
        const Point2 o = direction(first_over ? x.first : x.second);
        const Point2 u = direction(first_over ? x.second : x.first);
        const int sign = cross2(o, u) > 0.0 ? 1 : -1;
        if (sign > 0)
            d.pd.push_back({s.under_in, s.over_out, s.under_out, s.over_in});
        else
            d.pd.push_back({s.under_in, s.over_in, s.under_out, s.over_out});
        d.signs.push_back(sign);
    }
    return d;
}

}  // namespace supercoil

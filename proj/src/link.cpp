#include "supercoil/link.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "supercoil/bounds.hpp"
#include "supercoil/diagram.hpp"

namespace supercoil {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 sub(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 unit2(const Point2& v) {
    const double r = std::hypot(v.x, v.y);
    return {v.x / r, v.y / r};
}
Point2 polar(double angle, double r = 1.0) { return {r * std::cos(angle), r * std::sin(angle)}; }
double heading(const Point2& v) { return std::atan2(v.y, v.x); }

// p + s d = q + t e
std::pair<double, double> line_meet(const Point2& p, const Point2& d, const Point2& q, const Point2& e) {
    const double den = cross2(d, e);
    if (std::abs(den) < 1e-15) throw LinkError("parallel frame rays");
    const Point2 w = sub(q, p);
    return {cross2(w, e) / den, cross2(w, d) / den};
}

bool segments_cross(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
    const auto side = [](const Point2& a, const Point2& b, const Point2& c) { return cross2(sub(b, a), sub(c, a)); };
    return side(p, q, r) * side(p, q, s) < 0.0 && side(r, s, p) * side(r, s, q) < 0.0;
}

double point_segment(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 d = sub(b, a);
    const double len2 = d.x * d.x + d.y * d.y;
    const double t = std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2, 0.0, 1.0);
    return std::hypot(p.x - a.x - t * d.x, p.y - a.y - t * d.y);
}

// Ladder layout for odd n >= 3 over virtual indices -1..n+2. Odd vertices
// on a left arc, even ones on a right arc; -1 and n+2 are the far closure
// bend P, 0 and n+1 the bends Q, Q' closing the first and last pairs.
std::map<int, Point2> ladder(int n) {
    constexpr double a = 0.6, b = 0.6, gap = 0.45;
    const double yc = -(n + 1) / 2.0, half = (n + 1) / 2.0 + 0.5;
    std::map<int, Point2> pos;
    double xmax = -1e300;
    for (int k = 1; k <= n; ++k) {
        const double y = -k;
        const double q = 1.0 - std::pow((y - yc) / half, 2);
        const double x = k % 2 ? -a * q * n / 3.0 : gap + b * q * n / 3.0;
        pos[k] = {x, y};
        xmax = std::max(xmax, x);
    }
    const Point2 p{xmax + 1.5 * (n + 1), yc};
    const Point2 t1 = pos[1], t2 = pos[2];
    const double d12 = heading(sub(t2, t1));
    double d1p = heading(sub(p, t1));
    if (d1p < d12) d1p += 2.0 * kPi;
    const Point2 r1 = polar(0.5 * (d12 + d1p));
    Point2 r2 = polar(100.0 * kPi / 180.0);
    if (n >= 5) {
        double hi = heading(sub(t1, t2));
        double lo = heading(sub(pos[4], t2)) + kPi - 2.0 * kPi;
        while (hi < lo) hi += 2.0 * kPi;
        while (hi - lo > 2.0 * kPi) hi -= 2.0 * kPi;
        r2 = polar(0.5 * (lo + hi));
    }
    const auto [s, t] = line_meet(t1, r1, t2, r2);
    if (s <= 0.0 || t <= 0.0) throw LinkError("closure bend falls behind the frame");
    const Point2 q{t1.x + s * r1.x, t1.y + s * r1.y};
    pos[0] = q;
    pos[n + 1] = {q.x, 2.0 * yc - q.y};
    pos[-1] = p;
    pos[n + 2] = p;
    return pos;
}

std::vector<std::vector<Point2>> frame_polylines(const FrameGraph& f) {
    std::vector<std::vector<Point2>> out;
    for (const auto& e : f.edges) {
        std::vector<Point2> line{f.vertices[e.from]};
        line.insert(line.end(), e.bends.begin(), e.bends.end());
        line.push_back(f.vertices[e.to]);
        out.push_back(std::move(line));
    }
    return out;
}

void check_frame(const FrameGraph& f, bool reflected) {
    const auto lines = frame_polylines(f);
    struct Stick {
        Point2 p, q;
    };
    std::vector<Stick> sticks;
    for (const auto& l : lines)
        for (std::size_t i = 0; i + 1 < l.size(); ++i) sticks.push_back({l[i], l[i + 1]});
    const auto same = [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; };
    for (std::size_t i = 0; i < sticks.size(); ++i)
        for (std::size_t j = i + 1; j < sticks.size(); ++j) {
            const auto &s = sticks[i], &t = sticks[j];
            if (same(s.p, t.p) || same(s.p, t.q) || same(s.q, t.p) || same(s.q, t.q)) continue;
            if (segments_cross(s.p, s.q, t.p, t.q)) throw LinkError("frame is not planar");
        }
    // Counterclockwise port order of the standard form: odd vertices
    // (k+1, k-1, k-2, k+2), even ones (k-2, k-1, k+1, k+2).
    for (int k = 0; k < f.n && f.n > 1; ++k) {
        const bool odd = (k + 1) % 2 == 1;
        const std::array<Point2, 4> req = odd ? std::array{f.forward[k][0].dir, f.back[k][1].dir, f.back[k][0].dir,
                                                           f.forward[k][1].dir}
                                              : std::array{f.back[k][0].dir, f.back[k][1].dir, f.forward[k][0].dir,
                                                           f.forward[k][1].dir};
        double total = 0.0;
        for (int i = 0; i < 4; ++i) {
            double turn = heading(req[(i + 1) % 4]) - heading(req[i]);
            while (turn <= 0.0) turn += 2.0 * kPi;
            total += turn;
        }
        // A reflected frame runs the same cycle clockwise.
        if (reflected) total = 8.0 * kPi - total;
        if (std::abs(total - 2.0 * kPi) > 1e-9)
            throw LinkError("ports at frame vertex " + std::to_string(k + 1) + " are out of order");
    }
}

struct Placed {
    std::vector<Point3> pts;  // interior vertices, back end first
    FramePort back, forward;
};

std::vector<Point3> as3(const std::vector<Point2>& v) {
    std::vector<Point3> out;
    for (const auto& p : v) out.push_back({p.x, p.y, 0.0});
    return out;
}

// Walks strands and frame edges into closed components.
PolyLink trace(const std::vector<Placed>& strands, const std::vector<std::vector<Point3>>& bends) {
    std::map<std::pair<int, int>, std::pair<int, int>> owner;  // (edge, end) -> (strand, end)
    for (std::size_t i = 0; i < strands.size(); ++i) {
        owner[{strands[i].back.edge, strands[i].back.end}] = {int(i), 0};
        owner[{strands[i].forward.edge, strands[i].forward.end}] = {int(i), 1};
    }
    PolyLink link;
    std::vector<bool> used(strands.size(), false);
    for (std::size_t start = 0; start < strands.size(); ++start) {
        if (used[start]) continue;
        Chain comp;
        int s = int(start), dir = 0;
        while (!used[s]) {
            used[s] = true;
            const auto& pts = strands[s].pts;
            if (dir == 0)
                comp.vertices.insert(comp.vertices.end(), pts.begin(), pts.end());
            else
                comp.vertices.insert(comp.vertices.end(), pts.rbegin(), pts.rend());
            const FramePort& out = dir == 0 ? strands[s].forward : strands[s].back;
            const auto& via = bends[out.edge];
            if (out.end == 0)
                comp.vertices.insert(comp.vertices.end(), via.begin(), via.end());
            else
                comp.vertices.insert(comp.vertices.end(), via.rbegin(), via.rend());
            const auto [next, end] = owner.at({out.edge, 1 - out.end});
            s = next;
            dir = end;
        }
        link.components.push_back(std::move(comp));
    }
    return link;
}

void split_strands(const TangleGeometry& t, const FrameGraph& f, int k, const std::vector<Point3>& a,
                   const std::vector<Point3>& b, std::vector<Placed>& out) {
    out.push_back({a, f.back[k][t.a_back_port], f.forward[k][t.a_forward_port]});
    out.push_back({b, f.back[k][1 - t.a_back_port], f.forward[k][1 - t.a_forward_port]});
}

std::vector<Point3> interior(const Chain& c) { return {c.vertices.begin() + 1, c.vertices.end() - 1}; }

// Embedding, component count and determinant against the continued
// fraction.
void verify_link(const PolyLink& link, const ConwaySpec& spec) {
    if (const auto rep = check_embedded(link); !rep) throw LinkError("built link is not embedded: " + rep.message);
    const int comps = expected_components(spec);
    if (component_count(link) != comps)
        throw LinkError("built link has " + std::to_string(component_count(link)) + " components, expected " +
                        std::to_string(comps));
    const Diagram d = extract_diagram(link, find_generic_projection(link, ProjectionDir::z()));
    if (!determinant_matches(d, spec))
        throw LinkError("built link's determinant disagrees with the continued fraction");
}

// The single-vertex frame: an inner loop through X joins the back-lower
// and first forward ports, an outer loop through Y and Z the other two.
PolyLink close_single(const FrameGraph& frame, const ConwaySpec& spec, const LinkOptions& opt) {
    const int c = spec.twist(0);
    // For two components each strand closes on itself; the strand with the
    // extra vertex must take the 2-stick inner loop or the other one would
    // close into a 2-gon.
    StrandRoute route;
    if (c == 2) route = {1, 0};
    const TangleGeometry t = build_tangle(c, frame.signs[0], frame.ports(0), opt.placement, route);
    std::vector<Placed> strands;
    split_strands(t, frame, 0, interior(t.strand_a), interior(t.strand_b), strands);
    const TanglePorts ports = frame.ports(0);
    const auto end_at = [&](const FramePort& port) {
        for (const auto& s : strands) {
            if (s.back.edge == port.edge && s.back.end == port.end) return s.pts.front();
            if (s.forward.edge == port.edge && s.forward.end == port.end) return s.pts.back();
        }
        throw LinkError("unattached port");
    };
    const Point3 pb = end_at(frame.back[0][1]), pf = end_at(frame.forward[0][0]);
    double size = 0.0;
    for (const auto& s : strands)
        for (const auto& p : s.pts) size = std::max(size, std::hypot(p.x, p.y));

    std::vector<Point2> inner;
    const auto [s, u] = line_meet({pb.x, pb.y}, ports.back[1], {pf.x, pf.y}, ports.forward[0]);
    if (s > 0.0 && u > 0.0) inner.push_back({pb.x + s * ports.back[1].x, pb.y + s * ports.back[1].y});
    const double mid = 0.5 * (heading(ports.back[1]) + heading(ports.forward[0]));
    for (double r : {1.0, 2.0, 4.0, 0.5}) inner.push_back(polar(mid, r * (1.0 + size)));

    const Point3 qb = end_at(frame.back[0][0]), qf = end_at(frame.forward[0][1]);
    std::string last_error = "no inner loop corner verified";
    for (const auto& x : inner) {
        const double far = std::max(30.0 * (1.0 + size), 8.0 * std::hypot(x.x, x.y));
        const Point2 y{qb.x + far * ports.back[0].x, qb.y + far * ports.back[0].y};
        const Point2 z{qf.x + far * ports.forward[1].x, qf.y + far * ports.forward[1].y};
        std::vector<std::vector<Point3>> bends(frame.edges.size());
        bends[frame.back[0][1].edge] = as3({x});
        bends[frame.back[0][0].edge] = as3({y, z});
        PolyLink link = trace(strands, bends);
        if (!opt.verify) return link;
        try {
            verify_link(link, spec);
            return link;
        } catch (const std::exception& e) {
            last_error = e.what();
        }
    }
    throw LinkError(last_error);
}

}  // namespace

// Continued-fraction numerator modulo `prime`.
unsigned long long numerator_mod(const ConwaySpec& spec, unsigned long long prime) {
    using u128 = unsigned __int128;
    const auto& c = spec.twists();
    unsigned long long p = c.back() % prime, q = 1 % prime;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        const unsigned long long np = static_cast<unsigned long long>((u128(c[i]) * p + q) % prime);
        q = p;
        p = np;
    }
    return p;
}

std::optional<ProjectionDir> find_minimal_projection(const PolyLink& link, int crossings, std::size_t samples) {
    constexpr double golden = 2.399963229728653;  // pi (3 - sqrt 5)
    for (std::size_t i = 0; i < samples; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / samples, r = std::sqrt(1.0 - z * z);
        const ProjectionDir dir({r * std::cos(golden * i), r * std::sin(golden * i), z});
        if (!genericity_certificate(link, dir)) continue;
        const Diagram d = extract_diagram(link, dir);
        if (static_cast<int>(d.crossing_count()) == crossings && is_alternating(d)) return dir;
    }
    return std::nullopt;
}

int expected_components(const ConwaySpec& spec) { return numerator_mod(spec, 2) == 0 ? 2 : 1; }

// Compared modulo two large primes, so big links never overflow.
bool determinant_matches(const Diagram& d, const ConwaySpec& spec) {
    for (unsigned long long prime : {2305843009213693951ULL, 4611686018427387847ULL}) {
        const unsigned long long want = numerator_mod(spec, prime), got = determinant_mod(d, prime);
        if (got != want && got != (prime - want) % prime) return false;
    }
    return true;
}

std::size_t FrameGraph::stick_count() const {
    std::size_t s = 0;
    for (const auto& e : edges) s += e.bends.size() + 1;
    return s;
}

TanglePorts FrameGraph::ports(int k) const {
    return {{back[k][0].dir, back[k][1].dir}, {forward[k][0].dir, forward[k][1].dir}};
}

FrameGraph build_frame(const ConwaySpec& spec) {
    const int n = spec.n();
    if (n < 1 || n % 2 == 0) throw LinkError("the frame needs an odd number of tangles");
    FrameGraph f;
    f.n = n;
    // Negative tangles go on the left. The ladder puts odd vertices there,
    // which gives the mirror of the standard form; the unmirrored link
    // reflects the whole frame in x.
    const bool reflect = !spec.mirror();
    const auto flip = [&](Point2 p) {
        if (reflect) p.x = -p.x;
        return p;
    };
    for (int k = 1; k <= n; ++k) f.signs.push_back((k % 2 ? -1 : 1) * (reflect ? -1 : 1));
    f.back.resize(n);
    f.forward.resize(n);

    if (n == 1) {
        TanglePorts p = TanglePorts::canonical();
        for (auto* d : {&p.back[0], &p.back[1], &p.forward[0], &p.forward[1]}) *d = flip(*d);
        f.vertices = {{0.0, 0.0}};
        const double mid = 0.5 * (heading(p.back[1]) + heading(p.forward[0]));
        f.edges.push_back({0, 0, {polar(mid)}});
        f.edges.push_back({0, 0, {polar(heading(p.back[0]), 30.0), polar(heading(p.forward[1]), 30.0)}});
        f.back[0] = {FramePort{1, 0, p.back[0]}, FramePort{0, 0, p.back[1]}};
        f.forward[0] = {FramePort{0, 1, p.forward[0]}, FramePort{1, 1, p.forward[1]}};
        return f;
    }

    auto pos = ladder(n);
    for (auto& [j, p] : pos) p = flip(p);
    for (int k = 1; k <= n; ++k) f.vertices.push_back(pos.at(k));
    std::map<std::pair<int, int>, FramePort> port;  // (vertex, virtual neighbour)
    const auto add = [&](int a, int ja, int b, int jb, std::vector<Point2> bends) {
        const int e = static_cast<int>(f.edges.size());
        f.edges.push_back({a - 1, b - 1, bends});
        port[{a, ja}] = {e, 0, unit2(sub(pos.at(ja), pos.at(a)))};
        port[{b, jb}] = {e, 1, unit2(sub(pos.at(jb), pos.at(b)))};
    };
    for (int k = 1; k < n; ++k) add(k, k + 1, k + 1, k, {});
    for (int k = 1; k + 2 <= n; ++k) add(k, k + 2, k + 2, k, {});
    add(1, 0, 2, 0, {pos.at(0)});
    add(n - 1, n + 1, n, n + 1, {pos.at(n + 1)});
    add(1, -1, n, n + 2, {pos.at(-1)});
    for (int k = 1; k <= n; ++k) {
        f.back[k - 1] = {port.at({k, k - 2}), port.at({k, k - 1})};
        f.forward[k - 1] = {port.at({k, k + 1}), port.at({k, k + 2})};
    }
    check_frame(f, reflect);
    return f;
}

PolyLink insert_tangles(const FrameGraph& frame, const ConwaySpec& spec, const LinkOptions& opt) {
    if (spec.n() != frame.n) throw LinkError("spec and frame disagree on the number of tangles");
    if (!(opt.ball_fraction > 0.0 && opt.ball_fraction < 0.5)) throw LinkError("ball fraction must lie in (0, 0.5)");
    if (frame.n == 1) return close_single(frame, spec, opt);

    std::vector<TangleGeometry> tangles;
    for (int k = 0; k < frame.n; ++k)
        tangles.push_back(build_tangle(spec.twist(k), frame.signs[k], frame.ports(k), opt.placement));

    // One scale for all tangles. Frame sticks run from tangle to tangle, and
    // a tangle blown up beyond its neighbours sees them arrive tilted enough
    // to swap over and under inside its ball.
    const auto lines = frame_polylines(frame);
    double scale = 1e300;
    for (int k = 0; k < frame.n; ++k) {
        const Point2 v = frame.vertices[k];
        double clear = 1e300;
        for (const auto& l : lines)
            for (std::size_t i = 0; i + 1 < l.size(); ++i) {
                const bool incident = (l[i].x == v.x && l[i].y == v.y) || (l[i + 1].x == v.x && l[i + 1].y == v.y);
                clear = std::min(clear, incident ? 0.5 * std::hypot(l[i + 1].x - l[i].x, l[i + 1].y - l[i].y)
                                                 : point_segment(v, l[i], l[i + 1]));
            }
        double radius = 0.0;
        for (const Chain* s : {&tangles[k].strand_a, &tangles[k].strand_b})
            for (const auto& p : interior(*s)) radius = std::max(radius, std::hypot(p.x, p.y));
        scale = std::min(scale, opt.ball_fraction * clear / radius);
    }

    std::vector<Placed> strands;
    for (int k = 0; k < frame.n; ++k) {
        const Point2 v = frame.vertices[k];
        const auto place = [&](const Chain& s) {
            std::vector<Point3> out;
            for (const auto& p : interior(s)) out.push_back({v.x + scale * p.x, v.y + scale * p.y, scale * p.z});
            return out;
        };
        split_strands(tangles[k], frame, k, place(tangles[k].strand_a), place(tangles[k].strand_b), strands);
    }
    std::vector<std::vector<Point3>> bends;
    for (const auto& e : frame.edges) bends.push_back(as3(e.bends));
    PolyLink link = trace(strands, bends);
    if (opt.verify) verify_link(link, spec);
    return link;
}

PolyLink build_link(const ConwaySpec& spec, const LinkOptions& options) {
    return insert_tangles(build_frame(spec), spec, options);
}

int component_count(const PolyLink& link) { return static_cast<int>(link.components.size()); }

}  // namespace supercoil

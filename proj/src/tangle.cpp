#include "supercoil/tangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "supercoil/bounds.hpp"

namespace supercoil {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Point3 kZ{0.0, 0.0, 1.0};

Point3 lift(const Point2& p) { return {p.x, p.y, 0.0}; }
double cr(const Point3& a, const Point3& b) { return a.x * b.y - a.y * b.x; }

double angle_of(const Point3& v) {
    const double a = std::atan2(v.y, v.x);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

// Parameters of a proper crossing of the xy-shadows of pq and rs.
std::optional<std::pair<double, double>> shadow_cross(const Point3& p, const Point3& q, const Point3& r,
                                                      const Point3& s) {
    const Point3 d1 = q - p, d2 = s - r;
    const double den = cr(d1, d2);
    if (std::abs(den) < 1e-15) return std::nullopt;
    const Point3 w = r - p;
    const double t = cr(w, d2) / den, u = cr(w, d1) / den;
    if (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0) return std::pair{t, u};
    return std::nullopt;
}

// 0 if the shadows miss, else the sign of the crossing.
int shadow_sign(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    const auto x = shadow_cross(p, q, r, s);
    if (!x) return 0;
    const double za = p.z + x->first * (q.z - p.z);
    const double zb = r.z + x->second * (s.z - r.z);
    const Point3 da = q - p, db = s - r;
    const double v = za > zb ? cr(da, db) : cr(db, da);
    return v > 0.0 ? 1 : -1;
}

double segment_distance(const Point3& p1, const Point3& q1, const Point3& p2, const Point3& q2) {
    const Point3 d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r), c = dot(d1, r), b = dot(d1, d2);
    const double den = a * e - b * b;
    double s = den > 1e-14 ? std::clamp((b * f - c * e) / den, 0.0, 1.0) : 0.0;
    double t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    return norm(p1 + d1 * s - (p2 + d2 * t));
}

// Local frame: rod rays bU (upper) and bL leave v_1 = origin around -x, the
// forward rays f1, f2 point into y < 0. Zigzag vertices alternate across
// the rod; the far vertex sits high on the back side so both exit rays cut
// the rod beyond the zigzag. Heights make every zig edge pass over the rod
// on the way up and under it on the way down, by at least mu.
std::vector<Point3> core_layout(int m, const Point3& bU, const Point3& bL, const Point3& f1, const Point3& f2,
                                double mu) {
    std::vector<Point3> v2{{0.0, 0.0, 0.0}};
    if (m == 0) return v2;
    const double ta = std::max(bU.x != 0.0 ? std::abs(bU.y / bU.x) : 1e3, 1e-3);
    constexpr double w = 1.0;
    if (m >= 2) {
        const double d = 0.5 / (m * (1.0 + ta));
        for (int i = 2; i <= m; ++i) {
            const double side = (m - i) % 2 == 0 ? -1.0 : 1.0;
            v2.push_back({-(i - 1) * d, side * w, 0.0});
        }
    }
    const double lo = std::max(angle_of(f1), angle_of(f2)) - kPi;
    const double th = 0.5 * (lo + angle_of(bU));
    double xmin = 0.0;
    for (const auto& p : v2) xmin = std::min(xmin, p.x);
    double radius = 2.0;
    Point3 far;
    for (int iter = 0;; ++iter) {
        if (iter > 200) throw TangleError("no far core vertex clears the forward ports");
        far = {radius * std::cos(th), radius * std::sin(th), 0.0};
        bool ok = far.y > w + 0.5 && far.x < xmin - 0.5;
        for (const Point3* f : {&f1, &f2}) {
            if (!ok) break;
            if (f->y >= 0.0) {
                ok = false;
                break;
            }
            const double s = (far.y + w + 0.5) / -f->y;
            if (far.x + s * f->x > xmin - 0.5) ok = false;
        }
        if (ok) break;
        radius *= 1.25;
    }
    v2.push_back(far);

    const auto rod_params = [&](const Point3& p, const Point3& q) {
        std::vector<double> out;
        for (const Point3* r : {&bU, &bL})
            if (auto x = shadow_cross(p, q, {}, *r * 1e6)) out.push_back(x->first);
        if (out.size() != 2) throw TangleError("core edge misses the rod");
        return out;
    };
    const int n = static_cast<int>(v2.size());
    std::vector<double> z(n, 0.0);
    z[n - 1] = -2.0 * mu;
    if (m >= 2) {
        double best = -1e300;
        for (double s : rod_params(v2[n - 2], v2[n - 1])) best = std::max(best, (mu - z[n - 1] * s) / (1.0 - s));
        z[n - 2] = best;
        for (int i = n - 3; i >= 1; --i) {
            const bool up = v2[i + 1].y > v2[i].y;
            double b = up ? -1e300 : 1e300;
            for (double s : rod_params(v2[i], v2[i + 1])) {
                if (up)
                    b = std::max(b, (mu - z[i + 1] * s) / (1.0 - s));
                else
                    b = std::min(b, (-mu - z[i + 1] * s) / (1.0 - s));
            }
            z[i] = b;
        }
    }
    for (int i = 0; i < n; ++i) v2[i].z = z[i];
    return v2;
}

// Smallest of: core edge lengths, clearances between non-adjacent core
// edges, and the width of each corner (sine of its angle times the shorter
// arm), in space and in the shadow.
double min_feature(const std::vector<Point3>& v, const Point3& back, const Point3& fwd, double reach) {
    std::vector<Point3> pts{v.front() + back * reach};
    pts.insert(pts.end(), v.begin(), v.end());
    pts.push_back(v.back() + fwd * reach);
    double best = 1.0;
    if (v.size() > 1) {
        best = 1e300;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) best = std::min(best, distance(v[i], v[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = i + 2; j + 1 < pts.size(); ++j)
            best = std::min(best, segment_distance(pts[i], pts[i + 1], pts[j], pts[j + 1]));
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        for (bool shadow : {false, true}) {
            Point3 a = pts[i - 1] - pts[i], b = pts[i + 1] - pts[i];
            if (shadow) a.z = b.z = 0.0;
            const double la = norm(a), lb = norm(b);
            best = std::min(best, norm(cross(a, b)) / (la * lb) * std::min(la, lb));
        }
    }
    return best;
}

struct Frame {
    Point3 l, k, n;  // bisector, in-plane perpendicular, upward plane normal
};

std::vector<Frame> frames(const std::vector<Point3>& v, const Point3& back, const Point3& fwd) {
    std::vector<Frame> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point3 a = normalized(i > 0 ? v[i - 1] - v[i] : back);
        const Point3 b = normalized(i + 1 < v.size() ? v[i + 1] - v[i] : fwd);
        Point3 n = cross(a, b);
        n = norm(n) > 1e-12 ? normalized(n) : kZ;
        if (n.z < 0.0) n = -n;
        const Point3 l = normalized(dot(a, b) > 0.0 ? a + b : a - b);
        out.push_back({l, normalized(cross(n, l)), n});
    }
    return out;
}

double default_mu(int m) { return 0.08 / std::max(m, 8); }

double free_reach(const std::vector<Point3>& v) {
    double r = 0.0;
    for (const auto& p : v) r = std::max(r, norm(p));
    return 50.0 * (1.0 + r);
}

// Depth-first search over the pair (o_i, u_i) at each core vertex, in the
// local frame with target sign -1. Every partial stick set must have only
// negative crossings and the number the core predicts so far.
class StrandSearch {
public:
    int c = 0, m = 0, n = 0;
    bool want_w = false;
    double eps = 0.0, tilt = 0.1;
    std::vector<Point3> v;
    std::vector<Frame> fr;
    std::vector<int> fold, rodx;
    Point3 fwd;
    std::array<Point3, 2> bp, fp;

    // Allowed values of asg_b / asg_f, -1 for either.
    int want_b = -1, want_f = -1;

    std::vector<Point3> a_out, b_out;
    int asg_b = 0, asg_f = 0;
    long nodes = 0;
    // hard cap on search nodes; bad port layouts otherwise backtrack for seconds
    static constexpr long kNodeBudget = 20000;

    // Clearances are relaxed step by step before giving up.
    bool run() {
        const int edges = (want_w && n > 1) ? n - 1 : 1;
        for (double relax : {1.0, 0.2, 0.0}) {
            slack_ = relax;
            for (we_ = 0; we_ < edges; ++we_)
                for (asg_b = 0; asg_b < 2; ++asg_b) {
                    if (want_b >= 0 && asg_b != want_b) continue;
                    std::vector<Point3> ap, bq;
                    if (dfs(0, ap, bq)) return true;
                }
        }
        return false;
    }

private:
    int we_ = 0;
    double slack_ = 1.0;

    std::vector<std::pair<Point3, Point3>> candidates(int i) const {
        const auto& f = fr[i];
        const std::array<Point3, 4> dirs = fold[i] ? std::array{f.k, -f.k, f.l, -f.l} : std::array{f.l, -f.l, f.k, -f.k};
        std::vector<std::pair<Point3, Point3>> out;
        for (double t : {tilt, 0.5, 1.0, 1.4})
            for (const auto& d : dirs)
                for (double zt : {1.0, -1.0}) {
                    const Point3 off = eps * (std::cos(t) * d + std::sin(t) * zt * f.n);
                    out.emplace_back(v[i] + off, v[i] - off);
                }
        return out;
    }

    std::vector<Point3> w_candidates(const Point3& p, const Point3& q) const {
        const Point3 mid = 0.5 * (p + q);
        const Point3 lat = normalized(cross(kZ, normalized(q - p)));
        std::vector<Point3> out;
        for (double lw : {0.6, 1.5, 0.2})
            for (double sl : {1.0, -1.0})
                for (double zw : {1.0, -1.0}) out.push_back(mid + eps * (lw * sl * lat + 0.8 * zw * kZ));
        return out;
    }

    // (crossings between strands, crossings within a strand), or nothing if
    // some crossing is positive.
    static std::optional<std::pair<int, int>> audit(const std::vector<Point3>& a, const std::vector<Point3>& b) {
        struct Stick {
            int strand, idx;
            const Point3 *p, *q;
        };
        std::vector<Stick> sticks;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) sticks.push_back({0, int(i), &a[i], &a[i + 1]});
        for (std::size_t i = 0; i + 1 < b.size(); ++i) sticks.push_back({1, int(i), &b[i], &b[i + 1]});
        int nab = 0, naa = 0;
        for (std::size_t i = 0; i < sticks.size(); ++i)
            for (std::size_t j = i + 1; j < sticks.size(); ++j) {
                const auto &s = sticks[i], &t = sticks[j];
                const bool same = s.strand == t.strand;
                if (same && std::abs(s.idx - t.idx) <= 1) continue;
                const int x = shadow_sign(*s.p, *s.q, *t.p, *t.q);
                if (x == 0) continue;
                if (x != -1) return std::nullopt;
                ++(same ? naa : nab);
            }
        return std::pair{nab, naa};
    }

    // Every interior vertex keeps 0.1 eps from every stick it is not on, in
    // the shadow. Frame sticks arrive slightly off the port directions, so
    // a vertex sitting on a free stick's line would be grazed.
    // `finished` lists end at their far forward points, which are skipped
    // like the far back points at the front.
    bool clear(const std::vector<Point3>& a, const std::vector<Point3>& b, bool finished) const {
        if (slack_ == 0.0) return true;
        const double gap = 0.1 * slack_ * eps;
        for (const auto* s : {&a, &b})
            for (std::size_t i = 0; i + 1 < s->size(); ++i) {
                const Point3 p = (*s)[i], q = (*s)[i + 1];
                const Point3 d{q.x - p.x, q.y - p.y, 0.0};
                const double len2 = d.x * d.x + d.y * d.y;
                for (const auto* t : {&a, &b})
                    for (std::size_t j = 1; j + (finished ? 1 : 0) < t->size(); ++j) {
                        if (t == s && (j == i || j == i + 1)) continue;
                        const Point3& v = (*t)[j];
                        const double u = std::clamp(((v.x - p.x) * d.x + (v.y - p.y) * d.y) / len2, 0.0, 1.0);
                        if (std::hypot(v.x - p.x - u * d.x, v.y - p.y - u * d.y) < gap) return false;
                    }
            }
        // Non-adjacent sticks stay 0.01 eps apart in space.
        const double gap3 = 0.01 * slack_ * eps;
        const auto pairs = [&](const std::vector<Point3>& s, const std::vector<Point3>& t, bool same) {
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                for (std::size_t j = same ? i + 2 : 0; j + 1 < t.size(); ++j)
                    if (segment_distance(s[i], s[i + 1], t[j], t[j + 1]) < gap3) return false;
            return true;
        };
        return pairs(a, a, true) && pairs(b, b, true) && pairs(a, b, false);
    }

    bool dfs(int k, const std::vector<Point3>& ap, const std::vector<Point3>& bq) {
        if (++nodes > kNodeBudget) return false;
        if (k == n) {
            for (asg_f = 0; asg_f < 2; ++asg_f) {
                if (want_f >= 0 && asg_f != want_f) continue;
                std::vector<std::optional<Point3>> tails{std::nullopt};
                if (want_w && n == 1) {
                    tails.clear();
                    for (double t : {4.0, 2.0, 8.0})
                        for (const auto& w : w_candidates(bq.back(), bq.back() + t * eps * fwd)) tails.push_back(w);
                }
                for (const auto& tail : tails) {
                    std::vector<Point3> a{bp[asg_b]};
                    a.insert(a.end(), ap.begin(), ap.end());
                    if (tail) a.push_back(*tail);
                    a.push_back(fp[asg_f]);
                    std::vector<Point3> b{bp[1 - asg_b]};
                    b.insert(b.end(), bq.begin(), bq.end());
                    b.push_back(fp[1 - asg_f]);
                    const auto x = audit(a, b);
                    if (x && x->first + x->second == c + 2 * m && x->first == c && clear(a, b, true)) {
                        a_out = std::move(a);
                        b_out = std::move(b);
                        return true;
                    }
                }
            }
            return false;
        }
        int ncore = 0, folds = 0;
        for (int j = 0; j < k; ++j) {
            ncore += rodx[j];
            folds += fold[j];
        }
        const int expect_ab = folds + ((want_w && k >= we_ + 1 && n > 1) ? 1 : 0) + 2 * ncore;
        for (const auto& [o, u] : candidates(k)) {
            std::vector<std::optional<Point3>> ws{std::nullopt};
            if (want_w && k == we_ + 1) {
                ws.clear();
                for (const auto& w : w_candidates(bq.back(), u)) ws.push_back(w);
            }
            for (const auto& w : ws) {
                std::vector<Point3> ap2 = ap, bq2 = bq;
                if (w) ap2.push_back(*w);
                ap2.push_back(o);
                bq2.push_back(u);
                std::vector<Point3> a{bp[asg_b]}, b{bp[1 - asg_b]};
                a.insert(a.end(), ap2.begin(), ap2.end());
                b.insert(b.end(), bq2.begin(), bq2.end());
                const auto x = audit(a, b);
                if (!x || x->first != expect_ab || x->second != 2 * ncore || !clear(a, b, false)) continue;
                if (dfs(k + 1, ap2, bq2)) return true;
            }
        }
        return false;
    }
};

Point3 rotate2(const std::array<double, 4>& mat, const Point3& p) {
    return {mat[0] * p.x + mat[1] * p.y, mat[2] * p.x + mat[3] * p.y, p.z};
}

}  // namespace

std::vector<Point3> CoreGeometry::polyline(double reach) const {
    std::vector<Point3> out{vertices.front() + back_dir * reach};
    out.insert(out.end(), vertices.begin(), vertices.end());
    out.push_back(vertices.back() + forward_dir * reach);
    return out;
}

TanglePorts TanglePorts::canonical() {
    const auto dir = [](double deg) {
        const double r = deg * kPi / 180.0;
        return Point2{std::cos(r), std::sin(r)};
    };
    return {{dir(165.0), dir(195.0)}, {dir(240.0), dir(300.0)}};
}

CoreGeometry build_core(int m, int sign) {
    if (m < 0) throw TangleError("core needs m >= 0");
    if (sign != 1 && sign != -1) throw TangleError("sign must be +1 or -1");
    const TanglePorts p = TanglePorts::canonical();
    const Point3 bU = lift(p.back[0]), bL = lift(p.back[1]), f1 = lift(p.forward[0]), f2 = lift(p.forward[1]);
    CoreGeometry core;
    core.vertices = core_layout(m, bU, bL, f1, f2, default_mu(m));
    if (sign > 0)
        for (auto& q : core.vertices) q.z = -q.z;
    core.back_dir = normalized(bU + bL);
    core.forward_dir = normalized(f1 + f2);
    core.m = m;
    core.writhe = sign * m;
    return core;
}

std::pair<std::vector<Point3>, std::vector<Point3>> place_vertices(const CoreGeometry& core,
                                                                 const TanglePlacement& placement) {
    if (core.vertices.empty()) throw TangleError("empty core");
    const double feature = min_feature(core.vertices, core.back_dir, core.forward_dir, free_reach(core.vertices));
    const double eps = placement.epsilon > 0.0 ? placement.epsilon : 0.05 * feature;
    if (eps > 0.5 * feature)
        throw TangleError("epsilon " + std::to_string(eps) + " exceeds the safe tube radius " +
                          std::to_string(0.5 * feature));
    const auto fr = frames(core.vertices, core.back_dir, core.forward_dir);
    std::vector<Point3> over, under;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        const Point3 off = eps * (std::cos(placement.tilt) * fr[i].k + std::sin(placement.tilt) * fr[i].n);
        Point3 o = core.vertices[i] + off, u = core.vertices[i] - off;
        if (o.z < u.z) std::swap(o, u);
        over.push_back(o);
        under.push_back(u);
    }
    return {over, under};
}

TangleGeometry build_tangle(int c, int sign, const TanglePlacement& placement) {
    return build_tangle(c, sign, TanglePorts::canonical(), placement);
}

TangleGeometry build_tangle(int c, int sign, const TanglePorts& ports, const TanglePlacement& placement,
                            const StrandRoute& route) {
    if (c < 1) throw TangleError("a tangle needs c >= 1 crossings, got " + std::to_string(c));
    if (sign != 1 && sign != -1) throw TangleError("sign must be +1 or -1");
    if (!(placement.tilt > 0.0) || placement.tilt >= kPi / 2) throw TangleError("tilt must lie in (0, pi/2)");
    if (placement.epsilon < 0.0) throw TangleError("epsilon must be positive");

    // Rotate the back bisector onto -x; reflect if the forward ports land above.
    const Point3 gb[2] = {lift(ports.back[0]), lift(ports.back[1])};
    const Point3 gf[2] = {lift(ports.forward[0]), lift(ports.forward[1])};
    const Point3 bis = normalized(gb[0] + gb[1]);
    const double rot = kPi - std::atan2(bis.y, bis.x);
    std::array<double, 4> mat{std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot)};
    if (rotate2(mat, gf[0] + gf[1]).y > 0.0) {
        mat[2] = -mat[2];
        mat[3] = -mat[3];
    }
    const bool reflected = mat[0] * mat[3] - mat[1] * mat[2] < 0.0;
    const std::array<double, 4> inv{mat[0], mat[2], mat[1], mat[3]};

    Point3 bU = normalized(rotate2(mat, gb[0])), bL = normalized(rotate2(mat, gb[1]));
    const Point3 f1 = normalized(rotate2(mat, gf[0])), f2 = normalized(rotate2(mat, gf[1]));
    const bool swap_ul = bU.y < bL.y;
    if (swap_ul) std::swap(bU, bL);
    if (f1.y >= 0.0 || f2.y >= 0.0 || bU.x >= 0.0 || bL.x >= 0.0)
        throw TangleError("back and forward ports must lie in opposite half-planes");

    StrandSearch s;
    const int upper = swap_ul ? 1 : 0;
    if (route.back >= 0) s.want_b = route.back == upper ? 0 : 1;
    if (route.forward >= 0) s.want_f = route.forward;
    s.c = c;
    s.m = c / 3;
    s.want_w = c % 3 == 2;
    s.v = core_layout(s.m, bU, bL, f1, f2, default_mu(s.m));
    s.n = static_cast<int>(s.v.size());
    const Point3 back = normalized(bU + bL);
    s.fwd = normalized(f1 + f2);
    const double reach = free_reach(s.v);
    const double feature = min_feature(s.v, back, s.fwd, reach);
    s.eps = placement.epsilon > 0.0 ? placement.epsilon : 0.05 * feature;
    if (s.eps > 0.5 * feature)
        throw TangleError("epsilon " + std::to_string(s.eps) + " exceeds the safe tube radius " +
                          std::to_string(0.5 * feature));
    s.tilt = placement.tilt;
    s.fr = frames(s.v, back, s.fwd);
    s.fold.assign(s.n, 1);
    if (c % 3 == 0) s.fold.back() = 0;
    for (int j = 0; j + 1 < s.n; ++j) {
        bool hit = false;
        for (const Point3* r : {&bU, &bL})
            if (shadow_cross(s.v[j], s.v[j + 1], {}, *r * 1e6)) hit = true;
        s.rodx.push_back(hit ? 1 : 0);
    }
    s.bp = {bU * reach, bL * reach};
    s.fp = {s.v.back() + f1 * reach, s.v.back() + f2 * reach};
    if (!s.run()) throw TangleError("no vertex placement realizes c = " + std::to_string(c));

    // The search always builds negative crossings; a reflection of the
    // frame flips them, and so does negating z.
    const int got = reflected ? 1 : -1;
    const double zs = got == sign ? 1.0 : -1.0;
    const auto to_global = [&](const Point3& p) {
        Point3 q = rotate2(inv, p);
        q.z = zs * p.z;
        return q;
    };

    TangleGeometry t;
    for (const auto& p : s.a_out) t.strand_a.vertices.push_back(to_global(p));
    for (const auto& p : s.b_out) t.strand_b.vertices.push_back(to_global(p));
    t.strand_a.closed = t.strand_b.closed = false;
    t.sign = sign;
    t.c = c;
    t.stick_count = static_cast<int>(t.strand_a.stick_count() + t.strand_b.stick_count());
    t.epsilon = s.eps;
    t.ports = ports;
    t.a_back_port = s.asg_b == 0 ? upper : 1 - upper;
    t.a_forward_port = s.asg_f;
    for (const auto& p : s.v) t.core.vertices.push_back(to_global(p));
    t.core.back_dir = normalized(rotate2(inv, back));
    t.core.forward_dir = normalized(rotate2(inv, s.fwd));
    t.core.m = s.m;
    t.core.writhe = sign * s.m;

    const auto& a = t.strand_a.vertices;
    const auto& b = t.strand_b.vertices;
    const bool a_up = a.front().y > b.front().y;
    t.endpoints.nw = a_up ? a.front() : b.front();
    t.endpoints.sw = a_up ? b.front() : a.front();
    const bool a_east = a.back().x > b.back().x;
    t.endpoints.ne = a_east ? a.back() : b.back();
    t.endpoints.se = a_east ? b.back() : a.back();

    if (t.stick_count != lemma1_sticks(c))
        throw TangleError("tangle uses " + std::to_string(t.stick_count) + " sticks, expected " +
                          std::to_string(lemma1_sticks(c)));
    if (const auto rep = check_embedded(t.as_open_link()); !rep)
        throw TangleError("tangle is not embedded: " + rep.message);
    return t;
}

CrossingAudit crossing_audit(const TangleGeometry& t) {
    if (t.core.vertices.empty() || t.strand_a.vertices.empty()) throw TangleError("audit of an empty tangle");
    const double reach = distance(t.strand_a.vertices.front(), t.core.vertices.front());
    const auto core = t.core.polyline(reach);
    CrossingAudit out;
    for (std::size_t i = 0; i + 1 < core.size(); ++i)
        for (std::size_t j = i + 2; j + 1 < core.size(); ++j) {
            const int x = shadow_sign(core[i], core[i + 1], core[j], core[j + 1]);
            if (x == 0) continue;
            if (x != t.sign) throw TangleError("core self-crossing of the wrong sign");
            ++out.core_crossings;
        }
    const PolyLink link = t.as_open_link();
    int between = 0;
    const auto xs = Projection(link, ProjectionDir::z()).crossings();
    for (const auto& x : xs) {
        if (x.first.component != x.second.component) ++between;
    }
    out.projected_crossings = static_cast<int>(xs.size());
    out.writhe_crossings = 2 * out.core_crossings;
    out.twist_crossings = between - out.writhe_crossings;
    if (out.projected_crossings - between != out.writhe_crossings)
        throw TangleError("self-crossings of the strands do not match the core writhe");
    if (out.twist_crossings + out.writhe_crossings != t.c)
        throw TangleError("crossing audit sums to " + std::to_string(out.twist_crossings + out.writhe_crossings) +
                          ", expected " + std::to_string(t.c));
    return out;
}

TangleGeometry mirrored(const TangleGeometry& t) {
    TangleGeometry r = t;
    const auto flip = [](Point3& p) { p.z = -p.z; };
    for (auto& p : r.strand_a.vertices) flip(p);
    for (auto& p : r.strand_b.vertices) flip(p);
    for (auto& p : r.core.vertices) flip(p);
    flip(r.endpoints.nw);
    flip(r.endpoints.ne);
    flip(r.endpoints.sw);
    flip(r.endpoints.se);
    r.sign = -t.sign;
    r.core.writhe = -t.core.writhe;
    return r;
}

}  // namespace supercoil

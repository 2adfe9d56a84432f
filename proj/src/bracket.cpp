#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "supercoil/diagram.hpp"

namespace supercoil {

BracketPolynomial BracketPolynomial::monomial(int exponent, long long coefficient) {
    BracketPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

long long BracketPolynomial::coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void BracketPolynomial::add_term(int exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BracketPolynomial BracketPolynomial::operator*(const BracketPolynomial& o) const {
    BracketPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

BracketPolynomial BracketPolynomial::shifted(int by) const {
    BracketPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
}

BracketPolynomial BracketPolynomial::negated() const {
    BracketPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BracketPolynomial BracketPolynomial::divided_by_loop() const {
    if (terms_.empty()) return {};
    const int lo = terms_.begin()->first;
    BracketPolynomial rem = *this, quot;
    while (!rem.is_zero()) {
        const auto [e, c] = *rem.terms_.rbegin();
        // Leading term of the loop value is -A^2.
        if (e - 2 < lo + 2) throw DiagramError("bracket is not divisible by the loop value");
        quot.add_term(e - 2, -c);
        rem.add_term(e, -c);
        rem.add_term(e - 4, -c);
    }
    return quot;
}

std::string BracketPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ' ';
        os << e << ':' << c;
        first = false;
    }
    return os.str();
}

BracketPolynomial loop_value() {
    BracketPolynomial d = BracketPolynomial::monomial(2, -1);
    d += BracketPolynomial::monomial(-2, -1);
    return d;
}

int bracket_crossing_cap() {
    if (const char* env = std::getenv("SUPERCOIL_BRACKET_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 20;
}

namespace {

using Frontier = std::vector<std::pair<int, int>>;

// Joins two edge-ends through a smoothing arc. `open` maps each dangling
// label to the label at the other end of its partial path.
void join(int p, int q, std::map<int, int>& open, int& loops) {
    int a = p;
    if (auto it = open.find(p); it != open.end()) {
        a = it->second;
        open.erase(it);
        open.erase(a);
    }
    int b = q;
    if (auto it = open.find(q); it != open.end()) {
        b = it->second;
        open.erase(it);
        open.erase(b);
    }
    if (a == b) {
        ++loops;
        return;
    }
    open[a] = b;
    open[b] = a;
}

std::vector<int> processing_order(const Diagram& d) {
    const int n = static_cast<int>(d.pd.size());
    std::vector<int> order;
    std::vector<bool> done(n, false);
    std::map<int, int> seen;  // label -> times seen among processed crossings
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            int score = 0;
            for (int l : d.pd[i])
                if (seen.count(l) && seen[l] == 1) ++score;
            if (score > best_score) {
                best = i;
                best_score = score;
            }
        }
        done[best] = true;
        order.push_back(best);
        for (int l : d.pd[best]) ++seen[l];
    }
    return order;
}

}  // namespace

BracketPolynomial kauffman_bracket(const Diagram& d) {
    validate(d);
    const int cap = bracket_crossing_cap();
    if (static_cast<int>(d.pd.size()) > cap)
        throw BudgetExceeded("bracket state sum limited to " + std::to_string(cap) + " crossings, diagram has " +
                             std::to_string(d.pd.size()));

    const BracketPolynomial delta = loop_value();
    BracketPolynomial result;
    if (d.pd.empty()) {
        result = BracketPolynomial::monomial(0);
        for (int i = 1; i < d.free_loops; ++i) result = result * delta;
        return result;
    }

    constexpr std::size_t kLiveStateLimit = std::size_t{1} << 20;
    std::map<Frontier, BracketPolynomial> states;
    states[{}] = BracketPolynomial::monomial(0);
    for (int ci : processing_order(d)) {
        const auto& x = d.pd[ci];
        std::map<Frontier, BracketPolynomial> next;
        for (const auto& [frontier, poly] : states) {
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                std::map<int, int> open;
                for (const auto& [a, b] : frontier) {
                    open[a] = b;
                    open[b] = a;
                }
                int loops = 0;
                if (smoothing == 0) {  // A: (a,b)(c,d)
                    join(x[0], x[1], open, loops);
                    join(x[2], x[3], open, loops);
                } else {  // B: (a,d)(b,c)
                    join(x[0], x[3], open, loops);
                    join(x[1], x[2], open, loops);
                }
                Frontier key;
                for (const auto& [a, b] : open)
                    if (a < b) key.emplace_back(a, b);
                BracketPolynomial term = poly.shifted(smoothing == 0 ? 1 : -1);
                for (int l = 0; l < loops; ++l) term = term * delta;
                next[key] += term;
            }
        }
        states = std::move(next);
        if (states.size() > kLiveStateLimit) throw BudgetExceeded("bracket state budget exhausted");
    }
    for (const auto& [frontier, poly] : states) {
        if (!frontier.empty()) throw DiagramError("bracket expansion left open edges");
        result += poly;
    }
    result = result.divided_by_loop();
    for (int i = 0; i < d.free_loops; ++i) result = result * delta;
    return result;
}

BracketPolynomial normalized_bracket(const Diagram& d, unsigned reversed) {
    const auto comp = d.edge_components();
    int w = 0;
    for (std::size_t i = 0; i < d.pd.size(); ++i) {
        const int cu = comp.at(d.pd[i][0]);
        const int co = comp.at(d.pd[i][1]);
        const bool ru = (reversed >> cu) & 1u;
        const bool ro = (reversed >> co) & 1u;
        w += (ru != ro) ? -d.signs[i] : d.signs[i];
    }
    BracketPolynomial f = kauffman_bracket(d).shifted(-3 * w);
    return (w % 2 != 0) ? f.negated() : f;
}

BracketPolynomial normalized_bracket(const Diagram& d) { return normalized_bracket(d, 0u); }

bool same_bracket_up_to_orientation(const Diagram& a, const Diagram& b) {
    const BracketPolynomial fa = normalized_bracket(a);
    const int comps = b.component_count() - b.free_loops;
    // Reversing every component leaves the writhe unchanged; fix component 0.
    const unsigned masks = comps > 1 ? (1u << (comps - 1)) : 1u;
    for (unsigned m = 0; m < masks; ++m) {
        if (normalized_bracket(b, m << 1) == fa) return true;
    }
    return false;
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

// Determinant mod a prime by Gaussian elimination.
u64 det_mod(std::vector<std::vector<long long>> m, u64 p) {
    const std::size_t n = m.size();
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long long v = m[i][j] % static_cast<long long>(p);
            a[i][j] = static_cast<u64>(v < 0 ? v + static_cast<long long>(p) : v);
        }
    u64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = (p - det) % p;
        }
        det = mulmod(det, a[c][c], p);
        const u64 inv = powmod(a[c][c], p - 2, p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const u64 f = mulmod(a[r][c], inv, p);
            for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - mulmod(f, a[c][k], p)) % p;
        }
    }
    return det;
}

}  // namespace

namespace {

// Fox coloring matrix with the first row and column deleted; empty when the
// diagram has a single crossing.
std::vector<std::vector<long long>> coloring_minor(const Diagram& d) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end()) return parent[x] = x;
        if (it->second == x) return x;
        return it->second = find(it->second);
    };
    for (const auto& x : d.pd) parent[find(x[1])] = find(x[3]);
    std::map<int, int> arc_id;
    for (const auto& x : d.pd)
        for (int l : x) arc_id.try_emplace(find(l), static_cast<int>(arc_id.size()));
    const std::size_t n = d.pd.size();
    if (arc_id.size() != n) throw DiagramError("coloring matrix is not square");
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = d.pd[i];
        m[i][arc_id.at(find(x[1]))] += 2;
        m[i][arc_id.at(find(x[0]))] -= 1;
        m[i][arc_id.at(find(x[2]))] -= 1;
    }
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) minor[i - 1][j - 1] = m[i][j];
    return minor;
}

}  // namespace

unsigned long long determinant_mod(const Diagram& d, unsigned long long prime) {
    validate(d);
    if (d.pd.empty()) return d.free_loops <= 1 ? 1 % prime : 0;
    if (d.free_loops > 0) return 0;
    const auto minor = coloring_minor(d);
    return minor.empty() ? 1 % prime : det_mod(minor, prime);
}

// Computed modulo two large primes; the result is the symmetric residue,
// checked for agreement.
long long determinant(const Diagram& d) {
    constexpr u64 kP1 = 2305843009213693951ULL;  // 2^61 - 1
    constexpr u64 kP2 = 4611686018427387847ULL;
    const auto sym = [](u64 v, u64 p) {
        return v > p / 2 ? -static_cast<long long>(p - v) : static_cast<long long>(v);
    };
    const long long a = sym(determinant_mod(d, kP1), kP1);
    const long long b = sym(determinant_mod(d, kP2), kP2);
    if (a != b) throw DiagramError("determinant exceeds modular range");
    return a < 0 ? -a : a;
}

}  // namespace supercoil

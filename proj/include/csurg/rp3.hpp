#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csurg/contact_kirby.hpp"
#include "csurg/diagram.hpp"
#include "csurg/invariants.hpp"
#include "csurg/reduction.hpp"
#include "csurg/spin_tracking.hpp"

namespace csurg {

/// (Gamma, d3) of a 2-plane field on RP3. Gamma lives in H1(RP3) = Z/2.
struct InvariantPair {
    int gamma = 0;
    Rational d3;

    std::string str() const { return "(" + std::to_string(gamma) + ", " + d3.str() + ")"; }
    friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
    friend std::strong_ordering operator<=>(const InvariantPair& a, const InvariantPair& b) {
        if (a.gamma != b.gamma) return a.gamma <=> b.gamma;
        return a.d3 <=> b.d3;
    }
};

using PairSet = std::set<InvariantPair>;

/// Gamma = 0 iff d3 in Z + 1/4, Gamma = 1 iff d3 in Z + 3/4.
inline bool parity_consistent(const InvariantPair& p) {
    if (p.gamma != 0 && p.gamma != 1) return false;
    return (p.d3 - Rational(1 + 2 * p.gamma, 4)).is_integer();
}

/// d with p = (gamma, d + 1/4) or (gamma, d + 3/4).
inline BigInt integral_part(const InvariantPair& p) {
    return (p.d3 - Rational(1 + 2 * p.gamma, 4)).floor();
}

/// n with r = 2/(2n+1), the smooth surgery coefficients on an unknot giving RP3.
inline std::optional<std::int64_t> recognize_rp3(const Rational& r) {
    if (r.is_zero()) return std::nullopt;
    const Rational q = Rational(2) / r;
    if (!q.is_integer() || q.num() % 2 == 0) return std::nullopt;
    return to_i64((q.num() - 1) / 2);
}

/// Contact coefficient 2/(2n+1) - t of a tb = t unknot giving RP3.
inline Rational rp3_contact_coefficient(std::int64_t t, std::int64_t n) {
    return Rational(2, 2 * n + 1) - Rational(t);
}

inline void check_rp3_parameters(std::int64_t t, std::int64_t n) {
    if (t > -1) throw DomainError("RP3 family needs t <= -1, got t = " + std::to_string(t));
    if (t == -2 && n == -1) throw DomainError("(t, n) = (-2, -1) gives contact coefficient 0");
}

inline int table1_case(std::int64_t t, std::int64_t n) {
    check_rp3_parameters(t, n);
    if (t == -1) {
        if (n >= 0) return 1;
        if (n == -1) return 0;
        if (n == -2) return 2;
        if (n == -3) return 3;
        return 4;
    }
    if (n >= 0) return 5;
    if (n == -1) return t == -3 ? 10 : 11;
    if (n == -2) return t == -2 ? 6 : 7;
    return t == -2 ? 8 : 9;
}

struct Table1Diagram {
    int case_id = 0;
    std::int64_t t = -1;
    std::int64_t n = -1;
    ContactSurgeryDiagram diagram;
};

/// The standard case presentation for (t, n) with the rotation numbers left
/// symbolic: the base unknot's rotation is a block of -t-1 stabilizations
/// and every later knot is a stabilized pushoff of its predecessor.
inline Table1Diagram table1_diagram(std::int64_t t, std::int64_t n) {
    const int id = table1_case(t, n);
    Table1Diagram out{id, t, n, ContactSurgeryDiagram("case" + std::to_string(id))};
    auto& d = out.diagram;
    const std::size_t base = d.add_group(-t - 1);
    d.add({"K1", t, 0, Rational(1), true, t == -1 ? std::vector<std::size_t>{} : std::vector<std::size_t>{base}});

    auto chain = [&](std::int64_t stabilizations, const Rational& coeff) {
        const std::size_t prev = d.size() - 1;
        const std::size_t k = contact_pushoff(d, prev, "K" + std::to_string(d.size() + 1), coeff);
        stabilize_symbolic(d, k, stabilizations);
    };
    auto reciprocal = [](std::int64_t sign, std::int64_t k) { return Rational(sign, k); };

    switch (id) {
        case 0: d.set_coeff(0, Rational(-1)); break;
        case 1: chain(n + 1, reciprocal(-1, 2)); break;
        case 2: d.set_coeff(0, Rational(1, 3)); break;
        case 3:
            d.set_coeff(0, Rational(1, 2));
            chain(2, Rational(-1));
            break;
        case 4:
            d.set_coeff(0, Rational(1, 2));
            chain(1, reciprocal(-1, -n - 3));
            chain(1, Rational(-1));
            break;
        case 5:
            chain(1, reciprocal(-1, -t - 1));
            chain(n, reciprocal(-1, 2));
            break;
        case 6: chain(3, Rational(-1)); break;
        case 7:
            chain(1, reciprocal(-1, -t - 2));
            chain(2, Rational(-1));
            break;
        case 8:
            chain(2, reciprocal(-1, -n - 2));
            chain(1, Rational(-1));
            break;
        case 9:
            chain(1, reciprocal(-1, -t - 2));
            chain(1, reciprocal(-1, -n - 2));
            chain(1, Rational(-1));
            break;
        case 10: break;
        case 11: chain(1, reciprocal(-1, -t - 3)); break;
        default: break;
    }
    return out;
}

/// P(t, n) = -(t(2n+1) - 2) / (t(2n+1) + 2n - 1).
inline Rational cf_P(std::int64_t t, std::int64_t n) {
    return Rational(-(t * (2 * n + 1) - 2), t * (2 * n + 1) + 2 * n - 1);
}

/// Bracket form [r_1 + 1, r_2, ..., r_n] of a negative continued fraction.
inline std::vector<std::int64_t> bracket(const NegCF& cf) {
    auto b = cf.entries;
    b.front() += 1;
    return b;
}

namespace detail {
inline std::vector<std::int64_t> twos(std::int64_t count) {
    return std::vector<std::int64_t>(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)), -2);
}
inline std::vector<std::int64_t> join(std::initializer_list<std::vector<std::int64_t>> parts) {
    std::vector<std::int64_t> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}
}  // namespace detail

/// Expected bracket expansion of P(t, n) (or of (2n+3)/(-2n-5) when t = -1,
/// n <= -4), or nothing outside the regions with a closed pattern.
inline std::optional<std::vector<std::int64_t>> cf_pattern(std::int64_t t, std::int64_t n) {
    using detail::join;
    using detail::twos;
    if (t <= -1 && n >= 0) return join({twos(-t - 1), {-n - 2, -2}});
    if (t <= -2 && n <= -3) return join({twos(-t - 2), {-3}, twos(-n - 3), {-3}});
    if (t <= -2 && n == -2) return join({twos(-t - 2), {-4}});
    if (t < -3 && n == -1) return twos(-t - 3);
    if (t == -1 && n <= -4) return join({{-2}, twos(-n - 4), {-3}});
    return std::nullopt;
}

/// Does the negative continued fraction of P(t, n) follow its closed pattern?
inline bool cf_identities_check(std::int64_t t, std::int64_t n) {
    const auto pattern = cf_pattern(t, n);
    if (!pattern) return false;
    const Rational value = (t == -1 && n <= -4) ? Rational(2 * n + 3, -2 * n - 5) : cf_P(t, n);
    if (value.sign() >= 0) return false;
    const NegCF cf = neg_cf_expand(value);
    if (bracket(cf) != *pattern) return false;
    return neg_cf_eval(cf) == value;
}

// ---------------------------------------------------------------------------
// Closed forms

struct Table2Params {
    std::int64_t n = 0;
    std::int64_t m = -1;
    std::int64_t x = 0;
};

namespace detail {

inline InvariantPair g0(const BigInt& d) { return {0, Rational(d) + Rational(1, 4)}; }
inline InvariantPair g1(const BigInt& d) { return {1, Rational(d) + Rational(3, 4)}; }

inline BigInt case5_g0(std::int64_t n, std::int64_t m, std::int64_t x) {
    const BigInt N = n, M = m, X = x;
    return 2 * M * M * (2 * N + 1) + 4 * N + 2 * M * (4 * N + 1) + 2 * X * (M + 1);
}
inline BigInt case5_g1(std::int64_t n, std::int64_t m, std::int64_t x) {
    const BigInt N = n, M = m, X = x;
    return 2 * M * M * (2 * N + 1) + N * (4 * M + 1) - 1 + X * (2 * M + 1);
}

inline BigInt case7(int gamma, int f, std::int64_t m) {
    const BigInt M = m;
    static constexpr std::int64_t c[2][3][3] = {{{-6, -14, -7}, {-6, -6, -1}, {-6, -10, -3}},
                                                {{-6, -16, -10}, {-6, -8, -2}, {-6, -12, -6}}};
    const auto& k = c[gamma][f];
    return k[0] * M * M + k[1] * M + k[2];
}

/// Case (9) formulas written as a(m) n + b(m), with
/// a = 4m^2 + a1 m + a0 and b = 2m^2 + b1 m + b0.
struct LinearInN {
    std::int64_t a1, a0, b1, b0;
};
inline constexpr LinearInN case9_forms[2][4] = {
    {{2, 0, -2, -1}, {6, 2, -2, -3}, {6, 2, 2, 1}, {10, 6, 6, 5}},
    {{6, 2, 0, -2}, {2, 0, -4, -2}, {10, 6, 4, 2}, {6, 2, 4, 2}},
};
inline BigInt case9(int gamma, int f, std::int64_t n, std::int64_t m) {
    const auto& L = case9_forms[gamma][f];
    const BigInt M = m, N = n;
    return (4 * M * M + L.a1 * M + L.a0) * N + 2 * M * M + L.b1 * M + L.b0;
}

inline BigInt case11(int gamma, std::int64_t m) {
    const BigInt M = m;
    return gamma == 0 ? -2 * M * M - 4 * M - 1 : -2 * M * M - 6 * M - 4;
}

/// m with k = 2m+1 (odd) or k = 2m (even) for k in [t, -1].
inline std::pair<std::int64_t, std::int64_t> odd_range(std::int64_t t) {
    return {-floor_div(BigInt(-(t - 1)), BigInt(2)).convert_to<std::int64_t>() , -1};
}
inline std::pair<std::int64_t, std::int64_t> even_range(std::int64_t t) {
    return {-floor_div(BigInt(-t), BigInt(2)).convert_to<std::int64_t>(), -1};
}

}  // namespace detail

/// Every closed-form pair of one case row at one parameter point.
inline PairSet table2_closed_form(int case_id, const Table2Params& p) {
    using namespace detail;
    const auto need_m = [&](std::int64_t hi) {
        if (p.m > hi) throw DomainError("case (" + std::to_string(case_id) + ") needs m <= " + std::to_string(hi));
    };
    PairSet out;
    switch (case_id) {
        case 0:
        case 1: out = {g0(0)}; break;
        case 2: out = {g1(0)}; break;
        case 3:
        case 4:
        case 10: out = {g0(1), g1(0)}; break;
        case 6: out = {g0(1), g0(-1), g1(0)}; break;
        case 5: {
            if (p.n < 0) throw DomainError("case (5) needs n >= 0");
            if (std::abs(p.x) > p.n || (p.x + p.n) % 2 != 0)
                throw DomainError("case (5) needs |x| <= n and x = n (mod 2)");
            need_m(-1);
            if (p.m < -1) out.insert(g0(case5_g0(p.n, p.m, p.x)));
            out.insert(g1(case5_g1(p.n, p.m, p.x)));
            break;
        }
        case 7:
            need_m(-1);
            for (int g = 0; g < 2; ++g)
                for (int f = 0; f < 3; ++f) out.insert(g == 0 ? g0(case7(g, f, p.m)) : g1(case7(g, f, p.m)));
            break;
        case 8:
            if (p.n > -3) throw DomainError("case (8) needs n <= -3");
            out = {g0(1), g0(2 * p.n + 3), g1(0), g1(2 * p.n + 4)};
            break;
        case 9:
            need_m(-1);
            if (p.n > -3) throw DomainError("case (9) needs n <= -3");
            for (int g = 0; g < 2; ++g)
                for (int f = 0; f < 4; ++f) out.insert(g == 0 ? g0(case9(g, f, p.n, p.m)) : g1(case9(g, f, p.n, p.m)));
            break;
        case 11:
            need_m(-1);
            out = {g0(case11(0, p.m)), g1(case11(1, p.m))};
            break;
        default: throw DomainError("no closed-form row " + std::to_string(case_id));
    }
    return out;
}

/// The closed-form pairs predicted for the diagrams of (t, n): each formula is
/// evaluated over the m coming from t +- r = 2k + 1 with k = 2m+1 or k = 2m
/// as that formula's Gamma value dictates. Case (5) omits its tight k = -1.
inline PairSet table2_for(std::int64_t t, std::int64_t n) {
    using namespace detail;
    const int id = table1_case(t, n);
    const auto [olo, ohi] = odd_range(t);
    const auto [elo, ehi] = even_range(t);
    auto over = [](std::pair<std::int64_t, std::int64_t> r, auto&& f) {
        for (std::int64_t m = r.first; m <= r.second; ++m) f(m);
    };
    const std::pair<std::int64_t, std::int64_t> odd{olo, ohi}, even{elo, ehi};
    PairSet out;
    switch (id) {
        case 5:
            for (std::int64_t x = -n; x <= n; x += 2) {
                over(odd, [&](std::int64_t m) {
                    if (m < -1) out.insert(g0(case5_g0(n, m, x)));
                });
                over(even, [&](std::int64_t m) { out.insert(g1(case5_g1(n, m, x))); });
            }
            break;
        case 7: {
            const std::pair<std::int64_t, std::int64_t> r0[3] = {odd, even, even}, r1[3] = {odd, even, odd};
            for (int f = 0; f < 3; ++f) {
                over(r0[f], [&](std::int64_t m) { out.insert(g0(case7(0, f, m))); });
                over(r1[f], [&](std::int64_t m) { out.insert(g1(case7(1, f, m))); });
            }
            break;
        }
        case 9: {
            const std::pair<std::int64_t, std::int64_t> r0[4] = {even, odd, even, odd},
                                                        r1[4] = {odd, even, odd, even};
            for (int f = 0; f < 4; ++f) {
                over(r0[f], [&](std::int64_t m) { out.insert(g0(case9(0, f, n, m))); });
                over(r1[f], [&](std::int64_t m) { out.insert(g1(case9(1, f, n, m))); });
            }
            break;
        }
        case 11:
            over(even, [&](std::int64_t m) { out.insert(g0(case11(0, m))); });
            over(odd, [&](std::int64_t m) { out.insert(g1(case11(1, m))); });
            break;
        default: out = table2_closed_form(id, {n, -1, 0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Computation from diagrams

/// Supplies the Kirby move script that carries the expanded (+-1) diagram of
/// a case diagram to the standard (-2)-framed unknot.
using ScriptSource =
    std::function<MoveScript(int case_id, std::int64_t t, std::int64_t n, const TopologicalSurgeryDiagram&)>;

/// Shipped scripts: slide every knot of the pushoff chain over its
/// predecessor, then reduce the resulting linear chain greedily.
inline MoveScript fixture_script(int case_id, std::int64_t t, std::int64_t n,
                                 const TopologicalSurgeryDiagram& td) {
    auto s = reduce_to_standard(td, twin_slides(td));
    if (!s)
        throw ConsistencyError("no reduction script for case (" + std::to_string(case_id) + ") at t = " +
                               std::to_string(t) + ", n = " + std::to_string(n));
    return *s;
}

/// Tightness of a resolved case diagram.
inline bool is_tight(int case_id, std::int64_t t, std::int64_t n, const ContactSurgeryDiagram& d) {
    bool tight = case_id == 0 || case_id == 1;
    if (case_id == 5) {
        const std::int64_t r = d[0].rot;
        const std::int64_t s = d[1].rot - r;
        const std::int64_t k = (t + s * r - 1) / 2;
        tight = k == -1;
    }
    const Rational rc = rp3_contact_coefficient(t, n);
    if (tight && rc.sign() > 0 && rc < Rational(-t))
        throw ConsistencyError("tight verdict contradicts 0 < r_c < -t");
    return tight;
}

struct Resolution {
    ContactSurgeryDiagram diagram;  ///< expanded, all coefficients +-1
    InvariantPair pair;
    bool tight = false;
};

struct CaseReport {
    int case_id = 0;
    std::int64_t t = -1;
    std::int64_t n = -1;
    ContactSurgeryDiagram reciprocal;  ///< reciprocal form, symbolic rotations
    ContactSurgeryDiagram expanded;    ///< all coefficients +-1, symbolic rotations
    MoveScript script;
    SpinStructureSub s0;
    std::vector<Resolution> resolutions;

    /// Distinct pairs of the overtwisted resolutions (all of them when
    /// `with_tight`), tight ones entering as (0, 1/4).
    PairSet pairs(bool with_tight = false) const {
        PairSet out;
        for (const auto& r : resolutions)
            if (with_tight || !r.tight) out.insert(r.pair);
        return out;
    }
};

/// Gamma(xi, s0) as 0 or 1 from an H1 class on a Z/2 presentation.
inline int z2_value(const HomologyPresentation& h, const H1Class& c) {
    if (h.group() != "Z/2") throw ConsistencyError("expected H1 = Z/2, got " + h.group());
    return c.coords.at(0) == 0 ? 0 : 1;
}

inline CaseReport case_invariants(std::int64_t t, std::int64_t n, const ScriptSource& scripts = fixture_script) {
    const auto t1 = table1_diagram(t, n);
    CaseReport rep{t1.case_id, t, n, t1.diagram, expand_reciprocal(t1.diagram), {}, {}, {}};
    const auto td = to_topological(rep.expanded);
    rep.script = scripts(t1.case_id, t, n, td);
    rep.s0 = find_s0(td, rep.script);
    for (auto& d : enumerate_rotations(rep.expanded)) {
        const auto g = build_Q(d);
        const auto h = homology(g.Q);
        InvariantPair p{z2_value(h, gamma(g, h, rep.s0)), d3(g)};
        if (!parity_consistent(p))
            throw ConsistencyError("case (" + std::to_string(t1.case_id) + "): pair " + p.str() +
                                   " violates the Gamma/d3 parity relation");
        const bool tight = is_tight(t1.case_id, t, n, d);
        if (tight && !(p == InvariantPair{0, Rational(1, 4)}))
            throw ConsistencyError("tight resolution with pair " + p.str());
        rep.resolutions.push_back({std::move(d), p, tight});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
    bool cs_pm1_eq_1 = false;
    bool cs_recip_eq_1 = false;
    bool cs_int_eq_1 = false;
    bool cs_eq_1 = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

namespace detail {

inline bool quad_hits(std::int64_t a2, std::int64_t a1, std::int64_t a0, const BigInt& d) {
    // Some m <= -1 with a2 m^2 + a1 m + a0 = d, for a2 != 0. Past the vertex
    // the quadratic is monotone in m, so the scan stops once it has moved
    // beyond d on the far side.
    const BigInt A2 = a2, A1 = a1, A0 = a0;
    for (BigInt m = -1;; --m) {
        const BigInt v = A2 * m * m + A1 * m + A0;
        if (v == d) return true;
        const std::int64_t slope = 2 * a2 * static_cast<std::int64_t>(m) + a1;
        const bool past_vertex = a2 > 0 ? slope < 0 : slope > 0;
        if (past_vertex && ((a2 < 0 && v < d) || (a2 > 0 && v > d))) return false;
    }
}

inline bool case5_hits(int gamma, const BigInt& d) {
    if (gamma == 1 && d >= 1 && d % 2 != 0) return true;  // m = -1: values 1, 3, ..., 2n+1
    // m <= -2: value >= 2n(2m+3)(m+1) + 2m(m+1) (Gamma 0), >= 2n(2m+1)(m+1) + 2m^2 - 1
    // (Gamma 1), both increasing in n and in -m.
    for (std::int64_t m = -2;; --m) {
        const BigInt M = m;
        const BigInt floor_m = gamma == 0 ? 2 * M * (M + 1) : 2 * M * M - 1;
        if (floor_m > d) return false;
        const BigInt slope = gamma == 0 ? 2 * (2 * M + 3) * (M + 1) : 2 * (2 * M + 1) * (M + 1);
        for (std::int64_t n = 0; floor_m + slope * n <= d; ++n)
            for (std::int64_t x = -n; x <= n; x += 2)
                if ((gamma == 0 ? case5_g0(n, m, x) : case5_g1(n, m, x)) == d) return true;
    }
}

inline bool case9_hits(int gamma, const BigInt& d) {
    for (int f = 0; f < 4; ++f) {
        const auto& L = case9_forms[gamma][f];
        for (std::int64_t m = -1;; --m) {
            const BigInt M = m;
            const BigInt a = 4 * M * M + L.a1 * M + L.a0;
            const BigInt b = 2 * M * M + L.b1 * M + L.b0;
            if (a == 0) {
                if (b == d) return true;
                continue;
            }
            // a > 0 for m <= -1 here; the largest value is at n = -3.
            const BigInt top = -3 * a + b;
            if (top >= d && (d - b) % a == 0) return true;
            // top = -10m^2 + (b1 - 3 a1) m + (b0 - 3 a0) decreases once m is
            // below its vertex, which lies at m >= -3 for every formula.
            if (m <= -3 && top < d) break;
        }
    }
    return false;
}

}  // namespace detail

/// Does (gamma, d3) occur in closed-form rows (2)-(11)?
inline bool table2_contains(const InvariantPair& p) {
    using namespace detail;
    if (!parity_consistent(p)) return false;
    const BigInt d = integral_part(p);
    const int g = p.gamma;
    if (g == 0 && (d == 1 || d == -1)) return true;  // rows 3, 4, 6, 8, 10
    if (g == 1 && d == 0) return true;               // rows 2, 3, 4, 6, 8, 10
    if (g == 0 && d <= -3 && d % 2 != 0) return true;    // row 8: 2n + 3, n <= -3
    if (g == 1 && d <= -2 && d % 2 == 0) return true;    // row 8: 2n + 4, n <= -3
    if (case5_hits(g, d)) return true;
    static constexpr std::int64_t c7[2][3][3] = {{{-6, -14, -7}, {-6, -6, -1}, {-6, -10, -3}},
                                                 {{-6, -16, -10}, {-6, -8, -2}, {-6, -12, -6}}};
    for (const auto& f : c7[g])
        if (quad_hits(f[0], f[1], f[2], d)) return true;
    if (case9_hits(g, d)) return true;
    return g == 0 ? quad_hits(-2, -4, -1, d) : quad_hits(-2, -6, -4, d);
}

/// Flags cs_{+-1} = 1, cs_{1/Z} = 1, cs_Z = 1, cs = 1 for a structure on RP3.
inline Classification classify(const InvariantPair& p, bool tight = false) {
    if (!parity_consistent(p))
        throw DomainError("pair " + p.str() + " is not realized by any 2-plane field on RP3");
    if (tight) {
        if (!(p == InvariantPair{0, Rational(1, 4)}))
            throw DomainError("the tight structure on RP3 has invariants (0, 1/4), not " + p.str());
        return {true, true, true, true};
    }
    Classification c;
    const bool exceptional = p == InvariantPair{0, Rational(5, 4)} || p == InvariantPair{1, Rational(3, 4)};
    c.cs_pm1_eq_1 = c.cs_recip_eq_1 = exceptional;
    const BigInt d = integral_part(p);
    c.cs_int_eq_1 = exceptional || (p.gamma == 0 ? detail::quad_hits(-2, -4, -1, d) || detail::quad_hits(2, -2, 0, d)
                                                 : detail::quad_hits(-2, -6, -4, d) || detail::quad_hits(2, 0, -1, d));
    c.cs_eq_1 = table2_contains(p);
    return c;
}

// ---------------------------------------------------------------------------
// Single-knot census

struct CensusEntry {
    std::int64_t tb = -1;
    std::int64_t rot_abs = 0;
    Rational coeff;
    InvariantPair pair;
    bool tight = false;
    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Every Legendrian unknot with tb >= min_tb and contact coefficient +-1 or
/// 1/k (2 <= |k| <= max_k) that yields RP3, grouped by |rot|.
inline std::vector<CensusEntry> single_knot_census(std::int64_t min_tb = -12, std::int64_t max_k = 12) {
    std::vector<Rational> coeffs{Rational(-1), Rational(1)};
    for (std::int64_t k = 2; k <= max_k; ++k) {
        coeffs.emplace_back(1, k);
        coeffs.emplace_back(-1, k);
    }
    std::vector<CensusEntry> out;
    for (std::int64_t tb = -1; tb >= min_tb; --tb)
        for (const auto& c : coeffs) {
            const auto n = recognize_rp3(Rational(tb) + c);
            if (!n) continue;
            const int id = table1_case(tb, *n);
            for (auto rot : legendrian_unknots(tb)) {
                if (rot < 0) continue;
                std::optional<InvariantPair> seen;
                for (auto signed_rot : {rot, -rot}) {
                    ContactSurgeryDiagram d("census");
                    d.add({"K", tb, signed_rot, c, true, {}});
                    const auto ex = expand_reciprocal(d);
                    const auto td = to_topological(ex);
                    const auto s0 = find_s0(td, fixture_script(id, tb, *n, td));
                    const auto g = build_Q(ex);
                    const auto h = homology(g.Q);
                    const InvariantPair p{z2_value(h, gamma(g, h, s0)), d3(g)};
                    if (seen && !(*seen == p)) throw ConsistencyError("census: rotation sign changes the invariants");
                    seen = p;
                }
                out.push_back({tb, rot, c, *seen, id == 0 || id == 1});
            }
        }
    return out;
}

}  // namespace csurg

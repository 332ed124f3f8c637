#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csurg/contact_kirby.hpp"
#include "csurg/diagram.hpp"
#include "csurg/smith.hpp"

namespace csurg {

/// Q with Q_ii = p_i, Q_ij = q_j l_ij for a diagram of contact (+-1/n_i)
/// surgeries, where p_i / q_i = tb_i +- 1/n_i and q_i = n_i.
struct GeneralizedLinkingMatrix {
    IntMatrix Q;
    RatMatrix S;  ///< symmetric, Q = S diag(q)
    std::vector<std::int64_t> n;
    std::vector<int> sign;
    std::vector<std::int64_t> rot;

    std::size_t size() const noexcept { return n.size(); }
};

inline GeneralizedLinkingMatrix build_Q(const ContactSurgeryDiagram& d) {
    const std::size_t k = d.size();
    GeneralizedLinkingMatrix g{IntMatrix(k, k), RatMatrix(k, k), {}, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = d[i];
        if (!is_reciprocal(c.coeff))
            throw DomainError("component '" + c.name + "' has coefficient " + c.coeff.str() +
                              "; rewrite it with rationalize() first");
        g.n.push_back(to_i64(c.coeff.den()));
        g.sign.push_back(c.coeff.sign());
        g.rot.push_back(c.rot);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Rational pq = Rational(d[i].tb) + d[i].coeff;
        g.S(i, i) = pq;
        g.Q(i, i) = pq.num();
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            g.S(i, j) = d.lk(i, j);
            g.Q(i, j) = BigInt(g.n[j]) * d.lk(i, j);
        }
    }
    return g;
}

inline long long signature_exact(const GeneralizedLinkingMatrix& g) {
    return inertia(g.S).signature();
}

/// An element of H1 in the coordinates of a fixed Smith presentation: one
/// entry per non-unit invariant factor, reduced modulo it (free factors kept).
struct H1Class {
    std::vector<BigInt> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
    std::string str() const {
        if (coords.size() == 1) return coords[0].str();
        if (coords.empty()) return "0";
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + coords[i].str();
        return s + ")";
    }
    friend bool operator==(const H1Class&, const H1Class&) = default;
    friend auto operator<=>(const H1Class& a, const H1Class& b) { return a.str() <=> b.str(); }
};

/// H1 = Z^k / (row space of Q). With U Q^T V = D, a meridian vector w
/// maps to the class with coordinates (U w)_i mod d_i.
struct HomologyPresentation {
    std::vector<BigInt> invariant_factors;  ///< full diagonal, 0 = free
    IntMatrix basis_transform;              ///< U

    /// Indices of factors other than 1.
    std::vector<std::size_t> nontrivial() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i)
            if (invariant_factors[i] != 1) out.push_back(i);
        return out;
    }

    /// |H1|, or 0 when H1 is infinite.
    BigInt order() const {
        BigInt o = 1;
        for (const auto& f : invariant_factors) o *= f;
        return o;
    }

    /// "0", "Z/2", "Z/2 + Z", ...
    std::string group() const {
        std::string s;
        for (auto i : nontrivial()) {
            if (!s.empty()) s += " + ";
            s += invariant_factors[i] == 0 ? "Z" : "Z/" + invariant_factors[i].str();
        }
        return s.empty() ? "0" : s;
    }

    H1Class class_of(const std::vector<BigInt>& w) const {
        const auto image = basis_transform * w;
        H1Class c;
        for (auto i : nontrivial()) {
            const auto& f = invariant_factors[i];
            c.coords.push_back(f == 0 ? image[i] : floor_mod(image[i], f));
        }
        return c;
    }
};

inline HomologyPresentation homology(const IntMatrix& Q) {
    auto s = smith_normal_form(Q.transpose());
    std::vector<BigInt> factors = s.diagonal;
    factors.resize(Q.rows(), BigInt(0));
    return {std::move(factors), std::move(s.U)};
}

/// Raised when Qb = rot has no rational solution; carries y with y^T Q = 0
/// and y . rot != 0.
class TorsionError : public DomainError {
public:
    TorsionError(std::vector<Rational> witness, const std::string& what)
        : DomainError(what), witness_(std::move(witness)) {}
    const std::vector<Rational>& witness() const noexcept { return witness_; }

private:
    std::vector<Rational> witness_;
};

inline Rational d3(const GeneralizedLinkingMatrix& g) {
    std::vector<Rational> r(g.rot.begin(), g.rot.end());
    const auto solved = solve(to_rational(g.Q), r);
    if (!solved.solution) {
        std::string w;
        for (std::size_t i = 0; i < solved.witness.size(); ++i) w += (i ? "," : "") + solved.witness[i].str();
        throw TorsionError(solved.witness, "d3 undefined (c1 not torsion): witness y = (" + w + ")");
    }
    const auto& b = *solved.solution;
    Rational sum;
    for (std::size_t i = 0; i < g.size(); ++i)
        sum += Rational(g.n[i]) * Rational(g.rot[i]) * b[i] + Rational((3 - g.n[i]) * g.sign[i]);
    return sum / 4 - Rational(3 * signature_exact(g), 4);
}

inline Rational d3(const ContactSurgeryDiagram& d) {
    if (!d.resolved()) throw DomainError("d3 needs resolved rotation numbers");
    return d3(build_Q(d));
}

/// A component subset; members[i] says whether component i belongs.
struct SpinStructureSub {
    std::vector<bool> members;

    std::size_t count() const {
        std::size_t c = 0;
        for (bool b : members) c += b;
        return c;
    }
    friend bool operator==(const SpinStructureSub&, const SpinStructureSub&) = default;
    friend auto operator<=>(const SpinStructureSub& a, const SpinStructureSub& b) {
        return a.members <=> b.members;
    }
};

/// "{}" or "{A,B}" using component names.
template <class Names>
std::string format_sublink(const SpinStructureSub& J, const Names& names) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < J.members.size(); ++i)
        if (J.members[i]) {
            s += (first ? "" : ",") + names[i].name;
            first = false;
        }
    return s + "}";
}

/// Condition sum_{j in J} L_ij = L_ii (mod 2) for every i, framings on the diagonal.
inline bool is_characteristic(const LinkMatrix& L, const SpinStructureSub& J) {
    for (std::size_t i = 0; i < L.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < L.cols(); ++j)
            if (J.members[j]) s += L(i, j);
        if ((s - L(i, i)) % 2 != 0) return false;
    }
    return true;
}

/// All solutions of L x = diag(L) over F2, sorted.
inline std::vector<SpinStructureSub> characteristic_sublinks(const LinkMatrix& L) {
    const std::size_t k = L.rows();
    std::vector<std::vector<char>> a(k, std::vector<char>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = static_cast<char>(L(i, j) & 1);
        a[i][k] = static_cast<char>(L(i, i) & 1);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t p = row;
        while (p < k && !a[p][col]) ++p;
        if (p == k) continue;
        std::swap(a[row], a[p]);
        for (std::size_t r = 0; r < k; ++r)
            if (r != row && a[r][col])
                for (std::size_t c = col; c <= k; ++c) a[r][c] ^= a[row][c];
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < k; ++r)
        if (a[r][k]) return {};  // unreachable for symmetric L, kept for safety

    std::vector<bool> is_pivot(k, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.size() >= 8 * sizeof(std::size_t) - 1)
        throw DomainError("too many spin structures to enumerate");

    std::vector<SpinStructureSub> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_cols.size()); ++mask) {
        SpinStructureSub J{std::vector<bool>(k, false)};
        for (std::size_t f = 0; f < free_cols.size(); ++f) J.members[free_cols[f]] = (mask >> f) & 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            char v = a[i][k];
            for (auto fc : free_cols)
                if (a[i][fc] && J.members[fc]) v ^= 1;
            J.members[pivots[i]] = v;
        }
        out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SpinStructureSub> characteristic_sublinks(const TopologicalSurgeryDiagram& td) {
    return characteristic_sublinks(td.framed_matrix());
}

/// Gamma(xi, s) for a diagram of contact (+-1) surgeries: the class of v/2
/// with v_i = rot_i + sum_{j in J} Q_ji.
inline H1Class gamma(const GeneralizedLinkingMatrix& g, const HomologyPresentation& h,
                     const SpinStructureSub& J) {
    for (auto n : g.n)
        if (n != 1) throw DomainError("gamma needs contact (+-1) coefficients; expand first");
    std::vector<BigInt> half(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        BigInt v = g.rot[i];
        for (std::size_t j = 0; j < g.size(); ++j)
            if (J.members[j]) v += g.Q(j, i);
        if (v % 2 != 0)
            throw ConsistencyError("gamma: odd entry " + v.str() + " at component " + std::to_string(i) +
                                   " (sublink not characteristic?)");
        half[i] = v / 2;
    }
    return h.class_of(half);
}

inline H1Class gamma(const ContactSurgeryDiagram& d, const SpinStructureSub& J) {
    if (!d.resolved()) throw DomainError("gamma needs resolved rotation numbers");
    const auto g = build_Q(d);
    return gamma(g, homology(g.Q), J);
}

inline std::vector<std::pair<SpinStructureSub, H1Class>> gamma_all(const ContactSurgeryDiagram& d) {
    if (!d.resolved()) throw DomainError("gamma needs resolved rotation numbers");
    const auto g = build_Q(d);
    const auto h = homology(g.Q);
    std::vector<std::pair<SpinStructureSub, H1Class>> out;
    for (auto& J : characteristic_sublinks(to_topological(d))) {
        auto c = gamma(g, h, J);
        out.emplace_back(std::move(J), std::move(c));
    }
    return out;
}

}  // namespace csurg

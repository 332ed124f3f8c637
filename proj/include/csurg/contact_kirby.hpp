#pragma once

#include <string>
#include <vector>

#include "csurg/diagram.hpp"
#include "csurg/neg_cf.hpp"

namespace csurg {

/// True for coefficients of the form +-1/n, n >= 1.
inline bool is_reciprocal(const Rational& r) { return r.num() == 1 || r.num() == -1; }

/// First unused name of the form base.2, base.3, ...
inline std::string fresh_name(const ContactSurgeryDiagram& d, const std::string& base) {
    for (int k = 2;; ++k) {
        std::string n = base + "." + std::to_string(k);
        if (!d.find(n)) return n;
    }
}

namespace detail {

/// Move the trailing `count` components so they sit directly after `after`.
inline ContactSurgeryDiagram place_after(const ContactSurgeryDiagram& d, std::size_t after,
                                         std::size_t count) {
    std::vector<std::size_t> perm;
    const std::size_t first_new = d.size() - count;
    for (std::size_t i = 0; i < first_new; ++i) {
        perm.push_back(i);
        if (i == after)
            for (std::size_t k = first_new; k < d.size(); ++k) perm.push_back(k);
    }
    return reorder(d, perm);
}

}  // namespace detail

/// Replace each +-1/n component (n >= 2) by n Reeb pushoffs with coefficient +-1.
inline ContactSurgeryDiagram expand_reciprocal(ContactSurgeryDiagram d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Rational r = d[i].coeff;
        if (!is_reciprocal(r)) throw DomainError("component '" + d[i].name + "' has coefficient " + r.str() + ", not of the form +-1/n");
        const auto n = to_i64(r.den());
        if (n == 1) continue;
        const Rational unit(r.sign());
        d.set_coeff(i, unit);
        for (std::int64_t k = 1; k < n; ++k) contact_pushoff(d, i, fresh_name(d, d[i].name), unit);
        d = detail::place_after(d, i, static_cast<std::size_t>(n - 1));
        i += static_cast<std::size_t>(n - 1);
    }
    return d;
}

/// Replace a negative-coefficient component by its chain of (-1) surgeries:
/// the i-th knot is a pushoff of the (i-1)-th, stabilized |2 + r_i| times.
inline ContactSurgeryDiagram negative_expansion(ContactSurgeryDiagram d, std::size_t c) {
    const Rational r = d[c].coeff;
    if (r.sign() >= 0) throw DomainError("negative_expansion needs a negative coefficient, got " + r.str());
    const NegCF cf = neg_cf_expand(r);
    d.set_coeff(c, Rational(-1));
    stabilize_symbolic(d, c, -2 - cf.entries[0]);
    std::size_t prev = c;
    for (std::size_t i = 1; i < cf.entries.size(); ++i) {
        const std::size_t k = contact_pushoff(d, prev, fresh_name(d, d[c].name), Rational(-1));
        stabilize_symbolic(d, k, -2 - cf.entries[i]);
        prev = k;
    }
    return detail::place_after(d, c, cf.entries.size() - 1);
}

/// K(r) = K(1/k) + pushoff(1/(1/r - k)) with the least k >= 1 making the
/// second coefficient negative.
inline ContactSurgeryDiagram translate_positive(ContactSurgeryDiagram d, std::size_t c) {
    const Rational r = d[c].coeff;
    if (r.sign() <= 0) throw DomainError("translate_positive needs a positive coefficient, got " + r.str());
    if (is_reciprocal(r)) throw DomainError("coefficient " + r.str() + " is already reciprocal");
    const Rational inv = r.reciprocal();
    const BigInt k = inv.floor() + 1;
    d.set_coeff(c, Rational(BigInt(1), k));
    contact_pushoff(d, c, fresh_name(d, d[c].name), (inv - Rational(k)).reciprocal());
    return detail::place_after(d, c, 1);
}

/// Rewrite every component to contact (+-1) surgeries.
inline ContactSurgeryDiagram rationalize(ContactSurgeryDiagram d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i].coeff.sign() > 0 && !is_reciprocal(d[i].coeff)) {
            d = translate_positive(std::move(d), i);
            ++i;
        }
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i].coeff.sign() < 0 && !is_reciprocal(d[i].coeff)) {
            const std::size_t before = d.size();
            d = negative_expansion(std::move(d), i);
            i += d.size() - before;
        }
    return expand_reciprocal(std::move(d));
}

/// Offsets {-s, -s+2, ..., s} available to a block of s stabilizations.
inline std::vector<std::int64_t> rotation_offsets(std::int64_t s) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = -s; x <= s; x += 2) out.push_back(x);
    return out;
}

/// Every resolution of the symbolic stabilization groups, in lexicographic
/// order of the offset vector.
inline std::vector<ContactSurgeryDiagram> enumerate_rotations(const ContactSurgeryDiagram& d) {
    const auto& sizes = d.group_sizes();
    std::vector<std::vector<std::int64_t>> choices;
    for (auto s : sizes) choices.push_back(rotation_offsets(s));
    std::vector<ContactSurgeryDiagram> out;
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (;;) {
        std::vector<std::int64_t> offsets(sizes.size());
        for (std::size_t g = 0; g < sizes.size(); ++g) offsets[g] = choices[g][idx[g]];
        out.push_back(resolve(d, offsets));
        std::size_t g = sizes.size();
        while (g > 0) {
            --g;
            if (++idx[g] < choices[g].size()) break;
            idx[g] = 0;
            if (g == 0) return out;
        }
        if (sizes.empty()) return out;
    }
}

/// True when component j is a Reeb pushoff of component i.
inline bool is_pushoff_pair(const ContactSurgeryDiagram& d, std::size_t i, std::size_t j) {
    const auto& a = d[i];
    const auto& b = d[j];
    if (a.tb != b.tb || a.rot != b.rot || a.groups != b.groups || a.is_unknot != b.is_unknot) return false;
    if (d.lk(i, j) != a.tb) return false;
    for (std::size_t x = 0; x < d.size(); ++x)
        if (x != i && x != j && d.lk(i, x) != d.lk(j, x)) return false;
    return true;
}

/// Remove pairs K(1/n), K'(-1/n) with K' a pushoff of K until none remain.
inline ContactSurgeryDiagram cancel_pairs(ContactSurgeryDiagram d) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < d.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < d.size() && !changed; ++j) {
                const Rational& a = d[i].coeff;
                if (!is_reciprocal(a) || !(d[j].coeff == -a) || !is_pushoff_pair(d, i, j)) continue;
                d.remove(j);
                d.remove(i);
                changed = true;
            }
    }
    return d;
}

}  // namespace csurg

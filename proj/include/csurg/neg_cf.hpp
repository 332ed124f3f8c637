#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// Negative continued fraction (r_1, ..., r_n), all r_i <= -2, read as
///   r_1 + 1 - 1/(r_2 - 1/(... - 1/r_n)).
/// The leading +1 shift makes |2 + r_i| the stabilization count of the
/// i-th knot in the chain replacing a negative contact surgery.
struct NegCF {
    std::vector<std::int64_t> entries;

    friend bool operator==(const NegCF&, const NegCF&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const NegCF& cf) {
    os << '[';
    for (std::size_t i = 0; i < cf.entries.size(); ++i) os << (i ? ", " : "") << cf.entries[i];
    return os << ']';
}

inline NegCF neg_cf_expand(const Rational& r) {
    if (r.sign() >= 0) throw DomainError("negative continued fraction needs r < 0, got " + r.str());
    NegCF cf;
    const BigInt a = r.floor();
    cf.entries.push_back(to_i64(a - 1));
    Rational rest = r - Rational(a);
    while (!rest.is_zero()) {
        // rest in (0,1); the tail x = -1/rest is < -1 and expands in the usual way.
        const Rational x = -rest.reciprocal();
        const BigInt b = x.floor();
        cf.entries.push_back(to_i64(b));
        rest = x - Rational(b);
    }
    return cf;
}

inline Rational neg_cf_eval(const NegCF& cf) {
    if (cf.entries.empty()) throw DomainError("empty negative continued fraction");
    for (auto e : cf.entries)
        if (e > -2) throw DomainError("continued fraction entry " + std::to_string(e) + " exceeds -2");
    Rational tail;
    bool have_tail = false;
    for (std::size_t i = cf.entries.size(); i-- > 1;) {
        tail = have_tail ? Rational(cf.entries[i]) - tail.reciprocal() : Rational(cf.entries[i]);
        have_tail = true;
    }
    Rational head(cf.entries.front() + 1);
    return have_tail ? head - tail.reciprocal() : head;
}

}  // namespace csurg

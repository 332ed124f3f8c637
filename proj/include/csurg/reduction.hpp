#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "csurg/spin_tracking.hpp"

namespace csurg {

namespace detail {

inline std::size_t degree(const TopologicalSurgeryDiagram& td, std::size_t u) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < td.size(); ++j)
        if (j != u && td.lk(u, j) != 0) ++deg;
    return deg;
}

inline bool links_at_most_once(const TopologicalSurgeryDiagram& td, std::size_t u) {
    for (std::size_t j = 0; j < td.size(); ++j)
        if (j != u && std::abs(td.lk(u, j)) > 1) return false;
    return true;
}

class Reducer {
public:
    explicit Reducer(const TopologicalSurgeryDiagram& td)
        : state_{td, characteristic_sublinks(td).front()} {}

    void push(Move m) {
        state_ = apply_move(std::move(state_), m);
        script_.push_back(std::move(m));
    }

    const TopologicalSurgeryDiagram& diagram() const { return state_.diagram; }
    const std::string& name(std::size_t i) const { return state_.diagram.components[i].name; }
    MoveScript& script() { return script_; }

    bool step() {
        const auto& td = diagram();
        if (is_standard_rp3(td)) return false;
        if (td.size() == 1 && td.components[0].is_unknot && td.components[0].framing == Rational(2)) {
            const std::string u = name(0);
            push(BlowUp{-1, {{u, 1}}, {}});
            push(BlowDown{u});
            return true;
        }
        return blow_down_light() || cancel_zero_leaf() || twist_zero_interior();
    }

private:
    /// Blow down a (+-1)-framed unknot linking everything at most once,
    /// preferring the fewest neighbours.
    bool blow_down_light() {
        const auto& td = diagram();
        std::optional<std::size_t> best;
        for (std::size_t u = 0; u < td.size(); ++u) {
            const auto& c = td.components[u];
            if (!c.is_unknot || !(c.framing == Rational(1) || c.framing == Rational(-1))) continue;
            if (!links_at_most_once(td, u) || degree(td, u) > 2) continue;
            if (!best || degree(td, u) < degree(td, *best)) best = u;
        }
        if (!best) return false;
        push(BlowDown{name(*best)});
        return true;
    }

    /// A 0-framed unknot Z meeting only a, once: unlink a's other neighbours
    /// by sliding them over Z, twist a to framing +1, then blow down a and Z.
    bool cancel_zero_leaf() {
        const auto& td = diagram();
        for (std::size_t z = 0; z < td.size(); ++z) {
            const auto& cz = td.components[z];
            if (!cz.is_unknot || !cz.framing.is_zero() || degree(td, z) != 1) continue;
            std::size_t a = 0;
            while (a == z || td.lk(a, z) == 0) ++a;
            if (std::abs(td.lk(a, z)) != 1 || !td.components[a].is_unknot) continue;
            const std::string zn = name(z), an = name(a);
            const std::int64_t laz = td.lk(a, z);
            for (std::size_t b = 0; b < diagram().size(); ++b) {
                if (b == a || b == z) continue;
                while (diagram().lk(b, diagram().find(an).value()) != 0) {
                    const std::int64_t lba = diagram().lk(b, diagram().find(an).value());
                    push(Slide{name(b), zn, static_cast<int>(-(lba > 0 ? 1 : -1) * laz)});
                }
            }
            const std::size_t ai = diagram().find(an).value();
            const std::int64_t fa = diagram().framing(ai);
            if (fa != 1) push(Rolfsen{zn, 1 - fa});
            push(BlowDown{an});
            push(BlowDown{zn});
            return true;
        }
        return false;
    }

    /// A 0-framed unknot with two neighbours a, b (each linked once): twist
    /// so that a gets framing +-1 and can be blown down next round.
    bool twist_zero_interior() {
        const auto& td = diagram();
        for (std::size_t z = 0; z < td.size(); ++z) {
            const auto& cz = td.components[z];
            if (!cz.is_unknot || !cz.framing.is_zero() || degree(td, z) != 2 || !links_at_most_once(td, z))
                continue;
            for (std::size_t a = 0; a < td.size(); ++a) {
                if (a == z || td.lk(a, z) == 0 || !td.components[a].is_unknot) continue;
                const std::int64_t fa = td.framing(a);
                for (std::int64_t target : {-1, 1}) {
                    if (target == fa) continue;
                    push(Rolfsen{name(z), target - fa});
                    return true;
                }
            }
        }
        return false;
    }

    SpinState state_;
    MoveScript script_;
};

}  // namespace detail

/// Slide each component over its predecessor (sign -1), last to second.
/// On a chain of successive pushoffs this leaves only consecutive
/// components linked.
inline MoveScript twin_slides(const TopologicalSurgeryDiagram& td) {
    MoveScript s;
    for (std::size_t k = td.size(); k-- > 1;)
        s.push_back(Slide{td.components[k].name, td.components[k - 1].name, -1});
    return s;
}

/// Greedy reduction to the standard RP3 diagram: blow down light (+-1)
/// unknots and cancel 0-framed leaves. Returns nothing when it gets stuck.
inline std::optional<MoveScript> reduce_to_standard(const TopologicalSurgeryDiagram& td,
                                                    const MoveScript& prefix = {},
                                                    std::size_t max_steps = 10000) {
    detail::Reducer r(td);
    for (const auto& m : prefix) r.push(m);
    for (std::size_t i = 0; i < max_steps && r.step(); ++i) {
    }
    if (!is_standard_rp3(r.diagram())) return std::nullopt;
    return r.script();
}

}  // namespace csurg

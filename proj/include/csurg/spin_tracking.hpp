#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "csurg/diagram.hpp"
#include "csurg/invariants.hpp"

namespace csurg {

/// Slide component `i` over component `k`; sign picks the band orientation.
struct Slide {
    std::string i;
    std::string k;
    int sign = 1;
    friend bool operator==(const Slide&, const Slide&) = default;
};

/// Remove a (+-1)-framed unknot.
struct BlowDown {
    std::string target;
    friend bool operator==(const BlowDown&, const BlowDown&) = default;
};

/// Add a (sign)-framed unknot with the given linking numbers. An empty
/// name is replaced by the first free name e1, e2, ...
struct BlowUp {
    int sign = 1;
    std::vector<std::pair<std::string, std::int64_t>> lk;
    std::string name;
    friend bool operator==(const BlowUp&, const BlowUp&) = default;
};

/// n-fold twist along a 0-framed unknot.
struct Rolfsen {
    std::string target;
    std::int64_t n = 1;
    friend bool operator==(const Rolfsen&, const Rolfsen&) = default;
};

using Move = std::variant<Slide, BlowDown, BlowUp, Rolfsen>;
using MoveScript = std::vector<Move>;

struct SpinState {
    TopologicalSurgeryDiagram diagram;
    SpinStructureSub J;
};

namespace detail {

inline std::size_t component_index(const TopologicalSurgeryDiagram& td, const std::string& name,
                                   const char* move) {
    if (auto i = td.find(name)) return *i;
    throw DomainError(std::string(move) + ": no component named '" + name + "'");
}

inline void set_framing(TopologicalSurgeryDiagram& td, std::size_t i, std::int64_t f) {
    td.components[i].framing = Rational(f);
}

inline void degrade_flags(TopologicalSurgeryDiagram& td, std::size_t u, const LinkMatrix& before) {
    for (std::size_t i = 0; i < td.size(); ++i)
        if (i != u && std::abs(before(i, u)) > 1) td.components[i].is_unknot = false;
}

inline void drop(SpinState& s, std::size_t u) {
    s.diagram.components.erase(s.diagram.components.begin() + static_cast<std::ptrdiff_t>(u));
    s.diagram.lk = s.diagram.lk.without(u);
    s.J.members.erase(s.J.members.begin() + static_cast<std::ptrdiff_t>(u));
}

inline void write_back(TopologicalSurgeryDiagram& td, const LinkMatrix& L) {
    for (std::size_t i = 0; i < td.size(); ++i) {
        set_framing(td, i, L(i, i));
        for (std::size_t j = 0; j < td.size(); ++j) td.lk(i, j) = i == j ? 0 : L(i, j);
    }
}

inline void apply(SpinState& s, const Slide& m) {
    auto& td = s.diagram;
    const std::size_t i = component_index(td, m.i, "slide");
    const std::size_t k = component_index(td, m.k, "slide");
    if (i == k) throw DomainError("slide: cannot slide '" + m.i + "' over itself");
    if (m.sign != 1 && m.sign != -1) throw DomainError("slide: sign must be +1 or -1");
    const LinkMatrix L = td.framed_matrix();
    LinkMatrix N = L;
    N(i, i) = L(i, i) + L(k, k) + 2 * m.sign * L(i, k);
    for (std::size_t j = 0; j < td.size(); ++j) {
        if (j == i) continue;
        N(i, j) = L(i, j) + m.sign * L(k, j);
        N(j, i) = N(i, j);
    }
    write_back(td, N);
    auto& ci = td.components[i];
    ci.is_unknot = ci.is_unknot && td.components[k].is_unknot && std::abs(N(i, k)) <= 1;
    if (s.J.members[i]) s.J.members[k] = !s.J.members[k];
}

inline void apply(SpinState& s, const BlowDown& m) {
    auto& td = s.diagram;
    const std::size_t u = component_index(td, m.target, "blowdown");
    const auto& cu = td.components[u];
    if (!cu.is_unknot) throw DomainError("blowdown: '" + m.target + "' is not known to be an unknot");
    if (!(cu.framing == Rational(1) || cu.framing == Rational(-1)))
        throw DomainError("blowdown: '" + m.target + "' has framing " + cu.framing.str() + ", need +-1");
    const std::int64_t e = cu.framing.sign();
    const LinkMatrix L = td.framed_matrix();
    LinkMatrix N = L;
    for (std::size_t i = 0; i < td.size(); ++i)
        for (std::size_t j = 0; j < td.size(); ++j) N(i, j) = L(i, j) - e * L(i, u) * L(j, u);
    write_back(td, N);
    degrade_flags(td, u, L);
    drop(s, u);
}

inline std::string fresh_blowup_name(const TopologicalSurgeryDiagram& td) {
    for (int k = 1;; ++k) {
        std::string n = "e" + std::to_string(k);
        if (!td.find(n)) return n;
    }
}

inline void apply(SpinState& s, const BlowUp& m) {
    auto& td = s.diagram;
    if (m.sign != 1 && m.sign != -1) throw DomainError("blowup: sign must be +1 or -1");
    const std::string name = m.name.empty() ? fresh_blowup_name(td) : m.name;
    if (td.find(name)) throw DomainError("blowup: name '" + name + "' already in use");
    const std::size_t k = td.size();
    std::vector<std::int64_t> row(k, 0);
    for (const auto& [id, v] : m.lk) {
        const std::size_t j = component_index(td, id, "blowup");
        row[j] = v;
    }
    const LinkMatrix L = td.framed_matrix();
    LinkMatrix N(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) N(i, j) = L(i, j) + m.sign * row[i] * row[j];
        N(i, k) = N(k, i) = row[i];
    }
    N(k, k) = m.sign;
    std::int64_t through = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (s.J.members[j]) through += row[j];
    td.components.push_back({name, true, Rational(m.sign)});
    td.lk = LinkMatrix(k + 1, k + 1);
    write_back(td, N);
    degrade_flags(td, k, N);
    s.J.members.push_back(through % 2 == 0);
}

inline void apply(SpinState& s, const Rolfsen& m) {
    auto& td = s.diagram;
    const std::size_t u = component_index(td, m.target, "rolfsen");
    const auto& cu = td.components[u];
    if (!cu.is_unknot) throw DomainError("rolfsen: '" + m.target + "' is not known to be an unknot");
    if (!cu.framing.is_zero())
        throw DomainError("rolfsen: '" + m.target + "' has framing " + cu.framing.str() + ", need 0");
    const LinkMatrix L = td.framed_matrix();
    LinkMatrix N = L;
    for (std::size_t i = 0; i < td.size(); ++i)
        for (std::size_t j = 0; j < td.size(); ++j)
            if (i != u && j != u) N(i, j) = L(i, j) + m.n * L(i, u) * L(j, u);
    write_back(td, N);
    degrade_flags(td, u, L);
    std::int64_t through = 1;
    for (std::size_t j = 0; j < td.size(); ++j)
        if (j != u && s.J.members[j]) through += L(u, j);
    if ((m.n * through) % 2 != 0) s.J.members[u] = !s.J.members[u];
}

inline std::string describe(const Move& m) {
    struct {
        std::string operator()(const Slide& x) const { return "slide " + x.i + " over " + x.k; }
        std::string operator()(const BlowDown& x) const { return "blowdown " + x.target; }
        std::string operator()(const BlowUp& x) const { return "blowup " + (x.name.empty() ? "(new)" : x.name); }
        std::string operator()(const Rolfsen& x) const { return "rolfsen " + x.target; }
    } v;
    return std::visit(v, m);
}

}  // namespace detail

/// Apply one Kirby move to an integer diagram and transport the
/// characteristic sublink J. The characteristic condition is re-checked on
/// the result; a failure there is a ConsistencyError.
inline SpinState apply_move(SpinState s, const Move& m) {
    if (!s.diagram.integral()) throw DomainError(detail::describe(m) + ": diagram has non-integer framings");
    if (s.J.members.size() != s.diagram.size()) throw DomainError("sublink size does not match diagram");
    std::visit([&](const auto& mv) { detail::apply(s, mv); }, m);
    if (!is_characteristic(s.diagram.framed_matrix(), s.J))
        throw ConsistencyError(detail::describe(m) + ": transported sublink is not characteristic");
    return s;
}

inline SpinState run_script(SpinState s, const MoveScript& script) {
    for (const auto& m : script) s = apply_move(std::move(s), m);
    return s;
}

inline bool is_standard_rp3(const TopologicalSurgeryDiagram& td) {
    return td.size() == 1 && td.components[0].is_unknot && td.components[0].framing == Rational(-2);
}

/// The characteristic sublink of `td` carried to the empty sublink of the
/// standard (-2)-framed unknot by `script`.
inline SpinStructureSub find_s0(const TopologicalSurgeryDiagram& td, const MoveScript& script) {
    std::optional<SpinStructureSub> found;
    for (const auto& J : characteristic_sublinks(td)) {
        const SpinState end = run_script({td, J}, script);
        if (!is_standard_rp3(end.diagram))
            throw DomainError("script does not end at the standard RP3 diagram");
        if (end.J.count() != 0) continue;
        if (found) throw ConsistencyError("two spin structures transported to the empty sublink");
        found = J;
    }
    if (!found) throw ConsistencyError("no spin structure transported to the empty sublink");
    return *found;
}

/// Search key for a diagram up to names.
inline std::string diagram_key(const TopologicalSurgeryDiagram& td) {
    std::string key;
    for (std::size_t i = 0; i < td.size(); ++i) {
        key += td.components[i].is_unknot ? 'u' : '?';
        key += td.components[i].framing.str();
        for (std::size_t j = i + 1; j < td.size(); ++j) key += "," + std::to_string(td.lk(i, j));
        key += ';';
    }
    return key;
}

/// Candidate moves for the breadth-first search.
inline std::vector<Move> candidate_moves(const TopologicalSurgeryDiagram& td) {
    std::vector<Move> out;
    for (std::size_t u = 0; u < td.size(); ++u) {
        const auto& c = td.components[u];
        if (c.is_unknot && (c.framing == Rational(1) || c.framing == Rational(-1)))
            out.push_back(BlowDown{c.name});
        if (c.is_unknot && c.framing.is_zero())
            for (std::int64_t n : {-1, 1}) out.push_back(Rolfsen{c.name, n});
    }
    for (std::size_t i = 0; i < td.size(); ++i)
        for (std::size_t k = 0; k < td.size(); ++k)
            if (i != k)
                for (int e : {-1, 1}) out.push_back(Slide{td.components[i].name, td.components[k].name, e});
    for (int e : {-1, 1}) {
        out.push_back(BlowUp{e, {}, {}});
        for (const auto& c : td.components) out.push_back(BlowUp{e, {{c.name, 1}}, {}});
    }
    return out;
}

/// Bounded breadth-first search for a script reaching the standard diagram.
inline std::optional<MoveScript> search_reduction(const TopologicalSurgeryDiagram& td, std::size_t max_depth,
                                                  std::size_t max_states = 200000) {
    if (is_standard_rp3(td)) return MoveScript{};
    struct Node {
        TopologicalSurgeryDiagram d;
        MoveScript path;
    };
    std::deque<Node> queue{{td, {}}};
    std::map<std::string, bool> seen{{diagram_key(td), true}};
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (cur.path.size() >= max_depth) continue;
        for (const auto& m : candidate_moves(cur.d)) {
            SpinState st{cur.d, SpinStructureSub{std::vector<bool>(cur.d.size(), false)}};
            try {
                std::visit([&](const auto& mv) { detail::apply(st, mv); }, m);
            } catch (const DomainError&) {
                continue;
            }
            auto key = diagram_key(st.diagram);
            if (seen.count(key)) continue;
            seen.emplace(std::move(key), true);
            MoveScript path = cur.path;
            path.push_back(m);
            if (is_standard_rp3(st.diagram)) return path;
            if (seen.size() > max_states) return std::nullopt;
            queue.push_back({std::move(st.diagram), std::move(path)});
        }
    }
    return std::nullopt;
}

}  // namespace csurg

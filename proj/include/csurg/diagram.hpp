#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csurg/matrix.hpp"
#include "csurg/rational.hpp"

namespace csurg {

using LinkMatrix = Matrix<std::int64_t>;

/// A Legendrian knot with its contact surgery coefficient.
///
/// Stabilizations whose signs are not yet chosen live in `groups`: each id
/// names a block of s stabilizations shared with every pushoff taken after
/// it was added. The realized rotation number is rot + sum of the group
/// offsets, each offset ranging over {-s, -s+2, ..., s}.
struct LegendrianComponent {
    std::string name;
    std::int64_t tb = -1;
    std::int64_t rot = 0;
    Rational coeff{-1};
    bool is_unknot = true;
    std::vector<std::size_t> groups;

    friend bool operator==(const LegendrianComponent&, const LegendrianComponent&) = default;
};

/// Rotation numbers of the Legendrian unknots with the given tb.
inline std::vector<std::int64_t> legendrian_unknots(std::int64_t tb) {
    if (tb >= 0) throw DomainError("Legendrian unknots have tb <= -1, got " + std::to_string(tb));
    std::vector<std::int64_t> out;
    for (std::int64_t r = tb + 1; r <= -tb - 1; r += 2) out.push_back(r);
    return out;
}

class ContactSurgeryDiagram {
public:
    ContactSurgeryDiagram() = default;
    explicit ContactSurgeryDiagram(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    std::size_t size() const noexcept { return comps_.size(); }
    bool empty() const noexcept { return comps_.empty(); }
    const std::vector<LegendrianComponent>& components() const noexcept { return comps_; }
    const LegendrianComponent& operator[](std::size_t i) const { return comps_.at(i); }
    const LinkMatrix& linking() const noexcept { return lk_; }
    std::int64_t lk(std::size_t i, std::size_t j) const { return i == j ? 0 : lk_(i, j); }

    const std::vector<std::int64_t>& group_sizes() const noexcept { return group_sizes_; }
    bool resolved() const {
        return std::all_of(comps_.begin(), comps_.end(),
                           [](const auto& c) { return c.groups.empty(); });
    }

    std::optional<std::size_t> find(const std::string& n) const {
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (comps_[i].name == n) return i;
        return std::nullopt;
    }
    std::size_t index_of(const std::string& n) const {
        if (auto i = find(n)) return *i;
        throw DomainError("no component named '" + n + "'");
    }

    std::size_t add(LegendrianComponent c) {
        if (find(c.name)) throw DomainError("duplicate component name '" + c.name + "'");
        for (auto g : c.groups)
            if (g >= group_sizes_.size()) throw DomainError("unknown stabilization group");
        comps_.push_back(std::move(c));
        validate(comps_.size() - 1);
        LinkMatrix grown(comps_.size(), comps_.size());
        for (std::size_t i = 0; i + 1 < comps_.size(); ++i)
            for (std::size_t j = 0; j + 1 < comps_.size(); ++j) grown(i, j) = lk_(i, j);
        lk_ = std::move(grown);
        return comps_.size() - 1;
    }

    void set_lk(std::size_t i, std::size_t j, std::int64_t v) {
        if (i == j) throw DomainError("self-linking is not stored in the linking matrix");
        lk_(i, j) = v;
        lk_(j, i) = v;
    }

    std::size_t add_group(std::int64_t stabilizations) {
        if (stabilizations < 0) throw DomainError("negative stabilization count");
        group_sizes_.push_back(stabilizations);
        return group_sizes_.size() - 1;
    }

    void set_coeff(std::size_t i, const Rational& r) {
        if (r.is_zero()) throw DomainError("component '" + comps_.at(i).name + "' has coefficient 0");
        comps_.at(i).coeff = r;
    }

    /// Direct mutation hook for moves that keep the parity invariant by construction.
    LegendrianComponent& mutable_component(std::size_t i) { return comps_.at(i); }

    void remove(std::size_t k) {
        comps_.erase(comps_.begin() + static_cast<std::ptrdiff_t>(k));
        lk_ = lk_.without(k);
    }

    /// Enforce the tb + rot parity and unknot bounds on component i.
    void validate(std::size_t i) const {
        const auto& c = comps_.at(i);
        std::int64_t parity = c.tb + c.rot;
        for (auto g : c.groups) parity += group_sizes_.at(g);
        if (parity % 2 == 0)
            throw DomainError("component '" + c.name + "': tb + rot must be odd");
        if (c.coeff.is_zero()) throw DomainError("component '" + c.name + "' has coefficient 0");
        if (c.is_unknot) {
            if (c.tb > -1) throw DomainError("component '" + c.name + "': unknot needs tb <= -1");
            std::int64_t spread = 0;
            for (auto g : c.groups) spread += group_sizes_.at(g);
            if (c.groups.empty() && std::abs(c.rot) > -c.tb - 1)
                throw DomainError("component '" + c.name + "': unknot needs |rot| <= -tb - 1");
            if (!c.groups.empty() && std::abs(c.rot) + spread > -c.tb - 1)
                throw DomainError("component '" + c.name + "': unknot rotation range too wide");
        }
    }

    friend bool operator==(const ContactSurgeryDiagram& a, const ContactSurgeryDiagram& b) {
        return a.comps_ == b.comps_ && a.lk_ == b.lk_ && a.group_sizes_ == b.group_sizes_;
    }

private:
    std::string name_ = "d";
    std::vector<LegendrianComponent> comps_;
    LinkMatrix lk_;
    std::vector<std::int64_t> group_sizes_;
};

inline ContactSurgeryDiagram stabilize(ContactSurgeryDiagram d, std::size_t c, std::int64_t pos,
                                       std::int64_t neg) {
    if (pos < 0 || neg < 0) throw DomainError("stabilization counts must be nonnegative");
    auto& k = d.mutable_component(c);
    k.tb -= pos + neg;
    k.rot += pos - neg;
    d.validate(c);
    return d;
}

/// Add s stabilizations to component c with signs left open; returns the group id.
inline std::size_t stabilize_symbolic(ContactSurgeryDiagram& d, std::size_t c, std::int64_t s) {
    const std::size_t g = d.add_group(s);
    auto& k = d.mutable_component(c);
    k.tb -= s;
    if (s > 0) k.groups.push_back(g);
    d.validate(c);
    return g;
}

/// Append a Reeb pushoff of component c named `name` with coefficient `coeff`.
inline std::size_t contact_pushoff(ContactSurgeryDiagram& d, std::size_t c, std::string name,
                                   const Rational& coeff) {
    LegendrianComponent copy = d[c];
    copy.name = std::move(name);
    copy.coeff = coeff;
    const std::size_t idx = d.add(std::move(copy));
    for (std::size_t x = 0; x + 1 < d.size(); ++x)
        d.set_lk(idx, x, x == c ? d[c].tb : d.lk(c, x));
    return idx;
}

/// Fix every symbolic stabilization group to a concrete rotation offset.
inline ContactSurgeryDiagram resolve(const ContactSurgeryDiagram& d,
                                     const std::vector<std::int64_t>& offsets) {
    if (offsets.size() != d.group_sizes().size())
        throw DomainError("resolve: one offset per stabilization group required");
    for (std::size_t g = 0; g < offsets.size(); ++g) {
        const auto s = d.group_sizes()[g];
        if (std::abs(offsets[g]) > s || (offsets[g] + s) % 2 != 0)
            throw DomainError("resolve: offset " + std::to_string(offsets[g]) +
                              " impossible for " + std::to_string(s) + " stabilizations");
    }
    ContactSurgeryDiagram out(d.name());
    for (const auto& c : d.components()) {
        LegendrianComponent k = c;
        for (auto g : c.groups) k.rot += offsets[g];
        k.groups.clear();
        out.add(std::move(k));
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) out.set_lk(i, j, d.lk(i, j));
    return out;
}

inline ContactSurgeryDiagram split_union(const ContactSurgeryDiagram& a,
                                         const ContactSurgeryDiagram& b) {
    ContactSurgeryDiagram out = a;
    const std::size_t base = a.size();
    const std::size_t gbase = a.group_sizes().size();
    for (auto s : b.group_sizes()) out.add_group(s);
    for (const auto& c : b.components()) {
        if (a.find(c.name)) throw DomainError("split union: name clash on '" + c.name + "'");
        LegendrianComponent k = c;
        for (auto& g : k.groups) g += gbase;
        out.add(std::move(k));
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) out.set_lk(base + i, base + j, b.lk(i, j));
    return out;
}

/// Components listed in the order perm[0], perm[1], ...
inline ContactSurgeryDiagram reorder(const ContactSurgeryDiagram& d,
                                     const std::vector<std::size_t>& perm) {
    ContactSurgeryDiagram out(d.name());
    for (auto s : d.group_sizes()) out.add_group(s);
    for (auto p : perm) out.add(d[p]);
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) out.set_lk(i, j, d.lk(perm[i], perm[j]));
    return out;
}

/// Reverse the orientation of component c: rotation number and all its
/// linking numbers change sign.
inline ContactSurgeryDiagram reverse_orientation(ContactSurgeryDiagram d, std::size_t c) {
    if (!d[c].groups.empty()) throw DomainError("reverse_orientation needs a resolved component");
    d.mutable_component(c).rot = -d[c].rot;
    for (std::size_t x = 0; x < d.size(); ++x)
        if (x != c) d.set_lk(c, x, -d.lk(c, x));
    return d;
}

struct TopologicalComponent {
    std::string name;
    bool is_unknot = true;
    Rational framing;

    friend bool operator==(const TopologicalComponent&, const TopologicalComponent&) = default;
};

/// Smooth surgery diagram: framings measured against the Seifert longitude.
struct TopologicalSurgeryDiagram {
    std::vector<TopologicalComponent> components;
    LinkMatrix lk;

    std::size_t size() const noexcept { return components.size(); }

    bool integral() const {
        return std::all_of(components.begin(), components.end(),
                           [](const auto& c) { return c.framing.is_integer(); });
    }

    std::int64_t framing(std::size_t i) const {
        const auto& f = components.at(i).framing;
        if (!f.is_integer()) throw DomainError("component '" + components[i].name + "' has non-integer framing");
        return to_i64(f.num());
    }

    /// Linking matrix with framings on the diagonal (integer diagrams only).
    LinkMatrix framed_matrix() const {
        LinkMatrix m = lk;
        for (std::size_t i = 0; i < size(); ++i) m(i, i) = framing(i);
        return m;
    }

    std::optional<std::size_t> find(const std::string& n) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].name == n) return i;
        return std::nullopt;
    }

    friend bool operator==(const TopologicalSurgeryDiagram&, const TopologicalSurgeryDiagram&) = default;
};

inline TopologicalSurgeryDiagram to_topological(const ContactSurgeryDiagram& d) {
    TopologicalSurgeryDiagram t;
    t.lk = LinkMatrix(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& c = d[i];
        t.components.push_back({c.name, c.is_unknot, c.coeff + Rational(c.tb)});
        for (std::size_t j = 0; j < d.size(); ++j) t.lk(i, j) = d.lk(i, j);
    }
    return t;
}

}  // namespace csurg

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csurg/diagram.hpp"
#include "csurg/spin_tracking.hpp"

namespace csurg {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

/// Whitespace-separated tokens of one line, '#' starting a comment.
inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

inline std::int64_t parse_int(const Token& t, std::string_view value, std::size_t line, const char* what) {
    std::int64_t v = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    if (!value.empty() && value.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError(line, t.column, std::string("malformed ") + what + " '" + std::string(value) + "'");
    return v;
}

/// Value of a key=value token, or a parse error naming the expected key.
inline std::string_view keyed(const Token& t, std::string_view key, std::size_t line) {
    if (t.text.size() <= key.size() || t.text.substr(0, key.size()) != key || t.text[key.size()] != '=')
        throw ParseError(line, t.column, "expected " + std::string(key) + "=..., got '" + std::string(t.text) + "'");
    return t.text.substr(key.size() + 1);
}

inline int parse_sign(const Token& t, std::string_view value, std::size_t line) {
    if (value == "+1" || value == "1") return 1;
    if (value == "-1") return -1;
    throw ParseError(line, t.column, "sign must be +1 or -1, got '" + std::string(value) + "'");
}

inline std::string signed_str(std::int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

}  // namespace detail

/// Parse one or more `diagram ... end` blocks.
inline std::vector<ContactSurgeryDiagram> parse_diagrams(std::string_view text) {
    using namespace detail;
    std::vector<ContactSurgeryDiagram> out;
    std::optional<ContactSurgeryDiagram> cur;
    std::set<std::pair<std::size_t, std::size_t>> seen_lk;
    std::size_t open_line = 0;
    const auto lines = split_lines(text);
    for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
        const auto toks = tokenize(lines[ln - 1]);
        if (toks.empty()) continue;
        const auto& head = toks[0].text;
        if (head == "diagram") {
            if (cur) throw ParseError(ln, toks[0].column, "nested diagram (missing 'end')");
            if (toks.size() != 2) throw ParseError(ln, toks[0].column, "expected 'diagram <name>'");
            cur.emplace(std::string(toks[1].text));
            seen_lk.clear();
            open_line = ln;
            continue;
        }
        if (!cur) throw ParseError(ln, toks[0].column, "'" + std::string(head) + "' outside a diagram block");
        if (head == "end") {
            if (toks.size() != 1) throw ParseError(ln, toks[1].column, "unexpected text after 'end'");
            out.push_back(std::move(*cur));
            cur.reset();
        } else if (head == "component") {
            if (toks.size() < 5 || toks.size() > 6)
                throw ParseError(ln, toks[0].column, "expected 'component <id> tb=<int> rot=<int> coeff=<p/q> [unknot]'");
            LegendrianComponent c;
            c.name = std::string(toks[1].text);
            c.tb = parse_int(toks[2], keyed(toks[2], "tb", ln), ln, "tb");
            c.rot = parse_int(toks[3], keyed(toks[3], "rot", ln), ln, "rot");
            const auto coeff = keyed(toks[4], "coeff", ln);
            try {
                c.coeff = Rational::parse(coeff);
            } catch (const DomainError& e) {
                throw ParseError(ln, toks[4].column, e.what());
            }
            c.is_unknot = false;
            if (toks.size() == 6) {
                if (toks[5].text != "unknot") throw ParseError(ln, toks[5].column, "expected 'unknot' or end of line");
                c.is_unknot = true;
            }
            try {
                cur->add(std::move(c));
            } catch (const ParseError&) {
                throw;
            } catch (const DomainError& e) {
                throw ParseError(ln, toks[0].column, e.what());
            }
        } else if (head == "lk") {
            if (toks.size() != 4) throw ParseError(ln, toks[0].column, "expected 'lk <id> <id> <int>'");
            const auto a = cur->find(std::string(toks[1].text));
            const auto b = cur->find(std::string(toks[2].text));
            if (!a) throw ParseError(ln, toks[1].column, "unknown component '" + std::string(toks[1].text) + "'");
            if (!b) throw ParseError(ln, toks[2].column, "unknown component '" + std::string(toks[2].text) + "'");
            if (*a == *b) throw ParseError(ln, toks[2].column, "linking number of a component with itself");
            const auto key = std::minmax(*a, *b);
            if (!seen_lk.insert(key).second)
                throw ParseError(ln, toks[0].column, "duplicate lk for " + std::string(toks[1].text) + ", " +
                                                         std::string(toks[2].text));
            cur->set_lk(*a, *b, parse_int(toks[3], toks[3].text, ln, "linking number"));
        } else {
            throw ParseError(ln, toks[0].column, "unknown keyword '" + std::string(head) + "'");
        }
    }
    if (cur) throw ParseError(open_line, 1, "diagram '" + cur->name() + "' has no 'end'");
    return out;
}

inline ContactSurgeryDiagram parse_diagram(std::string_view text) {
    auto all = parse_diagrams(text);
    if (all.size() != 1)
        throw ParseError(1, 1, "expected exactly one diagram, found " + std::to_string(all.size()));
    return std::move(all.front());
}

inline std::string serialize_diagram(const ContactSurgeryDiagram& d) {
    if (!d.resolved()) throw DomainError("cannot serialize a diagram with unresolved stabilization signs");
    std::ostringstream os;
    os << "diagram " << d.name() << '\n';
    for (const auto& c : d.components()) {
        os << "  component " << c.name << " tb=" << c.tb << " rot=" << c.rot << " coeff=" << c.coeff.str();
        if (c.is_unknot) os << " unknot";
        os << '\n';
    }
    std::vector<std::tuple<std::string, std::string, std::int64_t>> pairs;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.lk(i, j) != 0) {
                auto a = d[i].name, b = d[j].name;
                if (b < a) std::swap(a, b);
                pairs.emplace_back(a, b, d.lk(i, j));
            }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [a, b, v] : pairs) os << "  lk " << a << ' ' << b << ' ' << v << '\n';
    os << "end\n";
    return os.str();
}

inline MoveScript parse_move_script(std::string_view text) {
    using namespace detail;
    MoveScript script;
    const auto lines = split_lines(text);
    for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
        const auto toks = tokenize(lines[ln - 1]);
        if (toks.empty()) continue;
        const auto& head = toks[0].text;
        if (head == "slide") {
            if (toks.size() != 5 || toks[2].text != "over")
                throw ParseError(ln, toks[0].column, "expected 'slide <i> over <k> sign=<+1|-1>'");
            script.push_back(Slide{std::string(toks[1].text), std::string(toks[3].text),
                                   parse_sign(toks[4], keyed(toks[4], "sign", ln), ln)});
        } else if (head == "blowdown") {
            if (toks.size() != 2) throw ParseError(ln, toks[0].column, "expected 'blowdown <id>'");
            script.push_back(BlowDown{std::string(toks[1].text)});
        } else if (head == "blowup") {
            if (toks.size() < 3 || toks.size() > 4)
                throw ParseError(ln, toks[0].column, "expected 'blowup sign=<+1|-1> lk=<id>:<int>,...'");
            BlowUp b;
            b.sign = parse_sign(toks[1], keyed(toks[1], "sign", ln), ln);
            std::string_view list = keyed(toks[2], "lk", ln);
            while (!list.empty()) {
                const auto comma = list.find(',');
                const auto item = list.substr(0, comma);
                const auto colon = item.find(':');
                if (colon == std::string_view::npos || colon == 0)
                    throw ParseError(ln, toks[2].column, "malformed lk entry '" + std::string(item) + "'");
                b.lk.emplace_back(std::string(item.substr(0, colon)),
                                  parse_int(toks[2], item.substr(colon + 1), ln, "linking number"));
                list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
            }
            if (toks.size() == 4) b.name = std::string(keyed(toks[3], "name", ln));
            script.push_back(std::move(b));
        } else if (head == "rolfsen") {
            if (toks.size() != 3) throw ParseError(ln, toks[0].column, "expected 'rolfsen <id> n=<int>'");
            script.push_back(Rolfsen{std::string(toks[1].text), parse_int(toks[2], keyed(toks[2], "n", ln), ln, "twist count")});
        } else {
            throw ParseError(ln, toks[0].column, "unknown move '" + std::string(head) + "'");
        }
    }
    return script;
}

inline std::string serialize_move(const Move& m) {
    using detail::signed_str;
    struct {
        std::string operator()(const Slide& s) const {
            return "slide " + s.i + " over " + s.k + " sign=" + signed_str(s.sign);
        }
        std::string operator()(const BlowDown& b) const { return "blowdown " + b.target; }
        std::string operator()(const BlowUp& b) const {
            std::string s = "blowup sign=" + signed_str(b.sign) + " lk=";
            for (std::size_t i = 0; i < b.lk.size(); ++i)
                s += (i ? "," : "") + b.lk[i].first + ":" + std::to_string(b.lk[i].second);
            if (!b.name.empty()) s += " name=" + b.name;
            return s;
        }
        std::string operator()(const Rolfsen& r) const { return "rolfsen " + r.target + " n=" + std::to_string(r.n); }
    } v;
    return std::visit(v, m);
}

inline std::string serialize_script(const MoveScript& s) {
    std::string out;
    for (const auto& m : s) out += serialize_move(m) + "\n";
    return out;
}

}  // namespace csurg

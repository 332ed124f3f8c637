#pragma once

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "csurg/csurg.hpp"

namespace csurg::cli {

enum ExitCode : int { ok = 0, domain_error = 2, consistency_error = 3 };

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "a..b" or a single integer.
inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoll(s);
            return {v, v};
        }
        std::size_t used = 0;
        const auto lo = std::stoll(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(s);
        const auto hi_text = s.substr(dots + 2);
        const auto hi = std::stoll(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument(s);
        if (lo > hi) throw DomainError("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw DomainError("malformed range '" + s + "' (expected a..b)");
    }
}

inline std::string fixture_path(const std::string& dir, int id, std::int64_t t, std::int64_t n) {
    return (std::filesystem::path(dir) /
            ("case" + std::to_string(id) + "_t" + std::to_string(t) + "_n" + std::to_string(n) + ".moves"))
        .string();
}

/// Scripts from `dir` when a matching file exists, generated otherwise.
inline ScriptSource script_source(const std::string& dir) {
    if (dir.empty()) return fixture_script;
    return [dir](int id, std::int64_t t, std::int64_t n, const TopologicalSurgeryDiagram& td) {
        const auto path = fixture_path(dir, id, t, n);
        if (std::filesystem::exists(path)) return parse_move_script(read_file(path));
        return fixture_script(id, t, n, td);
    };
}

/// Run f(i) for i in [0, count) on `jobs` threads; exceptions are rethrown
/// in index order.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline void print_invariants(const ContactSurgeryDiagram& d, std::ostream& out) {
    const auto g = build_Q(d);
    const auto h = homology(g.Q);
    out << "H1=" << h.group() << "\n";
    out << "d3=" << d3(g).str() << "\n";
    out << "sublink\tgamma\n";
    for (const auto& J : characteristic_sublinks(to_topological(d)))
        out << format_sublink(J, d.components()) << "\t" << gamma(g, h, J).str() << "\n";
}

inline int cmd_invariants(const std::string& file, std::ostream& out) {
    for (const auto& input : parse_diagrams(read_file(file))) {
        const auto rational = rationalize(input);
        const auto all = enumerate_rotations(rational);
        if (all.size() == 1 && rational.size() == input.size() && all.front() == input) {
            out << "diagram=" << input.name() << "\n";
            print_invariants(input, out);
            continue;
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            out << "diagram=" << input.name() << "\n";
            out << "resolution=" << (i + 1) << "/" << all.size() << "\n";
            out << "rot=";
            for (std::size_t c = 0; c < all[i].size(); ++c) out << (c ? "," : "") << all[i][c].rot;
            out << "\n";
            print_invariants(all[i], out);
        }
    }
    return ok;
}

inline int cmd_convert(const std::string& file, std::ostream& out) {
    for (const auto& input : parse_diagrams(read_file(file))) {
        const auto all = enumerate_rotations(rationalize(input));
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto d = all[i];
            if (all.size() > 1) {
                d.set_name(input.name() + "." + std::to_string(i + 1));
                out << "# stabilization choice " << (i + 1) << " of " << all.size() << "\n";
            }
            out << serialize_diagram(d);
        }
    }
    return ok;
}

inline int cmd_spin(const std::string& file, const std::string& script_file, std::ostream& out) {
    const auto d = expand_reciprocal(rationalize(parse_diagram(read_file(file))));
    const auto td = to_topological(d);
    if (!td.integral()) throw DomainError("spin: the expanded diagram has non-integer framings");
    std::optional<MoveScript> script;
    if (!script_file.empty()) {
        script = parse_move_script(read_file(script_file));
    } else {
        script = reduce_to_standard(td, twin_slides(td));
        if (!script) script = search_reduction(td, 4);
    }
    out << "spin_structures=" << characteristic_sublinks(td).size() << "\n";
    if (!script) {
        out << "script=not found\n";
        for (const auto& J : characteristic_sublinks(td)) out << format_sublink(J, td.components) << "\n";
        return ok;
    }
    out << "script_moves=" << script->size() << "\n";
    out << "sublink\tfinal\n";
    std::optional<SpinState> last;
    for (const auto& J : characteristic_sublinks(td)) {
        last = run_script({td, J}, *script);
        out << format_sublink(J, td.components) << "\t" << format_sublink(last->J, last->diagram.components) << "\n";
    }
    if (last && is_standard_rp3(last->diagram)) {
        out << "s0=" << format_sublink(find_s0(td, *script), td.components) << "\n";
    } else {
        out << "standard=false\n";
    }
    if (script_file.empty()) out << "# script\n" << serialize_script(*script);
    return ok;
}

inline int cmd_recognize(const std::string& r, std::ostream& out) {
    const auto n = recognize_rp3(Rational::parse(r));
    if (n)
        out << "n=" << *n << "\n";
    else
        out << "not RP3\n";
    return ok;
}

inline int cmd_table(const std::string& trange, const std::string& nrange, unsigned jobs, const std::string& fixtures,
                     std::ostream& out) {
    const auto [t0, t1] = parse_range(trange);
    const auto [n0, n1] = parse_range(nrange);
    if (t1 > -1) throw DomainError("t must be <= -1");
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (auto t = t0; t <= t1; ++t)
        for (auto n = n0; n <= n1; ++n)
            if (!(t == -2 && n == -1)) cells.emplace_back(t, n);
    std::vector<std::string> rows(cells.size());
    const auto source = script_source(fixtures);
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const auto [t, n] = cells[i];
        const auto rep = case_invariants(t, n, source);
        std::set<std::pair<InvariantPair, bool>> seen;
        for (const auto& r : rep.resolutions) seen.emplace(r.pair, r.tight);
        std::string s;
        for (const auto& [p, tight] : seen)
            s += std::to_string(t) + "\t" + std::to_string(n) + "\t" + std::to_string(rep.case_id) + "\t" +
                 std::to_string(p.gamma) + "\t" + p.d3.str() + "\t" + (tight ? "yes" : "no") + "\n";
        rows[i] = std::move(s);
    });
    out << "t\tn\tcase\tgamma\td3\ttight\n";
    for (const auto& r : rows) out << r;
    return ok;
}

inline int cmd_scripts(const std::string& trange, const std::string& nrange, const std::string& dir,
                       std::ostream& out) {
    const auto [t0, t1] = parse_range(trange);
    const auto [n0, n1] = parse_range(nrange);
    std::filesystem::create_directories(dir);
    std::size_t written = 0;
    for (auto t = t0; t <= t1; ++t)
        for (auto n = n0; n <= n1; ++n) {
            if (t == -2 && n == -1) continue;
            const auto t1d = table1_diagram(t, n);
            const auto td = to_topological(expand_reciprocal(t1d.diagram));
            std::ofstream f(fixture_path(dir, t1d.case_id, t, n), std::ios::binary);
            f << "# case (" << t1d.case_id << "), t = " << t << ", n = " << n << "\n"
              << serialize_script(fixture_script(t1d.case_id, t, n, td));
            ++written;
        }
    out << "written=" << written << "\n";
    return ok;
}

inline int cmd_classify(int gamma_value, const std::string& d3_text, bool tight, std::ostream& out) {
    const auto c = classify({gamma_value, Rational::parse(d3_text)}, tight);
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "cs_pm1_eq_1=" << b(c.cs_pm1_eq_1) << "\n"
        << "cs_recip_eq_1=" << b(c.cs_recip_eq_1) << "\n"
        << "cs_int_eq_1=" << b(c.cs_int_eq_1) << "\n"
        << "cs_eq_1=" << b(c.cs_eq_1) << "\n";
    return ok;
}

inline int cmd_census(std::ostream& out) {
    out << "tb\trot\tcoeff\tgamma\td3\ttight\n";
    for (const auto& e : single_knot_census())
        out << e.tb << "\t" << (e.rot_abs == 0 ? "0" : "+-" + std::to_string(e.rot_abs)) << "\t" << e.coeff.str()
            << "\t" << e.pair.gamma << "\t" << e.pair.d3.str() << "\t" << (e.tight ? "yes" : "no") << "\n";
    return ok;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of contact surgery diagrams and contact structures on RP3", "csurg"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    std::string fixtures;
    app.add_option("--jobs", jobs, "worker threads for grid evaluation")->check(CLI::PositiveNumber);
    app.add_option("--fixtures", fixtures, "directory of case<id>_t<t>_n<n>.moves scripts");

    std::string file, script_file;
    auto* inv = app.add_subcommand("invariants", "H1, d3 and Gamma per spin structure");
    inv->add_option("file", file, "diagram file")->required();
    auto* conv = app.add_subcommand("convert", "rewrite with contact (+-1) coefficients only");
    conv->add_option("file", file, "diagram file")->required();
    auto* spin = app.add_subcommand("spin", "spin structures and their transport to the standard RP3 diagram");
    spin->add_option("file", file, "diagram file")->required();
    spin->add_option("--script", script_file, "move script file");

    auto* rp3 = app.add_subcommand("rp3", "RP3 classification tools");
    rp3->require_subcommand(1);
    std::string ratio, trange = "-9..-1", nrange = "-9..9", d3_text, outdir;
    int gamma_value = 0;
    bool tight = false;
    auto* recog = rp3->add_subcommand("recognize", "is r = 2/(2n+1)?");
    recog->add_option("r", ratio, "smooth surgery coefficient p/q")->required();
    auto* table = rp3->add_subcommand("table", "invariant pairs over a (t, n) grid");
    table->add_option("--t", trange, "range a..b of Thurston-Bennequin invariants");
    table->add_option("--n", nrange, "range c..d of n");
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    table->add_option("--fixtures", fixtures, "directory of move scripts");
    auto* cls = rp3->add_subcommand("classify", "contact surgery number flags of a pair");
    cls->add_option("--gamma", gamma_value, "Gamma in Z/2")->required()->check(CLI::IsMember({0, 1}));
    cls->add_option("--d3", d3_text, "d3 as p/q")->required();
    cls->add_flag("--tight", tight, "the pair belongs to the tight structure");
    auto* census = rp3->add_subcommand("census", "single-knot contact (+-1) and 1/k presentations");
    auto* scripts = rp3->add_subcommand("scripts", "write move scripts for a (t, n) grid");
    scripts->add_option("--t", trange, "range a..b");
    scripts->add_option("--n", nrange, "range c..d");
    scripts->add_option("--out", outdir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }

    try {
        if (*inv) return cmd_invariants(file, out);
        if (*conv) return cmd_convert(file, out);
        if (*spin) return cmd_spin(file, script_file, out);
        if (*recog) return cmd_recognize(ratio, out);
        if (*table) return cmd_table(trange, nrange, jobs, fixtures, out);
        if (*cls) return cmd_classify(gamma_value, d3_text, tight, out);
        if (*census) return cmd_census(out);
        if (*scripts) return cmd_scripts(trange, nrange, outdir, out);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return consistency_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }
    return domain_error;
}

}  // namespace csurg::cli

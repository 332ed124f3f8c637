#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace csurg;

namespace {

TopologicalSurgeryDiagram integer_diagram(std::vector<std::int64_t> framings, std::vector<std::tuple<int, int, int>> links) {
    TopologicalSurgeryDiagram td;
    td.lk = LinkMatrix(framings.size(), framings.size());
    for (std::size_t i = 0; i < framings.size(); ++i)
        td.components.push_back({"c" + std::to_string(i), true, Rational(framings[i])});
    for (auto [i, j, v] : links) {
        td.lk(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        td.lk(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
    return td;
}

BigInt det(const LinkMatrix& m) {
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    return determinant(a);
}

SpinStructureSub sub(std::vector<bool> m) { return {std::move(m)}; }

std::set<std::vector<bool>> transported(const TopologicalSurgeryDiagram& td, const Move& m) {
    std::set<std::vector<bool>> out;
    for (const auto& J : characteristic_sublinks(td)) out.insert(apply_move({td, J}, m).J.members);
    return out;
}

std::set<std::vector<bool>> all_sublinks(const TopologicalSurgeryDiagram& td) {
    std::set<std::vector<bool>> out;
    for (const auto& J : characteristic_sublinks(td)) out.insert(J.members);
    return out;
}

}  // namespace

TEST_CASE("handle slide updates framings and membership", "[spin]") {
    const auto td = integer_diagram({-2, -3}, {{0, 1, 1}});
    const auto s = apply_move({td, sub({true, false})}, Slide{"c0", "c1", 1});
    CHECK(s.diagram.framing(0) == -2 - 3 + 2);
    CHECK(s.diagram.lk(0, 1) == 1 - 3);
    CHECK(s.J.members == std::vector<bool>{true, true});

    // sliding a component outside J leaves J alone
    const auto td2 = integer_diagram({-2, 0}, {{0, 1, 1}});
    const auto J2 = characteristic_sublinks(td2);
    for (const auto& J : J2) {
        if (J.members[0]) continue;
        CHECK(apply_move({td2, J}, Slide{"c0", "c1", -1}).J == J);
    }
    CHECK_THROWS_AS(apply_move({td, sub({true, false})}, Slide{"c0", "c0", 1}), DomainError);
    CHECK_THROWS_AS(apply_move({td, sub({true, false})}, Slide{"c0", "zz", 1}), DomainError);
}

TEST_CASE("blow down of a split unknot", "[spin]") {
    const auto td = integer_diagram({-2, 1}, {});
    for (const auto& J : characteristic_sublinks(td)) {
        const auto s = apply_move({td, J}, BlowDown{"c1"});
        CHECK(is_standard_rp3(s.diagram));
        CHECK(s.J.members == std::vector<bool>{J.members[0]});
    }
    CHECK_THROWS_AS(apply_move({td, characteristic_sublinks(td)[0]}, BlowDown{"c0"}), DomainError);
}

TEST_CASE("blow up joins J by parity", "[spin]") {
    const auto td = integer_diagram({-2}, {});
    const auto in = apply_move({td, sub({false})}, BlowUp{-1, {{"c0", 1}}, {}});
    REQUIRE(in.diagram.size() == 2);
    CHECK(in.diagram.components[1].name == "e1");
    CHECK(in.diagram.framing(0) == -3);
    CHECK(in.J.members == std::vector<bool>{false, true});
    const auto out = apply_move({td, sub({true})}, BlowUp{-1, {{"c0", 1}}, "E"});
    CHECK(out.diagram.components[1].name == "E");
    CHECK(out.J.members == std::vector<bool>{true, false});
    CHECK_THROWS_AS(apply_move({td, sub({true})}, BlowUp{2, {}, {}}), DomainError);
}

TEST_CASE("Rolfsen twist", "[spin]") {
    const auto td = integer_diagram({-1, 0}, {{0, 1, 1}});
    const auto J = characteristic_sublinks(td);
    for (const auto& j : J) {
        const auto even = apply_move({td, j}, Rolfsen{"c1", 2});
        CHECK(even.J.members[1] == j.members[1]);
        CHECK(even.diagram.framing(0) == 1);
        CHECK(even.diagram.framing(1) == 0);
    }
    CHECK_THROWS_AS(apply_move({td, J[0]}, Rolfsen{"c0", 1}), DomainError);
}

TEST_CASE("blow up then blow down is the identity", "[spin][property]") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> f(-4, 4), l(-2, 2);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto td = integer_diagram({f(rng), f(rng), f(rng)}, {{0, 1, static_cast<int>(l(rng))}, {1, 2, static_cast<int>(l(rng))}});
        const int e = coin(rng) ? 1 : -1;
        const BlowUp up{e, {{"c0", l(rng)}, {"c2", l(rng)}}, "x"};
        for (const auto& J : characteristic_sublinks(td)) {
            const auto mid = apply_move({td, J}, up);
            REQUIRE(det(mid.diagram.framed_matrix()) == BigInt(e) * det(td.framed_matrix()));
            const auto back = apply_move(mid, BlowDown{"x"});
            REQUIRE(back.diagram.framed_matrix() == td.framed_matrix());
            REQUIRE(back.J == J);
        }
    }
}

TEST_CASE("random move sequences keep J characteristic and transport bijectively", "[spin][property]") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> f(-3, 3), l(-1, 1);
    int applied = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto td = integer_diagram({f(rng), f(rng), f(rng), f(rng)},
                                  {{0, 1, static_cast<int>(l(rng))}, {1, 2, static_cast<int>(l(rng))}, {2, 3, static_cast<int>(l(rng))}});
        for (int step = 0; step < 8 && td.size() > 0; ++step) {
            auto moves = candidate_moves(td);
            std::shuffle(moves.begin(), moves.end(), rng);
            bool moved = false;
            for (const auto& m : moves) {
                std::set<std::vector<bool>> image;
                try {
                    image = transported(td, m);
                } catch (const DomainError&) {
                    continue;
                }
                const auto next = apply_move({td, characteristic_sublinks(td).front()}, m).diagram;
                REQUIRE(image == all_sublinks(next));
                REQUIRE(image.size() == characteristic_sublinks(td).size());
                td = next;
                moved = true;
                ++applied;
                break;
            }
            if (!moved || td.size() > 6) break;
        }
    }
    CHECK(applied > 100);
}

TEST_CASE("standard diagram recognition", "[spin]") {
    CHECK(is_standard_rp3(integer_diagram({-2}, {})));
    CHECK_FALSE(is_standard_rp3(integer_diagram({-2, -1}, {})));
    CHECK_FALSE(is_standard_rp3(integer_diagram({2}, {})));
    auto not_unknot = integer_diagram({-2}, {});
    not_unknot.components[0].is_unknot = false;
    CHECK_FALSE(is_standard_rp3(not_unknot));
}

TEST_CASE("s0 of the standard diagram is empty", "[spin]") {
    const auto td = integer_diagram({-2}, {});
    CHECK(find_s0(td, {}) == sub({false}));
    CHECK(run_script({td, sub({true})}, {}).J == sub({true}));

    ContactSurgeryDiagram c0;
    c0.add({"U", -1, 0, Rational(-1), true, {}});
    CHECK(find_s0(to_topological(c0), {}) == sub({false}));
    CHECK_THROWS_AS(find_s0(integer_diagram({-2, 1}, {}), {}), DomainError);
}

TEST_CASE("Case (3): s0 is the empty sublink", "[spin]") {
    const auto e = expand_reciprocal(table1_diagram(-1, -3).diagram);
    const auto td = to_topological(e);
    const auto s0 = find_s0(td, fixture_script(3, -1, -3, td));
    CHECK(s0.count() == 0);
}

TEST_CASE("breadth-first search", "[spin]") {
    const auto trivial = search_reduction(integer_diagram({-2}, {}), 0);
    REQUIRE(trivial.has_value());
    CHECK(trivial->empty());
    const auto two = integer_diagram({-1, -2}, {});
    const auto found = search_reduction(two, 2);
    REQUIRE(found.has_value());
    REQUIRE(found->size() == 1);
    CHECK(std::get<BlowDown>(found->front()).target == "c0");
    CHECK_FALSE(search_reduction(two, 0).has_value());
}

TEST_CASE("shipped scripts reach the standard diagram on the (t, n) grid", "[spin][property]") {
    for (std::int64_t t = -7; t <= -1; ++t)
        for (std::int64_t n = -7; n <= 7; ++n) {
            if (t == -2 && n == -1) continue;
            const auto t1 = table1_diagram(t, n);
            const auto td = to_topological(expand_reciprocal(t1.diagram));
            const auto script = fixture_script(t1.case_id, t, n, td);
            for (const auto& J : characteristic_sublinks(td)) {
                SpinState s{td, J};
                for (const auto& m : script) s = apply_move(std::move(s), m);
                REQUIRE(is_standard_rp3(s.diagram));
            }
            CHECK_NOTHROW(find_s0(td, script));
        }
}

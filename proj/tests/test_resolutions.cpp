#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "eil/errors.hpp"
#include "eil/families.hpp"
#include "eil/homology.hpp"
#include "eil/resolutions.hpp"

using namespace eil;

namespace {

// Admissibility straight from the definition, positions 0-based.
bool admissible_oracle(const std::vector<VertexSet>& gens, std::uint64_t indices) {
    const std::vector<int> idx = VertexSet(indices).to_vector();
    const int s = static_cast<int>(idx.size());
    for (int t = 0; t + 1 < s; ++t) {
        VertexSet tail;
        for (int r = t; r < s; ++r) tail |= gens[idx[r]];
        for (int q = 0; q < idx[t]; ++q) {
            if (gens[q].is_subset_of(tail)) return false;
        }
    }
    return true;
}

MonomialList path_ideal_L() {
    // L_i: u - x - z - y - v, generators in the order g, h, f, e.
    // u = 0, x = 1, z = 2, y = 3, v = 4.
    return MonomialList(5, {VertexSet{1, 2}, VertexSet{3, 2}, VertexSet{4, 3}, VertexSet{0, 1}});
}

std::vector<Edge> shuffled_edges(const Graph& g, std::mt19937_64& rng) {
    std::vector<Edge> e = g.edges();
    std::shuffle(e.begin(), e.end(), rng);
    return e;
}

} // namespace

TEST_CASE("monomial list validation") {
    CHECK_THROWS_AS(MonomialList(3, {VertexSet{}}), InvalidInput);
    CHECK_THROWS_AS(MonomialList(3, {VertexSet{0, 1}, VertexSet{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(MonomialList(3, {VertexSet{0, 1}, VertexSet{0, 1, 2}}), InvalidInput);
    CHECK_THROWS_AS(MonomialList(3, {VertexSet{0, 5}}), InvalidInput);
    CHECK_NOTHROW(MonomialList(3, {VertexSet{0, 1}, VertexSet{1, 2}}));

    const Graph p3 = path_graph(3);
    CHECK(edge_monomials(p3).supports() == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}});
    const std::vector<Edge> rev{{1, 2}, {0, 1}};
    CHECK(edge_monomials(p3, rev)[0] == VertexSet{1, 2});
    const std::vector<Edge> short_order{{0, 1}};
    CHECK_THROWS_AS(edge_monomials(p3, short_order), InvalidInput);
}

TEST_CASE("admissible symbols agree with the definition") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 150; ++t) {
        const Graph g = random_graph(rng(), 7);
        if (g.size() == 0 || g.size() > 12) continue;
        const MonomialList m = edge_monomials(g, shuffled_edges(g, rng));
        std::vector<std::uint64_t> expected;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.size()); ++s) {
            REQUIRE(is_l_admissible(m, s) == admissible_oracle(m.supports(), s));
            if (admissible_oracle(m.supports(), s)) expected.push_back(s);
        }
        const auto symbols = l_admissible_symbols(m);
        std::vector<std::uint64_t> got;
        for (const LSymbol& sym : symbols) {
            got.push_back(sym.indices);
            VertexSet lcm;
            for (int i : sym.index_list()) lcm |= m[i];
            REQUIRE(sym.lcm == lcm);
            REQUIRE(sym.degree() == lcm.size());
        }
        std::sort(got.begin(), got.end());
        REQUIRE(got == expected);

        // Maximal: not properly inside another admissible set.
        std::vector<std::uint64_t> maximal;
        for (std::uint64_t s : expected) {
            bool top = true;
            for (std::uint64_t o : expected) top &= !(o != s && (o & s) == s);
            if (top) maximal.push_back(s);
        }
        std::vector<std::uint64_t> got_max;
        for (const LSymbol& sym : maximal_l_admissible(m)) got_max.push_back(sym.indices);
        std::sort(got_max.begin(), got_max.end());
        REQUIRE(got_max == maximal);
    }
}

TEST_CASE("single generator") {
    const MonomialList m(2, {VertexSet{0, 1}});
    const auto symbols = l_admissible_symbols(m);
    REQUIRE(symbols.size() == 2);
    CHECK(symbols[0].indices == 0);
    CHECK(symbols[1].indices == 1);
    const BettiTable b = lyubeznik_betti(m, Field::gf2());
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 2) == 1);
    CHECK(b.entries.size() == 2);
}

TEST_CASE("maximal symbols of the 8-cycle under its preset order") {
    const Graph h2 = hk_prime_graph(2);
    const MonomialList m = edge_monomials(h2, hk_prime_order(2));
    // Order: e1, h1, f2, g2, e2, g1, f1, h2.
    std::vector<std::uint64_t> got;
    for (const LSymbol& s : maximal_l_admissible(m)) got.push_back(s.indices);
    std::sort(got.begin(), got.end());
    const std::uint64_t a = 0b01011111; // e1 h1 f2 g2 e2 f1
    const std::uint64_t b = 0b10101111; // e1 h1 f2 g2 g1 h2
    CHECK(got == std::vector<std::uint64_t>{a, b});
}

TEST_CASE("maximal symbols of L_i") {
    std::vector<std::uint64_t> got;
    for (const LSymbol& s : maximal_l_admissible(path_ideal_L())) got.push_back(s.indices);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::uint64_t>{0b0111, 0b1101}); // [g,h,f], [g,f,e]
}

TEST_CASE("Lyubeznik Betti numbers equal Hochster's") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 80; ++t) {
        const Graph g = random_graph(rng(), 8);
        if (g.size() > 16) continue;
        const MonomialList sorted = edge_monomials(g);
        const MonomialList shuffled = edge_monomials(g, shuffled_edges(g, rng));
        for (const Field& f : {Field::gf2(), Field::rationals()}) {
            const BettiTable h = hochster_betti(g, f);
            REQUIRE(lyubeznik_betti(sorted, f) == h);
            REQUIRE(lyubeznik_betti(shuffled, f) == h);
        }
    }
    for (int k = 2; k <= 3; ++k) {
        const Graph g = hk_prime_graph(k);
        const MonomialList m = edge_monomials(g, hk_prime_order(k));
        for (const Field& f : {Field::gf2(), Field::rationals()}) CHECK(lyubeznik_betti(m, f) == hochster_betti(g, f));
    }
}

TEST_CASE("Lyubeznik Betti numbers of H_k'") {
    const BettiTable b2 = lyubeznik_betti(edge_monomials(hk_prime_graph(2), hk_prime_order(2)), Field::gf2());
    CHECK(b2.at(5, 8) >= 1);
    const BettiTable b3 = lyubeznik_betti(edge_monomials(hk_prime_graph(3), hk_prime_order(3)), Field::rationals());
    CHECK(b3.at(7, 11) >= 1);
}

TEST_CASE("symbol budget") {
    const MonomialList m = edge_monomials(cycle_graph(8));
    CHECK_THROWS_AS(l_admissible_symbols(m, 5), BudgetExceeded);
    CHECK_THROWS_AS(lyubeznik_betti(m, Field::gf2(), 5), BudgetExceeded);
}

TEST_CASE("witness cycles") {
    for (const Field& f : {Field::gf2(), Field::rationals(), Field::prime(5)}) {
        const MonomialList h2 = edge_monomials(hk_prime_graph(2), hk_prime_order(2));
        const auto xi = hk_prime_xi(2);
        CHECK(witness_cycle_check(h2, f, xi, 5, 8));

        const MonomialList l = path_ideal_L();
        const std::vector<ChainTerm> gh{{0b0011, 1}};
        CHECK(witness_cycle_check(l, f, gh, 2, 3));

        CHECK_FALSE(witness_cycle_check(h2, f, std::vector<ChainTerm>{}, 5, 8));
    }

    const MonomialList h2 = edge_monomials(hk_prime_graph(2), hk_prime_order(2));
    // One term of ξ alone is not a cycle.
    const std::vector<ChainTerm> half{hk_prime_xi(2).front()};
    CHECK_FALSE(witness_cycle_check(h2, Field::rationals(), half, 5, 8));
    // Malformed: wrong homological index, or an inadmissible symbol.
    CHECK_THROWS_AS(witness_cycle_check(h2, Field::gf2(), hk_prime_xi(2), 4, 8), InvalidInput);
    const std::vector<ChainTerm> bad{{0b11111111, 1}};
    CHECK_THROWS_AS(witness_cycle_check(h2, Field::gf2(), bad, 8, 8), InvalidInput);

    for (int k = 3; k <= 4; ++k) {
        const MonomialList m = edge_monomials(hk_prime_graph(k), hk_prime_order(k));
        CHECK(witness_cycle_check(m, Field::gf2(), hk_prime_xi(k), 2 * k + 1, 3 * k + 2));
        CHECK(witness_cycle_check(m, Field::rationals(), hk_prime_xi(k), 2 * k + 1, 3 * k + 2));
    }
}

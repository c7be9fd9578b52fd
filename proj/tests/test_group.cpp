#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "prym/catalog.hpp"
#include "prym/cyclo.hpp"
#include "prym/group.hpp"
#include "tests_common.hpp"

using namespace prym;

TEST_CASE("build_group on a transposition") {
    auto G = build_group({parse_cycles("(1 2)", 2)});
    REQUIRE(G.n == 2);
    REQUIRE(G.order(0) == 1);
    REQUIRE(G.order(1) == 2);
}

TEST_CASE("build_group rejects non-bijections") {
    Perm bad{0, 0};
    REQUIRE_THROWS_AS(build_group({bad}), InvalidPermutation);
}

TEST_CASE("build_group honors the order cap") {
    auto big = parse_cycles("(1 2 3 4 5 6 7 8 9 10)", 10);
    REQUIRE_THROWS_AS(build_group({big}, 5), OrderCapExceeded);
}

TEST_CASE("Z2 x Z4 builds with order 8") {
    auto G = build_group(
        {parse_cycles("(1 2)", 6), parse_cycles("(3 4 5 6)", 6)});
    REQUIRE(G.n == 8);
    std::multiset<int> orders(G.ord_.begin(), G.ord_.end());
    REQUIRE(orders == std::multiset<int>{1, 2, 2, 2, 4, 4, 4, 4});
}

TEST_CASE("associativity spot check on random triples") {
    auto& cat = test_catalog();
    for (auto id : {std::pair{16, 5}, {24, 10}, {48, 32}}) {
        auto G = cat.group(id.first, id.second);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, G->n - 1);
        for (int t = 0; t < 1000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
        }
    }
}

TEST_CASE("identity and inverse laws") {
    auto G = test_catalog().group(24, 9);
    for (int x = 0; x < G->n; ++x) {
        REQUIRE(G->mul(0, x) == x);
        REQUIRE(G->mul(x, 0) == x);
        REQUIRE(G->mul(x, G->inv(x)) == 0);
        REQUIRE(G->n % G->order(x) == 0);
    }
}

TEST_CASE("center of abelian group is everything") {
    auto G = test_catalog().group(16, 5);
    REQUIRE(G->center().size() == 16);
}

TEST_CASE("center of G(12,4) has size 2") {
    auto G = test_catalog().group(12, 4);
    REQUIRE(G->center().size() == 2);
}

TEST_CASE("center of G(108,28) is Z/3 x Z/2") {
    auto G = test_catalog().group(108, 28);
    auto z = G->center();
    REQUIRE(z.size() == 6);
    std::multiset<int> zorders;
    for (int e : z) zorders.insert(G->order(e));
    REQUIRE(zorders == std::multiset<int>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("subgroup generated by nothing is trivial") {
    auto G = test_catalog().group(12, 4);
    REQUIRE(G->subgroup({}) == std::vector<int>{0});
}

TEST_CASE("named subgroups of the worked examples") {
    auto& cat = test_catalog();
    {
        auto G = cat.group(108, 28);
        int g1 = G->gens[0], g2 = G->gens[1], g3 = G->gens[2];
        auto K = G->subgroup({G->mul(g1, g2), g3});
        REQUIRE(K.size() == 6);  // S3
    }
    {
        auto G = cat.group(48, 30);
        int g4 = G->gens[3], g5 = G->gens[4];
        auto H = G->subgroup({g4, g5});
        REQUIRE(H.size() == 4);
    }
}

TEST_CASE("Lagrange for generated subgroups") {
    auto G = test_catalog().group(48, 32);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, G->n - 1);
    for (int t = 0; t < 25; ++t) {
        auto H = G->subgroup({pick(rng), pick(rng)});
        REQUIRE(G->n % H.size() == 0);
    }
}

TEST_CASE("abelianization of abelian groups is itself") {
    auto G = test_catalog().group(16, 5);
    auto ab = abelianization(*G);
    REQUIRE(ab.factors == std::vector<long long>{2, 8});
    std::set<std::vector<int>> images(ab.coords.begin(), ab.coords.end());
    REQUIRE(images.size() == 16);  // injective projection
}

TEST_CASE("abelianization orders of worked groups") {
    auto& cat = test_catalog();
    {
        auto G = cat.group(12, 4);
        auto ab = abelianization(*G);
        long long o = 1;
        for (long long f : ab.factors) o *= f;
        REQUIRE(o == 4);
    }
    {
        auto G = cat.group(48, 32);  // Z/2 x SL(2,3)
        auto ab = abelianization(*G);
        long long o = 1;
        for (long long f : ab.factors) o *= f;
        REQUIRE(o == 6);
        // the SL(2,3) factor alone abelianizes to order 3
        auto S = cat.group(24, 3);
        auto abs_ = abelianization(*S);
        long long os = 1;
        for (long long f : abs_.factors) os *= f;
        REQUIRE(os == 3);
    }
}

TEST_CASE("abelianization projection is a homomorphism") {
    auto G = test_catalog().group(24, 10);
    auto ab = abelianization(*G);
    for (int a = 0; a < G->n; ++a)
        for (int b = 0; b < G->n; ++b) {
            int c = G->mul(a, b);
            for (size_t i = 0; i < ab.factors.size(); ++i)
                REQUIRE((ab.coords[a][i] + ab.coords[b][i]) %
                            ab.factors[i] ==
                        ab.coords[c][i]);
        }
}

TEST_CASE("linear character counts") {
    auto& cat = test_catalog();
    REQUIRE(linear_characters(*cat.group(6, 2)).size() == 6);
    REQUIRE(linear_characters(*cat.group(16, 5)).size() == 16);
    // the SL(2,3) factor contributes 3; the extra central Z/2 doubles it
    REQUIRE(linear_characters(*cat.group(24, 3)).size() == 3);
    REQUIRE(linear_characters(*cat.group(48, 32)).size() == 6);
}

TEST_CASE("linear characters are multiplicative, trivial first") {
    auto G = test_catalog().group(12, 4);
    auto chars = linear_characters(*G);
    REQUIRE(chars.front().is_trivial());
    for (const auto& chi : chars) {
        REQUIRE(chi.exponent[0] == 0);
        for (int a = 0; a < G->n; ++a)
            for (int b = 0; b < G->n; ++b)
                REQUIRE((chi.exponent[a] + chi.exponent[b]) % chi.modulus ==
                        chi.exponent[G->mul(a, b)]);
    }
    std::set<std::vector<int>> distinct;
    for (const auto& chi : chars) distinct.insert(chi.exponent);
    REQUIRE(distinct.size() == chars.size());
}

TEST_CASE("Z/6 character values at a generator exhaust the 6th roots") {
    auto G = test_catalog().group(6, 2);
    int gen = -1;
    for (int x = 0; x < 6; ++x)
        if (G->order(x) == 6) {
            gen = x;
            break;
        }
    auto chars = linear_characters(*G);
    std::set<int> exps;
    for (const auto& chi : chars)
        exps.insert(static_cast<int>(chi.exponent[gen] * (6 / chi.modulus)));
    REQUIRE(exps == std::set<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("linear characters are orthonormal (exact)") {
    auto G = test_catalog().group(16, 3);
    auto chars = linear_characters(*G);
    int N = static_cast<int>(chars.front().modulus);
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = 0; j < chars.size(); ++j) {
            CycloQ s(N);
            for (int x = 0; x < G->n; ++x)
                s = s.add(CycloQ::root(
                    N, chars[i].exponent[x] - chars[j].exponent[x]));
            long long v = s.extract_integer(G->n, "pairing");
            REQUIRE(v == (i == j ? 1 : 0));
        }
}

TEST_CASE("automorphism group sizes") {
    auto& cat = test_catalog();
    REQUIRE(automorphisms(*build_and_keep({parse_cycles("(1 2)", 2)}))
                .size() == 1);
    auto z2z4 = cat.group(8, 2);
    REQUIRE(automorphisms(*z2z4).size() == 8);
    auto z5 = build_and_keep({parse_cycles("(1 2 3 4 5)", 5)});
    REQUIRE(automorphisms(*z5).size() == 4);
}

TEST_CASE("automorphisms preserve orders and fix the identity") {
    auto G = test_catalog().group(16, 10);
    auto auts = automorphisms(*G);
    for (const auto& al : auts) {
        REQUIRE(al[0] == 0);
        for (int x = 0; x < G->n; ++x)
            REQUIRE(G->order(al[x]) == G->order(x));
    }
    // closed under composition
    std::set<std::vector<int16_t>> as(auts.begin(), auts.end());
    for (size_t i = 0; i < std::min<size_t>(auts.size(), 8); ++i)
        for (size_t j = 0; j < std::min<size_t>(auts.size(), 8); ++j) {
            std::vector<int16_t> comp(G->n);
            for (int x = 0; x < G->n; ++x) comp[x] = auts[i][auts[j][x]];
            REQUIRE(as.count(comp) == 1);
        }
}

TEST_CASE("automorphism search cap") {
    auto G = test_catalog().group(16, 5);
    REQUIRE_THROWS_AS(automorphisms(*G, 8), AutSearchCapExceeded);
}

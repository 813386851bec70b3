#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "twwcol/errors.hpp"
#include "twwcol/generators.hpp"
#include "twwcol/reachability.hpp"

using namespace twwcol;

TEST_CASE("weak reachability examples") {
    const LinearOrder id5 = LinearOrder::identity(5);
    CHECK(wreach(path_graph(5), id5, 2, 3) == std::vector<Vertex>{1, 2, 3});
    CHECK(wreach(petersen_graph(), LinearOrder({4, 0, 1, 2, 3, 5, 6, 7, 8, 9}), 3, 4) == std::vector<Vertex>{4});
    CHECK(wreach(cycle_graph(4), LinearOrder::identity(4), 2, 3) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("strong reachability examples") {
    CHECK(sreach(path_graph(5), LinearOrder::identity(5), 3, 2) == std::vector<Vertex>{1, 2});
    const LinearOrder L({3, 1, 4, 0, 2});
    CHECK(sreach(complete_graph(5), L, 1, 0) == std::vector<Vertex>{0, 1, 3, 4});
    CHECK(sreach(cycle_graph(5), LinearOrder::identity(5), 2, 1) == std::vector<Vertex>{0, 1});
}

TEST_CASE("backconnectivity examples") {
    const Graph star = complete_bipartite(1, 4);
    CHECK(backconn(star, LinearOrder({1, 2, 3, 4, 0}), 1, 0) == 4);
    CHECK(backconn(petersen_graph(), LinearOrder::identity(10), 3, 0) == 0);
    // branch vertices first; the last one reaches the other three through subdivisions
    const Graph sk4 = subdivided_clique(4, 1);
    CHECK(backconn(sk4, LinearOrder::identity(10), 2, 3) == 3);
    CHECK_THROWS_AS(backconn(subdivided_clique(8, 2), LinearOrder::identity(64), 3, 7, 3), ResourceLimitError);
}

TEST_CASE("profile examples") {
    const ReachProfile k4 = profile(complete_graph(4), LinearOrder({2, 0, 3, 1}), 1);
    CHECK(k4.wcol == 4);
    CHECK(k4.scol == 4);
    CHECK(k4.adm == 3);
    const ReachProfile p5 = profile(path_graph(5), LinearOrder::identity(5), 2);
    CHECK(p5.scol == 2);
    CHECK(p5.wcol == 3);
    CHECK(p5.adm == 1);
    const ReachProfile empty = profile(Graph(3), LinearOrder::identity(3), 4);
    CHECK(empty.wcol == 1);
    CHECK(empty.scol == 1);
    CHECK(empty.adm == 0);
}

TEST_CASE("reachability agrees with path enumeration") {
    for (unsigned seed = 0; seed < 250; ++seed) {
        const int n = 1 + static_cast<int>(seed % 10);
        const Graph g = oracle::random_graph(n, 0.35, seed);
        const LinearOrder L = oracle::random_order(n, seed);
        const int r = 1 + static_cast<int>(seed % 4);
        const ReachProfile p = profile(g, L, r);
        for (Vertex v = 0; v < n; ++v) {
            REQUIRE(p.vertices[v].wreach == oracle::wreach(g, L, r, v));
            REQUIRE(p.vertices[v].sreach == oracle::sreach(g, L, r, v));
            REQUIRE(p.vertices[v].backconn == oracle::backconn(g, L, r, v));
            REQUIRE(wreach(g, L, r, v) == p.vertices[v].wreach);
        }
    }
}

TEST_CASE("library path enumeration matches the oracle") {
    for (unsigned seed = 0; seed < 100; ++seed) {
        const int n = 2 + static_cast<int>(seed % 8);
        const Graph g = oracle::random_graph(n, 0.4, seed);
        const int r = 1 + static_cast<int>(seed % 4);
        std::size_t expected = 0;
        for (const auto& p : oracle::paths_from(g, 0, r))
            if (p.back() == n - 1) ++expected;
        CHECK(distance_paths(g, 0, n - 1, r).size() == expected);
    }
}

TEST_CASE("reach sets grow with r and respect the chain") {
    for (unsigned seed = 0; seed < 150; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        const Graph g = oracle::random_graph(n, 0.3, seed);
        const LinearOrder L = oracle::random_order(n, seed + 1);
        ReachProfile prev = profile(g, L, 1);
        for (int r = 1; r <= 4; ++r) {
            const ReachProfile p = profile(g, L, r);
            CHECK(p.adm + 1 <= p.scol);
            CHECK(p.scol <= p.wcol);
            CHECK(p.wcol >= prev.wcol);
            CHECK(p.scol >= prev.scol);
            CHECK(p.adm >= prev.adm);
            for (Vertex v = 0; v < n; ++v) {
                const auto& vp = p.vertices[v];
                CHECK(std::includes(vp.wreach.begin(), vp.wreach.end(), vp.sreach.begin(), vp.sreach.end()));
                CHECK(std::binary_search(vp.sreach.begin(), vp.sreach.end(), v));
                CHECK(vp.backconn + 1 <= static_cast<int>(vp.sreach.size()));
                CHECK(std::includes(vp.wreach.begin(), vp.wreach.end(), prev.vertices[v].wreach.begin(),
                                    prev.vertices[v].wreach.end()));
            }
            prev = p;
        }
    }
}

TEST_CASE("exact parameters agree with all orders") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        const int n = 1 + static_cast<int>(seed % 7);
        const Graph g = oracle::random_graph(n, 0.45, seed);
        const int r = 1 + static_cast<int>(seed % 3);
        const oracle::Params want = oracle::exact_params(g, r);
        const ExactResult w = exact_param(g, Param::Wcol, r);
        const ExactResult s = exact_param(g, Param::Scol, r);
        const ExactResult a = exact_param(g, Param::Adm, r);
        REQUIRE(w.value == want.wcol);
        REQUIRE(s.value == want.scol);
        REQUIRE(a.value == want.adm);
        CHECK(profile(g, w.witness, r).wcol == w.value);
        CHECK(profile(g, s.witness, r).scol == s.value);
        CHECK(profile(g, a.witness, r).adm == a.value);
    }
}

TEST_CASE("exact witnesses are the least optimal orders") {
    const Graph g = path_graph(5);
    for (Param p : {Param::Wcol, Param::Scol, Param::Adm}) {
        const ExactResult res = exact_param(g, p, 2);
        std::vector<Vertex> perm{0, 1, 2, 3, 4};
        std::optional<std::vector<Vertex>> first;
        do {
            const ReachProfile prof = profile(g, LinearOrder(perm), 2);
            const int value = p == Param::Wcol ? prof.wcol : p == Param::Scol ? prof.scol : prof.adm;
            if (value == res.value) {
                first = perm;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(first);
        CHECK(res.witness.sequence() == *first);
    }
}

TEST_CASE("exact parameter examples") {
    CHECK(exact_param(path_graph(5), Param::Scol, 2).value == 2);
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= 3; ++r) CHECK(exact_param(complete_graph(n), Param::Scol, r).value == n);
    for (unsigned seed = 0; seed < 80; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const Graph g = oracle::random_graph(n, 0.5, seed);
        const int deg = oracle::degeneracy(g);
        CHECK(exact_param(g, Param::Wcol, 1).value == deg + 1);
        CHECK(exact_param(g, Param::Scol, 1).value == deg + 1);
    }
    CHECK_THROWS_AS(exact_param(cycle_graph(12), Param::Scol, 2), ResourceLimitError);
    CHECK_THROWS_AS(exact_param(petersen_graph(), Param::Wcol, 3, {10, 5}), ResourceLimitError);
}

TEST_CASE("profile emitters") {
    const ReachProfile p = profile(path_graph(3), LinearOrder::identity(3), 2);
    std::ostringstream csv;
    write_profile_csv(csv, p);
    CHECK(csv.str() == "vertex,rank,wreach,sreach,backconn\n1,0,1,1,0\n2,1,2,2,1\n3,2,3,2,1\n");
    std::ostringstream json;
    write_profile_json(json, p);
    const auto doc = nlohmann::json::parse(json.str());
    CHECK(doc["scol"] == 2);
    CHECK(doc["vertices"].size() == 3);
    CHECK(doc["vertices"][1]["backconn"] == 1);
}

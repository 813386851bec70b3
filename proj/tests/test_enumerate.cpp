#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twwcol/enumerate.hpp"

using namespace twwcol;

TEST_CASE("isomorphism class counts") {
    // graphs on n vertices: 1, 2, 4, 11, 34, 156, 1044
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    // connected graphs: 1, 1, 2, 6, 21, 112, 853
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(nonisomorphic_graphs(n, false).size() == all[n - 1]);
        CHECK(nonisomorphic_graphs(n, true).size() == connected[n - 1]);
    }
}

TEST_CASE("canonical codes separate exactly the isomorphism classes") {
    const auto graphs = oracle::all_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); i += 7)
        for (std::size_t j = i + 1; j < graphs.size(); j += 97)
            CHECK((canonical_code(graphs[i]) == canonical_code(graphs[j])) ==
                  oracle::isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("canonical representative round-trips") {
    for (const Graph& g : nonisomorphic_graphs(6, false)) {
        const auto code = canonical_code(g);
        const Graph rep = graph_from_code(6, code);
        CHECK(canonical_code(rep) == code);
        CHECK(oracle::isomorphic(rep, g));
    }
}

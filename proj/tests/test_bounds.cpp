#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "twwcol/bounds.hpp"
#include "twwcol/errors.hpp"
#include "twwcol/generators.hpp"

using namespace twwcol;

TEST_CASE("strong colouring upper bound in both forms") {
    const ScolUpper a = eval_scol_upper(2, 1, 3);
    CHECK(a.exact == 9);
    CHECK(a.simplified == 11);
    const ScolUpper zero = eval_scol_upper(0, 5, 4);
    CHECK(zero.exact == 15);
    CHECK(zero.simplified == 15);
    CHECK(eval_scol_upper(3, 0, 2).exact == 0);
    CHECK(eval_scol_upper(3, 0, 2).simplified == 0);
    // d = 1: the sum has the single term 0^0 = 1
    CHECK(eval_scol_upper(1, 2, 5).exact == 8);
    CHECK(eval_scol_upper(1, 2, 5).simplified == 8);
    CHECK(eval_scol_upper(4, 1, 2).exact == 3 + 4 * (1 + 3));
    for (int d = 2; d <= 9; ++d)
        for (int r = 1; r <= 8; ++r)
            for (int s = 0; s <= 4; ++s) {
                const ScolUpper u = eval_scol_upper(d, s, r);
                CHECK(u.exact <= u.simplified);
            }
    CHECK_THROWS_AS(eval_scol_upper(-1, 1, 1), DomainError);
}

TEST_CASE("case split rows") {
    CHECK(eval_scol_cases(0, 4, 7) == 8);
    CHECK(eval_scol_cases(3, 1, 2) == 12);
    CHECK(eval_scol_cases(2, 2, 9) == 10);
    CHECK(eval_scol_cases(1, 3, 4) == 9);
    CHECK(eval_scol_cases(5, 2, 3) == 3 * 64 * 2);
}

TEST_CASE("weak from strong colouring numbers") {
    CHECK(eval_wcol_from_scols({7}, 1).ceiling == 7);
    CHECK(eval_wcol_from_scols({2, 3}, 2).ceiling == 8);
    CHECK(eval_wcol_from_scols({2, 2, 2, 2}, 4).ceiling == 128);
    // 2^2 * 3^{3/2} = 20.78...
    const WcolFromScols w = eval_wcol_from_scols({1, 3, 1}, 3);
    CHECK(w.ceiling == 21);
    CHECK(w.approx >= 20.784609690826528);
    CHECK(w.approx < 20.7847);
    CHECK(wcol_from_scols_holds(20, {1, 3, 1}, 3));
    CHECK_FALSE(wcol_from_scols_holds(21, {1, 3, 1}, 3));
    CHECK(wcol_from_scols_holds(128, {2, 2, 2, 2}, 4));
    CHECK_FALSE(wcol_from_scols_holds(129, {2, 2, 2, 2}, 4));
}

TEST_CASE("weak colouring and grad upper bounds") {
    CHECK(eval_wcol_upper(0, 1, 1) == 3);
    CHECK(eval_wcol_upper(1, 1, 2) == 32);
    CHECK(eval_wcol_upper(4, 2, 0) == Rational(1, 2));
    CHECK(to_string(eval_wcol_upper(4, 2, 0)) == "1/2");
    CHECK(eval_grad_upper(0, 1, 0) == 3);
    CHECK(eval_grad_upper(1, 1, 1) == 256);
    CHECK(eval_grad_upper(3, 0, 2) == 0);
}

TEST_CASE("lower bound formulas") {
    CHECK(eval_scol_lower_girth(7, 1) == Rational(7, 2));
    CHECK(eval_scol_lower_girth(7, 2) == Rational(35, 8));
    CHECK(eval_scol_lower_girth(7, 3) == Rational(35, 8));
    CHECK(eval_scol_lower_girth(10, 4) == 5 * 8);
    CHECK(to_double(eval_scol_lower_girth(7, 2)) == 4.375);
    CHECK_THROWS_AS(eval_scol_lower_girth(6, 1), DomainError);
    CHECK(eval_lower_combined(14, 1, 1) == Rational(7, 2));
    CHECK(eval_lower_combined(16, 2, 2) == 12);
    CHECK_THROWS_AS(eval_lower_combined(14, 1, 3), DomainError);
    CHECK_THROWS_AS(eval_lower_combined(13, 1, 2), DomainError);
    CHECK(eval_adm_lower_subdiv(2, 4) == 64);
    CHECK(eval_adm_lower_subdiv(3, 4) == 729);
    CHECK_THROWS_AS(eval_adm_lower_subdiv(3, 3), DomainError);
}

TEST_CASE("verification report for P4") {
    const Graph p4 = path_graph(4);
    const TwwResult t = exact_tww(p4);
    VerifyOptions o;
    o.instance = "p4";
    o.r_max = 4;
    const BoundReport rep = verify_instance(p4, t.witness, o);
    CHECK(rep.d == 1);
    CHECK(rep.tww == 1);
    CHECK(rep.s == 1);
    CHECK_FALSE(rep.violated());
    for (const auto& row : rep.rows) CHECK(row.order_scol <= 3);
    for (const auto& c : rep.checks) CHECK(c.verdict != Verdict::Discrepancy);
}

TEST_CASE("verification report flags the clique row as a discrepancy") {
    const Graph k5 = complete_graph(5);
    const BoundReport rep = verify_instance(k5, exact_tww(k5).witness);
    CHECK_FALSE(rep.violated());
    int discrepancies = 0;
    for (const auto& c : rep.checks)
        if (c.name == "scol-cases") {
            CHECK(c.verdict == Verdict::Discrepancy);
            CHECK(c.value == 5);
            CHECK(c.bound == "4");
            ++discrepancies;
        }
    CHECK(discrepancies == 3);
}

TEST_CASE("verification of a disconnected graph and of an edgeless graph") {
    const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    const BoundReport rep = verify_instance(g, greedy_sequence(g));
    CHECK(rep.order == "nice-per-component");
    CHECK_FALSE(rep.violated());
    const Graph empty(3);
    const BoundReport e = verify_instance(empty, greedy_sequence(empty));
    CHECK(e.s == 0);
    CHECK_FALSE(e.violated());
}

TEST_CASE("verification on a lift skips exact parameters") {
    Rng rng(3);
    const LiftTower tower = random_tower(complete_graph(4), 2, rng);
    VerifyOptions o;
    o.r_max = 2;
    const BoundReport rep = verify_instance(tower.top(), undo_lift_witness(tower), o);
    CHECK(rep.n == 16);
    CHECK_FALSE(rep.tww.has_value());
    CHECK_FALSE(rep.rows[0].exact_scol.has_value());
    CHECK_FALSE(rep.violated());
}

TEST_CASE("report writers") {
    const Graph p4 = path_graph(4);
    const std::vector<BoundReport> reps{verify_instance(p4, exact_tww(p4).witness)};
    std::ostringstream json, csv;
    write_reports_json(json, reps);
    write_reports_csv(csv, reps);
    const auto doc = nlohmann::json::parse(json.str());
    CHECK(doc.size() == 1);
    CHECK(doc[0]["violated"] == false);
    CHECK(doc[0]["rows"].size() == 3);
    CHECK(csv.str().rfind("instance,n,m,d,tww,s,r,check,basis,value,bound,verdict,note\n", 0) == 0);
}

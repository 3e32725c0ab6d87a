#include <sstream>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/decomposition.hpp"
#include "stc/errors.hpp"
#include "stc/gadgets.hpp"
#include "stc/graph_io.hpp"
#include "stc/oracle.hpp"
#include "stc/solution_io.hpp"
#include "stc/solve.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_gr_string(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return 0;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("gr roundtrip") {
    const std::string c4 = "p stc 4 4\n1 2\n2 3\n3 4\n1 4\n";
    auto f = parse_gr_string(c4);
    CHECK_FALSE(f.weighted);
    CHECK(f.graph.graph.n() == 4);
    CHECK(write_gr(f.graph.graph) == c4);
    auto commented = parse_gr_string("c a comment\np stc 4 4\n1 2\n\n2 3\nc mid\n3 4\n1 4\n");
    CHECK(write_gr(commented.graph.graph) == c4);
}

TEST_CASE("weighted gr roundtrip") {
    const std::string w = "p stcw 3 2\n1 2 2 5\n2 3 1 1\n";
    auto f = parse_gr_string(w);
    CHECK(f.weighted);
    CHECK(f.graph.wt2[0] == 5);
    CHECK(write_gr(f.graph) == w);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("p stc 3 2\n1 2\n2 2\n") == 3);
    CHECK(parse_error_line("p stc 3 2\n1 2\n1 2\n") == 3);
    CHECK(parse_error_line("p stc 3 1\n1 4\n") == 2);
    CHECK(parse_error_line("1 2\n") == 1);
    CHECK(parse_error_line("p stc 3 2\n1 2\n") > 0);
    CHECK(parse_error_line("p stc 3 1\n1 x\n") == 2);
    CHECK(parse_error_line("p stcw 2 1\n1 2 0 1\n") == 2);
    CHECK(parse_error_line("p stc 2 1\np stc 2 1\n1 2\n") == 2);
    CHECK(parse_error_line("p graph 2 1\n1 2\n") == 1);
}

TEST_CASE("vertex lists") {
    std::istringstream in("# modulator\n1 3\nc more\n5\n");
    CHECK(parse_vertex_list(in, 5) == std::vector<int>{0, 2, 4});
    std::istringstream bad("1 6\n");
    CHECK_THROWS_AS(parse_vertex_list(bad, 5), ParseError);
    std::istringstream rep("2 2\n");
    CHECK_THROWS_AS(parse_vertex_list(rep, 5), ParseError);
}

TEST_CASE("td roundtrip and coverage violation") {
    Graph c4 = cycle(4);
    auto td = decompose(c4);
    auto text = write_td(td, 4);
    CHECK(write_td(parse_td(text, 4), 4) == text);
    auto broken = parse_td("s td 2 2 4\nb 1 1 2\nb 2 3 4\n1 2\n", 4);
    auto why = validate_td(c4, broken);
    REQUIRE(why);
    CHECK(why->find("edge-coverage") != std::string::npos);
    CHECK_THROWS_AS(parse_td("s td 1 2 4\nb 1 1 2\n", 5), ParseError);
}

TEST_CASE("solution json key order and roundtrip") {
    Graph g = grid_graph(3);
    auto o = stc_exact(g);
    DoubleWeightedGraph w(g);
    auto sol = make_solution(w, o.tree, "oracle", true);
    auto text = solution_to_json(sol);
    auto pk = text.find("\"k\""), pe = text.find("\"edges\""), pc = text.find("\"per_edge_congestion\""),
         pa = text.find("\"algorithm\""), pf = text.find("\"certified\"");
    CHECK(pk < pe);
    CHECK(pe < pc);
    CHECK(pc < pa);
    CHECK(pa < pf);
    auto back = parse_solution_json(text);
    CHECK(back.k == 3);
    CHECK(solution_to_json(back) == text);
    CHECK_FALSE(verify_solution(w, back));
}

TEST_CASE("tampered solutions are caught") {
    Graph g = grid_graph(3);
    DoubleWeightedGraph w(g);
    auto sol = make_solution(w, stc_exact(g).tree, "oracle", true);
    auto lower_k = sol;
    lower_k.k = 2;
    CHECK(verify_solution(w, lower_k));
    auto bad_entry = sol;
    bad_entry.per_edge.begin()->second += 1;
    CHECK(verify_solution(w, bad_entry));
    auto not_tree = sol;
    not_tree.edges.pop_back();
    CHECK(verify_solution(w, not_tree));
    auto non_edge = sol;
    non_edge.edges.back() = {0, 8};
    CHECK(verify_solution(w, non_edge));
    CHECK_THROWS_AS(parse_solution_json("{\"k\": 1"), InvalidInput);
    CHECK_THROWS_AS(parse_solution_json("{\"edges\": []}"), InvalidInput);
}

TEST_CASE("solve picks a method and verifies") {
    SolveConfig cfg;
    auto tree = solve(path(5), cfg);
    CHECK(tree.algorithm == Algorithm::Trivial);
    CHECK(tree.k == 1);
    auto cyc = solve(cycle(20), cfg);
    CHECK(cyc.algorithm == Algorithm::Cycle);
    CHECK(cyc.k == 2);
    CHECK(cyc.certified);
    auto small = solve(grid_graph(3), cfg);
    CHECK(small.algorithm == Algorithm::Oracle);
    CHECK(small.k == 3);

    SolveConfig dp;
    dp.algorithm = Algorithm::Dp;
    dp.k = 2;
    auto no = solve(grid_graph(3), dp);
    CHECK(no.answer == Answer::No);
    CHECK(no.certified);
    dp.k = 3;
    auto yes = solve(grid_graph(3), dp);
    CHECK(yes.answer == Answer::Yes);
    REQUIRE(yes.tree);
    CHECK(congestion_report(grid_graph(3), *yes.tree).max_congestion <= 3);

    SolveConfig withmod;
    withmod.modulator = std::vector<int>{2};
    auto vi = solve(path(5), withmod);
    CHECK(vi.k == 1);
    CHECK(parse_algorithm("dp") == Algorithm::Dp);
    CHECK(algorithm_name(Algorithm::Fes) == "fes");
    CHECK_THROWS_AS(parse_algorithm("magic"), InvalidInput);
}

}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adjflow/graph.hpp"
#include "adjflow/types.hpp"

#include <string>
#include <vector>

using namespace adjflow;

TEST_CASE("edge list parsing and vertex order")
{
	const Graph g = parse_edge_list("b a\n# comment line\n\na c 2.5\n");
	CHECK(g.vertex_count() == 3);
	CHECK(g.edge_count() == 2);
	// first-appearance order
	CHECK(g.label(0) == "b");
	CHECK(g.label(1) == "a");
	CHECK(g.label(2) == "c");
	CHECK(g.is_weighted());
	CHECK(g.edges()[1].weight == 2.5);
	CHECK(g.has_edge(0, 1));
	CHECK(!g.has_edge(0, 2));
	CHECK(g.find_vertex("c").value() == 2);
	CHECK(!g.find_vertex("zzz").has_value());
}

TEST_CASE("edge list rejects malformed input")
{
	CHECK_THROWS_AS((void)parse_edge_list(""), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a a\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a b\nb a\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a b 0\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a b -1\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a b xyz\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("a b 1 extra\n"), InputError);
	CHECK_THROWS_AS((void)parse_edge_list("loner\n"), InputError);
}

TEST_CASE("graph mutation guards")
{
	Graph g;
	g.add_vertex("a");
	g.add_vertex("b");
	CHECK_THROWS_AS(g.add_vertex("a"), InputError);
	g.add_edge("a", "b");
	CHECK_THROWS_AS(g.add_edge("a", "b"), InputError);
	CHECK_THROWS_AS(g.add_edge("b", "a"), InputError);
	CHECK_THROWS_AS(g.add_edge("a", "a"), InputError);
	CHECK_THROWS_AS(g.add_edge("a", "nope"), InputError);
	CHECK_THROWS_AS(g.add_edge("a", "b", -2.0), InputError);
	CHECK_THROWS_AS((void)g.vertex("nope"), InputError);
	CHECK(g.vertex("b") == 1);
}

TEST_CASE("adjacency and degree matrices")
{
	const Graph p3 = path_graph(3);
	Matrix a(3, 3);
	a << 0, 1, 0, 1, 0, 1, 0, 1, 0;
	CHECK((adjacency_matrix(p3) - a).cwiseAbs().maxCoeff() == 0.0);
	Matrix d(3, 3);
	d << 1, 0, 0, 0, 2, 0, 0, 0, 1;
	CHECK((degree_matrix(p3) - d).cwiseAbs().maxCoeff() == 0.0);

	const Matrix ac3 = adjacency_matrix(cycle_graph(3));
	CHECK(ac3.diagonal().cwiseAbs().maxCoeff() == 0.0);
	CHECK(ac3.sum() == 6.0);
}

TEST_CASE("incidence matrices factor the Laplacians")
{
	const Graph p3 = path_graph(3);
	const IntMatrix j = incidence(p3, IncidenceKind::Signless);
	IntMatrix jexp(3, 2);
	jexp << 1, 0, 1, 1, 0, 1;
	CHECK(j == jexp);

	const IntMatrix o = incidence(p3, IncidenceKind::Oriented);
	IntMatrix oexp(3, 2);
	oexp << 1, 0, -1, 1, 0, -1;
	CHECK(o == oexp);

	for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(4)}) {
		const Matrix a = adjacency_matrix(g);
		const Matrix d = degree_matrix(g);
		const IntMatrix js = incidence(g, IncidenceKind::Signless);
		const IntMatrix io = incidence(g, IncidenceKind::Oriented);
		CHECK(((js * js.transpose()).cast<double>() - (d + a))
		          .cwiseAbs()
		          .maxCoeff() == 0.0);
		CHECK(((io * io.transpose()).cast<double>() - (d - a))
		          .cwiseAbs()
		          .maxCoeff() == 0.0);
		CHECK(io.cwiseAbs() == js);
	}
}

TEST_CASE("line graphs of the small named families")
{
	// L(P_4) = P_3
	const LineGraphMap lp4 = line_graph(path_graph(4));
	CHECK(lp4.line.vertex_count() == 3);
	CHECK(lp4.line.edge_count() == 2);
	CHECK(lp4.line.label(0) == "v1-v2");
	CHECK(lp4.line.label(1) == "v2-v3");
	CHECK(lp4.line.label(2) == "v3-v4");

	// L(C_3) = C_3 and L(K_{1,3}) = K_3: same graph, different pre-lines
	const LineGraphMap lc3 = line_graph(cycle_graph(3));
	const LineGraphMap lstar = line_graph(star_graph(3));
	CHECK((adjacency_matrix(lc3.line) - adjacency_matrix(lstar.line))
	          .cwiseAbs()
	          .maxCoeff() == 0.0);
	CHECK(lc3.line.edge_count() == 3);

	// the diamond's line graph is the 4-wheel: 5 vertices, 8 edges
	Graph diamond;
	for (const char* l : {"a", "b", "c", "d"})
		diamond.add_vertex(l);
	diamond.add_edge("b", "c");
	diamond.add_edge("a", "b");
	diamond.add_edge("a", "c");
	diamond.add_edge("c", "d");
	diamond.add_edge("b", "d");
	const LineGraphMap ld = line_graph(diamond);
	CHECK(ld.line.vertex_count() == 5);
	CHECK(ld.line.edge_count() == 8);
	CHECK(line_graph_edge_count(diamond) == 8);
	CHECK(ld.line.degree(0) == 4); // the shared edge b-c touches all others

	for (int v = 0; v < ld.line.vertex_count(); ++v)
		CHECK(degree_of_line_vertex(ld, v) == ld.line.degree(v));
}

TEST_CASE("gram identity on the named families")
{
	for (const Graph& h : {path_graph(6), cycle_graph(5), star_graph(4),
	                       complete_graph(5)}) {
		const LineGraphMap m = line_graph(h);
		const IntMatrix j = incidence(h, IncidenceKind::Signless);
		const IntMatrix gram = j.transpose() * j;
		const Matrix a = adjacency_matrix(m.line);
		for (Eigen::Index r = 0; r < a.rows(); ++r)
			for (Eigen::Index c = 0; c < a.cols(); ++c)
				CHECK(a(r, c) ==
				      static_cast<double>(gram(r, c) - (r == c ? 2 : 0)));
	}
}

TEST_CASE("bipartiteness detection")
{
	const BipartiteResult even = is_bipartite(cycle_graph(8));
	CHECK(even.bipartite);
	CHECK(even.beta() == 1);
	const Graph c8 = cycle_graph(8);
	for (const Edge& e : c8.edges())
		CHECK(even.coloring[e.u] != even.coloring[e.v]);

	CHECK(!is_bipartite(cycle_graph(7)).bipartite);
	CHECK(is_bipartite(path_graph(9)).bipartite);
	CHECK(is_bipartite(star_graph(5)).bipartite);
	CHECK(!is_bipartite(complete_graph(4)).bipartite);
}

TEST_CASE("minus-two multiplicity formula on closed forms")
{
	CHECK(minus_two_multiplicity_formula(path_graph(4)) == 0);
	CHECK(minus_two_multiplicity_formula(cycle_graph(4)) == 1);
	CHECK(minus_two_multiplicity_formula(cycle_graph(5)) == 0);
	CHECK(minus_two_multiplicity_formula(cycle_graph(6)) == 1);
	CHECK(minus_two_multiplicity_formula(complete_graph(4)) == 2);
	CHECK(minus_two_multiplicity_formula(star_graph(7)) == 0);

	Graph two_parts;
	for (const char* l : {"a", "b", "c", "d"})
		two_parts.add_vertex(l);
	two_parts.add_edge("a", "b");
	two_parts.add_edge("c", "d");
	CHECK(!two_parts.is_connected());
	CHECK_THROWS_AS((void)minus_two_multiplicity_formula(two_parts), InputError);
}

TEST_CASE("connectivity, degrees and regularity")
{
	const Graph c5 = cycle_graph(5);
	CHECK(c5.is_connected());
	CHECK(c5.is_regular());
	CHECK(c5.max_degree() == 2);
	CHECK(c5.average_degree() == doctest::Approx(2.0));

	const Graph s3 = star_graph(3);
	CHECK(!s3.is_regular());
	CHECK(s3.max_degree() == 3);
	CHECK(s3.degree(0) == 3);
	CHECK(s3.neighbors(0) == std::vector<int>{1, 2, 3});
	CHECK(degree_variation(s3) == 2);
	CHECK(degree_variation(path_graph(3)) == 1);
	CHECK(degree_variation(cycle_graph(4)) == 0);
}

TEST_CASE("graph factories")
{
	CHECK(path_graph(1).vertex_count() == 1);
	CHECK(path_graph(1).edge_count() == 0);
	CHECK(cycle_graph(3).edge_count() == 3);
	CHECK_THROWS_AS((void)cycle_graph(2), InputError);
	CHECK(star_graph(4).vertex_count() == 5);
	CHECK(star_graph(4).label(0) == "c");
	CHECK(complete_graph(5).edge_count() == 10);
}

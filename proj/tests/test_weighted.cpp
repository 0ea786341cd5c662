#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adjflow/graph.hpp"
#include "adjflow/spectral.hpp"
#include "adjflow/weighted.hpp"

#include <cmath>
#include <map>

using namespace adjflow;

namespace {

double max_abs(const Matrix& m)
{
	return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("vertex-weight parsing")
{
	const auto w = parse_vertex_weights("# weights\nb 2.5\n\na 1\nc 0.75\n");
	REQUIRE(w.size() == 3);
	CHECK(w.at("a") == 1.0);
	CHECK(w.at("b") == 2.5);
	CHECK(w.at("c") == 0.75);

	CHECK_THROWS_AS((void)parse_vertex_weights("a 0"), InputError);
	CHECK_THROWS_AS((void)parse_vertex_weights("a -1"), InputError);
	CHECK_THROWS_AS((void)parse_vertex_weights("a x"), InputError);
	CHECK_THROWS_AS((void)parse_vertex_weights("a"), InputError);
	CHECK_THROWS_AS((void)parse_vertex_weights("a 1 2"), InputError);
	CHECK_THROWS_AS((void)parse_vertex_weights("a 1\na 2"), InputError);
	CHECK(parse_vertex_weights("# nothing but comments\n").empty());
}

TEST_CASE("system construction and label-map equivalence")
{
	const Graph p3 = path_graph(3);
	Vector c(3);
	c << 2.0, 3.0, 5.0;
	const WeightedLineSystem by_index = make_weighted_line_system(p3, c);
	const WeightedLineSystem by_label = make_weighted_line_system(
	    p3, {{"v1", 2.0}, {"v2", 3.0}, {"v3", 5.0}});
	CHECK((by_index.c - by_label.c).cwiseAbs().maxCoeff() == 0.0);
	CHECK((by_index.gamma - by_label.gamma).cwiseAbs().maxCoeff() == 0.0);
	CHECK(max_abs(line_weighted_adjacency(by_index) -
	              line_weighted_adjacency(by_label)) == 0.0);

	CHECK(by_index.c_min == 2.0);
	CHECK(by_index.c_max == 5.0);
	// gamma(e) = c(v') + c(w') for e = v'w'
	CHECK(by_index.gamma(0) == 5.0);  // v1v2
	CHECK(by_index.gamma(1) == 8.0);  // v2v3
	// weighted line degree c(v')(deg v'-1) + c(w')(deg w'-1)
	CHECK(by_index.weighted_line_degree(0) == 3.0); // 2*0 + 3*1
	CHECK(by_index.weighted_line_degree(1) == 3.0); // 3*1 + 5*0
	CHECK(weighted_degree(by_index, 0) == 3.0);

	// A_C couples the two line vertices through the shared vertex v2.
	const Matrix ac = line_weighted_adjacency(by_index);
	REQUIRE(ac.rows() == 2);
	CHECK(ac(0, 0) == 0.0);
	CHECK(ac(0, 1) == 3.0);
	CHECK(ac(1, 0) == 3.0);

	Vector wrong(2);
	wrong << 1.0, 1.0;
	CHECK_THROWS_AS((void)make_weighted_line_system(p3, wrong), InputError);
	Vector nonpos(3);
	nonpos << 1.0, 0.0, 1.0;
	CHECK_THROWS_AS((void)make_weighted_line_system(p3, nonpos),
	                InputError);
	CHECK_THROWS_AS((void)make_weighted_line_system(
	                    p3, {{"v1", 1.0}, {"v2", 1.0}}),
	                InputError);
	CHECK_THROWS_AS((void)make_weighted_line_system(
	                    p3, {{"v1", 1.0}, {"v2", 1.0}, {"nope", 1.0}}),
	                InputError);
}

TEST_CASE("triangle line system is the weighted complete graph")
{
	// L(C3) = K3; the coupling through vertex vk carries weight c(vk).
	const Graph c3 = cycle_graph(3);
	Vector c(3);
	c << 1.0, 2.0, 3.0;
	const WeightedLineSystem s = make_weighted_line_system(c3, c);
	const Matrix ac = line_weighted_adjacency(s);
	REQUIRE(ac.rows() == 3);
	// edges in order: v1v2, v2v3, v3v1; shared endpoints v2, v3, v1.
	CHECK(ac(0, 1) == 2.0);
	CHECK(ac(1, 2) == 3.0);
	CHECK(ac(0, 2) == 1.0);
	CHECK(ac.diagonal().isZero(0.0));

	// Quadratic form identity:
	//   u^T A_C u = sum_v c(v) (J u)_v^2 - sum_e gamma(e) u_e^2
	Vector u(3);
	u << 0.3, -1.1, 0.7;
	const Matrix j = incidence(c3, IncidenceKind::Signless).cast<double>();
	const Vector ju = j * u;
	double rhs = 0.0;
	for (int v = 0; v < 3; ++v)
		rhs += c(v) * ju(v) * ju(v);
	for (int e = 0; e < 3; ++e)
		rhs -= s.gamma(e) * u(e) * u(e);
	CHECK(u.dot(ac * u) == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("spectral enclosure of the weighted line adjacency")
{
	const Graph star = star_graph(4);
	Vector c(5);
	c << 2.0, 0.5, 1.5, 1.0, 3.0;
	const WeightedLineSystem s = make_weighted_line_system(star, c);
	const EigenDecomposition ed = sym_eigen(line_weighted_adjacency(s));
	const double lo = ed.values(0);
	const double hi = ed.values(ed.values.size() - 1);
	CHECK(lo >= -s.gamma.maxCoeff() - 1e-10);
	CHECK(hi <= s.weighted_line_degree.maxCoeff() + 1e-10);
}

TEST_CASE("unit weights recover the plain line graph")
{
	const Graph h = cycle_graph(5);
	const WeightedLineSystem s =
	    make_weighted_line_system(h, Vector::Ones(5));
	const LineGraphMap m = line_graph(h);
	CHECK(max_abs(line_weighted_adjacency(s) -
	              adjacency_matrix(m.line)) == 0.0);
	for (int v = 0; v < m.line.vertex_count(); ++v)
		CHECK(weighted_degree(s, v) ==
		      static_cast<double>(degree_of_line_vertex(m, v)));
}

TEST_CASE("edge-weighted norms and the degree bound")
{
	Graph star;
	star.add_vertex("c");
	star.add_vertex("x");
	star.add_vertex("y");
	star.add_vertex("z");
	star.add_edge("c", "x", 1.0);
	star.add_edge("c", "y", 2.0);
	star.add_edge("c", "z", 3.0);
	const Matrix a = weighted_adjacency_general(star);
	CHECK(a(0, 1) == 1.0);
	CHECK(a(0, 2) == 2.0);
	CHECK(a(0, 3) == 3.0);
	CHECK(max_weighted_degree(star) == 6.0);
	CHECK(operator_norm(a, Norm::Inf) == 6.0);
	CHECK(operator_norm(a, Norm::One) == 6.0);
	// ||A||_2 = sqrt(1+4+9) for a weighted star
	CHECK(operator_norm(a, Norm::Two) ==
	      doctest::Approx(std::sqrt(14.0)).epsilon(1e-12));
	// p-norm interpolation: the 2-norm is below the 1/inf bound
	CHECK(operator_norm(a, Norm::Two) <= 6.0 + 1e-12);

	// Single weighted edge: every norm is the weight itself.
	Graph e;
	e.add_vertex("a");
	e.add_vertex("b");
	e.add_edge("a", "b", 0.5);
	const Matrix ae = weighted_adjacency_general(e);
	CHECK(operator_norm(ae, Norm::One) == 0.5);
	CHECK(operator_norm(ae, Norm::Two) ==
	      doctest::Approx(0.5).epsilon(1e-12));
	CHECK(operator_norm(ae, Norm::Inf) == 0.5);
	CHECK(max_weighted_degree(e) == 0.5);
}

TEST_CASE("lower bound of the norm sandwich needs weights at least one")
{
	// With all weights >= 1, (max weighted degree)^{1/2} bounds ||A||_2
	// from below; the single edge with weight 1/2 above shows why the
	// restriction matters: sqrt(1/2) > 1/2.
	Graph g;
	g.add_vertex("a");
	g.add_vertex("b");
	g.add_vertex("c");
	g.add_edge("a", "b", 1.5);
	g.add_edge("b", "c", 2.5);
	const Matrix a = weighted_adjacency_general(g);
	const double d = max_weighted_degree(g);
	CHECK(operator_norm(a, Norm::Two) >= std::sqrt(d) - 1e-12);
	CHECK(operator_norm(a, Norm::Two) <= d + 1e-12);
}

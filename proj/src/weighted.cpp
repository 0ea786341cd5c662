#include "adjflow/weighted.hpp"

#include <cmath>
#include <sstream>

namespace adjflow {

WeightedLineSystem make_weighted_line_system(const Graph& h, const Vector& c) {
	if (!h.is_connected())
		throw InputError("weighted line system requires a connected pre-line graph");
	if (c.size() != h.vertex_count())
		throw InputError("vertex-weight vector has wrong dimension");
	for (int v = 0; v < c.size(); ++v)
		if (!std::isfinite(c[v]) || c[v] <= 0)
			throw InputError("vertex weight for '" + h.label(v) +
			                 "' must be positive");

	WeightedLineSystem s;
	s.map = line_graph(h);
	s.c = c;
	s.c_min = c.minCoeff();
	s.c_max = c.maxCoeff();
	int m = s.map.line.vertex_count();
	s.gamma = Vector(m);
	s.weighted_line_degree = Vector(m);
	const Graph& pre = s.map.pre_line;
	for (int v = 0; v < m; ++v) {
		const Edge& e = pre.edges()[v];
		s.gamma[v] = c[e.u] + c[e.v];
		s.weighted_line_degree[v] = c[e.u] * (pre.degree(e.u) - 1) +
		                            c[e.v] * (pre.degree(e.v) - 1);
	}
	return s;
}

WeightedLineSystem make_weighted_line_system(
    const Graph& h, const std::map<std::string, double>& c_by_label) {
	Vector c(h.vertex_count());
	for (int v = 0; v < h.vertex_count(); ++v) {
		auto it = c_by_label.find(h.label(v));
		if (it == c_by_label.end())
			throw InputError("no weight given for vertex '" + h.label(v) + "'");
		c[v] = it->second;
	}
	for (const auto& [label, value] : c_by_label) {
		(void)value;
		if (!h.find_vertex(label))
			throw InputError("weight for unknown vertex '" + label + "'");
	}
	return make_weighted_line_system(h, c);
}

std::map<std::string, double> parse_vertex_weights(std::string_view text) {
	std::map<std::string, double> weights;
	std::istringstream in{std::string(text)};
	std::string raw;
	int lineno = 0;
	while (std::getline(in, raw)) {
		++lineno;
		if (size_t hash = raw.find('#'); hash != std::string::npos)
			raw.erase(hash);
		std::istringstream fields(raw);
		std::string v, tok, extra;
		fields >> v;
		if (v.empty())
			continue;
		fields >> tok >> extra;
		if (tok.empty() || !extra.empty())
			throw InputError("line " + std::to_string(lineno) +
			                 ": expected '<vertex> <weight>'");
		size_t used = 0;
		double value = 0;
		try {
			value = std::stod(tok, &used);
		} catch (const std::exception&) {
			used = std::string::npos;
		}
		if (used != tok.size() || !std::isfinite(value) || value <= 0)
			throw InputError("line " + std::to_string(lineno) +
			                 ": weight must be a positive number");
		if (!weights.emplace(v, value).second)
			throw InputError("line " + std::to_string(lineno) +
			                 ": duplicate weight for '" + v + "'");
	}
	return weights;
}

Matrix weighted_adjacency_general(const Graph& g) {
	return adjacency_matrix(g);
}

double max_weighted_degree(const Graph& g) {
	if (g.vertex_count() == 0)
		return 0.0;
	return adjacency_matrix(g).rowwise().sum().maxCoeff();
}

Matrix line_weighted_adjacency(const WeightedLineSystem& s) {
	const Graph& pre = s.map.pre_line;
	const Graph& line = s.map.line;
	int m = line.vertex_count();
	Matrix a = Matrix::Zero(m, m);
	for (const Edge& le : line.edges()) {
		// Distinct edges of a simple graph share exactly one endpoint.
		const Edge& e1 = pre.edges()[le.u];
		const Edge& e2 = pre.edges()[le.v];
		int common = (e1.u == e2.u || e1.u == e2.v) ? e1.u : e1.v;
		a(le.u, le.v) = a(le.v, le.u) = s.c[common];
	}
	return a;
}

double weighted_degree(const WeightedLineSystem& s, int line_vertex) {
	if (line_vertex < 0 || line_vertex >= s.map.line.vertex_count())
		throw InputError("unknown line vertex");
	return s.weighted_line_degree[line_vertex];
}

} // namespace adjflow

#include "adjflow/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace adjflow {

namespace {

std::string trimmed(std::string_view s) {
	size_t b = s.find_first_not_of(" \t\r");
	if (b == std::string_view::npos)
		return {};
	size_t e = s.find_last_not_of(" \t\r");
	return std::string(s.substr(b, e - b + 1));
}

} // namespace

int Graph::add_vertex(const std::string& label) {
	if (label.empty())
		throw InputError("empty vertex label");
	if (find_vertex(label))
		throw InputError("duplicate vertex label '" + label + "'");
	labels_.push_back(label);
	adj_.emplace_back();
	return static_cast<int>(labels_.size()) - 1;
}

int Graph::ensure_vertex(const std::string& label) {
	if (auto i = find_vertex(label))
		return *i;
	return add_vertex(label);
}

void Graph::add_edge(const std::string& u, const std::string& v, double weight) {
	int i = vertex(u);
	int j = vertex(v);
	if (i == j)
		throw InputError("self-loop at vertex '" + u + "'");
	if (has_edge(i, j))
		throw InputError("duplicate edge " + u + " " + v);
	if (!std::isfinite(weight) || weight <= 0)
		throw InputError("edge " + u + " " + v + " has non-positive weight");
	edges_.push_back({i, j, weight});
	adj_[i].insert(std::lower_bound(adj_[i].begin(), adj_[i].end(), j), j);
	adj_[j].insert(std::lower_bound(adj_[j].begin(), adj_[j].end(), i), i);
}

const std::string& Graph::label(int v) const {
	if (v < 0 || v >= vertex_count())
		throw InputError("vertex index out of range");
	return labels_[v];
}

std::optional<int> Graph::find_vertex(std::string_view label) const {
	for (size_t i = 0; i < labels_.size(); ++i)
		if (labels_[i] == label)
			return static_cast<int>(i);
	return std::nullopt;
}

int Graph::vertex(std::string_view label) const {
	if (auto i = find_vertex(label))
		return *i;
	throw InputError("unknown vertex '" + std::string(label) + "'");
}

bool Graph::has_edge(int u, int v) const {
	return edge_index(u, v).has_value();
}

std::optional<int> Graph::edge_index(int u, int v) const {
	for (size_t e = 0; e < edges_.size(); ++e) {
		const Edge& ed = edges_[e];
		if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u))
			return static_cast<int>(e);
	}
	return std::nullopt;
}

const std::vector<int>& Graph::neighbors(int v) const {
	if (v < 0 || v >= vertex_count())
		throw InputError("vertex index out of range");
	return adj_[v];
}

int Graph::degree(int v) const {
	return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
	int d = 0;
	for (int v = 0; v < vertex_count(); ++v)
		d = std::max(d, degree(v));
	return d;
}

double Graph::average_degree() const {
	if (vertex_count() == 0)
		return 0.0;
	return 2.0 * edge_count() / vertex_count();
}

bool Graph::is_regular() const {
	for (int v = 1; v < vertex_count(); ++v)
		if (degree(v) != degree(0))
			return false;
	return true;
}

bool Graph::is_connected() const {
	int n = vertex_count();
	if (n == 0)
		return false;
	std::vector<char> seen(n, 0);
	std::vector<int> stack{0};
	seen[0] = 1;
	int count = 1;
	while (!stack.empty()) {
		int v = stack.back();
		stack.pop_back();
		for (int w : adj_[v])
			if (!seen[w]) {
				seen[w] = 1;
				++count;
				stack.push_back(w);
			}
	}
	return count == n;
}

bool Graph::is_weighted() const {
	return std::any_of(edges_.begin(), edges_.end(),
	                   [](const Edge& e) { return e.weight != 1.0; });
}

Graph parse_edge_list(std::string_view text) {
	Graph g;
	std::istringstream in{std::string(text)};
	std::string raw;
	int lineno = 0;
	while (std::getline(in, raw)) {
		++lineno;
		if (size_t hash = raw.find('#'); hash != std::string::npos)
			raw.erase(hash);
		std::string line = trimmed(raw);
		if (line.empty())
			continue;
		std::istringstream fields(line);
		std::string u, v, wtok, extra;
		fields >> u >> v;
		if (v.empty())
			throw InputError("line " + std::to_string(lineno) +
			                 ": expected '<u> <v> [weight]'");
		fields >> wtok >> extra;
		if (!extra.empty())
			throw InputError("line " + std::to_string(lineno) +
			                 ": too many fields");
		double weight = 1.0;
		if (!wtok.empty()) {
			size_t used = 0;
			try {
				weight = std::stod(wtok, &used);
			} catch (const std::exception&) {
				used = std::string::npos;
			}
			if (used != wtok.size() || !std::isfinite(weight))
				throw InputError("line " + std::to_string(lineno) +
				                 ": bad weight '" + wtok + "'");
		}
		try {
			g.ensure_vertex(u);
			g.ensure_vertex(v);
			g.add_edge(u, v, weight);
		} catch (const InputError& err) {
			throw InputError("line " + std::to_string(lineno) + ": " +
			                 err.what());
		}
	}
	if (g.vertex_count() == 0)
		throw InputError("edge list is empty");
	return g;
}

Graph load_edge_list(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_edge_list(buf.str());
}

Matrix adjacency_matrix(const Graph& g) {
	int n = g.vertex_count();
	Matrix a = Matrix::Zero(n, n);
	for (const Edge& e : g.edges()) {
		a(e.u, e.v) = e.weight;
		a(e.v, e.u) = e.weight;
	}
	return a;
}

Matrix degree_matrix(const Graph& g) {
	int n = g.vertex_count();
	Matrix d = Matrix::Zero(n, n);
	for (int v = 0; v < n; ++v)
		d(v, v) = g.degree(v);
	return d;
}

IntMatrix incidence(const Graph& g, IncidenceKind kind) {
	int n = g.vertex_count();
	int m = g.edge_count();
	IntMatrix inc = IntMatrix::Zero(n, m);
	for (int e = 0; e < m; ++e) {
		const Edge& ed = g.edges()[e];
		if (kind == IncidenceKind::Signless) {
			inc(ed.u, e) = 1;
			inc(ed.v, e) = 1;
		} else {
			// the lexicographically smaller label is the initial endpoint
			bool u_first = g.label(ed.u) < g.label(ed.v);
			inc(ed.u, e) = u_first ? 1 : -1;
			inc(ed.v, e) = u_first ? -1 : 1;
		}
	}
	return inc;
}

BipartiteResult is_bipartite(const Graph& g) {
	int n = g.vertex_count();
	std::vector<int> color(n, -1);
	bool ok = true;
	for (int start = 0; start < n && ok; ++start) {
		if (color[start] != -1)
			continue;
		color[start] = 0;
		std::vector<int> queue{start};
		for (size_t head = 0; head < queue.size() && ok; ++head) {
			int v = queue[head];
			for (int w : g.neighbors(v)) {
				if (color[w] == -1) {
					color[w] = 1 - color[v];
					queue.push_back(w);
				} else if (color[w] == color[v]) {
					ok = false;
					break;
				}
			}
		}
	}
	if (!ok)
		return {false, {}};
	return {true, std::move(color)};
}

LineGraphMap line_graph(const Graph& h) {
	if (h.edge_count() == 0)
		throw InputError("line graph requires at least one edge");
	Graph g;
	for (const Edge& e : h.edges()) {
		const std::string& a = h.label(e.u);
		const std::string& b = h.label(e.v);
		g.add_vertex(a < b ? a + "-" + b : b + "-" + a);
	}
	// Two line vertices are adjacent iff their edges share an endpoint;
	// in a simple graph distinct edges share at most one vertex, so each
	// adjacent pair is generated exactly once, at that common vertex.
	std::vector<std::vector<int>> incident(h.vertex_count());
	for (int e = 0; e < h.edge_count(); ++e) {
		incident[h.edges()[e].u].push_back(e);
		incident[h.edges()[e].v].push_back(e);
	}
	for (int v = 0; v < h.vertex_count(); ++v)
		for (size_t i = 0; i < incident[v].size(); ++i)
			for (size_t j = i + 1; j < incident[v].size(); ++j)
				g.add_edge(g.label(incident[v][i]), g.label(incident[v][j]));
	LineGraphMap m;
	m.pre_line = h;
	m.line = std::move(g);
	m.vertex_of_edge.resize(h.edge_count());
	for (int e = 0; e < h.edge_count(); ++e)
		m.vertex_of_edge[e] = e;
	return m;
}

int degree_of_line_vertex(const LineGraphMap& m, int v) {
	if (v < 0 || v >= m.line.vertex_count())
		throw InputError("unknown line vertex");
	const Edge& e = m.pre_line.edges()[v];
	int by_formula = m.pre_line.degree(e.u) + m.pre_line.degree(e.v) - 2;
	int direct = m.line.degree(v);
	if (by_formula != direct)
		throw Error("degree relation violated (internal)");
	return direct;
}

int minus_two_multiplicity_formula(const Graph& h) {
	if (!h.is_connected())
		throw InputError("multiplicity formula requires a connected graph");
	int value = h.edge_count() - h.vertex_count() + is_bipartite(h).beta();
	return std::max(0, value);
}

long line_graph_edge_count(const Graph& h) {
	long total = 0;
	for (int v = 0; v < h.vertex_count(); ++v) {
		long d = h.degree(v);
		total += d * (d - 1) / 2;
	}
	return total;
}

int degree_variation(const Graph& g) {
	int best = 0;
	for (int v = 0; v < g.vertex_count(); ++v)
		for (int w : g.neighbors(v))
			best = std::max(best, std::abs(g.degree(v) - g.degree(w)));
	return best;
}

Graph path_graph(int n) {
	if (n < 1)
		throw InputError("path needs at least one vertex");
	Graph g;
	for (int i = 1; i <= n; ++i)
		g.add_vertex("v" + std::to_string(i));
	for (int i = 1; i < n; ++i)
		g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
	return g;
}

Graph cycle_graph(int n) {
	if (n < 3)
		throw InputError("cycle needs at least three vertices");
	Graph g = path_graph(n);
	g.add_edge("v" + std::to_string(n), "v1");
	return g;
}

Graph star_graph(int edges) {
	if (edges < 1)
		throw InputError("star needs at least one edge");
	Graph g;
	g.add_vertex("c");
	for (int i = 1; i <= edges; ++i) {
		g.add_vertex("l" + std::to_string(i));
		g.add_edge("c", "l" + std::to_string(i));
	}
	return g;
}

Graph complete_graph(int n) {
	if (n < 2)
		throw InputError("complete graph needs at least two vertices");
	Graph g;
	for (int i = 1; i <= n; ++i)
		g.add_vertex("v" + std::to_string(i));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
	return g;
}

} // namespace adjflow

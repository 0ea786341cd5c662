#pragma once

#include "adjflow/types.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace adjflow {

/** An undirected edge: endpoint indices into the owning graph's vertex
    list, plus a strictly positive weight (1 for unweighted input). */
struct Edge {
	int u;
	int v;
	double weight;
};

/**
 * Finite simple undirected graph with ordered, string-labelled vertices.
 *
 * Vertex order is first appearance; edge order is insertion order.  Both
 * orders are load-bearing: every matrix produced from a graph is indexed
 * by vertex order, and incidence columns / line-graph vertices are
 * indexed by edge order.
 */
class Graph {
public:
	Graph() = default;

	/** Adds a vertex; throws InputError on a duplicate label. */
	int add_vertex(const std::string& label);
	/** Returns the index of `label`, adding the vertex if absent. */
	int ensure_vertex(const std::string& label);
	/** Adds an edge between existing labels; rejects self-loops,
	    duplicates and non-positive weights. */
	void add_edge(const std::string& u, const std::string& v, double weight = 1.0);

	int vertex_count() const { return static_cast<int>(labels_.size()); }
	int edge_count() const { return static_cast<int>(edges_.size()); }
	const std::string& label(int v) const;
	const std::vector<std::string>& labels() const { return labels_; }
	std::optional<int> find_vertex(std::string_view label) const;
	/** Like find_vertex but throws InputError for unknown labels. */
	int vertex(std::string_view label) const;

	const std::vector<Edge>& edges() const { return edges_; }
	bool has_edge(int u, int v) const;
	std::optional<int> edge_index(int u, int v) const;

	/** Neighbor indices in ascending order. */
	const std::vector<int>& neighbors(int v) const;
	int degree(int v) const;
	int max_degree() const;
	double average_degree() const; // 2|E| / |V|
	bool is_regular() const;
	bool is_connected() const;
	/** True if any edge carries a weight other than 1. */
	bool is_weighted() const;

private:
	std::vector<std::string> labels_;
	std::vector<Edge> edges_;
	std::vector<std::vector<int>> adj_;
};

/**
 * Parses the edge-list format: one `<u> <v> [weight]` per line,
 * whitespace-separated; `#` starts a comment; blank lines are ignored.
 * Vertices are numbered in order of first appearance.
 */
Graph parse_edge_list(std::string_view text);
/** parse_edge_list applied to the contents of `path`. */
Graph load_edge_list(const std::string& path);

/** Weighted adjacency matrix indexed by vertex order (0/1 when unweighted). */
Matrix adjacency_matrix(const Graph& g);
/** Diagonal degree matrix D. */
Matrix degree_matrix(const Graph& g);

enum class IncidenceKind { Signless, Oriented };

/**
 * |V| x |E| incidence matrix.  Signless: 1 at both endpoints.  Oriented:
 * +1 at the initial endpoint, -1 at the terminal one; the endpoint with
 * the lexicographically smaller label is initial.
 */
IntMatrix incidence(const Graph& g, IncidenceKind kind);

struct BipartiteResult {
	bool bipartite;
	/** Colors in {0,1} per vertex; meaningful only when bipartite. */
	std::vector<int> coloring;
	/** 1 if bipartite, else 0. */
	int beta() const { return bipartite ? 1 : 0; }
};

/** Breadth-first two-coloring over all components. */
BipartiteResult is_bipartite(const Graph& g);

/** A line graph together with its pre-line graph.  Line vertex i
    corresponds to edge i of the pre-line graph; its label is "u-v" with
    the endpoint labels sorted. */
struct LineGraphMap {
	Graph pre_line;
	Graph line;
	/** vertex_of_edge[e] = line-graph vertex of pre-line edge e
	    (identity by construction, kept explicit for clarity). */
	std::vector<int> vertex_of_edge;
};

/** Builds the line graph of a simple graph with at least one edge. */
LineGraphMap line_graph(const Graph& h);

/** deg of a line vertex, computed as deg(v') + deg(w') - 2 and checked
    against the direct neighbor count. */
int degree_of_line_vertex(const LineGraphMap& m, int v);

/** Predicted multiplicity of eigenvalue -2 of A(L(H)):
    max(0, |E'| - |V'| + beta).  H must be connected. */
int minus_two_multiplicity_formula(const Graph& h);

/** |E(L(H))| = sum over vertices of C(deg, 2). */
long line_graph_edge_count(const Graph& h);

/** sup_v max_{w~v} |deg v - deg w| (0 for edgeless or regular graphs);
    an informational statistic only. */
int degree_variation(const Graph& g);

// Small named families used throughout the tests and the self-checks.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int edges);
Graph complete_graph(int n);

} // namespace adjflow

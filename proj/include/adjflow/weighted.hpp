#pragma once

#include "adjflow/graph.hpp"

#include <map>
#include <string>

namespace adjflow {

/**
 * A line graph equipped with vertex weights c on the pre-line graph,
 * inducing the weighted adjacency A_C on the line graph: two line
 * vertices sharing the pre-line endpoint v' are coupled with weight
 * c(v').  gamma and the weighted degree are the coefficients appearing
 * in the associated quadratic form and in the spectral enclosure
 * [-max gamma, max weighted degree].
 */
struct WeightedLineSystem {
	LineGraphMap map;
	Vector c;      // over V(H), strictly positive
	double c_min;  // recorded bounds c_min <= c <= c_max
	double c_max;
	Vector gamma;                // gamma(v) = c(v') + c(w')
	Vector weighted_line_degree; // c(v')(deg v'-1) + c(w')(deg w'-1)
};

/** Builds the system; c is indexed by H's vertex order. */
WeightedLineSystem make_weighted_line_system(const Graph& h, const Vector& c);
/** Same, with weights given per label (every vertex must be covered). */
WeightedLineSystem make_weighted_line_system(
    const Graph& h, const std::map<std::string, double>& c_by_label);

/** Parses a vertex-weight file: lines `<v'> <c>` with c > 0; `#`
    comments and blank lines as in the edge-list format. */
std::map<std::string, double> parse_vertex_weights(std::string_view text);

/** The weighted adjacency matrix of an edge-weighted graph (same matrix
    as adjacency_matrix; exported under the operator name used by the
    norm bounds). */
Matrix weighted_adjacency_general(const Graph& g);

/** Max weighted degree: largest row sum of the weighted adjacency. */
double max_weighted_degree(const Graph& g);

/** A_C on the line graph: entry c(common endpoint) for adjacent line
    vertices, zero otherwise. */
Matrix line_weighted_adjacency(const WeightedLineSystem& s);

/** deg_C of a line vertex (0 is possible when both endpoints have
    degree 1, i.e. H is a single edge). */
double weighted_degree(const WeightedLineSystem& s, int line_vertex);

} // namespace adjflow

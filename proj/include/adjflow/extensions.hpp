#pragma once

#include "adjflow/graph.hpp"
#include "adjflow/weighted.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adjflow {

/** The drift-perturbed operator u -> J^T c J u + B J u + p u on a
    weighted line system.  B maps functions on V'(H) to functions on the
    line graph's vertices; p is a vertex potential. */
Vector nonsym_apply(const WeightedLineSystem& s, const Matrix& b,
                    const Vector& p, const Vector& u);

/** Quasilinear p-adjacency: A_p u = J^T(|Ju|^{p-2} Ju) - 2^{p-1} u,
    p > 1.  |x|^{p-2} x is taken as 0 at x = 0 (the kink for p < 2). */
Vector p_apply(const LineGraphMap& m, double p, const Vector& u);

/** Energy F_p(u) = ||Ju||_p^p / p - 2^{p-1} ||u||_2^2 / 2, whose
    gradient is p_apply. */
double p_energy(const LineGraphMap& m, double p, const Vector& u);

/**
 * Generalized line graph: H plus n_v petals at each vertex (a petal is
 * a pair of parallel edges to a fresh vertex).  The signed incidence
 * Jtilde keeps +1 at the original endpoint and splits the petal pair
 * with +-1 at the petal vertex, so the Gram rule A = Jtilde^T Jtilde -
 * 2 Id defines the graph G: petal partners come out non-adjacent.
 *
 * Row order: V'(H) then petal vertices (by vertex, then petal index);
 * column order: E'(H) then petal edge pairs, "+" edge before "-" edge.
 */
struct GeneralizedLineSystem {
	Graph pre_line;
	std::vector<int> petals; // per pre-line vertex
	Graph line;              // G, one vertex per Jtilde column
	IntMatrix jtilde;
	std::vector<std::string> row_labels;
};

GeneralizedLineSystem generalized_line_graph(const Graph& h,
                                             const std::vector<int>& petals);
GeneralizedLineSystem generalized_line_graph(
    const Graph& h, const std::map<std::string, int>& petals_by_label);

/** Parses a petal file: lines `<v'> <n>` with n >= 0; vertices not
    listed default to zero petals. */
std::map<std::string, int> parse_petals(std::string_view text);

/**
 * Both predictions for the -2 multiplicity of A(G), compared against
 * the spectral count.  `formula` is |E'| - |V'| + sum n_v (floored at
 * 0); for petal-free H the bipartite-corrected variant
 * |E'| - |V'| + beta is reported too.  Neither is asserted: the report
 * records which one the spectrum confirms.
 */
struct GeneralizedMultiplicityReport {
	int formula;
	int spectral;
	bool formula_matches;
	std::optional<int> petal_free_formula;
	std::optional<bool> petal_free_matches;
};

GeneralizedMultiplicityReport
generalized_multiplicity(const GeneralizedLineSystem& s);

} // namespace adjflow

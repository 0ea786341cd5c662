#include "adjflow/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adjflow {

namespace {

// Connectivity of an arbitrary symmetric support pattern.
bool support_connected(const Matrix& p, double threshold) {
	int n = static_cast<int>(p.rows());
	if (n == 0)
		return false;
	std::vector<char> seen(n, 0);
	std::vector<int> stack{0};
	seen[0] = 1;
	int count = 1;
	while (!stack.empty()) {
		int v = stack.back();
		stack.pop_back();
		for (int w = 0; w < n; ++w)
			if (!seen[w] && w != v && std::abs(p(v, w)) > threshold) {
				seen[w] = 1;
				++count;
				stack.push_back(w);
			}
	}
	return count == n;
}

void check_minus_two_vector(const Matrix& a, const IntMatrix& j,
                            const Vector& u, double tol) {
	Matrix jd = j.cast<double>();
	if ((a * u + 2 * u).cwiseAbs().maxCoeff() > tol)
		throw Error("-2 eigenvector residual too large");
	if ((jd * u).cwiseAbs().maxCoeff() > tol)
		throw Error("-2 eigenvector is not in the kernel of J");
}

} // namespace

std::string to_string(CycleClass c) {
	switch (c) {
	case CycleClass::TreeOrUnicyclicOdd:
		return "tree_or_unicyclic_odd";
	case CycleClass::HasEvenCycleOrTwoOddCycles:
		return "has_even_cycle_or_two_odd_cycles";
	}
	throw InputError("unknown cycle classification");
}

CycleReport detect_cycle_structure(const Graph& h) {
	if (!h.is_connected())
		throw InputError("detect_cycle_structure requires a connected graph");
	if (h.edge_count() < 2)
		throw InputError("detect_cycle_structure requires at least two edges");

	CycleReport r;
	r.map = line_graph(h);
	r.multiplicity_formula = minus_two_multiplicity_formula(h);

	Matrix a = adjacency_matrix(r.map.line);
	EigenDecomposition d = sym_eigen(a);
	r.multiplicity_spectral = cluster_size(d, -2.0, d.cluster_tol);
	if (r.multiplicity_formula != r.multiplicity_spectral)
		throw Error("multiplicity formula and spectral count disagree");

	r.classification = r.multiplicity_spectral > 0
	                       ? CycleClass::HasEvenCycleOrTwoOddCycles
	                       : CycleClass::TreeOrUnicyclicOdd;

	int m = r.map.line.vertex_count();
	r.eigenbasis = Matrix(m, r.multiplicity_spectral);
	int col = 0;
	for (int k = 0; k < d.values.size(); ++k)
		if (std::abs(d.values[k] + 2.0) <= d.cluster_tol)
			r.eigenbasis.col(col++) = d.vectors.col(k);
	r.projector = eigenprojector(d, -2.0, d.cluster_tol);

	IntMatrix j = incidence(h, IncidenceKind::Signless);
	for (int k = 0; k < r.eigenbasis.cols(); ++k)
		check_minus_two_vector(a, j, r.eigenbasis.col(k), 1e-8);
	return r;
}

Vector even_cycle_eigenvector(const Graph& h,
                              const std::vector<std::string>& cycle) {
	size_t k = cycle.size();
	if (k < 4 || k % 2 != 0)
		throw InputError("cycle must have even length >= 4");
	std::vector<int> idx;
	idx.reserve(k);
	for (const std::string& label : cycle)
		idx.push_back(h.vertex(label));
	if (std::set<int>(idx.begin(), idx.end()).size() != k)
		throw InputError("cycle vertices must be distinct");
	for (size_t i = 0; i < k; ++i)
		if (!h.has_edge(idx[i], idx[(i + 1) % k]))
			throw InputError("consecutive cycle vertices '" + cycle[i] +
			                 "' and '" + cycle[(i + 1) % k] +
			                 "' are not adjacent");
	// Induced: no chords between non-consecutive cycle vertices.
	for (size_t i = 0; i < k; ++i)
		for (size_t j = i + 2; j < k; ++j) {
			if (i == 0 && j == k - 1)
				continue;
			if (h.has_edge(idx[i], idx[j]))
				throw InputError("cycle has a chord between '" + cycle[i] +
				                 "' and '" + cycle[j] + "'");
		}

	LineGraphMap m = line_graph(h);
	Vector u = Vector::Zero(m.line.vertex_count());
	for (size_t i = 0; i < k; ++i) {
		int e = *h.edge_index(idx[i], idx[(i + 1) % k]);
		u[m.vertex_of_edge[e]] = (i % 2 == 0) ? 1.0 : -1.0;
	}
	Matrix a = adjacency_matrix(m.line);
	if ((a * u + 2 * u).cwiseAbs().maxCoeff() > 1e-10)
		throw Error("constructed cycle vector is not a -2 eigenvector");
	return u;
}

Matrix minus_two_eigenspace(const Graph& g, const Graph& h) {
	LineGraphMap m = line_graph(h);
	if (g.vertex_count() != m.line.vertex_count())
		throw InputError("graph is not the line graph of the given pre-line "
		                 "graph (vertex count mismatch)");
	Matrix ag = adjacency_matrix(g);
	Matrix al = adjacency_matrix(m.line);
	if ((ag - al).cwiseAbs().maxCoeff() != 0.0)
		throw InputError("graph is not the line graph of the given pre-line "
		                 "graph (adjacency mismatch under edge order)");

	EigenDecomposition d = sym_eigen(ag);
	int mult = cluster_size(d, -2.0, d.cluster_tol);
	if (mult != minus_two_multiplicity_formula(h))
		throw Error("eigenspace dimension disagrees with the formula");

	Matrix basis(g.vertex_count(), mult);
	int col = 0;
	for (int k = 0; k < d.values.size(); ++k)
		if (std::abs(d.values[k] + 2.0) <= d.cluster_tol)
			basis.col(col++) = d.vectors.col(k);
	IntMatrix j = incidence(h, IncidenceKind::Signless);
	for (int k = 0; k < basis.cols(); ++k)
		check_minus_two_vector(ag, j, basis.col(k), 1e-8);
	return basis;
}

HamiltonianReport hamiltonian_necessary(const Graph& h) {
	if (!h.is_connected())
		throw InputError("hamiltonian_necessary requires a connected graph");
	if (h.vertex_count() % 2 != 0)
		throw InputError("hamiltonian_necessary requires an even number of "
		                 "vertices");
	if (h.edge_count() < 2)
		throw InputError("hamiltonian_necessary requires at least two edges");

	CycleReport cycle = detect_cycle_structure(h);
	HamiltonianReport r;
	r.multiplicity = cycle.multiplicity_spectral;
	r.minus_two_present = r.multiplicity > 0;
	r.projector_irreducible =
	    r.minus_two_present && support_connected(cycle.projector, 1e-10);
	r.condition_holds = r.minus_two_present && r.projector_irreducible;
	return r;
}

} // namespace adjflow

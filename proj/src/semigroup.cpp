#include "adjflow/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adjflow {

namespace {

// Distance from the extreme eigenvalue to the nearest eigenvalue outside
// its cluster; 0 if the whole spectrum is one cluster.
double spectral_gap(const EigenDecomposition& d, Direction dir) {
	int n = static_cast<int>(d.values.size());
	if (dir == Direction::Forward) {
		double top = d.values[n - 1];
		for (int i = n - 1; i >= 0; --i)
			if (top - d.values[i] > d.cluster_tol)
				return top - d.values[i];
	} else {
		double bottom = d.values[0];
		for (int i = 0; i < n; ++i)
			if (d.values[i] - bottom > d.cluster_tol)
				return d.values[i] - bottom;
	}
	return 0.0;
}

} // namespace

Matrix propagator(const Graph& g, double t) {
	return expm_sym(adjacency_matrix(g), t);
}

Vector evolve(const Graph& g, const Vector& u0, double t) {
	if (u0.size() != g.vertex_count())
		throw InputError("evolve: initial vector has wrong dimension");
	if (!u0.allFinite())
		throw InputError("evolve: non-finite initial vector");
	EigenDecomposition d = sym_eigen(adjacency_matrix(g));
	// Reuse the guarded exponential path, then apply to u0 in the
	// eigenbasis: u(t) = V e^{t Lambda} V^T u0.
	Matrix e = expm_sym(d, t);
	return e * u0;
}

EvolutionReport rescaled_limit(const Graph& g, Direction dir,
                               std::optional<double> t_opt) {
	if (!g.is_connected())
		throw InputError("rescaled_limit requires a connected graph");
	EigenDecomposition d = sym_eigen(adjacency_matrix(g));
	int n = static_cast<int>(d.values.size());

	EvolutionReport r;
	r.direction = dir;
	r.rate = dir == Direction::Forward ? d.values[n - 1] : d.values[0];
	r.gap = spectral_gap(d, dir);
	r.envelope_checked = r.gap > 0;
	r.t = t_opt ? *t_opt : (r.gap > 0 ? 10.0 / r.gap : 1.0);
	if (r.t < 0)
		throw InputError("rescaled_limit: negative time");

	double signed_t = dir == Direction::Forward ? r.t : -r.t;
	r.rescaled = shifted_propagator(d, signed_t, r.rate);
	r.limit = eigenprojector(d, r.rate, d.cluster_tol);
	Matrix diff = r.rescaled - r.limit;
	r.residual_max = diff.cwiseAbs().maxCoeff();
	r.residual_two = operator_norm(diff, Norm::Two);

	r.regular_uniform = false;
	if (dir == Direction::Forward && g.is_regular() && !g.is_weighted()) {
		Matrix uniform = Matrix::Constant(n, n, 1.0 / n);
		if ((r.limit - uniform).cwiseAbs().maxCoeff() > 1e-9)
			throw Error("rescaled_limit: regular graph limit is not J/|V|");
		r.regular_uniform = true;
	}
	return r;
}

PositivityReport positivity_report(const Graph& g, double t) {
	if (!(t > 0))
		throw InputError("positivity_report requires t > 0");
	EigenDecomposition d = sym_eigen(adjacency_matrix(g));
	Matrix fwd = expm_sym(d, t);
	Matrix bwd = expm_sym(d, -t);

	PositivityReport r;
	r.t = t;
	r.min_forward_entry = fwd.minCoeff();
	Eigen::Index bi = 0, bj = 0;
	r.min_backward_entry = bwd.minCoeff(&bi, &bj);
	r.forward_nonnegative = r.min_forward_entry >= -1e-12;
	r.forward_strictly_positive = r.min_forward_entry > 1e-12;
	r.backward_has_negative_entry = r.min_backward_entry < -1e-12;
	r.backward_witness_v = static_cast<int>(bi);
	r.backward_witness_w = static_cast<int>(bj);
	return r;
}

bool domination_check(const Graph& g, const Graph& g_tilde,
                      const std::vector<double>& t_samples) {
	if (t_samples.empty())
		throw InputError("domination_check needs at least one sample time");
	for (double t : t_samples)
		if (!(t > 0))
			throw InputError("domination_check: sample times must be positive");
	if (g.vertex_count() != g_tilde.vertex_count())
		throw InputError("domination_check: vertex sets differ");
	// Align the candidate subgraph to g's vertex order by label.
	std::vector<int> to_g(g_tilde.vertex_count());
	for (int v = 0; v < g_tilde.vertex_count(); ++v)
		to_g[v] = g.vertex(g_tilde.label(v)); // throws on unknown label

	int n = g.vertex_count();
	Matrix a_tilde = Matrix::Zero(n, n);
	for (const Edge& e : g_tilde.edges()) {
		a_tilde(to_g[e.u], to_g[e.v]) = e.weight;
		a_tilde(to_g[e.v], to_g[e.u]) = e.weight;
	}
	Matrix a = adjacency_matrix(g);

	bool subgraph = true;
	for (const Edge& e : g_tilde.edges())
		if (a_tilde(to_g[e.u], to_g[e.v]) > a(to_g[e.u], to_g[e.v]) + 1e-12)
			subgraph = false;

	EigenDecomposition dg = sym_eigen(a);
	EigenDecomposition dt = sym_eigen(a_tilde);
	bool dominated = true;
	for (double t : t_samples) {
		Matrix big = expm_sym(dg, t);
		Matrix small = expm_sym(dt, t);
		if ((small - big).maxCoeff() > 1e-10)
			dominated = false;
	}

	if (dominated != subgraph) {
		std::ostringstream msg;
		msg << "domination flag (" << dominated
		    << ") disagrees with the subgraph relation (" << subgraph
		    << "); sample times may straddle a crossing";
		throw Error(msg.str());
	}
	return dominated;
}

bool automorphism_commutes(const Graph& g, const Matrix& o) {
	int n = g.vertex_count();
	if (o.rows() != n || o.cols() != n)
		throw InputError("automorphism matrix has wrong dimensions");
	if (!o.allFinite() || o.minCoeff() < -1e-12)
		throw InputError("automorphism matrix is not entrywise nonnegative");
	for (int i = 0; i < n; ++i) {
		if (std::abs(o.row(i).sum() - 1.0) > 1e-10 ||
		    std::abs(o.col(i).sum() - 1.0) > 1e-10)
			throw InputError("automorphism matrix is not doubly stochastic");
	}
	Matrix a = adjacency_matrix(g);
	bool commutes = operator_norm(o * a - a * o, Norm::Inf) <= 1e-10;
	if (commutes) {
		EigenDecomposition d = sym_eigen(a);
		for (double t : {1.0, -1.0}) {
			Matrix e = expm_sym(d, t);
			if (operator_norm(o * e - e * o, Norm::Inf) > 1e-8)
				throw Error("automorphism commutes with A but not with e^{tA}");
		}
	}
	return commutes;
}

Vector perron_vector(const Graph& g) {
	if (!g.is_connected())
		throw InputError("perron_vector requires a connected graph");
	if (g.edge_count() == 0)
		throw InputError("perron_vector requires at least one edge");
	EigenDecomposition d = sym_eigen(adjacency_matrix(g));
	Vector phi = d.vectors.col(d.values.size() - 1);
	Eigen::Index imax = 0;
	phi.cwiseAbs().maxCoeff(&imax);
	if (phi[imax] < 0)
		phi = -phi;
	if (phi.minCoeff() <= 1e-12)
		throw Error("perron_vector: eigenvector is not strictly positive");
	return phi;
}

} // namespace adjflow

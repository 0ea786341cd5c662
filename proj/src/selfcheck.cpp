#include "adjflow/selfcheck.hpp"

#include "adjflow/cycles.hpp"
#include "adjflow/extensions.hpp"
#include "adjflow/lattice.hpp"
#include "adjflow/semigroup.hpp"
#include "adjflow/spectral.hpp"
#include "adjflow/types.hpp"
#include "adjflow/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace adjflow {

namespace {

template <typename Body>
void run(std::vector<CheckResult>& out, const char* name, Body&& body)
{
	CheckResult r;
	r.name = name;
	try {
		r.detail = body();
		r.pass = r.detail.empty();
	} catch (const std::exception& e) {
		r.pass = false;
		r.detail = std::string("exception: ") + e.what();
	}
	out.push_back(std::move(r));
}

std::string at_graph(std::size_t index, const Graph& g, const std::string& what)
{
	std::ostringstream os;
	os << "graph #" << index << " (|V|=" << g.vertex_count()
	   << ", |E|=" << g.edge_count() << "): " << what;
	return os.str();
}

Vector seeded_vector(std::mt19937_64& rng, Eigen::Index n, double lo, double hi)
{
	Vector v(n);
	for (Eigen::Index i = 0; i < n; ++i)
		v(i) = lo + (hi - lo) * uniform01(rng);
	return v;
}

std::size_t subset(std::size_t want, std::size_t have)
{
	return std::min(want, have);
}

/** Distinct-eigenvalue representatives: adjacent values are grouped
    whenever they differ by at most the cluster tolerance. */
std::vector<double> cluster_reps(const EigenDecomposition& ed)
{
	std::vector<double> reps;
	double sum = 0;
	int count = 0;
	for (Eigen::Index i = 0; i < ed.values.size(); ++i) {
		if (count > 0 && ed.values(i) - ed.values(i - 1) > ed.cluster_tol) {
			reps.push_back(sum / count);
			sum = 0;
			count = 0;
		}
		sum += ed.values(i);
		++count;
	}
	if (count > 0)
		reps.push_back(sum / count);
	return reps;
}

} // namespace

std::vector<CheckResult> check_graph_core(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "line-graph-gram-identity", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			const LineGraphMap m = line_graph(h);
			const IntMatrix j = incidence(h, IncidenceKind::Signless);
			const IntMatrix gram = j.transpose() * j;
			const Matrix a = adjacency_matrix(m.line);
			for (Eigen::Index r = 0; r < a.rows(); ++r)
				for (Eigen::Index c = 0; c < a.cols(); ++c) {
					const int expected = gram(r, c) - (r == c ? 2 : 0);
					if (a(r, c) != static_cast<double>(expected))
						return at_graph(i, h, "A(L(H)) != J^T J - 2 Id");
				}
		}
		return {};
	});

	run(out, "incidence-factorization", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& g = graphs[i];
			const IntMatrix j = incidence(g, IncidenceKind::Signless);
			const IntMatrix o = incidence(g, IncidenceKind::Oriented);
			const Matrix a = adjacency_matrix(g);
			const Matrix d = degree_matrix(g);
			const Matrix q = (j * j.transpose()).cast<double>();
			const Matrix l = (o * o.transpose()).cast<double>();
			if ((q - (d + a)).cwiseAbs().maxCoeff() != 0.0)
				return at_graph(i, g, "J J^T != D + A");
			if ((l - (d - a)).cwiseAbs().maxCoeff() != 0.0)
				return at_graph(i, g, "I I^T != D - A");
		}
		return {};
	});

	run(out, "line-vertex-degree-formula", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const LineGraphMap m = line_graph(graphs[i]);
			for (int v = 0; v < m.line.vertex_count(); ++v)
				degree_of_line_vertex(m, v); // throws on mismatch
		}
		return {};
	});

	run(out, "line-edge-count-formula", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			const LineGraphMap m = line_graph(h);
			if (line_graph_edge_count(h) != m.line.edge_count())
				return at_graph(i, h, "edge-count formula mismatch");
		}
		return {};
	});

	run(out, "line-graph-connectivity", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const LineGraphMap m = line_graph(graphs[i]);
			if (!m.line.is_connected())
				return at_graph(i, graphs[i], "L(H) disconnected for connected H");
		}
		return {};
	});

	run(out, "cycle-bipartiteness", [&]() -> std::string {
		for (int n : {4, 6, 8, 10, 12, 14}) {
			const BipartiteResult b = is_bipartite(cycle_graph(n));
			if (!b.bipartite || b.beta() != 1)
				return "even cycle C_" + std::to_string(n) + " not detected bipartite";
		}
		for (int n : {3, 5, 7, 9, 11, 13}) {
			const BipartiteResult b = is_bipartite(cycle_graph(n));
			if (b.bipartite || b.beta() != 0)
				return "odd cycle C_" + std::to_string(n) + " detected bipartite";
		}
		return {};
	});

	run(out, "minus-two-multiplicity-law", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			const int formula = minus_two_multiplicity_formula(h);
			const LineGraphMap m = line_graph(h);
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(m.line));
			const int spectral = cluster_size(ed, -2.0);
			if (formula != spectral) {
				std::ostringstream os;
				os << "formula " << formula << " != spectral " << spectral;
				return at_graph(i, h, os.str());
			}
		}
		return {};
	});

	return out;
}

std::vector<CheckResult> check_dense_spectral(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "jacobi-reconstruction", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(60, graphs.size()); ++i) {
			const Matrix a = adjacency_matrix(graphs[i]);
			const EigenDecomposition ed = sym_eigen(a);
			const Matrix recon =
			    ed.vectors * ed.values.asDiagonal() * ed.vectors.transpose();
			const double scale = 1.0 + a.cwiseAbs().maxCoeff();
			if ((recon - a).cwiseAbs().maxCoeff() > 1e-9 * scale)
				return at_graph(i, graphs[i], "V diag(w) V^T != A");
			const Matrix gram = ed.vectors.transpose() * ed.vectors;
			const Matrix eye = Matrix::Identity(a.rows(), a.cols());
			if ((gram - eye).cwiseAbs().maxCoeff() > 1e-10)
				return at_graph(i, graphs[i], "eigenvectors not orthonormal");
		}
		return {};
	});

	run(out, "adjacency-trace-zero", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(graphs[i]));
			if (std::abs(ed.values.sum()) > 1e-9)
				return at_graph(i, graphs[i], "eigenvalue sum not zero");
			for (double t : {-2.0, -1.0, 1.0, 2.0}) {
				double prod = 1.0;
				for (Eigen::Index k = 0; k < ed.values.size(); ++k)
					prod *= std::exp(t * ed.values(k));
				if (std::abs(prod - 1.0) > 1e-8)
					return at_graph(i, graphs[i],
					                "det e^{tA} drifted from 1");
			}
		}
		return {};
	});

	run(out, "line-spectrum-floor", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const LineGraphMap m = line_graph(graphs[i]);
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(m.line));
			if (ed.values(0) < -2.0 - 1e-9)
				return at_graph(i, graphs[i], "line-graph eigenvalue below -2");
		}
		return {};
	});

	run(out, "spectral-radius-sandwich", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& g = graphs[i];
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(g));
			const double lam_max = ed.values(ed.values.size() - 1);
			const int n = g.vertex_count();
			const double lower =
			    std::max({g.average_degree(),
			              std::sqrt(static_cast<double>(g.max_degree())),
			              2.0 * std::cos(M_PI / (n + 1))});
			if (lower > lam_max + 1e-9)
				return at_graph(i, g, "lower bound exceeds spectral radius");
			if (g.is_regular()) {
				if (std::abs(lam_max - g.max_degree()) > 1e-9)
					return at_graph(i, g, "regular graph radius != degree");
			} else if (!(lam_max < g.max_degree())) {
				return at_graph(i, g, "radius not strictly below max degree");
			}
		}
		return {};
	});

	run(out, "eigenprojector-resolution", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(60, graphs.size()); ++i) {
			const Matrix a = adjacency_matrix(graphs[i]);
			const EigenDecomposition ed = sym_eigen(a);
			Matrix total = Matrix::Zero(a.rows(), a.cols());
			for (double rep : cluster_reps(ed)) {
				const Matrix p = eigenprojector(ed, rep);
				if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12)
					return at_graph(i, graphs[i], "projector not symmetric");
				if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
					return at_graph(i, graphs[i], "projector not idempotent");
				if ((a * p - p * a).cwiseAbs().maxCoeff() > 1e-9)
					return at_graph(i, graphs[i], "projector does not commute");
				total += p;
			}
			const Matrix eye = Matrix::Identity(a.rows(), a.cols());
			if ((total - eye).cwiseAbs().maxCoeff() > 1e-10)
				return at_graph(i, graphs[i], "projectors do not resolve identity");
		}
		return {};
	});

	run(out, "power-vs-exponential-gap", [&]() -> std::string {
		std::vector<Graph> head(graphs.begin(),
		                        graphs.begin() + subset(20, graphs.size()));
		const double observed = power_exponential_constant(head, 64);
		if (observed > kPowerExponentialBound) {
			std::ostringstream os;
			os << "observed " << observed << " exceeds bound "
			   << kPowerExponentialBound;
			return os.str();
		}
		return {};
	});

	run(out, "propagator-group-law", [&]() -> std::string {
		for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{19},
		                      std::size_t{33}}) {
			if (i >= graphs.size())
				continue;
			const Matrix a = adjacency_matrix(graphs[i]);
			const double s = 0.3, t = 0.55;
			const Matrix lhs = expm_sym(a, s) * expm_sym(a, t);
			const Matrix rhs = expm_sym(a, s + t);
			const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
			if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9 * scale)
				return at_graph(i, graphs[i], "e^{sA} e^{tA} != e^{(s+t)A}");
		}
		return {};
	});

	return out;
}

std::vector<CheckResult> check_semigroup(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "semigroup-ordering-chain", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(50, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			const Matrix a = adjacency_matrix(g);
			const Matrix d = degree_matrix(g);
			const int deg = g.max_degree();
			for (double t : {0.25, 1.0}) {
				const Matrix ea = expm_sym(a, t);
				const Matrix el = expm_sym(d - a, -t);
				const Matrix eq = expm_sym(d + a, t);
				const Matrix chain[5] = {std::exp(-t * deg) * ea, el, ea, eq,
				                         std::exp(t * deg) * ea};
				if (chain[0].minCoeff() < -1e-10)
					return at_graph(i, g, "propagator has a negative entry");
				for (int k = 0; k + 1 < 5; ++k)
					if ((chain[k + 1] - chain[k]).minCoeff() < -1e-10) {
						std::ostringstream os;
						os << "ordering chain fails between terms " << k
						   << " and " << k + 1 << " at t=" << t;
						return at_graph(i, g, os.str());
					}
			}
		}
		return {};
	});

	run(out, "modulus-domination", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(50, graphs.size()); ++i) {
			const Matrix a = adjacency_matrix(graphs[i]);
			for (double t : {0.5, 1.0}) {
				const Matrix fwd = expm_sym(a, t);
				const Matrix bwd = expm_sym(a, -t);
				if ((fwd - bwd.cwiseAbs()).minCoeff() < -1e-10)
					return at_graph(i, graphs[i],
					                "|e^{-tA}| not dominated by e^{tA}");
			}
		}
		return {};
	});

	run(out, "adjacency-vs-laplacian-distance", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			const Matrix a = adjacency_matrix(g);
			const Matrix l = degree_matrix(g) - a;
			for (double t : {0.25, 0.5, 1.0}) {
				const double dist = operator_norm(expm_sym(a, t) - expm_sym(l, -t),
				                                  Norm::Two);
				const double bound = std::exp(t * g.max_degree()) - 1.0;
				if (dist > bound * (1.0 + 1e-9) + 1e-12)
					return at_graph(i, g, "||e^{tA} - e^{-tL}|| exceeds e^{td}-1");
			}
		}
		return {};
	});

	run(out, "backward-lp-bounds", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const LineGraphMap m = line_graph(graphs[i]);
			const Matrix a = adjacency_matrix(m.line);
			const int deg = m.line.max_degree();
			for (double s : {0.5, 1.0, 2.0}) {
				const Matrix bwd = expm_sym(a, -s);
				if (operator_norm(bwd, Norm::Two) > std::exp(2.0 * s) * (1 + 1e-9))
					return at_graph(i, graphs[i], "backward 2-norm bound fails");
				if (operator_norm(bwd, Norm::Inf) > std::exp(s * deg) * (1 + 1e-9))
					return at_graph(i, graphs[i], "backward inf-norm bound fails");
			}
		}
		return {};
	});

	run(out, "forward-lp-growth", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			const Matrix a = adjacency_matrix(g);
			for (double s : {0.5, 1.0, 2.0}) {
				const Matrix fwd = expm_sym(a, s);
				const double bound = std::exp(s * g.max_degree()) * (1 + 1e-9);
				for (Norm p : {Norm::One, Norm::Two, Norm::Inf})
					if (operator_norm(fwd, p) > bound)
						return at_graph(i, g, "forward growth bound fails");
			}
		}
		return {};
	});

	run(out, "substochastic-mass-bound", [&]() -> std::string {
		std::mt19937_64 rng(101);
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			const Matrix a = adjacency_matrix(g);
			const Vector f = seeded_vector(rng, a.rows(), 0.0, 3.0);
			for (double t : {0.5, 1.0}) {
				const double mass = (expm_sym(a, t) * f).sum();
				const double bound =
				    std::exp(t * g.max_degree()) * f.sum() * (1 + 1e-9);
				if (mass > bound + 1e-12)
					return at_graph(i, g, "mass bound fails");
			}
		}
		return {};
	});

	run(out, "kernel-limit-finite-scale", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const EvolutionReport probe =
			    rescaled_limit(graphs[i], Direction::Forward);
			if (probe.gap <= 0.0)
				return at_graph(i, graphs[i], "forward gap vanished");
			const EvolutionReport r =
			    rescaled_limit(graphs[i], Direction::Forward, 40.0 / probe.gap);
			if (r.residual_max > 1e-6)
				return at_graph(i, graphs[i], "kernel not reached at t=40/gap");
		}
		return {};
	});

	run(out, "rescaled-envelope", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			for (Direction dir : {Direction::Forward, Direction::Backward}) {
				const EvolutionReport probe = rescaled_limit(graphs[i], dir);
				if (!probe.envelope_checked)
					continue;
				for (double frac : {5.0, 10.0}) {
					const EvolutionReport r =
					    rescaled_limit(graphs[i], dir, frac / probe.gap);
					if (r.residual_two > (1.0 + 1e-6) * std::exp(-frac))
						return at_graph(i, graphs[i],
						                "residual exceeds e^{-t*gap} envelope");
				}
			}
		}
		return {};
	});

	run(out, "positivity-flags", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(60, graphs.size()); ++i) {
			const PositivityReport fwd = positivity_report(graphs[i], 1.0);
			if (!fwd.forward_nonnegative || !fwd.forward_strictly_positive)
				return at_graph(i, graphs[i],
				                "forward propagator not strictly positive");
			const PositivityReport bwd = positivity_report(graphs[i], 0.05);
			if (!bwd.backward_has_negative_entry)
				return at_graph(i, graphs[i],
				                "backward propagator lost no positivity");
		}
		return {};
	});

	run(out, "propagator-domination-monotone", [&]() -> std::string {
		std::mt19937_64 rng(202);
		for (std::size_t i = 0; i < subset(30, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			Graph sub;
			for (const auto& label : g.labels())
				sub.add_vertex(label);
			for (const Edge& e : g.edges())
				if (uniform01(rng) >= 0.3)
					sub.add_edge(g.label(e.u), g.label(e.v));
			if (!domination_check(g, sub, {0.5, 1.0}))
				return at_graph(i, g, "subgraph propagator not dominated");
		}
		return {};
	});

	run(out, "automorphism-commutation", [&]() -> std::string {
		const Graph c6 = cycle_graph(6);
		Matrix rot = Matrix::Zero(6, 6);
		for (int k = 0; k < 6; ++k)
			rot((k + 1) % 6, k) = 1.0;
		if (!automorphism_commutes(c6, rot))
			return "rotation of C_6 reported as non-automorphism";
		const Graph p4 = path_graph(4);
		Matrix rev = Matrix::Zero(4, 4);
		for (int k = 0; k < 4; ++k)
			rev(3 - k, k) = 1.0;
		if (!automorphism_commutes(p4, rev))
			return "reversal of P_4 reported as non-automorphism";
		Matrix swap01 = Matrix::Identity(4, 4);
		swap01(0, 0) = swap01(1, 1) = 0.0;
		swap01(0, 1) = swap01(1, 0) = 1.0;
		if (automorphism_commutes(p4, swap01))
			return "endpoint swap of P_4 reported as automorphism";
		return {};
	});

	return out;
}

std::vector<CheckResult> check_weighted(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "weighted-norm-sandwich", [&]() -> std::string {
		std::mt19937_64 rng(303);
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& g = graphs[i];
			Graph wg;
			for (const auto& label : g.labels())
				wg.add_vertex(label);
			for (const Edge& e : g.edges())
				wg.add_edge(g.label(e.u), g.label(e.v),
				            1.0 + 2.0 * uniform01(rng));
			const Matrix a = weighted_adjacency_general(wg);
			const double maxw = max_weighted_degree(wg);
			const std::pair<Norm, double> cases[3] = {
			    {Norm::One, 1.0}, {Norm::Two, 2.0}, {Norm::Inf, 0.0}};
			for (const auto& [p, exponent] : cases) {
				const double np = operator_norm(a, p);
				if (np > maxw * (1 + 1e-9))
					return at_graph(i, g, "norm exceeds max weighted degree");
				const double lower = exponent == 0.0
				                         ? maxw
				                         : std::pow(maxw, 1.0 / exponent);
				if (np * (1 + 1e-9) < lower)
					return at_graph(i, g, "norm below weighted-degree root");
				if (p != Norm::Two && std::abs(np - maxw) > 1e-9 * (1 + maxw))
					return at_graph(i, g, "1/inf norm not equal to max degree");
			}
		}
		return {};
	});

	run(out, "weighted-line-spectrum-enclosure", [&]() -> std::string {
		std::mt19937_64 rng(404);
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			const Vector c = seeded_vector(rng, h.vertex_count(), 0.5, 2.5);
			const WeightedLineSystem s = make_weighted_line_system(h, c);
			const Matrix m = line_weighted_adjacency(s);
			const EigenDecomposition ed = sym_eigen(m);
			const double lo = -s.gamma.maxCoeff() - 1e-9;
			const double hi =
			    (s.weighted_line_degree.size() > 0
			         ? s.weighted_line_degree.maxCoeff()
			         : 0.0) +
			    1e-9;
			if (ed.values(0) < lo || ed.values(ed.values.size() - 1) > hi)
				return at_graph(i, h, "weighted spectrum escapes enclosure");
		}
		return {};
	});

	run(out, "weighted-line-form-identity", [&]() -> std::string {
		std::mt19937_64 rng(505);
		for (std::size_t i = 0; i < subset(40, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			const Vector c = seeded_vector(rng, h.vertex_count(), 0.5, 2.5);
			const WeightedLineSystem s = make_weighted_line_system(h, c);
			const Matrix m = line_weighted_adjacency(s);
			const Matrix j = incidence(h, IncidenceKind::Signless).cast<double>();
			for (int rep = 0; rep < 5; ++rep) {
				const Vector u = seeded_vector(rng, m.rows(), -2.0, 2.0);
				const Vector ju = j * u;
				const double lhs = u.dot(m * u);
				const double rhs = ju.dot(c.cwiseProduct(ju)) -
				                   u.dot(s.gamma.cwiseProduct(u));
				if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(lhs)))
					return at_graph(i, h, "quadratic form identity fails");
			}
		}
		return {};
	});

	run(out, "weighted-unit-consistency", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(30, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			const Vector ones = Vector::Ones(h.vertex_count());
			const WeightedLineSystem s = make_weighted_line_system(h, ones);
			const Matrix diff =
			    line_weighted_adjacency(s) - adjacency_matrix(s.map.line);
			if (diff.cwiseAbs().maxCoeff() != 0.0)
				return at_graph(i, h, "unit weights do not reproduce A(L(H))");
		}
		return {};
	});

	return out;
}

std::vector<CheckResult> check_lattice()
{
	std::vector<CheckResult> out;

	run(out, "z-kernel-symmetry", [&]() -> std::string {
		const std::pair<long, long> pairs[] = {{0, 3}, {-2, 5}, {7, 7}};
		for (const auto& [v, w] : pairs)
			for (double t : {0.5, 2.0}) {
				if (z_kernel(v, w, t) != z_kernel(w, v, t))
					return "kernel not symmetric";
				if (z_kernel(v + 4, w + 4, t) != z_kernel(v, w, t))
					return "kernel not translation invariant";
			}
		const double prod = z_kernel(0, 1, 0.5) * z_kernel(0, 2, 0.5);
		if (zn_kernel({0, 0}, {1, 2}, 0.5) != prod)
			return "Z^2 kernel is not the coordinate product";
		return {};
	});

	run(out, "z-kernel-chapman-kolmogorov", [&]() -> std::string {
		const double s = 0.5, t = 0.5;
		for (long v = -3; v <= 3; ++v)
			for (long w = -3; w <= 3; ++w) {
				double conv = 0.0;
				for (long u = -60; u <= 60; ++u)
					conv += z_kernel(v, u, s) * z_kernel(u, w, t);
				if (std::abs(conv - z_kernel(v, w, s + t)) > 1e-8)
					return "semigroup property fails on Z";
			}
		return {};
	});

	run(out, "z-kernel-positivity", [&]() -> std::string {
		for (long d = 0; d <= 20; ++d)
			for (double t : {0.1, 1.0, 10.0})
				if (!(z_kernel(0, d, t) > 0.0))
					return "kernel entry not strictly positive";
		return {};
	});

	run(out, "z-kernel-decay", [&]() -> std::string {
		double prev = std::numeric_limits<double>::infinity();
		double last = 0.0;
		for (double t : {1.0, 5.0, 10.0, 20.0}) {
			const double val = std::exp(-2.0 * t) * z_kernel(0, 0, t);
			if (!(val < prev))
				return "rescaled on-diagonal kernel not decreasing";
			prev = val;
			last = val;
		}
		if (!(last <= 0.1))
			return "rescaled kernel does not decay toward zero";
		return {};
	});

	run(out, "lattice-truncation-monotone", [&]() -> std::string {
		const TruncationReport r = truncation_compare(
		    LatticeSpec{1, 20}, {{{0}, {0}}, {{0}, {3}}}, 1.0);
		if (!r.monotone_all)
			return "section entries not monotone in the radius";
		for (const TruncationRow& row : r.rows)
			if (row.abs_gap > 1e-9)
				return "R=20 section far from the closed form at t=1";
		return {};
	});

	run(out, "lattice-perturbation-bound", [&]() -> std::string {
		const Graph section = lattice_section(LatticeSpec{1, 10});
		Graph perturbed = section;
		perturbed.add_edge("0", "5");
		const EigenDecomposition base = sym_eigen(adjacency_matrix(section));
		const EigenDecomposition pert = sym_eigen(adjacency_matrix(perturbed));
		const double lam_base = base.values(base.values.size() - 1);
		const double lam_pert = pert.values(pert.values.size() - 1);
		if (lam_pert < lam_base - 1e-12)
			return "adding an edge decreased the spectral radius";
		if (lam_pert > 3.0 + 1e-9)
			return "perturbed radius exceeds the Gershgorin bound";
		return {};
	});

	return out;
}

std::vector<CheckResult> check_structure_detect(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "cycle-detect-two-routes", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			if (h.edge_count() < 2)
				continue;
			const CycleReport r = detect_cycle_structure(h);
			const bool expect_present = r.multiplicity_formula > 0;
			const bool classified =
			    r.classification == CycleClass::HasEvenCycleOrTwoOddCycles;
			if (expect_present != classified)
				return at_graph(i, h, "classification contradicts multiplicity");
		}
		return {};
	});

	run(out, "minus-two-kernel-characterization", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			if (h.edge_count() < 2)
				continue;
			const CycleReport r = detect_cycle_structure(h);
			const Matrix j =
			    incidence(h, IncidenceKind::Signless).cast<double>();
			const EigenDecomposition gram = sym_eigen(j.transpose() * j);
			int nullity = 0;
			for (Eigen::Index k = 0; k < gram.values.size(); ++k)
				if (std::abs(gram.values(k)) <= 1e-8)
					++nullity;
			if (nullity != r.multiplicity_formula)
				return at_graph(i, h, "ker J dimension mismatch");
			for (Eigen::Index k = 0; k < gram.values.size(); ++k) {
				if (std::abs(gram.values(k)) > 1e-8)
					continue;
				const Vector u = gram.vectors.col(k);
				if ((r.projector * u - u).cwiseAbs().maxCoeff() > 1e-8)
					return at_graph(i, h, "ker J vector outside -2 cluster");
			}
			for (Eigen::Index k = 0; k < r.eigenbasis.cols(); ++k) {
				const Vector u = r.eigenbasis.col(k);
				if ((j * u).cwiseAbs().maxCoeff() > 1e-8)
					return at_graph(i, h, "-2 eigenvector outside ker J");
			}
		}
		return {};
	});

	run(out, "even-cycle-constructive-vectors", [&]() -> std::string {
		for (int n : {4, 6, 8, 10, 12}) {
			const Graph h = cycle_graph(n);
			std::vector<std::string> order;
			for (int k = 0; k < n; ++k)
				order.push_back(h.label(k));
			const Vector u = even_cycle_eigenvector(h, order);
			const CycleReport r = detect_cycle_structure(h);
			const Vector un = u / u.norm();
			if ((r.projector * un - un).cwiseAbs().maxCoeff() > 1e-8)
				return "constructive vector of C_" + std::to_string(n) +
				       " outside the -2 eigenspace";
		}
		{
			Graph h;
			for (const char* l : {"a", "b", "c", "d", "e"})
				h.add_vertex(l);
			h.add_edge("a", "b");
			h.add_edge("b", "c");
			h.add_edge("c", "d");
			h.add_edge("d", "a");
			h.add_edge("c", "e");
			const Vector u = even_cycle_eigenvector(h, {"a", "b", "c", "d"});
			const CycleReport r = detect_cycle_structure(h);
			const Vector un = u / u.norm();
			if ((r.projector * un - un).cwiseAbs().maxCoeff() > 1e-8)
				return "pendant C_4 constructive vector outside eigenspace";
		}
		{
			Graph h;
			for (const char* l : {"z", "a", "b", "c", "d", "e", "f"})
				h.add_vertex(l);
			h.add_edge("z", "a");
			h.add_edge("z", "b");
			h.add_edge("a", "c");
			h.add_edge("b", "c");
			h.add_edge("z", "d");
			h.add_edge("z", "e");
			h.add_edge("d", "f");
			h.add_edge("e", "f");
			const Vector u1 = even_cycle_eigenvector(h, {"z", "a", "c", "b"});
			const Vector u2 = even_cycle_eigenvector(h, {"z", "d", "f", "e"});
			const CycleReport r = detect_cycle_structure(h);
			if (r.multiplicity_formula != 2)
				return "double C_4 multiplicity is not 2";
			const Matrix span = u1 * u1.transpose() / u1.squaredNorm() +
			                    u2 * u2.transpose() / u2.squaredNorm();
			if ((span - r.projector).cwiseAbs().maxCoeff() > 1e-8)
				return "constructive vectors do not span the -2 eigenspace";
		}
		return {};
	});

	run(out, "backward-flow-consistency", [&]() -> std::string {
		for (std::size_t i = 0; i < graphs.size(); ++i) {
			const Graph& h = graphs[i];
			if (h.edge_count() < 2)
				continue;
			const LineGraphMap m = line_graph(h);
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(m.line));
			const int mult = cluster_size(ed, -2.0);
			double gap = std::numeric_limits<double>::infinity();
			for (Eigen::Index k = 0; k < ed.values.size(); ++k)
				if (ed.values(k) > -2.0 + 1e-8)
					gap = std::min(gap, ed.values(k) + 2.0);
			if (!std::isfinite(gap))
				return at_graph(i, h, "no eigenvalue above -2");
			const double t = 20.0 / gap;
			const Matrix flow = shifted_propagator(ed, -t, -2.0);
			const Matrix target =
			    mult > 0 ? eigenprojector(ed, -2.0)
			             : Matrix::Zero(flow.rows(), flow.cols()).eval();
			if ((flow - target).cwiseAbs().maxCoeff() > 1e-6)
				return at_graph(i, h, "rescaled backward flow misses projector");
		}
		return {};
	});

	run(out, "hamiltonian-necessary-condition", [&]() -> std::string {
		const HamiltonianReport k4 = hamiltonian_necessary(complete_graph(4));
		if (k4.multiplicity != 2 || !k4.minus_two_present ||
		    !k4.projector_irreducible || !k4.condition_holds)
			return "K_4 should satisfy the condition with multiplicity 2";
		const HamiltonianReport c4 = hamiltonian_necessary(cycle_graph(4));
		if (c4.multiplicity != 1 || !c4.condition_holds)
			return "C_4 should satisfy the condition with multiplicity 1";
		const HamiltonianReport c6 = hamiltonian_necessary(cycle_graph(6));
		if (c6.multiplicity != 1 || !c6.condition_holds)
			return "C_6 should satisfy the condition with multiplicity 1";
		const HamiltonianReport star = hamiltonian_necessary(star_graph(3));
		if (star.multiplicity != 0 || star.minus_two_present ||
		    star.condition_holds)
			return "the 3-star should fail the condition";
		return {};
	});

	return out;
}

std::vector<CheckResult> check_extensions(const std::vector<Graph>& graphs)
{
	std::vector<CheckResult> out;

	run(out, "generalized-petal-free-consistency", [&]() -> std::string {
		for (std::size_t i = 0; i < subset(15, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			const std::vector<int> none(h.vertex_count(), 0);
			const GeneralizedLineSystem s = generalized_line_graph(h, none);
			const LineGraphMap m = line_graph(h);
			const Matrix diff =
			    adjacency_matrix(s.line) - adjacency_matrix(m.line);
			if (diff.cwiseAbs().maxCoeff() != 0.0)
				return at_graph(i, h, "petal-free system differs from L(H)");
			if (s.line.labels() != m.line.labels())
				return at_graph(i, h, "petal-free labels differ from L(H)");
		}
		return {};
	});

	run(out, "generalized-gram-floor", [&]() -> std::string {
		std::mt19937_64 rng(606);
		for (std::size_t i = 0; i < subset(25, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			std::vector<int> petals(h.vertex_count());
			for (int& p : petals)
				p = static_cast<int>(rng() % 3);
			const GeneralizedLineSystem s = generalized_line_graph(h, petals);
			const Matrix a = adjacency_matrix(s.line);
			const IntMatrix gram = s.jtilde.transpose() * s.jtilde;
			for (Eigen::Index r = 0; r < a.rows(); ++r)
				for (Eigen::Index c = 0; c < a.cols(); ++c) {
					const int expected = gram(r, c) - (r == c ? 2 : 0);
					if (a(r, c) != static_cast<double>(expected))
						return at_graph(i, h, "Gram rule violated");
				}
			const EigenDecomposition ed = sym_eigen(a);
			if (ed.values(0) < -2.0 - 1e-9)
				return at_graph(i, h, "generalized spectrum dips below -2");
		}
		return {};
	});

	run(out, "p-flow-gradient-duality", [&]() -> std::string {
		std::mt19937_64 rng(707);
		for (std::size_t i : {std::size_t{3}, std::size_t{12}, std::size_t{27}}) {
			if (i >= graphs.size())
				continue;
			const LineGraphMap m = line_graph(graphs[i]);
			const Eigen::Index n = m.line.vertex_count();
			for (double p : {1.5, 2.0, 3.0, 4.0}) {
				const Vector u = p < 2.0 ? seeded_vector(rng, n, 0.5, 1.5)
				                         : seeded_vector(rng, n, -2.0, 2.0);
				const Vector grad = p_apply(m, p, u);
				const double h = 1e-5 * (1.0 + u.cwiseAbs().maxCoeff());
				for (Eigen::Index k = 0; k < n; ++k) {
					Vector up = u, um = u;
					up(k) += h;
					um(k) -= h;
					const double fd =
					    (p_energy(m, p, up) - p_energy(m, p, um)) / (2.0 * h);
					if (std::abs(fd - grad(k)) >
					    1e-6 * (1.0 + std::abs(grad(k))))
						return at_graph(i, graphs[i],
						                "finite differences contradict gradient");
				}
			}
		}
		return {};
	});

	run(out, "p-flow-energy-descent", [&]() -> std::string {
		std::mt19937_64 rng(808);
		for (std::size_t i : {std::size_t{3}, std::size_t{12}, std::size_t{27}}) {
			if (i >= graphs.size())
				continue;
			const LineGraphMap m = line_graph(graphs[i]);
			const Eigen::Index n = m.line.vertex_count();
			for (double p : {1.5, 3.0, 4.0}) {
				const Vector u = p < 2.0 ? seeded_vector(rng, n, 0.5, 1.5)
				                         : seeded_vector(rng, n, -2.0, 2.0);
				const Vector v = u - 1e-3 * p_apply(m, p, u);
				if (p_energy(m, p, v) > p_energy(m, p, u) + 1e-12)
					return at_graph(i, graphs[i], "explicit step raised energy");
			}
		}
		return {};
	});

	run(out, "p-two-linear-consistency", [&]() -> std::string {
		std::mt19937_64 rng(909);
		for (std::size_t i = 0; i < subset(20, graphs.size()); ++i) {
			const LineGraphMap m = line_graph(graphs[i]);
			const Matrix a = adjacency_matrix(m.line);
			const Vector u = seeded_vector(rng, a.rows(), -2.0, 2.0);
			const Vector lhs = p_apply(m, 2.0, u);
			const Vector rhs = a * u;
			if ((lhs - rhs).cwiseAbs().maxCoeff() >
			    1e-12 * (1.0 + rhs.cwiseAbs().maxCoeff()))
				return at_graph(i, graphs[i], "A_2 differs from the adjacency");
			const double f2 = p_energy(m, 2.0, u);
			const double quad = 0.5 * u.dot(a * u);
			if (std::abs(f2 - quad) > 1e-12 * (1.0 + std::abs(quad)))
				return at_graph(i, graphs[i], "F_2 differs from the quadratic form");
		}
		return {};
	});

	run(out, "nonsym-symmetric-consistency", [&]() -> std::string {
		std::mt19937_64 rng(1010);
		for (std::size_t i = 0; i < subset(20, graphs.size()); ++i) {
			const Graph& h = graphs[i];
			const Vector c = seeded_vector(rng, h.vertex_count(), 0.5, 2.5);
			const WeightedLineSystem s = make_weighted_line_system(h, c);
			const Eigen::Index m = s.map.line.vertex_count();
			const Matrix b = Matrix::Zero(m, h.vertex_count());
			const Vector u = seeded_vector(rng, m, -2.0, 2.0);
			const Vector lhs = nonsym_apply(s, b, -s.gamma, u);
			const Vector rhs = line_weighted_adjacency(s) * u;
			if ((lhs - rhs).cwiseAbs().maxCoeff() >
			    1e-12 * (1.0 + rhs.cwiseAbs().maxCoeff()))
				return at_graph(i, h, "drift-free operator differs from A_C");
		}
		return {};
	});

	run(out, "generalized-multiplicity-report", [&]() -> std::string {
		{
			Graph single;
			single.add_vertex("a");
			const GeneralizedLineSystem s = generalized_line_graph(single, std::vector<int>{1});
			const GeneralizedMultiplicityReport r = generalized_multiplicity(s);
			if (r.formula != 0 || r.spectral != 0 || !r.formula_matches)
				return "single petal vertex: expected multiplicity 0";
			if (r.petal_free_formula.has_value())
				return "petal system should not report the petal-free formula";
		}
		{
			Graph k2;
			k2.add_vertex("a");
			k2.add_vertex("b");
			k2.add_edge("a", "b");
			const GeneralizedLineSystem s = generalized_line_graph(k2, std::vector<int>{1, 0});
			const GeneralizedMultiplicityReport r = generalized_multiplicity(s);
			if (r.formula != 0 || r.spectral != 0 || !r.formula_matches)
				return "edge plus petal: expected multiplicity 0";
		}
		{
			const Graph c4 = cycle_graph(4);
			const GeneralizedLineSystem s =
			    generalized_line_graph(c4, std::vector<int>{0, 0, 0, 0});
			const GeneralizedMultiplicityReport r = generalized_multiplicity(s);
			if (!r.petal_free_formula || *r.petal_free_formula != 1 ||
			    !r.petal_free_matches || !*r.petal_free_matches)
				return "C_4: bipartite-corrected formula should match spectrum";
			if (r.formula_matches)
				return "C_4: uncorrected formula unexpectedly matched";
		}
		{
			const Graph c3 = cycle_graph(3);
			const GeneralizedLineSystem s = generalized_line_graph(c3, std::vector<int>{1, 0, 0});
			const GeneralizedMultiplicityReport r = generalized_multiplicity(s);
			const EigenDecomposition ed = sym_eigen(adjacency_matrix(s.line));
			if (r.spectral != cluster_size(ed, -2.0))
				return "C_3 plus petal: spectral count not reproduced";
			if (r.formula_matches != (r.formula == r.spectral))
				return "C_3 plus petal: match flag inconsistent";
		}
		return {};
	});

	return out;
}

std::vector<CheckResult> run_all_checks(const CorpusOptions& options)
{
	const std::vector<Graph> graphs = corpus(options);
	std::vector<CheckResult> all;
	for (auto* suite : {&check_graph_core, &check_dense_spectral,
	                    &check_semigroup, &check_weighted,
	                    &check_structure_detect, &check_extensions}) {
		std::vector<CheckResult> part = (*suite)(graphs);
		all.insert(all.end(), part.begin(), part.end());
	}
	std::vector<CheckResult> lat = check_lattice();
	all.insert(all.end(), lat.begin(), lat.end());
	return all;
}

double power_exponential_constant(const std::vector<Graph>& graphs, int max_power)
{
	double best = 0.0;
	for (const Graph& g : graphs) {
		const EigenDecomposition ed = sym_eigen(adjacency_matrix(g));
		const double rho = std::max(std::abs(ed.values(0)),
		                            std::abs(ed.values(ed.values.size() - 1)));
		if (rho == 0.0)
			continue;
		for (int n = 1; n <= max_power; ++n) {
			double dn = 0.0;
			for (Eigen::Index k = 0; k < ed.values.size(); ++k) {
				const double r = ed.values(k) / rho;
				dn = std::max(dn, std::abs(std::pow(r, n) -
				                           std::exp(n * (r - 1.0))));
			}
			best = std::max(best, dn * std::cbrt(static_cast<double>(n)));
		}
	}
	return best;
}

} // namespace adjflow

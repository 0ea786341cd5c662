#include "adjflow/extensions.hpp"

#include "adjflow/spectral.hpp"

#include <cmath>
#include <sstream>

namespace adjflow {

namespace {

double signed_power(double x, double exponent) {
	if (x == 0.0)
		return 0.0;
	return std::pow(std::abs(x), exponent) * x;
}

} // namespace

Vector nonsym_apply(const WeightedLineSystem& s, const Matrix& b,
                    const Vector& p, const Vector& u) {
	const Graph& pre = s.map.pre_line;
	int nv = pre.vertex_count();
	int m = s.map.line.vertex_count();
	if (u.size() != m || p.size() != m || b.rows() != m || b.cols() != nv)
		throw InputError("nonsym_apply: dimension mismatch");
	Matrix j = incidence(pre, IncidenceKind::Signless).cast<double>();
	Vector ju = j * u;
	return j.transpose() * s.c.cwiseProduct(ju) + b * ju + p.cwiseProduct(u);
}

Vector p_apply(const LineGraphMap& m, double p, const Vector& u) {
	if (!(p > 1))
		throw InputError("p_apply requires p > 1");
	if (u.size() != m.line.vertex_count())
		throw InputError("p_apply: vector has wrong dimension");
	Matrix j = incidence(m.pre_line, IncidenceKind::Signless).cast<double>();
	Vector ju = j * u;
	Vector phi(ju.size());
	for (int i = 0; i < ju.size(); ++i)
		phi[i] = signed_power(ju[i], p - 2);
	return j.transpose() * phi - std::exp2(p - 1) * u;
}

double p_energy(const LineGraphMap& m, double p, const Vector& u) {
	if (!(p > 1))
		throw InputError("p_energy requires p > 1");
	if (u.size() != m.line.vertex_count())
		throw InputError("p_energy: vector has wrong dimension");
	Matrix j = incidence(m.pre_line, IncidenceKind::Signless).cast<double>();
	Vector ju = j * u;
	double sum = 0;
	for (int i = 0; i < ju.size(); ++i)
		sum += std::pow(std::abs(ju[i]), p);
	return sum / p - std::exp2(p - 1) * u.squaredNorm() / 2;
}

GeneralizedLineSystem generalized_line_graph(const Graph& h,
                                             const std::vector<int>& petals) {
	if (static_cast<int>(petals.size()) != h.vertex_count())
		throw InputError("petal vector has wrong dimension");
	int total_petals = 0;
	for (int n : petals) {
		if (n < 0)
			throw InputError("petal counts must be nonnegative");
		total_petals += n;
	}
	int nv = h.vertex_count();
	int ne = h.edge_count();
	int rows = nv + total_petals;
	int cols = ne + 2 * total_petals;
	if (cols == 0)
		throw InputError("generalized line graph needs an edge or a petal");

	GeneralizedLineSystem s;
	s.pre_line = h;
	s.petals = petals;
	s.jtilde = IntMatrix::Zero(rows, cols);
	s.row_labels = h.labels();

	std::vector<std::string> col_labels;
	for (const Edge& e : h.edges()) {
		const std::string& a = h.label(e.u);
		const std::string& b = h.label(e.v);
		col_labels.push_back(a < b ? a + "-" + b : b + "-" + a);
		s.jtilde(e.u, static_cast<int>(col_labels.size()) - 1) = 1;
		s.jtilde(e.v, static_cast<int>(col_labels.size()) - 1) = 1;
	}
	int petal_row = nv;
	int col = ne;
	for (int v = 0; v < nv; ++v) {
		for (int k = 1; k <= petals[v]; ++k) {
			std::string base = h.label(v) + "~" + std::to_string(k);
			s.row_labels.push_back(base);
			// "+" sorts before "-", so the positive edge is the
			// lexicographically first of the pair.
			s.jtilde(v, col) = 1;
			s.jtilde(petal_row, col) = 1;
			col_labels.push_back(base + "+");
			++col;
			s.jtilde(v, col) = 1;
			s.jtilde(petal_row, col) = -1;
			col_labels.push_back(base + "-");
			++col;
			++petal_row;
		}
	}

	IntMatrix gram = s.jtilde.transpose() * s.jtilde;
	for (int i = 0; i < cols; ++i)
		s.line.add_vertex(col_labels[i]);
	for (int i = 0; i < cols; ++i) {
		if (gram(i, i) != 2)
			throw Error("generalized incidence column has wrong norm");
		for (int j = i + 1; j < cols; ++j) {
			if (gram(i, j) != 0 && gram(i, j) != 1)
				throw Error("generalized Gram entry outside {0,1}");
			if (gram(i, j) == 1)
				s.line.add_edge(col_labels[i], col_labels[j]);
		}
	}
	return s;
}

GeneralizedLineSystem generalized_line_graph(
    const Graph& h, const std::map<std::string, int>& petals_by_label) {
	std::vector<int> petals(h.vertex_count(), 0);
	for (const auto& [label, n] : petals_by_label)
		petals[h.vertex(label)] = n;
	return generalized_line_graph(h, petals);
}

std::map<std::string, int> parse_petals(std::string_view text) {
	std::map<std::string, int> petals;
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
			                 ": expected '<vertex> <petals>'");
		size_t used = 0;
		long n = 0;
		try {
			n = std::stol(tok, &used);
		} catch (const std::exception&) {
			used = std::string::npos;
		}
		if (used != tok.size() || n < 0)
			throw InputError("line " + std::to_string(lineno) +
			                 ": petal count must be a nonnegative integer");
		if (!petals.emplace(v, static_cast<int>(n)).second)
			throw InputError("line " + std::to_string(lineno) +
			                 ": duplicate petal count for '" + v + "'");
	}
	return petals;
}

GeneralizedMultiplicityReport
generalized_multiplicity(const GeneralizedLineSystem& s) {
	if (!s.pre_line.is_connected())
		throw InputError("generalized_multiplicity requires a connected "
		                 "pre-line graph");
	int total_petals = 0;
	for (int n : s.petals)
		total_petals += n;

	GeneralizedMultiplicityReport r;
	r.formula = std::max(0, s.pre_line.edge_count() -
	                            s.pre_line.vertex_count() + total_petals);
	EigenDecomposition d = sym_eigen(adjacency_matrix(s.line));
	r.spectral = cluster_size(d, -2.0, d.cluster_tol);
	r.formula_matches = r.formula == r.spectral;
	if (total_petals == 0) {
		r.petal_free_formula = minus_two_multiplicity_formula(s.pre_line);
		r.petal_free_matches = *r.petal_free_formula == r.spectral;
	}
	return r;
}

} // namespace adjflow

#include "adjflow/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace adjflow {

namespace {

constexpr double kBesselArgMax = 1400.0;

long box_side(int radius) { return 2L * radius + 1; }

long box_size(const LatticeSpec& spec) {
	long n = 1;
	for (int i = 0; i < spec.dim; ++i)
		n *= box_side(spec.radius);
	return n;
}

void check_spec(const LatticeSpec& spec) {
	if (spec.dim < 1)
		throw InputError("lattice dimension must be >= 1");
	if (spec.radius < 1)
		throw InputError("truncation radius must be >= 1");
	if (box_size(spec) > 20'000'000L)
		throw InputError("lattice section too large");
}

void check_point(const LatticeSpec& spec, const std::vector<long>& p) {
	if (static_cast<int>(p.size()) != spec.dim)
		throw InputError("lattice point has wrong dimension");
	for (long c : p)
		if (std::abs(c) > spec.radius)
			throw InputError("lattice point outside the section");
}

long flat_index(const LatticeSpec& spec, const std::vector<long>& p) {
	long idx = 0;
	for (int i = 0; i < spec.dim; ++i)
		idx = idx * box_side(spec.radius) + (p[i] + spec.radius);
	return idx;
}

std::vector<std::vector<int>> box_neighbors(const LatticeSpec& spec) {
	long n = box_size(spec);
	long side = box_side(spec.radius);
	std::vector<std::vector<int>> nb(n);
	// Strides of each coordinate in the lexicographic flattening.
	std::vector<long> stride(spec.dim, 1);
	for (int i = spec.dim - 2; i >= 0; --i)
		stride[i] = stride[i + 1] * side;
	for (long idx = 0; idx < n; ++idx) {
		long rest = idx;
		for (int i = 0; i < spec.dim; ++i) {
			long coord = rest / stride[i];
			rest %= stride[i];
			if (coord > 0)
				nb[idx].push_back(static_cast<int>(idx - stride[i]));
			if (coord < side - 1)
				nb[idx].push_back(static_cast<int>(idx + stride[i]));
		}
	}
	return nb;
}

} // namespace

double bessel_i(int order, double x) {
	if (order < 0)
		throw InputError("bessel_i: order must be nonnegative");
	if (!std::isfinite(x) || x < 0)
		throw InputError("bessel_i: argument must be finite and nonnegative");
	if (x > kBesselArgMax)
		throw OverflowError("bessel_i: argument " + std::to_string(x) +
		                    " exceeds the guard " +
		                    std::to_string(kBesselArgMax));
	double half = x / 2;
	// term_0 = (x/2)^k / k!
	double term = 1.0;
	for (int i = 1; i <= order; ++i)
		term *= half / i;
	double sum = term;
	for (int m = 1; m < 1000; ++m) {
		term *= half * half / (static_cast<double>(m) * (m + order));
		sum += term;
		if (term < 1e-17 * sum)
			break;
	}
	return sum;
}

double z_kernel(long v, long w, double t) {
	if (!(t >= 0))
		throw InputError("z_kernel: t must be >= 0");
	return bessel_i(static_cast<int>(std::abs(v - w)), 2 * t);
}

double zn_kernel(const std::vector<long>& v, const std::vector<long>& w,
                 double t) {
	if (v.size() != w.size())
		throw InputError("zn_kernel: tuple lengths differ");
	if (v.empty())
		throw InputError("zn_kernel: empty tuples");
	double product = 1.0;
	for (size_t i = 0; i < v.size(); ++i)
		product *= z_kernel(v[i], w[i], t);
	return product;
}

Graph lattice_section(const LatticeSpec& spec) {
	check_spec(spec);
	if (box_size(spec) > 200'000L)
		throw InputError("lattice section too large to build as a Graph");
	Graph g;
	long side = box_side(spec.radius);
	long n = box_size(spec);
	std::vector<long> coord(spec.dim);
	for (long idx = 0; idx < n; ++idx) {
		long rest = idx;
		for (int i = spec.dim - 1; i >= 0; --i) {
			coord[i] = rest % side - spec.radius;
			rest /= side;
		}
		std::string label;
		for (int i = 0; i < spec.dim; ++i)
			label += (i ? "," : "") + std::to_string(coord[i]);
		g.add_vertex(label);
	}
	auto nb = box_neighbors(spec);
	for (long idx = 0; idx < n; ++idx)
		for (int other : nb[idx])
			if (other > idx)
				g.add_edge(g.label(static_cast<int>(idx)), g.label(other));
	return g;
}

double section_propagator_entry(const LatticeSpec& spec,
                                const std::vector<long>& v,
                                const std::vector<long>& w, double t) {
	check_spec(spec);
	check_point(spec, v);
	check_point(spec, w);
	if (!(t >= 0) || !std::isfinite(t))
		throw InputError("section propagator: t must be finite and >= 0");
	long iv = flat_index(spec, v);
	long iw = flat_index(spec, w);
	if (t == 0)
		return iv == iw ? 1.0 : 0.0;

	auto nb = box_neighbors(spec);
	long n = box_size(spec);
	Vector x = Vector::Zero(n);
	x[iw] = 1.0;

	// Scaling and squaring on the vector: split t until each Taylor step
	// has ||dt * A|| <= 0.5, then iterate the truncated series.
	double norm_bound = 2.0 * spec.dim;
	int splits = 0;
	while (t * norm_bound / std::pow(2.0, splits) > 0.5)
		++splits;
	long reps = 1L << splits;
	double dt = t / static_cast<double>(reps);

	Vector term(n), next(n);
	for (long rep = 0; rep < reps; ++rep) {
		Vector acc = x;
		term = x;
		for (int k = 1; k <= 60; ++k) {
			for (long i = 0; i < n; ++i) {
				double s = 0;
				for (int j : nb[i])
					s += term[j];
				next[i] = s * dt / k;
			}
			term = next;
			acc += term;
			if (term.cwiseAbs().maxCoeff() <=
			    1e-18 * acc.cwiseAbs().maxCoeff())
				break;
		}
		x = acc;
	}
	return x[iv];
}

TruncationReport truncation_compare(
    const LatticeSpec& spec,
    const std::vector<std::pair<std::vector<long>, std::vector<long>>>& pairs,
    double t) {
	check_spec(spec);
	if (pairs.empty())
		throw InputError("truncation_compare needs at least one pair");
	if (!(t >= 0))
		throw InputError("truncation_compare: t must be >= 0");

	// Smallest radius that still contains every requested point.
	long needed = 1;
	for (const auto& [v, w] : pairs) {
		check_point(spec, v);
		check_point(spec, w);
		for (long c : v)
			needed = std::max(needed, std::abs(c));
		for (long c : w)
			needed = std::max(needed, std::abs(c));
	}

	TruncationReport report;
	report.spec = spec;
	report.t = t;
	for (int r : {(spec.radius + 3) / 4, (spec.radius + 1) / 2, spec.radius}) {
		int clipped = std::max(static_cast<int>(needed), r);
		if (report.radii.empty() || report.radii.back() != clipped)
			report.radii.push_back(clipped);
	}

	report.monotone_all = true;
	for (const auto& [v, w] : pairs) {
		TruncationRow row;
		row.v = v;
		row.w = w;
		row.closed_form = zn_kernel(v, w, t);
		row.section = section_propagator_entry(spec, v, w, t);
		row.abs_gap = std::abs(row.closed_form - row.section);
		row.monotone_in_radius = true;
		double previous = -std::numeric_limits<double>::infinity();
		for (int r : report.radii) {
			LatticeSpec probe{spec.dim, r};
			double entry = r == spec.radius
			                   ? row.section
			                   : section_propagator_entry(probe, v, w, t);
			if (entry < previous - 1e-12)
				row.monotone_in_radius = false;
			previous = entry;
		}
		report.monotone_all = report.monotone_all && row.monotone_in_radius;
		report.rows.push_back(std::move(row));
	}
	return report;
}

} // namespace adjflow

#pragma once

#include "adjflow/graph.hpp"

#include <utility>
#include <vector>

namespace adjflow {

/**
 * Modified Bessel function I_k(x) for k >= 0, x >= 0, by direct series
 * sum_m (x/2)^{2m+k} / (m! (m+k)!), summed until a term falls below
 * 1e-17 of the partial sum.  Arguments are capped at x <= 1400 to stay
 * inside double range.
 */
double bessel_i(int order, double x);

/** Heat-kernel entry of the integer line: (e^{tA(Z)})_{vw} = I_{|v-w|}(2t). */
double z_kernel(long v, long w, double t);

/** Heat-kernel entry of Z^n: the product of the per-coordinate kernels. */
double zn_kernel(const std::vector<long>& v, const std::vector<long>& w,
                 double t);

/** A finite section of Z^dim: the induced subgraph on {-R..R}^dim. */
struct LatticeSpec {
	int dim = 1;
	int radius = 1;
};

/** The section as a Graph; vertices in lexicographic order with labels
    like "-1,0,2". */
Graph lattice_section(const LatticeSpec& spec);

/**
 * Propagator entry (e^{tA_section})_{vw} of the finite section, computed
 * by scaling-and-squaring Taylor steps applied to the basis vector of w
 * (never materializing the dense exponential, so large 2-D sections stay
 * cheap).
 */
double section_propagator_entry(const LatticeSpec& spec,
                                const std::vector<long>& v,
                                const std::vector<long>& w, double t);

struct TruncationRow {
	std::vector<long> v;
	std::vector<long> w;
	double closed_form;
	double section;
	double abs_gap;
	/** Section entries are nondecreasing over the probe radii (every
	    walk kept by a larger box contributes nonnegatively). */
	bool monotone_in_radius;
};

struct TruncationReport {
	LatticeSpec spec;
	double t;
	/** Probe radii used for the monotonicity column (roughly R/4, R/2,
	    R, clipped so every pair stays inside the smallest box). */
	std::vector<int> radii;
	std::vector<TruncationRow> rows;
	bool monotone_all;
};

/** Compares closed-form kernel entries against the finite section for
    each pair; all pair coordinates must lie inside the box. */
TruncationReport truncation_compare(
    const LatticeSpec& spec,
    const std::vector<std::pair<std::vector<long>, std::vector<long>>>& pairs,
    double t);

} // namespace adjflow

#pragma once

#include "adjflow/graph.hpp"
#include "adjflow/spectral.hpp"

#include <optional>
#include <vector>

namespace adjflow {

enum class Direction { Forward, Backward };

/** e^{tA(G)} for signed t (dense, via the spectral decomposition). */
Matrix propagator(const Graph& g, double t);

/** Solution u(t) = e^{tA(G)} u0 of du/dt = Au; t may be negative. */
Vector evolve(const Graph& g, const Vector& u0, double t);

/**
 * Rescaled long-time limit of the forward or backward flow.
 *
 * Forward: e^{-rate*t} e^{tA} -> projector at rate = lambda_max.
 * Backward: e^{rate*t} e^{-tA} -> projector at rate = lambda_min.
 * The rescaled propagator is evaluated spectrally with the rate as
 * shift, so all exponents are <= 0 and no overflow can occur;
 * `gap` is the distance to the nearest eigenvalue outside the extreme
 * cluster and controls the decay e^{-t*gap} of the residual.
 */
struct EvolutionReport {
	Direction direction;
	double t;
	double rate;
	double gap;
	/** False when the spectrum is a single cluster (gap 0); the
	    residual envelope is then meaningless and skipped. */
	bool envelope_checked;
	Matrix rescaled;
	Matrix limit;
	double residual_max; // max |rescaled - limit| entrywise
	double residual_two; // operator 2-norm of the same difference
	/** Forward flow on a regular graph: limit verified equal to the
	    all-ones matrix divided by |V|. */
	bool regular_uniform;
};

EvolutionReport rescaled_limit(const Graph& g, Direction dir,
                               std::optional<double> t = {});

struct PositivityReport {
	double t;
	double min_forward_entry;
	double min_backward_entry;
	bool forward_nonnegative;      // min forward entry >= -1e-12
	bool forward_strictly_positive; // min forward entry > 1e-12
	bool backward_has_negative_entry;
	int backward_witness_v; // entry realizing the backward minimum
	int backward_witness_w;
};

/** Sign structure of e^{tA} and e^{-tA} at a fixed time t > 0. */
PositivityReport positivity_report(const Graph& g, double t);

/**
 * True iff e^{tA(G~)} <= e^{tA(G)} entrywise (tolerance 1e-10) at every
 * sample time.  Both graphs must have the same vertex set, and the
 * result is checked against the subgraph relation G~ <= G, which it must
 * equal for sane sample times (an Error reports any discrepancy).
 */
bool domination_check(const Graph& g, const Graph& g_tilde,
                      const std::vector<double>& t_samples);

/**
 * True iff the doubly stochastic matrix O commutes with A(G) to 1e-10
 * in the row-sum norm.  When true, commutation with e^{tA} at t = +-1
 * is verified as well (to 1e-8).  Throws InputError if O is not doubly
 * stochastic.
 */
bool automorphism_commutes(const Graph& g, const Matrix& o);

/** Positive l2-unit Perron eigenvector of a connected graph. */
Vector perron_vector(const Graph& g);

} // namespace adjflow

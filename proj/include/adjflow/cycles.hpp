#pragma once

#include "adjflow/graph.hpp"
#include "adjflow/spectral.hpp"

#include <string>
#include <vector>

namespace adjflow {

/** Cycle structure of a pre-line graph as seen by the -2 eigenspace of
    its line graph: the eigenvalue appears exactly when H contains an
    even cycle or two odd cycles in the same component. */
enum class CycleClass {
	TreeOrUnicyclicOdd,
	HasEvenCycleOrTwoOddCycles,
};

std::string to_string(CycleClass c);

struct CycleReport {
	LineGraphMap map;
	int multiplicity_formula;
	int multiplicity_spectral;
	CycleClass classification;
	/** Orthonormal basis of the -2 cluster, one column per dimension;
	    every column satisfies Au = -2u and Ju = 0 to 1e-8. */
	Matrix eigenbasis;
	Matrix projector;
};

/** Runs both multiplicity routes (formula and spectral clustering) on a
    connected H with >= 2 edges and reports the -2 eigenstructure of its
    line graph.  The two routes must agree; a mismatch throws. */
CycleReport detect_cycle_structure(const Graph& h);

/**
 * The explicit -2 eigenvector of A(L(H)) supported on an induced even
 * cycle of H: alternating +-1 on the cycle's edges (first edge +1,
 * following the given vertex order), zero elsewhere.  The cycle is given
 * as its vertex labels in traversal order and is validated: even length,
 * distinct vertices, consecutive edges present, and no chords.
 */
Vector even_cycle_eigenvector(const Graph& h,
                              const std::vector<std::string>& cycle);

/** Orthonormal basis of the -2 eigenspace of A(G) where G must be
    structurally the line graph of H (same adjacency under the canonical
    edge order).  Every basis vector is checked to lie in ker J; the
    dimension must match the multiplicity formula. */
Matrix minus_two_eigenspace(const Graph& g, const Graph& h);

struct HamiltonianReport {
	int multiplicity;
	bool minus_two_present;
	bool projector_irreducible;
	/** Necessary-condition semantics only: true does not certify a
	    Hamiltonian cycle. */
	bool condition_holds;
};

/** The -2 necessary condition for Hamiltonicity of H (even vertex
    count required): -2 present and its eigenprojector irreducible,
    i.e. the support graph {(i,j): |P_ij| > 1e-10} is connected. */
HamiltonianReport hamiltonian_necessary(const Graph& h);

} // namespace adjflow

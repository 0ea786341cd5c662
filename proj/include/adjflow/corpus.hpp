#pragma once

#include "adjflow/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace adjflow {

/** Options for the reproducible random-graph corpus the property tests
    and the self-check verb run on. */
struct CorpusOptions {
	int count = 200;
	int min_vertices = 2;
	int max_vertices = 10;
	std::uint64_t seed = 0x5EED;
};

/** Uniform double in [0,1) from the top 53 bits of the generator;
    avoids std::uniform_real_distribution so streams are identical
    across standard libraries. */
double uniform01(std::mt19937_64& rng);

/** Erdos-Renyi graph conditioned on connectivity; the vertex count is
    drawn from [min_vertices, max_vertices] and the edge probability
    from [0.25, 0.75]. */
Graph random_connected_graph(std::mt19937_64& rng, int min_vertices,
                             int max_vertices);

/** The seeded corpus of random connected graphs. */
std::vector<Graph> corpus(const CorpusOptions& options = {});

} // namespace adjflow

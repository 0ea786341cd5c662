#include "adjflow/corpus.hpp"

#include "adjflow/types.hpp"

#include <string>

namespace adjflow {

double uniform01(std::mt19937_64& rng)
{
	return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_connected_graph(std::mt19937_64& rng, int min_vertices,
                             int max_vertices)
{
	if (min_vertices < 2 || max_vertices < min_vertices)
		throw InputError("random_connected_graph: vertex range must satisfy "
		                 "2 <= min <= max");
	const int span = max_vertices - min_vertices + 1;
	for (int attempt = 0; attempt < 10000; ++attempt) {
		const int n =
		    min_vertices + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
		const double p = 0.25 + 0.5 * uniform01(rng);
		Graph g;
		for (int i = 1; i <= n; ++i)
			g.add_vertex("v" + std::to_string(i));
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (uniform01(rng) < p)
					g.add_edge(g.label(i), g.label(j));
		if (g.is_connected())
			return g;
	}
	throw Error("random_connected_graph: failed to draw a connected graph");
}

std::vector<Graph> corpus(const CorpusOptions& options)
{
	std::mt19937_64 rng(options.seed);
	std::vector<Graph> graphs;
	graphs.reserve(static_cast<std::size_t>(options.count));
	for (int i = 0; i < options.count; ++i)
		graphs.push_back(
		    random_connected_graph(rng, options.min_vertices, options.max_vertices));
	return graphs;
}

} // namespace adjflow

// Graph families shared by the test suites.
#ifndef RESGRAPH_TESTS_CORPUS_HPP
#define RESGRAPH_TESTS_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph::testing {

struct NamedGraph {
  std::string name;
  ResolutionGraph graph;
};

/// -1[g=1] -- -2 -- -2
ResolutionGraph example_chain();
/// Cuspidal rational -1 curve followed by m rational -2 curves.
ResolutionGraph cusp_chain(unsigned m);
/// Single rational vertex with one cusp and self-intersection e.
ResolutionGraph cusp_vertex(long e);
/// Single smooth curve of genus g.
ResolutionGraph genus_vertex(unsigned genus, long e);

ResolutionGraph chain(const std::vector<long>& weights);
ResolutionGraph a_n(unsigned n);
ResolutionGraph d_n(unsigned n);  // n >= 4
ResolutionGraph e_n(unsigned n);  // n in {6, 7, 8}
/// Centre of weight `centre` joined to leaves of the given weights.
ResolutionGraph star(long centre, const std::vector<long>& leaves);
/// Cycle of smooth rational curves (a cusp singularity graph).
ResolutionGraph cycle_graph(const std::vector<long>& weights);

std::vector<NamedGraph> du_val_graphs();

/// Valid trees with 2..max_vertices vertices drawn from a fixed seed.
/// Self-intersections in [-4, -2]; occasionally one vertex carries a cusp
/// or genus 1 (and may then have weight -1).
std::vector<NamedGraph> random_trees(std::size_t count, std::uint64_t seed, std::size_t max_vertices = 8);

/// Du Val graphs, the worked example, cusp chains m = 0..4, D_4, and 12
/// random trees.
std::vector<NamedGraph> standard_corpus();

}  // namespace resgraph::testing

#endif  // RESGRAPH_TESTS_CORPUS_HPP

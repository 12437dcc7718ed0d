#ifndef JTRIV_CLI_HPP_
#define JTRIV_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "jtriv/monoid.hpp"

namespace jtriv {

  struct FamilyOptions {
    std::size_t   cap  = 2'000'000;
    std::uint64_t seed = GenerateOptions{}.seed;
  };

  // Family descriptors:
  //   hecke:T:n        0-Hecke monoid; hecke:A:n is S_n, B/D/I use the usual
  //                    rank (resp. the dihedral parameter)
  //   ndpf:n           nondecreasing parking functions
  //   ubool:n          unitriangular Boolean matrices
  //   straubing        the five-element example {1, a, b, ab, ba=0}
  //   incidence:FILE   incidence monoid of a poset
  //   or:FILE          OR(P) of a poset
  //   latticegen:FILE  a lattice with an adjoined generator
  //   quivermonoid:FILE / simplequiver:FILE   M(G) and M'(G) of a digraph
  //   quiverlattice:GRAPH,POSET               M(G, L)
  //   table:FILE       a JSON monoid dump
  // Posets and digraphs are JSON files.
  MonoidTable resolve_family(std::string const& descriptor, FamilyOptions const& opts = {});

  // Runs the command line (args excludes the program name). Exit codes: 0
  // success, 2 guard, 3 invalid input, 4 property-check failure.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Runs f(0..count-1) on up to `threads` workers.
  void parallel_for(std::size_t count, std::size_t threads, std::function<void(std::size_t)> const& f);

}  // namespace jtriv

#endif  // JTRIV_CLI_HPP_

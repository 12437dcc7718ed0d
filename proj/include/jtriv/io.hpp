#ifndef JTRIV_IO_HPP_
#define JTRIV_IO_HPP_

#include <string>

#include "jtriv/algebra.hpp"
#include "jtriv/monoid.hpp"

namespace jtriv {

  // {"n", "generators", "right_cayley", "left_cayley", "repr"}.
  std::string dump_json(MonoidTable const& t);
  // Inverse of dump_json; validates through MonoidTable::from_cayley.
  MonoidTable load_json(std::string const& text);

  // {"idempotents": [repr], "cartan": [[...]], "quiver_edges": [{"src",
  // "dst", "label"}]}, vertices and labels given by element repr.
  std::string representation_json(MonoidTable const& t, CartanMatrix const& c, Quiver const& q);

  // Nodes named by idempotent repr in id order. The Cartan graph has an edge
  // e -> f labelled c_{e,f} for every nonzero off-diagonal entry.
  std::string to_dot(MonoidTable const& t, CartanMatrix const& c);
  std::string to_dot(MonoidTable const& t, Quiver const& q);

}  // namespace jtriv

#endif  // JTRIV_IO_HPP_

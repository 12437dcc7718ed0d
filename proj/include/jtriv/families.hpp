#ifndef JTRIV_FAMILIES_HPP_
#define JTRIV_FAMILIES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jtriv/monoid.hpp"
#include "jtriv/poset.hpp"
#include "jtriv/transformation.hpp"

namespace jtriv {

  // Nondecreasing parking functions: generated by pi_i : i+1 -> i (1 <= i < n)
  // acting on the chain 1 < ... < n.
  Generated<Transformation> ndpf(std::size_t n, GenerateOptions const& opts = {});

  // n x n unitriangular Boolean matrix; row i is byte i of rows, diagonal
  // bits set. n <= 8.
  struct BoolMatrix {
    std::uint8_t  n    = 0;
    std::uint64_t rows = 0;

    static BoolMatrix identity(std::size_t n);
    // The relation with the single edge i -> j (0-based, i < j).
    static BoolMatrix edge(std::size_t n, std::size_t i, std::size_t j);

    bool get(std::size_t i, std::size_t j) const {
      return (rows >> (8 * i + j)) & 1U;
    }
    void set(std::size_t i, std::size_t j) {
      rows |= std::uint64_t(1) << (8 * i + j);
    }
    // Edges i -> j with i < j, in lexicographic order of (i, j).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    bool is_transitive() const;

    bool operator==(BoolMatrix const&) const = default;
  };

  BoolMatrix operator*(BoolMatrix const& g, BoolMatrix const& h);

  // "{(1,2),(2,3)}".
  std::string to_string(BoolMatrix const& m);

  // Transpose along the second diagonal: i -> j becomes n-1-j -> n-1-i.
  BoolMatrix un_antiautomorphism(BoolMatrix const& m);

  // Bit vector of m along the lexicographic enumeration of pairs (i, j).
  std::uint64_t lex_key(BoolMatrix const& m);

  // All 2^(n(n-1)/2) unitriangular Boolean matrices, generated from the
  // single-edge relations. Throws GuardError for n above max_n.
  Generated<BoolMatrix> unitriangular_boolean(std::size_t n, std::size_t max_n = 6, GenerateOptions const& opts = {});

  // Elements of the incidence monoid: a comparable pair (x, y), Zero or One.
  struct IncidenceElement {
    enum Kind : std::uint8_t { one, zero, pair } kind = one;
    std::uint8_t x = 0;
    std::uint8_t y = 0;

    bool operator==(IncidenceElement const&) const = default;
  };

  Generated<IncidenceElement> incidence_monoid(Poset const& p);

  // Finite digraph with distinct edge labels.
  struct Digraph {
    struct Edge {
      std::size_t src;
      std::size_t dst;
      std::string label;
    };
    std::size_t       vertices = 0;
    std::vector<Edge> edges;

    // JSON {"vertices": n, "edges": [[src, dst, "label"], ...]}.
    static Digraph from_json(std::string const& text);
    std::string    to_json() const;
    void           validate(bool simple) const;
  };

  // Elements of the quiver-built monoids: a vertex, an edge, 0 or 1.
  struct QuiverElement {
    enum Kind : std::uint8_t { one, zero, vertex, edge } kind = one;
    std::uint32_t index = 0;

    bool operator==(QuiverElement const&) const = default;
  };

  // M(G): e^2 = e, e.(e->f) = (e->f).f = e->f, everything else 0.
  Generated<QuiverElement> quiver_monoid(Digraph const& g);
  // M(G, L): vertices multiply by the meet of the lattice L, which is given
  // on the vertices and completed by a bottom 0 and a top 1; (e->f).f' =
  // e->f if f <= f', e'.(e->f) = e->f if e <= e'.
  Generated<QuiverElement> quiver_lattice_monoid(Digraph const& g, Poset const& vertex_order);
  // M'(G) for a simple digraph: additionally e f = e->f for every edge.
  Generated<QuiverElement> simple_quiver_monoid(Digraph const& g);

  // Elements of L extended by p: a lattice element, or e p f with e, f above
  // the bottom (any product reaching the bottom collapses to it).
  struct LatticePathElement {
    bool          path = false;
    std::uint32_t e    = 0;
    std::uint32_t f    = 0;

    bool operator==(LatticePathElement const&) const = default;
  };

  // The lattice L (with its meet) extended by a generator p with p e p = 0.
  Generated<LatticePathElement> lattice_generator_monoid(Poset const& lattice);

  // {1, x, y, z, 0}: x^2 = x, y^2 = y, xz = zy = z, other products 0.
  Generated<char> straubing_example();

}  // namespace jtriv

template <>
struct std::hash<jtriv::BoolMatrix> {
  std::size_t operator()(jtriv::BoolMatrix const& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.rows * 0x9e3779b97f4a7c15ULL + m.n);
  }
};

template <>
struct std::hash<jtriv::IncidenceElement> {
  std::size_t operator()(jtriv::IncidenceElement const& a) const noexcept {
    return (std::size_t(a.kind) << 16) | (std::size_t(a.x) << 8) | a.y;
  }
};

template <>
struct std::hash<jtriv::QuiverElement> {
  std::size_t operator()(jtriv::QuiverElement const& a) const noexcept {
    return (std::size_t(a.kind) << 32) | a.index;
  }
};

template <>
struct std::hash<jtriv::LatticePathElement> {
  std::size_t operator()(jtriv::LatticePathElement const& a) const noexcept {
    return (std::size_t(a.path) << 63) ^ (std::size_t(a.e) << 32) ^ a.f;
  }
};

#endif  // JTRIV_FAMILIES_HPP_

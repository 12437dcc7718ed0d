#ifndef JTRIV_ALGEBRA_HPP_
#define JTRIV_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jtriv/algebra_element.hpp"
#include "jtriv/core.hpp"

namespace jtriv {

  // e * f = (ef)^omega; throws InvalidInput unless both are idempotent.
  ElementId star(JTrivialMonoid const& m, ElementId e, ElementId f);

  struct IdempotentLattice {
    std::vector<ElementId>                idems;    // sorted by id
    std::vector<std::vector<bool>>        leq;      // leq[i][j]: idems[i] <=_J idems[j]
    std::vector<std::vector<std::size_t>> star;     // indices into idems
    std::vector<std::vector<std::int64_t>> moebius;  // mu(idems[i], idems[j])

    std::size_t index(ElementId e) const;
    std::size_t top() const {
      return index(identity_id);
    }
  };

  // Throws PropertyFailure("not a lattice") if the star product fails to be
  // the meet.
  IdempotentLattice idempotent_lattice(JTrivialMonoid const& m);

  // g_e = sum over e' <= e of mu(e', e) e', aligned with lattice.idems.
  std::vector<AlgebraElement> moebius_idempotents(IdempotentLattice const& lattice);

  // Linear extension of x -> x^omega.
  AlgebraElement omega_projection(JTrivialMonoid const& m, AlgebraElement const& a);

  // y <- 1 - (1 - y^2)^2 until y^2 = y, at most ceil(log2 n) + 2 rounds;
  // throws PropertyFailure("lift divergence") beyond.
  AlgebraElement lift_power(JTrivialMonoid const& m, AlgebraElement a,
                            std::size_t* iterations = nullptr);

  // Idempotents in the order used by the lifting recursion: J-minimal first.
  std::vector<ElementId> lifting_order(JTrivialMonoid const& m);

  // The lifted orthogonal idempotents f_e, aligned with m.idempotents().
  std::vector<AlgebraElement> orthogonal_idempotents(JTrivialMonoid const& m);

  // b_x = f_lfix(x) x f_rfix(x) for every element x; f as returned by
  // orthogonal_idempotents().
  std::vector<AlgebraElement> b_basis(JTrivialMonoid const& m, std::vector<AlgebraElement> const& f);

  struct CartanMatrix {
    std::vector<ElementId>                idems;
    std::vector<std::vector<std::size_t>> entries;
  };

  CartanMatrix cartan_matrix(JTrivialMonoid const& m);

  // The Cartan matrix minus the identity, read as a digraph (loops included),
  // has no directed cycle. Equivalent to uni-triangularity for some order.
  bool cartan_minus_identity_acyclic(CartanMatrix const& c);

  struct QuiverEdge {
    ElementId src;
    ElementId dst;
    ElementId label;

    bool operator==(QuiverEdge const&) const = default;
  };

  struct Quiver {
    std::vector<ElementId>  idems;
    std::vector<QuiverEdge> edges;  // sorted by label
  };

  enum class SieveMode { compatible_pairs, all_pairs };

  struct QuiverOptions {
    SieveMode   mode        = SieveMode::compatible_pairs;
    std::size_t product_cap = 10'000'000;
  };

  Quiver quiver(JTrivialMonoid const& m, QuiverOptions const& opts = {});

  // d_k = dim rad^k for k = 0, 1, ... up to the first zero (d_0 = n).
  std::vector<std::size_t> radical_filtration(JTrivialMonoid const& m, std::size_t guard = 1000);

  // Coefficients of sum_k (d_k - d_{k+1}) q^k.
  std::vector<std::size_t> radical_series(std::vector<std::size_t> const& dims);

  // "6q^2 + 10q + 8".
  std::string format_series(std::vector<std::size_t> const& coefficients);

  // Right module with basis {x : lfix(x) = e}; x.y = xy if lfix(xy) = e,
  // else 0.
  struct ProjectiveModule {
    ElementId              e;
    std::vector<ElementId> basis;

    std::optional<ElementId> act(JTrivialMonoid const& m, ElementId x, ElementId y) const;
    // Column k holds the basis index of basis[k].y, or nullopt.
    std::vector<std::optional<std::size_t>> action_matrix(JTrivialMonoid const& m, ElementId y) const;
  };

  ProjectiveModule projective_module(JTrivialMonoid const& m, ElementId e);

  // 1 iff e y = e.
  int simple_character(JTrivialMonoid const& m, ElementId e, ElementId y);

  enum class FactorizationKind { nonproper_trivial, proper_trivial, nontrivial_incompatible, compatible };

  struct Factorization {
    ElementId         u;
    ElementId         v;
    FactorizationKind kind;
  };

  // All pairs (u, v) with uv = x, classified.
  std::vector<Factorization> factorizations(JTrivialMonoid const& m, ElementId x);

}  // namespace jtriv

#endif  // JTRIV_ALGEBRA_HPP_

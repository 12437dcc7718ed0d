#ifndef JTRIV_ORP_HPP_
#define JTRIV_ORP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jtriv/algebra_element.hpp"
#include "jtriv/core.hpp"
#include "jtriv/families.hpp"
#include "jtriv/poset.hpp"
#include "jtriv/transformation.hpp"

namespace jtriv {

  // Order-preserving regressive self-maps of a poset, acting on the right.
  using ORFunction = Transformation;

  bool is_or_function(Poset const& p, ORFunction const& f);

  // All of OR(P), by backtracking along the linear extension.
  std::vector<ORFunction> enumerate_or(Poset const& p, std::size_t cap = 2'000'000);

  // OR(P) as a generated monoid: the enumeration is reduced to its
  // irreducible elements, which then generate the table. The closure is
  // checked against the enumeration.
  Generated<ORFunction> or_monoid(Poset const& p, std::size_t cap = 2'000'000);

  // Join-closed subsets containing the minimal elements, in the order of the
  // branching along the linear extension (the "+"/absent branch first).
  std::vector<Subset> or_idempotents(Poset const& p);

  // x -> the unique maximal element of I below x; InvalidInput("not
  // join-closed") if it does not exist.
  ORFunction sup_map(Poset const& p, Subset I);

  Subset image(ORFunction const& f);
  // Minimal points of the fibers of f.
  Subset fiber_minima(Poset const& p, ORFunction const& f);

  // Relation of U_n attached to an extensive order-preserving map of the
  // chain 0 < ... < n-1 (an element of OR of the reversed chain):
  // u -> v iff u <= v <= u.f.
  BoolMatrix extensive_relation(ORFunction const& f);

  struct SymbolSets {
    Subset lfix;
    Subset rfix;
  };

  // lfix = sup over C(F(f)), rfix = sup over C(im f), as image sets.
  SymbolSets or_symbols(Poset const& p, ORFunction const& f);

  // Bit vector of s along the linear extension, first element most
  // significant.
  std::uint64_t lex_key(Poset const& p, Subset s);

  // im(lfix f) <=_lex im(rfix f) for every f, with equality exactly for
  // idempotents.
  bool lex_symbol_order_check(Poset const& p, std::vector<ORFunction> const& elements);

  // x.e_{a,b} = x meet b if x <= a, x otherwise. Requires a meet
  // semilattice and b <= a.
  ORFunction e_ab(Poset const& L, std::size_t a, std::size_t b);

  struct CoverGenerator {
    std::size_t a;
    std::size_t b;

    bool operator==(CoverGenerator const&) const = default;
  };

  // Canonical factorization of an idempotent into e_{a,b} with a covering b,
  // applied left to right: f = g e_{a,a.f} for the last non-fixed a of the
  // linear extension, recursively, each factor refined along covers.
  std::vector<CoverGenerator> factor_idempotent(Poset const& L, ORFunction const& f);

  ORFunction evaluate(Poset const& L, std::vector<CoverGenerator> const& word);

  // Signed diagram for NDPF_N: one sign per generator pi_1..pi_{N-1}, true
  // for "+".
  using SignedDiagram = std::vector<bool>;

  // "++-" etc.
  std::string to_string(SignedDiagram const& d);
  SignedDiagram parse_diagram(std::string const& text);

  struct Demipotent {
    AlgebraElement left;
    AlgebraElement right;
    AlgebraElement product;
  };

  // Needs the table of ndpf(N) (generators pi_1..pi_{N-1} in order).
  Demipotent ndpf_diagram_demipotent(MonoidTable const& ndpf_table, SignedDiagram const& d);

  // prod_{i not in D, ascending} (1 - pi_i) * prod_{i in D, descending} pi_i.
  AlgebraElement ndpf_norton_form(MonoidTable const& ndpf_table, SignedDiagram const& d);

  // All 2^(N-1) diagrams in lexicographic order ("+" before "-").
  std::vector<SignedDiagram> all_diagrams(std::size_t N);

  std::vector<AlgebraElement> ndpf_orthogonal_set(MonoidTable const& ndpf_table, std::size_t max_n = 10);

  struct SemilatticeDemipotent {
    SignedDiagram  diagram;  // per element of the linear extension, true for "+" (absent)
    Subset         subset;   // the join-closed set
    AlgebraElement value;    // C_D
  };

  // The branching construction over the linear extension of L. Needs the
  // OR(L) monoid produced by or_monoid(L). A depth below |L| stops at the
  // nodes of the prefix tree at that depth.
  std::vector<SemilatticeDemipotent> semilattice_demipotents(Poset const& L, Generated<ORFunction> const& orl,
                                                             std::size_t depth = static_cast<std::size_t>(-1));

  struct ConjectureReport {
    std::size_t              poset_size         = 0;
    std::size_t              monoid_size        = 0;
    std::size_t              idempotent_count   = 0;
    std::size_t              demipotent_count   = 0;
    std::size_t              max_power          = 0;  // 0 if some C_D never stabilized
    std::vector<std::size_t> powers;                  // per diagram
    bool                     all_idempotent     = false;
    bool                     orthogonal         = false;
    bool                     sums_to_one        = false;
    bool                     complete           = false;
    bool                     passes             = false;
    double                   seconds            = 0;
    std::string              covers;                  // JSON of the poset
  };

  ConjectureReport conjecture_check(Poset const& L, std::size_t cap = 2'000'000);

  enum class PosetFilter { all, meet_semilattice };

  // Posets on n elements up to isomorphism; labels ascend along a linear
  // extension. n <= 8.
  std::vector<Poset> enumerate_posets(std::size_t n, PosetFilter filter = PosetFilter::all);

  // Canonical code: minimum relation bit string over relabelings that
  // respect an isomorphism-invariant vertex colouring.
  std::uint64_t canonical_code(Poset const& p);

}  // namespace jtriv

#endif  // JTRIV_ORP_HPP_

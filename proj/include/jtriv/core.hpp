#ifndef JTRIV_CORE_HPP_
#define JTRIV_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jtriv/monoid.hpp"

namespace jtriv {

  struct JTrivialityWitness {
    bool                                     j_trivial = true;
    // Two distinct elements generating the same two-sided ideal.
    std::optional<std::pair<ElementId, ElementId>> witness;
  };

  // Strongly connected components of the two-sided Cayley digraph
  // (self-loops ignored); J-trivial iff all are singletons.
  JTrivialityWitness is_j_trivial(MonoidTable const& t);

  // Linear extension of the J-order together with a reachability oracle.
  class JOrderData {
   public:
    // Topological order of the two-sided Cayley digraph: the identity comes
    // first, J-smaller elements later.
    std::vector<ElementId> const& linext() const noexcept {
      return _linext;
    }
    // Position of x in linext().
    std::size_t position(ElementId x) const {
      return _position[x];
    }
    // x <=_J y, i.e. x lies in the two-sided ideal M y M.
    bool leq(ElementId x, ElementId y) const;
    bool less(ElementId x, ElementId y) const {
      return x != y && leq(x, y);
    }

    // Transitive closure is stored up to this size, BFS on demand beyond.
    static constexpr std::size_t closure_limit = 10'000;

   private:
    friend JOrderData j_order(MonoidTable const& t);

    MonoidTable const*         _table = nullptr;
    std::vector<ElementId>     _linext;
    std::vector<std::size_t>   _position;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _reach;  // row y: bitset of {x : x <=_J y}
  };

  // Throws InvalidInput("not J-trivial") on a nontrivial component. The
  // returned object refers to t, which must outlive it.
  JOrderData j_order(MonoidTable const& t);

  // The idempotent power x^omega. Throws InvalidInput if no power x^k with
  // x^k = x^(k+1) is reached within size() steps.
  ElementId omega(MonoidTable const& t, ElementId x);

  bool is_idempotent(MonoidTable const& t, ElementId x);

  // Sorted by id.
  std::vector<ElementId> idempotents(MonoidTable const& t);

  // Star-fold of the idempotents e with x*e = x (resp. e*x = x): the J-minimum
  // of that set, i.e. the right (resp. left) symbol.
  ElementId rfix(MonoidTable const& t, std::vector<ElementId> const& idems, ElementId x);
  ElementId lfix(MonoidTable const& t, std::vector<ElementId> const& idems, ElementId x);

  // Irreducible elements: no factorization x = uv with u != x and v != x.
  std::vector<ElementId> minimal_generators(MonoidTable const& t);

  struct Symbols {
    std::vector<ElementId> lfix;
    std::vector<ElementId> rfix;
    // Whether the generator-stabilizer bitvector lookup reproduced the fold
    // on every element.
    bool fast_path_agrees = false;
  };

  // All left and right symbols by the fold, cross-checked against the
  // bitvector lookup.
  Symbols compute_symbols(MonoidTable const& t, std::vector<ElementId> const& idems);

  // Symbols through the stabilizer-bitvector lookup alone; entries are
  // std::nullopt when the lookup finds no idempotent.
  std::pair<std::vector<std::optional<ElementId>>, std::vector<std::optional<ElementId>>>
  bitvector_symbols(MonoidTable const& t, std::vector<ElementId> const& idems);

  // A J-trivial monoid together with the data every representation-theoretic
  // computation needs: J-order, idempotents and symbols.
  class JTrivialMonoid {
   public:
    explicit JTrivialMonoid(MonoidTable t);

    JTrivialMonoid(JTrivialMonoid const&)            = delete;
    JTrivialMonoid& operator=(JTrivialMonoid const&) = delete;

    MonoidTable const& table() const noexcept {
      return _table;
    }
    std::size_t size() const noexcept {
      return _table.size();
    }
    ElementId product(ElementId x, ElementId y) const {
      return _table.product(x, y);
    }
    JOrderData const& order() const noexcept {
      return _order;
    }
    std::vector<ElementId> const& idempotents() const noexcept {
      return _idems;
    }
    bool is_idempotent(ElementId x) const {
      return _is_idem[x];
    }
    ElementId omega(ElementId x) const {
      return _omega[x];
    }
    ElementId lfix(ElementId x) const {
      return _symbols.lfix[x];
    }
    ElementId rfix(ElementId x) const {
      return _symbols.rfix[x];
    }
    bool symbol_fast_path_agrees() const noexcept {
      return _symbols.fast_path_agrees;
    }

   private:
    MonoidTable            _table;
    JOrderData             _order;
    std::vector<ElementId> _idems;
    std::vector<bool>      _is_idem;
    std::vector<ElementId> _omega;
    Symbols                _symbols;
  };

}  // namespace jtriv

#endif  // JTRIV_CORE_HPP_

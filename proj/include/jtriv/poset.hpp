#ifndef JTRIV_POSET_HPP_
#define JTRIV_POSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jtriv/error.hpp"

namespace jtriv {

  using Subset = std::uint64_t;

  inline bool contains(Subset s, std::size_t x) {
    return (s >> x) & 1U;
  }
  inline Subset singleton(std::size_t x) {
    return Subset(1) << x;
  }

  // Finite poset on {0, ..., n-1}, n <= 64, with a chosen linear extension.
  class Poset {
   public:
    static constexpr std::size_t max_size = 64;

    Poset() = default;

    // Reflexive-transitive closure of the relations a < b; rejects cycles.
    // The linear extension is the ascending labels when valid, otherwise the
    // topological order that always takes the smallest available label.
    static Poset from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& covers);
    // down[x] = {y : y <= x}; validated for reflexivity, antisymmetry and
    // transitivity.
    static Poset from_down_sets(std::vector<Subset> down);

    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);
    // Subsets of a k-set ordered by inclusion; element labels are bitmasks.
    static Poset boolean(std::size_t k);
    // Zigzag 0 < 1 > 2 < 3 ...
    static Poset fence(std::size_t n);

    std::size_t size() const noexcept {
      return _down.size();
    }
    bool leq(std::size_t a, std::size_t b) const {
      return contains(_down[b], a);
    }
    bool less(std::size_t a, std::size_t b) const {
      return a != b && leq(a, b);
    }
    Subset down(std::size_t x) const {
      return _down[x];
    }
    Subset up(std::size_t x) const {
      return _up[x];
    }
    Subset all() const {
      return size() == 64 ? ~Subset(0) : (Subset(1) << size()) - 1;
    }

    std::vector<std::size_t> const& linext() const noexcept {
      return _linext;
    }
    // Same poset with another linear extension (validated).
    Poset with_linext(std::vector<std::size_t> linext) const;

    Subset minimal() const;
    Subset maximal() const;
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    // Common upper bounds of s (all of P for the empty set).
    Subset upper_bounds(Subset s) const;
    Subset lower_bounds(Subset s) const;
    // Minimal common upper bounds; Joins(empty) = minimal elements.
    Subset joins(Subset s) const;
    // Least superset of s stable under joins of its subsets.
    Subset join_closure(Subset s) const;
    bool   is_join_closed(Subset s) const {
      return join_closure(s) == s;
    }

    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
    bool                       is_meet_semilattice() const;
    bool                       is_lattice() const;

    // Induced subposet on the elements of s, relabelled in increasing order.
    Poset restrict(Subset s) const;

    // JSON {"n": ..., "covers": [[a, b], ...]}.
    std::string to_json() const;
    static Poset from_json(std::string const& text);

    bool operator==(Poset const& other) const {
      return _down == other._down;
    }

   private:
    void finish();

    std::vector<Subset>      _down;
    std::vector<Subset>      _up;
    std::vector<std::size_t> _linext;
  };

  inline int popcount(Subset s) {
    return __builtin_popcountll(s);
  }

  template <typename F>
  void for_each_element(Subset s, F&& f) {
    while (s != 0) {
      f(static_cast<std::size_t>(__builtin_ctzll(s)));
      s &= s - 1;
    }
  }

}  // namespace jtriv

#endif  // JTRIV_POSET_HPP_

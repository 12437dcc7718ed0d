#ifndef JTRIV_MONOID_HPP_
#define JTRIV_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jtriv/error.hpp"

namespace jtriv {

  // Index of an element inside a MonoidTable. Id 0 is always the identity.
  using ElementId = std::uint32_t;

  inline constexpr ElementId identity_id = 0;

  template <typename T>
  struct GeneratorSpec {
    std::string label;
    T           action;
  };

  struct GenerateOptions {
    std::size_t   cap                   = 2'000'000;
    std::size_t   associativity_samples = 512;
    std::uint64_t seed                  = 0x6a747269;
  };

  // Immutable finite monoid given by its left and right Cayley graphs with
  // respect to a generating family.
  //
  // Element ids follow breadth-first discovery order from the identity with
  // generator order as tie-break, so ids are sorted by shortlex order of the
  // first-discovered (hence reduced) generator word.
  class MonoidTable {
   public:
    MonoidTable() = default;

    // Builds a table from raw Cayley data. right[x][j] = x * s_j and
    // left[x][j] = s_j * x. Ids must be in breadth-first order, which is
    // checked; the factorization words are rebuilt from the right table.
    static MonoidTable from_cayley(std::vector<std::string>              labels,
                                   std::vector<std::vector<ElementId>>   right,
                                   std::vector<std::vector<ElementId>>   left,
                                   std::vector<std::string>              repr);

    // Builds a table from the right and left actions of the generators on an
    // abstract element set {0, ..., count-1} containing the identity `root`.
    // Elements are renumbered into breadth-first order; every element must be
    // reachable from root.
    static MonoidTable from_actions(
        std::vector<std::string>                                labels,
        std::size_t                                             count,
        std::size_t                                             root,
        std::function<std::size_t(std::size_t, std::size_t)> const& right,
        std::function<std::size_t(std::size_t, std::size_t)> const& left,
        std::function<std::string(std::size_t)> const&             repr,
        std::vector<std::size_t>* original = nullptr);

    std::size_t size() const noexcept {
      return _repr.size();
    }
    std::size_t number_of_generators() const noexcept {
      return _labels.size();
    }
    ElementId generator(std::size_t j) const {
      return _right[j];  // identity * s_j
    }
    std::string const& generator_label(std::size_t j) const {
      return _labels.at(j);
    }
    std::vector<std::string> const& generator_labels() const noexcept {
      return _labels;
    }

    ElementId right(ElementId x, std::size_t j) const {
      return _right[static_cast<std::size_t>(x) * _labels.size() + j];
    }
    ElementId left(ElementId x, std::size_t j) const {
      return _left[static_cast<std::size_t>(x) * _labels.size() + j];
    }

    // Factorization x = prefix(x) * s_{last_generator(x)}; undefined for 0.
    ElementId prefix(ElementId x) const {
      return _prefix[x];
    }
    std::size_t last_generator(ElementId x) const {
      return _last[x];
    }
    std::size_t word_length(ElementId x) const {
      return _depth[x];
    }
    // Generator indices of the reduced word of x, left to right.
    std::vector<std::size_t> word(ElementId x) const;

    ElementId product(ElementId x, ElementId y) const;

    // x * (s_{w_0} s_{w_1} ...).
    ElementId act(ElementId x, std::vector<std::size_t> const& w) const;

    std::string const& repr(ElementId x) const {
      return _repr.at(x);
    }
    std::vector<std::string> const& reprs() const noexcept {
      return _repr;
    }

    // Messages about dropped degenerate generators.
    std::vector<std::string> const& warnings() const noexcept {
      return _warnings;
    }

    // Raw row-major Cayley tables (size() * number_of_generators()).
    std::vector<ElementId> const& right_table() const noexcept {
      return _right;
    }
    std::vector<ElementId> const& left_table() const noexcept {
      return _left;
    }

    bool has_product_table() const noexcept {
      return !_products.empty();
    }

    // Above this size no n x n product table is kept and products walk the
    // word of the right operand instead.
    static constexpr std::size_t product_table_limit = 2048;

   private:
    template <typename T, typename Compose, typename Repr, typename Hash>
    friend struct Generator;

    void finalize();

    std::vector<std::string> _labels;
    std::vector<ElementId>   _right;
    std::vector<ElementId>   _left;
    std::vector<ElementId>   _prefix;
    std::vector<std::uint32_t> _last;
    std::vector<std::uint32_t> _depth;
    std::vector<std::string> _repr;
    std::vector<std::string> _warnings;
    std::vector<ElementId>   _products;
  };

  // Result of generate(): the table together with the underlying values, so
  // that products can be checked against direct composition.
  template <typename T>
  struct Generated {
    MonoidTable    table;
    std::vector<T> values;
  };

  template <typename T, typename Compose, typename Repr, typename Hash>
  struct Generator {
    static Generated<T> run(std::vector<GeneratorSpec<T>> gens,
                            T const&                      identity,
                            Compose const&                compose,
                            Repr const&                   repr,
                            GenerateOptions const&        opts) {
      Generated<T> out;
      MonoidTable& t = out.table;
      std::vector<T>& values = out.values;

      std::vector<GeneratorSpec<T>> kept;
      for (auto& g : gens) {
        if (g.action == identity) {
          t._warnings.push_back("generator '" + g.label
                                + "' equals the identity and was dropped");
          continue;
        }
        bool dup = false;
        for (auto const& k : kept) {
          if (k.action == g.action) {
            t._warnings.push_back("generator '" + g.label + "' duplicates '"
                                  + k.label + "' and was dropped");
            dup = true;
            break;
          }
        }
        if (!dup) {
          kept.push_back(std::move(g));
        }
      }

      std::size_t const m = kept.size();
      for (auto const& g : kept) {
        t._labels.push_back(g.label);
      }

      std::unordered_map<T, ElementId, Hash> index;
      values.push_back(identity);
      index.emplace(identity, 0);
      t._prefix.push_back(0);
      t._last.push_back(0);
      t._depth.push_back(0);

      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          T    y  = compose(values[i], kept[j].action);
          auto it = index.find(y);
          if (it == index.end()) {
            if (values.size() >= opts.cap) {
              throw GuardError("closure too large (cap "
                               + std::to_string(opts.cap) + " elements)");
            }
            auto id = static_cast<ElementId>(values.size());
            index.emplace(y, id);
            values.push_back(std::move(y));
            t._prefix.push_back(static_cast<ElementId>(i));
            t._last.push_back(static_cast<std::uint32_t>(j));
            t._depth.push_back(t._depth[i] + 1);
            t._right.push_back(id);
          } else {
            t._right.push_back(it->second);
          }
        }
      }

      std::size_t const n = values.size();
      t._left.resize(n * m);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          auto it = index.find(compose(kept[j].action, values[i]));
          if (it == index.end()) {
            throw InvalidInput("invalid composition: left product escapes the "
                               "right closure");
          }
          t._left[i * m + j] = it->second;
        }
      }

      if (n > 0 && opts.associativity_samples > 0) {
        std::mt19937_64                            rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < opts.associativity_samples; ++s) {
          T const& a = values[pick(rng)];
          T const& b = values[pick(rng)];
          T const& c = values[pick(rng)];
          if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
            throw InvalidInput("invalid composition: associativity fails on a "
                               "sampled triple");
          }
        }
      }

      t._repr.reserve(n);
      for (auto const& v : values) {
        t._repr.push_back(repr(v));
      }
      t.finalize();
      return out;
    }
  };

  // Closure of the generators under right multiplication, starting from the
  // identity. compose(a, b) is the product a*b; it must be associative.
  template <typename T,
            typename Compose,
            typename Repr,
            typename Hash = std::hash<T>>
  Generated<T> generate(std::vector<GeneratorSpec<T>> gens,
                        T const&                      identity,
                        Compose const&                compose,
                        Repr const&                   repr,
                        GenerateOptions const&        opts = {}) {
    return Generator<T, Compose, Repr, Hash>::run(
        std::move(gens), identity, compose, repr, opts);
  }

}  // namespace jtriv

#endif  // JTRIV_MONOID_HPP_

#ifndef JTRIV_COXETER_HPP_
#define JTRIV_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jtriv/monoid.hpp"

namespace jtriv {

  // Finite Coxeter group of type A (symmetric group S_{rank+1}), B (signed
  // permutations), D (even-signed permutations) or I (dihedral I_n), with
  // elements numbered in breadth-first order from the identity.
  //
  // Generators: type A, s_1..s_rank swap positions i, i+1. Types B and D add
  // s_0 in front: in B it negates the first entry, in D it swaps the first
  // two entries and negates both. Type I has s_1, s_2.
  class CoxeterGroup {
   public:
    static constexpr std::size_t default_cap = 1'000'000;

    CoxeterGroup(char type, std::size_t n, std::size_t cap = default_cap);

    char type() const noexcept {
      return _type;
    }
    // rank for A, B, D; the dihedral order parameter for I.
    std::size_t parameter() const noexcept {
      return _n;
    }
    std::size_t rank() const noexcept {
      return _labels.size();
    }
    std::string name() const;

    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<std::string> const& generator_labels() const noexcept {
      return _labels;
    }

    std::size_t length(std::size_t w) const {
      return _length[w];
    }
    // Indices of w s_i and s_i w.
    std::size_t right_multiply(std::size_t w, std::size_t i) const {
      return _right[w * rank() + i];
    }
    std::size_t left_multiply(std::size_t w, std::size_t i) const {
      return _left[w * rank() + i];
    }
    // Shortlex-minimal reduced word, as generator indices.
    std::vector<std::size_t> reduced_word(std::size_t w) const;

    // One-line notation: "2143" for permutations, "[-2,1,3]" for signed
    // permutations, "a3"/"b3"/"w0" for dihedral elements.
    std::string one_line(std::size_t w) const;
    // Index of the element with the given one-line notation.
    std::size_t find(std::string const& one_line) const;

    // Coxeter matrix entry m(s_i, s_j).
    std::size_t coxeter_matrix(std::size_t i, std::size_t j) const {
      return _m[i][j];
    }

    std::size_t longest_element() const;

   private:
    char                                  _type;
    std::size_t                           _n;
    std::vector<std::string>              _labels;
    std::vector<std::vector<int>>         _elements;
    std::vector<std::size_t>              _length;
    std::vector<std::size_t>              _right;
    std::vector<std::size_t>              _left;
    std::vector<std::size_t>              _prefix;
    std::vector<std::size_t>              _last;
    std::vector<std::vector<std::size_t>> _m;
  };

  // Unsupported types (E, F, H, anything else) raise InvalidInput("... out of
  // scope").
  CoxeterGroup coxeter(char type, std::size_t n);

  // Bitmasks over generator indices.
  struct Descents {
    std::uint32_t left    = 0;
    std::uint32_t right   = 0;
    std::uint32_t content = 0;
  };

  Descents descents(CoxeterGroup const& W, std::size_t w);

  // H_0(W) as the monoid of maps w -> w.pi_i on W, where w.pi_i = w s_i if
  // that increases the length and w otherwise. Element reprs are reduced
  // words over the generator labels, e.g. "[1,2,1]". If group_index is given
  // it receives, for each monoid element pi_w, the group index of w.
  MonoidTable hecke_monoid(CoxeterGroup const& W, std::vector<std::size_t>* group_index = nullptr);

  // Pairs (J, K) of incomparable generator subsets such that no j in J \ K
  // commutes with any k in K \ J; pi_J pi_K are the quiver labels of H_0(W).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hecke_quiver_prediction(CoxeterGroup const& W);

  // pi_J in a monoid generated by idempotents: (prod_{j in J} s_j)^omega.
  ElementId parabolic_idempotent(MonoidTable const& t, std::uint32_t J);

}  // namespace jtriv

#endif  // JTRIV_COXETER_HPP_

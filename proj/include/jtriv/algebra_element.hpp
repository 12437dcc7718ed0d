#ifndef JTRIV_ALGEBRA_ELEMENT_HPP_
#define JTRIV_ALGEBRA_ELEMENT_HPP_

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "jtriv/monoid.hpp"

namespace jtriv {

  // Element of the monoid algebra QM: a sparse exact-rational linear
  // combination of monoid elements. Terms are sorted by id and never zero.
  class AlgebraElement {
   public:
    using Term = std::pair<ElementId, mpq_class>;

    AlgebraElement() = default;

    static AlgebraElement basis(ElementId x, mpq_class c = 1);
    static AlgebraElement one() {
      return basis(identity_id);
    }
    // Takes arbitrary (possibly repeated, possibly zero) terms.
    static AlgebraElement from_terms(std::vector<Term> terms);

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    std::size_t size() const noexcept {
      return _terms.size();
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    mpq_class coefficient(ElementId x) const;

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);
    AlgebraElement& operator*=(mpq_class const& c);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(mpq_class const& c, AlgebraElement a) {
      return a *= c;
    }
    friend AlgebraElement operator-(AlgebraElement a) {
      return a *= -1;
    }

    bool operator==(AlgebraElement const& other) const;

    // e.g. "[1] - 2*[1,2]"; "0" for the zero element.
    std::string to_string(MonoidTable const& t) const;

   private:
    std::vector<Term> _terms;
  };

  AlgebraElement multiply(MonoidTable const& t, AlgebraElement const& a, AlgebraElement const& b);

}  // namespace jtriv

#endif  // JTRIV_ALGEBRA_ELEMENT_HPP_

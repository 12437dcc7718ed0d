#ifndef JTRIV_ECHELON_HPP_
#define JTRIV_ECHELON_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jtriv/algebra_element.hpp"

namespace jtriv {

  // Incremental row echelon form over the integers. Rows are sparse, sorted by
  // column, primitive (content 1) and have a positive pivot; elimination is
  // fraction-free.
  class Echelon {
   public:
    using Row = std::vector<std::pair<std::size_t, mpz_class>>;

    // Reduces v against the stored rows; stores the remainder if nonzero.
    // Returns whether the rank increased.
    bool insert(Row v);
    bool insert(AlgebraElement const& a);

    std::size_t rank() const noexcept {
      return _rows.size();
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    // Each stored row as an algebra element.
    std::vector<AlgebraElement> basis() const;

   private:
    std::vector<Row>                   _rows;
    std::map<std::size_t, std::size_t> _pivot;  // column -> row index
  };

  // Integer row with the same span as a (denominators cleared).
  Echelon::Row integer_row(AlgebraElement const& a);

}  // namespace jtriv

#endif  // JTRIV_ECHELON_HPP_

#include "jtriv/monoid.hpp"

#include <algorithm>

namespace jtriv {

  void MonoidTable::finalize() {
    std::size_t const n = size();
    _products.clear();
    if (n > product_table_limit) {
      return;
    }
    // Column y is filled from column prefix(y), which has a smaller id.
    _products.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      _products[x * n] = static_cast<ElementId>(x);
    }
    for (std::size_t y = 1; y < n; ++y) {
      ElementId const   p = _prefix[y];
      std::size_t const j = _last[y];
      for (std::size_t x = 0; x < n; ++x) {
        _products[x * n + y] = right(_products[x * n + p], j);
      }
    }
  }

  std::vector<std::size_t> MonoidTable::word(ElementId x) const {
    std::vector<std::size_t> w(_depth.at(x));
    for (std::size_t k = w.size(); k > 0; --k) {
      w[k - 1] = _last[x];
      x        = _prefix[x];
    }
    return w;
  }

  ElementId MonoidTable::product(ElementId x, ElementId y) const {
    if (!_products.empty()) {
      return _products[static_cast<std::size_t>(x) * size() + y];
    }
    thread_local std::vector<std::uint32_t> buf;
    buf.clear();
    while (y != 0) {
      buf.push_back(_last[y]);
      y = _prefix[y];
    }
    for (auto it = buf.rbegin(); it != buf.rend(); ++it) {
      x = right(x, *it);
    }
    return x;
  }

  ElementId MonoidTable::act(ElementId x, std::vector<std::size_t> const& w) const {
    for (auto j : w) {
      x = right(x, j);
    }
    return x;
  }

  MonoidTable MonoidTable::from_cayley(std::vector<std::string>            labels,
                                       std::vector<std::vector<ElementId>> right,
                                       std::vector<std::vector<ElementId>> left,
                                       std::vector<std::string>            repr) {
    std::size_t const n = repr.size();
    std::size_t const m = labels.size();
    if (n == 0) {
      throw InvalidInput("a monoid table needs at least the identity");
    }
    if (right.size() != n || left.size() != n) {
      throw InvalidInput("Cayley tables do not match the element count");
    }
    MonoidTable t;
    t._labels = std::move(labels);
    t._repr   = std::move(repr);
    t._right.reserve(n * m);
    t._left.reserve(n * m);
    for (std::size_t x = 0; x < n; ++x) {
      if (right[x].size() != m || left[x].size() != m) {
        throw InvalidInput("Cayley table row has the wrong width");
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (right[x][j] >= n || left[x][j] >= n) {
          throw InvalidInput("Cayley table entry out of range");
        }
        t._right.push_back(right[x][j]);
        t._left.push_back(left[x][j]);
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (t._left[j] != t._right[j]) {
        throw InvalidInput("left and right Cayley tables disagree on generators");
      }
    }
    // Rebuild the breadth-first spanning tree and check id order.
    t._prefix.assign(n, 0);
    t._last.assign(n, 0);
    t._depth.assign(n, 0);
    ElementId next = 1;
    for (std::size_t x = 0; x < n && next < n; ++x) {
      if (x >= next) {
        throw InvalidInput("Cayley table is not generated by its generators");
      }
      for (std::size_t j = 0; j < m; ++j) {
        ElementId y = t._right[x * m + j];
        if (y == next) {
          t._prefix[y] = static_cast<ElementId>(x);
          t._last[y]   = static_cast<std::uint32_t>(j);
          t._depth[y]  = t._depth[x] + 1;
          ++next;
        } else if (y > next) {
          throw InvalidInput("element ids are not in breadth-first order");
        }
      }
    }
    if (next != n) {
      throw InvalidInput("Cayley table is not generated by its generators");
    }
    // Together with agreement on the identity row, this forces left[x][j]
    // to be s_j * x.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          if (t._right[t._left[x * m + j] * m + k] != t._left[t._right[x * m + k] * m + j]) {
            throw InvalidInput("left and right Cayley tables do not commute");
          }
        }
      }
    }
    t.finalize();
    return t;
  }

  MonoidTable MonoidTable::from_actions(
      std::vector<std::string>                                    labels,
      std::size_t                                                 count,
      std::size_t                                                 root,
      std::function<std::size_t(std::size_t, std::size_t)> const& right,
      std::function<std::size_t(std::size_t, std::size_t)> const& left,
      std::function<std::string(std::size_t)> const&             repr,
      std::vector<std::size_t>*                                   original) {
    std::size_t const m       = labels.size();
    constexpr auto    unknown = static_cast<ElementId>(-1);
    std::vector<ElementId>   id_of(count, unknown);
    std::vector<std::size_t> order{root};
    id_of.at(root) = 0;
    MonoidTable t;
    t._labels = std::move(labels);
    t._prefix.push_back(0);
    t._last.push_back(0);
    t._depth.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t y = right(order[i], j);
        if (id_of.at(y) == unknown) {
          id_of[y] = static_cast<ElementId>(order.size());
          order.push_back(y);
          t._prefix.push_back(static_cast<ElementId>(i));
          t._last.push_back(static_cast<std::uint32_t>(j));
          t._depth.push_back(t._depth[i] + 1);
        }
        t._right.push_back(id_of[y]);
      }
    }
    if (order.size() != count) {
      throw InvalidInput("element set is not generated by its generators");
    }
    t._left.resize(count * m);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        t._left[i * m + j] = id_of.at(left(order[i], j));
      }
    }
    t._repr.reserve(count);
    for (auto x : order) {
      t._repr.push_back(repr(x));
    }
    if (original != nullptr) {
      *original = std::move(order);
    }
    t.finalize();
    return t;
  }

}  // namespace jtriv

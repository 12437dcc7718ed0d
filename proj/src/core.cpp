#include "jtriv/core.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace jtriv {

  namespace {

    // Out-neighbours of x in the two-sided Cayley digraph.
    template <typename F>
    void for_each_successor(MonoidTable const& t, ElementId x, F&& f) {
      std::size_t const m = t.number_of_generators();
      for (std::size_t j = 0; j < m; ++j) {
        ElementId y = t.right(x, j);
        if (y != x) {
          f(y);
        }
        y = t.left(x, j);
        if (y != x) {
          f(y);
        }
      }
    }

    // Iterative Tarjan; returns the first component of size > 1 found.
    std::optional<std::vector<ElementId>> nontrivial_scc(MonoidTable const& t) {
      std::size_t const n = t.size();
      std::size_t const m = t.number_of_generators();
      constexpr std::size_t undefined = static_cast<std::size_t>(-1);
      std::vector<std::size_t> index(n, undefined), low(n, 0);
      std::vector<bool>        on_stack(n, false);
      std::vector<ElementId>   stack;
      struct Frame {
        ElementId   v;
        std::size_t edge;
      };
      std::vector<Frame> calls;
      std::size_t        counter = 0;

      for (ElementId root = 0; root < n; ++root) {
        if (index[root] != undefined) {
          continue;
        }
        calls.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!calls.empty()) {
          Frame& fr = calls.back();
          ElementId v = fr.v;
          if (fr.edge < 2 * m) {
            std::size_t e = fr.edge++;
            ElementId   w = (e % 2 == 0) ? t.right(v, e / 2) : t.left(v, e / 2);
            if (w == v) {
              continue;
            }
            if (index[w] == undefined) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              calls.push_back({w, 0});
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          if (low[v] == index[v]) {
            std::vector<ElementId> comp;
            ElementId              w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp.push_back(w);
            } while (w != v);
            if (comp.size() > 1) {
              std::sort(comp.begin(), comp.end());
              return comp;
            }
          }
          calls.pop_back();
          if (!calls.empty()) {
            ElementId parent = calls.back().v;
            low[parent]      = std::min(low[parent], low[v]);
          }
        }
      }
      return std::nullopt;
    }

    ElementId star_fold(MonoidTable const& t, ElementId r, ElementId e) {
      return omega(t, t.product(r, e));
    }

  }  // namespace

  JTrivialityWitness is_j_trivial(MonoidTable const& t) {
    JTrivialityWitness result;
    if (auto comp = nontrivial_scc(t)) {
      result.j_trivial = false;
      result.witness   = std::make_pair((*comp)[0], (*comp)[1]);
    }
    return result;
  }

  JOrderData j_order(MonoidTable const& t) {
    std::size_t const n = t.size();
    JOrderData        d;
    d._table = &t;

    // Kahn's algorithm; leftover vertices lie on a cycle.
    std::vector<std::size_t> indegree(n, 0);
    for (ElementId x = 0; x < n; ++x) {
      for_each_successor(t, x, [&](ElementId y) { ++indegree[y]; });
    }
    std::deque<ElementId> queue;
    for (ElementId x = 0; x < n; ++x) {
      if (indegree[x] == 0) {
        queue.push_back(x);
      }
    }
    d._linext.reserve(n);
    while (!queue.empty()) {
      ElementId x = queue.front();
      queue.pop_front();
      d._linext.push_back(x);
      for_each_successor(t, x, [&](ElementId y) {
        if (--indegree[y] == 0) {
          queue.push_back(y);
        }
      });
    }
    if (d._linext.size() != n) {
      throw InvalidInput("not J-trivial");
    }
    d._position.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      d._position[d._linext[i]] = i;
    }

    if (n <= JOrderData::closure_limit) {
      d._words = (n + 63) / 64;
      d._reach.assign(n * d._words, 0);
      for (std::size_t i = n; i > 0; --i) {
        ElementId      x   = d._linext[i - 1];
        std::uint64_t* row = d._reach.data() + x * d._words;
        row[x / 64] |= std::uint64_t(1) << (x % 64);
        for_each_successor(t, x, [&](ElementId y) {
          std::uint64_t const* other = d._reach.data() + y * d._words;
          for (std::size_t w = 0; w < d._words; ++w) {
            row[w] |= other[w];
          }
        });
      }
    }
    return d;
  }

  bool JOrderData::leq(ElementId x, ElementId y) const {
    if (x == y) {
      return true;
    }
    if (_position[x] < _position[y]) {
      return false;
    }
    if (!_reach.empty()) {
      return (_reach[y * _words + x / 64] >> (x % 64)) & 1U;
    }
    std::vector<bool>     seen(_table->size(), false);
    std::deque<ElementId> queue{y};
    seen[y] = true;
    while (!queue.empty()) {
      ElementId z = queue.front();
      queue.pop_front();
      bool found = false;
      for_each_successor(*_table, z, [&](ElementId w) {
        if (w == x) {
          found = true;
        }
        if (!seen[w] && _position[w] <= _position[x]) {
          seen[w] = true;
          queue.push_back(w);
        }
      });
      if (found) {
        return true;
      }
    }
    return false;
  }

  ElementId omega(MonoidTable const& t, ElementId x) {
    ElementId p = x;
    for (std::size_t k = 0; k <= t.size(); ++k) {
      ElementId q = t.product(p, x);
      if (q == p) {
        return p;
      }
      p = q;
    }
    throw InvalidInput("not aperiodic");
  }

  bool is_idempotent(MonoidTable const& t, ElementId x) {
    return t.product(x, x) == x;
  }

  std::vector<ElementId> idempotents(MonoidTable const& t) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < t.size(); ++x) {
      if (is_idempotent(t, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  ElementId rfix(MonoidTable const& t, std::vector<ElementId> const& idems, ElementId x) {
    ElementId r = identity_id;
    for (ElementId e : idems) {
      if (t.product(x, e) == x) {
        r = star_fold(t, r, e);
      }
    }
    return r;
  }

  ElementId lfix(MonoidTable const& t, std::vector<ElementId> const& idems, ElementId x) {
    ElementId r = identity_id;
    for (ElementId e : idems) {
      if (t.product(e, x) == x) {
        r = star_fold(t, r, e);
      }
    }
    return r;
  }

  std::vector<ElementId> minimal_generators(MonoidTable const& t) {
    std::size_t const n = t.size();
    std::vector<bool> reducible(n, false);
    reducible[identity_id] = true;
    for (ElementId u = 1; u < n; ++u) {
      for (ElementId v = 1; v < n; ++v) {
        ElementId x = t.product(u, v);
        if (x != u && x != v) {
          reducible[x] = true;
        }
      }
    }
    std::vector<ElementId> out;
    for (ElementId x = 0; x < n; ++x) {
      if (!reducible[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::pair<std::vector<std::optional<ElementId>>, std::vector<std::optional<ElementId>>>
  bitvector_symbols(MonoidTable const& t, std::vector<ElementId> const& idems) {
    std::size_t const m = t.number_of_generators();
    auto right_bits = [&](ElementId x) {
      std::vector<bool> b(m);
      for (std::size_t j = 0; j < m; ++j) {
        b[j] = t.right(x, j) == x;
      }
      return b;
    };
    auto left_bits = [&](ElementId x) {
      std::vector<bool> b(m);
      for (std::size_t j = 0; j < m; ++j) {
        b[j] = t.left(x, j) == x;
      }
      return b;
    };
    // For an idempotent both bitvectors coincide.
    std::unordered_map<std::vector<bool>, ElementId> tree;
    for (ElementId e : idems) {
      tree.emplace(right_bits(e), e);
    }
    std::vector<std::optional<ElementId>> lf(t.size()), rf(t.size());
    for (ElementId x = 0; x < t.size(); ++x) {
      if (auto it = tree.find(left_bits(x)); it != tree.end()) {
        lf[x] = it->second;
      }
      if (auto it = tree.find(right_bits(x)); it != tree.end()) {
        rf[x] = it->second;
      }
    }
    return {std::move(lf), std::move(rf)};
  }

  Symbols compute_symbols(MonoidTable const& t, std::vector<ElementId> const& idems) {
    Symbols s;
    s.lfix.resize(t.size());
    s.rfix.resize(t.size());
    for (ElementId x = 0; x < t.size(); ++x) {
      s.lfix[x] = lfix(t, idems, x);
      s.rfix[x] = rfix(t, idems, x);
    }
    auto [lf, rf]      = bitvector_symbols(t, idems);
    s.fast_path_agrees = true;
    for (ElementId x = 0; x < t.size(); ++x) {
      if (lf[x] != s.lfix[x] || rf[x] != s.rfix[x]) {
        s.fast_path_agrees = false;
        break;
      }
    }
    return s;
  }

  JTrivialMonoid::JTrivialMonoid(MonoidTable t)
      : _table(std::move(t)), _order(j_order(_table)) {
    _idems = jtriv::idempotents(_table);
    _is_idem.assign(_table.size(), false);
    for (ElementId e : _idems) {
      _is_idem[e] = true;
    }
    _omega.resize(_table.size());
    for (ElementId x = 0; x < _table.size(); ++x) {
      _omega[x] = jtriv::omega(_table, x);
    }
    _symbols = compute_symbols(_table, _idems);
  }

}  // namespace jtriv

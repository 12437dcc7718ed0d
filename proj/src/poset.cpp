#include "jtriv/poset.hpp"

#include <algorithm>

#include "json.hpp"

namespace jtriv {

  Poset Poset::from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& covers) {
    if (n > max_size) {
      throw InvalidInput("posets are limited to " + std::to_string(max_size) + " elements");
    }
    std::vector<Subset> down(n);
    for (std::size_t x = 0; x < n; ++x) {
      down[x] = singleton(x);
    }
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) {
        throw InvalidInput("cover relation mentions an element out of range");
      }
      if (a == b) {
        throw InvalidInput("cover relation is not strict");
      }
      down[b] |= singleton(a);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t x = 0; x < n; ++x) {
        if (contains(down[x], k)) {
          down[x] |= down[k];
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (contains(down[x], y) && contains(down[y], x)) {
          throw InvalidInput("relation is not antisymmetric");
        }
      }
    }
    Poset p;
    p._down = std::move(down);
    p.finish();
    return p;
  }

  Poset Poset::from_down_sets(std::vector<Subset> down) {
    std::size_t const n = down.size();
    if (n > max_size) {
      throw InvalidInput("posets are limited to " + std::to_string(max_size) + " elements");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!contains(down[x], x) || (n < 64 && (down[x] >> n) != 0)) {
        throw InvalidInput("relation is not reflexive");
      }
      for_each_element(down[x], [&](std::size_t y) {
        if (y != x && contains(down[y], x)) {
          throw InvalidInput("relation is not antisymmetric");
        }
        if ((down[y] & ~down[x]) != 0) {
          throw InvalidInput("relation is not transitive");
        }
      });
    }
    Poset p;
    p._down = std::move(down);
    p.finish();
    return p;
  }

  void Poset::finish() {
    std::size_t const n = _down.size();
    _up.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for_each_element(_down[x], [&](std::size_t y) { _up[y] |= singleton(x); });
    }
    _linext.clear();
    Subset done = 0;
    while (_linext.size() < n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!contains(done, x) && (_down[x] & ~done) == singleton(x)) {
          _linext.push_back(x);
          done |= singleton(x);
          break;
        }
      }
    }
  }

  Poset Poset::with_linext(std::vector<std::size_t> linext) const {
    if (linext.size() != size()) {
      throw InvalidInput("linear extension has the wrong length");
    }
    Subset done = 0;
    for (std::size_t x : linext) {
      if (x >= size() || contains(done, x) || (_down[x] & ~done) != singleton(x)) {
        throw InvalidInput("not a linear extension");
      }
      done |= singleton(x);
    }
    Poset p  = *this;
    p._linext = std::move(linext);
    return p;
  }

  Poset Poset::chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> c;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      c.emplace_back(i, i + 1);
    }
    return from_covers(n, c);
  }

  Poset Poset::antichain(std::size_t n) {
    return from_covers(n, {});
  }

  Poset Poset::boolean(std::size_t k) {
    std::size_t const n = std::size_t(1) << k;
    std::vector<Subset> down(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if ((y & ~x) == 0) {
          down[x] |= singleton(y);
        }
      }
    }
    return from_down_sets(std::move(down));
  }

  Poset Poset::fence(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> c;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (i % 2 == 0) {
        c.emplace_back(i, i + 1);
      } else {
        c.emplace_back(i + 1, i);
      }
    }
    return from_covers(n, c);
  }

  Subset Poset::minimal() const {
    Subset s = 0;
    for (std::size_t x = 0; x < size(); ++x) {
      if (_down[x] == singleton(x)) {
        s |= singleton(x);
      }
    }
    return s;
  }

  Subset Poset::maximal() const {
    Subset s = 0;
    for (std::size_t x = 0; x < size(); ++x) {
      if (_up[x] == singleton(x)) {
        s |= singleton(x);
      }
    }
    return s;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> c;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        if (less(x, y)) {
          Subset between = _up[x] & _down[y] & ~singleton(x) & ~singleton(y);
          if (between == 0) {
            c.emplace_back(x, y);
          }
        }
      }
    }
    return c;
  }

  Subset Poset::upper_bounds(Subset s) const {
    Subset u = all();
    for_each_element(s, [&](std::size_t x) { u &= _up[x]; });
    return u;
  }

  Subset Poset::lower_bounds(Subset s) const {
    Subset u = all();
    for_each_element(s, [&](std::size_t x) { u &= _down[x]; });
    return u;
  }

  Subset Poset::joins(Subset s) const {
    Subset u = upper_bounds(s), out = 0;
    for_each_element(u, [&](std::size_t z) {
      if ((_down[z] & u) == singleton(z)) {
        out |= singleton(z);
      }
    });
    return out;
  }

  Subset Poset::join_closure(Subset s) const {
    // z is a join of some subset of s exactly when it is a minimal upper
    // bound of the part of s below it.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t z : _linext) {
        if (contains(s, z)) {
          continue;
        }
        Subset d = s & _down[z];
        if ((upper_bounds(d) & _down[z]) == singleton(z)) {
          s |= singleton(z);
          changed = true;
        }
      }
    }
    return s;
  }

  std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
    Subset const l = _down[a] & _down[b];
    Subset       g = 0;
    for_each_element(l, [&](std::size_t z) {
      if ((_down[z] & l) == l) {
        g |= singleton(z);
      }
    });
    if (g == 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(__builtin_ctzll(g));
  }

  std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
    Subset const u = _up[a] & _up[b];
    Subset       g = 0;
    for_each_element(u, [&](std::size_t z) {
      if ((_up[z] & u) == u) {
        g |= singleton(z);
      }
    });
    if (g == 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(__builtin_ctzll(g));
  }

  bool Poset::is_meet_semilattice() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (!meet(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Poset::is_lattice() const {
    if (size() == 0 || !is_meet_semilattice()) {
      return false;
    }
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (!join(a, b)) {
          return false;
        }
      }
    }
    return popcount(maximal()) == 1;
  }

  Poset Poset::restrict(Subset s) const {
    std::vector<std::size_t> elems;
    for_each_element(s, [&](std::size_t x) { elems.push_back(x); });
    std::vector<Subset> down(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (leq(elems[j], elems[i])) {
          down[i] |= singleton(j);
        }
      }
    }
    return from_down_sets(std::move(down));
  }

  std::string Poset::to_json() const {
    nlohmann::json j;
    j["n"]      = size();
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : covers()) {
      j["covers"].push_back({a, b});
    }
    return j.dump();
  }

  Poset Poset::from_json(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(std::string("poset file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
      throw InvalidInput("poset file needs a non-negative integer \"n\"");
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    if (j.contains("covers")) {
      for (auto const& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned()) {
          throw InvalidInput("each cover must be a pair [a, b] of labels");
        }
        covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
      }
    }
    return from_covers(j["n"].get<std::size_t>(), covers);
  }

}  // namespace jtriv

#include "jtriv/coxeter.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "jtriv/core.hpp"

namespace jtriv {

  namespace {

    struct VectorHash {
      std::size_t operator()(std::vector<int> const& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) {
          h = (h ^ static_cast<std::size_t>(x + 64)) * 0x100000001b3ULL;
        }
        return h;
      }
    };

    // Signed permutations in window notation, composed as functions:
    // (a o b)(i) = a(b(i)) with a(-k) = -a(k).
    std::vector<int> compose_signed(std::vector<int> const& a, std::vector<int> const& b) {
      std::vector<int> c(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        int k = b[i];
        c[i]  = k > 0 ? a[k - 1] : -a[-k - 1];
      }
      return c;
    }

    // Dihedral elements as affine maps x -> eps x + c of Z_m, stored {eps, c}.
    std::vector<int> compose_affine(std::vector<int> const& a, std::vector<int> const& b, int m) {
      return {a[0] * b[0], (((a[0] * b[1] + a[1]) % m) + m) % m};
    }

  }  // namespace

  CoxeterGroup::CoxeterGroup(char type, std::size_t n, std::size_t cap) : _type(type), _n(n) {
    std::vector<std::vector<int>> gens;
    std::vector<int>              identity;
    auto identity_of = [](std::size_t r) {
      std::vector<int> s(r);
      for (std::size_t k = 0; k < r; ++k) {
        s[k] = static_cast<int>(k + 1);
      }
      return s;
    };
    auto swap_positions = [&](std::size_t r, std::size_t i) {
      auto s = identity_of(r);
      std::swap(s[i], s[i + 1]);
      return s;
    };
    switch (type) {
      case 'A': {
        if (n < 1) {
          throw InvalidInput("type A needs rank at least 1");
        }
        identity = identity_of(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
          gens.push_back(swap_positions(n + 1, i));
          _labels.push_back(std::to_string(i + 1));
        }
        break;
      }
      case 'B':
      case 'D': {
        if (n < 2) {
          throw InvalidInput(std::string("type ") + type + " needs rank at least 2");
        }
        identity = identity_of(n);
        std::vector<int> s0 = identity;
        if (type == 'B') {
          s0[0] = -1;
        } else {
          s0[0] = -2;
          s0[1] = -1;
        }
        gens.push_back(s0);
        _labels.push_back("0");
        for (std::size_t i = 0; i + 1 < n; ++i) {
          gens.push_back(swap_positions(n, i));
          _labels.push_back(std::to_string(i + 1));
        }
        break;
      }
      case 'I': {
        if (n < 2) {
          throw InvalidInput("type I needs n at least 2");
        }
        identity = {1, 0};
        gens     = {{-1, 0}, {-1, 1}};
        _labels  = {"1", "2"};
        break;
      }
      case 'E':
      case 'F':
      case 'H':
        throw InvalidInput(std::string("Coxeter type ") + type + " is out of scope");
      default:
        throw InvalidInput(std::string("unknown Coxeter type '") + type + "'");
    }

    int const m       = static_cast<int>(n);
    auto      compose = [&](std::vector<int> const& a, std::vector<int> const& b) {
      return type == 'I' ? compose_affine(a, b, m) : compose_signed(a, b);
    };

    std::size_t const r = gens.size();
    std::unordered_map<std::vector<int>, std::size_t, VectorHash> index;
    _elements.push_back(identity);
    index.emplace(identity, 0);
    _length.push_back(0);
    _prefix.push_back(0);
    _last.push_back(0);
    for (std::size_t w = 0; w < _elements.size(); ++w) {
      for (std::size_t i = 0; i < r; ++i) {
        auto y  = compose(_elements[w], gens[i]);
        auto it = index.find(y);
        if (it == index.end()) {
          if (_elements.size() >= cap) {
            throw GuardError("Coxeter group too large (cap " + std::to_string(cap) + " elements)");
          }
          it = index.emplace(y, _elements.size()).first;
          _elements.push_back(std::move(y));
          _length.push_back(_length[w] + 1);
          _prefix.push_back(w);
          _last.push_back(i);
        }
        _right.push_back(it->second);
      }
    }
    _left.resize(_right.size());
    for (std::size_t w = 0; w < _elements.size(); ++w) {
      for (std::size_t i = 0; i < r; ++i) {
        _left[w * r + i] = index.at(compose(gens[i], _elements[w]));
      }
    }
    _m.assign(r, std::vector<std::size_t>(r, 1));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) {
          continue;
        }
        std::size_t w = 0, k = 0;
        do {
          w = right_multiply(right_multiply(w, i), j);
          ++k;
        } while (w != 0);
        _m[i][j] = k;
      }
    }
  }

  std::string CoxeterGroup::name() const {
    return std::string(1, _type) + std::to_string(_n);
  }

  std::vector<std::size_t> CoxeterGroup::reduced_word(std::size_t w) const {
    std::vector<std::size_t> word(_length.at(w));
    for (std::size_t k = word.size(); k > 0; --k) {
      word[k - 1] = _last[w];
      w           = _prefix[w];
    }
    return word;
  }

  std::size_t CoxeterGroup::longest_element() const {
    return static_cast<std::size_t>(std::max_element(_length.begin(), _length.end()) - _length.begin());
  }

  std::string CoxeterGroup::one_line(std::size_t w) const {
    auto const& e = _elements.at(w);
    if (_type == 'I') {
      if (w == 0) {
        return "e";
      }
      if (_length[w] == _n) {
        return "w0";
      }
      auto word = reduced_word(w);
      return (word.front() == 0 ? "a" : "b") + std::to_string(word.size());
    }
    bool compact = _type == 'A' && e.size() <= 9;
    std::string s = compact ? "" : "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!compact && i > 0) {
        s += ',';
      }
      s += std::to_string(e[i]);
    }
    return compact ? s : s + "]";
  }

  std::size_t CoxeterGroup::find(std::string const& one_line_notation) const {
    for (std::size_t w = 0; w < size(); ++w) {
      if (one_line(w) == one_line_notation) {
        return w;
      }
    }
    throw InvalidInput("no element '" + one_line_notation + "' in " + name());
  }

  CoxeterGroup coxeter(char type, std::size_t n) {
    return CoxeterGroup(type, n);
  }

  Descents descents(CoxeterGroup const& W, std::size_t w) {
    Descents d;
    for (std::size_t i = 0; i < W.rank(); ++i) {
      if (W.length(W.left_multiply(w, i)) < W.length(w)) {
        d.left |= 1U << i;
      }
      if (W.length(W.right_multiply(w, i)) < W.length(w)) {
        d.right |= 1U << i;
      }
    }
    for (std::size_t i : W.reduced_word(w)) {
      d.content |= 1U << i;
    }
    return d;
  }

  MonoidTable hecke_monoid(CoxeterGroup const& W, std::vector<std::size_t>* group_index) {
    auto right = [&](std::size_t w, std::size_t i) {
      std::size_t y = W.right_multiply(w, i);
      return W.length(y) > W.length(w) ? y : w;
    };
    auto left = [&](std::size_t w, std::size_t i) {
      std::size_t y = W.left_multiply(w, i);
      return W.length(y) > W.length(w) ? y : w;
    };
    auto repr = [&](std::size_t w) {
      std::string s = "[";
      for (std::size_t i : W.reduced_word(w)) {
        if (s.size() > 1) {
          s += ',';
        }
        s += W.generator_labels()[i];
      }
      return s + "]";
    };
    return MonoidTable::from_actions(W.generator_labels(), W.size(), 0, right, left, repr,
                                     group_index);
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> hecke_quiver_prediction(CoxeterGroup const& W) {
    std::size_t const                                    r = W.rank();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t J = 0; J < (1U << r); ++J) {
      for (std::uint32_t K = 0; K < (1U << r); ++K) {
        if ((J & K) == J || (J & K) == K) {
          continue;
        }
        bool commuting = false;
        for (std::size_t j = 0; j < r && !commuting; ++j) {
          for (std::size_t k = 0; k < r && !commuting; ++k) {
            if (((J & ~K) >> j & 1U) && ((K & ~J) >> k & 1U) && W.coxeter_matrix(j, k) == 2) {
              commuting = true;
            }
          }
        }
        if (!commuting) {
          out.emplace_back(J, K);
        }
      }
    }
    return out;
  }

  ElementId parabolic_idempotent(MonoidTable const& t, std::uint32_t J) {
    ElementId x = identity_id;
    for (std::size_t j = 0; j < t.number_of_generators(); ++j) {
      if (J >> j & 1U) {
        x = t.right(x, j);
      }
    }
    return omega(t, x);
  }

}  // namespace jtriv

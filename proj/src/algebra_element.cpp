#include "jtriv/algebra_element.hpp"

#include <algorithm>

namespace jtriv {

  namespace {

    template <typename Op>
    std::vector<AlgebraElement::Term> merge(std::vector<AlgebraElement::Term> const& a,
                                            std::vector<AlgebraElement::Term> const& b,
                                            Op                                       op) {
      std::vector<AlgebraElement::Term> out;
      out.reserve(a.size() + b.size());
      auto i = a.begin(), j = b.begin();
      while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
          out.emplace_back(j->first, op(mpq_class(0), j->second));
          ++j;
        } else {
          mpq_class c = op(i->second, j->second);
          if (c != 0) {
            out.emplace_back(i->first, std::move(c));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

  }  // namespace

  AlgebraElement AlgebraElement::basis(ElementId x, mpq_class c) {
    AlgebraElement a;
    if (c != 0) {
      a._terms.emplace_back(x, std::move(c));
    }
    return a;
  }

  AlgebraElement AlgebraElement::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](Term const& p, Term const& q) { return p.first < q.first; });
    AlgebraElement a;
    for (auto& [x, c] : terms) {
      if (!a._terms.empty() && a._terms.back().first == x) {
        a._terms.back().second += c;
      } else {
        if (!a._terms.empty() && a._terms.back().second == 0) {
          a._terms.pop_back();
        }
        a._terms.emplace_back(x, std::move(c));
      }
    }
    if (!a._terms.empty() && a._terms.back().second == 0) {
      a._terms.pop_back();
    }
    return a;
  }

  mpq_class AlgebraElement::coefficient(ElementId x) const {
    auto it = std::lower_bound(_terms.begin(), _terms.end(), x,
                               [](Term const& p, ElementId y) { return p.first < y; });
    if (it != _terms.end() && it->first == x) {
      return it->second;
    }
    return 0;
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    _terms = merge(_terms, other._terms,
                   [](mpq_class const& a, mpq_class const& b) { return mpq_class(a + b); });
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    _terms = merge(_terms, other._terms,
                   [](mpq_class const& a, mpq_class const& b) { return mpq_class(a - b); });
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(mpq_class const& c) {
    if (c == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& term : _terms) {
      term.second *= c;
    }
    return *this;
  }

  bool AlgebraElement::operator==(AlgebraElement const& other) const {
    if (_terms.size() != other._terms.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _terms.size(); ++i) {
      if (_terms[i].first != other._terms[i].first
          || _terms[i].second != other._terms[i].second) {
        return false;
      }
    }
    return true;
  }

  std::string AlgebraElement::to_string(MonoidTable const& t) const {
    if (_terms.empty()) {
      return "0";
    }
    std::string s;
    for (auto const& [x, c] : _terms) {
      mpq_class a = abs(c);
      if (s.empty()) {
        s += c < 0 ? "-" : "";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (a != 1) {
        s += a.get_str() + "*";
      }
      s += t.repr(x);
    }
    return s;
  }

  AlgebraElement multiply(MonoidTable const& t, AlgebraElement const& a, AlgebraElement const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    // Dense accumulator, reused across calls on this thread.
    thread_local std::vector<mpq_class> acc;
    thread_local std::vector<bool>      touched;
    thread_local std::vector<ElementId> support;
    if (acc.size() < t.size()) {
      acc.resize(t.size());
      touched.resize(t.size(), false);
    }
    support.clear();
    mpq_class prod;
    for (auto const& [x, c] : a.terms()) {
      for (auto const& [y, d] : b.terms()) {
        ElementId z = t.product(x, y);
        prod        = c * d;
        if (!touched[z]) {
          touched[z] = true;
          acc[z]     = prod;
          support.push_back(z);
        } else {
          acc[z] += prod;
        }
      }
    }
    std::sort(support.begin(), support.end());
    std::vector<AlgebraElement::Term> terms;
    terms.reserve(support.size());
    for (ElementId z : support) {
      touched[z] = false;
      if (acc[z] != 0) {
        terms.emplace_back(z, acc[z]);
      }
    }
    return AlgebraElement::from_terms(std::move(terms));
  }

}  // namespace jtriv

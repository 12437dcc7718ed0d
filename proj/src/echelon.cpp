#include "jtriv/echelon.hpp"

namespace jtriv {

  namespace {

    void make_primitive(Echelon::Row& v) {
      mpz_class g = 0;
      for (auto const& [c, a] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) {
          break;
        }
      }
      if (v.front().second < 0) {
        g = -g;
      }
      if (g != 1) {
        for (auto& [c, a] : v) {
          mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        }
      }
    }

    // v <- p * v - a * r, where a = v[col], p = r[col] > 0.
    Echelon::Row eliminate(Echelon::Row const& v, Echelon::Row const& r, mpz_class const& a) {
      mpz_class const& p = r.front().second;
      Echelon::Row     out;
      out.reserve(v.size() + r.size());
      auto      i = v.begin(), j = r.begin();
      mpz_class x;
      while (i != v.end() || j != r.end()) {
        if (j == r.end() || (i != v.end() && i->first < j->first)) {
          out.emplace_back(i->first, p * i->second);
          ++i;
        } else if (i == v.end() || j->first < i->first) {
          out.emplace_back(j->first, -a * j->second);
          ++j;
        } else {
          x = p * i->second - a * j->second;
          if (x != 0) {
            out.emplace_back(i->first, x);
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

  }  // namespace

  Echelon::Row integer_row(AlgebraElement const& a) {
    mpz_class den = 1;
    for (auto const& [x, c] : a.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Echelon::Row row;
    row.reserve(a.size());
    for (auto const& [x, c] : a.terms()) {
      mpz_class v = c.get_num() * (den / c.get_den());
      row.emplace_back(x, v);
    }
    return row;
  }

  bool Echelon::insert(Row v) {
    // Eliminate pivots in increasing column order; the leading entry of v only
    // moves right, so a single forward scan suffices.
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = _pivot.find(v[k].first);
      if (it == _pivot.end()) {
        ++k;
        continue;
      }
      mpz_class a = v[k].second;
      v           = eliminate(v, _rows[it->second], a);
      if (v.empty()) {
        return false;
      }
      make_primitive(v);
      // Entries before position k are untouched by the elimination except
      // where the pivot row has support, which starts at the pivot column.
      k = 0;
      while (k < v.size() && v[k].first < it->first) {
        ++k;
      }
    }
    if (v.empty()) {
      return false;
    }
    make_primitive(v);
    _pivot.emplace(v.front().first, _rows.size());
    _rows.push_back(std::move(v));
    return true;
  }

  bool Echelon::insert(AlgebraElement const& a) {
    return insert(integer_row(a));
  }

  std::vector<AlgebraElement> Echelon::basis() const {
    std::vector<AlgebraElement> out;
    out.reserve(_rows.size());
    for (auto const& row : _rows) {
      std::vector<AlgebraElement::Term> terms;
      for (auto const& [c, a] : row) {
        terms.emplace_back(static_cast<ElementId>(c), mpq_class(a));
      }
      out.push_back(AlgebraElement::from_terms(std::move(terms)));
    }
    return out;
  }

}  // namespace jtriv

#include "jtriv/algebra.hpp"

#include <algorithm>
#include <bit>

#include "jtriv/echelon.hpp"

namespace jtriv {

  ElementId star(JTrivialMonoid const& m, ElementId e, ElementId f) {
    if (!m.is_idempotent(e) || !m.is_idempotent(f)) {
      throw InvalidInput("star product of a non-idempotent");
    }
    return m.omega(m.product(e, f));
  }

  std::size_t IdempotentLattice::index(ElementId e) const {
    auto it = std::lower_bound(idems.begin(), idems.end(), e);
    if (it == idems.end() || *it != e) {
      throw InvalidInput("not an idempotent");
    }
    return static_cast<std::size_t>(it - idems.begin());
  }

  IdempotentLattice idempotent_lattice(JTrivialMonoid const& m) {
    IdempotentLattice L;
    L.idems             = m.idempotents();
    std::size_t const k = L.idems.size();
    L.leq.assign(k, std::vector<bool>(k, false));
    L.star.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        L.leq[i][j]  = m.product(L.idems[i], L.idems[j]) == L.idems[i];
        L.star[i][j] = L.index(star(m, L.idems[i], L.idems[j]));
      }
    }
    // The star product must be the meet, and the identity the top.
    std::size_t const top = L.top();
    for (std::size_t i = 0; i < k; ++i) {
      if (!L.leq[i][top]) {
        throw PropertyFailure("not a lattice: identity is not the top");
      }
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t s = L.star[i][j];
        if (!L.leq[s][i] || !L.leq[s][j]) {
          throw PropertyFailure("not a lattice: star is not a lower bound");
        }
        for (std::size_t h = 0; h < k; ++h) {
          if (L.leq[h][i] && L.leq[h][j] && !L.leq[h][s]) {
            throw PropertyFailure("not a lattice: star is not the meet");
          }
        }
      }
    }
    // mu(i, j) for i <= j, by recursion downward from j: ascending position
    // in the J-linear extension means decreasing in the order.
    std::vector<std::size_t> by_height(k);
    for (std::size_t i = 0; i < k; ++i) {
      by_height[i] = i;
    }
    std::sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) {
      return m.order().position(L.idems[a]) < m.order().position(L.idems[b]);
    });
    L.moebius.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
      L.moebius[j][j] = 1;
      for (std::size_t i : by_height) {
        if (i == j || !L.leq[i][j]) {
          continue;
        }
        std::int64_t s = 0;
        for (std::size_t h = 0; h < k; ++h) {
          if (h != i && L.leq[i][h] && L.leq[h][j]) {
            s += L.moebius[h][j];
          }
        }
        L.moebius[i][j] = -s;
      }
    }
    return L;
  }

  std::vector<AlgebraElement> moebius_idempotents(IdempotentLattice const& L) {
    std::size_t const           k = L.idems.size();
    std::vector<AlgebraElement> g(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<AlgebraElement::Term> terms;
      for (std::size_t i = 0; i < k; ++i) {
        if (L.leq[i][j] && L.moebius[i][j] != 0) {
          terms.emplace_back(L.idems[i], mpq_class(static_cast<long>(L.moebius[i][j])));
        }
      }
      g[j] = AlgebraElement::from_terms(std::move(terms));
    }
    return g;
  }

  AlgebraElement omega_projection(JTrivialMonoid const& m, AlgebraElement const& a) {
    std::vector<AlgebraElement::Term> terms;
    terms.reserve(a.size());
    for (auto const& [x, c] : a.terms()) {
      terms.emplace_back(m.omega(x), c);
    }
    return AlgebraElement::from_terms(std::move(terms));
  }

  AlgebraElement lift_power(JTrivialMonoid const& m, AlgebraElement a, std::size_t* iterations) {
    auto const& t   = m.table();
    std::size_t cap = static_cast<std::size_t>(std::bit_width(m.size() - 1)) + 2;
    for (std::size_t round = 0;; ++round) {
      AlgebraElement sq = multiply(t, a, a);
      if (sq == a) {
        if (iterations != nullptr) {
          *iterations = round;
        }
        return a;
      }
      if (round == cap) {
        throw PropertyFailure("lift divergence");
      }
      AlgebraElement c = AlgebraElement::one() - sq;
      a                = AlgebraElement::one() - multiply(t, c, c);
    }
  }

  std::vector<ElementId> lifting_order(JTrivialMonoid const& m) {
    std::vector<ElementId> order = m.idempotents();
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
      return m.order().position(a) > m.order().position(b);
    });
    return order;
  }

  std::vector<AlgebraElement> orthogonal_idempotents(JTrivialMonoid const& m) {
    auto const& t       = m.table();
    auto        lattice = idempotent_lattice(m);
    auto        g       = moebius_idempotents(lattice);
    std::vector<AlgebraElement> f(lattice.idems.size());
    AlgebraElement              rest = AlgebraElement::one();
    for (ElementId e : lifting_order(m)) {
      std::size_t    i = lattice.index(e);
      AlgebraElement h = multiply(t, multiply(t, rest, g[i]), rest);
      f[i]             = lift_power(m, std::move(h));
      rest -= f[i];
    }
    return f;
  }

  std::vector<AlgebraElement> b_basis(JTrivialMonoid const& m, std::vector<AlgebraElement> const& f) {
    auto const&                 idems = m.idempotents();
    auto const&                 t     = m.table();
    std::vector<AlgebraElement> b(m.size());
    auto f_of = [&](ElementId e) -> AlgebraElement const& {
      return f[static_cast<std::size_t>(std::lower_bound(idems.begin(), idems.end(), e) - idems.begin())];
    };
    for (ElementId x = 0; x < m.size(); ++x) {
      b[x] = multiply(t, multiply(t, f_of(m.lfix(x)), AlgebraElement::basis(x)), f_of(m.rfix(x)));
    }
    return b;
  }

  CartanMatrix cartan_matrix(JTrivialMonoid const& m) {
    CartanMatrix c;
    c.idems             = m.idempotents();
    std::size_t const k = c.idems.size();
    c.entries.assign(k, std::vector<std::size_t>(k, 0));
    std::vector<std::size_t> index(m.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      index[c.idems[i]] = i;
    }
    for (ElementId x = 0; x < m.size(); ++x) {
      ++c.entries[index[m.lfix(x)]][index[m.rfix(x)]];
    }
    return c;
  }

  bool cartan_minus_identity_acyclic(CartanMatrix const& c) {
    std::size_t const        k = c.idems.size();
    std::vector<std::size_t> indegree(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (c.entries[i][i] != 1) {
        return false;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && c.entries[i][j] != 0) {
          ++indegree[j];
        }
      }
    }
    std::vector<std::size_t> ready;
    for (std::size_t j = 0; j < k; ++j) {
      if (indegree[j] == 0) {
        ready.push_back(j);
      }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      std::size_t i = ready.back();
      ready.pop_back();
      ++seen;
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && c.entries[i][j] != 0 && --indegree[j] == 0) {
          ready.push_back(j);
        }
      }
    }
    return seen == k;
  }

  Quiver quiver(JTrivialMonoid const& m, QuiverOptions const& opts) {
    std::size_t const n = m.size();
    std::vector<bool> reducible(n, false);
    std::size_t       products = 0;

    auto visit = [&](ElementId u, ElementId v) {
      ElementId x = m.product(u, v);
      if (reducible[x] || m.is_idempotent(x)) {
        return;
      }
      ElementId e = m.lfix(x), f = m.rfix(x);
      if (m.product(e, u) != e && m.product(v, f) != f) {
        reducible[x] = true;
      }
    };
    auto guard = [&](std::size_t count) {
      products += count;
      if (products > opts.product_cap) {
        throw GuardError("quiver sieve too large (cap " + std::to_string(opts.product_cap)
                         + " products)");
      }
    };

    if (opts.mode == SieveMode::all_pairs) {
      for (ElementId u = 0; u < n; ++u) {
        guard(n);
        for (ElementId v = 0; v < n; ++v) {
          visit(u, v);
        }
      }
    } else {
      std::vector<std::vector<ElementId>> by_lfix(n);
      for (ElementId v = 0; v < n; ++v) {
        if (!m.is_idempotent(v)) {
          by_lfix[m.lfix(v)].push_back(v);
        }
      }
      for (ElementId u = 0; u < n; ++u) {
        if (m.is_idempotent(u)) {
          continue;
        }
        auto const& bucket = by_lfix[m.rfix(u)];
        guard(bucket.size());
        for (ElementId v : bucket) {
          visit(u, v);
        }
      }
    }

    Quiver q;
    q.idems = m.idempotents();
    for (ElementId x = 0; x < n; ++x) {
      if (!reducible[x] && !m.is_idempotent(x)) {
        q.edges.push_back({m.lfix(x), m.rfix(x), x});
      }
    }
    return q;
  }

  std::vector<std::size_t> radical_filtration(JTrivialMonoid const& m, std::size_t guard) {
    if (m.size() > guard) {
      throw GuardError("too large for exact filtration (" + std::to_string(m.size())
                       + " elements, cap " + std::to_string(guard) + ")");
    }
    auto const&                 t = m.table();
    std::vector<AlgebraElement> rad;
    Echelon                     level;
    for (ElementId x = 0; x < m.size(); ++x) {
      if (!m.is_idempotent(x)) {
        AlgebraElement r = AlgebraElement::basis(x) - AlgebraElement::basis(m.omega(x));
        level.insert(r);
        rad.push_back(std::move(r));
      }
    }
    std::vector<std::size_t> dims{m.size(), level.rank()};
    while (dims.back() != 0) {
      Echelon next;
      for (auto const& a : level.basis()) {
        for (auto const& r : rad) {
          next.insert(multiply(t, a, r));
        }
      }
      if (next.rank() == dims.back()) {
        throw PropertyFailure("radical filtration does not terminate");
      }
      dims.push_back(next.rank());
      level = std::move(next);
    }
    return dims;
  }

  std::vector<std::size_t> radical_series(std::vector<std::size_t> const& dims) {
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
      c.push_back(dims[k] - dims[k + 1]);
    }
    return c;
  }

  std::string format_series(std::vector<std::size_t> const& coefficients) {
    std::string s;
    for (std::size_t k = coefficients.size(); k > 0; --k) {
      std::size_t c = coefficients[k - 1];
      if (c == 0) {
        continue;
      }
      if (!s.empty()) {
        s += " + ";
      }
      std::size_t power = k - 1;
      if (power == 0) {
        s += std::to_string(c);
      } else {
        if (c != 1) {
          s += std::to_string(c);
        }
        s += power == 1 ? "q" : "q^" + std::to_string(power);
      }
    }
    return s.empty() ? "0" : s;
  }

  std::optional<ElementId> ProjectiveModule::act(JTrivialMonoid const& m, ElementId x, ElementId y) const {
    ElementId z = m.product(x, y);
    if (m.lfix(z) == e) {
      return z;
    }
    return std::nullopt;
  }

  std::vector<std::optional<std::size_t>> ProjectiveModule::action_matrix(JTrivialMonoid const& m,
                                                                          ElementId y) const {
    std::vector<std::optional<std::size_t>> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (auto z = act(m, basis[k], y)) {
        out[k] = static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), *z) - basis.begin());
      }
    }
    return out;
  }

  ProjectiveModule projective_module(JTrivialMonoid const& m, ElementId e) {
    if (!m.is_idempotent(e)) {
      throw InvalidInput("projective module of a non-idempotent");
    }
    ProjectiveModule p{e, {}};
    for (ElementId x = 0; x < m.size(); ++x) {
      if (m.lfix(x) == e) {
        p.basis.push_back(x);
      }
    }
    return p;
  }

  int simple_character(JTrivialMonoid const& m, ElementId e, ElementId y) {
    if (!m.is_idempotent(e)) {
      throw InvalidInput("simple module of a non-idempotent");
    }
    return m.product(e, y) == e ? 1 : 0;
  }

  std::vector<Factorization> factorizations(JTrivialMonoid const& m, ElementId x) {
    std::vector<Factorization> out;
    ElementId const            e = m.lfix(x), f = m.rfix(x);
    for (ElementId u = 0; u < m.size(); ++u) {
      for (ElementId v = 0; v < m.size(); ++v) {
        if (m.product(u, v) != x) {
          continue;
        }
        bool const proper     = u != x && v != x;
        bool const nontrivial = m.product(e, u) != e && m.product(v, f) != f;
        bool const compatible = !m.is_idempotent(u) && !m.is_idempotent(v) && m.lfix(u) == e
                                && m.rfix(v) == f && m.rfix(u) == m.lfix(v);
        FactorizationKind kind;
        if (compatible) {
          kind = FactorizationKind::compatible;
        } else if (nontrivial) {
          kind = FactorizationKind::nontrivial_incompatible;
        } else {
          kind = proper ? FactorizationKind::proper_trivial : FactorizationKind::nonproper_trivial;
        }
        out.push_back({u, v, kind});
      }
    }
    return out;
  }

}  // namespace jtriv

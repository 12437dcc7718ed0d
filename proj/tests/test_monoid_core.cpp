#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "jtriv/core.hpp"
#include "jtriv/transformation.hpp"

using namespace jtriv;

namespace {

  // Sorting action of the simple transposition s_i on permutations of
  // {0..n-1}, encoded as transformations of the n! permutations.
  struct SortingMonoid {
    std::vector<std::vector<int>>        perms;
    std::map<std::vector<int>, unsigned> index;

    explicit SortingMonoid(int n) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) {
        p[i] = i;
      }
      do {
        index[p] = static_cast<unsigned>(perms.size());
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }

    static int inversions(std::vector<int> const& p) {
      int c = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          c += p[i] > p[j];
        }
      }
      return c;
    }

    Transformation pi(int i) const {
      Transformation t;
      for (auto const& p : perms) {
        auto q = p;
        std::swap(q[i - 1], q[i]);
        t.image.push_back(static_cast<std::uint8_t>(
            inversions(q) > inversions(p) ? index.at(q) : index.at(p)));
      }
      return t;
    }

    Generated<Transformation> monoid(int n) const {
      std::vector<GeneratorSpec<Transformation>> gens;
      for (int i = 1; i < n; ++i) {
        gens.push_back({"pi" + std::to_string(i), pi(i)});
      }
      return generate(gens, Transformation::identity(perms.size()),
                      TransformationCompose{}, TransformationRepr{});
    }
  };

  ElementId find(Generated<Transformation> const& g, Transformation const& v) {
    auto it = std::find(g.values.begin(), g.values.end(), v);
    REQUIRE(it != g.values.end());
    return static_cast<ElementId>(it - g.values.begin());
  }

  Generated<Transformation> ndpf_transformations(int n) {
    std::vector<GeneratorSpec<Transformation>> gens;
    for (int i = 1; i < n; ++i) {
      auto t        = Transformation::identity(n);
      t.image[i]    = static_cast<std::uint8_t>(i - 1);
      gens.push_back({"pi" + std::to_string(i), t});
    }
    return generate(gens, Transformation::identity(n), TransformationCompose{},
                    TransformationRepr{});
  }

  // Brute force: nondecreasing regressive self-maps of an n-chain.
  std::size_t count_ndpf(int n) {
    std::size_t      count = 0;
    std::vector<int> f(n, 0);
    while (true) {
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        ok = ok && f[i] <= i && (i == 0 || f[i - 1] <= f[i]);
      }
      count += ok;
      int k = 0;
      while (k < n && ++f[k] == n) {
        f[k++] = 0;
      }
      if (k == n) {
        return count;
      }
    }
  }

  void check_products_by_composition(Generated<Transformation> const& g) {
    auto const& t = g.table;
    for (ElementId x = 0; x < t.size(); ++x) {
      for (ElementId y = 0; y < t.size(); ++y) {
        REQUIRE(g.values[t.product(x, y)] == compose(g.values[x], g.values[y]));
      }
    }
  }

  // Free left regular band on letters: words without repeated letters,
  // u*v = u followed by the letters of v not already in u.
  struct LrbCompose {
    std::string operator()(std::string const& u, std::string const& v) const {
      std::string w = u;
      for (char c : v) {
        if (w.find(c) == std::string::npos) {
          w += c;
        }
      }
      return w;
    }
  };

  struct StringRepr {
    std::string operator()(std::string const& s) const {
      return s.empty() ? "1" : s;
    }
  };

  // {1, x, y, z, 0} with x^2 = x, y^2 = y, xz = zy = z, all other products 0.
  struct StraubingCompose {
    char operator()(char a, char b) const {
      if (a == '1') {
        return b;
      }
      if (b == '1') {
        return a;
      }
      if (a == 'x' && b == 'x') {
        return 'x';
      }
      if (a == 'y' && b == 'y') {
        return 'y';
      }
      if ((a == 'x' && b == 'z') || (a == 'z' && b == 'y')) {
        return 'z';
      }
      return '0';
    }
  };

  struct CharRepr {
    std::string operator()(char c) const {
      return std::string(1, c);
    }
  };

  Generated<char> straubing() {
    std::vector<GeneratorSpec<char>> gens{{"x", 'x'}, {"y", 'y'}, {"z", 'z'}};
    return generate(gens, '1', StraubingCompose{}, CharRepr{});
  }

  ElementId find_char(Generated<char> const& g, char c) {
    auto it = std::find(g.values.begin(), g.values.end(), c);
    REQUIRE(it != g.values.end());
    return static_cast<ElementId>(it - g.values.begin());
  }

  void check_symbol_invariants(JTrivialMonoid const& m) {
    auto const& t = m.table();
    for (ElementId x = 0; x < m.size(); ++x) {
      ElementId l = m.lfix(x), r = m.rfix(x);
      REQUIRE(m.is_idempotent(l));
      REQUIRE(m.is_idempotent(r));
      REQUIRE(t.product(l, x) == x);
      REQUIRE(t.product(x, r) == x);
      for (ElementId e : m.idempotents()) {
        if (t.product(e, x) == x) {
          REQUIRE(t.product(l, e) == l);
        }
        if (t.product(x, e) == x) {
          REQUIRE(t.product(e, r) == r);
        }
      }
      ElementId w = m.omega(x);
      REQUIRE(m.is_idempotent(w));
      REQUIRE(m.order().leq(w, x));
      for (ElementId y = 0; y < m.size(); ++y) {
        ElementId xy = t.product(x, y);
        REQUIRE(t.product(m.lfix(xy), l) == m.lfix(xy));
        REQUIRE(t.product(m.rfix(y), m.rfix(xy)) == m.rfix(xy));
      }
    }
    REQUIRE(m.symbol_fast_path_agrees());
  }

}  // namespace

TEST_SUITE("monoid-core") {
  TEST_CASE("empty generator list gives the trivial monoid") {
    auto g = generate(std::vector<GeneratorSpec<Transformation>>{},
                      Transformation::identity(3), TransformationCompose{},
                      TransformationRepr{});
    CHECK(g.table.size() == 1);
    CHECK(g.table.product(0, 0) == 0);
    CHECK(is_j_trivial(g.table).j_trivial);
    CHECK(minimal_generators(g.table).empty());
    CHECK(idempotents(g.table) == std::vector<ElementId>{0});
  }

  TEST_CASE("ndpf closures have Catalan cardinality") {
    for (int n = 1; n <= 6; ++n) {
      auto g = ndpf_transformations(n);
      CHECK(g.table.size() == count_ndpf(n));
      check_products_by_composition(g);
    }
    CHECK(ndpf_transformations(3).table.size() == 5);
  }

  TEST_CASE("0-Hecke monoid of S3 by sorting transformations") {
    SortingMonoid s(3);
    auto          g = s.monoid(3);
    auto const&   t = g.table;
    CHECK(t.size() == 6);
    check_products_by_composition(g);
    ElementId p1   = find(g, s.pi(1));
    ElementId p2   = find(g, s.pi(2));
    ElementId p12  = find(g, compose(s.pi(1), s.pi(2)));
    ElementId p121 = find(g, compose(compose(s.pi(1), s.pi(2)), s.pi(1)));
    CHECK(t.product(p1, p1) == p1);
    CHECK(t.product(p12, p1) == p121);
    CHECK(omega(t, p12) == p121);
    CHECK(omega(t, p1) == p1);
    auto order = j_order(t);
    for (ElementId x = 0; x < t.size(); ++x) {
      CHECK(order.leq(p121, x));
      CHECK(order.leq(x, identity_id));
    }
    CHECK(order.linext().front() == identity_id);
    CHECK(order.linext().back() == p121);
    CHECK(t.word(p121).size() == 3);
    auto mg = minimal_generators(t);
    CHECK(mg == std::vector<ElementId>{p1, p2});
  }

  TEST_CASE("0-Hecke monoid of S4: size, J-triviality, generators") {
    SortingMonoid s(4);
    auto          g = s.monoid(4);
    CHECK(g.table.size() == 24);
    check_products_by_composition(g);
    CHECK(is_j_trivial(g.table).j_trivial);
    CHECK(idempotents(g.table).size() == 8);
    CHECK(minimal_generators(g.table) == std::vector<ElementId>{1, 2, 3});
    JTrivialMonoid m(g.table);
    check_symbol_invariants(m);
  }

  TEST_CASE("free left regular band is not J-trivial") {
    std::vector<GeneratorSpec<std::string>> gens{{"a", "a"}, {"b", "b"}};
    auto g = generate(gens, std::string{}, LrbCompose{}, StringRepr{});
    REQUIRE(g.table.size() == 5);
    auto w = is_j_trivial(g.table);
    CHECK_FALSE(w.j_trivial);
    REQUIRE(w.witness.has_value());
    std::set<std::string> pair{g.table.repr(w.witness->first),
                               g.table.repr(w.witness->second)};
    CHECK(pair == std::set<std::string>{"ab", "ba"});
    CHECK_THROWS_AS(j_order(g.table), InvalidInput);
  }

  TEST_CASE("Straubing example ordering and symbols") {
    auto g = straubing();
    auto const& t = g.table;
    CHECK(t.size() == 5);
    ElementId x = find_char(g, 'x'), y = find_char(g, 'y'), z = find_char(g, 'z'),
              zero = find_char(g, '0');
    CHECK(t.product(z, z) == zero);
    auto order = j_order(t);
    CHECK(order.less(zero, z));
    CHECK(order.less(z, x));
    CHECK(order.less(z, y));
    CHECK_FALSE(order.leq(x, y));
    CHECK_FALSE(order.leq(y, x));
    std::set<char> idem;
    for (ElementId e : idempotents(t)) {
      idem.insert(g.values[e]);
    }
    CHECK(idem == std::set<char>{'1', 'x', 'y', '0'});
    JTrivialMonoid m(t);
    CHECK(m.lfix(z) == x);
    CHECK(m.rfix(z) == y);
    check_symbol_invariants(m);
  }

  TEST_CASE("degenerate generators are dropped with warnings") {
    auto id = Transformation::identity(3);
    auto f  = id;
    f.image[1] = 0;
    std::vector<GeneratorSpec<Transformation>> gens{{"one", id}, {"f", f}, {"g", f}};
    auto g = generate(gens, id, TransformationCompose{}, TransformationRepr{});
    CHECK(g.table.number_of_generators() == 1);
    CHECK(g.table.warnings().size() == 2);
    CHECK(g.table.size() == 2);
  }

  TEST_CASE("closure cap and associativity failures are reported") {
    GenerateOptions opts;
    opts.cap = 3;
    std::vector<GeneratorSpec<Transformation>> gens;
    for (int i = 1; i < 4; ++i) {
      auto t     = Transformation::identity(4);
      t.image[i] = static_cast<std::uint8_t>(i - 1);
      gens.push_back({"pi" + std::to_string(i), t});
    }
    CHECK_THROWS_AS(generate(gens, Transformation::identity(4), TransformationCompose{},
                             TransformationRepr{}, opts),
                    GuardError);

    // Integers with a - b mod 7 is not associative.
    struct Minus {
      int operator()(int a, int b) const {
        return ((a - b) % 7 + 7) % 7;
      }
    };
    struct IntRepr {
      std::string operator()(int a) const {
        return std::to_string(a);
      }
    };
    std::vector<GeneratorSpec<int>> bad{{"one", 1}};
    CHECK_THROWS_AS(generate(bad, 0, Minus{}, IntRepr{}), InvalidInput);
  }

  TEST_CASE("from_cayley rebuilds an identical table") {
    SortingMonoid s(4);
    auto const&   t = s.monoid(4).table;
    std::size_t   m = t.number_of_generators();
    std::vector<std::vector<ElementId>> right(t.size()), left(t.size());
    for (ElementId x = 0; x < t.size(); ++x) {
      for (std::size_t j = 0; j < m; ++j) {
        right[x].push_back(t.right(x, j));
        left[x].push_back(t.left(x, j));
      }
    }
    auto u = MonoidTable::from_cayley(t.generator_labels(), right, left, t.reprs());
    for (ElementId x = 0; x < t.size(); ++x) {
      CHECK(u.word(x) == t.word(x));
      for (ElementId y = 0; y < t.size(); ++y) {
        CHECK(u.product(x, y) == t.product(x, y));
      }
    }
    std::swap(right[1], right[2]);
    CHECK_THROWS_AS(MonoidTable::from_cayley(t.generator_labels(), right, left, t.reprs()),
                    InvalidInput);
  }
}

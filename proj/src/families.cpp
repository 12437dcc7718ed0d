#include "jtriv/families.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace jtriv {

  Generated<Transformation> ndpf(std::size_t n, GenerateOptions const& opts) {
    if (n < 1 || n > 255) {
      throw InvalidInput("ndpf needs 1 <= n <= 255");
    }
    std::vector<GeneratorSpec<Transformation>> gens;
    for (std::size_t i = 1; i < n; ++i) {
      auto t     = Transformation::identity(n);
      t.image[i] = static_cast<std::uint8_t>(i - 1);
      gens.push_back({std::to_string(i), std::move(t)});
    }
    return generate(gens, Transformation::identity(n), TransformationCompose{}, TransformationRepr{}, opts);
  }

  BoolMatrix BoolMatrix::identity(std::size_t n) {
    if (n > 8) {
      throw InvalidInput("Boolean matrices are limited to n <= 8");
    }
    BoolMatrix m;
    m.n = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  BoolMatrix BoolMatrix::edge(std::size_t n, std::size_t i, std::size_t j) {
    if (!(i < j && j < n)) {
      throw InvalidInput("unitriangular edge needs i < j < n");
    }
    BoolMatrix m = identity(n);
    m.set(i, j);
    return m;
  }

  std::vector<std::pair<std::size_t, std::size_t>> BoolMatrix::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (get(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  bool BoolMatrix::is_transitive() const {
    return *this * *this == *this;
  }

  BoolMatrix operator*(BoolMatrix const& g, BoolMatrix const& h) {
    BoolMatrix p;
    p.n = g.n;
    for (std::size_t i = 0; i < g.n; ++i) {
      std::uint64_t row = (g.rows >> (8 * i)) & 0xFF, acc = 0;
      while (row != 0) {
        std::size_t j = static_cast<std::size_t>(__builtin_ctzll(row));
        acc |= (h.rows >> (8 * j)) & 0xFF;
        row &= row - 1;
      }
      p.rows |= acc << (8 * i);
    }
    return p;
  }

  std::string to_string(BoolMatrix const& m) {
    std::string s = "{";
    for (auto [i, j] : m.edges()) {
      if (s.size() > 1) {
        s += ',';
      }
      s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
    return s + "}";
  }

  BoolMatrix un_antiautomorphism(BoolMatrix const& m) {
    BoolMatrix r = BoolMatrix::identity(m.n);
    for (auto [i, j] : m.edges()) {
      r.set(m.n - 1 - j, m.n - 1 - i);
    }
    return r;
  }

  std::uint64_t lex_key(BoolMatrix const& m) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < m.n; ++i) {
      for (std::size_t j = i + 1; j < m.n; ++j) {
        key = (key << 1) | (m.get(i, j) ? 1U : 0U);
      }
    }
    return key;
  }

  Generated<BoolMatrix> unitriangular_boolean(std::size_t n, std::size_t max_n, GenerateOptions const& opts) {
    if (n < 1) {
      throw InvalidInput("unitriangular Boolean matrices need n >= 1");
    }
    if (n > max_n || n > 8) {
      throw GuardError("U_" + std::to_string(n) + " exceeds the size guard (n <= "
                       + std::to_string(std::min<std::size_t>(max_n, 8)) + ")");
    }
    std::vector<GeneratorSpec<BoolMatrix>> gens;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        gens.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                        BoolMatrix::edge(n, i, j)});
      }
    }
    return generate(
        gens, BoolMatrix::identity(n), [](BoolMatrix const& a, BoolMatrix const& b) { return a * b; },
        [](BoolMatrix const& a) { return to_string(a); }, opts);
  }

  Generated<IncidenceElement> incidence_monoid(Poset const& p) {
    if (p.size() > 255) {
      throw InvalidInput("incidence monoids are limited to 255 points");
    }
    using E = IncidenceElement;
    std::vector<GeneratorSpec<E>> gens;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) {
          gens.push_back({"(" + std::to_string(x) + "," + std::to_string(y) + ")",
                          E{E::pair, static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)}});
        }
      }
    }
    gens.push_back({"0", E{E::zero, 0, 0}});
    auto compose = [](E const& a, E const& b) {
      if (a.kind == E::one) {
        return b;
      }
      if (b.kind == E::one) {
        return a;
      }
      if (a.kind == E::zero || b.kind == E::zero || a.y != b.x) {
        return E{E::zero, 0, 0};
      }
      return E{E::pair, a.x, b.y};
    };
    auto repr = [](E const& a) -> std::string {
      switch (a.kind) {
        case E::one:
          return "1";
        case E::zero:
          return "0";
        default:
          return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")";
      }
    };
    return generate(gens, E{}, compose, repr);
  }

  Digraph Digraph::from_json(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(std::string("digraph file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_unsigned()) {
      throw InvalidInput("digraph file needs a non-negative integer \"vertices\"");
    }
    Digraph g;
    g.vertices = j["vertices"].get<std::size_t>();
    if (j.contains("edges")) {
      for (auto const& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()
            || !e[2].is_string()) {
          throw InvalidInput("each edge must be [src, dst, \"label\"]");
        }
        g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::string>()});
      }
    }
    g.validate(false);
    return g;
  }

  std::string Digraph::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    j["edges"]    = nlohmann::json::array();
    for (auto const& e : edges) {
      j["edges"].push_back({e.src, e.dst, e.label});
    }
    return j.dump();
  }

  void Digraph::validate(bool simple) const {
    std::set<std::string>                         labels;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto const& e : edges) {
      if (e.src >= vertices || e.dst >= vertices) {
        throw InvalidInput("edge '" + e.label + "' mentions a vertex out of range");
      }
      if (!labels.insert(e.label).second) {
        throw InvalidInput("duplicate edge label '" + e.label + "'");
      }
      if (simple && e.src == e.dst) {
        throw InvalidInput("simple digraph has a loop at " + std::to_string(e.src));
      }
      if (simple && !pairs.emplace(e.src, e.dst).second) {
        throw InvalidInput("simple digraph has parallel edges");
      }
    }
  }

  namespace {

    using Q = QuiverElement;

    std::string quiver_repr(Digraph const& g, Q const& a) {
      switch (a.kind) {
        case Q::one:
          return "1";
        case Q::zero:
          return "0";
        case Q::vertex:
          return "v" + std::to_string(a.index);
        default:
          return g.edges[a.index].label;
      }
    }

    // Shared rules: 1 neutral, 0 absorbing, edges annihilate each other.
    template <typename VertexVertex, typename VertexEdge, typename EdgeVertex>
    Generated<Q> quiver_family(Digraph const& g, bool edge_generators, VertexVertex vv, VertexEdge ve,
                               EdgeVertex ev) {
      std::vector<GeneratorSpec<Q>> gens;
      for (std::uint32_t v = 0; v < g.vertices; ++v) {
        gens.push_back({"v" + std::to_string(v), Q{Q::vertex, v}});
      }
      if (edge_generators) {
        for (std::uint32_t k = 0; k < g.edges.size(); ++k) {
          gens.push_back({g.edges[k].label, Q{Q::edge, k}});
        }
      }
      gens.push_back({"0", Q{Q::zero, 0}});
      auto compose = [&](Q const& a, Q const& b) -> Q {
        if (a.kind == Q::one) {
          return b;
        }
        if (b.kind == Q::one) {
          return a;
        }
        if (a.kind == Q::zero || b.kind == Q::zero) {
          return Q{Q::zero, 0};
        }
        if (a.kind == Q::vertex && b.kind == Q::vertex) {
          return vv(a.index, b.index);
        }
        if (a.kind == Q::vertex && b.kind == Q::edge) {
          return ve(a.index, b.index) ? b : Q{Q::zero, 0};
        }
        if (a.kind == Q::edge && b.kind == Q::vertex) {
          return ev(a.index, b.index) ? a : Q{Q::zero, 0};
        }
        return Q{Q::zero, 0};
      };
      return generate(gens, Q{}, compose, [&](Q const& a) { return quiver_repr(g, a); });
    }

  }  // namespace

  Generated<QuiverElement> quiver_monoid(Digraph const& g) {
    g.validate(false);
    return quiver_family(
        g, true, [](std::uint32_t e, std::uint32_t f) { return e == f ? Q{Q::vertex, e} : Q{Q::zero, 0}; },
        [&](std::uint32_t e, std::uint32_t k) { return g.edges[k].src == e; },
        [&](std::uint32_t k, std::uint32_t f) { return g.edges[k].dst == f; });
  }

  Generated<QuiverElement> quiver_lattice_monoid(Digraph const& g, Poset const& vertex_order) {
    g.validate(false);
    std::size_t const n = g.vertices;
    if (vertex_order.size() != n) {
      throw InvalidInput("vertex order has " + std::to_string(vertex_order.size())
                         + " elements, digraph has " + std::to_string(n) + " vertices");
    }
    // Adjoin a bottom (index n) and a top (index n + 1).
    std::vector<std::pair<std::size_t, std::size_t>> covers = vertex_order.covers();
    for (std::size_t v = 0; v < n; ++v) {
      covers.emplace_back(n, v);
      covers.emplace_back(v, n + 1);
    }
    if (n == 0) {
      covers.emplace_back(0, 1);
    }
    Poset const L = Poset::from_covers(n + 2, covers);
    if (!L.is_lattice()) {
      throw InvalidInput("invalid lattice: the vertex order completed by 0 and 1 is not a lattice");
    }
    return quiver_family(
        g, true,
        [&, n](std::uint32_t e, std::uint32_t f) {
          std::size_t m = *L.meet(e, f);
          return m == n ? Q{Q::zero, 0} : Q{Q::vertex, static_cast<std::uint32_t>(m)};
        },
        [&](std::uint32_t e, std::uint32_t k) { return vertex_order.leq(g.edges[k].src, e); },
        [&](std::uint32_t k, std::uint32_t f) { return vertex_order.leq(g.edges[k].dst, f); });
  }

  Generated<QuiverElement> simple_quiver_monoid(Digraph const& g) {
    g.validate(true);
    std::vector<std::vector<std::int64_t>> edge_of(g.vertices, std::vector<std::int64_t>(g.vertices, -1));
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      edge_of[g.edges[k].src][g.edges[k].dst] = static_cast<std::int64_t>(k);
    }
    return quiver_family(
        g, false,
        [&](std::uint32_t e, std::uint32_t f) {
          if (e == f) {
            return Q{Q::vertex, e};
          }
          if (edge_of[e][f] >= 0) {
            return Q{Q::edge, static_cast<std::uint32_t>(edge_of[e][f])};
          }
          return Q{Q::zero, 0};
        },
        [&](std::uint32_t e, std::uint32_t k) { return g.edges[k].src == e; },
        [&](std::uint32_t k, std::uint32_t f) { return g.edges[k].dst == f; });
  }

  Generated<LatticePathElement> lattice_generator_monoid(Poset const& lattice) {
    if (!lattice.is_lattice() || lattice.size() < 2) {
      throw InvalidInput("invalid lattice: need a lattice with at least two elements");
    }
    using P             = LatticePathElement;
    std::size_t const n = lattice.size();
    std::size_t const bottom = static_cast<std::size_t>(__builtin_ctzll(lattice.minimal()));
    std::size_t const top    = static_cast<std::size_t>(__builtin_ctzll(lattice.maximal()));
    if (popcount(lattice.minimal()) != 1) {
      throw InvalidInput("invalid lattice: no unique bottom");
    }
    std::vector<std::vector<std::uint32_t>> meet(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        meet[a][b] = static_cast<std::uint32_t>(*lattice.meet(a, b));
      }
    }
    auto const b32     = static_cast<std::uint32_t>(bottom);
    auto       compose = [&](P const& x, P const& y) -> P {
      if (!x.path && !y.path) {
        return P{false, meet[x.e][y.e], 0};
      }
      if (!x.path) {
        std::uint32_t m = meet[x.e][y.e];
        return m == b32 ? P{false, b32, 0} : P{true, m, y.f};
      }
      if (!y.path) {
        std::uint32_t m = meet[x.f][y.e];
        return m == b32 ? P{false, b32, 0} : P{true, x.e, m};
      }
      return P{false, b32, 0};
    };
    auto repr = [](P const& x) {
      return x.path ? std::to_string(x.e) + "p" + std::to_string(x.f) : std::to_string(x.e);
    };
    std::vector<GeneratorSpec<P>> gens;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (e != top) {
        gens.push_back({std::to_string(e), P{false, e, 0}});
      }
    }
    auto const t32 = static_cast<std::uint32_t>(top);
    gens.push_back({"p", P{true, t32, t32}});
    return generate(gens, P{false, t32, 0}, compose, repr);
  }

  Generated<char> straubing_example() {
    auto compose = [](char a, char b) {
      if (a == '1') {
        return b;
      }
      if (b == '1') {
        return a;
      }
      if ((a == 'x' && b == 'x') || (a == 'y' && b == 'y')) {
        return a;
      }
      if ((a == 'x' && b == 'z') || (a == 'z' && b == 'y')) {
        return 'z';
      }
      return '0';
    };
    std::vector<GeneratorSpec<char>> gens{{"x", 'x'}, {"y", 'y'}, {"z", 'z'}};
    return generate(gens, '1', compose, [](char c) { return std::string(1, c); });
  }

}  // namespace jtriv

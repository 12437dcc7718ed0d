#include "jtriv/orp.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace jtriv {

  namespace {

    std::uint8_t u8(std::size_t x) {
      return static_cast<std::uint8_t>(x);
    }

    // Unique maximal element of s, if any.
    std::optional<std::size_t> maximum(Poset const& p, Subset s) {
      std::optional<std::size_t> out;
      bool                       unique = true;
      for_each_element(s, [&](std::size_t z) {
        if ((p.up(z) & s) == singleton(z)) {
          if (out) {
            unique = false;
          }
          out = z;
        }
      });
      if (!unique) {
        return std::nullopt;
      }
      return out;
    }

    bool forced(Poset const& p, Subset I, std::size_t z) {
      return (p.upper_bounds(I & p.down(z)) & p.down(z)) == singleton(z);
    }

    std::unordered_map<Transformation, ElementId> index_of(Generated<ORFunction> const& g) {
      std::unordered_map<Transformation, ElementId> idx;
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        idx.emplace(g.values[i], static_cast<ElementId>(i));
      }
      return idx;
    }

  }  // namespace

  bool is_or_function(Poset const& p, ORFunction const& f) {
    if (f.degree() != p.size()) {
      return false;
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.leq(f[x], x)) {
        return false;
      }
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) && !p.leq(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ORFunction> enumerate_or(Poset const& p, std::size_t cap) {
    std::size_t const        n  = p.size();
    auto const&              le = p.linext();
    std::vector<ORFunction>  out;
    ORFunction               f  = Transformation::identity(n);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        if (out.size() >= cap) {
          throw GuardError("OR(P) too large (cap " + std::to_string(cap) + " elements)");
        }
        out.push_back(f);
        return;
      }
      std::size_t const x     = le[k];
      Subset            below = p.down(x) & ~singleton(x);
      Subset            cand  = p.down(x);
      for_each_element(below, [&](std::size_t z) { cand &= p.up(f[z]); });
      for_each_element(cand, [&](std::size_t y) {
        f.image[x] = u8(y);
        self(self, k + 1);
      });
      f.image[x] = u8(x);
    };
    rec(rec, 0);
    return out;
  }

  Generated<ORFunction> or_monoid(Poset const& p, std::size_t cap) {
    auto const        all = enumerate_or(p, cap);
    std::size_t const n   = all.size();
    auto const        id  = Transformation::identity(p.size());
    std::unordered_map<Transformation, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      idx.emplace(all[i], i);
    }
    std::vector<bool> reducible(n, false);
    for (std::size_t u = 0; u < n; ++u) {
      if (all[u] == id) {
        reducible[u] = true;
        continue;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (all[v] == id) {
          continue;
        }
        std::size_t x = idx.at(compose(all[u], all[v]));
        if (x != u && x != v) {
          reducible[x] = true;
        }
      }
    }
    std::vector<GeneratorSpec<ORFunction>> gens;
    for (std::size_t x = 0; x < n; ++x) {
      if (!reducible[x]) {
        gens.push_back({to_string(all[x]), all[x]});
      }
    }
    GenerateOptions opts;
    opts.cap = std::max<std::size_t>(cap, n + 1);
    auto g   = generate(std::move(gens), id, TransformationCompose{}, TransformationRepr{}, opts);
    if (g.values.size() != n) {
      throw PropertyFailure("irreducible elements do not generate OR(P)");
    }
    return g;
  }

  std::vector<Subset> or_idempotents(Poset const& p) {
    auto const&         le = p.linext();
    std::vector<Subset> out;
    auto rec = [&](auto&& self, std::size_t k, Subset I) -> void {
      if (k == le.size()) {
        out.push_back(I);
        return;
      }
      std::size_t const z = le[k];
      if (forced(p, I, z)) {
        self(self, k + 1, I | singleton(z));
        return;
      }
      self(self, k + 1, I);
      self(self, k + 1, I | singleton(z));
    };
    rec(rec, 0, 0);
    return out;
  }

  ORFunction sup_map(Poset const& p, Subset I) {
    ORFunction f = Transformation::identity(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      auto m = maximum(p, I & p.down(x));
      if (!m) {
        throw InvalidInput("not join-closed");
      }
      f.image[x] = u8(*m);
    }
    return f;
  }

  Subset image(ORFunction const& f) {
    Subset s = 0;
    for (auto v : f.image) {
      s |= singleton(v);
    }
    return s;
  }

  Subset fiber_minima(Poset const& p, ORFunction const& f) {
    std::size_t const   n = p.size();
    std::vector<Subset> fiber(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      fiber[f[x]] |= singleton(x);
    }
    Subset out = 0;
    for (Subset s : fiber) {
      for_each_element(s, [&](std::size_t z) {
        if ((p.down(z) & s) == singleton(z)) {
          out |= singleton(z);
        }
      });
    }
    return out;
  }

  BoolMatrix extensive_relation(ORFunction const& f) {
    BoolMatrix m = BoolMatrix::identity(f.degree());
    for (std::size_t u = 0; u < f.degree(); ++u) {
      if (f[u] < u) {
        throw InvalidInput("map is not extensive");
      }
      for (std::size_t v = u; v <= f[u]; ++v) {
        m.set(u, v);
      }
    }
    return m;
  }

  SymbolSets or_symbols(Poset const& p, ORFunction const& f) {
    return {p.join_closure(fiber_minima(p, f)), p.join_closure(image(f))};
  }

  std::uint64_t lex_key(Poset const& p, Subset s) {
    std::uint64_t key = 0;
    for (std::size_t x : p.linext()) {
      key = (key << 1) | (contains(s, x) ? 1U : 0U);
    }
    return key;
  }

  bool lex_symbol_order_check(Poset const& p, std::vector<ORFunction> const& elements) {
    for (auto const& f : elements) {
      auto const    s  = or_symbols(p, f);
      std::uint64_t kl = lex_key(p, s.lfix), kr = lex_key(p, s.rfix);
      bool const    idem = compose(f, f) == f;
      if (idem ? kl != kr : kl >= kr) {
        return false;
      }
    }
    return true;
  }

  ORFunction e_ab(Poset const& L, std::size_t a, std::size_t b) {
    if (a >= L.size() || b >= L.size() || !L.leq(b, a)) {
      throw InvalidInput("e_ab needs b <= a");
    }
    ORFunction f = Transformation::identity(L.size());
    for_each_element(L.down(a), [&](std::size_t x) {
      auto m = L.meet(x, b);
      if (!m) {
        throw InvalidInput("not a meet semilattice");
      }
      f.image[x] = u8(*m);
    });
    return f;
  }

  std::vector<CoverGenerator> factor_idempotent(Poset const& L, ORFunction const& f) {
    if (!is_or_function(L, f) || compose(f, f) != f) {
      throw InvalidInput("not an idempotent of OR(P)");
    }
    std::vector<CoverGenerator> word;
    auto const&                 le = L.linext();
    for (std::size_t x : le) {
      std::size_t       a = x;
      std::size_t const c = f[x];
      // Descend along a maximal chain from x to x.f, smallest label first.
      while (a != c) {
        Subset      lower = L.down(a) & ~singleton(a) & L.up(c);
        std::size_t next  = a;
        for_each_element(lower, [&](std::size_t b) {
          if (next == a && (L.down(a) & L.up(b)) == (singleton(a) | singleton(b))) {
            next = b;
          }
        });
        word.push_back({a, next});
        a = next;
      }
    }
    return word;
  }

  ORFunction evaluate(Poset const& L, std::vector<CoverGenerator> const& word) {
    ORFunction f = Transformation::identity(L.size());
    for (auto const& g : word) {
      f = compose(f, e_ab(L, g.a, g.b));
    }
    return f;
  }

  std::string to_string(SignedDiagram const& d) {
    std::string s;
    for (bool b : d) {
      s += b ? '+' : '-';
    }
    return s;
  }

  SignedDiagram parse_diagram(std::string const& text) {
    SignedDiagram d;
    for (char c : text) {
      if (c != '+' && c != '-') {
        throw InvalidInput("diagram characters must be '+' or '-'");
      }
      d.push_back(c == '+');
    }
    return d;
  }

  Demipotent ndpf_diagram_demipotent(MonoidTable const& t, SignedDiagram const& d) {
    std::size_t const k = d.size();
    if (k != t.number_of_generators()) {
      throw InvalidInput("diagram length must equal the number of generators");
    }
    auto pi = [&](std::size_t i, bool plus) {
      auto b = AlgebraElement::basis(t.generator(i));
      return plus ? b : AlgebraElement::one() - b;
    };
    // Blocks of equal signs; the long element of a "+" block runs downwards,
    // of a "-" block upwards.
    std::vector<AlgebraElement> blocks;
    for (std::size_t i = 0; i < k;) {
      std::size_t j = i;
      while (j < k && d[j] == d[i]) {
        ++j;
      }
      AlgebraElement w = AlgebraElement::one();
      if (d[i]) {
        for (std::size_t r = j; r > i; --r) {
          w = multiply(t, w, pi(r - 1, true));
        }
      } else {
        for (std::size_t r = i; r < j; ++r) {
          w = multiply(t, w, pi(r, false));
        }
      }
      blocks.push_back(std::move(w));
      i = j;
    }
    Demipotent out{AlgebraElement::one(), AlgebraElement::one(), {}};
    for (auto const& b : blocks) {
      out.left = multiply(t, out.left, b);
    }
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      out.right = multiply(t, out.right, *it);
    }
    out.product = multiply(t, out.left, out.right);
    return out;
  }

  AlgebraElement ndpf_norton_form(MonoidTable const& t, SignedDiagram const& d) {
    if (d.size() != t.number_of_generators()) {
      throw InvalidInput("diagram length must equal the number of generators");
    }
    AlgebraElement w = AlgebraElement::one();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i]) {
        w = multiply(t, w, AlgebraElement::one() - AlgebraElement::basis(t.generator(i)));
      }
    }
    for (std::size_t i = d.size(); i > 0; --i) {
      if (d[i - 1]) {
        w = multiply(t, w, AlgebraElement::basis(t.generator(i - 1)));
      }
    }
    return w;
  }

  std::vector<SignedDiagram> all_diagrams(std::size_t N) {
    std::size_t const          k = N == 0 ? 0 : N - 1;
    std::vector<SignedDiagram> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
      SignedDiagram d(k);
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = ((m >> (k - 1 - i)) & 1U) == 0;
      }
      out.push_back(std::move(d));
    }
    return out;
  }

  std::vector<AlgebraElement> ndpf_orthogonal_set(MonoidTable const& t, std::size_t max_n) {
    std::size_t const N = t.number_of_generators() + 1;
    if (N > max_n) {
      throw GuardError("NDPF_" + std::to_string(N) + " exceeds the limit " + std::to_string(max_n));
    }
    std::vector<AlgebraElement> out;
    for (auto const& d : all_diagrams(N)) {
      out.push_back(ndpf_diagram_demipotent(t, d).product);
    }
    return out;
  }

  std::vector<SemilatticeDemipotent> semilattice_demipotents(Poset const& L, Generated<ORFunction> const& orl,
                                                             std::size_t depth) {
    if (!L.is_meet_semilattice()) {
      throw InvalidInput("not a meet semilattice");
    }
    MonoidTable const& t   = orl.table;
    auto const         idx = index_of(orl);
    auto const&        le  = L.linext();
    std::vector<SemilatticeDemipotent> out;
    SignedDiagram                      diagram;
    auto rec = [&](auto&& self, std::size_t k, Subset I, AlgebraElement const& l, AlgebraElement const& r) -> void {
      if (k == std::min(depth, le.size())) {
        out.push_back({diagram, I, multiply(t, l, r)});
        return;
      }
      std::size_t const z = le[k];
      if (forced(L, I, z)) {
        diagram.push_back(false);
        self(self, k + 1, I | singleton(z), l, r);
        diagram.pop_back();
        return;
      }
      std::size_t const s  = *maximum(L, I & L.down(z));
      auto const        pi = AlgebraElement::basis(idx.at(e_ab(L, z, s)));
      auto const        co = AlgebraElement::one() - pi;
      diagram.push_back(true);
      self(self, k + 1, I, multiply(t, l, pi), multiply(t, pi, r));
      diagram.back() = false;
      self(self, k + 1, I | singleton(z), multiply(t, l, co), multiply(t, co, r));
      diagram.pop_back();
    };
    rec(rec, 0, 0, AlgebraElement::one(), AlgebraElement::one());
    return out;
  }

  ConjectureReport conjecture_check(Poset const& L, std::size_t cap) {
    auto const       start = std::chrono::steady_clock::now();
    ConjectureReport rep;
    rep.poset_size = L.size();
    rep.covers     = L.to_json();
    auto const orl = or_monoid(L, cap);
    auto const& t  = orl.table;
    rep.monoid_size      = t.size();
    rep.idempotent_count = idempotents(t).size();
    auto const demi      = semilattice_demipotents(L, orl);
    rep.demipotent_count = demi.size();

    std::size_t const           power_limit = t.size();
    std::vector<AlgebraElement> idem;
    bool                        stabilized = true;
    for (auto const& d : demi) {
      AlgebraElement y     = d.value;
      std::size_t    power = 0;
      for (std::size_t k = 1; k <= power_limit; ++k) {
        if (multiply(t, y, y) == y) {
          power = k;
          break;
        }
        y = multiply(t, y, d.value);
      }
      rep.powers.push_back(power);
      if (power == 0) {
        stabilized = false;
      }
      rep.max_power = std::max(rep.max_power, power);
      idem.push_back(std::move(y));
    }
    if (!stabilized) {
      rep.max_power = 0;
    }
    rep.all_idempotent = std::all_of(rep.powers.begin(), rep.powers.end(), [](std::size_t k) { return k == 1; });

    rep.orthogonal = stabilized;
    for (std::size_t i = 0; i < idem.size() && rep.orthogonal; ++i) {
      for (std::size_t j = 0; j < idem.size(); ++j) {
        if (i != j && !multiply(t, idem[i], idem[j]).is_zero()) {
          rep.orthogonal = false;
          break;
        }
      }
    }
    AlgebraElement sum;
    for (auto const& e : idem) {
      sum += e;
    }
    rep.sums_to_one = sum == AlgebraElement::one();
    rep.complete    = idem.size() == rep.idempotent_count
                   && std::none_of(idem.begin(), idem.end(), [](auto const& e) { return e.is_zero(); });
    rep.passes  = stabilized && rep.orthogonal && rep.sums_to_one && rep.complete;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

  std::uint64_t canonical_code(Poset const& p) {
    std::size_t const n = p.size();
    if (n > 8) {
      throw GuardError("canonical codes are limited to 8 elements");
    }
    // Colour refinement on (own colour, colours strictly below, strictly above).
    std::vector<int> colour(n, 0);
    std::size_t      classes = n == 0 ? 0 : 1;
    for (;;) {
      std::vector<std::vector<int>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> lo, hi;
        for (std::size_t w = 0; w < n; ++w) {
          if (p.less(w, v)) {
            lo.push_back(colour[w]);
          } else if (p.less(v, w)) {
            hi.push_back(colour[w]);
          }
        }
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        sig[v] = {colour[v], static_cast<int>(lo.size())};
        sig[v].insert(sig[v].end(), lo.begin(), lo.end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), hi.begin(), hi.end());
      }
      std::map<std::vector<int>, int> rank;
      for (auto const& s : sig) {
        rank.emplace(s, 0);
      }
      int r = 0;
      for (auto& [s, v] : rank) {
        v = r++;
      }
      for (std::size_t v = 0; v < n; ++v) {
        colour[v] = rank.at(sig[v]);
      }
      if (rank.size() == classes) {
        break;
      }
      classes = rank.size();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return std::pair(colour[a], a) < std::pair(colour[b], b);
    });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && colour[order[j]] == colour[order[i]]) {
        ++j;
      }
      blocks.emplace_back(i, j);
      i = j;
    }
    auto code = [&] {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            c = (c << 1) | (p.leq(order[i], order[j]) ? 1U : 0U);
          }
        }
      }
      return c;
    };
    std::uint64_t best = ~std::uint64_t(0);
    auto rec = [&](auto&& self, std::size_t b) -> void {
      if (b == blocks.size()) {
        best = std::min(best, code());
        return;
      }
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last  = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      std::sort(first, last);
      do {
        self(self, b + 1);
      } while (std::next_permutation(first, last));
    };
    rec(rec, 0);
    return best;
  }

  std::vector<Poset> enumerate_posets(std::size_t n, PosetFilter filter) {
    if (n > 8) {
      throw GuardError("poset enumeration is limited to 8 elements");
    }
    std::vector<Poset> level{Poset::from_down_sets({})};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Poset>      next;
      std::set<std::uint64_t> seen;
      for (auto const& p : level) {
        Subset const full = p.all();
        for (Subset ideal = 0; ideal <= full; ++ideal) {
          bool closed = true;
          for_each_element(ideal, [&](std::size_t x) {
            if ((p.down(x) & ~ideal) != 0) {
              closed = false;
            }
          });
          if (!closed) {
            continue;
          }
          std::vector<Subset> down;
          for (std::size_t x = 0; x < k; ++x) {
            down.push_back(p.down(x));
          }
          down.push_back(ideal | singleton(k));
          Poset q = Poset::from_down_sets(std::move(down));
          if (filter == PosetFilter::meet_semilattice && !q.is_meet_semilattice()) {
            continue;
          }
          if (seen.insert(canonical_code(q)).second) {
            next.push_back(std::move(q));
          }
          if (ideal == full) {
            break;
          }
        }
      }
      level = std::move(next);
    }
    return level;
  }

}  // namespace jtriv

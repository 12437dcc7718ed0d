#include "jtriv/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "jtriv/algebra.hpp"
#include "jtriv/coxeter.hpp"
#include "jtriv/families.hpp"
#include "jtriv/io.hpp"
#include "jtriv/orp.hpp"

namespace jtriv {

  namespace {

    using nlohmann::json;

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidInput("cannot read '" + path + "'");
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    std::size_t parse_size(std::string const& s) {
      std::size_t pos = 0;
      std::size_t v   = 0;
      try {
        v = std::stoul(s, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) {
        throw InvalidInput("expected a number, got '" + s + "'");
      }
      return v;
    }

    void check_cap(double predicted, std::size_t cap, std::string const& what) {
      if (predicted > static_cast<double>(cap)) {
        throw GuardError(what + " has more than " + std::to_string(cap) + " elements (--cap-elements)");
      }
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : s) {
        if (c == sep) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      out.push_back(cur);
      return out;
    }

    struct Common {
      std::string format = "text";
      std::string out_file;
      std::size_t threads = 1;
      std::size_t cap     = 2'000'000;
      std::uint64_t seed  = GenerateOptions{}.seed;
      bool          error_json = false;
    };

    std::string bool_text(bool b) {
      return b ? "true" : "false";
    }

  }  // namespace

  void parallel_for(std::size_t count, std::size_t threads, std::function<void(std::size_t)> const& f) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        f(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               lock;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            f(i);
          } catch (...) {
            std::lock_guard<std::mutex> g(lock);
            if (!failure) {
              failure = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  MonoidTable resolve_family(std::string const& descriptor, FamilyOptions const& opts) {
    auto const      colon = descriptor.find(':');
    std::string const kind = descriptor.substr(0, colon);
    std::string const rest = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    GenerateOptions gen;
    gen.cap  = opts.cap;
    gen.seed = opts.seed;

    if (kind == "hecke") {
      auto parts = split(rest, ':');
      if (parts.size() != 2 || parts[0].size() != 1) {
        throw InvalidInput("expected hecke:T:n, got '" + descriptor + "'");
      }
      char        type = parts[0][0];
      std::size_t n    = parse_size(parts[1]);
      if (type == 'A') {
        if (n < 2) {
          throw InvalidInput("hecke:A:n needs n >= 2");
        }
        n -= 1;
      }
      CoxeterGroup W(type, n, opts.cap);
      return hecke_monoid(W);
    }
    if (kind == "ndpf") {
      std::size_t const n = parse_size(rest);
      double            catalan = 1;
      for (std::size_t k = 0; k < n && catalan <= 1e18; ++k) {
        catalan = catalan * 2 * (2 * static_cast<double>(k) + 1) / (static_cast<double>(k) + 2);
      }
      check_cap(catalan, opts.cap, "NDPF_" + rest);
      return ndpf(n, gen).table;
    }
    if (kind == "ubool") {
      std::size_t const n = parse_size(rest);
      if (n <= 8) {
        check_cap(std::ldexp(1.0, static_cast<int>(n * (n - (n > 0 ? 1 : 0)) / 2)), opts.cap, "U_" + rest);
      }
      return unitriangular_boolean(n, 8, gen).table;
    }
    if (kind == "straubing" && rest.empty()) {
      return straubing_example().table;
    }
    if (kind == "incidence") {
      return incidence_monoid(Poset::from_json(read_file(rest))).table;
    }
    if (kind == "or") {
      return or_monoid(Poset::from_json(read_file(rest)), opts.cap).table;
    }
    if (kind == "latticegen") {
      return lattice_generator_monoid(Poset::from_json(read_file(rest))).table;
    }
    if (kind == "quivermonoid") {
      return quiver_monoid(Digraph::from_json(read_file(rest))).table;
    }
    if (kind == "simplequiver") {
      return simple_quiver_monoid(Digraph::from_json(read_file(rest))).table;
    }
    if (kind == "quiverlattice") {
      auto parts = split(rest, ',');
      if (parts.size() != 2) {
        throw InvalidInput("expected quiverlattice:GRAPH,POSET");
      }
      return quiver_lattice_monoid(Digraph::from_json(read_file(parts[0])), Poset::from_json(read_file(parts[1])))
          .table;
    }
    if (kind == "table") {
      auto t = load_json(read_file(rest));
      check_cap(static_cast<double>(t.size()), opts.cap, "table");
      return t;
    }
    throw InvalidInput("unknown family '" + descriptor + "'");
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation theory of finite J-trivial monoids"};
    app.require_subcommand(1);
    Common c;
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--out", c.out_file, "Write output to FILE");
    app.add_option("--threads", c.threads, "Worker threads for surveys")->check(CLI::PositiveNumber);
    app.add_option("--cap-elements", c.cap, "Largest monoid to generate");
    app.add_option("--seed", c.seed, "Seed of sampled self-checks");
    app.add_flag("--error-json", c.error_json, "Report errors as JSON on stderr");

    std::string family;
    auto add_family_command = [&](std::string const& name, std::string const& help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("family", family, "Family descriptor")->required();
      return sub;
    };
    auto*       info        = add_family_command("info", "Cardinality, idempotent count and J-triviality");
    auto*       idem_cmd    = add_family_command("idempotents", "List the idempotents");
    auto*       cartan_cmd  = add_family_command("cartan", "Cartan matrix");
    auto*       quiver_cmd  = add_family_command("quiver", "Ext-quiver");
    auto*       series_cmd  = add_family_command("radical-series", "Radical filtration series");
    std::size_t rad_guard   = 1000;
    series_cmd->add_option("--guard", rad_guard, "Largest monoid for the radical filtration");
    auto*       proj_cmd    = add_family_command("projectives", "Combinatorial projective modules");
    auto*       lift_cmd    = add_family_command("lift", "Lifted orthogonal idempotents");
    auto*       dump_cmd    = add_family_command("dump", "JSON dump of the monoid table");
    std::string sieve_mode  = "compatible";
    std::size_t sieve_cap   = 10'000'000;
    quiver_cmd->add_option("--sieve", sieve_mode, "Pairs scanned by the quiver sieve")
        ->check(CLI::IsMember({"compatible", "all"}));
    quiver_cmd->add_option("--sieve-cap", sieve_cap, "Largest number of sieve products");

    auto*       survey = app.add_subcommand("survey-posets", "Check all posets on n elements");
    std::size_t survey_n = 6;
    std::string survey_check = "cartan-acyclic";
    std::string report_file;
    survey->add_option("--n", survey_n, "Poset size")->check(CLI::Range(1, 8));
    survey->add_option("--check", survey_check, "Property to check")
        ->check(CLI::IsMember({"cartan-acyclic", "lex-order"}));
    survey->add_option("--report", report_file, "Write the JSON report to FILE");

    auto*       conj     = app.add_subcommand("check-conjecture", "Demipotent check on meet semilattices");
    std::size_t max_size = 6;
    conj->add_option("--max-size", max_size, "Largest semilattice")->check(CLI::Range(1, 8));
    conj->add_option("--report", report_file, "Write the JSON report to FILE");

    std::vector<char const*> argv{"jtriv"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }

    auto fail = [&](int code, std::string const& kind, std::string const& message) {
      if (c.error_json || c.format == "json") {
        err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
      } else {
        err << "error: " << message << "\n";
      }
      return code;
    };

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      return fail(3, "invalid_input", e.what());
    }

    std::ostringstream buffer;
    std::ostream&      o = buffer;
    try {
      FamilyOptions fo{c.cap, c.seed};
      auto needs_j = [&](MonoidTable t) { return std::make_unique<JTrivialMonoid>(std::move(t)); };
      bool const json_out = c.format == "json";
      bool const dot_out  = c.format == "dot";
      auto no_dot = [&] {
        if (dot_out) {
          throw InvalidInput("--format dot is only available for cartan and quiver");
        }
      };

      if (info->parsed()) {
        no_dot();
        auto       t  = resolve_family(family, fo);
        auto       w  = is_j_trivial(t);
        auto const ni = idempotents(t).size();
        if (json_out) {
          json j{{"family", family}, {"n", t.size()}, {"idempotents", ni}, {"j_trivial", w.j_trivial},
                 {"generators", t.number_of_generators()}, {"seed", c.seed}};
          if (w.witness) {
            j["witness"] = {t.repr(w.witness->first), t.repr(w.witness->second)};
          }
          o << j.dump() << "\n";
        } else {
          o << "n=" << t.size() << " idempotents=" << ni << " j_trivial=" << bool_text(w.j_trivial) << "\n";
        }
      } else if (idem_cmd->parsed()) {
        no_dot();
        auto m = needs_j(resolve_family(family, fo));
        json j = json::array();
        for (ElementId e : m->idempotents()) {
          if (json_out) {
            j.push_back(m->table().repr(e));
          } else {
            o << m->table().repr(e) << "\n";
          }
        }
        if (json_out) {
          o << j.dump() << "\n";
        }
      } else if (cartan_cmd->parsed()) {
        auto m  = needs_j(resolve_family(family, fo));
        auto cm = cartan_matrix(*m);
        auto const& t = m->table();
        if (dot_out) {
          o << to_dot(t, cm);
        } else if (json_out) {
          json j;
          j["idempotents"] = json::array();
          for (ElementId e : cm.idems) {
            j["idempotents"].push_back(t.repr(e));
          }
          j["cartan"] = cm.entries;
          o << j.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < cm.idems.size(); ++i) {
            o << "e" << i << " = " << t.repr(cm.idems[i]) << "\n";
          }
          for (auto const& row : cm.entries) {
            for (std::size_t k = 0; k < row.size(); ++k) {
              o << (k ? " " : "") << row[k];
            }
            o << "\n";
          }
        }
      } else if (quiver_cmd->parsed()) {
        auto          m = needs_j(resolve_family(family, fo));
        QuiverOptions qo;
        qo.mode        = sieve_mode == "all" ? SieveMode::all_pairs : SieveMode::compatible_pairs;
        qo.product_cap = sieve_cap;
        auto        q  = quiver(*m, qo);
        auto const& t  = m->table();
        if (dot_out) {
          o << to_dot(t, q);
        } else if (json_out) {
          json j;
          j["idempotents"]  = json::array();
          j["quiver_edges"] = json::array();
          for (ElementId e : q.idems) {
            j["idempotents"].push_back(t.repr(e));
          }
          for (auto const& e : q.edges) {
            j["quiver_edges"].push_back({{"src", t.repr(e.src)}, {"dst", t.repr(e.dst)}, {"label", t.repr(e.label)}});
          }
          o << j.dump() << "\n";
        } else {
          o << "vertices=" << q.idems.size() << " edges=" << q.edges.size() << "\n";
          for (auto const& e : q.edges) {
            o << t.repr(e.src) << " -> " << t.repr(e.dst) << " : " << t.repr(e.label) << "\n";
          }
        }
      } else if (series_cmd->parsed()) {
        no_dot();
        auto m    = needs_j(resolve_family(family, fo));
        auto dims = radical_filtration(*m, rad_guard);
        auto s    = radical_series(dims);
        if (json_out) {
          o << json{{"dims", dims}, {"coefficients", s}, {"series", format_series(s)}}.dump() << "\n";
        } else {
          o << format_series(s) << "\n";
        }
      } else if (proj_cmd->parsed()) {
        no_dot();
        auto        m = needs_j(resolve_family(family, fo));
        auto const& t = m->table();
        json        j = json::array();
        for (ElementId e : m->idempotents()) {
          auto p = projective_module(*m, e);
          if (json_out) {
            json basis = json::array();
            for (ElementId x : p.basis) {
              basis.push_back(t.repr(x));
            }
            j.push_back({{"idempotent", t.repr(e)}, {"dimension", p.basis.size()}, {"basis", basis}});
          } else {
            o << "P(" << t.repr(e) << ") dim=" << p.basis.size() << ":";
            for (ElementId x : p.basis) {
              o << " " << t.repr(x);
            }
            o << "\n";
          }
        }
        if (json_out) {
          o << j.dump() << "\n";
        }
      } else if (lift_cmd->parsed()) {
        no_dot();
        auto        m = needs_j(resolve_family(family, fo));
        auto const& t = m->table();
        auto        f = orthogonal_idempotents(*m);
        json        j = json::array();
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (json_out) {
            j.push_back({{"idempotent", t.repr(m->idempotents()[i])}, {"f", f[i].to_string(t)}});
          } else {
            o << "f(" << t.repr(m->idempotents()[i]) << ") = " << f[i].to_string(t) << "\n";
          }
        }
        if (json_out) {
          o << j.dump() << "\n";
        }
      } else if (dump_cmd->parsed()) {
        no_dot();
        o << dump_json(resolve_family(family, fo)) << "\n";
      } else if (survey->parsed()) {
        no_dot();
        auto const posets = enumerate_posets(survey_n);
        std::vector<json> rows(posets.size());
        std::vector<char> ok(posets.size(), 0);
        auto const start = std::chrono::steady_clock::now();
        parallel_for(posets.size(), c.threads, [&](std::size_t i) {
          auto const t0 = std::chrono::steady_clock::now();
          auto       g  = or_monoid(posets[i], c.cap);
          bool       pass;
          if (survey_check == "lex-order") {
            pass = lex_symbol_order_check(posets[i], g.values);
          } else {
            JTrivialMonoid m(std::move(g.table));
            pass = cartan_minus_identity_acyclic(cartan_matrix(m));
          }
          ok[i]   = pass;
          rows[i] = {{"poset", json::parse(posets[i].to_json())},
                     {"or_size", g.values.size()},
                     {"pass", pass},
                     {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        });
        std::size_t const passed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
        double const      secs   = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json report{{"n", survey_n}, {"check", survey_check}, {"posets", posets.size()}, {"passed", passed},
                    {"threads", c.threads}, {"seconds", secs}, {"instances", rows}};
        if (!report_file.empty()) {
          std::ofstream(report_file) << report.dump(2) << "\n";
        }
        if (json_out) {
          o << report.dump() << "\n";
        } else {
          o << "posets=" << posets.size() << " passed=" << passed << " failed=" << posets.size() - passed << "\n";
        }
        if (passed != posets.size()) {
          out << buffer.str();
          return fail(4, "property_failure", "survey check '" + survey_check + "' failed");
        }
      } else if (conj->parsed()) {
        no_dot();
        std::vector<Poset> lattices;
        for (std::size_t n = 1; n <= max_size; ++n) {
          for (auto& p : enumerate_posets(n, PosetFilter::meet_semilattice)) {
            lattices.push_back(std::move(p));
          }
        }
        std::vector<ConjectureReport> reps(lattices.size());
        auto const start = std::chrono::steady_clock::now();
        parallel_for(lattices.size(), c.threads, [&](std::size_t i) { reps[i] = conjecture_check(lattices[i], c.cap); });
        std::size_t passed = 0, direct = 0, max_power = 0;
        json        rows   = json::array();
        for (auto const& r : reps) {
          passed += r.passes;
          direct += r.passes && r.all_idempotent;
          max_power = std::max(max_power, r.max_power);
          rows.push_back({{"poset", json::parse(r.covers)},
                          {"or_size", r.monoid_size},
                          {"idempotents", r.idempotent_count},
                          {"demipotents", r.demipotent_count},
                          {"powers", r.powers},
                          {"max_power", r.max_power},
                          {"orthogonal", r.orthogonal},
                          {"sums_to_one", r.sums_to_one},
                          {"complete", r.complete},
                          {"pass", r.passes},
                          {"seconds", r.seconds}});
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json report{{"max_size", max_size}, {"semilattices", lattices.size()}, {"passed", passed},
                    {"power_one", direct}, {"max_power", max_power}, {"threads", c.threads},
                    {"seconds", secs}, {"instances", rows}};
        if (!report_file.empty()) {
          std::ofstream(report_file) << report.dump(2) << "\n";
        }
        if (json_out) {
          o << report.dump() << "\n";
        } else {
          o << "semilattices=" << lattices.size() << " passed=" << passed << " power_one=" << direct
            << " max_power=" << max_power << "\n";
        }
        if (passed != lattices.size()) {
          out << buffer.str();
          return fail(4, "property_failure", "conjecture check failed on some semilattice");
        }
      }
    } catch (GuardError const& e) {
      return fail(2, "guard", e.what());
    } catch (InvalidInput const& e) {
      return fail(3, "invalid_input", e.what());
    } catch (PropertyFailure const& e) {
      return fail(4, "property_failure", e.what());
    }

    if (c.out_file.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(c.out_file);
      if (!f) {
        return fail(3, "invalid_input", "cannot write '" + c.out_file + "'");
      }
      f << buffer.str();
    }
    return 0;
  }

}  // namespace jtriv

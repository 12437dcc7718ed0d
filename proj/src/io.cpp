#include "jtriv/io.hpp"

#include "json.hpp"

namespace jtriv {

  namespace {

    using nlohmann::json;

    std::string quoted(std::string const& s) {
      return json(s).dump();
    }

  }  // namespace

  std::string dump_json(MonoidTable const& t) {
    std::size_t const m = t.number_of_generators();
    json              right = json::array(), left = json::array();
    for (ElementId x = 0; x < t.size(); ++x) {
      json r = json::array(), l = json::array();
      for (std::size_t j = 0; j < m; ++j) {
        r.push_back(t.right(x, j));
        l.push_back(t.left(x, j));
      }
      right.push_back(std::move(r));
      left.push_back(std::move(l));
    }
    json j;
    j["n"]            = t.size();
    j["generators"]   = t.generator_labels();
    j["right_cayley"] = std::move(right);
    j["left_cayley"]  = std::move(left);
    j["repr"]         = t.reprs();
    return j.dump();
  }

  MonoidTable load_json(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    try {
      auto labels = j.at("generators").get<std::vector<std::string>>();
      auto right  = j.at("right_cayley").get<std::vector<std::vector<ElementId>>>();
      auto left   = j.at("left_cayley").get<std::vector<std::vector<ElementId>>>();
      auto repr   = j.at("repr").get<std::vector<std::string>>();
      if (j.at("n").get<std::size_t>() != repr.size()) {
        throw InvalidInput("\"n\" does not match the number of elements");
      }
      return MonoidTable::from_cayley(std::move(labels), std::move(right), std::move(left), std::move(repr));
    } catch (json::exception const& e) {
      throw InvalidInput(std::string("malformed monoid table: ") + e.what());
    }
  }

  std::string representation_json(MonoidTable const& t, CartanMatrix const& c, Quiver const& q) {
    json j;
    j["idempotents"] = json::array();
    for (ElementId e : c.idems) {
      j["idempotents"].push_back(t.repr(e));
    }
    j["cartan"]       = c.entries;
    j["quiver_edges"] = json::array();
    for (auto const& e : q.edges) {
      j["quiver_edges"].push_back({{"src", t.repr(e.src)}, {"dst", t.repr(e.dst)}, {"label", t.repr(e.label)}});
    }
    return j.dump();
  }

  std::string to_dot(MonoidTable const& t, CartanMatrix const& c) {
    std::string out = "digraph cartan {\n";
    for (ElementId e : c.idems) {
      out += "  " + quoted(t.repr(e)) + ";\n";
    }
    for (std::size_t i = 0; i < c.idems.size(); ++i) {
      for (std::size_t k = 0; k < c.idems.size(); ++k) {
        if (i != k && c.entries[i][k] != 0) {
          out += "  " + quoted(t.repr(c.idems[i])) + " -> " + quoted(t.repr(c.idems[k]))
                 + " [label=\"" + std::to_string(c.entries[i][k]) + "\"];\n";
        }
      }
    }
    return out + "}\n";
  }

  std::string to_dot(MonoidTable const& t, Quiver const& q) {
    std::string out = "digraph quiver {\n";
    for (ElementId e : q.idems) {
      out += "  " + quoted(t.repr(e)) + ";\n";
    }
    for (auto const& e : q.edges) {
      out += "  " + quoted(t.repr(e.src)) + " -> " + quoted(t.repr(e.dst)) + " [label=" + quoted(t.repr(e.label))
             + "];\n";
    }
    return out + "}\n";
  }

}  // namespace jtriv

#include "jtriv/transformation.hpp"

namespace jtriv {

  std::string to_string(Transformation const& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(f.image[i] + 1);
    }
    s += ']';
    return s;
  }

}  // namespace jtriv

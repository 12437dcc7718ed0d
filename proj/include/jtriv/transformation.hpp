#ifndef JTRIV_TRANSFORMATION_HPP_
#define JTRIV_TRANSFORMATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jtriv {

  // Self-map of {0, ..., degree-1} acting on the right: x.(fg) = (x.f).g.
  struct Transformation {
    std::vector<std::uint8_t> image;

    static Transformation identity(std::size_t degree) {
      Transformation t;
      t.image.resize(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        t.image[i] = static_cast<std::uint8_t>(i);
      }
      return t;
    }

    std::size_t degree() const noexcept {
      return image.size();
    }
    std::uint8_t operator[](std::size_t i) const {
      return image[i];
    }

    bool operator==(Transformation const&) const = default;
  };

  inline Transformation compose(Transformation const& f, Transformation const& g) {
    Transformation h;
    h.image.resize(f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i) {
      h.image[i] = g.image[f.image[i]];
    }
    return h;
  }

  // Image list, 1-based, e.g. "[1,1,3]".
  std::string to_string(Transformation const& f);

  struct TransformationCompose {
    Transformation operator()(Transformation const& f, Transformation const& g) const {
      return compose(f, g);
    }
  };

  struct TransformationRepr {
    std::string operator()(Transformation const& f) const {
      return to_string(f);
    }
  };

}  // namespace jtriv

template <>
struct std::hash<jtriv::Transformation> {
  std::size_t operator()(jtriv::Transformation const& f) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : f.image) {
      h = (h ^ v) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

#endif  // JTRIV_TRANSFORMATION_HPP_

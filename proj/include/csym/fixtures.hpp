#pragma once

#include <optional>
#include <string>

#include "csym/errors.hpp"
#include "csym/int_matrix.hpp"
#include "csym/poset.hpp"

namespace csym::fixtures {

/// The bundled 5-element poset: 1 < 3, 2 < 3, 2 < 4, 4 < 5. Its pipeline
/// results are pinned throughout the regression suite.
inline Poset example_2_1_poset() {
  return from_cover_relations(5, {{1, 3}, {2, 3}, {2, 4}, {4, 5}});
}

/// The 6 x 10 block sitting inside the example-1.4 configuration.
inline IntMatrix example_1_4_raw() {
  const int data[6][10] = {
      {1, 0, 0, 0, 0, 1, 1, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 1, 0, 1},
      {0, 1, 1, 0, 0, 0, 1, 0, 1, 0},
      {0, 0, 1, 1, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 1, 0, 0, 0, 1, 0},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
  };
  IntMatrix m(6, 10);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 10; ++c) m.at(r, c) = data[r][c];
  return m;
}

/// The 7 x 11 configuration: a zero column next to the raw block, with a row
/// of ones appended. Spans Z^7 but is not unimodular.
inline IntMatrix example_1_4_configuration() {
  IntMatrix raw = example_1_4_raw();
  IntMatrix m(7, 11);
  for (int c = 0; c < 11; ++c) m.at(6, c) = 1;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 10; ++c) m.at(r, c + 1) = raw.at(r, c);
  return m;
}

/// The order matrix of a 3-antichain, the minimal non-unimodular case.
inline IntMatrix prop_2_4_matrix() {
  const int data[3][7] = {
      {1, 0, 0, 1, 1, 0, 1},
      {0, 1, 0, 1, 0, 1, 1},
      {0, 0, 1, 0, 1, 1, 1},
  };
  IntMatrix m(3, 7);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) m.at(r, c) = data[r][c];
  return m;
}

struct NamedFixture {
  std::optional<Poset> poset;
  std::optional<IntMatrix> matrix;
};

/// Resolves fixture names: example-2.1, example-1.4, example-1.4-raw,
/// prop-2.4, antichain:<d>, chain:<d>. Returns nothing for unknown names.
inline std::optional<NamedFixture> lookup(const std::string& name) {
  NamedFixture f;
  if (name == "example-2.1") {
    f.poset = example_2_1_poset();
    return f;
  }
  if (name == "example-1.4") {
    f.matrix = example_1_4_configuration();
    return f;
  }
  if (name == "example-1.4-raw") {
    f.matrix = example_1_4_raw();
    return f;
  }
  if (name == "prop-2.4") {
    f.matrix = prop_2_4_matrix();
    return f;
  }
  auto parse_sized = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      int d = std::stoi(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size()) return std::nullopt;
      return d;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (auto d = parse_sized("antichain:")) {
    f.poset = antichain_poset(*d);
    return f;
  }
  if (auto d = parse_sized("chain:")) {
    f.poset = chain_poset(*d);
    return f;
  }
  return std::nullopt;
}

}  // namespace csym::fixtures

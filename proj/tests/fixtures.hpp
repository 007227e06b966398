#pragma once

// Shared algebra presentations used across the test suites.

#include <memory>
#include <string>

#include "qalg/algebra.hpp"
#include "qalg/presentation.hpp"

namespace fixtures {

// k[x]/(x^2): one vertex, one loop of degree 1
inline const char* dual_numbers = R"({
  "field": "Q",
  "vertices": ["1"],
  "arrows": [{"name": "x", "source": "1", "target": "1", "degree": 1}],
  "relations": [[{"coeff": 1, "path": ["x", "x"]}]]
})";

// k[x]/(x^3)
inline const char* truncated_cubic = R"({
  "field": "Q",
  "vertices": ["1"],
  "arrows": [{"name": "x", "source": "1", "target": "1"}],
  "relations": [[{"coeff": 1, "path": ["x", "x", "x"]}]]
})";

// A2 quiver 1 -> 2, hereditary
inline const char* a2 = R"({
  "field": "Q",
  "vertices": ["1", "2"],
  "arrows": [{"name": "a", "source": "1", "target": "2"}],
  "relations": []
})";

// A3 quiver 1 -> 2 -> 3 with the zero relation ab = 0
inline const char* a3_zero = R"({
  "field": "Q",
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a", "source": "1", "target": "2"},
    {"name": "b", "source": "2", "target": "3"}
  ],
  "relations": [[{"coeff": 1, "path": ["a", "b"]}]]
})";

// cyclic Nakayama with rad^2 = 0 on two vertices
inline const char* nakayama_cyclic = R"({
  "field": "Q",
  "vertices": ["1", "2"],
  "arrows": [
    {"name": "a", "source": "1", "target": "2"},
    {"name": "b", "source": "2", "target": "1"}
  ],
  "relations": [
    [{"coeff": 1, "path": ["a", "b"]}],
    [{"coeff": 1, "path": ["b", "a"]}]
  ]
})";

// k[x,y]/(x^2, xy, y^2), commutative local of dimension 3
inline const char* local_square_zero = R"({
  "field": "Q",
  "vertices": ["1"],
  "arrows": [
    {"name": "x", "source": "1", "target": "1"},
    {"name": "y", "source": "1", "target": "1"}
  ],
  "relations": [
    [{"coeff": 1, "path": ["x", "x"]}],
    [{"coeff": 1, "path": ["x", "y"]}],
    [{"coeff": 1, "path": ["y", "x"]}],
    [{"coeff": 1, "path": ["y", "y"]}]
  ]
})";

// two vertices, no arrows: semisimple k^2
inline const char* semisimple2 = R"({
  "field": "Q",
  "vertices": ["1", "2"],
  "arrows": [],
  "relations": []
})";

inline std::shared_ptr<const qalg::GradedAlgebra<qalg::Rational>> build_q(const char* text) {
    const auto pres = qalg::parse_presentation(text);
    return std::make_shared<const qalg::GradedAlgebra<qalg::Rational>>(
        qalg::build_algebra<qalg::Rational>(pres, {}));
}

inline std::vector<const char*> corpus_texts() {
    return {dual_numbers, truncated_cubic, a2, a3_zero, nakayama_cyclic, local_square_zero};
}

}  // namespace fixtures

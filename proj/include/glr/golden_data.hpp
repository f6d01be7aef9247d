#pragma once

// Verbatim copy of data/facets_2_6.json; a test keeps the two identical.

#include <string_view>

namespace glr {

inline constexpr std::string_view kFacets26Json = R"GLR({
  "format": "glr-golden-facets",
  "version": 1,
  "n": 2,
  "m": 6,
  "equality": "|lambda(1)| + |lambda(3)| + |lambda(5)| = |lambda(2)| + |lambda(4)| + |lambda(6)|",
  "schemas": [
    {"I": [[1], [1], [1], [], [], []], "text": "lambda(2)_1 <= lambda(1)_1 + lambda(3)_1"},
    {"I": [[1], [2], [2], [], [], []], "text": "lambda(2)_2 <= lambda(1)_1 + lambda(3)_2"},
    {"I": [[1], [1], [1], [2], [1], []], "text": "lambda(2)_1 + lambda(4)_2 <= lambda(1)_1 + lambda(3)_1 + lambda(5)_1"},
    {"I": [[1], [2], [2], [2], [1], []], "text": "lambda(2)_2 + lambda(4)_2 <= lambda(1)_1 + lambda(3)_2 + lambda(5)_1"},
    {"I": [[1], [2], [2], [], [1], [2]], "text": "lambda(2)_2 + lambda(6)_2 <= lambda(1)_1 + lambda(3)_2 + lambda(5)_1"},
    {"I": [[1, 2], [1, 2], [1, 2], [], [], []], "text": "|lambda(2)| <= |lambda(1)| + |lambda(3)|"},
    {"I": [[1], [1], [1, 2], [1], [1], []], "text": "lambda(2)_1 + lambda(4)_1 <= lambda(1)_1 + |lambda(3)| + lambda(5)_1"},
    {"I": [[1], [1], [1, 2], [2], [2], []], "text": "lambda(2)_1 + lambda(4)_2 <= lambda(1)_1 + |lambda(3)| + lambda(5)_2"},
    {"I": [[2], [2], [1, 2], [2], [2], []], "text": "lambda(2)_2 + lambda(4)_2 <= lambda(1)_2 + |lambda(3)| + lambda(5)_2"},
    {"I": [[1], [1], [1, 2], [2], [1], [2]], "text": "lambda(2)_1 + lambda(4)_2 + lambda(6)_2 <= lambda(1)_1 + |lambda(3)| + lambda(5)_1"},
    {"I": [[1], [1], [1], [2], [1, 2], [2]], "text": "lambda(2)_1 + lambda(4)_2 + lambda(6)_2 <= lambda(1)_1 + lambda(3)_1 + |lambda(5)|"},
    {"I": [[1], [2], [1, 2], [2], [2], [2]], "text": "lambda(2)_2 + lambda(4)_2 + lambda(6)_2 <= lambda(1)_1 + |lambda(3)| + lambda(5)_2"},
    {"I": [[1, 2], [1, 2], [1, 2], [1], [1], [2]], "text": "|lambda(2)| + lambda(4)_1 + lambda(6)_2 <= |lambda(1)| + |lambda(3)| + lambda(5)_1"},
    {"I": [[1, 2], [1, 2], [1, 2], [2], [2], [2]], "text": "|lambda(2)| + lambda(4)_2 + lambda(6)_2 <= |lambda(1)| + |lambda(3)| + lambda(5)_2"}
  ],
  "appendix_layout": ["1,3", "1,2", "2,3", "2,2", "1,4", "2,4", "2,1", "1,1", "2,5", "2,6", "1,5", "1,6"],
  "appendix": [
    [1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 0],
    [1, 1, 2, 2, 0, 0, 2, 1, 0, 0, 0, 0],
    [1, 1, 2, 1, 1, 1, 1, 1, 1, 0, 1, 0],
    [1, 1, 2, 1, 0, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 2, 1, 0, 1, 1, 0, 1, 0, 0, 0],
    [1, 1, 2, 1, 0, 1, 1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 1, 1, 1, 2, 1, 1, 0],
    [1, 0, 2, 1, 0, 1, 1, 1, 1, 1, 0, 0],
    [1, 1, 2, 2, 1, 1, 2, 1, 1, 1, 1, 0],
    [1, 1, 2, 2, 0, 1, 2, 1, 1, 1, 0, 0]
  ]
}
)GLR";

}  // namespace glr

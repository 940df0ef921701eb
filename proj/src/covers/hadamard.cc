// Copyright 2026 The mcflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covers/hadamard.h"

#include <string>

#include "common/error.h"

namespace mcflow {

bool IsHadamard(const HadamardMatrix& h) {
  const int n = h.order;
  if (n <= 0 || static_cast<int>(h.rows.size()) != n) return false;
  for (const std::vector<int>& row : h.rows) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int x : row) {
      if (x != 1 && x != -1) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int dot = 0;
      for (int c = 0; c < n; ++c) dot += h.rows[i][c] * h.rows[j][c];
      if (dot != (i == j ? n : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix HadamardSylvester(int order) {
  if (order < 1 || (order & (order - 1)) != 0) {
    Fail(ErrorCode::kUnsupported,
         "no Hadamard construction for order " + std::to_string(order) +
             "; supported orders are 1, 2, 4, 8, 16, ... (Sylvester)");
  }
  HadamardMatrix h{1, {{1}}};
  while (h.order < order) {
    const int n = h.order;
    HadamardMatrix next{2 * n, std::vector<std::vector<int>>(
                                   2 * n, std::vector<int>(2 * n))};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int x = h.rows[i][j];
        next.rows[i][j] = x;
        next.rows[i][j + n] = x;
        next.rows[i + n][j] = x;
        next.rows[i + n][j + n] = -x;
      }
    }
    h = std::move(next);
  }
  if (!IsHadamard(h)) Fail(ErrorCode::kInternal, "Sylvester matrix check failed");
  return h;
}

}  // namespace mcflow

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

#ifndef MCFLOW_COVERS_HADAMARD_H_
#define MCFLOW_COVERS_HADAMARD_H_

#include <vector>

namespace mcflow {

struct HadamardMatrix {
  int order = 0;
  std::vector<std::vector<int>> rows;  // entries +1 / -1
};

// H * H^T == order * I.
bool IsHadamard(const HadamardMatrix& h);

// Sylvester doubling from (+). Orders 1, 2, 4, 8, ...; anything else fails
// with kUnsupported listing the supported orders.
HadamardMatrix HadamardSylvester(int order);

}  // namespace mcflow

#endif  // MCFLOW_COVERS_HADAMARD_H_

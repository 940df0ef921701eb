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

#ifndef MCFLOW_COMMON_RATIONAL_H_
#define MCFLOW_COMMON_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mcflow {

// Exact arbitrary-precision rational, always kept in canonical form
// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

Rational MakeRational(int64_t numerator, int64_t denominator = 1);

// Accepts "a", "a/b", "-a/b" with b > 0. Result is canonicalized.
Rational ParseRational(std::string_view text);

// "a/b" always, including "0/1" and "3/1". Used by the file formats.
std::string ToFractionString(const Rational& value);

// "a" when the denominator is 1, otherwise "a/b". Used for display.
std::string ToDisplayString(const Rational& value);

inline Rational Abs(const Rational& value) { return abs(value); }

// Returns true and stores the value when it fits in int64.
bool ToInt64(const mpz_class& value, int64_t* out);

}  // namespace mcflow

#endif  // MCFLOW_COMMON_RATIONAL_H_

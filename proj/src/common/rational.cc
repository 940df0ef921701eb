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

#include "common/rational.h"

#include <cctype>

#include "common/error.h"

namespace mcflow {
namespace {

bool IsIntegerToken(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational MakeRational(int64_t numerator, int64_t denominator) {
  Require(denominator != 0, "rational with zero denominator");
  Rational r(mpz_class(std::to_string(numerator)),
             mpz_class(std::to_string(denominator)));
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  const size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerToken(num) || !IsIntegerToken(den) || den[0] == '-' ||
      den[0] == '+') {
    Fail(ErrorCode::kParse,
         "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = ParseInteger(den);
  if (d == 0) {
    Fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(ParseInteger(num), d);
  r.canonicalize();
  return r;
}

std::string ToFractionString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ToDisplayString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return ToFractionString(value);
}

bool ToInt64(const mpz_class& value, int64_t* out) {
  if (!value.fits_slong_p()) return false;
  *out = value.get_si();
  return true;
}

}  // namespace mcflow

#!/usr/bin/env python3
# Copyright 2026 The mcflow Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solves an LP file written by `mcflow export-milp` with SciPy's HiGHS.

Reads only the subset of CPLEX LP that mcflow emits: one objective line,
one constraint per line, simple bounds and a Binaries section.

  solve_lp.py model.lp [--expect 3/2]

Prints the objective value. With --expect, exits 1 unless the optimum
matches the given number to 1e-6.
"""

import argparse
import fractions
import re
import sys

import numpy as np
from scipy import optimize, sparse

_TERM = re.compile(r"([+-])?\s*([0-9.]+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def _terms(text):
  out = []
  for sign, coef, var in _TERM.findall(text):
    value = float(coef) if coef else 1.0
    out.append((-value if sign == "-" else value, var))
  return out


def parse_lp(text):
  section = None
  objective, rows, bounds, binaries = [], [], {}, []
  for raw in text.splitlines():
    line = raw.strip()
    if not line or line.startswith("\\"):
      continue
    lower = line.lower()
    if lower in ("minimize", "maximize"):
      if lower == "maximize":
        sys.exit("only minimisation is supported")
      section = "obj"
    elif lower == "subject to":
      section = "rows"
    elif lower == "bounds":
      section = "bounds"
    elif lower == "binaries":
      section = "bin"
    elif lower == "end":
      break
    elif section == "obj":
      objective = _terms(line.split(":", 1)[1])
    elif section == "rows":
      name, body = line.split(":", 1)
      m = re.match(r"(.*?)(<=|>=|=)\s*(-?[0-9.]+)$", body.strip())
      rows.append((name, _terms(m.group(1)), m.group(2), float(m.group(3))))
    elif section == "bounds":
      m = re.match(r"(\S+)\s*(<=|>=)\s*(-?[0-9.]+)$", line)
      lo, hi = bounds.get(m.group(1), (0.0, np.inf))
      if m.group(2) == ">=":
        lo = float(m.group(3))
      else:
        hi = float(m.group(3))
      bounds[m.group(1)] = (lo, hi)
    elif section == "bin":
      binaries.extend(line.split())
  return objective, rows, bounds, binaries


def solve(text):
  objective, rows, bounds, binaries = parse_lp(text)
  names = {}
  for _, terms, _, _ in rows:
    for _, var in terms:
      names.setdefault(var, len(names))
  for var, _ in objective:
    names.setdefault(var, len(names))
  n = len(names)
  c = np.zeros(n)
  for coef, var in objective:
    c[names[var]] += coef
  a = sparse.lil_matrix((len(rows), n))
  lo = np.full(len(rows), -np.inf)
  hi = np.full(len(rows), np.inf)
  for i, (_, terms, sense, rhs) in enumerate(rows):
    for coef, var in terms:
      a[i, names[var]] += coef
    if sense in ("<=", "="):
      hi[i] = rhs
    if sense in (">=", "="):
      lo[i] = rhs
  var_lo = np.zeros(n)
  var_hi = np.full(n, np.inf)
  integrality = np.zeros(n)
  for var, (l, h) in bounds.items():
    if var in names:
      var_lo[names[var]], var_hi[names[var]] = l, h
  for var in binaries:
    if var in names:
      k = names[var]
      var_lo[k], var_hi[k], integrality[k] = 0, 1, 1
  result = optimize.milp(
      c,
      constraints=optimize.LinearConstraint(a.tocsr(), lo, hi),
      bounds=optimize.Bounds(var_lo, var_hi),
      integrality=integrality)
  if result.status != 0:
    sys.exit("solver: " + result.message)
  return result.fun


def main():
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("lp")
  parser.add_argument("--expect")
  args = parser.parse_args()
  with open(args.lp) as f:
    value = solve(f.read())
  print(f"{value:.9f}")
  if args.expect is not None:
    expected = float(fractions.Fraction(args.expect))
    if abs(value - expected) > 1e-6:
      print(f"expected {args.expect}", file=sys.stderr)
      return 1
  return 0


if __name__ == "__main__":
  sys.exit(main())

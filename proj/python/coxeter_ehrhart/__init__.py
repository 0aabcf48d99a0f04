# Copyright 2026 The Authors.
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

"""Ehrhart quasipolynomials of Coxeter permutahedra and zonotopes.

Integers come back as Python ints and rationals as fractions.Fraction.
Quasipolynomials are lists of constituents indexed by t mod period, each a
list of coefficients in ascending powers of t.
"""

from coxeter_ehrhart._core import (
    SizeLimitError,
    brute_force_structures,
    contains,
    count_points,
    egf_standard_odd,
    egf_values,
    ehrhart_integral,
    ehrhart_standard,
    ehrhart_zonotope,
    is_integral,
    lambert_w,
    positive_roots,
    standard_shift,
    table,
)


def evaluate(constituents, t):
  """Evaluates a quasipolynomial at the positive integer t."""
  coeffs = constituents[t % len(constituents)]
  return sum(c * t**k for k, c in enumerate(coeffs))


__all__ = [
    "SizeLimitError",
    "brute_force_structures",
    "contains",
    "count_points",
    "egf_standard_odd",
    "egf_values",
    "ehrhart_integral",
    "ehrhart_standard",
    "ehrhart_zonotope",
    "evaluate",
    "is_integral",
    "lambert_w",
    "positive_roots",
    "standard_shift",
    "table",
]

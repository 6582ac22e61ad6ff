"""Exact finite metric spaces.

Distances are :class:`fractions.Fraction` values.  All equalities and strict
comparisons are decided exactly; a float copy of the matrix is kept only as a
vectorized prefilter for the triangle check, and every triple it flags is
re-examined with exact arithmetic.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    AsymmetricMatrix,
    DegenerateSpace,
    DuplicateLabel,
    EmptySubset,
    FewerThanTwoPoints,
    MalformedFraction,
    MalformedMatrix,
    NonpositiveOffDiagonal,
    NonzeroDiagonal,
    RepeatedIndex,
    TriangleViolation,
)

PointSet = tuple  # sorted tuple of distinct point indices

_FRACTION_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_fraction(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Non-reduced fractions, zero denominators, floats and stray whitespace are
    rejected rather than coerced.
    """
    if isinstance(text, bool):
        raise MalformedFraction(f"not a fraction: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise MalformedFraction(f"not a fraction string: {text!r}")
    m = _FRACTION_RE.match(text)
    if m is None:
        raise MalformedFraction(f"malformed fraction: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise MalformedFraction(f"zero denominator: {text!r}")
    value = Fraction(num, den)
    if value.denominator != den:
        raise MalformedFraction(f"fraction not in lowest terms: {text!r}")
    return value


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def _exact(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    raise MalformedMatrix(f"distance {v!r} is not an exact rational")


def as_point_set(indices: Iterable[int], n: int | None = None) -> PointSet:
    idx = tuple(sorted(set(int(i) for i in indices)))
    if n is not None:
        for i in idx:
            if not 0 <= i < n:
                raise IndexError(f"point index {i} out of range for {n} points")
    return idx


class FiniteMetricSpace:
    """Labeled points with an exact rational distance matrix.

    Instances are treated as immutable.  ``check=False`` skips the metric
    axioms and is reserved for callers that have already established them.
    """

    def __init__(self, labels: Sequence[str], d: Sequence[Sequence], *, check: bool = True):
        self.labels = tuple(str(label) for label in labels)
        n = len(self.labels)
        if len(d) != n or any(len(row) != n for row in d):
            raise MalformedMatrix(f"expected a {n}x{n} matrix")
        self.d = tuple(tuple(_exact(v) for v in row) for row in d)
        if check:
            self._check_axioms()

    # -- basic protocol ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteMetricSpace):
            return NotImplemented
        return self.labels == other.labels and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.labels, self.d))

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={self.n})"

    def dist(self, i: int, j: int) -> Fraction:
        return self.d[i][j]

    def index(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def as_float(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.d], dtype=float).reshape(self.n, self.n)

    @cached_property
    def distinct_distances(self) -> tuple:
        return tuple(sorted({v for row in self.d for v in row}))

    @cached_property
    def distance_codes(self) -> np.ndarray:
        """Integer matrix with ``codes[i,j] == codes[k,l]`` iff the distances are equal."""
        rank = {v: r for r, v in enumerate(self.distinct_distances)}
        return np.array([[rank[v] for v in row] for row in self.d], dtype=np.int64).reshape(self.n, self.n)

    # -- validation ----------------------------------------------------------

    def _check_axioms(self) -> None:
        n = self.n
        if len(set(self.labels)) != n:
            seen = set()
            dup = next(lbl for lbl in self.labels if lbl in seen or seen.add(lbl))
            raise DuplicateLabel(f"duplicate point label {dup!r}")
        d = self.d
        for i in range(n):
            if d[i][i] != 0:
                raise NonzeroDiagonal(i)
        for i, j in combinations(range(n), 2):
            if d[i][j] != d[j][i]:
                raise AsymmetricMatrix((i, j))
        for i, j in combinations(range(n), 2):
            if d[i][j] <= 0:
                raise NonpositiveOffDiagonal((i, j))
        self._check_triangle()

    def _check_triangle(self) -> None:
        n = self.n
        if n < 3:
            return
        D = self.as_float
        codes = self.distance_codes
        values = self.distinct_distances
        tol = 1e-9 * (1.0 + float(np.max(D)))
        offdiag = ~np.eye(n, dtype=bool)
        # whether d(i,k) <= d(i,j) + d(j,k) depends only on the three values, so
        # each distinct value triple the float filter flags is decided once
        decided: dict = {}
        for j in range(n):
            slack = D[:, j, None] + D[None, j, :] - D
            mask = slack < tol
            mask[j, :] = False
            mask[:, j] = False
            mask &= offdiag
            if not mask.any():
                continue
            ii, kk = np.nonzero(mask)
            m = len(values)
            keys = (codes[ii, kk] * m + codes[ii, j]) * m + codes[j, kk]
            for key in np.unique(keys).tolist():
                if key not in decided:
                    c_ik, rest = divmod(key, m * m)
                    c_ij, c_jk = divmod(rest, m)
                    decided[key] = values[c_ik] <= values[c_ij] + values[c_jk]
                if not decided[key]:
                    hit = int(np.flatnonzero(keys == key)[0])
                    raise TriangleViolation((int(ii[hit]), j, int(kk[hit])))


def validate_space(labels: Sequence[str], matrix: Sequence[Sequence]) -> FiniteMetricSpace:
    """Build a space, raising the first metric-axiom failure found."""
    if not all(isinstance(row, (list, tuple)) for row in matrix):
        raise MalformedMatrix("distance matrix must be a list of rows")
    return FiniteMetricSpace(labels, matrix)


def diameter(space: FiniteMetricSpace) -> Fraction:
    if space.n < 2:
        return Fraction(0)
    return max(max(row) for row in space.d)


def rescale_to_unit_diameter(space: FiniteMetricSpace) -> FiniteMetricSpace:
    if space.n < 2:
        raise DegenerateSpace("cannot rescale a space with fewer than two points")
    diam = diameter(space)
    if diam == 1:
        return space
    return FiniteMetricSpace(space.labels, [[v / diam for v in row] for row in space.d], check=False)


def distance_to_subset(space: FiniteMetricSpace, point_index: int, subset: Iterable[int]) -> Fraction:
    subset = as_point_set(subset, space.n)
    if not subset:
        raise EmptySubset("distance to an empty subset is undefined")
    row = space.d[point_index]
    return min(row[s] for s in subset)


def min_pairwise_distance(space: FiniteMetricSpace, indices: Sequence[int]) -> Fraction:
    indices = tuple(indices)
    if len(indices) < 2:
        raise FewerThanTwoPoints("need at least two points")
    if len(set(indices)) != len(indices):
        raise RepeatedIndex(f"repeated index in {indices}")
    return min(space.d[a][b] for a, b in combinations(indices, 2))


def discrete_space(n: int, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """The n-point space with every off-diagonal distance equal to 1."""
    if labels is None:
        labels = [str(i) for i in range(n)]
    one, zero = Fraction(1), Fraction(0)
    return FiniteMetricSpace(labels, [[zero if i == j else one for j in range(n)] for i in range(n)], check=False)


def subspace(space: FiniteMetricSpace, indices: Sequence[int]) -> FiniteMetricSpace:
    indices = list(indices)
    return FiniteMetricSpace(
        [space.labels[i] for i in indices],
        [[space.d[i][j] for j in indices] for i in indices],
        check=False,
    )

"""Katetov maps on a finite metric space.

A Katetov map ``f`` on ``X`` records the distances from one new point to every
point of ``X``; the condition ``|f(x) - f(y)| <= d(x, y) <= f(x) + f(y)`` is
exactly what makes ``X + {f}`` a metric space.  The set of all such maps is
metrized by the sup-distance, and :func:`adjoin` uses that distance to glue a
whole family of maps onto ``X`` at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exceptions import (
    BaseMismatch,
    DiameterExceedsOne,
    EmptySubset,
    KatetovError,
    KatetovLower,
    KatetovUpper,
    NotSupported,
    SpecViolation,
    ZeroOnBase,
)
from .metric import FiniteMetricSpace, as_point_set, diameter, min_pairwise_distance

ONE = Fraction(1)


class KatetovMap:
    """Exact values of a one-point extension, one per base point."""

    __slots__ = ("base", "values", "_hash")

    def __init__(self, base: FiniteMetricSpace, values: Sequence, *, check: bool = True):
        self.base = base
        self.values = tuple(Fraction(v) for v in values)
        self._hash = None
        if check:
            _check_katetov(base, self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, x):
        return self.values[x]

    def __eq__(self, other):
        if not isinstance(other, KatetovMap):
            return NotImplemented
        return self.values == other.values and _same_base(self.base, other.base)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.values)
        return self._hash

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"KatetovMap({vals})"

    def kuratowski_point(self):
        """Index x with ``self == kuratowski(base, x)``, or None."""
        for x, v in enumerate(self.values):
            if v == 0:
                return x if self.values == self.base.d[x] else None
        return None


@dataclass(frozen=True)
class StaircaseSpec:
    witness_indices: tuple
    epsilon: Fraction
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "witness_indices", tuple(int(i) for i in self.witness_indices))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def m(self) -> int:
        return len(self.witness_indices)


def _same_base(a: FiniteMetricSpace, b: FiniteMetricSpace) -> bool:
    return a is b or a == b


def _check_katetov(space: FiniteMetricSpace, values: tuple) -> None:
    n = space.n
    if len(values) != n:
        raise KatetovError(f"expected {n} values, got {len(values)}")
    for x, v in enumerate(values):
        if v < 0:
            raise KatetovError(f"negative value at point {x}")
    d = space.d
    for x, y in combinations(range(n), 2):
        dxy = d[x][y]
        if abs(values[x] - values[y]) > dxy:
            raise KatetovLower(x, y)
        if values[x] + values[y] < dxy:
            raise KatetovUpper(x, y)
    # a zero value forces f == delta_x once both inequalities hold


def validate_katetov(space: FiniteMetricSpace, values: Sequence) -> KatetovMap:
    return KatetovMap(space, values)


def kuratowski(space: FiniteMetricSpace, x: int) -> KatetovMap:
    return KatetovMap(space, space.d[x], check=False)


def sup_distance(f: KatetovMap, g: KatetovMap) -> Fraction:
    if not _same_base(f.base, g.base):
        raise BaseMismatch("maps live over different spaces")
    if not f.values:
        return Fraction(0)
    return max(abs(a - b) for a, b in zip(f.values, g.values))


def is_supported_by(f: KatetovMap, subset: Iterable[int]) -> bool:
    S = as_point_set(subset, f.base.n)
    if not S:
        raise EmptySubset("a support must be nonempty")
    d = f.base.d
    vals = f.values
    return all(vals[x] == min(vals[s] + d[x][s] for s in S) for x in range(f.base.n))


def support_reduced_distance(f: KatetovMap, g: KatetovMap, subset: Iterable[int]) -> Fraction:
    """Sup-distance computed over a common support only."""
    if not _same_base(f.base, g.base):
        raise BaseMismatch("maps live over different spaces")
    S = as_point_set(subset, f.base.n)
    if not (is_supported_by(f, S) and is_supported_by(g, S)):
        raise NotSupported(f"{S} does not support both maps")
    return max(abs(f.values[s] - g.values[s]) for s in S)


def staircase(space: FiniteMetricSpace, spec: StaircaseSpec) -> KatetovMap:
    """``min(min_k(1 + offset + d(x, x_k) + 2(k-1)eps), 1 + offset + 2m eps)``."""
    if diameter(space) > 1:
        raise DiameterExceedsOne("staircase maps need a base of diameter at most 1")
    w = spec.witness_indices
    m = len(w)
    eps = spec.epsilon
    if m >= 1 and eps <= 0:
        raise SpecViolation("epsilon must be positive")
    if spec.offset < 0:
        raise SpecViolation("offset must be nonnegative")
    if len(set(w)) != m:
        raise SpecViolation(f"repeated witness in {w}")
    if m >= 2 and 2 * m * eps > min_pairwise_distance(space, w):
        raise SpecViolation(f"2*m*eps = {2 * m * eps} exceeds the minimum witness distance")
    level = ONE + spec.offset
    cap = level + 2 * m * eps
    d = space.d
    values = []
    for x in range(space.n):
        v = cap
        for k, xk in enumerate(w):
            v = min(v, level + d[x][xk] + 2 * k * eps)
        values.append(v)
    return KatetovMap(space, values)


def pushforward(f: KatetovMap, phi) -> KatetovMap:
    """The map ``x -> f(phi^-1(x))``; ``phi`` is an Isometry of ``f.base``."""
    perm = phi.perm
    out = [None] * len(perm)
    for y, image in enumerate(perm):
        out[image] = f.values[y]
    return KatetovMap(f.base, out, check=False)


def adjoin_indexed(space: FiniteMetricSpace, maps: Sequence[KatetovMap], labels: Sequence[str] | None = None):
    """Adjoin maps as new points; also report where each input map landed.

    Returns ``(new_space, base_points, positions)`` where ``positions[j]`` is
    the index of ``maps[j]`` in ``new_space`` (a base index for Kuratowski
    images, the shared index for duplicates).
    """
    n = space.n
    if labels is None:
        labels = [f"p{n + j}" for j in range(len(maps))]
    positions = []
    fresh: list = []
    fresh_labels: list = []
    seen: dict = {}
    for f, label in zip(maps, labels):
        if not _same_base(f.base, space):
            raise BaseMismatch("adjoined map is not over the target space")
        if f in seen:
            positions.append(seen[f])
            continue
        if any(v == 0 for v in f.values):
            x = f.kuratowski_point()
            if x is None:
                raise ZeroOnBase(f"{f!r} vanishes on the base without being a Kuratowski image")
            seen[f] = x
            positions.append(x)
            continue
        idx = n + len(fresh)
        seen[f] = idx
        positions.append(idx)
        fresh.append(f)
        fresh_labels.append(label)
    if not fresh:
        return space, tuple(range(n)), tuple(positions)
    d = [list(row) for row in space.d]
    for row, f in zip(d, zip(*(g.values for g in fresh))):
        row.extend(f)
    cross = [[Fraction(0)] * len(fresh) for _ in fresh]
    for a, b in combinations(range(len(fresh)), 2):
        cross[a][b] = cross[b][a] = sup_distance(fresh[a], fresh[b])
    for a, f in enumerate(fresh):
        d.append(list(f.values) + cross[a])
    new_space = FiniteMetricSpace(list(space.labels) + fresh_labels, d)
    return new_space, tuple(range(n)), tuple(positions)


def adjoin(space: FiniteMetricSpace, maps: Sequence[KatetovMap], labels: Sequence[str] | None = None):
    """Adjoin each distinct map as a point at sup-distance from the others.

    Returns ``(new_space, base_points)``; the base keeps its indices.
    """
    new_space, base, _ = adjoin_indexed(space, maps, labels)
    return new_space, base

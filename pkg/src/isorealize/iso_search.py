"""Isometry groups of finite metric spaces.

:func:`enumerate_isometries` is a backtracking search over partial maps.  It
starts from candidate lists filtered by each point's sorted distance profile,
always extends the most constrained unassigned point next, and after every
assignment ``i -> j`` drops each candidate ``c`` of an unassigned ``k`` with
``d(j, c) != d(i, k)``.  :func:`naive_enumerate` filters all ``n!``
permutations and is kept as the test oracle.
"""
from __future__ import annotations

import os
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence

import numpy as np

from .exceptions import NotABijection, SizeGuardExceeded, SpaceMismatch, TooLargeForOracle
from .metric import FiniteMetricSpace

DEFAULT_NODE_BUDGET = 10**8
ORACLE_MAX_POINTS = 8


@dataclass(frozen=True)
class Isometry:
    perm: tuple
    space: FiniteMetricSpace = field(compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def __len__(self):
        return len(self.perm)


def _check_bijection(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotABijection(f"{tuple(perm)} is not a permutation of range({n})")


def is_isometry(space: FiniteMetricSpace, perm: Sequence[int]) -> bool:
    perm = tuple(perm)
    _check_bijection(perm, space.n)
    d = space.d
    n = space.n
    for i in range(n):
        row, image_row = d[i], d[perm[i]]
        for j in range(i + 1, n):
            if image_row[perm[j]] != row[j]:
                return False
    return True


def _same_space(phi: Isometry, psi: Isometry) -> None:
    if not (phi.space is psi.space or phi.space == psi.space):
        raise SpaceMismatch("isometries act on different spaces")


def identity(space: FiniteMetricSpace) -> Isometry:
    return Isometry(tuple(range(space.n)), space)


def compose(phi: Isometry, psi: Isometry) -> Isometry:
    """``phi o psi``: apply ``psi`` first."""
    _same_space(phi, psi)
    return Isometry(tuple(phi.perm[i] for i in psi.perm), phi.space)


def invert(phi: Isometry) -> Isometry:
    inv = [0] * len(phi.perm)
    for i, p in enumerate(phi.perm):
        inv[p] = i
    return Isometry(tuple(inv), phi.space)


class IsoGroup:
    """A finite set of isometries of one space, sorted by image vector."""

    def __init__(self, space: FiniteMetricSpace, elements: Iterable[Isometry]):
        self.space = space
        self.elements = tuple(sorted(set(elements), key=lambda e: e.perm))
        self._perms = frozenset(e.perm for e in self.elements)

    @classmethod
    def from_perms(cls, space: FiniteMetricSpace, perms: Iterable[Sequence[int]]) -> "IsoGroup":
        return cls(space, (Isometry(tuple(p), space) for p in perms))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        perm = item.perm if isinstance(item, Isometry) else tuple(item)
        return perm in self._perms

    def __eq__(self, other):
        if not isinstance(other, IsoGroup):
            return NotImplemented
        return self._perms == other._perms

    def __repr__(self):
        return f"IsoGroup(n={self.space.n}, order={len(self)})"

    @property
    def perms(self) -> list:
        return [e.perm for e in self.elements]

    def is_closed(self) -> bool:
        """Identity present, closed under composition and inverse."""
        if tuple(range(self.space.n)) not in self._perms:
            return False
        for a in self.elements:
            if invert(a).perm not in self._perms:
                return False
            for b in self.elements:
                if compose(a, b).perm not in self._perms:
                    return False
        return True

    def to_json(self) -> dict:
        return {"n": self.space.n, "elements": [list(p) for p in self.perms]}


# -- search ------------------------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0
        self._lock = threading.Lock()

    def spend(self) -> None:
        with self._lock:
            self.used += 1
            if self.used > self.limit:
                raise SizeGuardExceeded(self.limit)


def _initial_candidates(codes: np.ndarray) -> np.ndarray:
    profiles = [tuple(sorted(row)) for row in codes.tolist()]
    key = {p: k for k, p in enumerate(sorted(set(profiles)))}
    ids = np.array([key[p] for p in profiles])
    return ids[:, None] == ids[None, :]


def _extend(codes, rows, cand, i_pos, j):
    """Restrict candidates after assigning ``rows[i_pos] -> j``."""
    i = rows[i_pos]
    keep = np.ones(len(rows), dtype=bool)
    keep[i_pos] = False
    rest = rows[keep]
    new = cand[keep] & (codes[rest, i][:, None] == codes[j][None, :])
    return rest, new


def _dfs(codes, rows, cand, assign, budget, out):
    if len(rows) == 0:
        out.append(tuple(assign))
        return
    counts = cand.sum(axis=1)
    if counts.min() == 0:
        return
    i_pos = int(np.argmin(counts))  # first minimum: ties go to the lower index
    i = int(rows[i_pos])
    for j in np.flatnonzero(cand[i_pos]):
        budget.spend()
        j = int(j)
        rest, new = _extend(codes, rows, cand, i_pos, j)
        assign[i] = j
        _dfs(codes, rest, new, assign, budget, out)
    assign[i] = -1


def enumerate_isometries(
    space: FiniteMetricSpace,
    node_budget: int | None = None,
    n_jobs: int = 1,
) -> IsoGroup:
    """All distance-preserving permutations of ``space``.

    ``n_jobs > 1`` explores the top-level branches in a thread pool; results
    are sorted, so the output does not depend on scheduling.
    """
    if node_budget is None:
        node_budget = DEFAULT_NODE_BUDGET
    n = space.n
    if n == 0:
        return IsoGroup(space, [Isometry((), space)])
    codes = space.distance_codes
    cand = _initial_candidates(codes)
    rows = np.arange(n)
    budget = _Budget(node_budget)
    found: list = []

    old_limit = sys.getrecursionlimit()
    if old_limit < 2 * n + 200:
        sys.setrecursionlimit(2 * n + 200)
    try:
        if n_jobs == 1:
            _dfs(codes, rows, cand, [-1] * n, budget, found)
        else:
            counts = cand.sum(axis=1)
            i_pos = int(np.argmin(counts))
            i = int(rows[i_pos])

            def branch(j):
                budget.spend()
                local: list = []
                assign = [-1] * n
                assign[i] = j
                rest, new = _extend(codes, rows, cand, i_pos, j)
                _dfs(codes, rest, new, assign, budget, local)
                return local

            workers = n_jobs if n_jobs > 0 else (os.cpu_count() or 1)
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(branch, [int(j) for j in np.flatnonzero(cand[i_pos])]):
                    found.extend(part)
    finally:
        sys.setrecursionlimit(old_limit)
    return IsoGroup(space, (Isometry(p, space) for p in found))


def naive_enumerate(space: FiniteMetricSpace) -> IsoGroup:
    if space.n > ORACLE_MAX_POINTS:
        raise TooLargeForOracle(f"naive enumeration is capped at {ORACLE_MAX_POINTS} points, got {space.n}")
    return IsoGroup(space, (Isometry(p, space) for p in permutations(range(space.n)) if is_isometry(space, p)))


# -- embeddings of abstract groups -------------------------------------------


@dataclass(frozen=True)
class EmbeddingCheck:
    """Outcome of :func:`verify_embedding`; truthy iff the map is an embedding."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def verify_embedding(group, mapping: Callable[[int], Isometry] | Sequence[Isometry]) -> EmbeddingCheck:
    """Check that ``g -> mapping(g)`` is an injective homomorphism.

    ``group`` needs ``order`` and ``mul(g, h)``; elements are ``range(order)``.
    """
    images = [mapping(g) if callable(mapping) else mapping[g] for g in range(group.order)]
    seen: dict = {}
    for g, img in enumerate(images):
        if img.perm in seen:
            return EmbeddingCheck(False, "not injective", (seen[img.perm], g))
        seen[img.perm] = g
    for g in range(group.order):
        for h in range(group.order):
            if images[group.mul(g, h)].perm != compose(images[g], images[h]).perm:
                return EmbeddingCheck(False, "not a homomorphism", (g, h))
    return EmbeddingCheck(True)

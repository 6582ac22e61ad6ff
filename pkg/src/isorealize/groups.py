"""Finite abstract groups given by a Cayley table or by permutation generators."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .exceptions import GroupError, NoIdentity, NoInverse, NotAssociative, OrderCapExceeded

DEFAULT_ORDER_CAP = 5040


@dataclass(frozen=True)
class GroupSpec:
    """Either ``cayley`` (``table[g][h]`` is the index of ``g*h``, identity at 0)
    or ``generators`` (permutations of ``range(degree)``)."""

    cayley: tuple | None = None
    generators: tuple | None = None
    degree: int | None = None

    @classmethod
    def from_json(cls, data) -> "GroupSpec":
        if not isinstance(data, dict):
            raise GroupError("group spec must be a JSON object")
        if ("cayley" in data) == ("generators" in data):
            raise GroupError("group spec needs exactly one of 'cayley' or 'generators'")
        if "cayley" in data:
            table = data["cayley"]
            if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
                raise GroupError("'cayley' must be a list of rows")
            return cls(cayley=tuple(tuple(_as_int(v) for v in row) for row in table))
        gens = data["generators"]
        if not isinstance(gens, list) or not all(isinstance(p, list) for p in gens):
            raise GroupError("'generators' must be a list of permutations")
        degree = data.get("degree")
        if degree is None:
            if not gens:
                raise GroupError("'degree' is required when there are no generators")
            degree = len(gens[0])
        return cls(generators=tuple(tuple(_as_int(v) for v in p) for p in gens), degree=_as_int(degree))

    def to_json(self) -> dict:
        if self.cayley is not None:
            return {"cayley": [list(row) for row in self.cayley]}
        return {"generators": [list(p) for p in self.generators], "degree": self.degree}


def _as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise GroupError(f"expected an integer, got {v!r}")
    return v


class FiniteGroup:
    """Elements are ``0..order-1`` with 0 the identity."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 perms: Sequence[tuple] | None = None):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.labels = tuple(labels) if labels is not None else tuple(f"g{i}" for i in range(self.order))
        self.perms = tuple(perms) if perms is not None else None
        self._inverse = tuple(row.index(0) for row in self.table)

    identity = 0

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self._inverse[g]


def check_cayley_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n == 0:
        raise GroupError("a group has at least one element")
    for row in table:
        if len(row) != n:
            raise GroupError("Cayley table must be square")
        for v in row:
            if not 0 <= v < n:
                raise GroupError(f"table entry {v} out of range")
    for g in range(n):
        if table[0][g] != g or table[g][0] != g:
            raise NoIdentity("index 0 is not a two-sided identity")
    for g in range(n):
        if not any(table[g][h] == 0 and table[h][g] == 0 for h in range(n)):
            raise NoInverse(g)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative((a, b, c))


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[x] for x in q)


def closure(generators: Sequence[Sequence[int]], degree: int, order_cap: int = DEFAULT_ORDER_CAP):
    """Elements of the generated permutation group, in breadth-first discovery order."""
    gens = []
    for p in generators:
        p = tuple(p)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise GroupError(f"generator {p} is not a permutation of range({degree})")
        gens.append(p)
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = _compose(g, s)
            if h not in index:
                if len(elements) >= order_cap:
                    raise OrderCapExceeded(f"generated group exceeds order cap {order_cap}")
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    return elements, index


def group_from_spec(spec: GroupSpec | dict, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if isinstance(spec, dict):
        spec = GroupSpec.from_json(spec)
    if not isinstance(spec, GroupSpec):
        raise GroupError(f"expected a group spec, got {type(spec).__name__}")
    if spec.cayley is not None:
        check_cayley_table(spec.cayley)
        return FiniteGroup(spec.cayley)
    if spec.degree is None or spec.degree < 0:
        raise GroupError("generator spec needs a nonnegative degree")
    elements, index = closure(spec.generators, spec.degree, order_cap)
    table = [[index[_compose(g, h)] for h in elements] for g in elements]
    return FiniteGroup(table, perms=elements)


# -- small named groups, used by tests and examples ---------------------------


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(g + h) % n for h in range(n)] for g in range(n)])


def klein_four_group() -> FiniteGroup:
    return FiniteGroup([[g ^ h for h in range(4)] for g in range(4)])


def symmetric_group(k: int) -> FiniteGroup:
    if k < 2:
        return group_from_spec(GroupSpec(generators=(), degree=k))
    gens = [tuple([1, 0] + list(range(2, k)))]
    if k > 2:
        gens.append(tuple(list(range(1, k)) + [0]))
    return group_from_spec(GroupSpec(generators=tuple(gens), degree=k))

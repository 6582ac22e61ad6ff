"""Build a finite metric space whose isometry group is a given finite group.

Pipeline (compact form):

1. ``X`` is the group itself under a left-invariant metric, rescaled to
   diameter 1; left translations embed ``G`` into ``Iso(X)``.
2. :func:`build_cover` covers ``Iso(X) \\ G`` by finitely many neighborhoods
   ``V = {psi : d(psi(x_k), y_k) < eps for all k}`` that avoid ``G``.
3. For every neighborhood, staircase maps ``f`` (over the witnesses) and ``g``
   (over the targets) satisfy ``psi in V  <=>  sup|psi*(f) - g| < eps``; this is
   checked for every ``psi`` in ``Iso(X)`` before the maps are used.
4. ``Z`` is ``X`` plus the ``G``-orbit of every ``f``, each orbit on its own
   distance level above ``X``; ``K`` adds an apex that pins ``X`` down.

The polish form keeps every orbit at level 1 and instead tags orbit ``i`` with
an extra point at distance ``(i + 2) + d(z, F_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exceptions import (
    DisconnectedWordMetric,
    ExtensionNotIsometric,
    GroupError,
    IsorealizeError,
    Lemma1Failed,
    NotLeftInvariant,
    ProvenanceError,
)
from .groups import FiniteGroup
from .iso_search import (
    IsoGroup,
    Isometry,
    enumerate_isometries,
    is_isometry,
    verify_embedding,
)
from .katetov import (
    KatetovMap,
    StaircaseSpec,
    adjoin_indexed,
    pushforward,
    staircase,
    sup_distance,
)
from .metric import (
    FiniteMetricSpace,
    diameter,
    distance_to_subset,
    format_fraction,
    min_pairwise_distance,
    rescale_to_unit_diameter,
    subspace,
)

ONE = Fraction(1)
LEMMA1_RETRIES = 8
PIPELINES = ("compact", "polish")
COVER_STRATEGIES = ("greedy", "pairs")
OFFSET_SCHEDULES = ("harmonic", "dyadic")


# -- the base space X --------------------------------------------------------


@dataclass(frozen=True)
class WordMetric:
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))


def parse_metric_choice(choice):
    """Accept ``"discrete"``, ``"word:1,3"``, a :class:`WordMetric`, or a space."""
    if isinstance(choice, (WordMetric, FiniteMetricSpace)):
        return choice
    if choice == "discrete":
        return "discrete"
    if isinstance(choice, str) and choice.startswith("word:"):
        body = choice[len("word:"):]
        try:
            gens = tuple(int(tok) for tok in body.split(",") if tok.strip())
        except ValueError:
            raise GroupError(f"bad word-metric generator list {body!r}") from None
        return WordMetric(gens)
    raise GroupError(f"unknown metric choice {choice!r}")


def _word_lengths(group: FiniteGroup, generators: Sequence[int]) -> list:
    for s in generators:
        if not 0 <= s < group.order:
            raise GroupError(f"generator {s} is not a group element")
    steps = set(generators) | {group.inv(s) for s in generators}
    length = [None] * group.order
    length[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for g in frontier:
            for s in sorted(steps):
                h = group.mul(g, s)
                if length[h] is None:
                    length[h] = length[g] + 1
                    nxt.append(h)
        frontier = nxt
    if any(v is None for v in length):
        raise DisconnectedWordMetric(f"{tuple(generators)} does not generate the group")
    return length


def left_translation(group: FiniteGroup, g: int, space: FiniteMetricSpace) -> Isometry:
    return Isometry(tuple(group.mul(g, x) for x in range(group.order)), space)


def left_translation_space(group: FiniteGroup, metric_choice="discrete"):
    """``X = (G, d)`` for a left-invariant ``d``, scaled to diameter 1.

    Returns ``(X, embed)`` with ``embed[g]`` the isometry ``x -> g*x``.
    """
    choice = parse_metric_choice(metric_choice)
    n = group.order
    labels = list(group.labels)
    if choice == "discrete":
        d = [[Fraction(0 if i == j else 1) for j in range(n)] for i in range(n)]
    elif isinstance(choice, WordMetric):
        length = _word_lengths(group, choice.generators)
        d = [[Fraction(length[group.mul(group.inv(x), y)]) for y in range(n)] for x in range(n)]
    else:
        if choice.n != n:
            raise GroupError(f"explicit metric has {choice.n} points, group has order {n}")
        d = [list(row) for row in choice.d]
        for g in range(n):
            for x in range(n):
                gx = group.mul(g, x)
                for y in range(n):
                    if d[gx][group.mul(g, y)] != d[x][y]:
                        raise NotLeftInvariant((g, x, y))
    X = FiniteMetricSpace(labels, d)
    if n >= 2:
        X = rescale_to_unit_diameter(X)
    embed = [left_translation(group, g, X) for g in range(n)]
    for phi in embed:
        if not is_isometry(X, phi.perm):
            raise NotLeftInvariant((phi.perm[0], 0, 0))
    check = verify_embedding(group, embed)
    if not check:
        raise GroupError(f"left translations do not embed the group: {check.reason} at {check.witness}")
    return X, embed


# -- neighborhoods and covers ------------------------------------------------


@dataclass(frozen=True)
class Neighborhood:
    """``{psi : d(psi(x_k), y_k) < epsilon for all k}`` inside ``Iso(X)``."""

    witnesses: tuple
    targets: tuple
    epsilon: Fraction
    index: int

    @property
    def m(self) -> int:
        return len(self.witnesses)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "witnesses": list(self.witnesses),
            "targets": list(self.targets),
            "epsilon": format_fraction(self.epsilon),
        }


def strict_epsilon(X: FiniteMetricSpace, witnesses: Sequence[int]) -> Fraction:
    return min_pairwise_distance(X, witnesses) / (2 * len(witnesses) + 1)


def v_membership(psi: Isometry, nbhd: Neighborhood) -> bool:
    d = psi.space.d
    return all(d[psi.perm[x]][y] < nbhd.epsilon for x, y in zip(nbhd.witnesses, nbhd.targets))


def _agrees(phi: Isometry, witnesses, targets, eps) -> bool:
    d = phi.space.d
    return all(d[phi.perm[x]][y] < eps for x, y in zip(witnesses, targets))


def _greedy_witnesses(X, G, psi, start):
    witnesses = [start]
    while True:
        best = None
        for x in range(X.n):
            if x in witnesses:
                continue
            trial = witnesses + [x]
            eps = strict_epsilon(X, trial)
            targets = [psi.perm[w] for w in trial]
            survivors = sum(1 for g in G if _agrees(g, trial, targets, eps))
            # fewest survivors, then the largest epsilon, then the higher index
            key = (survivors, -eps, -x)
            if best is None or key < best[0]:
                best = (key, x, eps)
        if best is None:
            raise IsorealizeError("isometry cannot be separated from the group")
        witnesses.append(best[1])
        if best[0][0] == 0:
            return tuple(witnesses), best[2]


def pair_candidates(X: FiniteMetricSpace, G: Sequence[Isometry]) -> list:
    """Raw ``(a, u, v)`` triples with ``a != e`` and ``v != u*a``."""
    by_image = {g.perm[0]: g for g in G}
    out = []
    for a in range(X.n):
        if a == 0:
            continue
        for u in sorted(by_image):
            ua = by_image[u].perm[a]
            for v in range(X.n):
                if v != ua:
                    out.append((a, u, v))
    return out


def _check_subgroup(X, G) -> None:
    for g in G:
        if not is_isometry(X, g.perm):
            raise GroupError(f"{g.perm} is not an isometry of X")


def build_cover(
    X: FiniteMetricSpace,
    G: Sequence[Isometry],
    strategy: str = "greedy",
    *,
    iso_X: IsoGroup | None = None,
    node_budget: int | None = None,
) -> list:
    """Neighborhoods covering ``Iso(X) \\ G`` and missing ``G``; indexed from 1."""
    G = list(G)
    _check_subgroup(X, G)
    in_G = {g.perm for g in G}
    raw: list = []
    if strategy == "greedy":
        if iso_X is None:
            iso_X = enumerate_isometries(X, node_budget)
        for psi in iso_X:
            if psi.perm in in_G:
                continue
            if any(_agrees(psi, w, t, e) for w, t, e in raw):
                continue
            witnesses, eps = _greedy_witnesses(X, G, psi, 0)
            raw.append((witnesses, tuple(psi.perm[w] for w in witnesses), eps))
    elif strategy == "pairs":
        d = X.d
        for a, u, v in pair_candidates(X, G):
            if v == u or d[u][v] != d[0][a]:
                continue
            witnesses, targets = (0, a), (u, v)
            eps = strict_epsilon(X, witnesses)
            if any(_agrees(g, witnesses, targets, eps) for g in G):
                continue
            raw.append((witnesses, targets, eps))
    else:
        raise ValueError(f"unknown cover strategy {strategy!r}")
    return [Neighborhood(w, t, e, i) for i, (w, t, e) in enumerate(raw, start=1)]


def offset_schedule(kind: str, count: int) -> list:
    """Level offsets for neighborhoods ``1..count``, returned as a 0-based list."""
    if kind == "harmonic":
        return [Fraction(1, i + 1) for i in range(1, count + 1)]
    if kind == "dyadic":
        return [Fraction(1, 2**i) for i in range(1, count + 1)]
    raise ValueError(f"unknown offset schedule {kind!r}")


# -- pair functions and the membership/distance equivalence ------------------


def build_pair_functions(X: FiniteMetricSpace, nbhd: Neighborhood, offset=0):
    f = staircase(X, StaircaseSpec(nbhd.witnesses, nbhd.epsilon, offset))
    g = staircase(X, StaircaseSpec(nbhd.targets, nbhd.epsilon, offset))
    return f, g


@dataclass(frozen=True)
class Lemma1Result:
    ok: bool
    witness: tuple | None = None  # (perm, in_neighborhood, sup_distance)

    def __bool__(self):
        return self.ok


def lemma1_check(X, iso_X, nbhd: Neighborhood, f: KatetovMap, g: KatetovMap) -> Lemma1Result:
    """``psi in V  <=>  sup|psi*(f) - g| < eps`` for every ``psi`` in ``iso_X``."""
    for psi in iso_X:
        member = v_membership(psi, nbhd)
        dist = sup_distance(pushforward(f, psi), g)
        if member != (dist < nbhd.epsilon):
            return Lemma1Result(False, (psi.perm, member, dist))
    return Lemma1Result(True)


def _gated_pair(X, iso_X, nbhd, offset):
    current = nbhd
    for _ in range(LEMMA1_RETRIES + 1):
        f, g = build_pair_functions(X, current, offset)
        result = lemma1_check(X, iso_X, current, f, g)
        if result:
            return current, f, g
        current = Neighborhood(current.witnesses, current.targets, current.epsilon / 2, current.index)
    raise Lemma1Failed(nbhd.index, result.witness)


# -- provenance ---------------------------------------------------------------

KINDS = ("base", "orbit", "tag", "apex", "y_layer")


@dataclass
class PointRecord:
    label: str
    kind: str
    group_element: int | None = None
    neighborhood: int | None = None
    neighborhoods: tuple = ()

    def __post_init__(self):
        if not self.neighborhoods and self.neighborhood is not None and self.kind in ("orbit", "y_layer"):
            self.neighborhoods = (self.neighborhood,)

    def to_json(self) -> dict:
        out = {"label": self.label, "kind": self.kind}
        if self.group_element is not None:
            out["group_element"] = self.group_element
        if self.neighborhood is not None:
            out["neighborhood"] = self.neighborhood
        if len(self.neighborhoods) > 1:
            out["neighborhoods"] = list(self.neighborhoods)
        return out

    @classmethod
    def from_json(cls, data) -> "PointRecord":
        if not isinstance(data, dict) or "label" not in data or "kind" not in data:
            raise ProvenanceError(f"bad provenance record {data!r}")
        if data["kind"] not in KINDS:
            raise ProvenanceError(f"unknown point kind {data['kind']!r}")
        nb = data.get("neighborhood")
        nbs = tuple(data.get("neighborhoods", ()))
        return cls(str(data["label"]), data["kind"], data.get("group_element"), nb, nbs)


@dataclass
class Assembly:
    space: FiniteMetricSpace
    provenance: list
    x_points: tuple
    f_sets: dict
    apex: int | None = None
    tags: dict = field(default_factory=dict)
    apex_constant: Fraction | None = None
    levels: dict = field(default_factory=dict)
    cover: list = field(default_factory=list)


def _orbit_maps(f: KatetovMap, G: Sequence[Isometry]) -> list:
    return [pushforward(f, g) for g in G]


def _build_z(X, G, iso_X, cover, offsets, include_y_layer):
    """Adjoin the orbits of all ``f_i`` (and optionally the Y layer) to ``X``."""
    used = []
    maps, labels, owners = [], [], []
    for nbhd, offset in zip(cover, offsets):
        nbhd, f, _ = _gated_pair(X, iso_X, nbhd, offset)
        used.append(nbhd)
        for g_idx, img in enumerate(_orbit_maps(f, G)):
            maps.append(img)
            labels.append(f"f{nbhd.index}.{X.labels[g_idx]}")
            owners.append(("orbit", nbhd.index, g_idx))
    if include_y_layer:
        tuples = [()]
        for nbhd in used:
            if nbhd.witnesses not in tuples:
                tuples.append(nbhd.witnesses)
        for j, w in enumerate(tuples):
            eps = min_pairwise_distance(X, w) / (2 * len(w)) if len(w) >= 2 else Fraction(0)
            y = staircase(X, StaircaseSpec(w, eps, 0))
            for g_idx, img in enumerate(_orbit_maps(y, G)):
                maps.append(img)
                labels.append(f"Y{j}.{X.labels[g_idx]}")
                owners.append(("y_layer", j, g_idx))
    Z, base, positions = adjoin_indexed(X, maps, labels)
    records = [PointRecord(X.labels[x], "base", group_element=x) for x in range(X.n)]
    records.extend(None for _ in range(Z.n - X.n))
    f_sets: dict = {nbhd.index: set() for nbhd in used}
    for (kind, i, g_idx), pos in zip(owners, positions):
        if pos < X.n:
            raise IsorealizeError(f"{kind} point {i}.{g_idx} collapsed onto the base")
        if kind == "orbit":
            f_sets[i].add(pos)
        rec = records[pos]
        if rec is None:
            rec = records[pos] = PointRecord(Z.labels[pos], kind, group_element=g_idx, neighborhood=i)
        if rec.kind != kind:
            raise IsorealizeError(f"point {Z.labels[pos]} is both {rec.kind} and {kind}")
        if i not in rec.neighborhoods:
            rec.neighborhoods = rec.neighborhoods + (i,)
    f_sets = {i: tuple(sorted(s)) for i, s in f_sets.items()}
    return Z, records, f_sets, used


def assemble_compact(X, G, cover, iso_X, offsets: str | Sequence = "harmonic", include_y_layer=False) -> Assembly:
    if isinstance(offsets, str):
        offsets = offset_schedule(offsets, len(cover))
    offsets = [Fraction(o) for o in offsets]
    if len(set(offsets)) != len(offsets) or any(o <= 0 for o in offsets):
        raise ValueError("level offsets must be pairwise distinct and positive")
    Z, records, f_sets, used = _build_z(X, G, iso_X, cover, offsets, include_y_layer)
    for rec in records:
        if rec.kind == "orbit" and len(rec.neighborhoods) > 1:
            raise IsorealizeError(f"orbit point {rec.label} shared across levels {rec.neighborhoods}")
    x_points = tuple(range(X.n))
    C = diameter(Z) + 1
    apex = KatetovMap(Z, [C + distance_to_subset(Z, z, x_points) for z in range(Z.n)])
    K, _, positions = adjoin_indexed(Z, [apex], ["k"])
    records.append(PointRecord("k", "apex"))
    levels = {nbhd.index: ONE + off for nbhd, off in zip(used, offsets)}
    return Assembly(K, records, x_points, f_sets, apex=positions[0], apex_constant=C, levels=levels, cover=used)


def assemble_polish(X, G, cover, iso_X, include_y_layer=False) -> Assembly:
    Z, records, f_sets, used = _build_z(X, G, iso_X, cover, [Fraction(0)] * len(cover), include_y_layer)
    x_points = tuple(range(X.n))
    families = [(0, x_points)] + [(nbhd.index, f_sets[nbhd.index]) for nbhd in used]
    tags, labels = [], []
    for i, members in families:
        tags.append(KatetovMap(Z, [(i + 2) + distance_to_subset(Z, z, members) for z in range(Z.n)]))
        labels.append(f"y{i}")
    K, _, positions = adjoin_indexed(Z, tags, labels)
    tag_index = {}
    for (i, _), pos in zip(families, positions):
        records.append(PointRecord(f"y{i}", "tag", neighborhood=i))
        tag_index[i] = pos
    return Assembly(K, records, x_points, f_sets, tags=tag_index, cover=used)


def degenerate_assembly(X: FiniteMetricSpace) -> Assembly:
    """Groups of order 1 and 2 are realized by ``X`` itself."""
    records = [PointRecord(X.labels[x], "base", group_element=x) for x in range(X.n)]
    return Assembly(X, records, tuple(range(X.n)), {})


# -- extension and verification ----------------------------------------------


class _Layout:
    """Point roles of ``K`` read back from provenance."""

    def __init__(self, K: FiniteMetricSpace, provenance: Sequence[PointRecord], order: int):
        if len(provenance) != K.n:
            raise ProvenanceError(f"{len(provenance)} provenance records for {K.n} points")
        base = {}
        self.fixed = []
        self.movable = []
        self.apex = None
        self.tags = {}
        self.f_sets: dict = {}
        for idx, rec in enumerate(provenance):
            if rec.label != K.labels[idx]:
                raise ProvenanceError(f"record {idx} is labeled {rec.label!r}, point is {K.labels[idx]!r}")
            if rec.kind == "base":
                g = rec.group_element
                if not isinstance(g, int) or not 0 <= g < order or g in base:
                    raise ProvenanceError(f"bad base group element {g!r} for {rec.label!r}")
                base[g] = idx
            elif rec.kind == "apex":
                if self.apex is not None:
                    raise ProvenanceError("more than one apex")
                self.apex = idx
                self.fixed.append(idx)
            elif rec.kind == "tag":
                self.tags[rec.neighborhood] = idx
                self.fixed.append(idx)
            else:
                self.movable.append(idx)
                if rec.kind == "orbit":
                    for i in rec.neighborhoods or (rec.neighborhood,):
                        self.f_sets.setdefault(i, []).append(idx)
        if sorted(base) != list(range(order)):
            raise ProvenanceError(f"base points cover {len(base)} of {order} group elements")
        self.x_points = tuple(base[g] for g in range(order))
        d = K.d
        self.lookup = {tuple(d[p][x] for x in self.x_points): p for p in self.movable}
        self.f_sets = {i: tuple(sorted(s)) for i, s in sorted(self.f_sets.items())}


def extend_isometry(phi: Isometry, K: FiniteMetricSpace, provenance, _layout: _Layout | None = None) -> Isometry:
    """The unique isometry of ``K`` that acts as ``phi`` on the base points.

    Non-base points are recognized by their distances to the base, so orbit
    points go to the pushforward of their map; apex and tags stay put.
    """
    layout = _layout or _Layout(K, provenance, len(phi.perm))
    xs = layout.x_points
    perm = list(range(K.n))
    for x, image in enumerate(phi.perm):
        perm[xs[x]] = xs[image]
    d = K.d
    for p in layout.movable:
        values = [None] * len(xs)
        for x, image in enumerate(phi.perm):
            values[image] = d[p][xs[x]]
        target = layout.lookup.get(tuple(values))
        if target is None:
            raise ExtensionNotIsometric(f"no point of K carries the pushforward of {K.labels[p]}")
        perm[p] = target
    if sorted(perm) != list(range(K.n)) or not is_isometry(K, perm):
        raise ExtensionNotIsometric(f"extension of {phi.perm} does not preserve distances")
    return Isometry(tuple(perm), K)


@dataclass
class RealizationReport:
    group_order: int
    pipeline: str
    point_provenance: list
    cover_size: int
    iso_order_of_K: int
    embedding_verified: bool
    lemma1_verified: bool | None
    recovery_verified: bool
    cover: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def realized(self) -> bool:
        return self.embedding_verified and self.iso_order_of_K == self.group_order

    def to_json(self) -> dict:
        return {
            "verdict": "realized" if self.realized else "not realized",
            "realized": self.realized,
            "group_order": self.group_order,
            "pipeline": self.pipeline,
            "iso_order_of_K": self.iso_order_of_K,
            "embedding_verified": self.embedding_verified,
            "lemma1_verified": self.lemma1_verified,
            "recovery_verified": self.recovery_verified,
            "cover_size": self.cover_size,
            "cover": [nb.to_json() for nb in self.cover],
            "point_provenance": [rec.to_json() for rec in self.point_provenance],
            "failures": list(self.failures),
        }


def _preserves(iso, points) -> bool:
    s = set(points)
    return all({psi.perm[p] for p in s} == s for psi in iso)


def _check_recovery(K, layout: _Layout, iso, pipeline, levels, failures) -> bool:
    d = K.d
    xs = set(layout.x_points)
    ok = True

    def fail(msg):
        nonlocal ok
        ok = False
        failures.append(msg)

    for p in layout.fixed:
        if any(psi.perm[p] != p for psi in iso):
            fail(f"point {K.labels[p]} is moved by an isometry of K")
    if not _preserves(iso, xs):
        fail("X is not preserved by every isometry of K")
    for i, members in layout.f_sets.items():
        if not _preserves(iso, members):
            fail(f"F_{i} is not preserved by every isometry of K")
    z_points = [p for p in range(K.n) if p not in set(layout.fixed)]

    if layout.apex is not None:
        a = layout.apex
        Z = subspace(K, z_points)
        C = diameter(Z) + 1
        if {p for p in range(K.n) if d[p][a] == C} != xs:
            fail("X is not the set of points at distance C from the apex")
        for i, members in layout.f_sets.items():
            level = levels.get(i, min(d[members[0]][x] for x in xs))
            found = {p for p in z_points if min(d[p][x] for x in xs) == level}
            if found != set(members):
                fail(f"F_{i} is not the level set d(z, X) = {level}")
    elif layout.tags:
        Z = subspace(K, z_points)
        diam_z = diameter(Z)
        families = dict(layout.f_sets)
        families[0] = tuple(sorted(xs))
        for i, t in sorted(layout.tags.items()):
            if i not in families:
                fail(f"tag y{i} has no matching family")
                continue
            if not all(d[t][z] >= i + 2 for z in z_points) or not i + 2 > diam_z:
                fail(f"tag y{i} is not separated from Z")
            found = {z for z in z_points if d[t][z] == i + 2}
            if found != set(families[i]):
                fail(f"F_{i} is not the set of points at distance {i + 2} from y{i}")
    return ok


def verify_realization(
    K: FiniteMetricSpace,
    group: FiniteGroup,
    provenance: Sequence[PointRecord],
    embed_K: Sequence[Isometry] | None = None,
    *,
    pipeline: str = "compact",
    cover: Sequence[Neighborhood] = (),
    lemma1_verified: bool | None = None,
    levels: dict | None = None,
    node_budget: int | None = None,
) -> RealizationReport:
    """Compute ``Iso(K)`` and compare it with the extended copy of ``group``."""
    failures: list = []
    layout = _Layout(K, provenance, group.order)
    iso = enumerate_isometries(K, node_budget)

    embedding_ok = True
    if embed_K is None:
        X = subspace(K, layout.x_points)
        embed_K = []
        try:
            for g in range(group.order):
                embed_K.append(extend_isometry(left_translation(group, g, X), K, provenance, layout))
        except ExtensionNotIsometric as exc:
            embedding_ok = False
            failures.append(f"extension failed: {exc}")
    if embedding_ok:
        check = verify_embedding(group, embed_K)
        if not check:
            embedding_ok = False
            failures.append(f"embedding check: {check.reason} at {check.witness}")
        missing = [phi.perm for phi in embed_K if phi not in iso]
        if missing:
            embedding_ok = False
            failures.append(f"{len(missing)} extended elements are not isometries of K")
        if len(iso) == group.order and {phi.perm for phi in embed_K} != set(iso.perms):
            embedding_ok = False
            failures.append("extended group differs from Iso(K)")
    if len(iso) != group.order:
        failures.append(f"|Iso(K)| = {len(iso)} but |G| = {group.order}")

    recovery_ok = _check_recovery(K, layout, iso, pipeline, levels or {}, failures)
    return RealizationReport(
        group_order=group.order,
        pipeline=pipeline,
        point_provenance=list(provenance),
        cover_size=len(cover),
        iso_order_of_K=len(iso),
        embedding_verified=embedding_ok,
        lemma1_verified=lemma1_verified,
        recovery_verified=recovery_ok,
        cover=list(cover),
        failures=failures,
    )


# -- end to end -----------------------------------------------------------------


@dataclass
class Realization:
    group: FiniteGroup
    base_space: FiniteMetricSpace
    embedding: list
    space: FiniteMetricSpace
    provenance: list
    cover: list
    report: RealizationReport
    assembly: Assembly


def realize(
    group: FiniteGroup,
    metric="discrete",
    pipeline: str = "compact",
    cover_strategy: str = "greedy",
    offsets: str = "harmonic",
    include_y_layer: bool = False,
    node_budget: int | None = None,
) -> Realization:
    if pipeline not in PIPELINES:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    X, embed = left_translation_space(group, metric)
    if group.order <= 2:
        assembly = degenerate_assembly(X)
        lemma1_ok = True
    else:
        iso_X = enumerate_isometries(X, node_budget)
        cover = build_cover(X, embed, cover_strategy, iso_X=iso_X, node_budget=node_budget)
        if pipeline == "compact":
            assembly = assemble_compact(X, embed, cover, iso_X, offsets, include_y_layer)
        else:
            assembly = assemble_polish(X, embed, cover, iso_X, include_y_layer)
        lemma1_ok = True  # _gated_pair raises otherwise
    report = verify_realization(
        assembly.space,
        group,
        assembly.provenance,
        pipeline=pipeline,
        cover=assembly.cover,
        lemma1_verified=lemma1_ok,
        levels=assembly.levels,
        node_budget=node_budget,
    )
    return Realization(group, X, embed, assembly.space, assembly.provenance, assembly.cover, report, assembly)

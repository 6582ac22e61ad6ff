"""Input coercion helpers in the spirit of ``sklearn.utils.validation``."""
from __future__ import annotations

from fractions import Fraction

from .exceptions import GroupError
from .groups import FiniteGroup, GroupSpec, group_from_spec
from .metric import FiniteMetricSpace, parse_fraction, validate_space
from .realize import COVER_STRATEGIES, OFFSET_SCHEDULES, PIPELINES, parse_metric_choice


def check_space(obj) -> FiniteMetricSpace:
    """Coerce a space, a ``{"labels", "d"}`` mapping or a bare matrix."""
    if isinstance(obj, FiniteMetricSpace):
        return obj
    if isinstance(obj, dict):
        from .io import space_from_json

        return space_from_json(obj)
    rows = [list(row) for row in obj]
    matrix = [[v if isinstance(v, (int, Fraction)) else parse_fraction(v) for v in row] for row in rows]
    return validate_space([str(i) for i in range(len(matrix))], matrix)


def check_group(obj) -> FiniteGroup:
    """Coerce a group, a :class:`GroupSpec`, its JSON form, or a Cayley table."""
    if isinstance(obj, FiniteGroup):
        return obj
    if isinstance(obj, (GroupSpec, dict)):
        return group_from_spec(obj)
    if isinstance(obj, (list, tuple)):
        return group_from_spec({"cayley": [list(row) for row in obj]})
    raise GroupError(f"cannot interpret {type(obj).__name__} as a finite group")


def check_option(name: str, value, allowed) -> str:
    if value not in allowed:
        raise ValueError(f"{name} must be one of {', '.join(allowed)}; got {value!r}")
    return value


def check_params(metric, pipeline, cover, offsets) -> None:
    parse_metric_choice(metric)
    check_option("pipeline", pipeline, PIPELINES)
    check_option("cover", cover, COVER_STRATEGIES)
    check_option("offsets", offsets, OFFSET_SCHEDULES)

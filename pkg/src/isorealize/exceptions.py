"""Exception hierarchy.

Every error raised by the library derives from :class:`IsorealizeError`, and
the input-shaped ones also derive from :class:`ValueError` so callers can
catch them the usual way.
"""


class IsorealizeError(Exception):
    """Base class for all library errors."""


# -- metric spaces -----------------------------------------------------------


class MetricError(IsorealizeError, ValueError):
    pass


class MalformedMatrix(MetricError):
    pass


class MalformedFraction(MetricError):
    pass


class DuplicateLabel(MetricError):
    pass


class AsymmetricMatrix(MetricError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"matrix is not symmetric at {self.pair}")


class NonzeroDiagonal(MetricError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"nonzero diagonal entry at ({index}, {index})")


class NonpositiveOffDiagonal(MetricError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"off-diagonal distance is not positive at {self.pair}")


class TriangleViolation(MetricError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        i, j, k = self.triple
        super().__init__(f"triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")


class DegenerateSpace(MetricError):
    pass


class EmptySubset(MetricError):
    pass


class FewerThanTwoPoints(MetricError):
    pass


class RepeatedIndex(MetricError):
    pass


# -- Katetov maps ------------------------------------------------------------


class KatetovError(IsorealizeError, ValueError):
    pass


class KatetovLower(KatetovError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"|f({x}) - f({y})| > d({x},{y})")


class KatetovUpper(KatetovError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"f({x}) + f({y}) < d({x},{y})")


class BaseMismatch(KatetovError):
    pass


class NotSupported(KatetovError):
    pass


class DiameterExceedsOne(KatetovError):
    pass


class SpecViolation(KatetovError):
    pass


class ZeroOnBase(KatetovError):
    pass


# -- isometries --------------------------------------------------------------


class NotABijection(IsorealizeError, ValueError):
    pass


class SpaceMismatch(IsorealizeError, ValueError):
    pass


class SizeGuardExceeded(IsorealizeError, RuntimeError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"isometry search exceeded its node budget of {budget}")


class TooLargeForOracle(IsorealizeError, ValueError):
    pass


# -- groups and realization --------------------------------------------------


class GroupError(IsorealizeError, ValueError):
    pass


class NotAssociative(GroupError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        a, b, c = self.triple
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class OrderCapExceeded(GroupError):
    pass


class NotLeftInvariant(GroupError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        g, x, y = self.triple
        super().__init__(f"d({g}*{x}, {g}*{y}) != d({x}, {y})")


class DisconnectedWordMetric(GroupError):
    pass


class Lemma1Failed(IsorealizeError, RuntimeError):
    def __init__(self, index, witness):
        self.index = index
        self.witness = witness
        super().__init__(f"membership/distance equivalence fails for neighborhood {index}: {witness}")


class ExtensionNotIsometric(IsorealizeError, RuntimeError):
    pass


class ProvenanceError(IsorealizeError, ValueError):
    pass

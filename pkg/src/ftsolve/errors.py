"""Exception hierarchy for the solver toolkit."""


class FtSolveError(Exception):
    """Base class for all toolkit errors."""


class CoincidentPoints(FtSolveError):
    """Two points are too close to define a direction or distance ratio."""


class NonPositiveEdge(FtSolveError):
    """Edge length must be strictly positive."""


class DegenerateTetrahedron(FtSolveError):
    """Vertices are coplanar (or worse) within tolerance."""


class EqualWeights(FtSolveError):
    """The two weight pairs are equal; the quartic degenerates."""


class BranchCancellationFailure(FtSolveError):
    """Complex branches of the closed form failed to cancel to a real value."""


class ZeroPolynomial(FtSolveError):
    """All polynomial coefficients are zero."""


class NoConvergence(FtSolveError):
    """Iteration cap exhausted before the residual threshold was met."""


class NoBracket(FtSolveError):
    """No sign change found; the critical point escaped the search range."""


class DegenerateTriangle(FtSolveError):
    """Side lengths do not form a genuine triangle."""


class OutOfDomain(FtSolveError):
    """A formula argument left its valid domain beyond roundoff slack."""


class FloatingViolated(FtSolveError):
    """A construction requires the floating case but produced an absorbed one."""

"""Regularization criteria that pick one solution out of a multi-root
optimization pool."""

import enum
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from . import _backend
from .errors import EmptySolutionSetError, ZeroReferenceCoefficientError
from .optimizer import _KIND_CODE, pose
from .transforms import borel_point

__all__ = [
    "Criterion",
    "SelectionResult",
    "select_solution",
    "criterion_scores",
]


class Criterion(enum.Enum):
    LASSO1 = "lasso1"
    LASSO2 = "lasso2"
    GENLASSO1 = "genlass1"
    GENLASSO2 = "genlass2"


@dataclass(frozen=True)
class SelectionResult:
    solution: object
    criterion: Criterion
    score: float
    all_scores: Tuple[Tuple[float, float], ...]  # (u, score) per candidate


def _working_vector(posed, code, k, u):
    w = _backend.transform_weights(code, k + posed.offset, u)
    return [posed.working[n] * w[n + posed.offset] for n in range(k + 1)]


def _score(criterion, b, ref, src, k):
    if criterion is Criterion.LASSO1:
        return sum(abs(x) for x in b)
    if criterion is Criterion.LASSO2:
        return math.sqrt(sum(x * x for x in b))
    if criterion is Criterion.GENLASSO1:
        terms = [abs((x - r) / r) for x, r in zip(b, ref) if r != 0.0]
        if not terms:
            raise ZeroReferenceCoefficientError(
                "all reference coefficients vanish"
            )
        return sum(terms) / (k + 1)
    if criterion is Criterion.GENLASSO2:
        terms = [abs((x - s) / s) for x, s in zip(b, src) if s != 0.0]
        if not terms:
            raise ZeroReferenceCoefficientError(
                "all source coefficients vanish"
            )
        return sum(terms) / (k + 1)
    raise ValueError("unknown criterion %r" % (criterion,))


def criterion_scores(s, kind, beta, k, criterion, us, scale=1.0):
    """Criterion score at each control-parameter value in `us`.

    Scores measure the sparsity (lasso) or the relative departure from a
    reference vector (generalized lasso) of the transformed working
    coefficients b_n(u); undefined scores come back as NaN.
    """
    posed = pose(s, kind, beta, scale=scale)
    code = _KIND_CODE[kind]
    criterion = Criterion(criterion)
    u0 = borel_point(kind)
    ref = _working_vector(posed, code, k, u0)
    src = list(posed.working[: k + 1])
    out = []
    for u in us:
        try:
            b = _working_vector(posed, code, k, float(u))
            v = _score(criterion, b, ref, src, k)
        except ZeroReferenceCoefficientError:
            raise
        except Exception:
            v = math.nan
        out.append(v if math.isfinite(v) else math.nan)
    return out


def select_solution(s, kind, beta, k, solutions, criterion, scale=1.0):
    """Pick the pool member minimizing the criterion score.

    Ties (within 1e-12 relative) go to the larger control parameter u.
    Raises EmptySolutionSetError on an empty pool.
    """
    solutions = list(solutions)
    if not solutions:
        raise EmptySolutionSetError("no optimization solutions to select from")
    criterion = Criterion(criterion)
    scores = criterion_scores(
        s, kind, beta, k, criterion, [sol.u for sol in solutions], scale=scale
    )
    best = None
    best_score = None
    for sol, sc in zip(solutions, scores):
        if math.isnan(sc):
            continue
        if best is None:
            best, best_score = sol, sc
            continue
        tol = 1e-12 * max(1.0, abs(best_score))
        if sc < best_score - tol:
            best, best_score = sol, sc
        elif abs(sc - best_score) <= tol and sol.u > best.u:
            best, best_score = sol, sc
    if best is None:
        raise EmptySolutionSetError("criterion undefined on every solution")
    return SelectionResult(
        solution=best,
        criterion=criterion,
        score=best_score,
        all_scores=tuple(
            (sol.u, sc) for sol, sc in zip(solutions, scores)
        ),
    )

"""Critical-index estimation through the logarithmic derivative.

For f(x) ~ B (x_c - x)^{-beta} the function L(x) = f'(x)/f(x) behaves as
beta / (x_c - x); after mapping the singularity to infinity, beta is the
large-variable amplitude of L with exponent -1.  Every amplitude tool of
the package therefore applies verbatim to the truncation of L."""

from .optimizer import ridge_minimize, solution_pool, window_grid
from .selector import select_solution
from .series import diff_log

__all__ = [
    "INDEX_EXPONENT",
    "index_series",
    "index_pool",
    "index_ridge",
    "estimate_index",
]

# L(x) = f'/f decays like x^{-1} at large x once the singularity sits at
# infinity; its amplitude is the critical index.
INDEX_EXPONENT = -1.0


def index_series(s):
    """Truncation of the logarithmic derivative f'/f (order k-1)."""
    return diff_log(s)


def index_pool(s, kind, grid=None):
    """Admissible optimization solutions for the critical index; each
    solution's `amplitude` field is an index estimate."""
    ell = diff_log(s)
    if grid is None:
        grid = window_grid(kind)
    return solution_pool(ell, kind, INDEX_EXPONENT, ell.order, grid=grid)


def index_ridge(s, kind, grid=None):
    """Ridge-functional index estimate."""
    ell = diff_log(s)
    if grid is None:
        grid = window_grid(kind)
    return ridge_minimize(ell, kind, INDEX_EXPONENT, ell.order - 1, grid=grid)


def estimate_index(s, kind, criterion, grid=None):
    """Criterion-selected index estimate (a SelectionResult whose
    solution amplitude is the index)."""
    ell = diff_log(s)
    if grid is None:
        grid = window_grid(kind)
    pool = solution_pool(ell, kind, INDEX_EXPONENT, ell.order, grid=grid)
    return select_solution(ell, kind, INDEX_EXPONENT, ell.order, pool, criterion)

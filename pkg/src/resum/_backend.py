"""Kernel backend selection: compiled extension if available, else the
pure-Python fallback.  Set RESUM_BACKEND=python to force the fallback."""

import os

try:
    if os.environ.get("RESUM_BACKEND") == "python":
        raise ImportError("RESUM_BACKEND=python forces the fallback")
    from ._kernel import (  # noqa: F401
        BACKEND,
        eval_root,
        fit_root,
        marginal,
        root_expand,
        transform_marginal,
        transform_weights,
    )
except ImportError:  # pragma: no cover - depends on build environment
    from ._kernel_py import (  # noqa: F401
        BACKEND,
        eval_root,
        fit_root,
        marginal,
        root_expand,
        transform_marginal,
        transform_weights,
    )


def backend_name():
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return BACKEND

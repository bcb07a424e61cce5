"""Sliding-window maximum/minimum filtering with provable comparison bounds.

Core entry points:

* :class:`WedgeFilter` / :func:`wedge_run` -- streaming monotonic-wedge
  filter: zero latency, ~3 comparisons per element, O(w) memory.
* :func:`run_w3` -- width-3 specialization at 2 comparisons per element.
* :func:`naive_run` / :func:`vhgw_run` -- instrumentable baselines.
* :func:`metered_run` -- any algorithm with comparison counting.
* :func:`filter2d` -- separable 2D rectangle extrema.

Hot kernels run on a compiled extension when available; check
:func:`backend_name`.
"""

from ._backend import backend_name
from .baselines import naive_run, vhgw_run
from .core import ExtremaResult, ExtremaSeries, WedgeFilter, run_w3, wedge_run
from .grid2d import Grid, filter2d, read_grid, write_grid
from .metering import ALGORITHMS, OrderProbe, RunMetrics, metered_run, probe_less
from .signals import (
    SIGNAL_KINDS,
    SignalSpec,
    Verdict,
    generate,
    oracle_run,
    verify_equal,
    verify_trials,
)

__version__ = "0.1.0"

__all__ = [
    "ExtremaResult",
    "ExtremaSeries",
    "WedgeFilter",
    "wedge_run",
    "run_w3",
    "naive_run",
    "vhgw_run",
    "OrderProbe",
    "RunMetrics",
    "probe_less",
    "metered_run",
    "ALGORITHMS",
    "SignalSpec",
    "SIGNAL_KINDS",
    "generate",
    "oracle_run",
    "verify_equal",
    "verify_trials",
    "Verdict",
    "Grid",
    "filter2d",
    "read_grid",
    "write_grid",
    "backend_name",
]

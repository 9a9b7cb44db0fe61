"""Gauss-Legendre quadrature with turning-point-tolerant endpoint mapping.

Action integrands behave like sqrt(x - a) at turning points. The
substitution x = x1 + (x2 - x1) sin(t)**2 absorbs a square-root zero at
either endpoint into a smooth function of t, after which Gauss-Legendre
converges spectrally. Node counts double until two successive estimates
agree to the requested relative tolerance.
"""

import math
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _gl_nodes(n):
    x, w = np.polynomial.legendre.leggauss(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def integrate_endpoint_singular(f, x1, x2, rel_tol=1e-12, n_start=64, n_max=2048):
    """Integrate f over [x1, x2], tolerating sqrt endpoint behavior.

    f must accept a numpy array. Node counts double until two successive
    Gauss-Legendre estimates agree to rel_tol, the difference stops
    shrinking (the integrand's floating-point noise floor, e.g. from
    cancellation in E - V near a turning point), or n_max is reached;
    the finer estimate is returned.
    """
    span = x2 - x1
    if span == 0.0:
        return 0.0
    prev = None
    prev_diff = None
    n = n_start
    while True:
        xg, wg = _gl_nodes(n)
        t = (math.pi / 4.0) * (xg + 1.0)
        x = x1 + span * np.sin(t) ** 2
        vals = f(x) * np.sin(2.0 * t)
        est = (math.pi / 4.0) * span * float(np.dot(wg, vals))
        if prev is not None:
            diff = abs(est - prev)
            if diff <= rel_tol * abs(est) + 1e-300:
                return est
            if prev_diff is not None and diff >= 0.25 * prev_diff:
                return est
            prev_diff = diff
        if n >= n_max:
            return est
        prev = est
        n *= 2

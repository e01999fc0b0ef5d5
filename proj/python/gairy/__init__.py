"""Moments, orthogonal-polynomial recurrences, Hankel determinants and their
asymptotics for the weight x^lambda exp(-x^3/3 + t x) on (0, inf).

Numbers cross the boundary as decimal strings; convert with ``decimal.Decimal``
or ``mpmath.mpf`` to keep the precision.
"""

import json

from . import _core
from ._core import (
    DomainError,
    PrecisionError,
    QuadratureError,
    equilibrium,
    log_barnes_g,
    log_gamma,
    recurrence,
    recurrence_from_moments,
    series,
    verify,
    zeta_prime_minus_one,
)

__all__ = [
    "DomainError",
    "PrecisionError",
    "QuadratureError",
    "asymptotics",
    "equilibrium",
    "log_barnes_g",
    "log_gamma",
    "moments",
    "recurrence",
    "recurrence_from_moments",
    "series",
    "verify",
    "zeta_prime_minus_one",
]


def moments(lam, t, nmax, digits=30):
    """Certified moment table as a dict (``mu`` holds decimal strings)."""
    return json.loads(_core.moments(str(lam), str(t), nmax, digits))


def asymptotics(quantity, lam, t, n, order=0, long_time=False, digits=30):
    """Exact values against a truncated expansion.

    ``t`` and ``n`` may be scalars or sequences; several n at one t compare
    the large-n expansion, several t at one n (``long_time=True``) the
    long-time one.
    """
    ts = [str(v) for v in (t if isinstance(t, (list, tuple)) else [t])]
    ns = [int(v) for v in (n if isinstance(n, (list, tuple)) else [n])]
    return json.loads(_core.asymptotics(quantity, str(lam), ts, ns, order, long_time, digits))

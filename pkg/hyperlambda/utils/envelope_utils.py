"""Closed-form envelope functions and the scans that check them.

Every envelope takes either floats (numpy arrays allowed through the
unchecked ``_`` variants) or ``Fraction`` arguments; with rational arguments
the result is exact.
"""
import logging
import math
from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Tuple, Union

import numpy as np

from ..models import ForbiddenFamily, Hypergraph
from .constructions import complete, lambda_complete
from .containment_utils import is_free_edges

Number = Union[float, Fraction]


def _domain(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _f5(a, c, k):
    return (c * c + 2 * a * a + 1 + 2 * k * a * c - 2 * c - 2 * a) / (6 * (k + 1))


def envelope_f5(a: Number, c: Number, k: int) -> Number:
    """Upper bound on λ of an F5-free graph with apex weight c and neighbourhood weight a.

    (c² + 2a² + 1 + 2kac − 2c − 2a) / (6(k + 1)) for a, c >= 0, a + c <= 1, k >= 3.
    """
    _domain(a >= 0 and c >= 0 and a + c <= 1, f"envelope_f5 needs a, c >= 0 and a + c <= 1, "
                                               f"got a={a}, c={c}")
    _domain(k >= 3, f"envelope_f5 needs k >= 3, got {k}")
    return _f5(a, c, k)


def f5_c_derivative(a: Number, c: Number, k: int) -> Number:
    return (2 * c + 2 * k * a - 2) / (6 * (k + 1))


def f5_peak(k: int) -> Fraction:
    """Value at (a, c) = (2/3, 1/3): 2k / (27(k + 1))."""
    return Fraction(2 * k, 27 * (k + 1))


def good_m(t: int) -> Fraction:
    """m = λ(K_{2t-1}^3) = (2t-2)(2t-3) / (6(2t-1)²)."""
    _domain(t >= 2, f"good_m needs t >= 2, got {t}")
    return Fraction((2 * t - 2) * (2 * t - 3), 6 * (2 * t - 1) ** 2)


def _good(a, m):
    return a ** 3 / 16 + a * a * (1 - a) / 4 + m * (1 - a) ** 3


def _good_relaxed(a, m):
    return a ** 3 / 12 + a * a * (1 - a) / 4 + m * (1 - a) ** 3


def envelope_good(a: Number, m: Number) -> Number:
    """a³/16 + a²(1 − a)/4 + m(1 − a)³ on 0 <= a <= 1."""
    _domain(0 <= a <= 1, f"envelope_good needs 0 <= a <= 1, got {a}")
    _domain(m >= 0, f"envelope_good needs m >= 0, got {m}")
    return _good(a, m)


def envelope_good_relaxed(a: Number, m: Number) -> Number:
    """The same cubic with leading coefficient 1/12, used once t >= 4."""
    _domain(0 <= a <= 1, f"envelope_good_relaxed needs 0 <= a <= 1, got {a}")
    _domain(m >= 0, f"envelope_good_relaxed needs m >= 0, got {m}")
    return _good_relaxed(a, m)


def good_relaxed_derivative(a: Number, m: Number) -> Number:
    return (-(1 + 6 * m) * a * a + (12 * m + 1) * a) / 2 - 3 * m


def good_relaxed_turn(m: Number) -> Number:
    """The interior zero 6m / (6m + 1) of the relaxed cubic's derivative."""
    return 6 * m / (6 * m + 1)


def _g_t3(a):
    return (-107 * a ** 3 + 196 * a * a - 96 * a + 32) / 400


def g_t3(a: Number) -> Number:
    """(−107a³ + 196a² − 96a + 32) / 400, the t = 3 good-graph envelope."""
    _domain(0 <= a <= 1, f"g_t3 needs 0 <= a <= 1, got {a}")
    return _g_t3(a)


def g_t3_derivative(a: Number) -> Number:
    return (-321 * a * a + 392 * a - 96) / 400


def g_t3_critical_points() -> Tuple[float, float]:
    root = math.sqrt(7600)
    return (196 - root) / 321, (196 + root) / 321


def s2t_m(s: int) -> Fraction:
    _domain(s >= 3, f"envelope_s2t needs s >= 3, got {s}")
    return Fraction((s - 2) * (s - 3), (s - 1) ** 2)


def _s2t(a, m):
    return 2 * a ** 3 - 3 * a * a + a + (1 - 2 * a) ** 3 * m / 6


def envelope_s2t(a: Number, s: int) -> Number:
    """2a³ − 3a² + a + (1 − 2a)³ m / 6 with m = (s−2)(s−3)/(s−1)², 0 <= a <= 1/2."""
    _domain(0 <= a <= Fraction(1, 2), f"envelope_s2t needs 0 <= a <= 1/2, got {a}")
    return _s2t(a, s2t_m(s))


def s2t_derivative(a: Number, s: int) -> Number:
    return _s2t_derivative(a, s2t_m(s))


def _s2t_derivative(a, m):
    return (6 - 4 * m) * a * a + (4 * m - 6) * a + 1 - m


def s2t_maximizer(s: int) -> float:
    """a* = 1/2 − √(3 − 2m) / (6 − 4m)."""
    m = float(s2t_m(s))
    return 0.5 - math.sqrt(3 - 2 * m) / (6 - 4 * m)


def s2t_maximum(s: int) -> float:
    """(s − 1) / (6√(s² + 4s − 9)), equal to 1 / (6√(3 − 2m))."""
    _domain(s >= 3, f"s2t_maximum needs s >= 3, got {s}")
    return (s - 1) / (6 * math.sqrt(s * s + 4 * s - 9))


def s2t_bound_gap(s: int) -> float:
    """(s+3)(s+2) / (6(s+4)²) − (s−1) / (6√(s²+4s−9)); positive for s >= 3."""
    return (s + 3) * (s + 2) / (6 * (s + 4) ** 2) - s2t_maximum(s)


def quartic_gap(s: int) -> int:
    """g(s) = 3s⁴ + 38s³ + 103s² − 140s − 580."""
    return 3 * s ** 4 + 38 * s ** 3 + 103 * s ** 2 - 140 * s - 580


def perfectness_floor(forbidden: Hypergraph) -> Tuple[Hypergraph, Fraction]:
    """K_{t-1}^r and r!·λ(K_{t-1}^r) for a t-vertex r-graph, t >= r + 1.

    K_{t-1}^r is free of any t-vertex graph, which makes the value a lower
    bound on the Lagrangian density.
    """
    t, r = forbidden.n, forbidden.r
    _domain(t >= r + 1, f"perfectness_floor needs t >= r + 1 vertices, got t={t}, r={r}")
    floor_graph = complete(t - 1, r)
    if not is_free_edges(floor_graph.n, floor_graph.edges,
                         ForbiddenFamily(members=[forbidden])):
        raise RuntimeError(f"K_{t - 1}^{r} unexpectedly contains {forbidden}")
    return floor_graph, factorial(r) * lambda_complete(t - 1, r)


def grid(low: float, high: float, step: float) -> np.ndarray:
    count = int(round((high - low) / step))
    return np.linspace(low, high, count + 1)


def grid_argmax(function: Callable[[np.ndarray], np.ndarray], points: np.ndarray
                ) -> Tuple[float, float]:
    """(argmax, max) of a vectorised function over ``points``."""
    values = function(points)
    index = int(np.argmax(values))
    return float(points[index]), float(values[index])


def sign_violation(derivative: Callable[[np.ndarray], np.ndarray], points: np.ndarray,
                   sign: int, slack: float = 1e-12) -> Optional[float]:
    """First point where ``derivative`` has the wrong sign, or None."""
    if len(points) == 0:
        return None
    values = derivative(points) * sign
    bad = np.flatnonzero(values < -slack)
    if bad.size:
        logging.debug("Derivative sign violated at %d of %d points", bad.size, len(points))
        return float(points[bad[0]])
    return None


def f5_grid_max(k: int, step: float) -> Tuple[float, float, float]:
    """Grid maximum of envelope_f5 over a, c >= 0, a + c <= 1, c <= 1/3.

    Rows of constant c are evaluated as vectors; the row spacing is coarser
    than ``step`` (at most 1e-3) and the edges c = 0 and c = 1/3 are always
    included. Returns (a, c, value).
    """
    row_step = max(step, 1e-3)
    rows = np.unique(np.concatenate([grid(0.0, 1.0 / 3, row_step), [1.0 / 3]]))
    best = (0.0, 0.0, -math.inf)
    for c in rows:
        a_values = grid(0.0, 1.0 - c, step)
        values = _f5(a_values, c, k)
        index = int(np.argmax(values))
        if values[index] > best[2]:
            best = (float(a_values[index]), float(c), float(values[index]))
    return best

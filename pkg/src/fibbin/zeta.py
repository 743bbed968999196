"""Hurwitz zeta function for real alpha > 1 and q >= 1.

Direct summation shifts q up to at least ``_SHIFT_TO``; the remainder is the
Euler-Maclaurin expansion with ``len(_B2J)`` Bernoulli correction terms.
Vectorised over numpy-broadcastable arguments.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_SHIFT_TO = 16.0

# B_{2j} / (2j)!, j = 1..9
_B2J = (
    1 / 6 / math.factorial(2),
    -1 / 30 / math.factorial(4),
    1 / 42 / math.factorial(6),
    -1 / 30 / math.factorial(8),
    5 / 66 / math.factorial(10),
    -691 / 2730 / math.factorial(12),
    7 / 6 / math.factorial(14),
    -3617 / 510 / math.factorial(16),
    43867 / 798 / math.factorial(18),
)


def _euler_maclaurin(s, a):
    # zeta(s, a) for a >= _SHIFT_TO
    a_s = a ** (-s)
    total = a_s * a / (s - 1.0) + 0.5 * a_s
    inv_a2 = 1.0 / (a * a)
    poch = s  # s (s+1) ... (s+2j-2)
    power = a_s / a
    for j, c in enumerate(_B2J, start=1):
        term = c * poch * power
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * total):
            break
        poch = poch * (s + 2 * j - 1) * (s + 2 * j)
        power = power * inv_a2
    return total


def hurwitz_zeta(alpha, q):
    """sum_{k>=0} (q + k)^(-alpha).

    Relative error is below 1e-12 for 1 < alpha <= 20 and q >= 1.
    Returns a float for scalar input, an ndarray otherwise.
    """
    scalar_s = np.ndim(alpha) == 0
    s = float(alpha) if scalar_s else np.asarray(alpha, dtype=np.float64)
    a = np.asarray(q, dtype=np.float64)
    if np.any(~(np.asarray(s) > 1.0)):
        raise DomainError("hurwitz_zeta requires alpha > 1")
    if np.any(~(a > 0)):
        raise DomainError("hurwitz_zeta requires q > 0")
    if not scalar_s:
        s, a = np.broadcast_arrays(s, a)
    if a.min(initial=np.inf) >= _SHIFT_TO:
        out = _euler_maclaurin(s, a)
    else:
        shift = np.maximum(0.0, np.ceil(_SHIFT_TO - a))
        head = np.zeros(a.shape)
        for k in range(int(shift.max(initial=0.0))):
            head = head + np.where(k < shift, (a + k) ** -s, 0.0)
        out = head + _euler_maclaurin(s, a + shift)
    if np.ndim(out) == 0:
        return float(out)
    return out

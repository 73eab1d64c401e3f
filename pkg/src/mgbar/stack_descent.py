"""Divisor coefficients under the map from a stack to its coarse space.

Along a boundary divisor where the coarse map ramifies to order ``e``, a
stack coefficient ``a`` becomes ``(e - 1 + a)/e`` downstairs.  The
accompanying floor identity guarantees that invariant sections on both
sides agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rationals import Q

__all__ = [
    "RamifiedBoundary",
    "coarse_coefficient",
    "floor_identity_check",
    "invariant_vanishing_order",
    "sweep",
]


@dataclass(frozen=True)
class RamifiedBoundary:
    e: int
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _check(self.e, self.a))


def _check(e: int, a) -> Fraction:
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"ramification order must be a positive integer, got {e!r}")
    a = Q(a)
    if not 0 <= a <= 1:
        raise ValueError(f"coefficient must lie in [0, 1], got {a}")
    return a


def coarse_coefficient(b: RamifiedBoundary) -> Fraction:
    return (b.e - 1 + b.a) / b.e


def floor_identity_check(m: int, e: int, a) -> bool:
    """Both the full and the reduced floor identity, evaluated exactly.

    full:     e*floor(m(e-1+a)/e) - m(e-1) == m + e*floor((floor(ma) - m)/e)
    reduced:  floor((ma - m)/e) == floor((floor(ma) - m)/e)
    """
    a = _check(e, a)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    fma = math.floor(m * a)
    rhs = m + e * math.floor(Fraction(fma - m, e))
    full = e * math.floor(m * (e - 1 + a) / e) - m * (e - 1) == rhs
    reduced = math.floor((m * a - m) / e) == math.floor(Fraction(fma - m, e))
    return full and reduced


def invariant_vanishing_order(m: int, e: int, a) -> int:
    """Pole bound ``m + e*floor((floor(ma) - m)/e)`` for invariant sections along the divisor."""
    a = _check(e, a)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    fma = math.floor(m * a)
    order = m + e * ((fma - m) // e)
    if order > fma or (order - m) % e:
        raise ArithmeticError(f"inconsistent vanishing order {order} for m={m}, e={e}, a={a}")
    return order


def sweep(m_max: int = 200, e_max: int = 20, q_max: int = 12) -> dict:
    """Check the floor identity for all m <= m_max, e <= e_max, a = p/q with q <= q_max."""
    cases = failures = 0
    first_failure = None
    fracs = [Fraction(p, q) for q in range(1, q_max + 1) for p in range(q + 1)]
    for m in range(1, m_max + 1):
        for e in range(1, e_max + 1):
            for a in fracs:
                cases += 1
                if not floor_identity_check(m, e, a):
                    failures += 1
                    if first_failure is None:
                        first_failure = (m, e, str(a))
    return {"cases": cases, "failures": failures, "first_failure": first_failure}

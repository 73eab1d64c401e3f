"""Dimension bookkeeping for the limit linear series V_n at a curve with r elliptic tails.

With D the complement of the tails (genus ``gD = g - r``) and p_1..p_r the
attaching points, for ``a >= 2`` the space ``V_n(-a sum p_j)`` is the full
space of sections of ``omega_D^n((2n - a) sum p_j)``; its dimension follows
from Riemann-Roch as long as the degree exceeds ``2 gD - 2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .divisor_algebra import check_genus

__all__ = [
    "DimensionProfile",
    "RegimeError",
    "TailConfiguration",
    "decomposition_identity",
    "dimension_profile",
    "h0_twisted",
    "rank_kn",
    "twisted_degree",
    "vanishing_sequence_head",
]


class RegimeError(ValueError):
    """Degree too small for Riemann-Roch alone to give h^0."""


@dataclass(frozen=True)
class TailConfiguration:
    g: int
    r: int

    def __post_init__(self):
        check_genus(self.g)
        if not 0 <= self.r <= self.g:
            raise ValueError(f"need 0 <= r <= g, got r={self.r}, g={self.g}")
        if self.gD == 0 and self.r < 3:
            raise ValueError("a rational D needs at least three attaching points")

    @property
    def gD(self) -> int:
        return self.g - self.r


@dataclass(frozen=True)
class DimensionProfile:
    n: int
    dims: tuple[int | None, ...]
    in_regime: tuple[bool, ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "dims": list(self.dims), "in_regime": list(self.in_regime)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def rank_kn(g: int, n: int) -> int:
    """Rank of the pushforward of the n-th power: g for n = 1, (2n-1)(g-1) otherwise."""
    check_genus(g)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return g if n == 1 else (2 * n - 1) * (g - 1)


def twisted_degree(gD: int, r: int, n: int, a: int) -> int:
    return 2 * n * (gD - 1) + (2 * n - a) * r


def h0_twisted(gD: int, r: int, n: int, a: int) -> int:
    """``h^0(D, omega_D^n((2n - a) sum p_j))`` for ``2 <= a <= 2n - 1``."""
    if gD < 0 or r < 0:
        raise ValueError("gD and r must be non-negative")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 2 <= a <= 2 * n - 1:
        raise ValueError(f"need 2 <= a <= 2n-1, got a={a}, n={n}")
    d = twisted_degree(gD, r, n, a)
    if d < 0:
        raise RegimeError(f"negative degree {d}")
    if d <= 2 * gD - 2:
        raise RegimeError(f"degree {d} <= 2gD-2 = {2 * gD - 2}; higher cohomology not excluded")
    return d - gD + 1


def _entry(cfg: TailConfiguration, n: int, a: int):
    try:
        return h0_twisted(cfg.gD, cfg.r, n, a), True
    except RegimeError:
        return None, False


def dimension_profile(cfg: TailConfiguration, n: int) -> DimensionProfile:
    """``dim V_n(-a sum p_j)`` for ``a = 0..2n-2``; out-of-regime entries are None."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    dims: list[int | None] = [rank_kn(cfg.g, n)]
    flags = [True]
    second, ok = _entry(cfg, n, 2)
    # the sigma_j^n are nonzero at p_j while the omega part vanishes to order 2
    dims.append(second)
    flags.append(ok)
    for a in range(2, 2 * n - 1):
        d, ok = _entry(cfg, n, a)
        dims.append(d)
        flags.append(ok)
    return DimensionProfile(n, tuple(dims), tuple(flags))


def decomposition_identity(g: int, r: int, n: int) -> bool:
    """``dim Gamma(D, omega_D^n((2n-2) sum p)) + r == k_n``."""
    cfg = TailConfiguration(g, r)
    if n == 1:
        return cfg.gD + r == rank_kn(g, 1)
    return h0_twisted(cfg.gD, r, n, 2) + r == rank_kn(g, n)


def vanishing_sequence_head(cfg: TailConfiguration, n: int) -> tuple[int, ...]:
    """Longest certified prefix of the vanishing sequence (0, 2, 3, ...) at the p_j.

    An order a is certified when ``dim V_n(-a) > dim V_n(-(a+1))``; order 1 is
    certified absent when the two dimensions agree.  Twists up to
    ``a = 2n - 1`` are available.
    """
    if cfg.r == 0:
        return ()
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    top = min(4, 2 * n - 1)
    dims = [rank_kn(cfg.g, n), h0_twisted(cfg.gD, cfg.r, n, 2)]
    dims += [h0_twisted(cfg.gD, cfg.r, n, a) for a in range(2, top + 1)]
    head = []
    for a in range(len(dims) - 1):
        if dims[a] > dims[a + 1]:
            head.append(a)
        elif a != 1:
            break
    return tuple(head)

"""Walls of the log canonical family ``K + alpha*delta`` as alpha decreases.

The elliptic-tail ray R pairs with the generators as

    lambda.R = 1/12,  delta_0.R = 1,  delta_1.R = -1/12,  delta_i.R = 0 (i >= 2)

Every F-curve intersection of ``D(alpha)`` is affine in alpha, so walls are
found by solving linear equations over Q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .divisor_algebra import DivisorClass, Model, _check_alpha, check_genus, log_canonical_divisor
from .fcurves import FCurve, enumerate_fcurves, intersect
from .rationals import format_q

__all__ = [
    "RAY",
    "ContractedLoci",
    "PhaseReport",
    "Wall",
    "contracted_loci_description",
    "critical_alphas",
    "discrepancy_coefficient",
    "pair_with_ray",
]


@dataclass(frozen=True)
class RayPairing:
    lambda_dot_R: Fraction = Fraction(1, 12)
    delta0_dot_R: Fraction = Fraction(1)
    delta1_dot_R: Fraction = Fraction(-1, 12)
    deltai_dot_R: Fraction = Fraction(0)


RAY = RayPairing()


def pair_with_ray(D: DivisorClass) -> Fraction:
    """Intersection of D with the elliptic-tail ray R."""
    return (
        D.lambda_coeff * RAY.lambda_dot_R
        - D.b(0) * RAY.delta0_dot_R
        - D.b(1) * RAY.delta1_dot_R
        - sum((D.b(i) for i in range(2, D.genus // 2 + 1)), Fraction(0)) * RAY.deltai_dot_R
    )


def discrepancy_coefficient(alpha) -> Fraction:
    """Coefficient c of delta_1 in ``K + alpha*delta = T^*(K_ps + alpha*delta_ps) + c*delta_1``.

    The pullback term is trivial on R and ``delta_1.R = -1/12``, so c is read
    off from ``-c/12 = (K + alpha*delta).R``; the result is cross-checked
    against the closed form ``9 - 11*alpha``.
    """
    alpha = _check_alpha(alpha)
    pairing = pair_with_ray(log_canonical_divisor(3, alpha, Model.MG_STACK))
    c = pairing / RAY.delta1_dot_R
    if c != 9 - 11 * alpha:
        raise ArithmeticError(f"discrepancy relation failed at alpha={alpha}: {c}")
    return c


@dataclass(frozen=True)
class Wall:
    alpha: Fraction
    contracted: tuple[FCurve, ...]
    certified: bool


@dataclass(frozen=True)
class PhaseReport:
    genus: int
    model: Model
    walls: tuple[Wall, ...]
    identically_zero: tuple[FCurve, ...] = ()
    slopes: Mapping[FCurve, tuple[Fraction, Fraction]] = field(default_factory=dict, repr=False)

    @property
    def critical_alphas(self) -> list[Fraction]:
        return [w.alpha for w in self.walls]

    @property
    def contracted(self) -> dict[Fraction, list[FCurve]]:
        return {w.alpha: list(w.contracted) for w in self.walls}

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "model": self.model.value,
            "critical_alphas": [format_q(a) for a in self.critical_alphas],
            "walls": [
                {
                    "alpha": format_q(w.alpha),
                    "contracted": [str(F) for F in w.contracted],
                    "certified": w.certified,
                    "discrepancy": format_q(discrepancy_coefficient(w.alpha)),
                }
                for w in self.walls
            ],
            "identically_zero": [str(F) for F in self.identically_zero],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def sign_table(self, alphas) -> list[tuple[FCurve, list[int]]]:
        """Sign of every stratum value at each alpha in ``alphas``."""
        out = []
        for F, (c0, c1) in self.slopes.items():
            out.append((F, [_sign(c0 + c1 * a) for a in alphas]))
        return out


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def critical_alphas(g: int, model: Model = Model.MG_STACK) -> PhaseReport:
    """Walls in [0, 1] where some stratum value drops from positive to zero as alpha decreases."""
    check_genus(g)
    if model not in (Model.MG_STACK, Model.PS_PULLBACK):
        raise ValueError("phase analysis needs the stack or pseudostable-pullback model")
    at0 = log_canonical_divisor(g, 0, model)
    at1 = log_canonical_divisor(g, 1, model)
    slopes = {}
    for F in enumerate_fcurves(g):
        v0 = intersect(at0, F)
        slopes[F] = (v0, intersect(at1, F) - v0)
    zero = tuple(F for F, (c0, c1) in slopes.items() if c0 == 0 and c1 == 0)
    roots = set()
    for F, (c0, c1) in slopes.items():
        # positive above the root, so crossing into <= 0 as alpha decreases
        if c1 > 0:
            r = -c0 / c1
            if 0 <= r <= 1:
                roots.add(r)
    walls = []
    for k, r in enumerate(sorted(roots, reverse=True)):
        contracted = tuple(F for F, (c0, c1) in slopes.items() if c0 + c1 * r == 0)
        walls.append(Wall(r, contracted, certified=(k == 0)))
    return PhaseReport(g, model, tuple(walls), zero, MappingProxyType(slopes))


@dataclass(frozen=True)
class ContractedLoci:
    genus: int
    t0: tuple[int, int] | None
    ti: tuple[tuple[int, int, int], ...]
    text: str


def contracted_loci_description(g: int) -> ContractedLoci:
    """Loci contracted at alpha = 7/10 beyond Delta_1: elliptic bridges T_0 and chains T_i."""
    check_genus(g)
    lines = [f"Contracted loci at alpha = 7/10, genus {g}:"]
    t0 = None
    if g >= 4:
        t0 = (1, g - 2)
        lines.append(
            f"  T_0 = {{ C_1 u_(p,q) C_2 | g(C_1) = 1, g(C_2) = {g - 2} }}"
            "  (elliptic bridges; from stratum D(1))"
        )
    else:
        lines.append("  T_0 omitted: needs g >= 4")
    ti = tuple((i, 1, g - 1 - i) for i in range(1, g - 1))
    for i, one, rest in ti:
        lines.append(
            f"  T_{i} = {{ C_1 u_p C_2 u_q C_3 | g(C_1) = {i}, g(C_2) = {one}, g(C_3) = {rest} }}"
        )
    lines.append("  Each locus has codimension two; the contraction at 7/10 is small.")
    return ContractedLoci(g, t0, ti, "\n".join(lines))

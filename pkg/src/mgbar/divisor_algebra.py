"""Exact divisor classes ``a*lambda - sum_i b_i*delta_i`` on the moduli space of genus g curves.

Only ``i = 0..g//2`` is stored; any index is looked up through the symmetry
``b_i = b_{g-i}``.  The canonical class of the stack is fixed as
``13*lambda - 2*delta``.
"""

from __future__ import annotations

import enum
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .rationals import Q, format_q, parse_q

__all__ = [
    "DivisorClass",
    "Model",
    "UnverifiedLinearizationWarning",
    "check_genus",
    "linearization_class",
    "log_canonical_divisor",
    "proportionality_alpha",
]


class Model(enum.Enum):
    """Which log canonical family a class belongs to."""

    MG_STACK = "mg"        # K + alpha*delta on the stack
    PS_PULLBACK = "ps"     # pullback of K_ps + alpha*delta_ps: b_1 = 11 - 12 alpha
    COARSE_DAGGER = "coarse"  # coarse divisor with (1+alpha)/2 on Delta_1

    @classmethod
    def parse(cls, text: str) -> "Model":
        aliases = {"mg": cls.MG_STACK, "stack": cls.MG_STACK, "ps": cls.PS_PULLBACK,
                   "coarse": cls.COARSE_DAGGER, "dagger": cls.COARSE_DAGGER}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown model {text!r}") from None


class UnverifiedLinearizationWarning(UserWarning):
    """Linearization requested for n outside {3, 4}."""


def check_genus(g: int) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or g < 3:
        raise ValueError(f"genus must be an integer >= 3, got {g!r}")
    return g


def _check_alpha(alpha) -> Fraction:
    alpha = Q(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


@dataclass(frozen=True)
class DivisorClass:
    genus: int
    lambda_coeff: Fraction
    delta_coeffs: tuple[Fraction, ...]
    model: Optional[Model] = None

    def __post_init__(self):
        check_genus(self.genus)
        coeffs = tuple(Q(b) for b in self.delta_coeffs)
        if len(coeffs) != self.genus // 2 + 1:
            raise ValueError(
                f"genus {self.genus} needs {self.genus // 2 + 1} delta coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "lambda_coeff", Q(self.lambda_coeff))
        object.__setattr__(self, "delta_coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, g: int, a, bs: Iterable | dict, model: Optional[Model] = None):
        """``bs`` is either the dense list ``b_0..b_{g//2}`` or a sparse ``{i: b_i}``."""
        if isinstance(bs, dict):
            dense = [Fraction(0)] * (g // 2 + 1)
            for i, b in bs.items():
                dense[min(i, g - i)] = Q(b)
            bs = dense
        return cls(g, Q(a), tuple(bs), model)

    @classmethod
    def uniform(cls, g: int, a, b, model: Optional[Model] = None):
        """The class ``a*lambda - b*delta``."""
        return cls(g, Q(a), (Q(b),) * (g // 2 + 1), model)

    def b(self, i: int) -> Fraction:
        """Coefficient of ``-delta_i`` with ``b_i = b_{g-i}``."""
        g = self.genus
        if not 0 <= i <= g:
            raise IndexError(f"boundary index {i} out of range for genus {g}")
        return self.delta_coeffs[min(i, g - i)]

    def boundary_weight(self, i: int) -> Fraction:
        """Coefficient of ``Delta_i`` when the class is written as ``K + sum c_i Delta_i``."""
        if self.lambda_coeff != 13:
            raise ValueError("boundary weights are defined relative to K = 13 lambda - 2 delta")
        return 2 - self.b(i)

    def scale(self, t) -> "DivisorClass":
        t = Q(t)
        return DivisorClass(self.genus, t * self.lambda_coeff,
                            tuple(t * b for b in self.delta_coeffs), self.model)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.genus != self.genus:
            raise ValueError("genus mismatch")
        return DivisorClass(self.genus, self.lambda_coeff + other.lambda_coeff,
                            tuple(x + y for x, y in zip(self.delta_coeffs, other.delta_coeffs)))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def proportional_to(self, other: "DivisorClass") -> Optional[Fraction]:
        """The scalar t with ``self == t*other`` (ignoring model tags), else None."""
        if other.genus != self.genus:
            return None
        pairs = list(zip((self.lambda_coeff, *self.delta_coeffs),
                         (other.lambda_coeff, *other.delta_coeffs)))
        t = None
        for x, y in pairs:
            if y == 0:
                if x != 0:
                    return None
                continue
            if t is None:
                t = x / y
            elif x != t * y:
                return None
        return t

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        d = {
            "g": self.genus,
            "lambda": format_q(self.lambda_coeff),
            "delta": [format_q(b) for b in self.delta_coeffs],
        }
        if self.model is not None:
            d["model"] = self.model.value
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "DivisorClass":
        model = Model(d["model"]) if d.get("model") is not None else None
        return cls(int(d["g"]), parse_q(d["lambda"]), tuple(parse_q(b) for b in d["delta"]), model)

    @classmethod
    def from_json(cls, text: str) -> "DivisorClass":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        terms = [f"{format_q(self.lambda_coeff)}*lambda"]
        for i, b in enumerate(self.delta_coeffs):
            if b:
                terms.append(f"- {format_q(b)}*delta_{i}")
        return " ".join(terms)


def log_canonical_divisor(g: int, alpha, model: Model = Model.MG_STACK) -> DivisorClass:
    """``K + alpha*delta`` in the requested model, as ``13*lambda - sum b_i delta_i``."""
    check_genus(g)
    alpha = _check_alpha(alpha)
    b = 2 - alpha
    bs = [b] * (g // 2 + 1)
    if model is Model.PS_PULLBACK:
        bs[1] = 11 - 12 * alpha
    elif model is Model.COARSE_DAGGER:
        bs[1] = 2 - (1 + alpha) / 2
    elif model is not Model.MG_STACK:
        raise ValueError(f"unknown model {model!r}")
    return DivisorClass(g, Fraction(13), tuple(bs), model)


def linearization_class(g: int, n: int) -> DivisorClass:
    """Chow-quotient linearization ``n(g-1)(n(12 lambda - delta) - 4 lambda)`` pulled back to the moduli space."""
    check_genus(g)
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n not in (3, 4):
        warnings.warn(f"linearization for n={n} is outside the certified cases n=3,4",
                      UnverifiedLinearizationWarning, stacklevel=2)
    scale = n * (g - 1)
    return DivisorClass.uniform(g, scale * (12 * n - 4), scale * n)


def proportionality_alpha(D: DivisorClass) -> Optional[Fraction]:
    """alpha with D a positive multiple of ``13 lambda - (2 - alpha) delta``, or None."""
    bs = set(D.delta_coeffs)
    if len(bs) != 1 or D.lambda_coeff <= 0:
        return None
    (b,) = bs
    return 2 - 13 * b / D.lambda_coeff


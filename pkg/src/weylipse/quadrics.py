"""The two integer quadrics attached to a type, and the coordinate involutions T_i.

The primary quadric is  sum_i k_i (x_i^2 - x_i) - sum_{i<j} l_ij x_i x_j = 0,
equivalently <x, x - 2 delta> = 0 (the polynomial is half the bilinear value).
Its image under x |-> h = 1 - A x is the secondary quadric; the stored
secondary form is pre-multiplied by detA so that all coefficients are integers.

A point x on the primary quadric is moved by the involution T_i, which shifts
coordinate i by h_i (a no-op where h_i = 0) and lands on the quadric again.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanData, bilinear
from .errors import DimensionMismatchError, NotOnEllipsoidError
from .exact import Matrix

__all__ = ["QuadForm", "primary_form", "secondary_form", "h_vector", "apply_T"]


@dataclass(frozen=True)
class QuadForm:
    """An integer quadratic equation  value(x) = 0.

    ``quad`` is the symmetric integer matrix of second derivatives (so its
    diagonal is twice each square coefficient), which keeps evaluation exact:

        value(x) = x^T quad x / 2 + linear . x + constant
                 = sum_i (quad_ii/2) x_i^2 + sum_{i<j} quad_ij x_i x_j
                   + sum_i linear_i x_i + constant.
    """

    n: int
    quad: Matrix
    linear: tuple[int, ...]
    constant: int

    def __post_init__(self):
        for i in range(self.n):
            assert self.quad[i][i] % 2 == 0
            for j in range(self.n):
                assert self.quad[i][j] == self.quad[j][i]

    def value(self, x):
        if len(x) != self.n:
            raise DimensionMismatchError(f"expected {self.n}-vector, got {len(x)}")
        total = self.constant
        for i in range(self.n):
            total += (self.quad[i][i] // 2) * x[i] * x[i] + self.linear[i] * x[i]
            for j in range(i + 1, self.n):
                if self.quad[i][j]:
                    total += self.quad[i][j] * x[i] * x[j]
        return total

    def contains(self, x) -> bool:
        return self.value(x) == 0

    def equation_text(self, var: str = "x") -> str:
        terms: list[tuple[int, str]] = []
        for i in range(self.n):
            terms.append((self.quad[i][i] // 2, f"{var}{i + 1}^2"))
        for i in range(self.n):
            for j in range(i + 1, self.n):
                terms.append((self.quad[i][j], f"{var}{i + 1}*{var}{j + 1}"))
        for i in range(self.n):
            terms.append((self.linear[i], f"{var}{i + 1}"))
        terms.append((self.constant, ""))
        parts: list[str] = []
        for coeff, mono in terms:
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        lhs = " ".join(parts) if parts else "0"
        return f"{lhs} = 0"


def primary_form(cd: CartanData) -> QuadForm:
    """sum k_i (x_i^2 - x_i) - sum over links l_ij x_i x_j, as a QuadForm.

    For every rational x, 2 * value(x) equals bilinear(x, x - 2*delta).
    """
    return QuadForm(
        n=cd.n,
        quad=cd.gram,
        linear=tuple(-ki for ki in cd.k),
        constant=0,
    )


def secondary_form(cd: CartanData) -> QuadForm:
    """The image quadric in h-coordinates, scaled by detA to integer coefficients.

    value(h) = detA * (<Ainv h, Ainv h> - <delta, delta>), which vanishes iff
    <Ainv(1-h), Ainv(1+h)> = 0.  In particular value(1,...,1) = 0.
    """
    n = cd.n
    quad = tuple(
        tuple(2 * cd.k[i] * cd.adjA[i][j] for j in range(n)) for i in range(n)
    )
    constant = -sum(cd.k[i] * cd.adjA[i][j] for i in range(n) for j in range(n))
    return QuadForm(n=n, quad=quad, linear=(0,) * n, constant=constant)


def h_vector(x, cd: CartanData) -> tuple:
    """h = 1 - A x.  Integral whenever x is; maps the primary quadric onto the secondary."""
    if len(x) != cd.n:
        raise DimensionMismatchError(f"expected {cd.n}-vector, got {len(x)}")
    return tuple(
        1 - sum(cd.A[i][j] * x[j] for j in range(cd.n)) for i in range(cd.n)
    )


def apply_T(i: int, x, cd: CartanData) -> tuple:
    """The involution T_i: shift coordinate i (1-based) of x by h(x)_i.

    Requires x on the primary quadric; returns x unchanged where h_i = 0.
    """
    if not 1 <= i <= cd.n:
        raise DimensionMismatchError(f"index {i} out of range 1..{cd.n}")
    form = primary_form(cd)
    if form.value(x) != 0:
        raise NotOnEllipsoidError(f"{tuple(x)} is not on the primary quadric of {cd.spec}")
    hi = h_vector(x, cd)[i - 1]
    if hi == 0:
        return tuple(x)
    shifted = list(x)
    shifted[i - 1] += hi
    return tuple(shifted)


def on_primary(x, cd: CartanData) -> bool:
    return primary_form(cd).value(x) == 0


def on_secondary(h, cd: CartanData) -> bool:
    return secondary_form(cd).value(h) == 0


def sphere_identity_holds(x, cd: CartanData) -> bool:
    """Independent membership oracle: <x - delta, x - delta> == <delta, delta>."""
    centered = tuple(Fraction(xi) - di for xi, di in zip(x, cd.delta))
    return bilinear(centered, centered, cd) == cd.delta_norm_sq

"""Exact univariate polynomials in the local dimension d.

The multiplication law of the transposed-operator algebra only ever
multiplies coefficients by powers of d, so products of generators stay
integer polynomials.  Rendering is descending powers with no spaces,
e.g. ``d^2-1``.
"""

from __future__ import annotations

from typing import Union

Number = Union[int, float]


class DPoly:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of d^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        if isinstance(coeffs, (int, float)):
            coeffs = (coeffs,)
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DPoly is immutable")

    @staticmethod
    def d(power: int = 1) -> "DPoly":
        return DPoly((0,) * power + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        return other is not None and self.coeffs == other.coeffs

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return DPoly(
            (self.coeffs[k] if k < len(self.coeffs) else 0)
            + (other.coeffs[k] if k < len(other.coeffs) else 0)
            for k in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return DPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DPoly(out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        result = DPoly((1,))
        for _ in range(power):
            result = result * self
        return result

    def __call__(self, d: Number) -> Number:
        value = 0
        for c in reversed(self.coeffs):
            value = value * d + c
        return value

    def __repr__(self) -> str:
        return f"DPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if chunks else "")
            mag = abs(c)
            if k == 0:
                body = f"{mag}"
            else:
                head = "" if mag == 1 else f"{mag}"
                body = f"{head}d" if k == 1 else f"{head}d^{k}"
            chunks.append(sign + body)
        return "".join(chunks)


def _coerce(value) -> DPoly | None:
    if isinstance(value, DPoly):
        return value
    if isinstance(value, (int, float)):
        return DPoly((value,))
    return None

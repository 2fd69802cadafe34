"""Forward-mode dual numbers over binary64.

A DualReal carries a value and its derivative with respect to the zeta-order
parameter s. Constants have eps == 0; the differentiation variable is seeded
with eps == 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

__all__ = ["DualReal", "constant", "variable", "d_atan", "d_cos", "d_exp", "d_log", "d_pow", "d_sin", "d_sqrt"]

Number = Union["DualReal", float, int]


@dataclass(frozen=True)
class DualReal:
    val: float
    eps: float = 0.0

    def __add__(self, other: Number) -> "DualReal":
        o = _coerce(other)
        return DualReal(self.val + o.val, self.eps + o.eps)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "DualReal":
        o = _coerce(other)
        return DualReal(self.val - o.val, self.eps - o.eps)

    def __rsub__(self, other: Number) -> "DualReal":
        o = _coerce(other)
        return DualReal(o.val - self.val, o.eps - self.eps)

    def __mul__(self, other: Number) -> "DualReal":
        o = _coerce(other)
        return DualReal(self.val * o.val, self.val * o.eps + self.eps * o.val)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "DualReal":
        o = _coerce(other)
        if o.val == 0.0:
            raise ZeroDivisionError("dual division by zero value")
        v = self.val / o.val
        return DualReal(v, (self.eps - v * o.eps) / o.val)

    def __rtruediv__(self, other: Number) -> "DualReal":
        return _coerce(other) / self

    def __neg__(self) -> "DualReal":
        return DualReal(-self.val, -self.eps)

    def __pow__(self, other: Number) -> "DualReal":
        return d_pow(self, other)


def _coerce(x: Number) -> DualReal:
    if isinstance(x, DualReal):
        return x
    return DualReal(float(x), 0.0)


def constant(x: float) -> DualReal:
    return DualReal(float(x), 0.0)


def variable(x: float) -> DualReal:
    return DualReal(float(x), 1.0)


def d_exp(x: Number) -> DualReal:
    x = _coerce(x)
    v = math.exp(x.val)
    return DualReal(v, v * x.eps)


def d_log(x: Number) -> DualReal:
    x = _coerce(x)
    if x.val <= 0.0:
        raise ValueError("d_log domain")
    return DualReal(math.log(x.val), x.eps / x.val)


def d_sin(x: Number) -> DualReal:
    x = _coerce(x)
    return DualReal(math.sin(x.val), math.cos(x.val) * x.eps)


def d_cos(x: Number) -> DualReal:
    x = _coerce(x)
    return DualReal(math.cos(x.val), -math.sin(x.val) * x.eps)


def d_atan(x: Number) -> DualReal:
    x = _coerce(x)
    return DualReal(math.atan(x.val), x.eps / (1.0 + x.val * x.val))


def d_sqrt(x: Number) -> DualReal:
    x = _coerce(x)
    if x.val < 0.0:
        raise ValueError("d_sqrt domain")
    v = math.sqrt(x.val)
    if v == 0.0 and x.eps != 0.0:
        raise ZeroDivisionError("d_sqrt derivative at zero")
    return DualReal(v, 0.0 if x.eps == 0.0 else 0.5 * x.eps / v)


def d_pow(base: Number, expo: Number) -> DualReal:
    """base**expo with the product rule; general exponents need base > 0."""
    b = _coerce(base)
    e = _coerce(expo)
    if e.eps == 0.0 and float(e.val).is_integer():
        n = int(e.val)
        if b.val == 0.0 and n <= 0:
            raise ZeroDivisionError("0 to a non-positive power")
        v = b.val ** n
        d = 0.0 if n == 0 else n * b.val ** (n - 1) * b.eps
        return DualReal(v, d)
    if b.val <= 0.0:
        raise ValueError("dual pow needs positive base for non-integer exponent")
    lnb = math.log(b.val)
    v = math.exp(e.val * lnb)
    return DualReal(v, v * (e.eps * lnb + e.val * b.eps / b.val))

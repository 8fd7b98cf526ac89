"""Trigonometric expressions in tau and lambda, mapped into the Laurent field.

A leaf ``sin(a, b, c)`` stands for ``sin((a*tau + b/tau + c) * lambda/2)``.
With ``t = e^(i tau lambda/2)``, ``w = e^(i lambda/(2 tau))`` and
``u = e^(i lambda/2)`` it evaluates to ``(t^a w^b u^c - t^-a w^-b u^-c)/(2i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .arith import GaussianRational, I, LaurentPoly, RatFunc
from .partitions import Partition


class TrigExpr:
    """Expression tree; build with the usual arithmetic operators."""

    def evaluate(self) -> RatFunc:
        raise NotImplementedError

    def __add__(self, other):
        return Sum((self, _wrap(other)))

    def __radd__(self, other):
        return Sum((_wrap(other), self))

    def __sub__(self, other):
        return Sum((self, Product((Const(-1), _wrap(other)))))

    def __rsub__(self, other):
        return Sum((_wrap(other), Product((Const(-1), self))))

    def __neg__(self):
        return Product((Const(-1), self))

    def __mul__(self, other):
        return Product((self, _wrap(other)))

    def __rmul__(self, other):
        return Product((_wrap(other), self))

    def __truediv__(self, other):
        return Quotient(self, _wrap(other))

    def __rtruediv__(self, other):
        return Quotient(_wrap(other), self)

    def __pow__(self, n: int):
        return Power(self, n)


def _wrap(x) -> TrigExpr:
    if isinstance(x, TrigExpr):
        return x
    return Const(GaussianRational.coerce(x))


@dataclass(frozen=True)
class Const(TrigExpr):
    value: GaussianRational

    def __init__(self, value):
        object.__setattr__(self, "value", GaussianRational.coerce(value))

    def evaluate(self):
        return RatFunc.const(self.value)


@dataclass(frozen=True)
class Sin(TrigExpr):
    a: int
    b: int
    c: int

    def evaluate(self):
        num = LaurentPoly({(self.c, self.a, self.b): 1, (-self.c, -self.a, -self.b): -1})
        return RatFunc(num) / (2 * I)


@dataclass(frozen=True)
class Cos(TrigExpr):
    a: int
    b: int
    c: int

    def evaluate(self):
        num = LaurentPoly({(self.c, self.a, self.b): 1})
        num = num + LaurentPoly({(-self.c, -self.a, -self.b): 1})
        return RatFunc(num) / 2


@dataclass(frozen=True)
class Sum(TrigExpr):
    terms: Tuple[TrigExpr, ...]

    def evaluate(self):
        total = RatFunc.const(0)
        for term in self.terms:
            total = total + term.evaluate()
        return total


@dataclass(frozen=True)
class Product(TrigExpr):
    factors: Tuple[TrigExpr, ...]

    def evaluate(self):
        out = RatFunc.const(1)
        for f in self.factors:
            out = out * f.evaluate()
        return out


@dataclass(frozen=True)
class Quotient(TrigExpr):
    num: TrigExpr
    den: TrigExpr

    def evaluate(self):
        return self.num.evaluate() / self.den.evaluate()


@dataclass(frozen=True)
class Power(TrigExpr):
    base: TrigExpr
    exponent: int

    def evaluate(self):
        return self.base.evaluate() ** self.exponent


def sin(a: int, b: int, c: int) -> Sin:
    return Sin(a, b, c)


def cos(a: int, b: int, c: int) -> Cos:
    return Cos(a, b, c)


def trig_eval(expr: TrigExpr) -> RatFunc:
    return expr.evaluate()


def gn1_closed_expr(n: int) -> TrigExpr:
    """``(1/n) prod_{i=1}^{n-1} sin((n tau + i + 1) lambda/2) / sin(i lambda/2)``."""
    if n < 1:
        raise ValueError("n must be positive")
    expr: TrigExpr = Const(Fraction(1, n))
    for i in range(1, n):
        expr = expr * sin(n, 0, i + 1) / sin(0, 0, i)
    return expr


def gn1_closed(n: int) -> RatFunc:
    return trig_eval(gn1_closed_expr(n))


# half-angle shorthands: s1 = sin(lambda/2), s2 = sin(lambda)
_s1 = sin(0, 0, 1)
_s2 = sin(0, 0, 2)


@dataclass(frozen=True)
class ClosedForm:
    name: str
    mu_plus: Partition
    mu_minus: Partition
    forms: Tuple[TrigExpr, ...]  # every printed form of the same display

    @property
    def pair(self) -> Tuple[Partition, Partition]:
        return self.mu_plus, self.mu_minus


def _closed_forms() -> Dict[str, ClosedForm]:
    P = Partition
    fixtures = [
        ClosedForm("G11", P((1,)), P((1,)), (Const(1),)),
        ClosedForm("G21", P((2,)), P((1,)), (sin(2, 0, 2) / (2 * _s1),)),
        ClosedForm(
            "G31",
            P((3,)),
            P((1,)),
            (
                -cos(6, 0, 5) / (6 * _s1 * _s2) + Const(1) / (12 * _s1 ** 2),
                sin(3, 0, 2) * sin(3, 0, 3) / (3 * _s1 * _s2),
            ),
        ),
        ClosedForm(
            "G22",
            P((2,)),
            P((2,)),
            (
                -cos(2, 2, 4) * cos(0, 0, 3) / (4 * _s1 * _s2)
                + cos(2, -2, 0) / (8 * _s1 ** 2),
                sin(2, 2, 5) / (4 * _s1) + sin(2, 0, 1) * sin(0, 2, 1) / (4 * _s1 ** 2),
            ),
        ),
        ClosedForm(
            "G32",
            P((3,)),
            P((2,)),
            (
                -cos(6, 2, 10) / (12 * _s1 * _s2)
                - sin(6, 2, 5) / (24 * _s1 ** 2 * _s2)
                + sin(6, -2, 3) / (24 * _s1 ** 2 * _s2)
                + sin(0, 2, 2) * cos(0, 0, 3) / (12 * _s1 ** 2 * _s2),
                (
                    -sin(6, 2, 11)
                    + sin(6, 2, 9)
                    - sin(6, 2, 5)
                    + sin(6, -2, 3)
                    + sin(0, 2, 5)
                    + sin(0, 2, -1)
                )
                / (24 * _s1 ** 2 * _s2),
            ),
        ),
        ClosedForm(
            "G1_11",
            P((1,)),
            P((1, 1)),
            (
                (cos(0, 2, 2) - 1) / (2 * I * _s1),
                I * sin(0, 1, 1) ** 2 / _s1,
            ),
        ),
        ClosedForm(
            "G11_1",
            P((1, 1)),
            P((1,)),
            (
                (cos(2, 0, 2) - 1) / (2 * I * _s1),
                I * sin(1, 0, 1) ** 2 / _s1,
            ),
        ),
        ClosedForm(
            "G2_11",
            P((2,)),
            P((1, 1)),
            (
                sin(2, 2, 4) * cos(0, 0, 3) / (4 * I * _s1 * _s2)
                + sin(2, -2, 0) / (8 * I * _s1 ** 2)
                - sin(2, 0, 2) / (4 * I * _s1 ** 2),
                I * sin(2, 0, 2) * sin(0, 1, 1) ** 2 / (2 * _s1 ** 2),
            ),
        ),
        ClosedForm(
            "G3_11",
            P((3,)),
            P((1, 1)),
            (
                -I * sin(6, 2, 10) / (12 * _s1 * _s2)
                + I * cos(6, 2, 5) / (24 * _s1 ** 2 * _s2)
                + I * cos(6, -2, 3) / (24 * _s1 ** 2 * _s2)
                - I * cos(0, 2, 2) * cos(0, 0, 3) / (12 * _s1 ** 2 * _s2)
                - I * cos(6, 0, 5) / (12 * _s1 ** 2 * _s2)
                + I / (12 * _s1 ** 3),
            ),
        ),
    ]
    return {f.name: f for f in fixtures}


CLOSED_FORMS: Dict[str, ClosedForm] = _closed_forms()
ALIASES = {"G21_11": "G2_11"}
CLOSED_FORM_NAMES: List[str] = list(CLOSED_FORMS)


def closed_form(name: str) -> ClosedForm:
    key = ALIASES.get(name, name)
    try:
        return CLOSED_FORMS[key]
    except KeyError:
        raise KeyError(f"unknown closed form {name!r}; known: {', '.join(CLOSED_FORMS)}") from None


def closed_target(name: str) -> RatFunc:
    """The last printed form of the named display, as a rational function."""
    return trig_eval(closed_form(name).forms[-1])

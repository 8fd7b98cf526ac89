"""Exact scalars, Laurent polynomials and rational functions.

Everything in the package lives in the field of rational functions over the
Gaussian rationals in three Laurent variables::

    u = q^(1/2),   t = exp(i*tau*lambda/2),   w = exp(i*lambda/(2*tau))

A monomial is keyed by its exponent triple ``(e_u, e_t, e_w)``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple

Exponent = Tuple[int, int, int]

ZERO_EXP: Exponent = (0, 0, 0)
VARIABLES = ("u", "t", "w")


class GaussianRational:
    """Number ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*I"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*I)"

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        if not self.im:
            return GaussianRational(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)


I = GaussianRational(0, 1)
ONE = GaussianRational(1)
_ZERO = GaussianRational(0)


def _fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class LaurentPoly:
    """Finitely supported map from exponent triples to Gaussian rationals.

    Instances are treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: Dict[Exponent, GaussianRational] = {}
        if terms:
            for exp, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[_check_exp(exp)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, GaussianRational]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({ZERO_EXP: c})

    @classmethod
    def monomial(cls, exp: Exponent, c=1) -> "LaurentPoly":
        return cls({tuple(exp): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        exp = [0, 0, 0]
        exp[VARIABLES.index(name)] = power
        return cls.monomial(tuple(exp))

    # -- basic protocol -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rational, GaussianRational)):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"{v}^{e}" if e != 1 else v for v, e in zip(VARIABLES, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ------------------------------------------------

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[Exponent, GaussianRational] = {}
        for (a0, a1, a2), ca in self.terms.items():
            for (b0, b1, b2), cb in other.terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2)
                p = ca * cb
                s = out.get(e)
                out[e] = p if s is None else s + p
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent-polynomial inverses")
            (e, c), = self.terms.items()
            return LaurentPoly._raw({tuple(n * x for x in e): c ** n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "LaurentPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return LaurentPoly._raw({})
        if c == 1:
            return self
        return LaurentPoly._raw({e: v * c for e, v in self.terms.items()})

    def shift(self, exp: Exponent) -> "LaurentPoly":
        """Multiply by the monomial with exponent ``exp``."""
        d0, d1, d2 = exp
        if not (d0 or d1 or d2):
            return self
        return LaurentPoly._raw(
            {(a + d0, b + d1, c + d2): v for (a, b, c), v in self.terms.items()}
        )

    # -- inspection -----------------------------------------------------

    def min_exp(self) -> Exponent:
        """Componentwise minimum exponent (the monomial content)."""
        if not self.terms:
            return ZERO_EXP
        es = list(self.terms)
        return tuple(min(e[k] for e in es) for k in range(3))

    def lex_min(self) -> Exponent:
        return min(self.terms)

    def lex_max(self) -> Exponent:
        return max(self.terms)

    def is_u_only(self) -> bool:
        return all(not e[1] and not e[2] for e in self.terms)

    def is_constant(self) -> bool:
        return all(e == ZERO_EXP for e in self.terms)

    def constant_value(self) -> GaussianRational:
        return self.terms.get(ZERO_EXP, _ZERO)

    def is_real(self) -> bool:
        return all(not c.im for c in self.terms.values())

    def substitute_inverse(self, var: str) -> "LaurentPoly":
        k = VARIABLES.index(var)
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[k] = -e[k]
            out[tuple(e)] = c
        return LaurentPoly._raw(out)

    def negate_variable(self, var: str) -> "LaurentPoly":
        k = VARIABLES.index(var)
        return LaurentPoly._raw({e: (-c if e[k] % 2 else c) for e, c in self.terms.items()})

    def swap_tw(self) -> "LaurentPoly":
        return LaurentPoly._raw({(a, c, b): v for (a, b, c), v in self.terms.items()})

    def evaluate(self, point) -> GaussianRational:
        pu, pt, pw = (GaussianRational.coerce(x) for x in point)
        total = GaussianRational(0)
        cache: Dict[Tuple[int, int], GaussianRational] = {}

        def power(k, base, e):
            key = (k, e)
            v = cache.get(key)
            if v is None:
                v = base ** e
                cache[key] = v
            return v

        for (a, b, c), coeff in self.terms.items():
            total = total + coeff * power(0, pu, a) * power(1, pt, b) * power(2, pw, c)
        return total

    def sorted_items(self):
        return sorted(self.terms.items())

    def to_json(self) -> list:
        return [
            [list(e), _fraction_text(c.re), _fraction_text(c.im)]
            for e, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls(
            {
                tuple(int(x) for x in e): GaussianRational(_parse_fraction(re), _parse_fraction(im))
                for e, re, im in data
            }
        )


def _check_exp(exp) -> Exponent:
    exp = tuple(exp)
    if len(exp) != 3 or not all(isinstance(x, int) for x in exp):
        raise TypeError(f"exponent must be a triple of ints, got {exp!r}")
    return exp


def _as_poly(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Rational, GaussianRational)):
        return LaurentPoly.const(x)
    return None


# -- univariate helpers (polynomials in u only) ------------------------------

def _dense_u(p: LaurentPoly, offset: int, length: int):
    out = [_ZERO] * length
    for (e, _, _), c in p.terms.items():
        out[e - offset] = c
    return out


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _monic(a):
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _poly_rem(a, b):
    a = list(a)
    db = len(b) - 1
    lead_inv = b[-1].inverse()
    while len(a) - 1 >= db and a:
        f = a[-1] * lead_inv
        shift = len(a) - 1 - db
        if f:
            for i, bc in enumerate(b):
                if bc:
                    a[shift + i] = a[shift + i] - f * bc
        a.pop()
        _trim(a)
    return a


def _dense_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return _monic(a) if a else a


def _poly_divexact(a, b):
    # exact division of dense polynomials, remainder must vanish
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        raise ArithmeticError("inexact division")
    q = [_ZERO] * (len(a) - db)
    lead_inv = b[-1].inverse()
    for k in range(len(a) - 1 - db, -1, -1):
        f = a[k + db] * lead_inv
        q[k] = f
        if f:
            for i, bc in enumerate(b):
                if bc:
                    a[k + i] = a[k + i] - f * bc
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    return q


def _u_slices(p: LaurentPoly) -> Dict[Tuple[int, int], Dict[int, GaussianRational]]:
    slices: Dict[Tuple[int, int], Dict[int, GaussianRational]] = {}
    for (a, b, c), v in p.terms.items():
        slices.setdefault((b, c), {})[a] = v
    return slices


def _u_gcd_reduce(num: LaurentPoly, den: LaurentPoly):
    """Cancel the largest u-polynomial factor shared by ``den`` (u-only) and ``num``."""
    dmin = min(e[0] for e in den.terms)
    ddeg = max(e[0] for e in den.terms) - dmin
    if ddeg == 0:
        return num, den
    d = _dense_u(den, dmin, ddeg + 1)
    g = d
    slices = _u_slices(num)
    for coeffs in slices.values():
        lo = min(coeffs)
        hi = max(coeffs)
        s = [_ZERO] * (hi - lo + 1)
        for e, v in coeffs.items():
            s[e - lo] = v
        g = _dense_gcd(g, s)
        if len(g) <= 1:
            return num, den
    new_den = _poly_divexact(d, g)
    out: Dict[Exponent, GaussianRational] = {}
    for (b, c), coeffs in slices.items():
        lo = min(coeffs)
        hi = max(coeffs)
        s = [_ZERO] * (hi - lo + 1)
        for e, v in coeffs.items():
            s[e - lo] = v
        for k, v in enumerate(_poly_divexact(s, g)):
            if v:
                out[(lo + k, b, c)] = v
    den_terms = {(dmin + k, 0, 0): v for k, v in enumerate(new_den) if v}
    return LaurentPoly._raw(out), LaurentPoly._raw(den_terms)


class RatFunc:
    """Quotient ``num/den`` of Laurent polynomials kept in canonical form.

    Canonical form: the lexicographically smallest monomial of ``den`` is
    ``1`` and the coefficient of its lexicographically largest monomial is 1.
    When ``den`` involves only ``u`` the common u-polynomial factor with
    ``num`` is cancelled too, so u-only denominators are fully reduced.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _canonical=False):
        num = _as_poly(num) if not isinstance(num, LaurentPoly) else num
        if num is None:
            raise TypeError("numerator must be a LaurentPoly or exact scalar")
        if den is None:
            den = LaurentPoly.const(1)
        elif not isinstance(den, LaurentPoly):
            den = _as_poly(den)
            if den is None:
                raise TypeError("denominator must be a LaurentPoly or exact scalar")
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(LaurentPoly.const(c), _canonical=True) if c else cls(LaurentPoly())

    @classmethod
    def monomial(cls, exp: Exponent, c=1) -> "RatFunc":
        return cls(LaurentPoly.monomial(exp, c), _canonical=True)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "RatFunc":
        return cls(LaurentPoly.var(name, power), _canonical=True)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Rational, GaussianRational, LaurentPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None  # value equality is not representation equality

    def same_representation(self, other: "RatFunc") -> bool:
        return self.num == other.num and self.den == other.den

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __add__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_u_only() and other.den.is_u_only():
            return _add_u_lcm(self, other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational, GaussianRational)):
            if not other:
                return RatFunc(LaurentPoly())
            return RatFunc(self.num.scale(other), self.den, _canonical=True)
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(LaurentPoly())
        if len(other.num.terms) == 1 and other.den == 1:
            (e, c), = other.num.terms.items()
            return RatFunc(self.num.shift(e).scale(c), self.den, _canonical=True)
        if len(self.num.terms) == 1 and self.den == 1:
            return other * self
        if self.den.is_u_only() and other.den.is_u_only():
            # cross-reduce before multiplying to keep sizes small
            n1, d2 = _u_gcd_reduce(self.num, other.den)
            n2, d1 = _u_gcd_reduce(other.num, self.den)
            return RatFunc(n1 * n2, d1 * d2)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero RatFunc")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, GaussianRational)):
            return self * GaussianRational.coerce(other).inverse()
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_rf(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_u_only(self) -> bool:
        return self.num.is_u_only() and self.den.is_u_only()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value() / self.den.constant_value()

    def substitute_inverse(self, var: str) -> "RatFunc":
        return substitute_inverse(self, var)

    def swap_tw(self) -> "RatFunc":
        return RatFunc(self.num.swap_tw(), self.den.swap_tw())

    def evaluate(self, point) -> GaussianRational:
        return rf_eval(self, point)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatFunc":
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _as_rf(x) -> RatFunc | None:
    if isinstance(x, RatFunc):
        return x
    p = _as_poly(x)
    if p is None:
        return None
    return RatFunc(p, _canonical=True)


def _add_u_lcm(a: RatFunc, b: RatFunc) -> RatFunc:
    # a.den, b.den are u-only polys with constant term, monic at the top
    da, db = a.den, b.den
    amax = max(e[0] for e in da.terms)
    bmax = max(e[0] for e in db.terms)
    A = _dense_u(da, 0, amax + 1)
    B = _dense_u(db, 0, bmax + 1)
    g = _dense_gcd(A, B)
    if len(g) <= 1:
        return RatFunc(a.num * db + b.num * da, da * db)
    gpoly = LaurentPoly._raw({(k, 0, 0): v for k, v in enumerate(g) if v})
    a_co = LaurentPoly._raw({(k, 0, 0): v for k, v in enumerate(_poly_divexact(B, g)) if v})
    b_co = LaurentPoly._raw({(k, 0, 0): v for k, v in enumerate(_poly_divexact(A, g)) if v})
    return RatFunc(a.num * a_co + b.num * b_co, a_co * b_co * gpoly)


def _canonicalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return LaurentPoly(), LaurentPoly.const(1)
    if den.is_u_only() and len(den.terms) > 1:
        low = min(e[0] for e in den.terms)
        den = den.shift((-low, 0, 0))
        num = num.shift((-low, 0, 0))
        num, den = _u_gcd_reduce(num, den)
    # monomial content shared by num and den
    nmin, dmin = num.min_exp(), den.min_exp()
    common = tuple(min(a, b) for a, b in zip(nmin, dmin))
    shift = tuple(-x for x in common)
    num, den = num.shift(shift), den.shift(shift)
    # den's lexicographically smallest monomial becomes 1
    low = den.lex_min()
    shift = tuple(-x for x in low)
    num, den = num.shift(shift), den.shift(shift)
    lead = den.terms[den.lex_max()]
    if lead != 1:
        inv = lead.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


# -- public operations ---------------------------------------------------------

def canonicalize(f: RatFunc) -> RatFunc:
    return RatFunc(f.num, f.den)


def rf_equal(a: RatFunc, b: RatFunc) -> bool:
    """Value equality by cross-multiplication."""
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def substitute_inverse(f: RatFunc, var: str) -> RatFunc:
    if var not in VARIABLES:
        raise ValueError(f"unknown variable {var!r}")
    return RatFunc(f.num.substitute_inverse(var), f.den.substitute_inverse(var))


def negate_variable(f: RatFunc, var: str) -> RatFunc:
    """Substitute ``var -> -var``."""
    if var not in VARIABLES:
        raise ValueError(f"unknown variable {var!r}")
    return RatFunc(f.num.negate_variable(var), f.den.negate_variable(var))


def rf_eval(f: RatFunc, point) -> GaussianRational:
    """Exact value of ``f`` at ``point = (u, t, w)``.

    Raises ZeroDivisionError when the denominator vanishes there.
    """
    point = tuple(GaussianRational.coerce(x) for x in point)
    if len(point) != 3:
        raise ValueError("point must be a (u, t, w) triple")
    d = f.den.evaluate(point)
    if not d:
        raise ZeroDivisionError("denominator vanishes at the evaluation point")
    return f.num.evaluate(point) / d


# shorthand constructors used throughout the package
u = RatFunc.var("u")
t = RatFunc.var("t")
w = RatFunc.var("w")


def q_power(half_steps: int) -> RatFunc:
    """``q^(half_steps/2)``, i.e. ``u**half_steps``."""
    return RatFunc.monomial((half_steps, 0, 0))


def quantum_integer(m: int) -> RatFunc:
    """``[m] = q^(m/2) - q^(-m/2)``."""
    return RatFunc(LaurentPoly({(m, 0, 0): 1, (-m, 0, 0): -1}))

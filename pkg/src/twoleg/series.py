"""Cut-and-join operator and the two-partition generating series.

The disconnected series is

    sum  chi_{nu+}(mu+)/z_{mu+} * chi_{nu-}(mu-)/z_{mu-}
         * t^kappa(nu+) * w^kappa(nu-) * W_{nu+,nu-} * p+_{mu+} p-_{mu-}

and the predictions G_{mu+,mu-} are the coefficients of its formal logarithm.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .arith import RatFunc, t, w
from .characters import chi
from .partitions import (
    EMPTY,
    Partition,
    enumerate_partitions,
    kappa,
    sub_multisets,
    union,
    z_order,
)
from .symfunc import POWER_SUM, SymFunc, expand_in_p, _add_into
from .wzw import w_one, w_pair

Pair = Tuple[Partition, Partition]

# A polynomial in one family of power sums is a p-basis SymFunc.
PPolynomial = SymFunc


class ConstantTermError(ValueError):
    pass


def _remove_part(mu: Partition, part: int) -> Tuple[int, ...]:
    parts = list(mu)
    parts.remove(part)
    return tuple(parts)


def _cut_join_monomial(mu: Partition) -> Dict[Partition, Fraction]:
    """K p_mu with K = 1/2 sum_{i,j} (ij p_{i+j} d_i d_j + (i+j) p_i p_j d_{i+j})."""
    out: Dict[Partition, Fraction] = {}
    mult = mu.multiplicities()
    # cut-and-glue: two parts i, j merge into i + j
    for i in mult:
        for j in mult:
            if i == j:
                ways = mult[i] * (mult[i] - 1)
            else:
                ways = mult[i] * mult[j]
            if not ways:
                continue
            rest = list(mu)
            rest.remove(i)
            rest.remove(j)
            key = Partition.from_parts(rest + [i + j])
            out[key] = out.get(key, Fraction(0)) + Fraction(i * j * ways, 2)
    # join-and-split: a part k splits into i + j
    for k, m in mult.items():
        rest = _remove_part(mu, k)
        for i in range(1, k):
            key = Partition.from_parts(rest + (i, k - i))
            out[key] = out.get(key, Fraction(0)) + Fraction(k * m, 2)
    return {k: v for k, v in out.items() if v}


def cut_join(f: SymFunc) -> SymFunc:
    """Apply the cut-and-join operator termwise in the power-sum basis."""
    fp = expand_in_p(f)
    terms: dict = {}
    for mu, c in fp.terms.items():
        for nu, k in _cut_join_monomial(mu).items():
            _add_into(terms, nu, c * k)
    out = SymFunc(POWER_SUM)
    out.terms = terms
    return out


class BiSeries:
    """Truncated series in two families of power sums.

    ``terms`` maps ``(mu+, mu-)`` to the coefficient of ``p+_{mu+} p-_{mu-}``.
    Only pairs with ``|mu+| + |mu-| <= cutoff`` are kept; when ``support`` is
    given the series lives in the quotient that keeps only those pairs, which
    must be closed under taking sub-multisets.
    """

    __slots__ = ("terms", "cutoff", "support")

    def __init__(self, terms: Dict[Pair, object] | None = None, cutoff: int = 0,
                 support: Optional[frozenset] = None):
        self.cutoff = cutoff
        self.support = support
        clean: dict = {}
        for (a, b), c in (terms or {}).items():
            key = (Partition(a), Partition(b))
            if self._keeps(key):
                _add_into(clean, key, c)
        self.terms: Dict[Pair, object] = clean

    def _keeps(self, key: Pair) -> bool:
        if key[0].size + key[1].size > self.cutoff:
            return False
        return self.support is None or key in self.support

    def _like(self, terms: dict) -> "BiSeries":
        out = BiSeries(cutoff=self.cutoff, support=self.support)
        out.terms = terms
        return out

    def __getitem__(self, key) -> object:
        a, b = key
        return self.terms.get((Partition(a), Partition(b)), RatFunc.const(0))

    def constant_term(self):
        return self.terms.get((EMPTY, EMPTY), 0)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(terms, k, c)
        return self._like(terms)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "BiSeries":
        return self._like({k: v * c for k, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return self.scale(other)
        terms: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                if a1.size + b1.size + a2.size + b2.size > self.cutoff:
                    continue
                key = (union(a1, a2), union(b1, b2))
                if self.support is not None and key not in self.support:
                    continue
                _add_into(terms, key, c1 * c2)
        return self._like(terms)

    def without_constant(self) -> "BiSeries":
        return self._like({k: v for k, v in self.terms.items() if k != (EMPTY, EMPTY)})

    def sorted_items(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0].size + kv[0][1].size, kv[0][0].size, kv[0][0], kv[0][1]),
        )

    def to_json(self) -> dict:
        def coeff(c):
            return c.to_json() if isinstance(c, RatFunc) else RatFunc.const(c).to_json()

        return {
            "cutoff": self.cutoff,
            "terms": [[list(a), list(b), coeff(c)] for (a, b), c in self.sorted_items()],
        }


def _is_one(c) -> bool:
    if isinstance(c, RatFunc):
        return c == 1
    return c == 1


def series_log(S: BiSeries) -> BiSeries:
    """Formal logarithm; requires constant term 1."""
    if not _is_one(S.constant_term()):
        raise ConstantTermError("log needs a series with constant term 1")
    X = S.without_constant()
    result = S._like({})
    power = X
    for n in range(1, S.cutoff + 1):
        if not power.terms:
            break
        result = result + power.scale(Fraction((-1) ** (n - 1), n))
        power = power * X
    return result


def series_exp(S: BiSeries) -> BiSeries:
    """Formal exponential; requires constant term 0."""
    c = S.constant_term()
    if c:
        raise ConstantTermError("exp needs a series with zero constant term")
    result = S._like({(EMPTY, EMPTY): RatFunc.const(1)})
    power = S._like({(EMPTY, EMPTY): RatFunc.const(1)})
    for n in range(1, S.cutoff + 1):
        power = power * S
        if not power.terms:
            break
        result = result + power.scale(Fraction(1, factorial(n)))
    return result


@lru_cache(maxsize=None)
def rhs_coefficient(mu_plus: Partition, mu_minus: Partition) -> RatFunc:
    """Coefficient of ``p+_{mu+} p-_{mu-}`` in the disconnected series."""
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    zp, zm = z_order(mu_plus), z_order(mu_minus)
    total = RatFunc.const(0)
    for nu_p in enumerate_partitions(mu_plus.size):
        cp = chi(nu_p, mu_plus)
        if not cp:
            continue
        for nu_m in enumerate_partitions(mu_minus.size):
            cm = chi(nu_m, mu_minus)
            if not cm:
                continue
            frame = t ** kappa(nu_p) * w ** kappa(nu_m)
            total = total + frame * w_pair(nu_p, nu_m) * Fraction(cp * cm, zp * zm)
    return total


def _pairs_up_to(D: int) -> Iterator[Pair]:
    for total in range(D + 1):
        for a in range(total + 1):
            for mp in enumerate_partitions(a):
                for mm in enumerate_partitions(total - a):
                    yield mp, mm


def divisor_support(mu_plus: Partition, mu_minus: Partition) -> frozenset:
    """All pairs of sub-multisets of ``(mu+, mu-)``."""
    return frozenset(product(sub_multisets(Partition(mu_plus)), sub_multisets(Partition(mu_minus))))


def rhs_series(D: int, support: Optional[Iterable[Pair]] = None) -> BiSeries:
    """Disconnected series truncated at total degree ``D``."""
    if D < 0:
        raise ValueError("cutoff must be nonnegative")
    support = frozenset(support) if support is not None else None
    pairs = support if support is not None else _pairs_up_to(D)
    terms = {}
    for mp, mm in pairs:
        if mp.size + mm.size <= D:
            terms[(mp, mm)] = rhs_coefficient(mp, mm)
    return BiSeries(terms, cutoff=D, support=support)


@lru_cache(maxsize=None)
def _g_predict(mu_plus: Partition, mu_minus: Partition) -> RatFunc:
    D = mu_plus.size + mu_minus.size
    support = divisor_support(mu_plus, mu_minus)
    return series_log(rhs_series(D, support))[mu_plus, mu_minus]


def g_predict(mu_plus: Partition, mu_minus: Partition, D: Optional[int] = None) -> RatFunc:
    """Connected coefficient G_{mu+,mu-} predicted by the disconnected series.

    ``D`` is the truncation degree; it must be at least ``|mu+| + |mu-|``.
    The coefficient is computed in the quotient by monomials that do not
    divide ``p+_{mu+} p-_{mu-}``, which gives the same value for every
    admissible ``D``.
    """
    mu_plus, mu_minus = Partition(mu_plus), Partition(mu_minus)
    if (mu_plus, mu_minus) == (EMPTY, EMPTY):
        raise ValueError("G is defined only for pairs that are not both empty")
    if D is None:
        D = mu_plus.size + mu_minus.size
    if D < mu_plus.size + mu_minus.size:
        raise ValueError(f"cutoff {D} is below |mu+| + |mu-| = {mu_plus.size + mu_minus.size}")
    return _g_predict(mu_plus, mu_minus)


def prediction_n1(n: int) -> RatFunc:
    """G_{(n),(1)} from the explicit subtracted form."""
    w1 = w_one(Partition((1,)))
    total = RatFunc.const(0)
    for nu in enumerate_partitions(n):
        c = chi(nu, Partition((n,)))
        if c:
            diff = w_pair(nu, Partition((1,))) - w_one(nu) * w1
            total = total + t ** kappa(nu) * diff * Fraction(c, n)
    return total


def prediction_n2(n: int, sign: int = -1) -> RatFunc:
    """G_{(n),(2)} (``sign=-1``) from the explicit subtracted form.

    With ``sign=+1`` this gives the first two sums of the (n),(1,1) formula.
    """
    P2, P11 = Partition((2,)), Partition((1, 1))
    total = RatFunc.const(0)
    for nu in enumerate_partitions(n):
        c = chi(nu, Partition((n,)))
        if not c:
            continue
        d2 = w_pair(nu, P2) - w_one(nu) * w_one(P2)
        d11 = w_pair(nu, P11) - w_one(nu) * w_one(P11)
        tk = t ** kappa(nu)
        total = total + tk * (w ** 2 * d2 + w ** -2 * d11 * sign) * Fraction(c, 2 * n)
    return total


def prediction_n11(n: int) -> RatFunc:
    """G_{(n),(1,1)} from the explicit subtracted form."""
    w1 = w_one(Partition((1,)))
    return prediction_n2(n, sign=+1) - prediction_n1(n) * w1


def marino_vafa_rhs(eta: Partition) -> RatFunc:
    """``sum_rho chi_rho(eta)/z_eta * t^kappa(rho) * W_rho``."""
    eta = Partition(eta)
    total = RatFunc.const(0)
    for rho in enumerate_partitions(eta.size):
        c = chi(rho, eta)
        if c:
            total = total + t ** kappa(rho) * w_one(rho) * Fraction(c, z_order(eta))
    return total


def marino_vafa_connected(eta: Partition) -> RatFunc:
    """Connected coefficient of ``p_eta`` in the one-partition series."""
    eta = Partition(eta)
    support = divisor_support(eta, EMPTY)
    S = BiSeries(
        {pair: marino_vafa_rhs(pair[0]) for pair in support},
        cutoff=eta.size,
        support=support,
    )
    return series_log(S)[eta, EMPTY]

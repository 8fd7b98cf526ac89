"""Symmetric functions in the power-sum and Schur bases, and their specializations.

Products are formed in the power-sum basis, where ``p_a * p_b = p_{a ∪ b}``;
the Schur basis is reached through character tables.  Infinite alphabets are
never materialized: every specialization goes through closed forms for
``h_k``, ``e_k`` or ``p_k``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from .arith import LaurentPoly, RatFunc, q_power
from .characters import chi
from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    hooks,
    n_stat,
    subdiagrams,
    union,
    z_order,
)

POWER_SUM = "p"
SCHUR = "s"


def _add_into(terms: dict, key, value) -> None:
    if not value:
        return
    old = terms.get(key)
    if old is None:
        terms[key] = value
    else:
        new = old + value
        if new:
            terms[key] = new
        else:
            del terms[key]


class SymFunc:
    """Finitely supported combination of ``p_mu`` or ``s_mu``.

    Coefficients are exact scalars (``Fraction``) or ``RatFunc`` values; the
    two mix freely.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Partition, object] | None = None):
        if basis not in (POWER_SUM, SCHUR):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for mu, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            _add_into(clean, Partition(mu), c)
        self.terms: Dict[Partition, object] = clean

    @classmethod
    def one(cls, basis: str = SCHUR) -> "SymFunc":
        return cls(basis, {EMPTY: 1})

    @classmethod
    def zero(cls, basis: str = SCHUR) -> "SymFunc":
        return cls(basis)

    @classmethod
    def p(cls, *parts: int) -> "SymFunc":
        return cls(POWER_SUM, {Partition.from_parts(parts): 1})

    @classmethod
    def s(cls, *parts: int) -> "SymFunc":
        return cls(SCHUR, {Partition(parts): 1})

    def __repr__(self):
        if not self.terms:
            return f"SymFunc({self.basis}: 0)"
        body = " + ".join(f"{c}*{self.basis}{mu}" for mu, c in self.sorted_items())
        return f"SymFunc({body})"

    def sorted_items(self) -> List[Tuple[Partition, object]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> List[int]:
        return sorted({mu.size for mu in self.terms})

    def in_basis(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        return expand_in_schur(self) if basis == SCHUR else expand_in_p(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc(self.basis, {EMPTY: other} if other else {})
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __neg__(self):
        return SymFunc(self.basis, {mu: -c for mu, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = SymFunc(self.basis, {EMPTY: other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        other = other.in_basis(self.basis)
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            _add_into(terms, mu, c)
        out = SymFunc(self.basis)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, RatFunc)):
            if not other:
                return SymFunc(self.basis)
            return SymFunc(self.basis, {mu: c * other for mu, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> dict:
        def coeff(c):
            if isinstance(c, RatFunc):
                return c.to_json()
            return RatFunc.const(c).to_json()

        return {
            "basis": "PowerSum" if self.basis == POWER_SUM else "Schur",
            "terms": [[list(mu), coeff(c)] for mu, c in self.sorted_items()],
        }


# -- change of basis ----------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_in_p_terms(nu: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    out = []
    for mu in enumerate_partitions(nu.size):
        c = chi(nu, mu)
        if c:
            out.append((mu, Fraction(c, z_order(mu))))
    return tuple(out)


@lru_cache(maxsize=None)
def _p_in_schur_terms(mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    return tuple(
        (nu, chi(nu, mu)) for nu in enumerate_partitions(mu.size) if chi(nu, mu)
    )


def schur_in_p(nu: Partition) -> SymFunc:
    """``s_nu = sum_mu chi_nu(mu)/z_mu * p_mu``."""
    return SymFunc(POWER_SUM, dict(_schur_in_p_terms(Partition(nu))))


def expand_in_p(f: SymFunc) -> SymFunc:
    if f.basis == POWER_SUM:
        return f
    terms: dict = {}
    for nu, c in f.terms.items():
        for mu, k in _schur_in_p_terms(nu):
            _add_into(terms, mu, c * k)
    out = SymFunc(POWER_SUM)
    out.terms = terms
    return out


def expand_in_schur(f: SymFunc) -> SymFunc:
    """Schur-basis form of ``f`` via ``p_mu = sum_nu chi_nu(mu) s_nu``."""
    if f.basis == SCHUR:
        return f
    terms: dict = {}
    for mu, c in f.terms.items():
        for nu, k in _p_in_schur_terms(mu):
            _add_into(terms, nu, c * k)
    out = SymFunc(SCHUR)
    out.terms = terms
    return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product computed on power-sum monomials, returned in ``f``'s basis."""
    fp, gp = expand_in_p(f), expand_in_p(g)
    terms: dict = {}
    for a, ca in fp.terms.items():
        for b, cb in gp.terms.items():
            _add_into(terms, union(a, b), ca * cb)
    out = SymFunc(POWER_SUM)
    out.terms = terms
    return out.in_basis(f.basis)


def h_sym(n: int) -> SymFunc:
    if n < 0:
        return SymFunc.zero(SCHUR)
    return SymFunc.s(n) if n else SymFunc.one()


def e_sym(n: int) -> SymFunc:
    if n < 0:
        return SymFunc.zero(SCHUR)
    return SymFunc.s(*([1] * n)) if n else SymFunc.one()


def omega(f: SymFunc) -> SymFunc:
    """The involution s_nu -> s_nu'."""
    fs = expand_in_schur(f)
    return SymFunc(SCHUR, {conjugate(nu): c for nu, c in fs.terms.items()})


# -- Littlewood–Richardson and skew Schur -------------------------------------

@lru_cache(maxsize=None)
def _lr(nu: Partition, rho: Partition) -> Tuple[Tuple[Partition, int], ...]:
    prod = multiply(schur_in_p(nu), schur_in_p(rho)).in_basis(SCHUR)
    out = []
    for mu, c in prod.terms.items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral LR coefficient for {nu}, {rho}, {mu}")
        out.append((mu, int(c)))
    return tuple(sorted(out, reverse=True))


def lr_coeffs(nu: Partition, rho: Partition) -> Dict[Partition, int]:
    """All c^mu_{nu rho} with ``s_nu s_rho = sum_mu c^mu_{nu rho} s_mu``."""
    return dict(_lr(Partition(nu), Partition(rho)))


@lru_cache(maxsize=None)
def _skew(mu: Partition, rho: Partition) -> Tuple[Tuple[Partition, int], ...]:
    if not mu.contains(rho):
        return ()
    out = []
    for theta in enumerate_partitions(mu.size - rho.size):
        c = dict(_lr(rho, theta)).get(mu, 0)
        if c:
            out.append((theta, c))
    return tuple(out)


def skew_schur(mu: Partition, rho: Partition) -> SymFunc:
    """``s_{mu/rho} = sum_theta c^mu_{rho theta} s_theta`` (zero unless rho ⊆ mu)."""
    return SymFunc(SCHUR, dict(_skew(Partition(mu), Partition(rho))))


def det(matrix: Sequence[Sequence[object]], one=1):
    """Determinant by cofactor expansion with memoized minors.

    Works over any commutative ring whose elements support ``+``, ``-``,
    ``*`` and truthiness.
    """
    n = len(matrix)
    if n == 0:
        return one
    memo: Dict[Tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        # determinant of rows row..n-1 restricted to the column bitmask
        if row == n:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = None
        sgn = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = matrix[row][j]
            if entry:
                term = entry * minor(row + 1, cols & ~(1 << j))
                if sgn < 0:
                    term = -term
                total = term if total is None else total + term
            sgn = -sgn
        if total is None:
            total = one * 0
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def jacobi_trudi(mu: Partition, rho: Partition, h: Callable[[int], object], one=1):
    """``det(h_{mu_i - rho_j - i + j})`` with ``h`` returning 0 for negative index."""
    n = max(len(mu), len(rho))
    mu = tuple(mu) + (0,) * (n - len(mu))
    rho = tuple(rho) + (0,) * (n - len(rho))
    matrix = [[h(mu[i] - rho[j] - i + j) for j in range(n)] for i in range(n)]
    return det(matrix, one)


def skew_schur_jt(mu: Partition, rho: Partition) -> SymFunc:
    """Determinantal route for ``s_{mu/rho}``, returned in the Schur basis."""
    mu, rho = Partition(mu), Partition(rho)
    if not mu.contains(rho):
        return SymFunc.zero(SCHUR)

    def h(k):
        return expand_in_p(h_sym(k)) if k >= 0 else SymFunc.zero(POWER_SUM)

    return expand_in_schur(jacobi_trudi(mu, rho, h, SymFunc.one(POWER_SUM)))


def skew_orthogonality_sum(mu: Partition, nu: Partition) -> SymFunc:
    """``sum_rho (-1)^|rho| s_{mu/rho} s_{rho'/nu'}`` in the Schur basis."""
    mu, nu = Partition(mu), Partition(nu)
    nu_c = conjugate(nu)
    total = SymFunc.zero(SCHUR)
    for rho in subdiagrams(mu):
        rho_c = conjugate(rho)
        if not rho_c.contains(nu_c):
            continue
        term = multiply(skew_schur(mu, rho), skew_schur(rho_c, nu_c))
        total = total - term if rho.size % 2 else total + term
    return total


# -- alphabets ----------------------------------------------------------------

def _one_minus_q(k: int) -> RatFunc:
    """``1 - q^k`` as a RatFunc."""
    return RatFunc(LaurentPoly({(0, 0, 0): 1, (2 * k, 0, 0): -1}))


@lru_cache(maxsize=None)
def _principal_h(k: int) -> RatFunc:
    if k < 0:
        return RatFunc.const(0)
    out = RatFunc.const(1)
    for i in range(1, k + 1):
        out = out / _one_minus_q(i)
    return out


@lru_cache(maxsize=None)
def _principal_inverse_h(k: int) -> RatFunc:
    # h_k(1, q^-1, q^-2, ...)
    if k < 0:
        return RatFunc.const(0)
    out = RatFunc.const(1)
    for i in range(1, k + 1):
        out = out / _one_minus_q(-i)
    return out


class Alphabet:
    """A (possibly infinite) set of monomial variables, known through h/e/p."""

    name = "alphabet"

    def h(self, k: int) -> RatFunc:
        raise NotImplementedError

    def e(self, k: int) -> RatFunc:
        raise NotImplementedError

    def p(self, k: int) -> RatFunc:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}()"


class Principal(Alphabet):
    """1, q, q^2, ..."""

    name = "principal"

    def h(self, k):
        return _principal_h(k)

    def e(self, k):
        if k < 0:
            return RatFunc.const(0)
        return q_power(k * (k - 1)) * _principal_h(k)

    def p(self, k):
        return RatFunc.const(1) / _one_minus_q(k)

    def __eq__(self, other):
        return type(other) is Principal

    def __hash__(self):
        return hash("principal")


class NegatedHalfShift(Alphabet):
    """-q^(1/2), -q^(3/2), ..."""

    name = "negated-half-shift"

    def h(self, k):
        if k < 0:
            return RatFunc.const(0)
        return q_power(k) * _principal_h(k) * (-1) ** k

    def e(self, k):
        if k < 0:
            return RatFunc.const(0)
        return q_power(k) * Principal().e(k) * (-1) ** k

    def p(self, k):
        return q_power(k) / _one_minus_q(k) * (-1) ** k

    def __eq__(self, other):
        return type(other) is NegatedHalfShift

    def __hash__(self):
        return hash("negated-half-shift")


class FiniteList(Alphabet):
    """Finitely many monomials, given as RatFunc values."""

    name = "finite"

    def __init__(self, letters: Iterable[RatFunc]):
        self.letters = tuple(letters)

    def h(self, k):
        if k < 0:
            return RatFunc.const(0)
        if not self.letters:
            return RatFunc.const(1 if k == 0 else 0)
        # h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n)
        table = [[RatFunc.const(1)] + [RatFunc.const(0)] * k]
        for x in self.letters:
            prev = table[-1]
            row = [RatFunc.const(1)]
            for j in range(1, k + 1):
                row.append(prev[j] + x * row[j - 1])
            table.append(row)
        return table[-1][k]

    def e(self, k):
        if k < 0 or k > len(self.letters):
            return RatFunc.const(0)
        row = [RatFunc.const(1)] + [RatFunc.const(0)] * k
        for x in self.letters:
            for j in range(k, 0, -1):
                row[j] = row[j] + x * row[j - 1]
        return row[k]

    def p(self, k):
        total = RatFunc.const(0)
        for x in self.letters:
            total = total + x ** k
        return total

    def __repr__(self):
        return f"FiniteList({[str(x) for x in self.letters]})"


class ShiftedByPartition(Alphabet):
    """q^(mu_1 - 1), q^(mu_2 - 2), ... (infinitely many letters)."""

    name = "shifted"

    def __init__(self, mu: Partition):
        self.mu = Partition(mu)
        ell = len(self.mu)
        self.head = FiniteList(q_power(2 * (m - i)) for i, m in enumerate(self.mu, start=1))
        self.tail_scale = -2 * (ell + 1)  # u-exponent of the first tail letter

    def _tail_h(self, k):
        # tail = q^-(l+1) * (1, q^-1, q^-2, ...)
        return q_power(self.tail_scale * k) * _principal_inverse_h(k)

    def _tail_e(self, k):
        if k < 0:
            return RatFunc.const(0)
        return q_power(self.tail_scale * k - k * (k - 1)) * _principal_inverse_h(k)

    def h(self, k):
        if k < 0:
            return RatFunc.const(0)
        total = RatFunc.const(0)
        for i in range(k + 1):
            total = total + self.head.h(i) * self._tail_h(k - i)
        return total

    def e(self, k):
        if k < 0:
            return RatFunc.const(0)
        total = RatFunc.const(0)
        for i in range(min(k, len(self.head.letters)) + 1):
            total = total + self.head.e(i) * self._tail_e(k - i)
        return total

    def p(self, k):
        tail = q_power(self.tail_scale * k) / _one_minus_q(-k)
        return self.head.p(k) + tail

    def __repr__(self):
        return f"ShiftedByPartition({list(self.mu)})"


def h_at(k: int, alphabet: Alphabet) -> RatFunc:
    return alphabet.h(k)


def e_at(k: int, alphabet: Alphabet) -> RatFunc:
    return alphabet.e(k)


# -- specializations ----------------------------------------------------------

@lru_cache(maxsize=None)
def principal_hook_content(mu: Partition) -> RatFunc:
    """``s_mu(1, q, q^2, ...) = q^n(mu) / prod_e (1 - q^h(e))``."""
    out = q_power(2 * n_stat(mu))
    for hook in hooks(mu):
        out = out / _one_minus_q(hook)
    return out


@lru_cache(maxsize=None)
def _inverse_principal_hook_content(mu: Partition) -> RatFunc:
    # s_mu(1, q^-1, q^-2, ...)
    out = q_power(-2 * n_stat(mu))
    for hook in hooks(mu):
        out = out / _one_minus_q(-hook)
    return out


def schur_at(nu: Partition, alphabet: Alphabet) -> RatFunc:
    """Jacobi–Trudi evaluation ``det(h_{nu_i - i + j}(A))``."""
    return jacobi_trudi(Partition(nu), EMPTY, alphabet.h, RatFunc.const(1))


def specialize(f: SymFunc, alphabet: Alphabet) -> RatFunc:
    """Value of ``f`` on ``alphabet`` through Jacobi–Trudi determinants."""
    total = RatFunc.const(0)
    for nu, c in expand_in_schur(f).terms.items():
        total = total + schur_at(nu, alphabet) * c
    return total


def specialize_power_sums(f: SymFunc, alphabet: Alphabet) -> RatFunc:
    """Same value as :func:`specialize`, computed from ``p_k`` closed forms."""
    pk: Dict[int, RatFunc] = {}
    total = RatFunc.const(0)
    for mu, c in expand_in_p(f).terms.items():
        term = RatFunc.const(1)
        for part in mu:
            if part not in pk:
                pk[part] = alphabet.p(part)
            term = term * pk[part]
        total = total + term * c
    return total


@lru_cache(maxsize=None)
def skew_principal(mu: Partition, rho: Partition) -> RatFunc:
    """``s_{mu/rho}(1, q, q^2, ...)``."""
    total = RatFunc.const(0)
    for theta, c in _skew(Partition(mu), Partition(rho)):
        total = total + principal_hook_content(theta) * c
    return total


@lru_cache(maxsize=None)
def emu_spec(nu: Partition, mu: Partition) -> RatFunc:
    """``s_nu(q^(mu_1 - 1), q^(mu_2 - 2), ...)``.

    Splits the alphabet into the finite head ``q^(mu_i - i)`` (i <= l(mu))
    and the geometric tail ``q^-j`` (j > l(mu)) and uses
    ``s_nu(A + B) = sum_rho s_{nu/rho}(A) s_rho(B)``.
    """
    nu, mu = Partition(nu), Partition(mu)
    ell = len(mu)
    head = FiniteList(q_power(2 * (m - i)) for i, m in enumerate(mu, start=1))
    total = RatFunc.const(0)
    for rho in subdiagrams(nu):
        skew = skew_schur(nu, rho)
        head_value = specialize(skew, head) if ell else (
            RatFunc.const(1) if rho == nu else RatFunc.const(0)
        )
        if not head_value:
            continue
        tail_value = q_power(-2 * (ell + 1) * rho.size) * _inverse_principal_hook_content(rho)
        total = total + head_value * tail_value
    return total

"""The Chern–Simons quantities W_mu and W_{mu,nu}, computed by several routes.

All values are rational functions of ``u = q^(1/2)`` alone.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .arith import RatFunc, q_power, quantum_integer
from .characters import chi
from .partitions import (
    Partition,
    enumerate_partitions,
    hooks,
    intersection,
    kappa,
    subdiagrams,
    union,
    z_order,
)
from .symfunc import (
    NegatedHalfShift,
    emu_spec,
    principal_hook_content,
    skew_principal,
    skew_schur,
    specialize,
)


class RouteMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


@lru_cache(maxsize=None)
def w_hook(mu: Partition) -> RatFunc:
    """``q^(kappa/4) / prod_e [h(e)]``."""
    out = q_power(kappa(mu) // 2)
    for h in hooks(mu):
        out = out / quantum_integer(h)
    return out


def w_schur(mu: Partition) -> RatFunc:
    """``(-1)^|mu| q^(kappa/2 + |mu|/2) s_mu(1, q, q^2, ...)``."""
    mu = Partition(mu)
    sign = -1 if mu.size % 2 else 1
    return q_power(kappa(mu) + mu.size) * principal_hook_content(mu) * sign


@lru_cache(maxsize=None)
def w_one(mu: Partition) -> RatFunc:
    mu = Partition(mu)
    value = w_hook(mu)
    if value != w_schur(mu):
        raise RouteMismatch(f"hook and Schur routes disagree for W_{mu}")
    return value


@lru_cache(maxsize=None)
def w_pair_def(mu: Partition, nu: Partition) -> RatFunc:
    """``q^(|nu|/2) W_mu s_nu(q^(mu_1-1), q^(mu_2-2), ...)``."""
    mu, nu = Partition(mu), Partition(nu)
    return q_power(nu.size) * w_one(mu) * emu_spec(nu, mu)


@lru_cache(maxsize=None)
def w_pair_skew(mu: Partition, nu: Partition) -> RatFunc:
    """Skew-Schur form, manifestly symmetric in ``mu`` and ``nu``."""
    mu, nu = Partition(mu), Partition(nu)
    total = RatFunc.const(0)
    for rho in subdiagrams(intersection(mu, nu)):
        term = skew_principal(mu, rho) * skew_principal(nu, rho)
        total = total + q_power(-2 * rho.size) * term
    sign = -1 if (mu.size + nu.size) % 2 else 1
    return q_power(kappa(mu) + kappa(nu) + mu.size + nu.size) * total * sign


def w_pair(mu: Partition, nu: Partition) -> RatFunc:
    """``W_{mu,nu}``; the skew route is the fast default."""
    return w_pair_skew(Partition(mu), Partition(nu))


def e_mu_key_identity(nu: Partition, mu: Partition) -> RatFunc:
    """Right-hand side of the skew-Schur expression for ``s_nu(E_mu)``."""
    mu, nu = Partition(mu), Partition(nu)
    total = RatFunc.const(0)
    for rho in subdiagrams(intersection(mu, nu)):
        term = skew_principal(mu, rho) * skew_principal(nu, rho)
        total = total + q_power(-2 * rho.size) * term
    total = total / principal_hook_content(mu)
    sign = -1 if nu.size % 2 else 1
    return q_power(kappa(nu)) * total * sign


@lru_cache(maxsize=None)
def tau_one_convolution(nu_plus: Partition, nu_minus: Partition) -> RatFunc:
    """Initial-value convolution at tau = 1 expressing W_{nu+,nu-} through W_nu."""
    nu_plus, nu_minus = Partition(nu_plus), Partition(nu_minus)
    d = nu_plus.size + nu_minus.size
    # rational weight of each W_nu q^(kappa_nu/2)
    weights: Dict[Partition, Fraction] = {}
    for mp in enumerate_partitions(nu_plus.size):
        cp = chi(nu_plus, mp)
        if not cp:
            continue
        for mm in enumerate_partitions(nu_minus.size):
            cm = chi(nu_minus, mm)
            if not cm:
                continue
            mu = union(mp, mm)
            scale = Fraction(cp * cm, z_order(mp) * z_order(mm))
            for nu in enumerate_partitions(d):
                c = chi(nu, mu)
                if c:
                    weights[nu] = weights.get(nu, Fraction(0)) + scale * c
    total = RatFunc.const(0)
    for nu in enumerate_partitions(d):
        c = weights.get(nu)
        if c:
            total = total + q_power(kappa(nu)) * w_one(nu) * c
    return q_power(-(kappa(nu_plus) + kappa(nu_minus))) * total


@lru_cache(maxsize=None)
def _neg_half_skew(mu: Partition, rho: Partition) -> RatFunc:
    return specialize(skew_schur(mu, rho), NegatedHalfShift())


@lru_cache(maxsize=None)
def tau_neg_one_coeff(nu_plus: Partition, nu_minus: Partition) -> RatFunc:
    """``sum_rho s_{nu+/rho}(-q^(1/2), -q^(3/2), ...) s_{nu-/rho}(same)``."""
    nu_plus, nu_minus = Partition(nu_plus), Partition(nu_minus)
    total = RatFunc.const(0)
    for rho in subdiagrams(intersection(nu_plus, nu_minus)):
        total = total + _neg_half_skew(nu_plus, rho) * _neg_half_skew(nu_minus, rho)
    return total


def w_difference(mu: Partition, nu: Partition) -> RatFunc:
    """``W_{mu,nu} - W_mu W_nu``."""
    return w_pair(mu, nu) - w_one(Partition(mu)) * w_one(Partition(nu))


# (mu, nu) pairs of the published difference table, in display order
TABLE_PAIRS: List[Tuple[Partition, Partition]] = [
    (Partition(m), Partition(n))
    for m, n in [
        ((1,), (1,)),
        ((2,), (1,)),
        ((1, 1), (1,)),
        ((3,), (1,)),
        ((2, 1), (1,)),
        ((1, 1, 1), (1,)),
        ((2,), (1, 1)),
        ((1, 1), (1, 1)),
        ((3,), (1, 1)),
        ((2, 1), (1, 1)),
        ((1, 1, 1), (1, 1)),
        ((2,), (2,)),
        ((3,), (2,)),
        ((1, 1, 1), (2,)),
    ]
]

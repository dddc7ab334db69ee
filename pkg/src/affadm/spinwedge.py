"""Subsets E of {1..4m}, the operator f_E -> sgn(sigma_E) f_{E-perp}, and the
wedge-side spin test for GU cosets.

Only subsets, counts and signs are handled; no exterior algebra is built.
Indices here are 1-based, matching the usual description of E.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .rootdata import pair_sum
from .weyl import WeylElement, mu_vector


def perp(m: int, E: Iterable[int]) -> frozenset:
    """E-perp = (4m+1-E)^c."""
    E = frozenset(E)
    return frozenset(range(1, 4 * m + 1)) - {4 * m + 1 - e for e in E}


def sigma_sign(m: int, E: Iterable[int]) -> int:
    """Sign of the permutation sending 1..2m onto E and 2m+1..4m onto E^c, in order."""
    E = sorted(E)
    seq = E + sorted(set(range(1, 4 * m + 1)) - set(E))
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def a_operator(m: int, E: Iterable[int]):
    E = frozenset(E)
    if len(E) != 2 * m or not E <= frozenset(range(1, 4 * m + 1)):
        raise ValueError(f"E must be a {2 * m}-element subset of 1..{4 * m}")
    return perp(m, E), sigma_sign(m, E)


class WedgeSpinData(NamedTuple):
    E: frozenset
    a: int
    a_perp: int
    spin_ok: bool


def e_set(m: int, mu: tuple, i: int) -> frozenset:
    """E_i for 0 <= i <= m, from mu = mu_i (0-based tuple)."""
    def val(j):
        return mu[j - 1]
    E = set()
    for j in range(1, 2 * m + 1):
        x = val(j)
        if j <= i:
            lower, upper = x == 0, x in (0, 1)
        elif j <= m:
            lower, upper = x in (0, 1), x == 0
        else:
            lower, upper = x == 0, x in (0, 1)
        if lower:
            E.add(j)
        if upper:
            E.add(2 * m + j)
    return frozenset(E)


def e_set_dual(m: int, mu: tuple, i: int) -> frozenset:
    """E_{2m-i} for 0 <= i <= m, from mu = mu_{2m-i}."""
    istar = 2 * m + 1 - i
    E = set()
    for j in range(1, 2 * m + 1):
        x = mu[j - 1]
        if j <= m:
            lower, upper = x == 0, x in (0, 1)
        elif j < istar:
            lower, upper = x in (0, 1), x == 0
        else:
            lower, upper = x == 0, x in (0, 1)
        if lower:
            E.add(j)
        if upper:
            E.add(2 * m + j)
    return frozenset(E)


def a_values(m: int, mu_i: tuple, mu_dual: tuple, i: int) -> tuple:
    """(a_i, a_i-perp, a_{2m-i}, a_{2m-i}-perp)."""
    n = 2 * m
    a = sum(1 for j in range(i + 1, m + 1) if mu_i[j - 1] in (0, 1))
    ap = sum(1 for j in range(i + 1, m + 1) if mu_i[n - j] not in (0, 1))
    b = -sum(1 for j in range(m + 1, 2 * m - i + 1) if mu_dual[j - 1] == 0)
    bp = -sum(1 for j in range(m + 1, 2 * m - i + 1) if mu_dual[n - j] != 0)
    return a, ap, b, bp


def wedge_ok_at(m: int, w: WeylElement, i: int, s: int) -> bool:
    n = 2 * m
    a, b = mu_vector(w, i), mu_vector(w, -i)
    p1 = all(0 <= a[j] <= 2 and a[j] + b[n - 1 - j] == 2 for j in range(n))
    return p1 and a.count(0) <= s


def wedge_spin_data(w: WeylElement, i: int, s: int) -> WedgeSpinData:
    """E_i, a_i, a_i-perp and the spin verdict at i, through the wedge route."""
    m = w.n // 2
    if not 0 <= i <= m:
        raise ValueError(f"i must lie in 0..{m}")
    if not wedge_ok_at(m, w, i, s):
        raise ValueError(f"not wedge-permissible at i={i}")
    mu = mu_vector(w, i)
    E = e_set(m, mu, i)
    a, ap, _, _ = a_values(m, mu, mu_vector(w, 2 * m - i), i)
    if a > ap:
        ok = True
    else:
        ok = sigma_sign(m, E) == (-1) ** s
    return WedgeSpinData(E, a, ap, ok)


def self_dual(mu: tuple) -> bool:
    return pair_sum(mu) == 2

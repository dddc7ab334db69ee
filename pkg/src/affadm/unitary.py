"""The ramified unitary group GU_{2m}: conditions P1-P3 and the transport to B_m.

Elements of the GU group are WeylElements of size 2m whose translation part
has even pair sum.  The transport is w -> f(z w z^-1) with
z = delta t_{-omega_m}, delta = (1,m+1)(2,m+2)...(m,2m), and f inserting the
middle coordinate d/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import admset
from .bruhat import min_coset_rep
from .rootdata import GroupKind, TypeB, TypeGU, labels_from, omega_vector, pair_sum, weyl_group
from .weyl import WeylElement, compose, inverse, kottwitz, mu_vectors, translation


@dataclass(frozen=True)
class Signature:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.s > self.r or (self.r + self.s) % 2:
            raise ValueError(f"invalid signature ({self.r},{self.s})")

    @property
    def m(self) -> int:
        return (self.r + self.s) // 2

    @classmethod
    def parse(cls, text: str) -> "Signature":
        r, s = (int(x) for x in str(text).split(","))
        return cls(r, s)


def signatures(m: int) -> list:
    return [Signature(2 * m - s, s) for s in range(m + 1)]


def mu_bar(sig: Signature) -> tuple:
    m, s = sig.m, sig.s
    return (2,) * s + (1,) * (2 * m - 2 * s) + (0,) * s


def mu_b(sig: Signature) -> tuple:
    m, s = sig.m, sig.s
    return (2,) * s + (1,) * (2 * m - 2 * s + 1) + (0,) * s


def delta(m: int) -> tuple:
    return tuple(list(range(m, 2 * m)) + list(range(m)))


def z_element(m: int) -> WeylElement:
    d = WeylElement((0,) * (2 * m), delta(m))
    return compose(d, translation(tuple(-x for x in omega_vector(2 * m, m))))


def gu_to_b(m: int, w: WeylElement) -> WeylElement:
    if w.n != 2 * m:
        raise ValueError(f"expected an element of size {2 * m}")
    z = z_element(m)
    x = compose(compose(z, w), inverse(z))
    d = pair_sum(x.v)
    v = x.v[:m] + (d // 2,) + x.v[m:]
    sigma = tuple(t if t < m else t + 1 for t in x.sigma[:m]) + (m,) + \
        tuple(t if t < m else t + 1 for t in x.sigma[m:])
    return WeylElement(v, sigma)


def b_to_gu(m: int, w: WeylElement) -> WeylElement:
    if w.n != 2 * m + 1 or w.sigma[m] != m:
        raise ValueError("not an element of the type B group")
    v = w.v[:m] + w.v[m + 1:]
    sigma = tuple(t if t < m else t - 1 for t in w.sigma[:m] + w.sigma[m + 1:])
    x = WeylElement(v, sigma)
    z = z_element(m)
    return compose(compose(inverse(z), x), z)


def b_levels(m: int, I) -> frozenset:
    """I -> m - I."""
    return frozenset(str(m - int(k)) for k in I)


# ---------------------------------------------------------------------------
# P1-P3

class Flags(NamedTuple):
    naive: bool
    wedge: bool
    spin: bool


def _p_conditions(m, mus, i, s):
    n = 2 * m
    a, b = mus[i % n], mus[(-i) % n]
    p1 = all(0 <= a[j] <= 2 and a[j] + b[n - 1 - j] == 2 for j in range(n))
    zeros = a.count(0)
    p2 = zeros <= s
    p3 = True
    if pair_sum(a) == 2 and zeros % 2 != s % 2:
        p3 = any(a[j] == 1 for j in range(i, n - i))
    return p1, p2, p3


def gu_permissibility_flags(w: WeylElement, I, sig: Signature, congruence: bool = True) -> Flags:
    """Cumulative (naive, wedge, spin) flags of the coset w W_I.

    With congruence=False the W_aff congruence clause of P1 is dropped.
    """
    m = sig.m
    kind = TypeGU(m)
    I = admset.normalize_levels(kind, I)[0]
    mus = mu_vectors(w)
    naive = wedge = spin = True
    for k in I:
        p1, p2, p3 = _p_conditions(m, mus, int(k), sig.s)
        naive &= p1
        wedge &= p2
        spin &= p3
    if congruence and str(m) not in I:
        naive &= kottwitz(kind, w) == kottwitz(kind, translation(mu_bar(sig)))
    wedge &= naive
    spin &= wedge
    return Flags(naive, wedge, spin)


@lru_cache(maxsize=None)
def gu_pool(m: int) -> tuple:
    """GU elements with d = 2 and translation entries in [-1, 3]."""
    import itertools
    out = []
    for half in itertools.product(range(-1, 4), repeat=m):
        v = half + tuple(2 - x for x in reversed(half))
        out += [WeylElement(v, s) for s in weyl_group(TypeGU(m))]
    return tuple(out)


def gu_flag_set(m: int, sig: Signature, I, J=None, flag: str = "spin", congruence: bool = True) -> frozenset:
    """Minimal (W_J, W_I)-reps of the GU cosets whose given flag is true."""
    kind = TypeGU(m)
    I = labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    admset.normalize_levels(kind, I, J)
    idx = Flags._fields.index(flag)
    return frozenset(min_coset_rep(kind, w, I, J) for w in gu_pool(m)
                     if gu_permissibility_flags(w, I, sig, congruence)[idx])


def gu_spin_permissible_set(m: int, sig: Signature, I, J=None) -> admset.AdmReport:
    kind = TypeGU(m)
    I = labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    reps = gu_flag_set(m, sig, I, J)
    return admset._report(kind, mu_bar(sig), I, J, "gu-spin", reps)


def gu_admissible_set(m: int, sig: Signature, I, J=None) -> admset.AdmReport:
    """Admissible set for {mu_{r,s}}, computed on the B_m side and pulled back."""
    if sig.m != m:
        raise ValueError("signature does not match m")
    kind = TypeGU(m)
    I = labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    admset.normalize_levels(kind, I, J)
    rep = admset.admissible_set(TypeB(m), mu_b(sig), b_levels(m, I), b_levels(m, J))
    reps = frozenset(b_to_gu(m, w) for w in rep.reps)
    return admset._report(kind, mu_bar(sig), I, J, "gu-adm-via-B", reps,
                          transport=f"B{m} levels I={sorted(rep.I)} J={sorted(rep.J)}")


def gu_kind(m: int) -> GroupKind:
    return TypeGU(m)

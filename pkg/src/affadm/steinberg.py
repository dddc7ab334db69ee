"""B_m as the fixed points of the middle swap in D_{m+1}.

The embedding duplicates the middle coordinate and extends permutations so
that the two middle indices are fixed or swapped, whichever makes the result
even.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import admset
from .bruhat import (bruhat_leq, elements_up_to_length, min_coset_rep,
                     parabolic_subgroup)
from .rootdata import TypeB, TypeD, mu_shape, perm_sign
from .weyl import WeylElement, mu_vector, translation


def iota(v) -> tuple:
    m = len(v) // 2
    return tuple(v[:m + 1]) + tuple(v[m:])


def _extend(t: int, m: int) -> int:
    return t if t < m else t + 1


def embed_b_in_d(m: int, w: WeylElement) -> WeylElement:
    if w.n != 2 * m + 1 or w.sigma[m] != m:
        raise ValueError("not an element of the type B group")
    sigma = [0] * (2 * m + 2)
    for j in range(2 * m + 1):
        if j != m:
            sigma[_extend(j, m)] = _extend(w.sigma[j], m)
    sigma[m], sigma[m + 1] = m, m + 1
    if perm_sign(sigma) != 1:
        sigma[m], sigma[m + 1] = m + 1, m
    return WeylElement(iota(w.v), sigma)


def in_image(m: int, x: WeylElement) -> bool:
    """mu_k^x agrees at the two middle indices for 0 <= k <= m."""
    return all(mu[m] == mu[m + 1] for mu in (mu_vector(x, k) for k in range(m + 1)))


def restrict_d_to_b(m: int, x: WeylElement):
    if x.n != 2 * m + 2 or not in_image(m, x):
        return None
    if {x.sigma[m], x.sigma[m + 1]} != {m, m + 1}:
        return None
    back = lambda t: t if t < m else t - 1
    v = x.v[:m + 1] + x.v[m + 2:]
    sigma = tuple(back(x.sigma[j]) for j in range(m)) + (m,) + \
        tuple(back(x.sigma[j]) for j in range(m + 2, 2 * m + 2))
    w = WeylElement(v, sigma)
    return w if embed_b_in_d(m, w) == x else None


def level_tilde(m: int, I) -> frozenset:
    I = admset.labels_from(TypeB(m), I)
    if not admset.level_is_valid(TypeB(m), I):
        raise admset.InvalidLevelError(f"invalid type B level {sorted(I)}")
    return I | {str(m + 1)} if str(m) in I else I


# ---------------------------------------------------------------------------

@dataclass
class InheritanceReport:
    m: int
    length_bound: int
    pairs_checked: int = 0
    reps_checked: int = 0
    violations: list = field(default_factory=list)

    def to_dict(self):
        return {"m": self.m, "length_bound": self.length_bound, "pairs_checked": self.pairs_checked,
                "reps_checked": self.reps_checked, "violations": self.violations}


def _omega_b(m: int) -> list:
    n = 2 * m + 1
    ident = WeylElement((0,) * n, tuple(range(n)))
    t0 = WeylElement((-1,) + (0,) * (n - 2) + (1,), (n - 1,) + tuple(range(1, n - 1)) + (0,))
    return [ident, t0]


def check_inheritance(m: int, length_bound: int, levels: bool = True, samples: int = 0, seed: int = 0) -> InheritanceReport:
    B, D = TypeB(m), TypeD(m + 1)
    rep = InheritanceReport(m, length_bound)
    layers = elements_up_to_length(B, length_bound, _omega_b(m))
    elems = sorted(set().union(*layers.values()))
    image = {w: embed_b_in_d(m, w) for w in elems}
    for w in elems:
        for x in elems:
            rep.pairs_checked += 1
            if bruhat_leq(B, w, x) != bruhat_leq(D, image[w], image[x]):
                rep.violations.append(("order", str(w), str(x)))
    if samples:
        rng = random.Random(seed)
        longer = elements_up_to_length(B, length_bound + 3, _omega_b(m))
        pool = sorted(set().union(*longer.values()))
        for _ in range(samples):
            w, x = rng.choice(pool), rng.choice(pool)
            rep.pairs_checked += 1
            if bruhat_leq(B, w, x) != bruhat_leq(D, embed_b_in_d(m, w), embed_b_in_d(m, x)):
                rep.violations.append(("order", str(w), str(x)))
    if levels:
        for I, J in admset.level_pairs(B):
            It, Jt = level_tilde(m, I), level_tilde(m, J)
            for w in elems:
                rep.reps_checked += 1
                lo = min_coset_rep(D, image[w], It, Jt)
                if lo != embed_b_in_d(m, min_coset_rep(B, w, I, J)):
                    rep.violations.append(("min-rep", sorted(I), sorted(J), str(w)))
        for I in admset.all_levels(B):
            WB = {embed_b_in_d(m, w) for w in parabolic_subgroup(B, I)}
            WD = {x for x in parabolic_subgroup(D, level_tilde(m, I)) if restrict_d_to_b(m, x) is not None}
            if WB != WD:
                rep.violations.append(("parahoric", sorted(I)))
    return rep


@dataclass
class IntersectionReport:
    m: int
    q: int
    I: list
    J: list
    b_side: int = 0
    d_side: int = 0
    adm_equal: bool = False
    sperm_equal: bool = False
    perm_equal: bool = False
    automatic_spin: bool = True
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.adm_equal and self.sperm_equal and self.perm_equal and self.automatic_spin

    def to_dict(self):
        return dict(self.__dict__)


def _restricted(m, reps):
    out = set()
    for x in reps:
        w = restrict_d_to_b(m, x)
        if w is not None:
            out.add(w)
    return frozenset(out)


def check_adm_intersection(m: int, q: int, I=None, J=None) -> IntersectionReport:
    """Adm, SPerm and Perm on B_m against the fixed part of those on D_{m+1}.

    This certifies the fixed-point statement only for B_m inside D_{m+1} at
    the ranks it is run on.
    """
    B, D = TypeB(m), TypeD(m + 1)
    I = admset.iwahori(B) if I is None else admset.labels_from(B, I)
    J = I if J is None else admset.labels_from(B, J)
    It, Jt = level_tilde(m, I), level_tilde(m, J)
    muB = mu_shape(B, q)
    muD = iota(muB)
    rep = IntersectionReport(m, q, admset.sort_labels(I), admset.sort_labels(J))
    a_b = admset.admissible_set(B, muB, I, J).reps
    a_d = _restricted(m, admset.admissible_set(D, muD, It, Jt).reps)
    rep.b_side, rep.d_side = len(a_b), len(a_d)
    rep.adm_equal = a_b == a_d
    rep.sperm_equal = admset.spin_permissible_set(B, muB, I, J).reps == \
        _restricted(m, admset.spin_permissible_set(D, muD, It, Jt).reps)
    rep.perm_equal = admset.permissible_set(B, muB, I, J).reps == \
        _restricted(m, admset.permissible_set(D, muD, It, Jt).reps)
    if str(m) in I:
        target = admset.kottwitz(B, translation(muB))
        for w in admset.candidate_pool(B, muB, False):
            s1, s2, s3 = admset.sp_conditions(B, w, m, muB)
            if s1 and s2 and admset.kottwitz(B, w) == target:
                x = embed_b_in_d(m, w)
                if not s3 or not all(admset.sp_conditions(D, x, m + 1, muD)):
                    rep.automatic_spin = False
                    rep.violations.append(("automatic-spin", str(w)))
    return rep


# the element of W_{B_3} that is permissible but not admissible for q = 3
B3_WITNESS = WeylElement((2, 1, 1, 1, 1, 1, 0), (0, 5, 4, 3, 2, 1, 6))


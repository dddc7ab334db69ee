"""Shared strategies and brute-force oracles for the test suite."""
from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from affadm.bruhat import simple_reflection_elements
from affadm.rootdata import (Family, GroupKind, is_in_closed_alcove, pair_sum,
                             reference_point, weyl_group)
from affadm.weyl import WeylElement, act_point, compose, kottwitz

FUZZ = settings(max_examples=1000, derandomize=True, deadline=None,
                suppress_health_check=list(HealthCheck))
QUICK = settings(max_examples=200, derandomize=True, deadline=None,
                 suppress_health_check=list(HealthCheck))


def lattice_vector(kind: GroupKind, half, d: int) -> tuple:
    mid = (d // 2,) if kind.family is Family.B else ()
    return tuple(half) + mid + tuple(d - x for x in reversed(half))


@st.composite
def elements(draw, kind: GroupKind, lo: int = -2, hi: int = 4, d=None):
    """A random element of the extended affine Weyl group of kind."""
    if d is None:
        d = draw(st.integers(-1, 3))
    if kind.family is not Family.D:
        d = 2 * (d // 2)
    half = draw(st.lists(st.integers(lo, hi), min_size=kind.m, max_size=kind.m))
    sigma = draw(st.sampled_from(weyl_group(kind)))
    return WeylElement(lattice_vector(kind, half, d), sigma)


def kinds(families=("D", "B"), max_m=3):
    out = []
    for fam in families:
        lo = 2 if fam == "D" else 1
        out += [GroupKind(fam, m) for m in range(lo, max_m + 1)]
    return st.sampled_from(out)


@st.composite
def kind_and_element(draw, families=("D", "B"), max_m=3, **kw):
    kind = draw(kinds(families, max_m))
    return kind, draw(elements(kind, **kw))


# ---------------------------------------------------------------------------
# word-length oracle

def _fixes_base_alcove(kind, x):
    den, P = reference_point(kind)
    p = tuple(Fraction(a, den) for a in P)
    return is_in_closed_alcove(kind, act_point(x, p))


def length_zero_elements(kind: GroupKind, d: int) -> list:
    """Elements with pair sum d that carry the base alcove to itself."""
    c = d // 2
    out = []
    for half in itertools.product(range(c - 2, c + 3), repeat=kind.m):
        v = lattice_vector(kind, half, d)
        out += [x for x in (WeylElement(v, s) for s in weyl_group(kind)) if _fixes_base_alcove(kind, x)]
    return out


def word_length(kind: GroupKind, w: WeylElement, cap: int = 16) -> int:
    """Fewest simple reflections s_1..s_l with w = s_1...s_l tau, tau of length 0."""
    gens = simple_reflection_elements(kind)
    target = kottwitz(kind, w)
    taus = [t for t in length_zero_elements(kind, pair_sum(w.v)) if kottwitz(kind, t) == target]
    seen = {t: 0 for t in taus}
    queue = deque(taus)
    while queue:
        y = queue.popleft()
        if y == w:
            return seen[y]
        if seen[y] >= cap:
            continue
        for s in gens:
            z = compose(s, y)
            if z not in seen:
                seen[z] = seen[y] + 1
                queue.append(z)
    raise AssertionError(f"{w} not reached within {cap} letters")


def brute_double_coset(w, WJ, WI) -> set:
    return {compose(compose(a, w), b) for a in WJ for b in WI}


def coroot_span_b1(bound: int = 6) -> set:
    """Translations generated by the B_1 affine reflections, listed by hand.

    The only root pair is (1, 3) with hyperplanes x_1 - x_3 in 2Z; the
    reflection at level K translates by K(e_1 - e_3), so the span is
    Z(2, 0, -2).
    """
    return {(2 * c, 0, -2 * c) for c in range(-bound, bound + 1)}

"""Length, reflections, Bruhat order and minimal double-coset representatives.

Everything is computed geometrically from the generic reference point p of
the base alcove: the hyperplanes separating p from w(p) are counted or
enumerated per root family.  Coordinates are scaled integers (den * x).
"""
from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .rootdata import (AffineRoot, GroupKind, base_point, hyperplane,
                       labels_from, reference_point, root_families)
from .weyl import WeylElement, compose, inverse, kottwitz


class Reflection(NamedTuple):
    """Internal handle: root family index and the level K of x_i - x_j = K."""
    root: int
    level: int


class _Geometry:
    def __init__(self, kind: GroupKind):
        self.kind = kind
        self.n = kind.n
        self.den, self.P = reference_point(kind)
        n, den, P = self.n, self.den, self.P
        self.fams = []
        for f in root_families(kind):
            i, j = f.i, f.j
            pair = j == n - 1 - i
            self.fams.append((i, j, n - 1 - i, n - 1 - j, pair, f.step, f.offset))
        # level index of the reference point per family: levels off + step*t with t <= g lie below
        self.g0 = [self._gidx(k, P[f[0]] - P[f[1]]) for k, f in enumerate(self.fams)]

    def _gidx(self, k, a_scaled):
        f = self.fams[k]
        step, off = f[5], f[6]
        return (a_scaled - off * self.den) // (step * self.den)

    def image_of_p(self, w):
        den, P = self.den, self.P
        out = [0] * self.n
        v = w.v
        for j, t in enumerate(w.sigma):
            out[t] = P[j] + den * v[t]
        return out

    def length(self, w):
        wp = self.image_of_p(w)
        total = 0
        den = self.den
        for k, (i, j, _, _, _, step, off) in enumerate(self.fams):
            g = (wp[i] - wp[j] - off * den) // (step * den)
            total += abs(g - self.g0[k])
        return total

    def separating(self, w):
        """Reflections whose hyperplanes separate p from w(p)."""
        wp = self.image_of_p(w)
        den = self.den
        out = []
        for k, (i, j, _, _, _, step, off) in enumerate(self.fams):
            g = (wp[i] - wp[j] - off * den) // (step * den)
            g0 = self.g0[k]
            lo, hi = (g0, g) if g > g0 else (g, g0)
            for t in range(lo + 1, hi + 1):
                out.append(Reflection(k, off + step * t))
        return out

    def separates(self, r, w):
        i, j = self.fams[r.root][0], self.fams[r.root][1]
        den = self.den
        a = self.P[i] - self.P[j] - r.level * den
        wp = self.image_of_p(w)
        b = wp[i] - wp[j] - r.level * den
        return (a > 0) != (b > 0)

    def left_mult(self, r, w):
        """r * w for the reflection r."""
        i, j, si, sj, pair, _, _ = self.fams[r.root]
        K = r.level
        v = list(w.v)
        if pair:
            v[i], v[si] = v[si] + K, v[i] - K
            swap = {i: si, si: i}
        else:
            v[i], v[j], v[si], v[sj] = v[j] + K, v[i] - K, v[sj] - K, v[si] + K
            swap = {i: j, j: i, si: sj, sj: si}
        sigma = tuple(swap.get(t, t) for t in w.sigma)
        return WeylElement(v, sigma)

    def as_element(self, r):
        return self.left_mult(r, WeylElement((0,) * self.n, tuple(range(self.n))))

    def point_value(self, r, point):
        i, j = self.fams[r.root][0], self.fams[r.root][1]
        return Fraction(point[i]) - Fraction(point[j])


@lru_cache(maxsize=None)
def geometry(kind: GroupKind) -> _Geometry:
    return _Geometry(kind)


def length(kind: GroupKind, w: WeylElement) -> int:
    return geometry(kind).length(w)


def reflection(kind: GroupKind, root: AffineRoot) -> WeylElement:
    k, level = hyperplane(kind, root)
    return geometry(kind).as_element(Reflection(k, level))


def reflection_spec(kind: GroupKind, r: Reflection) -> AffineRoot:
    g = geometry(kind)
    f = g.fams[r.root]
    return AffineRoot(f[0] + 1, f[1] + 1, r.level)


def separating_reflections(kind: GroupKind, w: WeylElement) -> list:
    return geometry(kind).separating(w)


@lru_cache(maxsize=None)
def simple_reflections(kind: GroupKind) -> tuple:
    """Reflections in the walls of the base alcove, as Reflection handles."""
    g = geometry(kind)
    out = []
    for k, f in enumerate(g.fams):
        step, off = f[5], f[6]
        for t in (g.g0[k], g.g0[k] + 1):
            r = Reflection(k, off + step * t)
            if g.length(g.as_element(r)) == 1:
                out.append(r)
    return tuple(out)


def simple_reflection_elements(kind: GroupKind) -> list:
    g = geometry(kind)
    return [g.as_element(r) for r in simple_reflections(kind)]


def left_descents(kind: GroupKind, w: WeylElement) -> list:
    g = geometry(kind)
    return [r for r in simple_reflections(kind) if g.separates(r, w)]


def right_descents(kind: GroupKind, w: WeylElement) -> list:
    return left_descents(kind, inverse(w))


def left_multiply(kind: GroupKind, r: Reflection, w: WeylElement) -> WeylElement:
    return geometry(kind).left_mult(r, w)


def right_multiply(kind: GroupKind, w: WeylElement, r: Reflection) -> WeylElement:
    return compose(w, geometry(kind).as_element(r))


# ---------------------------------------------------------------------------
# Bruhat order

def bruhat_leq(kind: GroupKind, w: WeylElement, x: WeylElement) -> bool:
    """w <= x, by descending x along left descents (lifting property)."""
    if kottwitz(kind, w) != kottwitz(kind, x):
        return False
    g = geometry(kind)
    simples = simple_reflections(kind)
    lw, lx = g.length(w), g.length(x)
    while True:
        if lw > lx:
            return False
        if lx == 0:
            return w == x
        s = next(r for r in simples if g.separates(r, x))
        x = g.left_mult(s, x)
        lx -= 1
        if g.separates(s, w):
            w = g.left_mult(s, w)
            lw -= 1


def covers_down(kind: GroupKind, w: WeylElement) -> list:
    """Elements r*w with r a reflection and l(r*w) = l(w) - 1."""
    g = geometry(kind)
    lw = g.length(w)
    out = []
    for r in g.separating(w):
        y = g.left_mult(r, w)
        if g.length(y) == lw - 1:
            out.append(y)
    return out


def _lower_set_serial(kind, seeds):
    g = geometry(kind)
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        y = queue.popleft()
        for r in g.separating(y):
            z = g.left_mult(r, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def _lower_set_chunk(args):
    kind, seeds = args
    return _lower_set_serial(kind, seeds)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("AFFADM_THREADS", "1")))
    except ValueError:
        return 1


def lower_set(kind: GroupKind, seeds: Iterable[WeylElement], workers: int = None) -> frozenset:
    """{w : w <= x for some seed x}.

    Every y < x is reachable by a chain of reflections whose hyperplanes
    separate the base alcove from the current alcove, so the BFS closes under
    those moves.  Seeds are split across processes when workers > 1.
    """
    seeds = list(seeds)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(seeds) < 2:
        return frozenset(_lower_set_serial(kind, seeds))
    chunks = [(kind, seeds[i::workers]) for i in range(workers) if seeds[i::workers]]
    out = set()
    with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
        for part in ex.map(_lower_set_chunk, chunks):
            out |= part
    return frozenset(out)


# ---------------------------------------------------------------------------
# reduced words and the subword oracle

def reduced_word(kind: GroupKind, x: WeylElement):
    """x = s_1 s_2 ... s_l tau with tau of length 0.  Returns ([s_1..s_l], tau)."""
    g = geometry(kind)
    simples = simple_reflections(kind)
    word = []
    while True:
        s = next((r for r in simples if g.separates(r, x)), None)
        if s is None:
            return word, x
        word.append(s)
        x = g.left_mult(s, x)


def subword_lower_set(kind: GroupKind, x: WeylElement) -> frozenset:
    """All products of subwords of a reduced word of x, times its length-0 part."""
    g = geometry(kind)
    word, tau = reduced_word(kind, x)
    acc = {tau}
    for s in reversed(word):
        acc |= {g.left_mult(s, y) for y in acc}
    return frozenset(acc)


def bruhat_leq_subword(kind: GroupKind, w: WeylElement, x: WeylElement) -> bool:
    return w in subword_lower_set(kind, x)


def length_zero_part(kind: GroupKind, w: WeylElement) -> WeylElement:
    return reduced_word(kind, w)[1]


def elements_up_to_length(kind: GroupKind, bound: int, taus: Iterable[WeylElement]) -> dict:
    """Map length -> set of elements of length <= bound in the cosets of taus."""
    g = geometry(kind)
    simples = simple_reflections(kind)
    layers = {0: set(taus)}
    seen = set(layers[0])
    for ell in range(1, bound + 1):
        nxt = set()
        for y in layers[ell - 1]:
            for s in simples:
                z = g.left_mult(s, y)
                if z not in seen and not g.separates(s, y):
                    nxt.add(z)
        seen |= nxt
        layers[ell] = nxt
    return layers


# ---------------------------------------------------------------------------
# parahoric subgroups and minimal double-coset representatives

@lru_cache(maxsize=None)
def _level_generators(kind: GroupKind, labels: frozenset) -> tuple:
    g = geometry(kind)
    pts = [base_point(kind, lab) for lab in labels]
    return tuple(r for r in simple_reflections(kind)
                 if all(g.point_value(r, p) == r.level for p in pts))


def level_generators(kind: GroupKind, labels) -> tuple:
    """Simple reflections generating the pointwise fixer of the given vertices."""
    if not isinstance(labels, frozenset):
        labels = labels_from(kind, labels)
    return _level_generators(kind, labels)


def min_coset_rep(kind: GroupKind, w: WeylElement, I, J) -> WeylElement:
    """Minimal element of W_J w W_I."""
    g = geometry(kind)
    left = level_generators(kind, J)
    right = level_generators(kind, I)
    if not left and not right:
        return w
    changed = True
    while changed:
        changed = False
        for s in left:
            if g.separates(s, w):
                w = g.left_mult(s, w)
                changed = True
        if right:
            wi = inverse(w)
            moved = False
            for s in right:
                if g.separates(s, wi):
                    wi = g.left_mult(s, wi)
                    moved = True
            if moved:
                w = inverse(wi)
                changed = True
    return w


def parabolic_subgroup(kind: GroupKind, labels) -> frozenset:
    """All elements of W_I, generated from its simple reflections."""
    g = geometry(kind)
    gens = level_generators(kind, labels)
    e = WeylElement((0,) * kind.n, tuple(range(kind.n)))
    seen = {e}
    queue = deque([e])
    while queue:
        y = queue.popleft()
        for s in gens:
            z = g.left_mult(s, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return frozenset(seen)

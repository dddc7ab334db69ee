"""Root-datum contexts for types D_m, B_m and the ramified unitary group GU_{2m}.

All indices are 0-based internally.  Vectors are plain tuples of ints (lattice
vectors) or Fractions (apartment points).  The star involution is j -> n-1-j.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class Family(enum.Enum):
    D = "D"
    B = "B"
    GU = "GU"


class InvalidLabelError(ValueError):
    pass


@dataclass(frozen=True)
class GroupKind:
    family: Family
    m: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        lo = 2 if self.family is Family.D else 1
        if not isinstance(self.m, int) or self.m < lo:
            raise ValueError(f"type {self.family.value} needs m >= {lo}, got {self.m!r}")

    @property
    def n(self) -> int:
        return 2 * self.m + 1 if self.family is Family.B else 2 * self.m

    def star(self, j: int) -> int:
        return self.n - 1 - j

    def __str__(self):
        return f"{self.family.value}{self.m}"


def TypeD(m: int) -> GroupKind:
    return GroupKind(Family.D, m)


def TypeB(m: int) -> GroupKind:
    return GroupKind(Family.B, m)


def TypeGU(m: int) -> GroupKind:
    return GroupKind(Family.GU, m)


# ---------------------------------------------------------------------------
# lattices

def omega_vector(n: int, i: int) -> tuple:
    """omega_i = ((-1)^(c), 0^(n-c)) - b for i = n*b + c with 0 <= c < n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    b, c = divmod(i, n)
    return tuple((-1 if j < c else 0) - b for j in range(n))


def pair_sum(v: Sequence) -> object:
    """Return d if v + v* = d*1, else None."""
    n = len(v)
    d = v[0] + v[n - 1]
    for j in range(n // 2 + 1):
        if v[j] + v[n - 1 - j] != d:
            return None
    return d


def in_lattice(kind: GroupKind, v: Sequence[int]) -> bool:
    if len(v) != kind.n or any(not isinstance(x, int) for x in v):
        return False
    d = pair_sum(v)
    if d is None:
        return False
    if kind.family is Family.GU and d % 2:
        return False
    return True


def in_coroot_lattice(kind: GroupKind, v: Sequence[int]) -> bool:
    if kind.family is Family.GU:
        raise ValueError("coroot lattice membership is not exposed for GU; use the Kottwitz invariant")
    if len(v) != kind.n:
        raise ValueError(f"expected a vector of length {kind.n}")
    if pair_sum(v) != 0:
        return False
    return sum(v[: kind.m]) % 2 == 0


def mu_shape(kind: GroupKind, q: int) -> tuple:
    """(2^(q), 1^(n-2q), 0^(q))."""
    if not 0 <= 2 * q <= kind.n:
        raise ValueError(f"q={q} out of range for n={kind.n}")
    return (2,) * q + (1,) * (kind.n - 2 * q) + (0,) * q


# ---------------------------------------------------------------------------
# finite Weyl groups, stored as 0-based image tuples

def perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    flips = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, size = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            size += 1
        flips += size - 1
    return -1 if flips % 2 else 1


def signed_permutations(n: int):
    """All of S_n^*: permutations commuting with j -> n-1-j."""
    m = n // 2
    out = []
    for pi in itertools.permutations(range(m)):
        for flips in itertools.product((False, True), repeat=m):
            s = [0] * n
            for j in range(m):
                t = n - 1 - pi[j] if flips[j] else pi[j]
                s[j] = t
                s[n - 1 - j] = n - 1 - t
            if n % 2:
                s[m] = m
            out.append(tuple(s))
    return out


@lru_cache(maxsize=None)
def weyl_group(kind: GroupKind) -> tuple:
    """S_n^o for type D, S_n^* otherwise."""
    perms = signed_permutations(kind.n)
    if kind.family is Family.D:
        perms = [p for p in perms if perm_sign(p) == 1]
    return tuple(perms)


def act_vector(sigma: Sequence[int], v: Sequence) -> tuple:
    """(sigma v)(sigma(j)) = v(j)."""
    out = [0] * len(v)
    for j, t in enumerate(sigma):
        out[t] = v[j]
    return tuple(out)


def weyl_orbit(kind: GroupKind, mu: Sequence[int]) -> frozenset:
    if not in_lattice(kind, mu):
        raise ValueError(f"{tuple(mu)} is not in the cocharacter lattice of {kind}")
    return frozenset(act_vector(s, mu) for s in weyl_group(kind))


# ---------------------------------------------------------------------------
# vertices of the base alcove

def _half_vertex(n: int, k: int) -> tuple:
    h = Fraction(1, 2)
    return tuple(-h if j < k else (h if j >= n - k else Fraction(0)) for j in range(n))


def vertex_labels(kind: GroupKind) -> tuple:
    """Labels of the named points: numeric labels plus primed ones where defined."""
    m = kind.m
    nums = tuple(str(k) for k in range(m + 1))
    if kind.family is Family.D:
        return nums + ("0'", f"{m}'")
    if kind.family is Family.B:
        return nums + ("0'",)
    return nums


def normalize_label(kind: GroupKind, label) -> str:
    s = str(label).strip().replace("′", "'")
    if s == "m'":
        s = f"{kind.m}'"
    if s not in vertex_labels(kind):
        raise InvalidLabelError(f"unknown vertex label {label!r} for {kind}")
    return s


@lru_cache(maxsize=None)
def _base_point(kind: GroupKind, label: str) -> tuple:
    n, m = kind.n, kind.m
    if label == "0'":
        one = Fraction(1)
        return (-one,) + (Fraction(0),) * (n - 2) + (one,)
    if label.endswith("'"):
        h = Fraction(1, 2)
        return (-h,) * (m - 1) + (h, -h) + (h,) * (m - 1)
    return _half_vertex(n, int(label))


def base_point(kind: GroupKind, label) -> tuple:
    return _base_point(kind, normalize_label(kind, label))


# ---------------------------------------------------------------------------
# affine roots
#
# Each positive root family is recorded as (i, j, step, offset): its
# hyperplanes are x_i - x_j = K with K in offset + step*Z.  For j != i* the
# reflection permutes (i j)(i* j*) and translates by K*(e_i - e_j + e_j* - e_i*);
# for j = i* it swaps i, i* and translates by K*(e_i - e_i*).

class RootFamily(NamedTuple):
    i: int
    j: int
    step: int
    offset: int


class AffineRoot(NamedTuple):
    """The hyperplane x_i - x_j = level (1-based i, j)."""
    i: int
    j: int
    level: object


@lru_cache(maxsize=None)
def root_families(kind: GroupKind) -> tuple:
    n, m = kind.n, kind.m
    mid = m if kind.family is Family.B else None
    seen = set()
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if j == n - 1 - i or i == mid or j == mid:
                continue
            key = frozenset([(i, j), (n - 1 - j, n - 1 - i)])
            if key in seen:
                continue
            seen.add(key)
            out.append(RootFamily(i, j, 1, 0))
    if kind.family is Family.B:
        out += [RootFamily(i, n - 1 - i, 2, 0) for i in range(m)]
    elif kind.family is Family.GU:
        out += [RootFamily(i, n - 1 - i, 2, 1) for i in range(m)]
    return tuple(out)


def reference_point(kind: GroupKind) -> tuple:
    """A generic interior point of the base alcove, scaled to integers.

    Returns (den, P) with the point equal to P/den.
    """
    return _reference_point(kind)


@lru_cache(maxsize=None)
def _reference_point(kind: GroupKind):
    m = kind.m
    den = 2 * m + 2
    y = [-(m + 1 - k) for k in range(1, m + 1)]
    mid = [0] if kind.family is Family.B else []
    return den, tuple(y + mid + [-t for t in reversed(y)])


def hyperplane(kind: GroupKind, root: AffineRoot):
    """Map a public AffineRoot to (family index, level) in the internal list.

    Accepts either orientation of the pair; for type B the short roots may be
    given as (i, m+1) with an integer level.
    """
    n, m = kind.n, kind.m
    i, j, level = root.i - 1, root.j - 1, root.level
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise ValueError(f"invalid root indices {root.i}, {root.j}")
    level = Fraction(level)
    if kind.family is Family.B and m in (i, j):
        if i == m:
            i, j, level = j, i, -level
        if i == m:
            raise ValueError("invalid root")
        j, level = n - 1 - i, 2 * level
    for idx, f in enumerate(root_families(kind)):
        for a, b, sgn in ((f.i, f.j, 1), (f.j, f.i, -1), (n - 1 - f.j, n - 1 - f.i, 1), (n - 1 - f.i, n - 1 - f.j, -1)):
            if (a, b) == (i, j):
                k = sgn * level
                if k.denominator != 1 or (k - f.offset) % f.step:
                    raise ValueError(f"level {root.level} is not allowed for ({root.i},{root.j})")
                return idx, int(k)
    raise ValueError(f"({root.i},{root.j}) is not a root of {kind}")


def is_in_closed_alcove(kind: GroupKind, point: Sequence) -> bool:
    """True if point lies on the same closed side as the reference point of every wall."""
    den, P = reference_point(kind)
    for f in root_families(kind):
        a = Fraction(P[f.i] - P[f.j], den)
        x = Fraction(point[f.i]) - Fraction(point[f.j])
        g = (a - f.offset) // f.step
        lo, hi = f.offset + f.step * g, f.offset + f.step * (g + 1)
        if not lo <= x <= hi:
            return False
    return True


def parse_vector(text) -> tuple:
    if isinstance(text, (tuple, list)):
        return tuple(int(x) for x in text)
    s = str(text).strip().strip("()[]")
    if not s:
        return ()
    return tuple(int(x) for x in s.split(","))


def labels_from(kind: GroupKind, labels: Iterable) -> frozenset:
    if isinstance(labels, str):
        labels = [x for x in labels.replace(" ", "").split(",") if x]
    return frozenset(normalize_label(kind, x) for x in labels)

"""Elements w = t_v sigma of the extended affine Weyl group and their vectors."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .rootdata import (Family, GroupKind, act_vector, base_point, in_lattice,
                       omega_vector, pair_sum, perm_sign)


class WeylElement:
    """w = t_v sigma.  sigma is stored as 0-based images: sigma[j] = sigma(j)."""

    __slots__ = ("v", "sigma", "_hash")

    def __init__(self, v: Sequence[int], sigma: Sequence[int]):
        self.v = tuple(v)
        self.sigma = tuple(sigma)
        self._hash = hash((self.v, self.sigma))

    @property
    def n(self) -> int:
        return len(self.v)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.v == other.v and self.sigma == other.sigma

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.v, self.sigma) < (other.v, other.sigma)

    def __repr__(self):
        return f"WeylElement({format_element(self)})"

    def __mul__(self, other):
        return compose(self, other)

    def __reduce__(self):
        return (WeylElement, (self.v, self.sigma))


def identity(n: int) -> WeylElement:
    return WeylElement((0,) * n, tuple(range(n)))


def translation(v: Sequence[int]) -> WeylElement:
    return WeylElement(v, tuple(range(len(v))))


def linear(sigma: Sequence[int]) -> WeylElement:
    return WeylElement((0,) * len(sigma), sigma)


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """(t_u s)(t_v t) = t_{u + s v} (s t)."""
    if a.n != b.n:
        raise ValueError("elements live in different groups")
    sv = act_vector(a.sigma, b.v)
    return WeylElement(tuple(x + y for x, y in zip(a.v, sv)), tuple(a.sigma[t] for t in b.sigma))


def inverse(w: WeylElement) -> WeylElement:
    inv = [0] * w.n
    for j, t in enumerate(w.sigma):
        inv[t] = j
    return WeylElement(tuple(-x for x in act_vector(inv, w.v)), inv)


def conjugate(a: WeylElement, w: WeylElement) -> WeylElement:
    return compose(compose(a, w), inverse(a))


def act_point(w: WeylElement, p: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(w.v, act_vector(w.sigma, p)))


def check_element(kind: GroupKind, w: WeylElement) -> None:
    n = kind.n
    if w.n != n or sorted(w.sigma) != list(range(n)):
        raise ValueError(f"not an element of the group of {kind}")
    if any(w.sigma[n - 1 - j] != n - 1 - w.sigma[j] for j in range(n)):
        raise ValueError("linear part does not commute with the star involution")
    if not in_lattice(kind, w.v):
        raise ValueError(f"translation part {w.v} is not in the lattice of {kind}")
    if kind.family is Family.D and perm_sign(w.sigma) != 1:
        raise ValueError("type D linear parts must be even")


# ---------------------------------------------------------------------------
# the vectors mu_k, nu_k

def mu_vector(w: WeylElement, k: int) -> tuple:
    """mu_k^w = w omega_k - omega_k."""
    om = omega_vector(w.n, k)
    return tuple(x - y for x, y in zip(act_point(w, om), om))


def mu_vectors(w: WeylElement) -> list:
    """mu_k^w for k = 0..n-1 (one period)."""
    return [mu_vector(w, k) for k in range(w.n)]


def nu_vector(kind: GroupKind, w: WeylElement, label) -> tuple:
    """nu_k^w = w a_k - a_k, as Fractions."""
    a = base_point(kind, label)
    return tuple(x - y for x, y in zip(act_point(w, a), a))


def nu_from_mu(w: WeylElement, k: int) -> tuple:
    a, b = mu_vector(w, k), mu_vector(w, -k)
    return tuple(Fraction(x + y, 2) for x, y in zip(a, b))


def upper_values(w: WeylElement) -> tuple:
    mus = mu_vectors(w)
    return tuple(max(mu[j] for mu in mus) for j in range(w.n))


def is_self_dual(vec: Sequence) -> bool:
    return pair_sum(vec) == 2


class SP1Error(ValueError):
    """Raised when a c-value is requested where SP1 fails."""


def sp1_holds(w: WeylElement, k: int) -> bool:
    a, b = mu_vector(w, k), mu_vector(w, -k)
    n = w.n
    return all(0 <= a[j] <= 2 and a[j] + b[n - 1 - j] == 2 for j in range(n))


def c_value(w: WeylElement, k: int) -> int:
    if not sp1_holds(w, k):
        raise SP1Error(f"SP1 fails at k={k}")
    mu = mu_vector(w, k)
    twos, zeros = mu.count(2), mu.count(0)
    if twos != zeros:
        raise SP1Error(f"counts of 2 and 0 differ at k={k}")
    return twos


def c_value_nu(nu: Sequence) -> Fraction:
    """#{nu = 2} + #{nu not integral}/4."""
    return sum(1 for x in nu if x == 2) + Fraction(sum(1 for x in nu if Fraction(x).denominator != 1), 4)


def kottwitz(kind: GroupKind, w: WeylElement) -> tuple:
    """(d, parity).  Two elements lie in the same W_aff-coset iff these agree."""
    d = pair_sum(w.v)
    m = kind.m
    if kind.family is Family.GU:
        return d, sum(mu_vector(w, m)[:m]) % 2
    return d, sum(w.v[:m]) % 2


def congruent(kind: GroupKind, w: WeylElement, x: WeylElement) -> bool:
    return kottwitz(kind, w) == kottwitz(kind, x)


# ---------------------------------------------------------------------------
# faces

@dataclass(frozen=True)
class Face:
    n: int
    I: tuple
    vectors: dict = field(compare=False)

    def member(self, i: int) -> tuple:
        b, c = divmod(i, self.n)
        base = self.vectors[c]
        return tuple(x - b for x in base)

    def indices(self) -> list:
        return sorted(self.vectors)

    def check(self) -> bool:
        """F1-F4 on one period plus the next member."""
        n = self.n
        idx = self.indices()
        ext = idx + [idx[0] + n]
        vecs = [self.member(i) for i in ext]
        d = None
        for a in range(len(ext)):
            for b in range(a + 1, len(ext)):
                if any(x < y for x, y in zip(vecs[a], vecs[b])):
                    return False
                if sum(vecs[a]) - sum(vecs[b]) != ext[b] - ext[a]:
                    return False
        for i in idx:
            s = self.member(i)
            t = self.member(-i)
            dd = pair_sum(tuple(x + y for x, y in zip(s, reversed(t))))
            if dd is None or (d is not None and dd != d):
                return False
            d = dd
        return True


def face_indices(n: int, I: Iterable[int]) -> list:
    I = set(I)
    return [i for i in range(n + 1) if i % n in {k % n for k in I} | {(-k) % n for k in I}]


def face_of_type(w: WeylElement, I: Iterable[int]) -> Face:
    I = tuple(sorted(set(int(k) for k in I)))
    n = w.n
    if not I or any(not 0 <= k <= n // 2 for k in I):
        raise ValueError(f"invalid index set {I}")
    vecs = {i: act_point(w, omega_vector(n, i)) for i in face_indices(n, I)}
    return Face(n, I, vecs)


# ---------------------------------------------------------------------------
# text format: "t:[v1,...,vn];s:[s(1),...,s(n)]" with 1-based images

def format_element(w: WeylElement) -> str:
    return "t:[" + ",".join(map(str, w.v)) + "];s:[" + ",".join(str(t + 1) for t in w.sigma) + "]"


def parse_cycles(text: str, n: int) -> tuple:
    """'(27)(36)' or '(2,7)(3,6)' -> 0-based images.  Single digits may run together."""
    sigma = list(range(n))
    text = text.strip()
    if text in ("", "id", "()", "1", "e"):
        return tuple(sigma)
    for cyc in re.findall(r"\(([^)]*)\)", text):
        if "," in cyc or " " in cyc.strip():
            pts = [int(x) for x in re.split(r"[,\s]+", cyc.strip()) if x]
        else:
            pts = [int(x) for x in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            sigma[a - 1] = b - 1
    return tuple(sigma)


def parse_element(text: str, n: int = None) -> WeylElement:
    """Parse the serialized form; the s: part may use cycle notation."""
    m = re.fullmatch(r"\s*t:\s*\[([^\]]*)\]\s*;\s*s:\s*(.*)", text)
    if not m:
        raise ValueError(f"cannot parse element {text!r}")
    v = tuple(int(x) for x in m.group(1).split(",") if x.strip())
    if n is not None and len(v) != n:
        raise ValueError(f"expected {n} entries, got {len(v)}")
    s = m.group(2).strip()
    if s.startswith("["):
        imgs = tuple(int(x) - 1 for x in s.strip("[] ").split(",") if x.strip())
        if sorted(imgs) != list(range(len(v))):
            raise ValueError(f"{s} is not a permutation of 1..{len(v)}")
    else:
        imgs = parse_cycles(s, len(v))
    return WeylElement(v, imgs)


def cycle_string(sigma: Sequence[int]) -> str:
    seen = set()
    parts = []
    for i in range(len(sigma)):
        if i in seen or sigma[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = sigma[j]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "id"

"""Admissible, permissible, spin-permissible and vertexwise admissible sets
for types D and B, at arbitrary parahoric level.

A level is a set of vertex labels; W_I is the pointwise fixer in W_aff of the
points a_k, k in I.  Sets are reported as minimal (W_J, W_I)-double-coset
representatives, with I a subset of J (so W_J is the smaller group).
"""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .bruhat import (geometry, level_generators, lower_set, min_coset_rep,
                     simple_reflections, worker_count)
from .rootdata import (Family, GroupKind, base_point, in_lattice, labels_from,
                       mu_shape, pair_sum, vertex_labels, weyl_group,
                       weyl_orbit)
from .weyl import (WeylElement, c_value_nu, compose, format_element, inverse,
                   kottwitz, mu_vectors, nu_vector, translation)


class InvalidLevelError(ValueError):
    pass


class UnsupportedCocharacterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# levels

def numeric_labels(kind: GroupKind) -> frozenset:
    return frozenset(str(k) for k in range(kind.m + 1))


def iwahori(kind: GroupKind) -> frozenset:
    return numeric_labels(kind)


def level_is_valid(kind: GroupKind, I: frozenset) -> bool:
    """The normalization conditions on a set of numeric labels."""
    m = kind.m
    if not I or not I <= numeric_labels(kind):
        return False
    if kind.family in (Family.D, Family.B) and "1" in I and "0" not in I:
        return False
    if kind.family in (Family.D, Family.GU) and str(m - 1) in I and str(m) not in I:
        return False
    return True


def theta(kind: GroupKind, which: str) -> WeylElement:
    """theta_0 (which='0'), theta_m (which='m') or their product ('0m')."""
    n, m = kind.n, kind.m
    if kind.family is Family.GU or (kind.family is Family.B and "m" in which):
        raise ValueError(f"theta_{which} is not defined for {kind}")
    out = WeylElement((0,) * n, tuple(range(n)))
    if "0" in which:
        v = (-1,) + (0,) * (n - 2) + (1,)
        s = (n - 1,) + tuple(range(1, n - 1)) + (0,)
        out = compose(out, WeylElement(v, s))
    if "m" in which:
        s = list(range(n))
        s[m - 1], s[m] = m, m - 1
        out = compose(out, WeylElement((0,) * n, s))
    return out


def apply_theta(kind: GroupKind, which: str, w: WeylElement) -> WeylElement:
    if kind.family is not Family.D:
        raise ValueError("apply_theta is defined for type D only")
    t = theta(kind, which)
    return compose(compose(t, w), inverse(t))


def _swap_label(lab: str, a: str, b: str) -> str:
    return b if lab == a else a if lab == b else lab


def normalize_levels(kind: GroupKind, I, J=None):
    """Bring (I, J) to numeric labels satisfying the level conditions.

    Returns (I, J, which) where which names the theta used ('' if none).  The
    sets computed at the new levels are carried back by conjugating with theta.
    """
    I = labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    if not I or not I <= J:
        raise InvalidLevelError(f"need nonempty I contained in J, got I={sorted(I)}, J={sorted(J)}")
    m = kind.m
    which = ""
    pairs = [("0", "0'", "1", "0")]
    if kind.family is Family.D:
        pairs.append((str(m), f"{m}'", str(m - 1), "m"))
    for plain, primed, mid, name in pairs:
        if any(primed in S and plain not in S for S in (I, J)):
            which += name
            I = frozenset(_swap_label(x, plain, primed) for x in I)
            J = frozenset(_swap_label(x, plain, primed) for x in J)

        def fold(S):
            return (S - {primed}) | {mid} if primed in S else S
        I, J = fold(I), fold(J)
    if kind.family is Family.GU and any("'" in x for x in I | J):
        raise InvalidLevelError("primed labels are not used for GU")
    for S in (I, J):
        if not level_is_valid(kind, S):
            raise InvalidLevelError(f"level {sorted(S)} violates the normalization conditions for {kind}")
    return I, J, which


def all_levels(kind: GroupKind) -> list:
    labs = sorted(numeric_labels(kind), key=int)
    out = []
    for r in range(1, len(labs) + 1):
        for c in itertools.combinations(labs, r):
            if level_is_valid(kind, frozenset(c)):
                out.append(frozenset(c))
    return out


def level_pairs(kind: GroupKind) -> list:
    """All (I, J) with I contained in J, both valid."""
    lv = all_levels(kind)
    return [(I, J) for I in lv for J in lv if I <= J]


def facet_vertices(kind: GroupKind, I) -> tuple:
    """Vertices of the closure of the facet of type I."""
    return _facet_vertices(kind, labels_from(kind, I))


@lru_cache(maxsize=None)
def _facet_vertices(kind, I):
    g = geometry(kind)
    gens = level_generators(kind, I)
    non_vertex = {"1"} if kind.family is Family.B else {"1", str(kind.m - 1)}
    out = []
    for lab in vertex_labels(kind):
        if lab in non_vertex:
            continue
        p = base_point(kind, lab)
        if all(g.point_value(r, p) == r.level for r in gens):
            out.append(lab)
    return tuple(out)


def sort_labels(labels) -> list:
    return sorted(labels, key=lambda x: (int(x.rstrip("'")), x.endswith("'")))


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class AdmReport:
    kind: GroupKind
    mu: tuple
    I: tuple
    J: tuple
    method: str
    reps: frozenset = field(repr=False)
    transport: str = ""

    @property
    def cardinality(self) -> int:
        return len(self.reps)

    def same_set(self, other: "AdmReport") -> bool:
        return self.reps == other.reps

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind.family.value,
            "m": self.kind.m,
            "mu": list(self.mu),
            "I": list(self.I),
            "J": list(self.J),
            "method": self.method,
            "cardinality": self.cardinality,
            "reps": [format_element(w) for w in sorted(self.reps)],
        }
        if self.transport:
            d["transport"] = self.transport
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _report(kind, mu, I, J, method, reps, transport=""):
    return AdmReport(kind, tuple(mu), tuple(sort_labels(I)), tuple(sort_labels(J)), method, frozenset(reps), transport)


def project(kind: GroupKind, elements: Iterable[WeylElement], I, J) -> frozenset:
    I, J = labels_from(kind, I), labels_from(kind, J)
    if not level_generators(kind, I) and not level_generators(kind, J):
        return frozenset(elements)
    return frozenset(min_coset_rep(kind, w, I, J) for w in elements)


# ---------------------------------------------------------------------------
# admissible sets

@lru_cache(maxsize=None)
def iwahori_admissible(kind: GroupKind, mu: tuple) -> frozenset:
    seeds = [translation(lam) for lam in sorted(weyl_orbit(kind, mu))]
    return lower_set(kind, seeds)


@lru_cache(maxsize=None)
def _adm_reps(kind, mu, I, J):
    return project(kind, iwahori_admissible(kind, mu), I, J)


def admissible_set(kind: GroupKind, mu: Sequence[int], I=None, J=None, method: str = "bfs") -> AdmReport:
    """Adm_{J,I}(mu).

    method 'bfs' projects the Iwahori down-closure of {t_lambda}; 'seeds'
    starts from the minimal representatives of W_J t_lambda W_I instead.
    """
    mu = tuple(mu)
    if not in_lattice(kind, mu):
        raise ValueError(f"{mu} is not in the cocharacter lattice of {kind}")
    I = iwahori(kind) if I is None else labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    normalize_levels(kind, I, J)
    if method == "bfs":
        reps = _adm_reps(kind, mu, I, J)
    elif method == "seeds":
        seeds = {min_coset_rep(kind, translation(lam), I, J) for lam in weyl_orbit(kind, mu)}
        reps = project(kind, lower_set(kind, seeds), I, J)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _report(kind, mu, I, J, f"adm-{method}", reps)


# ---------------------------------------------------------------------------
# the conditions

def q_of(kind: GroupKind, mu: Sequence[int]) -> int:
    mu = tuple(mu)
    top = kind.m - 1 if kind.family is Family.D else kind.m
    for q in range(top + 1):
        if mu == mu_shape(kind, q):
            return q
    raise UnsupportedCocharacterError(
        f"{mu} is not of the form (2^q, 1^(n-2q), 0^q) with 0 <= q <= {top}")


def in_A(n: int, k: int, j: int) -> bool:
    """j (0-based) lies in A_k = {1..k} u {k*..n}."""
    return j < k or j >= n - k


def congruent_vectors(kind: GroupKind, a: Sequence, b: Sequence) -> bool:
    """a - b in the coroot lattice, for vectors with equal pair sums."""
    m = kind.m
    if pair_sum(tuple(x - y for x, y in zip(a, b))) != 0:
        return False
    return (sum(a[:m]) - sum(b[:m])) % 2 == 0


def _spin_witness(kind, vec, k):
    n = kind.n
    ones = [j for j in range(n) if vec[j] == 1]
    if kind.family is Family.B:
        return any(in_A(n, k, j) for j in ones)
    return any(in_A(n, k, j) for j in ones) and any(not in_A(n, k, j) for j in ones)


def sp_conditions(kind: GroupKind, w: WeylElement, k: int, mu: Sequence[int], mus=None) -> tuple:
    """(SP1, SP2, SP3) for mu_k^w; for type B these are sp1-sp3."""
    n = kind.n
    q = q_of(kind, mu)
    mus = mus or mu_vectors(w)
    a, b = mus[k % n], mus[(-k) % n]
    sp1 = all(0 <= a[j] <= 2 and a[j] + b[n - 1 - j] == 2 for j in range(n))
    sp2 = a.count(2) <= q
    sp3 = True
    if pair_sum(a) == 2 and not congruent_vectors(kind, a, mu):
        sp3 = _spin_witness(kind, a, k)
    return sp1, sp2, sp3


def sp_prime_conditions(kind: GroupKind, nu: Sequence, k: int, mu: Sequence[int]) -> tuple:
    """(SP1', SP2', SP3') for a nu-vector."""
    n = kind.n
    q = q_of(kind, mu)
    sp1 = pair_sum(nu) == 2 and all(0 <= x <= 2 for x in nu)
    sp2 = c_value_nu(nu) <= q
    sp3 = True
    if sp1 and all(Fraction(x).denominator == 1 for x in nu):
        iv = tuple(int(x) for x in nu)
        if not congruent_vectors(kind, iv, mu):
            sp3 = _spin_witness(kind, iv, k)
    return sp1, sp2, sp3


def is_spin_permissible(kind: GroupKind, w: WeylElement, mu, I) -> bool:
    mu = tuple(mu)
    if kottwitz(kind, w) != kottwitz(kind, translation(mu)):
        return False
    mus = mu_vectors(w)
    return all(all(sp_conditions(kind, w, int(k), mu, mus)) for k in I)


def sp3_prime_levels(kind: GroupKind) -> set:
    m = kind.m
    if kind.family is Family.B:
        return {"0", "1"}
    return {"0", "1", str(m - 1), str(m)}


def is_permissible_sp(kind: GroupKind, w: WeylElement, mu, I) -> bool:
    mu = tuple(mu)
    if kottwitz(kind, w) != kottwitz(kind, translation(mu)):
        return False
    extra = sp3_prime_levels(kind)
    for k in I:
        s1, s2, s3 = sp_prime_conditions(kind, nu_vector(kind, w, k), int(k), mu)
        if not (s1 and s2 and (s3 or k not in extra)):
            return False
    return True


def in_convex_hull(kind: GroupKind, mu: Sequence[int], v: Sequence) -> bool:
    """v in Conv(W mu), via sorted partial sums over the pairs {j, j*}."""
    mu = tuple(mu)
    q_of(kind, mu)
    n, m = kind.n, kind.m
    v = [Fraction(x) for x in v]
    if pair_sum(v) != 2:
        return False
    tops = sorted((max(v[j], v[n - 1 - j]) for j in range(m)), reverse=True)
    bound = sorted(mu, reverse=True)
    s = t = 0
    for i in range(m):
        s += tops[i]
        t += bound[i]
        if s > t:
            return False
    return True


def is_permissible_hull(kind: GroupKind, w: WeylElement, mu, I) -> bool:
    mu = tuple(mu)
    if kottwitz(kind, w) != kottwitz(kind, translation(mu)):
        return False
    return all(in_convex_hull(kind, mu, nu_vector(kind, w, v)) for v in facet_vertices(kind, I))


# ---------------------------------------------------------------------------
# candidate pools

@lru_cache(maxsize=None)
def candidate_pool(kind: GroupKind, mu: tuple, tight: bool) -> tuple:
    """Elements congruent to t_mu whose translation part has entries in [0,2]
    (tight) or [-1,3].  Every double coset relevant to Perm, SPerm or the
    vertexwise set has all its members in the [-1,3] pool."""
    n, m = kind.n, kind.m
    lo, hi = (0, 2) if tight else (-1, 3)
    target = kottwitz(kind, translation(mu))
    mid = (1,) if kind.family is Family.B else ()
    vs = []
    for half in itertools.product(range(lo, hi + 1), repeat=m):
        v = half + mid + tuple(2 - x for x in reversed(half))
        if kottwitz(kind, translation(v)) == target:
            vs.append(v)
    return tuple(WeylElement(v, s) for v in vs for s in weyl_group(kind))


def _filter_chunk(args):
    pred, kind, mu, I, J, chunk = args
    return {min_coset_rep(kind, w, I, J) for w in chunk if pred(kind, w, mu, I)}


def _filtered_reps(pred, kind, mu, I, J, workers=None):
    pool = candidate_pool(kind, mu, "0" in I)
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return _filter_chunk((pred, kind, mu, I, J, pool))
    chunks = [(pred, kind, mu, I, J, pool[i::workers]) for i in range(workers)]
    out = set()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_filter_chunk, chunks):
            out |= part
    return out


def _transported(kind, mu, I, J, which, reps):
    if not which:
        return reps
    t = theta(kind, which) if kind.family is Family.D else theta(kind, "0")
    ti = inverse(t)
    return frozenset(compose(compose(ti, w), t) for w in reps)


def spin_permissible_set(kind: GroupKind, mu, I=None, J=None) -> AdmReport:
    mu = tuple(mu)
    q_of(kind, mu)
    I0 = iwahori(kind) if I is None else labels_from(kind, I)
    J0 = I0 if J is None else labels_from(kind, J)
    I, J, which = normalize_levels(kind, I0, J0)
    reps = _sperm_reps(kind, mu, I, J)
    return _report(kind, mu, I0, J0, "sperm", _transported(kind, mu, I, J, which, reps), which)


@lru_cache(maxsize=None)
def _sperm_reps(kind, mu, I, J):
    return frozenset(_filtered_reps(is_spin_permissible, kind, mu, I, J))


def permissible_set(kind: GroupKind, mu, I=None, J=None, method: str = "sp") -> AdmReport:
    """Perm_{J,I}(mu) from the SP' conditions ('sp') or raw hull membership ('hull')."""
    mu = tuple(mu)
    q_of(kind, mu)
    I0 = iwahori(kind) if I is None else labels_from(kind, I)
    J0 = I0 if J is None else labels_from(kind, J)
    I, J, which = normalize_levels(kind, I0, J0)
    if method == "sp":
        reps = _perm_reps(kind, mu, I, J)
    elif method == "hull":
        # raw definition: no normalization needed, the facet vertices are generic
        I, J, which = I0, J0, ""
        reps = frozenset(_filtered_reps_loose(is_permissible_hull, kind, mu, I, J))
    else:
        raise ValueError(f"unknown method {method!r}")
    return _report(kind, mu, I0, J0, f"perm-{method}", _transported(kind, mu, I, J, which, reps), which)


@lru_cache(maxsize=None)
def _perm_reps(kind, mu, I, J):
    return frozenset(_filtered_reps(is_permissible_sp, kind, mu, I, J))


def _filtered_reps_loose(pred, kind, mu, I, J):
    pool = candidate_pool(kind, mu, False)
    return {min_coset_rep(kind, w, I, J) for w in pool if pred(kind, w, mu, I)}


def vertexwise_admissible_set(kind: GroupKind, mu, I=None, J=None) -> AdmReport:
    """Double cosets whose image in W_v \\ W / W_v is admissible for every
    vertex v of the facet of type I."""
    mu = tuple(mu)
    q_of(kind, mu)
    I = iwahori(kind) if I is None else labels_from(kind, I)
    J = I if J is None else labels_from(kind, J)
    normalize_levels(kind, I, J)
    verts = facet_vertices(kind, I)
    targets = [(frozenset([v]), _adm_reps(kind, mu, frozenset([v]), frozenset([v]))) for v in verts]

    def ok(kind_, w, mu_, I_):
        return all(min_coset_rep(kind, w, lv, lv) in reps for lv, reps in targets)
    reps = _filtered_reps_loose(ok, kind, mu, I, J)
    return _report(kind, mu, I, J, "vadm", reps)


def spin_failure(kind: GroupKind, w: WeylElement, mu, I=None) -> list:
    """Per-k diagnostics for the SP conditions: (k, nu_k, c_k, SP1, SP2, SP3)."""
    mu = tuple(mu)
    I = iwahori(kind) if I is None else labels_from(kind, I)
    mus = mu_vectors(w)
    out = []
    for k in sort_labels(I):
        nu = nu_vector(kind, w, k)
        conds = sp_conditions(kind, w, int(k), mu, mus)
        c = c_value_nu(nu) if conds[0] else None
        out.append((k, nu, c, *conds))
    return out

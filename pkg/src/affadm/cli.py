"""Command-line front end: affadm <subcommand> ..."""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys

from . import admset, steinberg, unitary
from .bruhat import bruhat_leq, length
from .rootdata import GroupKind, mu_shape
from .weyl import (WeylElement, check_element, cycle_string, format_element,
                   nu_vector, parse_element)


class UsageError(ValueError):
    pass


def _kind(family: str, m: int) -> GroupKind:
    try:
        return GroupKind(family, m)
    except ValueError as e:
        raise UsageError(str(e))


def _level(text):
    if text is None:
        return None
    t = text.strip().strip("{}")
    if t.lower() in ("iwahori", "all"):
        return "iwahori"
    return [x for x in re.split(r"[,\s+]+", t) if x]


def compute(op: str, family: str, m: int, q=None, signature=None, I=None, J=None):
    """Run one set computation and return its AdmReport."""
    if family == "GU":
        if signature is None:
            raise UsageError("GU needs --signature r,s")
        sig = signature if isinstance(signature, unitary.Signature) else unitary.Signature.parse(signature)
        if sig.m != m:
            raise UsageError(f"signature {sig.r},{sig.s} does not match m={m}")
        kind = unitary.TypeGU(m)
        I = admset.iwahori(kind) if I in (None, "iwahori") else I
        J = admset.iwahori(kind) if J == "iwahori" else J
        if op == "adm":
            return unitary.gu_admissible_set(m, sig, I, J)
        if op == "sperm":
            return unitary.gu_spin_permissible_set(m, sig, I, J)
        raise UsageError(f"{op} is not available for GU")
    kind = _kind(family, m)
    if q is None:
        raise UsageError("--q is required for types B and D")
    mu = mu_shape(kind, q)
    I = admset.iwahori(kind) if I in (None, "iwahori") else I
    J = admset.iwahori(kind) if J == "iwahori" else J
    fn = {"adm": admset.admissible_set, "perm": admset.permissible_set,
          "sperm": admset.spin_permissible_set, "vadm": admset.vertexwise_admissible_set}[op]
    return fn(kind, mu, I, J)


def _split_top(s: str) -> list:
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    parts.append(cur.strip())
    return parts


def parse_setspec(spec: str):
    """'adm(D,3,2,Iwahori)', 'sperm(B,2,1,{0,2},{0,1,2})' or 'adm(GU,2,3:1,{2})'."""
    mm = re.fullmatch(r"\s*(adm|perm|sperm|vadm)\s*\((.*)\)\s*", spec)
    if not mm:
        raise UsageError(f"cannot parse set spec {spec!r}")
    args = _split_top(mm.group(2))
    if len(args) < 3:
        raise UsageError(f"set spec {spec!r} needs at least type, m and q")
    family, m, third = args[0].upper(), int(args[1]), args[2]
    I = _level(args[3]) if len(args) > 3 else None
    J = _level(args[4]) if len(args) > 4 else None
    if family == "GU":
        return compute(mm.group(1), family, m, signature=third.replace(":", ","), I=I, J=J)
    return compute(mm.group(1), family, m, q=int(third), I=I, J=J)


def _csv(report) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf)
    ks = list(report.I)
    wr.writerow(["element"] + [f"nu_{k}" for k in ks])
    for w in sorted(report.reps):
        row = [format_element(w)]
        for k in ks:
            row.append(" ".join(str(x) for x in nu_vector(report.kind, w, k)))
        wr.writerow(row)
    return buf.getvalue()


def _emit(report, fmt: str):
    if fmt == "csv":
        sys.stdout.write(_csv(report))
    else:
        print(report.to_json())


def _element(text: str, kind: GroupKind) -> WeylElement:
    w = parse_element(text, kind.n)
    check_element(kind, w)
    return w


# ---------------------------------------------------------------------------

def counterexample(name: str) -> dict:
    if name == "d4-perm-not-adm":
        kind, w = _kind("D", 4), parse_element("t:[2,1,1,1,1,1,1,0];s:(27)(36)")
    elif name == "b3-perm-not-adm":
        kind, w = _kind("B", 3), steinberg.B3_WITNESS
    else:
        raise UsageError(f"unknown counterexample {name!r}")
    q = 3
    mu = mu_shape(kind, q)
    I = admset.iwahori(kind)
    perm = admset.is_permissible_sp(kind, w, mu, I)
    perm_hull = admset.is_permissible_hull(kind, w, mu, I)
    sperm = admset.is_spin_permissible(kind, w, mu, I)
    adm = w in admset.iwahori_admissible(kind, mu)
    failures = []
    for k, nu, c, s1, s2, s3 in admset.spin_failure(kind, w, mu, I):
        if not s3:
            failures.append({"k": k, "nu": [str(x) for x in nu], "c": str(c),
                             "q": q, "c_parity_matches_q": (c - q) % 2 == 0})
    return {
        "name": name,
        "kind": str(kind),
        "mu": list(mu),
        "w": format_element(w),
        "w_cycles": f"t_{list(w.v)}{cycle_string(w.sigma)}",
        "length": length(kind, w),
        "perm": perm,
        "perm_hull": perm_hull,
        "sperm": sperm,
        "adm": adm,
        "spin_failures": failures,
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affadm", description="Admissible and permissible sets in types B, D and GU.")
    p.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    sub = p.add_subparsers(dest="cmd", required=True)
    for op in ("adm", "perm", "sperm", "vadm"):
        s = sub.add_parser(op)
        s.add_argument("--type", dest="family", choices=["B", "D", "GU"], required=True)
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--q", type=int)
        s.add_argument("--signature")
        s.add_argument("--I", dest="I")
        s.add_argument("--facet", dest="I")
        s.add_argument("--J", dest="J")
        s.add_argument("--format", choices=["json", "csv"], default="json")
    s = sub.add_parser("compare")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s = sub.add_parser("counterexample")
    s.add_argument("--name", required=True, choices=["d4-perm-not-adm", "b3-perm-not-adm"])
    s = sub.add_parser("bruhat-leq")
    s.add_argument("--type", dest="family", choices=["B", "D", "GU"], required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--w", required=True)
    s.add_argument("--x", required=True)
    s = sub.add_parser("translate")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--w", required=True)
    s = sub.add_parser("inheritance")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--bound", type=int, default=6)
    s.add_argument("--samples", type=int, default=0)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    seed = args.seed if args.seed is not None else 0
    random.seed(seed)
    try:
        if args.cmd in ("adm", "perm", "sperm", "vadm"):
            rep = compute(args.cmd, args.family, args.m, args.q, args.signature,
                          _level(args.I), _level(args.J))
            _emit(rep, args.format)
            return 0
        if args.cmd == "compare":
            a, b = parse_setspec(args.lhs), parse_setspec(args.rhs)
            out = {"equal": a.reps == b.reps, "lhs": a.cardinality, "rhs": b.cardinality,
                   "only_lhs": [format_element(w) for w in sorted(a.reps - b.reps)],
                   "only_rhs": [format_element(w) for w in sorted(b.reps - a.reps)]}
            print(json.dumps(out))
            return 0 if out["equal"] else 1
        if args.cmd == "counterexample":
            print(json.dumps(counterexample(args.name)))
            return 0
        if args.cmd == "bruhat-leq":
            kind = _kind(args.family, args.m)
            w, x = _element(args.w, kind), _element(args.x, kind)
            res = bruhat_leq(kind, w, x)
            print(json.dumps({"w": format_element(w), "x": format_element(x), "leq": res}))
            return 0
        if args.cmd == "translate":
            kind = _kind("GU", args.m)
            w = _element(args.w, kind)
            print(json.dumps({"gu": format_element(w), "b": format_element(unitary.gu_to_b(args.m, w))}))
            return 0
        if args.cmd == "inheritance":
            rep = steinberg.check_inheritance(args.m, args.bound, samples=args.samples, seed=seed)
            print(json.dumps(rep.to_dict()))
            return 0 if not rep.violations else 1
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 2


def main():
    sys.exit(run())

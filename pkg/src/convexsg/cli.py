"""``convexsg`` command line.

Sets are read from SetDescriptor JSON files::

    {"dim": 2, "vertices": [["0", "0"], ["1/2", "1"]], "rays": [["1", "0"]]}

Every command prints (or writes to ``--out``) a JSON RunReport with sorted
keys. Exit codes: 0 success, 1 a verified claim failed, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import lab
from . import mrh as M
from . import polyhedra as P
from . import semigroup as SG
from .kernel.rational import InputError, fmt, is_dyadic, q
from .polyhedra import INF, Polyhedron
from .properties import run_suites
from .sampling import DEFAULT_SEED


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


# -- SetDescriptor ---------------------------------------------------------------


def _parse_rational(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{where}: floats are not allowed, write {value!r} as a string \"p/q\"")
    try:
        return q(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_descriptor(data, source: str = "<input>") -> Polyhedron:
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be an object")
    if "dim" not in data or "vertices" not in data:
        raise InputError(f"{source}: 'dim' and 'vertices' are required")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"{source}: dim must be a positive integer")
    lists = {}
    for key in ("vertices", "rays"):
        items = data.get(key, [])
        if not isinstance(items, list):
            raise InputError(f"{source}: {key} must be a list")
        parsed = []
        for i, pt in enumerate(items):
            if not isinstance(pt, list) or len(pt) != dim:
                raise InputError(f"{source}: {key}[{i}] must be a list of {dim} rationals")
            parsed.append(tuple(_parse_rational(v, f"{source}: {key}[{i}][{j}]") for j, v in enumerate(pt)))
        lists[key] = parsed
    if not lists["vertices"]:
        raise InputError(f"{source}: vertices must be nonempty")
    return P.make_polyhedron(lists["vertices"], lists["rays"], dim)


def descriptor(A: Optional[Polyhedron]):
    if A is None:
        return "EMPTY"
    return {
        "dim": A.dim,
        "vertices": [[fmt(a) for a in v] for v in A.vertices],
        "rays": [[fmt(a) for a in r] for r in A.rays],
    }


def _scalar(x):
    return "inf" if x == INF else fmt(x)


def _class(x: M.MrhClass) -> dict:
    return {"cone": descriptor(x.cone), "pos": descriptor(x.pos), "neg": descriptor(x.neg)}


class Inputs:
    """Loads set files and keeps a digest of everything read."""

    def __init__(self):
        self.hash = hashlib.sha256()

    def load(self, path: str) -> Polyhedron:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
        self.hash.update(path.encode() + b"\0" + raw + b"\0")
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return parse_descriptor(data, path)

    def note(self, text: str) -> None:
        self.hash.update(text.encode() + b"\0")

    @property
    def digest(self) -> str:
        return self.hash.hexdigest()


def _vector(text: str, dim: int, what: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != dim:
        raise InputError(f"{what} needs {dim} comma-separated rationals")
    return tuple(q(p) for p in parts)


def _same_dim(*sets: Polyhedron) -> None:
    if len({s.dim for s in sets}) != 1:
        raise InputError("dimension mismatch between input sets")


# -- commands ------------------------------------------------------------------


def cmd_sum(args, inp):
    A, B = inp.load(args.a), inp.load(args.b)
    _same_dim(A, B)
    return {"result": descriptor(A + B)}, {}, 0


def cmd_erode(args, inp):
    A, B = inp.load(args.a), inp.load(args.b)
    _same_dim(A, B)
    return {"result": descriptor(P.erode(A, B))}, {}, 0


def cmd_recc(args, inp):
    return {"result": descriptor(P.recession_cone(inp.load(args.a)))}, {}, 0


def cmd_support(args, inp):
    A = inp.load(args.a)
    d = _vector(args.direction, A.dim, "--direction")
    return {"value": _scalar(P.support_function(A, d))}, {}, 0


def cmd_contains(args, inp):
    A = inp.load(args.a)
    x = _vector(args.point, A.dim, "--point")
    return {}, {"contains": P.contains_point(A, x)}, 0


def cmd_subset(args, inp):
    A, B = inp.load(args.a), inp.load(args.b)
    _same_dim(A, B)
    return {}, {"subset": P.subset(A, B)}, 0


def cmd_gap(args, inp):
    A, B = inp.load(args.a), inp.load(args.b)
    _same_dim(A, B)
    return {"value": _scalar(P.hausdorff_gap(A, B))}, {}, 0


def cmd_cancel(args, inp):
    A, B, C = inp.load(args.a), inp.load(args.b), inp.load(args.c)
    _same_dim(A, B, C)
    if args.mode == "robinson":
        rep = P.order_cancel(A, B, C)
        verdicts = {"premise": rep.premise, "conclusion": rep.conclusion, "hypothesis": rep.hypothesis}
        return {}, verdicts, 1 if rep.violated else 0
    if not args.cone:
        raise InputError("--mode cv requires --cone")
    V = inp.load(args.cone)
    _same_dim(A, V)
    rep = M.cancel_in_CV(A, B, C, V, tuple(args.schedule))
    verdicts = {
        "premise": rep.premise,
        "conclusion": rep.conclusion,
        "hypothesis": rep.halving_converged,
    }
    outputs = {"halving_gaps": [_scalar(g) for g in rep.halving_gaps]}
    return outputs, verdicts, 1 if rep.premise and rep.halving_converged and not rep.conclusion else 0


def cmd_mrh(args, inp):
    V = inp.load(args.cone)
    sets = [inp.load(p) for p in args.sets]
    _same_dim(V, *sets)
    need = {"add": 4, "eq": 4, "scale": 2, "embed": 1, "limit": None}[args.op]
    if need is not None and len(sets) != need:
        raise InputError(f"mrh {args.op} takes {need} set files")
    if args.op == "add":
        x, y = M.mrh_make(sets[0], sets[1], V), M.mrh_make(sets[2], sets[3], V)
        return {"result": _class(M.mrh_add(x, y))}, {}, 0
    if args.op == "eq":
        x, y = M.mrh_make(sets[0], sets[1], V), M.mrh_make(sets[2], sets[3], V)
        return {}, {"equivalent": M.mrh_equivalent(x, y)}, 0
    if args.op == "scale":
        if args.lam is None:
            raise InputError("mrh scale requires --lam")
        lam = q(args.lam)
        inp.note(f"lam={fmt(lam)}")
        x = M.mrh_make(sets[0], sets[1], V)
        return {"result": _class(M.mrh_scale(lam, x))}, {}, 0
    if args.op == "embed":
        return {"result": _class(M.embed_j(sets[0], V))}, {}, 0
    # limit: the last file is the candidate, the rest the sequence
    if len(sets) < 2:
        raise InputError("mrh limit takes sequence files followed by a candidate")
    for S in sets:
        if not M.in_CV(S, V):
            raise InputError("mrh limit: every set must lie in C_V")
    *seq, cand = sets
    gaps = [P.hausdorff_gap(S, cand) for S in seq]
    return {"gaps": [_scalar(g) for g in gaps]}, {"converges": M.limit_check(seq, cand, args.tol)}, 0


def cmd_lab(args, inp):
    inp.note(f"{args.experiment}:{args.N}")
    rep = lab.run_experiment(args.experiment, args.N)
    return {"report": rep.to_json()}, {"all_verified": rep.ok}, 0 if rep.ok else 1


def cmd_axioms(args, inp):
    inp.note(args.instance)
    V = None
    if args.instance == "polyhedra":
        if not args.cone:
            raise InputError("the polyhedra instance requires --cone")
        V = inp.load(args.cone)
    S = SG.make_instance(args.instance, V)
    elements, dyadics, seqs = SG.default_bank(S)
    report = SG.check_axioms(S, elements, dyadics, seqs, tuple(args.schedule), args.tol)
    table = {ax: {"passed": r.passed, "checked": r.checked, "witness": _witness(r.witness)} for ax, r in report.items()}
    ok = all(r.passed for r in report.values())
    return {"axioms": table}, {"all_passed": ok}, 0 if ok else 1


def _witness(w):
    if w is None:
        return None

    def show(x):
        if isinstance(x, Polyhedron):
            return descriptor(x)
        if isinstance(x, frozenset):
            return sorted(_scalar(a) for a in x)
        if isinstance(x, SG.SampleSequence):
            return x.label
        return _scalar(x)

    return [show(x) for x in w]


def cmd_props(args, inp):
    inp.note(f"seed={args.seed} cases={args.cases}")
    res = run_suites(args.seed, args.cases, args.suite or None)
    ok = all(r["violations"] == 0 for r in res.values())
    return {"suites": res}, {"all_passed": ok}, 0 if ok else 1


# -- parser ----------------------------------------------------------------------


def _dyadic(text: str) -> Fraction:
    x = q(text)
    if x <= 0 or not is_dyadic(x):
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive dyadic rational")
    return x


def _schedule(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("schedule must be comma-separated integers") from None
    if not out or any(b <= a for a, b in zip(out, out[1:])) or out[0] < 0:
        raise argparse.ArgumentTypeError("schedule must be increasing non-negative integers")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    common.add_argument("--tol", type=_dyadic, default=SG.DEFAULT_TOL, help="convergence tolerance (default 1/1024)")
    common.add_argument("--schedule", type=_schedule, default=list(SG.DEFAULT_SCHEDULE), help="probe indices, e.g. 1,2,4,8,16")

    parser = argparse.ArgumentParser(prog="convexsg", description="Exact polyhedral Minkowski arithmetic and cancellation laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *files):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    add("sum", cmd_sum, "Minkowski sum A + B", "a", "b")
    add("erode", cmd_erode, "Minkowski difference {x : x + B ⊆ A}", "a", "b")
    add("recc", cmd_recc, "recession cone", "a")
    add("support", cmd_support, "support function", "a").add_argument("--direction", required=True)
    add("contains", cmd_contains, "point membership", "a").add_argument("--point", required=True)
    add("subset", cmd_subset, "A ⊆ B", "a", "b")
    add("gap", cmd_gap, "l-infinity Hausdorff gap", "a", "b")
    p = add("cancel", cmd_cancel, "order cancellation A + B ⊆ B + C ⟹ A ⊆ C", "a", "b", "c")
    p.add_argument("--mode", choices=("robinson", "cv"), default="robinson")
    p.add_argument("--cone")

    p = sub.add_parser("mrh", parents=[common], help="Minkowski-Rådström-Hörmander classes")
    p.add_argument("op", choices=("add", "scale", "eq", "embed", "limit"))
    p.add_argument("sets", nargs="+")
    p.add_argument("--cone", required=True)
    p.add_argument("--lam", help="scalar for mrh scale, e.g. -1 or 3/2")
    p.set_defaults(func=cmd_mrh)

    p = sub.add_parser("lab", parents=[common], help="counterexample truncations")
    p.add_argument("experiment", choices=("halfline", "nonclosed", "cubes"))
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_lab)

    p = sub.add_parser("axioms", parents=[common], help="sampled (S1)-(S11) harness")
    p.add_argument("instance", choices=("dyadic", "finite-subsets", "polyhedra", "broken"))
    p.add_argument("--cone")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("props", parents=[common], help="seeded property suites")
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.set_defaults(func=cmd_props)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    inp = Inputs()
    start = time.perf_counter()
    try:
        outputs, verdicts, code = args.func(args, inp)
    except (InputError, CliError) as exc:
        print(f"convexsg: error: {exc}", file=sys.stderr)
        return getattr(exc, "code", 2)
    report = {
        "command": argv,
        "inputs_digest": inp.digest,
        "outputs": outputs,
        "verdicts": verdicts,
        "exit_code": code,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

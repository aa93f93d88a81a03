"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 malformed input or domain
error, 3 capacity guard.  ``--format json`` wraps every result in the envelope
``{"kind": ..., "payload": ...}``; output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from geomitosis import gz, pipedream, schubert, weyl
from geomitosis.errors import CapacityError, DomainError, FormatError
from geomitosis.pipedream import BasicPipeDream, PipeDream

MUTATIONS = ("drop-rd-bound", "unswap-dual")
VERIFY_DEFAULT_N = {"main": 3, "c": 3, "km": 3, "schubert": 3, "dualchain": 2, "adapted": 4}


class Verdict(Exception):
    """Raised by verify handlers to request exit code 1 after printing."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, kind: str, payload, text: str) -> None:
    if args.format == "json":
        print(dumps({"kind": kind, "payload": payload}))
    else:
        print(text)


def _ints(text: str) -> list[int]:
    return list(weyl.parse_word(text))


def _read_dream(args, kind: str) -> PipeDream:
    if args.stdin_json:
        data = json.loads(sys.stdin.read())
        if isinstance(data, dict) and "payload" in data:
            data = data["payload"]
        D = PipeDream.from_json(data)
        if D.kind != kind:
            raise DomainError(f"expected a type {kind} pipe dream, got type {D.kind}")
        return D
    if args.n is None:
        raise FormatError("--n is required unless --stdin-json is given")
    return PipeDream(kind, args.n, frozenset(pipedream.parse_cells(args.crosses or "")))


def _dreams_text(dreams: Sequence[PipeDream]) -> str:
    if not dreams:
        return "(no offsprings)"
    return "\n\n".join(pipedream.render(D) for D in dreams)


# ---------------------------------------------------------------------------
# handlers


def cmd_mitosis(args) -> None:
    if args.what == "basic":
        if args.ell is None:
            raise FormatError("--ell is required")
        D = BasicPipeDream.from_filled(args.ell, _ints(args.a or ""), _ints(args.b or ""))
        res = pipedream.two_row_mitosis(D)
        payload = {"r": res.r, "J": list(res.J), "offsprings": [E.to_json() for E in res.offsprings]}
        text = [f"r = {res.r}", f"J = {{{', '.join(map(str, res.J))}}}", "", D.render()]
        for p, E in zip(res.J, res.offsprings):
            text += ["", f"erase a{p}:", E.render()]
        _emit(args, "two-row-mitosis", payload, "\n".join(text))
        return
    kind = args.what.upper()
    D = _read_dream(args, kind)
    if args.i is None:
        raise FormatError("--i is required")
    op = pipedream.mitosis_A if kind == "A" else pipedream.mitosis_C
    out = op(args.i, D)
    _emit(args, "pipe-dream-set", [E.to_json() for E in out], _dreams_text(out))


def _face_from_args(args) -> gz.EquationFace:
    shape = gz.GZShape(args.type, args.n)
    flavor = args.flavor or ("kogan" if shape.kind == "A" else "symplectic")
    if args.eqs:
        eqs = frozenset(gz.Equation.parse(t) for t in args.eqs.split(";") if t.strip())
        return gz.EquationFace(shape, eqs)
    cells = pipedream.parse_cells(args.diagram) if args.diagram is not None else shape.cells
    return gz.face_of_diagram(shape, cells, flavor)


def _face_payload(F: gz.EquationFace, flavor: str) -> dict:
    return {"face": F.to_json(), "diagram": gz.diagram_of(F, flavor).to_json(), "dim": F.dim}


def cmd_gz(args) -> None:
    F = _face_from_args(args)
    shape = F.shape
    flavor = args.flavor or ("kogan" if shape.kind == "A" else "symplectic")
    if args.what == "face":
        cl = F.closure()
        payload = {"face": F.to_json(), "feasible": cl.feasible, "dim": cl.dim,
                   "implied": [e.label for e in sorted(cl.eqs)]}
        text = [f"equations: {F}", f"feasible: {cl.feasible}", f"dim: {cl.dim}"]
        if cl.feasible and cl.dim == 0:
            point = [str(x) for x in gz.point_of(F)]
            payload["point"] = point
            text.append(f"point: ({', '.join(point)})")
        if cl.feasible:
            text += ["", gz.diagram_of(F, flavor).render(flavor)]
        _emit(args, "gz-face", payload, "\n".join(text))
        return
    if args.i is None:
        raise FormatError("--i is required")
    method = args.method
    if flavor == "dual":
        out = gz.dual_mitosis_C(args.i, F, adapted=args.adapted, method=method)
    elif args.adapted:
        out = gz.adapted_mitosis_A(args.i, F, method=method)
    else:
        out = gz.kogan_mitosis(args.i, F, method=method)
    payload = [_face_payload(E, flavor) for E in out]
    text = "\n\n".join(f"{E}  (dim {E.dim})\n" + gz.diagram_of(E, flavor).render(flavor) for E in out)
    _emit(args, "gz-face-set", payload, text or "(no offsprings)")


def cmd_schubert(args) -> None:
    if args.what == "poly":
        w = _ints(args.perm)
        n = len(w) - 1
        if n < 1:
            raise DomainError("--perm needs at least two entries")
        f = schubert.schubert_polynomial(n, w)
        _emit(args, "polynomial", f.to_json(), str(f))
        return
    if args.n is None:
        raise FormatError("--n is required")
    faces = schubert.generate_Sw(args.n, _ints(args.word or ""), method=args.method)
    flavor = "kogan"
    payload = [_face_payload(E, flavor) for E in faces]
    text = [f"{len(faces)} face(s)"]
    for E in faces:
        text += ["", f"{E}  (dim {E.dim})", gz.diagram_of(E).render()]
    _emit(args, "gz-face-set", payload, "\n".join(text))


def cmd_subwords(args) -> None:
    kind = args.type.upper()
    host = _ints(args.host) if args.host else (
        list(weyl.w0_bar(args.n)) if kind == "C" else list(weyl.reduced_words("A", args.n, weyl.longest("A", args.n))[-1]))
    target = _ints(args.target)
    subs = weyl.reduced_subwords(kind, args.n, host, target)
    payload = {"host": host, "target": target, "subwords": [list(s) for s in subs]}
    lines = [f"host: {','.join(map(str, host))}", f"{len(subs)} reduced subword(s)"]
    lines += [",".join(map(str, s)) or "(empty)" for s in subs]
    if kind == "C" and not args.host:
        faces = [gz.dual_subword_face(args.n, s) for s in subs]
        payload["dual_faces"] = [F.to_json() for F in faces]
        lines += ["dual Kogan faces:"] + [str(F) for F in faces]
    _emit(args, "subwords", payload, "\n".join(lines))


def cmd_verify(args) -> None:
    n = args.n if args.n is not None else VERIFY_DEFAULT_N[args.what]
    drop = args.mutate == "drop-rd-bound"
    if args.what == "dualchain":
        rep = schubert.compare_dual_chain_vs_subwords(n, mode=args.mode, swap=args.mutate != "unswap-dual")
        payload = rep.to_json()
        payload["as_expected"] = rep.as_expected
        text = [f"{row['name']}: chain {len(row['chain'])}, subwords {len(row['subwords'])}, "
                f"missing {len(row['missing'])}, extra {len(row['extra'])}" for row in rep.rows]
        text.append(f"expected deficit only (one face missing at s2s1): {'yes' if rep.as_expected else 'no'}")
        _emit(args, "dual-chain-report", payload, "\n".join(text))
        if not rep.as_expected:
            raise Verdict
        return
    if args.what == "main":
        rep = gz.verify_theorem_main(n, mutate=drop, method=args.method or "geometric")
    elif args.what == "c":
        rep = gz.verify_theorem_C(n, mutate=drop, method=args.method or "geometric")
    elif args.what == "adapted":
        rep = gz.verify_adapted_A(n, mutate=drop, method=args.method or "combinatorial")
    elif args.what == "km":
        checked, failures = pipedream.km_failures(n, restrict_to_prefix=not drop)
        rep = gz.Report(checked, failures)
    else:
        rep = schubert.verify_schubert(n, mutate=drop)
    _emit(args, "report", rep.to_json(), rep.summary())
    if not rep.ok:
        raise Verdict


def cmd_render(args) -> None:
    try:
        data = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise FormatError(f"stdin is not JSON: {exc}") from exc
    if isinstance(data, dict) and "payload" in data:
        data = data["payload"]
    items = data if isinstance(data, list) else [data]
    if items and isinstance(items[0], dict) and "eqs" in items[0]:
        faces = [gz.EquationFace.from_json(x) for x in items]
        if args.format == "json":
            print(dumps({"kind": "gz-face-set", "payload": [F.to_json() for F in faces]}))
        else:
            flavor = args.flavor
            print("\n\n".join(gz.diagram_of(F, flavor).render(flavor) for F in faces))
        return
    dreams = [PipeDream.from_json(x) for x in items]
    if args.format == "json":
        print(dumps({"kind": "pipe-dream-set", "payload": [D.to_json() for D in dreams]}))
    else:
        print(_dreams_text(dreams))


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("ascii", "json"), default="ascii")

    parser = argparse.ArgumentParser(prog="geomitosis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mitosis", parents=[fmt], help="two-row mitosis and MA_i / MC_i")
    p.add_argument("what", choices=("basic", "a", "c"))
    p.add_argument("--ell", type=int)
    p.add_argument("--a", help="filled a-squares, e.g. 1,2,3,4")
    p.add_argument("--b", help="filled b-squares")
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--crosses", help='cells as "1,1;1,2"')
    p.add_argument("--stdin-json", action="store_true")
    p.set_defaults(func=cmd_mitosis)

    p = sub.add_parser("gz", parents=[fmt], help="GZ faces and their mitosis")
    p.add_argument("what", choices=("face", "mitosis"))
    p.add_argument("--type", choices=("a", "c", "A", "C"), default="a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagram", help='filled cells as "1,1;2,1" (default: all cells)')
    p.add_argument("--eqs", help='explicit equations as "A1,1;B2,1"')
    p.add_argument("--flavor", choices=gz.tables.FLAVORS)
    p.add_argument("--i", type=int)
    p.add_argument("--adapted", action="store_true")
    p.add_argument("--method", choices=("combinatorial", "geometric"), default="combinatorial")
    p.set_defaults(func=cmd_gz)

    p = sub.add_parser("schubert", parents=[fmt], help="Schubert polynomials and S_w face sets")
    p.add_argument("what", choices=("poly", "sw"))
    p.add_argument("--perm", help="one-line permutation, e.g. 1,3,2")
    p.add_argument("--n", type=int)
    p.add_argument("--word", help="reduced word, e.g. 2,1")
    p.add_argument("--method", choices=("combinatorial", "geometric"), default="combinatorial")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("subwords", parents=[fmt], help="reduced subwords evaluating to a target")
    p.add_argument("--type", choices=("a", "c", "A", "C"), default="c")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True, help="one-line (signed) permutation")
    p.add_argument("--host", help="host word (default: the long word)")
    p.set_defaults(func=cmd_subwords)

    p = sub.add_parser("verify", parents=[fmt], help="exhaustive verification sweeps")
    p.add_argument("what", choices=tuple(VERIFY_DEFAULT_N))
    p.add_argument("--n", type=int)
    p.add_argument("--mutate", choices=MUTATIONS)
    p.add_argument("--method", choices=("combinatorial", "geometric"))
    p.add_argument("--mode", choices=("stepwise", "chained"), default="stepwise")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[fmt], help="render JSON from stdin")
    p.add_argument("--flavor", choices=gz.tables.FLAVORS)
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable = args.func
    try:
        handler(args)
    except Verdict:
        return 1
    except (DomainError, FormatError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

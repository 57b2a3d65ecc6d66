"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error,
4 resource cap exceeded.  Conjecture counterexamples are findings and exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import conjectures, conversion, crystal, stanley, symfunc
from .coxeter import DEFAULT_LENGTH_CAP, SignedPermutation, Word, elements, evaluate, length
from .errors import DomainError, ParseError, ResourceCapError
from .tableau import PrimedTableau, SkewShape, enumerate_pst, iter_skew_shapes, partitions, validate_pst

SPECIALIZE = {"none": None, "y=0": "y:=0", "x=0": "x:=0", "y=x": "y:=x", "y=-x": "y:=-x", "y=tx": "y:=t*x"}
CONFIG_KEYS = {"rank": int, "k": int, "max_length": int, "jobs": int, "cap": int}

# --- helpers -----------------------------------------------------------------------


def _element(args) -> SignedPermutation:
    if getattr(args, "window", None):
        return SignedPermutation.parse(args.window)
    if getattr(args, "word", None) is not None:
        return evaluate(Word.parse(args.word))
    raise ParseError("give --word or --window")


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def read_config(path: str) -> dict:
    out = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    for n, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ParseError(f"{path}:{n}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise ParseError(f"{path}:{n}: bad value {value!r}") from exc
    return out


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))        # map keeps the submission order


# --- compute -------------------------------------------------------------------------


def cmd_compute(args) -> int:
    p = _element(args)
    k = args.k or max(length(p), 1)
    rule = SPECIALIZE[args.specialize]
    if args.format != "monomial":
        k = stanley.working_k(p, k)
    fn = {"a": stanley.f_a, "c": stanley.f_c, "d": stanley.f_d}[args.type]
    poly = fn(p, k, args.cap)
    if rule:
        poly = symfunc.specialize(poly, rule)
    if args.format == "monomial":
        out = poly.to_json() if args.output == "json" else str(poly)
    elif args.format == "schur":
        e = symfunc.expand_in_schur(poly)
        out = e.to_json() if args.output == "json" else str(e)
    else:
        e = symfunc.expand_in_schur_p(poly)
        if args.output == "json":
            out = json.dumps([{"lambda": list(lam), "c": c} for lam, c in e.items()], sort_keys=True)
        else:
            out = _format_p(e)
    print(out)
    return 0


def _format_p(e: dict) -> str:
    parts = []
    for lam, c in sorted(e.items(), reverse=True):
        coef = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(("- " if c < 0 else "+ ") + coef + "P" + "".join(map(str, lam)))
    text = " ".join(parts)
    return "0" if not text else text[2:] if text.startswith("+") else "-" + text[2:]


# --- verify ---------------------------------------------------------------------------


def _verify_element(item) -> list[tuple[str, str, bool]]:
    suite, window, k = item
    p = SignedPermutation(window)
    name = str(p)
    if suite == "routes":
        results = stanley.route_report(p, k)
    elif suite == "identities":
        results = stanley.identity_report(p, k)
    elif suite == "symmetry":
        rep = stanley.identity_report(p, k)
        results = {key: rep[key] for key in ("f_d symmetric in x and in y", "f_d(p)(x,y) == f_d(p^-1)(y,x)")}
    elif suite == "bijections":
        results = {f"primed recording bijection at k={kk}": not stanley.check_main(p, kk) for kk in range(1, k + 1)}
    else:
        raise DomainError(f"unknown element suite {suite!r}")
    return [(name, prop, ok) for prop, ok in results.items()]


def _shape_name(lam) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def _verify_shape(item) -> list[tuple[str, str, bool]]:
    suite, lam, mu, k = item
    shape = SkewShape(lam, mu)
    name = _shape_name(lam) + (f"/{_shape_name(mu)}" if mu else "")
    out = []
    if suite == "conversion":
        ok_valid = ok_inverse = True
        for j in range(1, k + 1):
            for T in enumerate_pst(shape, k, j):
                U = conversion.convert_level(T, j, "inward", k)
                X, Y = T.dw(k)
                ok_valid &= validate_pst(U, X, Y, j - 1)
                ok_inverse &= conversion.convert_level(U, j - 1, "outward", k) == T
        out.append((name, "inward conversion lands in the next regime", ok_valid))
        out.append((name, "outward conversion inverts inward conversion", ok_inverse))
        pt, st = symfunc.primed_gf(shape, k), symfunc.super_schur(shape, k)
        out.append((name, "primed and signed generating functions agree", pt == st))
    elif suite == "crystal":
        ok_axioms = ok_char = True
        for g in crystal.crystal_components(lam, k):
            ok_axioms &= not crystal.axiom_violations(g)
            X, Y = g.nodes[0].dw
            char = symfunc.MultiPoly.from_monomials(k, [n.dw for n in g.nodes])
            ok_char &= char == symfunc.schur(X, k, "x") * symfunc.schur(Y, k, "y")
        out.append((name, "bicrystal axioms A1/A2", ok_axioms))
        out.append((name, "component characters are s_mu(x)s_nu(y)", ok_char))
    return out


def cmd_verify(args) -> int:
    rank, k = args.rank, args.k or args.rank + 1
    if args.suite in ("routes", "identities", "symmetry", "bijections"):
        kk = min(k, 3) if args.suite == "bijections" else k
        items = [(args.suite, p.window, kk) for p in elements(rank, "A", args.max_length)]
        batches = _map(_verify_element, items, args.jobs)
    else:
        shapes = [lam for m in range(1, rank + 3) for lam in partitions(m)]
        items = [(args.suite, lam, (), k) for lam in shapes]
        if args.suite == "conversion":
            items += [(args.suite, s.lam, s.mu, k) for s in iter_skew_shapes(4, 3, 3) if s.mu]
        batches = _map(_verify_shape, items, args.jobs)
        if args.suite == "crystal":
            batches.append([("[2,2] through 1' 1 / 1 2'", "golden component comparison", not crystal.golden_comparison())])
    rows = [r for batch in batches for r in batch]
    failures = [r for r in rows if not r[2]]
    if args.output == "json":
        print(json.dumps([{"element": e, "property": prop, "pass": ok} for e, prop, ok in rows], sort_keys=True))
    else:
        for e, prop, ok in rows:
            print(f"{'PASS' if ok else 'FAIL'}\t{e}\t{prop}")
        print(f"{'PASS' if not failures else 'FAIL'}: {len(rows) - len(failures)}/{len(rows)} checks, "
              f"{len(items)} items, suite {args.suite}")
    if failures:
        e, prop, _ = failures[0]
        print(f"minimal reproducer: suite={args.suite} element={e} property={prop!r}", file=sys.stderr)
        return 1
    return 0


# --- conjecture -------------------------------------------------------------------------


def _conjecture_item(item):
    window, which, k, strict = item
    p = SignedPermutation(window)
    return [conjectures.check_conjecture(p, c, k, strict).to_json_obj() for c in which]


def cmd_conjecture(args) -> int:
    which = (1, 2, 3) if args.which == "all" else (int(args.which),)
    if args.window or args.word is not None:
        targets = [_element(args)]
    else:
        targets = elements(args.rank, "C", args.max_length)
    items = [(p.window, which, args.k, args.strict_factor) for p in targets]
    reports = [r for batch in _map(_conjecture_item, items, args.jobs) for r in batch]
    if args.output == "json":
        print(json.dumps(reports, sort_keys=True, indent=1))
        return 0
    for r in reports:
        line = f"{r['status']:<15}{r['element']:<22}conjecture {r['conjecture']}"
        if r["status"] == "EQUAL":
            line += "  " + str(_expansion(r["lhs"]))
        elif r["reason"]:
            line += "  (" + r["reason"] + ")"
        if r["status"] == "COUNTEREXAMPLE":
            line += "  lhs=" + str(_expansion(r["lhs"])) + "  rhs=" + str(_expansion(r["rhs"]))
        print(line)
    return 0


def _expansion(obj) -> symfunc.SchurExpansion | str:
    if obj is None:
        return "n/a"
    return symfunc.SchurExpansion({(tuple(t["mu"]), tuple(t["nu"]), t["t"]): t["c"] for t in obj})


# --- crystal export ------------------------------------------------------------------------


def cmd_crystal_export(args) -> int:
    T = PrimedTableau.parse(args.tableau)
    g = crystal.crystal_component(T, args.k)
    text = g.to_dot() if args.format == "dot" else g.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# --- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doublestanley", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file with defaults for rank, k, max_length, jobs, cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, element=False):
        sp.add_argument("--k", type=int, default=None)
        sp.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP, help="maximum element length")
        sp.add_argument("--output", choices=("text", "json"), default="text")
        if element:
            sp.add_argument("--word", help='comma-separated generators, e.g. "1,2,1"')
            sp.add_argument("--window", help='signed permutation window, e.g. "[-2,-1,4,3]"')

    c = sub.add_parser("compute", help="compute a Stanley polynomial")
    common(c, element=True)
    c.add_argument("--type", choices=("a", "c", "d"), default="d")
    c.add_argument("--format", choices=("monomial", "schur", "schur-p"), default="monomial")
    c.add_argument("--specialize", choices=tuple(SPECIALIZE), default="none")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v)
    v.add_argument("--suite", choices=("routes", "symmetry", "bijections", "crystal", "conversion", "identities"),
                   required=True)
    v.add_argument("--rank", type=int, default=2)
    v.add_argument("--max-length", dest="max_length", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("conjecture", help="test the type C conjectures")
    common(q, element=True)
    q.add_argument("--which", choices=("1", "2", "3", "all"), default="all")
    q.add_argument("--rank", type=int, default=2)
    q.add_argument("--max-length", dest="max_length", type=int, default=6)
    q.add_argument("--strict-factor", dest="strict_factor", type=_bool, default=True,
                   help="read pattern occurrence as a contiguous factor (default) or a subsequence")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_conjecture)

    x = sub.add_parser("crystal-export", help="export a bicrystal component")
    x.add_argument("--tableau", required=True)
    x.add_argument("--k", type=int, default=None)
    x.add_argument("--out", default=None)
    x.add_argument("--format", choices=("dot", "json"), default="dot")
    x.set_defaults(func=cmd_crystal_export)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        defaults = read_config(known.config)
        for action in parser._subparsers._group_actions:       # push into every subcommand
            for sp in action.choices.values():
                sp.set_defaults(**{key: value for key, value in defaults.items()
                                   if any(a.dest == key for a in sp._actions)})
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

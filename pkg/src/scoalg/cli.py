"""Command-line front end: ``scoalg VERB FILE ...``.

Exit status is 0 for success or a true verdict, 1 for a false verdict and
2 for bad input.  ``--json`` prints a document with ``terms``, ``verdicts``
and ``presentation`` fields; ``parse_report`` reads it back.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO

from .cartan import (CoalgebraEvaluator, act_on_chain, chain_map_defect, direct_f,
                     invariant_condition, verify_sq0)
from .chains import ChainElement, format_term
from .corpus import resolve
from .exceptions import ScoalgError
from .operad import BarWord, Permutation, bar_words, e, parse_bar_word
from .reconstruction import (CoalgebraPresentation, find_coalgebra_isomorphism, unit_map,
                             vertex_map_of)
from .simplicial import SimplicialComplex, boundary, iota, phi
from .topology import (Presentation, edge_relabeling, format_h1, h1, pi1_presentation,
                       presentations_match)

DEFAULT_MAX_DIM = 6


class UsageError(ScoalgError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


@dataclass
class Report:
    """Everything a verb prints; rendered as text or as JSON."""

    verb: str
    inputs: List[str]
    lines: List[str] = field(default_factory=list)
    terms: List[dict] = field(default_factory=list)
    verdicts: Dict[str, object] = field(default_factory=dict)
    presentation: Optional[dict] = None
    exit_code: int = 0

    def to_json(self) -> str:
        doc = {"verb": self.verb, "inputs": self.inputs, "terms": self.terms,
               "verdicts": self.verdicts, "presentation": self.presentation}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        return "\n".join(self.lines) + "\n"


def parse_report(text: str) -> Report:
    """Inverse of ``Report.to_json`` (the text lines are not stored)."""
    doc = json.loads(text)
    return Report(doc["verb"], doc["inputs"], [], doc["terms"], doc["verdicts"], doc["presentation"])


def max_dim_cap() -> int:
    raw = os.environ.get("SCOALG_MAX_DIM")
    if raw is None or raw == "":
        return DEFAULT_MAX_DIM
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"SCOALG_MAX_DIM: invalid value {raw!r}") from None
    if cap < 0:
        raise UsageError(f"SCOALG_MAX_DIM: invalid value {raw!r}")
    return cap


# -- helpers ---------------------------------------------------------------

def _vertex_id(X: SimplicialComplex, token: str) -> int:
    inverse = {str(lab): v for v, lab in X.labels.items()}
    if token in inverse:
        return inverse[token]
    if not X.labels:
        try:
            v = int(token)
        except ValueError:
            raise UsageError(f"unknown vertex {token!r}") from None
        if (v,) in X:
            return v
    raise UsageError(f"unknown vertex {token!r}")


def _simplex(X: SimplicialComplex, text: str) -> tuple:
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise UsageError(f"malformed simplex {text!r}")
    ids = [_vertex_id(X, t) for t in tokens]
    s = tuple(sorted(ids))
    if len(set(s)) != len(s):
        raise UsageError(f"simplex {text!r} repeats a vertex")
    if s not in X:
        raise UsageError(f"{text!r} is not a simplex of {X.name}")
    if len(s) - 1 > max_dim_cap():
        raise UsageError(f"simplex {text!r} exceeds the dimension cap {max_dim_cap()}")
    return s


def _terms(x: ChainElement, X: SimplicialComplex) -> List[dict]:
    return [{"coeff": c, "factors": [[X.label(v) for v in s] for s in w]} for w, c in x.items()]


def _term_lines(x: ChainElement, X: SimplicialComplex) -> List[str]:
    if not x:
        return ["0"]
    labels = X.labels or None
    return [format_term(c, w, labels) for w, c in x.items()]


def _presentation_doc(p: Presentation, X: SimplicialComplex) -> dict:
    lab = X.label
    return {"generators": [[lab(a), lab(b)] for a, b in p.generators],
            "relators": [[[[lab(a), lab(b)], k] for (a, b), k in r] for r in p.relators]}


# -- verbs -------------------------------------------------------------------

def cmd_coproduct(args) -> Report:
    X = resolve(args.file)
    s = _simplex(X, args.simplex)
    val = CoalgebraEvaluator(X).f(2, e(0), s)
    r = Report("coproduct", [args.file], terms=_terms(val, X))
    r.lines = [f"# f_2(e_0 (x) {_fmt_simplex(s, X)}) in {X.name}"] + _term_lines(val, X)
    return r


def _fmt_simplex(s, X: SimplicialComplex) -> str:
    return "[" + ",".join(str(X.label(v)) for v in s) + "]"


def cmd_higher(args) -> Report:
    X = resolve(args.file)
    s = _simplex(X, args.simplex)
    if args.em is not None:
        if args.em < 0:
            raise UsageError(f"--em: invalid value '{args.em}'")
        word = e(args.em)
    else:
        try:
            word = parse_bar_word(args.word, 2)
        except ScoalgError as exc:
            raise UsageError(f"--word {args.word!r}: {exc}") from None
    val = CoalgebraEvaluator(X).f(2, word, s)
    r = Report("higher", [args.file], terms=_terms(val, X))
    r.lines = [f"# f_2({word} (x) {_fmt_simplex(s, X)}) in {X.name}"] + _term_lines(val, X)
    return r


def _contracting_identity(k: int) -> bool:
    top = tuple(range(k + 1))
    for d in range(1, k + 2):
        for s in itertools.combinations(top, d):
            x = ChainElement.simplex(*s)
            lhs = x - (iota(k) if len(s) == 1 else ChainElement.zero())
            dphi = boundary(phi(k, s)) if phi(k, s) else ChainElement.zero()
            phid = phi(k, boundary(s)) if len(s) > 1 else ChainElement.zero()
            if lhs != dphi + phid:
                return False
    return True


def run_checks(X: SimplicialComplex, max_dim: int) -> Dict[str, Dict[str, object]]:
    """The invariant suite on every simplex of ``X`` up to ``max_dim``."""
    ev = CoalgebraEvaluator(X)
    T = Permutation((2, 1))
    simplices = [s for s in X.simplices() if len(s) - 1 <= max_dim]
    words = [w for m in range(4) for w in bar_words(2, m, prefix_identity=False)]
    results: Dict[str, List[bool]] = {k: [] for k in (
        "boundary_squared_zero", "contracting_identity", "chain_map", "invariant_condition",
        "equivariance", "uniqueness", "sq0_diagonal_up_to_sign", "sq0_closed_form_sign")}
    for s in simplices:
        if len(s) > 2:
            results["boundary_squared_zero"].append(not boundary(boundary(s)))
        for w in words:
            val = ev.f(2, w, s)
            results["chain_map"].append(not chain_map_defect(ev, 2, w, s))
            if w.degree > 0 and val:
                results["invariant_condition"].append(
                    invariant_condition(act_on_chain(w.prefix.inverse(), val), s))
            tw = BarWord(T * w.prefix, w.letters)
            results["equivariance"].append(ev.f(2, tw, s) == act_on_chain(T, val))
            if len(s) <= 4 and w.degree <= 2 and w.prefix.is_identity():
                results["uniqueness"].append(direct_f(2, w, s) == val)
        rep = verify_sq0(s, ev)
        diag = ev.f(2, e(len(s) - 1), s)
        results["sq0_diagonal_up_to_sign"].append(
            len(diag) == 1 and abs(diag.coefficient((s, s))) == 1)
        results["sq0_closed_form_sign"].append(rep.passed)
    for k in range(max_dim + 1):
        results["contracting_identity"].append(_contracting_identity(k))
    return {k: {"cases": len(v), "passed": all(v)} for k, v in results.items()}


def cmd_verify(args) -> Report:
    X = resolve(args.file)
    cap = max_dim_cap()
    max_dim = cap if args.max_dim is None else args.max_dim
    if max_dim < 0:
        raise UsageError(f"--max-dim: invalid value '{max_dim}'")
    max_dim = min(max_dim, cap)
    checks = run_checks(X, max_dim)
    r = Report("verify", [args.file], verdicts={k: v["passed"] for k, v in checks.items()})
    r.lines = [f"# invariant suite on {X.name}, simplices of dimension <= {max_dim}",
               f"{'check':<26} {'cases':>6}  result"]
    for k, v in checks.items():
        r.lines.append(f"{k:<26} {v['cases']:>6}  {'PASS' if v['passed'] else 'FAIL'}")
    r.exit_code = 0 if all(r.verdicts.values()) else 1
    return r


def cmd_reconstruct(args) -> Report:
    X = resolve(args.file)
    if not 0 <= args.dim <= 3:
        raise UsageError(f"--dim: invalid value '{args.dim}' (must be 0..3)")
    C = CoalgebraPresentation.from_complex(X, max_degree=args.dim)
    u = unit_map(X, C)
    Y = u.target
    r = Report("reconstruct", [args.file], verdicts={"unit_is_isomorphism": u.is_isomorphism})
    r.lines = [f"# reconstruction of {X.name} up to dimension {min(args.dim, X.dimension)}",
               "f-vector: " + " ".join(map(str, Y.f_vector())),
               "facets:"]
    r.lines += ["  " + _fmt_simplex(f, X) for f in Y.facets()]
    r.lines.append(f"unit map is an isomorphism: {'yes' if u.is_isomorphism else 'no'}")
    r.terms = [{"coeff": 1, "factors": [[X.label(v) for v in f]]} for f in Y.facets()]
    r.exit_code = 0 if u.is_isomorphism else 1
    return r


def cmd_pi1(args) -> Report:
    X = resolve(args.file)
    base = _vertex_id(X, args.basepoint) if args.basepoint is not None else None
    p = pi1_presentation(X, base)
    r = Report("pi1", [args.file], presentation=_presentation_doc(p, X))
    b = X.label(base if base is not None else X.vertices[0])
    r.lines = [f"# edge-path presentation of pi_1({X.name}, {b})"] + \
        p.format(X.labels or None).splitlines()
    return r


def cmd_h1(args) -> Report:
    X = resolve(args.file)
    rank, torsion = h1(X)
    r = Report("h1", [args.file], verdicts={"rank": rank, "torsion": torsion})
    r.lines = [f"H_1({X.name}) = {format_h1(rank, torsion)}", f"rank {rank}",
               "torsion " + (" ".join(map(str, torsion)) if torsion else "none")]
    return r


def cmd_compare(args) -> Report:
    X, Y = resolve(args.file1), resolve(args.file2)
    witness = find_coalgebra_isomorphism(X, Y)
    hx, hy = h1(X), h1(Y)
    r = Report("compare", [args.file1, args.file2])
    r.lines = [f"# coalgebra isomorphism search {X.name} -> {Y.name}"]
    match = False
    if witness is None:
        r.lines.append("no witness")
    else:
        vmap = vertex_map_of(witness)
        r.lines.append("witness (vertex map):")
        r.lines += [f"  {X.label(v)} -> {Y.label(vmap[v])}" for v in sorted(vmap)]
        base = X.vertices[0]
        p, q = pi1_presentation(X, base), pi1_presentation(Y, vmap[base])
        match = presentations_match(p, q, edge_relabeling(vmap, X.simplices(1)))
        r.presentation = _presentation_doc(q, Y)
        r.terms = [{"coeff": 1, "factors": [[X.label(v)], [Y.label(vmap[v])]]} for v in sorted(vmap)]
    r.lines.append(f"pi_1 presentations match: {'yes' if match else 'no'}")
    r.lines.append(f"H_1: {format_h1(*hx)} vs {format_h1(*hy)}")
    r.verdicts = {"isomorphic": witness is not None, "presentations_match": match,
                  "h1_equal": hx == hy}
    r.exit_code = 0 if witness is not None and match else 1
    return r


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="scoalg", description="Chain-level coalgebra computations on simplicial complexes.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("coproduct", parents=[common], help="Alexander-Whitney coproduct of a simplex")
    c.add_argument("file")
    c.add_argument("--simplex", required=True, help="comma-separated vertices")
    c.set_defaults(func=cmd_coproduct)

    h = sub.add_parser("higher", parents=[common], help="f_2 of a bar word on a simplex")
    h.add_argument("file")
    h.add_argument("--simplex", required=True)
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="letters separated by ';', e.g. '(1,2);(1,2)'")
    g.add_argument("--em", type=int, help="use e_K = [(1,2)|...|(1,2)]")
    h.set_defaults(func=cmd_higher)

    v = sub.add_parser("verify", parents=[common], help="invariant suite report")
    v.add_argument("file")
    v.add_argument("--max-dim", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reconstruct", parents=[common], help="rebuild the skeleton from the coalgebra")
    r.add_argument("file")
    r.add_argument("--dim", type=int, default=3)
    r.set_defaults(func=cmd_reconstruct)

    q = sub.add_parser("pi1", parents=[common], help="edge-path presentation of pi_1")
    q.add_argument("file")
    q.add_argument("--basepoint", default=None)
    q.set_defaults(func=cmd_pi1)

    a = sub.add_parser("h1", parents=[common], help="first integral homology")
    a.add_argument("file")
    a.set_defaults(func=cmd_h1)

    m = sub.add_parser("compare", parents=[common], help="coalgebra isomorphism search and pi_1 verdict")
    m.add_argument("file1")
    m.add_argument("file2")
    m.set_defaults(func=cmd_compare)
    return p


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        max_dim_cap()
        report = args.func(args)
    except ScoalgError as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        err.write(f"scoalg: error: {msg}\n")
        return 2
    out.write(report.to_json() if args.json else report.to_text())
    return report.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 a guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

from . import growth as gr
from . import groebner as gbm
from . import resolution as res
from . import serre
from ._kernels import BACKEND
from .automaton import (GuardError, build_ufnarovski, count_normal_words,
                        counts_csv, to_dot)
from .automaton import to_dict as graph_dict
from .catalog import builtin_presentation
from .corpus import ENV_VAR, load_corpus, resolve
from .model import MonomialPresentation, PresentationError
from .parser import format_polynomial, serialize
from .parser import to_dict as pres_dict
from .sampling import BudgetExhausted, random_monomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

GUARD_DEFAULTS = {"n": 5000, "dmax": 20000, "gldim": 12, "gb": 40}


class UsageError(Exception):
    pass


def parse_guard(spec: str | None) -> dict:
    out = dict(GUARD_DEFAULTS)
    if not spec:
        return out
    for part in spec.split(","):
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or key not in out:
            raise UsageError(f"bad guard item {part!r}; keys: {', '.join(out)}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"guard {key} needs an integer, got {val!r}") from None
    return out


def parse_t_grid(spec: str | None) -> tuple[float, ...]:
    if not spec:
        return (0.0,)
    try:
        return tuple(float(x) for x in spec.split(","))
    except ValueError:
        raise UsageError(f"--t expects comma-separated numbers, got {spec!r}") from None


_BUILTIN = re.compile(r"^([a-z_0-9]+)\(([-0-9,\s]*)\)$")


def load(args):
    """Presentation named on the command line: ``random`` (uses --seed), a
    builtin such as ``free(3)``, a file path, or a corpus entry name."""
    spec = args.presentation
    if spec is None:
        raise UsageError("a presentation is required")
    if spec == "random":
        return random_monomial(args.seed if args.seed is not None else 0)
    m = _BUILTIN.match(spec)
    if m and not Path(spec).exists():
        params = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
        return builtin_presentation(m.group(1), params)
    try:
        return resolve(spec, args.corpus).load()
    except FileNotFoundError as e:
        raise UsageError(str(e)) from None


def _check_n(args, default: int) -> int:
    n = default if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    if n > args.guards["n"]:
        raise GuardError(f"--n {n} exceeds guard n={args.guards['n']}")
    return n


def _monomial(pres, args, what: str) -> MonomialPresentation:
    """The presentation, or the leading-word model of its complete GB."""
    if isinstance(pres, MonomialPresentation):
        return pres
    if not pres.quiver.is_standard:
        raise UsageError(f"{what} needs a monomial or standard-graded presentation")
    gb = gbm.buchberger_truncated(pres, args.guards["gb"])
    if not gb.complete:
        raise GuardError(f"Gröbner basis not complete up to degree {args.guards['gb']}")
    return gbm.leading_word_model(gb)


def _emit(args, payload: dict, text: str | None = None):
    js = json.dumps(payload, sort_keys=True, indent=2, default=str)
    if args.json == "-":
        print(js)
    elif args.json:
        Path(args.json).write_text(js + "\n", encoding="utf-8")
    if text is not None and args.json != "-":
        print(text)


def _emit_csv(args, text: str) -> bool:
    """Write CSV to --csv; return True if it went to stdout."""
    if args.csv == "-":
        sys.stdout.write(text)
        return True
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    return False


def _json_safe(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


# --- subcommands ------------------------------------------------------------

def cmd_show(args):
    pres = load(args)
    payload = {"presentation": pres_dict(pres), "backend": BACKEND}
    lines = [serialize(pres).rstrip()]
    if isinstance(pres, MonomialPresentation):
        g = build_ufnarovski(pres)
        payload["automaton"] = graph_dict(g)
        lines.append(f"# automaton: {g.n_states} states, word length {g.state_len}")
        if args.dot:
            lines.append(to_dot(g))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_hilbert(args):
    pres = load(args)
    n = _check_n(args, 30)
    if isinstance(pres, MonomialPresentation) and pres.quiver.is_standard:
        g = build_ufnarovski(pres)
        need = 2 * (g.n_states + g.state_len) - 1
        data = gr.hilbert_series(g, max(n, need))
        coeffs = list(data.coefficients[: n + 1])
        payload = {"coefficients": coeffs, "numerator": [str(c) for c in data.numerator],
                   "denominator": [str(c) for c in data.denominator], "certified": True}
        if args.per_vertex:
            if _emit_csv(args, counts_csv(count_normal_words(g, n), pres.quiver.vertices)):
                return EXIT_OK
    else:
        gb = gbm.buchberger_truncated(pres, min(n, args.guards["gb"]))
        coeffs = gbm.dims_from_gb(gb, n)
        payload = {"coefficients": coeffs, "certified": gb.complete,
                   "certification": gb.certification()}
        try:
            data = gr.rational_form(coeffs, len(coeffs) // 2)
            payload["numerator"] = [str(c) for c in data.numerator]
            payload["denominator"] = [str(c) for c in data.denominator]
        except gr.GrowthError:
            pass
    csv_text = "n,dim\n" + "".join(f"{i},{c}\n" for i, c in enumerate(coeffs))
    if _emit_csv(args, csv_text):
        return EXIT_OK
    text = " ".join(str(c) for c in coeffs)
    if "numerator" in payload:
        text += f"\nnumerator {payload['numerator']}\ndenominator {payload['denominator']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_growth(args):
    pres = load(args)
    n = _check_n(args, 200)
    g = build_ufnarovski(_monomial(pres, args, "growth"))
    rep = gr.classify_growth(g, horizon=max(n, 2))
    payload = rep.to_dict()
    text = f"{rep.classification}; gk_dim {_json_safe(rep.gk_dim)}; entropy {_json_safe(rep.entropy_value)}"
    if rep.entropy is not None:
        lo, hi = rep.entropy.interval
        text += f" in [{lo!r}, {hi!r}]"
    if rep.quasi is not None:
        text += f"; quasi-polynomial period {rep.quasi.period}, onset {rep.quasi.onset}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_serre(args):
    pres = load(args)
    n = _check_n(args, 200)
    if n < 1:
        raise UsageError("--n must be >= 1")
    g = build_ufnarovski(_monomial(pres, args, "serre"))
    policy = None
    if args.dmax is not None:
        if args.dmax < 0:
            raise UsageError("--dmax must be >= 0")
        policy = lambda _g, _n: args.dmax  # noqa: E731
    elif 3 * n + g.n_states > args.guards["dmax"]:
        raise GuardError(f"shift range exceeds guard dmax={args.guards['dmax']}")
    rs = serre.rank_sequence(g, n, policy)
    csv_only = _emit_csv(args, rs.csv())
    payload = {"ranks": rs.to_dict()}
    text = None
    growth = gr.classify_growth(g, fit_quasi=False)
    if n >= 40:
        rep = serre.serre_entropy_report(rs, growth)
        payload["report"] = rep.to_dict()
        verdict = rep.hpol_verdict if rep.hpol_verdict == "exact-0" else f"{rep.hpol_estimate:.4f}"
        text = (f"# {serre.RANK_LABEL}\n# h estimate {rep.h_estimate:.6f} "
                f"(h(A) = {_json_safe(rep.h_reference)}), hpol {verdict}"
                + (f", C = {rep.bound_C}" if rep.bound_C is not None else ""))
    if not args.csv:
        sys.stdout.write(rs.csv())
    if not csv_only:
        _emit(args, payload, text)
    return EXIT_OK


def cmd_betti(args):
    pres = load(args)
    i_max = args.imax
    j_max = args.jmax
    if pres.quiver.is_standard is False:
        raise UsageError("resolutions are computed for standard gradings only")
    if args.n is not None:
        if not isinstance(pres, MonomialPresentation):
            raise UsageError("truncation modules need a monomial presentation")
        n = _check_n(args, 0)
        table = res.truncation_betti(pres, n, i_max, j_max)
        rows = res.check_betti_inequality(pres, n, i_max)
        extra = {"inequality": [{"i": r.i, "b_M": r.b_M, "b_k": r.b_k, "D_i": r.D_i,
                                 "rhs": r.rhs, "holds": r.holds} for r in rows]}
    else:
        src = pres if isinstance(pres, MonomialPresentation) else \
            gbm.buchberger_truncated(pres, j_max)
        table = res.trivial_betti(src, i_max, j_max)
        extra = {}
    if _emit_csv(args, table.csv()):
        return EXIT_OK
    payload = table.to_dict() | extra
    _emit(args, payload, table.csv().rstrip())
    if extra and not all(r["holds"] for r in extra["inequality"]):
        return EXIT_FAIL
    return EXIT_OK


def cmd_gb(args):
    pres = load(args)
    if isinstance(pres, MonomialPresentation):
        pres = pres.as_graded()
    n = _check_n(args, 10)
    if n > args.guards["gb"]:
        raise GuardError(f"GB degree {n} exceeds guard gb={args.guards['gb']}")
    gb = gbm.buchberger_truncated(pres, n)
    payload = gb.to_dict()
    payload["dims"] = gbm.dims_from_gb(gb, n)
    cert = gb.certification()
    text = "\n".join(format_polynomial(p) for p in gb.polynomials)
    text += (f"\n# {cert['size']} elements, degree bound {n}, "
             f"{'complete' if gb.complete else 'truncated'}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_ext(args):
    pres = load(args)
    n = _check_n(args, 5)
    l = args.l
    if l < 1:
        raise UsageError("--l must be >= 1")
    top = n + l
    if isinstance(pres, MonomialPresentation) and pres.quiver.is_standard:
        dims = [v.total for v in count_normal_words(build_ufnarovski(pres), top)]
    elif pres.quiver.is_standard:
        dims = gbm.dims_from_gb(gbm.buchberger_truncated(pres, min(top, args.guards["gb"])), top)
    else:
        raise UsageError("ext needs a standard grading")
    eo, eg = res.ext_distance_regular(dims, l, n)
    grid = parse_t_grid(args.t)
    payload = {"n": n, "l": l, "eps_O": eo.to_dict(), "eps_G": eg.to_dict(),
               "values": {str(t): {"eps_O": eo(t), "eps_G": eg(t)} for t in grid}}
    text = "\n".join(f"t={t}: eps_O={eo(t)} eps_G={eg(t)}" for t in grid)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args):
    from .verify import records_json, verify_all
    only = args.only.split(",") if args.only else None
    if not args.all and not only:
        raise UsageError("verify needs --all or --only ID[,ID...]")
    records = verify_all(only=only, jobs=args.jobs, corpus_dir=args.corpus)
    if not records:
        raise UsageError(f"no criterion matches {args.only!r}")
    for r in records:
        print(r.line())
    if args.json:
        text = records_json(records)
        if args.json == "-":
            print(text)
        else:
            Path(args.json).write_text(text + "\n", encoding="utf-8")
    return EXIT_OK if all(r.status != "fail" for r in records) else EXIT_FAIL


def cmd_report(args):
    pres = load(args)
    n = _check_n(args, 200)
    payload = {"presentation": pres_dict(pres)}
    mp = _monomial(pres, args, "report")
    g = build_ufnarovski(mp)
    growth = gr.classify_growth(g)
    payload["growth"] = growth.to_dict()
    if growth.classification != "finite" and n >= 40:
        rs = serre.rank_sequence(g, n)
        payload["serre"] = serre.serre_entropy_report(rs, growth).to_dict()
    if mp.quiver.is_standard:
        try:
            payload["global_dimension"] = res.global_dimension(mp, args.guards["gldim"])
        except res.InfiniteGlobalDimension:
            payload["global_dimension"] = f">= {args.guards['gldim']}"
    text = json.dumps(payload, sort_keys=True, indent=2, default=str)
    if args.json and args.json != "-":
        Path(args.json).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def cmd_corpus(args):
    entries = load_corpus(args.corpus)
    bad = []
    rows = []
    for e in entries:
        pres = e.load()
        kind = "monomial" if isinstance(pres, MonomialPresentation) else "graded"
        row = {"name": e.name, "kind": kind, "annotations": {k: _json_safe(v) for k, v in e.annotations.items()}}
        if args.check:
            try:
                mp = _monomial(pres, args, "corpus check")
            except UsageError:
                mp = None
            if mp is not None:
                rep = gr.classify_growth(build_ufnarovski(mp), fit_quasi=False)
                row["computed"] = {"growth": rep.classification, "gk_dim": _json_safe(rep.gk_dim)}
                ann = e.annotations
                if "growth" in ann and ann["growth"] != rep.classification:
                    bad.append(f"{e.name}: growth {rep.classification} != {ann['growth']}")
                if "gk_dim" in ann and ann["gk_dim"] != rep.gk_dim:
                    bad.append(f"{e.name}: gk_dim {rep.gk_dim} != {ann['gk_dim']}")
                if "entropy" in ann and rep.entropy is not None and \
                        not rep.entropy.contains(ann["entropy"]):
                    if abs(rep.entropy.value - ann["entropy"]) > 1e-12:
                        bad.append(f"{e.name}: entropy {rep.entropy.value} != {ann['entropy']}")
        rows.append(row)
    if args.json:
        _emit(args, {"entries": rows, "mismatches": bad})
    if args.json != "-":
        for r in rows:
            ann = " ".join(f"{k}={v}" for k, v in r["annotations"].items())
            print(f"{r['name']:<24} {r['kind']:<9} {ann}")
        for b in bad:
            print(f"MISMATCH {b}")
    return EXIT_FAIL if bad else EXIT_OK


COMMANDS = {
    "show": (cmd_show, "print a presentation and its automaton"),
    "hilbert": (cmd_hilbert, "graded dimensions and rational Hilbert series"),
    "growth": (cmd_growth, "growth classification, entropy and GK dimension"),
    "serre": (cmd_serre, "ranks of the Serre twists and entropy report"),
    "betti": (cmd_betti, "graded Betti numbers (trivial module, or truncation with --n)"),
    "gb": (cmd_gb, "truncated Gröbner basis"),
    "ext": (cmd_ext, "Ext-distance polynomials for the regular generator"),
    "verify": (cmd_verify, "run acceptance checks"),
    "report": (cmd_report, "combined JSON report"),
    "corpus": (cmd_corpus, "list the corpus (and check annotations with --check)"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="degree / twist bound")
    common.add_argument("--dmax", type=int, help="fixed shift range for rank search")
    common.add_argument("--t", help="comma-separated t grid")
    common.add_argument("--seed", type=int, help="seed for the 'random' presentation")
    common.add_argument("--json", metavar="PATH", help="write JSON to PATH ('-' for stdout)")
    common.add_argument("--csv", metavar="PATH", help="write CSV to PATH ('-' for stdout)")
    common.add_argument("--guard", metavar="K=V,...",
                        help="resource limits: " + ", ".join(f"{k}={v}" for k, v in GUARD_DEFAULTS.items()))
    common.add_argument("--corpus", metavar="DIR", help=f"corpus directory (default ${ENV_VAR} or bundled)")

    p = argparse.ArgumentParser(prog="ncgrowth", description="growth and Serre-twist entropy of quiver algebras")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if name not in ("verify", "corpus"):
            sp.add_argument("presentation", help="file, corpus name, builtin like free(3), or 'random'")
        if name == "show":
            sp.add_argument("--dot", action="store_true", help="also print the automaton as DOT")
        if name == "hilbert":
            sp.add_argument("--per-vertex", action="store_true", help="CSV of counts by end vertex")
        if name == "betti":
            sp.add_argument("--imax", type=int, default=4)
            sp.add_argument("--jmax", type=int, default=8)
        if name == "ext":
            sp.add_argument("--l", type=int, default=2, help="number of twists in the generator")
        if name == "verify":
            sp.add_argument("--all", action="store_true")
            sp.add_argument("--only", help="comma-separated criterion id prefixes")
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        if name == "corpus":
            sp.add_argument("--check", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        args.guards = parse_guard(args.guard)
        return COMMANDS[args.command][0](args)
    except (GuardError, BudgetExhausted, res.InfiniteGlobalDimension) as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, PresentationError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

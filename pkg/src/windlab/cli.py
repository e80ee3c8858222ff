"""Command-line interface.

Exit codes: 0 success or "trivial", 1 "nontrivial" or a failing suite,
2 usage and parse errors, 3 unmet preconditions (e.g. a word outside F2').
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import acceptance
from .coloring import BLACK, WHITE, PGoodColoring, TwoColoring, standard_coloring
from .invariant import (
    InvariantSpec,
    basiccom_report,
    engel_gamma_report,
    engel_poly,
    lambda_of_word,
    m24_is_trivial,
    morse_report,
    n2n_is_trivial,
    omega,
    omega_bar,
    omega_of_poly,
    omega_tilde,
)
from .quotient import (
    bounds_table,
    build_lattice,
    complete_lattice,
    m24_word_problem_nf,
    quotient_order,
)
from .render import RenderConfig, write_svg
from .subgroup import (
    cotainf_image_order,
    factor_power,
    omega_bar_image_order,
    omega_image_order,
    restricted_burnside_bound,
)
from .winding import NotInDerivedSubgroup, winding_invariant
from .word import WordSyntaxError, format_word, named_relator_family, parse_word

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return a, b


def parse_coloring(text: str, n: int):
    """Coloring specs: ``c<i>`` (standard), a string of B/W, or ``p<p>:a,b,...``."""
    if text.startswith("c") and text[1:].isdigit():
        return standard_coloring(int(text[1:]), n)
    if text.startswith("p") and ":" in text:
        head, body = text.split(":", 1)
        colors = tuple(int(s) for s in body.split(","))
        if len(colors) != n:
            raise UsageError(f"p-good coloring needs {n} values")
        return PGoodColoring(int(head[1:]), n, colors).validate()
    if text and set(text) <= {"B", "W"}:
        if len(text) != n:
            raise UsageError(f"coloring needs {n} letters")
        return TwoColoring(n, tuple(BLACK if ch == "B" else WHITE for ch in text)).validate()
    raise UsageError(f"unrecognised coloring {text!r}")


def _emit(obj, as_json: bool = True) -> None:
    print(json.dumps(obj) if as_json else obj)


def _order_record(target: str, n: int, order: int) -> dict:
    return {"target": target, "n": n, "order": str(order), "order_factored": factor_power(order)}


# -- subcommands -----------------------------------------------------------------

def cmd_parse(a) -> int:
    print(format_word(parse_word(a.word), fold=a.fold))
    return EXIT_OK


def cmd_winding(a) -> int:
    p = winding_invariant(parse_word(a.word))
    print(p.to_json() if a.json else p.to_text())
    return EXIT_OK


def cmd_invariant(a) -> int:
    spec = InvariantSpec(a.n, a.phi[0], a.phi[1], a.translate, parse_coloring(a.coloring, a.n))
    value = lambda_of_word(spec, parse_word(a.word))
    if a.json:
        _emit({"spec": spec.to_json_dict(), "value": value, "modulus": a.n})
    else:
        print(value)
    return EXIT_OK


def cmd_omega(a) -> int:
    w = parse_word(a.word)
    if a.tilde:
        vec = list(omega_tilde(w))
    elif a.bar:
        ar, om = omega_bar(w, a.n)
        vec = [ar] + list(om.as_tuple())
    else:
        vec = list(omega(w, a.n).as_tuple())
    print(json.dumps(vec) if a.json else " ".join(map(str, vec)))
    return EXIT_OK


def cmd_word_problem(a) -> int:
    w = parse_word(a.word)
    if a.group == "m24":
        if a.n not in (None, 4):
            raise UsageError("the m24 group fixes n = 4")
        trivial = m24_word_problem_nf(w) if a.method == "normalform" else m24_is_trivial(w)
    else:
        if a.n is None:
            raise UsageError("n2n needs --n")
        if a.method == "normalform":
            raise UsageError("the normal-form method is only available for m24")
        trivial = n2n_is_trivial(w, a.n)
    print("trivial" if trivial else "nontrivial")
    return EXIT_OK if trivial else EXIT_NO


def cmd_identity(a) -> int:
    if a.family == "engel":
        if a.index is not None:
            vec = omega_of_poly(engel_poly(a.index), a.n)
            _emit({"family": "engel", "n": a.n, "index": a.index, "omega": list(vec.as_tuple()), "zero": vec.is_zero()})
        else:
            rep = engel_gamma_report(a.n)
            _emit({
                "family": "engel", "n": a.n, "first_vanishing": rep.first_vanishing,
                "trivial_on_gamma": rep.trivial_on_gamma,
            })
    elif a.family == "morse":
        k = a.n.bit_length() - 1
        if a.n != 2 ** k:
            raise ValueError("Morse certificates need n = 2^k")
        rep = morse_report(k)
        _emit({
            "family": "morse", "n": rep.n, "k": k,
            "satisfied_at": rep.satisfied_at, "divisible": rep.divisible,
            "violated_at": rep.violated_at, "omega": list(rep.omega_violated),
            "h0_minus_h1": rep.h0_minus_h1,
        })
    else:
        rep = basiccom_report(a.n)
        _emit({
            "family": "basic", "n": a.n, "expected": rep.expected,
            "values": {str(i): v for i, v in rep.values.items()},
            "all_match": rep.all_match, "none_divisible_by_8": rep.none_divisible_by_8,
        })
    return EXIT_OK


def cmd_image_order(a) -> int:
    if a.target == "omega":
        _emit(_order_record("omega", a.n, omega_image_order(a.n)))
    elif a.target == "omega-bar":
        _emit(_order_record("omega-bar", a.n, omega_bar_image_order(a.n)))
    elif a.target == "cotainf":
        _emit(_order_record("cotainf", a.n, cotainf_image_order(a.n)))
    else:
        rep = restricted_burnside_bound(strict=False)
        out = _order_record("r28", 8, rep.subgroup_order)
        out.update({
            "omega_z": list(rep.omega_z),
            "listed_tuples_match": rep.listed_tuples_match,
            "schreier_rank": rep.schreier_rank,
            "base_exponent": rep.base_exponent,
            "bound_exponent": rep.total_exponent,
        })
        _emit(out)
    return EXIT_OK


def _read_relators(path: str) -> tuple[list, list[str]]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read relator file {path}: {exc}")
    texts = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    return [parse_word(t) for t in texts], texts


def cmd_quotient(a) -> int:
    if a.complete:
        lat = complete_lattice(a.n, allow_large=a.allow_large)
    elif a.relators:
        words, names = _read_relators(a.relators)
        lat = build_lattice(words, a.n, names, allow_large=a.allow_large, threads=_threads())
    else:
        named = named_relator_family(a.n)
        lat = build_lattice([w for _, w in named], a.n, [k for k, _ in named], allow_large=a.allow_large)
    _emit(quotient_order(lat).to_json_dict())
    return EXIT_OK


def cmd_bounds(a) -> int:
    table = bounds_table(a.d, a.n)
    if a.json:
        _emit(table)
        return EXIT_OK
    for b in table["bounds"]:
        if b["value"] is None and not b["note"]:
            print(f"{b['name']:<18} not applicable")
        elif b["value"] is None:
            print(f"{b['name']:<18} {b['note']}")
        else:
            print(f"{b['name']:<18} {b['factored']}")
    return EXIT_OK


def cmd_render(a) -> int:
    spec = None
    if a.coloring:
        spec = InvariantSpec(a.n, a.phi[0], a.phi[1], a.translate, parse_coloring(a.coloring, a.n))
    cfg = RenderConfig(a.cell_px, a.pad, not a.no_winding, spec)
    write_svg(parse_word(a.word), a.output, cfg)
    return EXIT_OK


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("WINDLAB_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(a) -> int:
    if a.suite == "all":
        numbers = sorted(acceptance.CRITERIA)
    else:
        try:
            numbers = [int(a.suite.lstrip("c"))]
        except ValueError:
            raise UsageError(f"unknown suite {a.suite!r}; use all or 1..14")
        if numbers[0] not in acceptance.CRITERIA:
            raise UsageError(f"unknown suite {a.suite!r}; use all or 1..14")
    if a.skip_known_failures:
        numbers = [k for k in numbers if k not in acceptance.KNOWN_FAILURES]
    with ThreadPoolExecutor(_threads()) as pool:
        results = list(pool.map(lambda k: acceptance.CRITERIA[k](), numbers))
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_NO


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="windlab", description="Winding and coloring invariants of words in F(x, y).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the reduced form of a word")
    p.add_argument("word")
    p.add_argument("--fold", action="store_true", help="fold runs into powers")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("winding", help="winding invariant of a word in F2'")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("invariant", help="coloring invariant of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--phi", type=_pair, default=(0, 1))
    p.add_argument("--translate", type=_pair, default=(0, 0))
    p.add_argument("--coloring", default="c0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("omega", help="Omega, Omega-bar or Omega-tilde of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, default=4)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bar", action="store_true")
    g.add_argument("--tilde", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("word-problem", help="decide triviality in M(2,4) or N(2,n)")
    p.add_argument("word")
    p.add_argument("--group", choices=("m24", "n2n"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("invariant", "normalform"), default="invariant")
    p.set_defaults(func=cmd_word_problem)

    p = sub.add_parser("identity", help="Engel, Morse and basic commutator reports")
    p.add_argument("--family", choices=("engel", "morse", "basic"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--index", type=int)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("image-order", help="order of the image of an invariant")
    p.add_argument("--target", choices=("omega", "omega-bar", "cotainf", "r28"), required=True)
    p.add_argument("--n", type=int, default=8)
    p.set_defaults(func=cmd_image_order)

    p = sub.add_parser("quotient", help="quotient of the torus window by a relation lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relators", help="file with one word per line")
    p.add_argument("--complete", action="store_true", help="use the generators of the full relation ideal")
    p.add_argument("--allow-large", action="store_true", help="permit n up to 16")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("bounds", help="closed-form order bounds for M(d, n)")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("render", help="draw the curve of a word as SVG")
    p.add_argument("word")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--coloring")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--phi", type=_pair, default=(0, 1))
    p.add_argument("--translate", type=_pair, default=(0, 0))
    p.add_argument("--cell-px", type=int, default=24)
    p.add_argument("--pad", type=int, default=1)
    p.add_argument("--no-winding", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--suite", default="all")
    p.add_argument("--skip-known-failures", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (WordSyntaxError, OverflowError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotInDerivedSubgroup, ValueError, LookupError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())

"""Command-line interface: ``quantlang <command> ...``.

Every command prints a JSON result document on stdout.  Exit codes:
0 success, 1 malformed input or failed validation, 2 a proven non-closure or
a non-isolated cut-point, 3 a resource cap.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analysis, closure_finite, closure_omega
from .core import as_rational, epsilon_approximation, format_rational, scale, shift, validate
from .documents import automaton_to_dict, dumps, load_automaton, save_automaton
from .errors import ClosureError, NotIsolated, QuantlangError, TooLarge, WrongArity
from .valuation import evaluate, evaluate_lasso, top_value
from .words import parse_word, sample_lassos

#: words longer than this (prefix plus period) are refused
MAX_WORD_POSITIONS = 10**4

EXIT_INPUT, EXIT_CLOSURE, EXIT_CAP = 1, 2, 3


class CliError(QuantlangError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


class Session:
    """Per-invocation output options."""

    def __init__(self, args):
        self.decimal = getattr(args, "decimal", None)

    def number(self, doc: dict, key: str, value: Fraction) -> None:
        doc[key] = format_rational(value)
        if self.decimal is not None:
            doc[key + "_decimal"] = f"{float(value):.{self.decimal}f}"


def _emit(args, doc: dict, automaton) -> dict:
    if getattr(args, "output", None):
        save_automaton(automaton, args.output)
        doc["output"] = args.output
    else:
        doc["automaton"] = automaton_to_dict(automaton)
    return doc


def _word(A, text: str):
    w = parse_word(text, A.alphabet)
    if len(w) > MAX_WORD_POSITIONS:
        raise TooLarge(f"word has {len(w)} positions; the cap is {MAX_WORD_POSITIONS}")
    return w


def _require_infinite(A, command: str):
    if A.value_function.is_finite_word:
        raise WrongArity(f"{command} needs an infinite-word automaton, got {A.value_function}")


def _forced(args):
    return False if getattr(args, "nondeterministic", False) else None


# --------------------------------------------------------------------------
# commands


def cmd_validate(args, out: Session) -> tuple:
    A = load_automaton(args.file, require_total=False)
    if hasattr(A, "value_function"):
        report = validate(A)
        total, det, missing = report.is_total, report.is_deterministic, report.violations
    else:
        missing = tuple(pair for pair, succ in A.successors.items() if not succ)
        total, det = not missing, A.is_deterministic
    doc = {
        "operation": "validate",
        "file": args.file,
        "is_total": total,
        "is_deterministic": det,
        "missing": [list(p) for p in missing],
    }
    return doc, 0 if total else EXIT_INPUT


def cmd_eval(args, out: Session) -> dict:
    A = load_automaton(args.file)
    w = _word(A, args.word)
    doc = {"operation": "eval", "word": str(w)}
    out.number(doc, "value", evaluate(A, w))
    return doc


def cmd_compose(args, out: Session) -> dict:
    A1, A2 = load_automaton(args.file_a), load_automaton(args.file_b)
    module = closure_finite if A1.value_function.is_finite_word else closure_omega
    suffix = "finite" if module is closure_finite else "omega"
    op = getattr(module, f"{args.op}_{suffix}")
    C = op(A1, A2, deterministic=_forced(args))
    return _emit(args, {"operation": f"compose {args.op}", "states": len(C.states)}, C)


def cmd_complement(args, out: Session) -> dict:
    A = load_automaton(args.file)
    if A.value_function.is_finite_word:
        C = closure_finite.complement_finite(A, deterministic=_forced(args))
    else:
        C = closure_omega.complement_omega(A, deterministic=_forced(args))
    return _emit(args, {"operation": "complement", "states": len(C.states)}, C)


def cmd_shift(args, out: Session) -> dict:
    C = shift(load_automaton(args.file), args.c)
    return _emit(args, {"operation": "shift", "c": format_rational(args.c)}, C)


def cmd_scale(args, out: Session) -> dict:
    C = scale(load_automaton(args.file), args.c)
    return _emit(args, {"operation": "scale", "c": format_rational(args.c)}, C)


def cmd_reduce_bool(args, out: Session) -> dict:
    C = analysis.boolean_weight_reduction(load_automaton(args.file))
    return _emit(args, {"operation": "reduce-bool", "states": len(C.states)}, C)


def cmd_cutpoint(args, out: Session) -> dict:
    A = load_automaton(args.file)
    kind = A.value_function.kind
    doc = {"operation": "cutpoint", "eta": format_rational(args.eta)}
    if kind == "limavg":
        cp = analysis.cutpoint_dlavg(A, args.eta)
    elif kind == "disc":
        if args.eps is None:
            raise CliError("cutpoint on a disc automaton needs --eps")
        cp = analysis.cutpoint_ddisc(A, args.eta, args.eps)
        doc["eps"] = format_rational(args.eps)
        doc["depth"] = cp.depth
    else:
        raise CliError(f"cut-points are extracted from limavg or disc automata, not {kind}")
    return _emit(args, doc, cp.automaton)


def cmd_isolate(args, out: Session) -> tuple:
    A = load_automaton(args.file)
    kind = A.value_function.kind
    if kind == "limavg":
        res = analysis.isolation_check_dlavg(A, args.eta)
    elif kind == "disc":
        res = analysis.isolation_probe_disc(A, args.eta, args.delta, args.max_depth)
    else:
        raise CliError(f"isolation is checked for limavg or disc automata, not {kind}")
    doc = {"operation": "isolate", "eta": format_rational(args.eta), "verdict": res.verdict}
    if res.margin is not None:
        out.number(doc, "margin", res.margin)
    if res.witness is not None:
        doc["witness"] = str(res.witness)
        out.number(doc, "value", res.value)
    if res.depth is not None:
        doc["depth"] = res.depth
    return doc, EXIT_CLOSURE if res.verdict == "not_isolated" else 0


def cmd_perturb(args, out: Session) -> dict:
    C = epsilon_approximation(load_automaton(args.file), args.eps, args.seed)
    return _emit(args, {"operation": "perturb", "eps": format_rational(args.eps), "seed": args.seed}, C)


def cmd_dsup(args, out: Session) -> dict:
    A, B = load_automaton(args.file_a), load_automaton(args.file_b)
    _require_infinite(A, "dsup")
    sample = sample_lassos(A.alphabet, args.samples, args.seed)
    doc = {"operation": "dsup", "samples": args.samples, "seed": args.seed}
    out.number(doc, "sampled_dsup", analysis.sampled_dsup(A, B, sample))
    return doc


def cmd_top(args, out: Session) -> dict:
    A = load_automaton(args.file)
    _require_infinite(A, "top")
    value, witness = top_value(A)
    doc = {"operation": "top", "witness": str(witness)}
    out.number(doc, "value", value)
    return doc


def cmd_diff(args, out: Session) -> dict:
    A, B = load_automaton(args.file_a), load_automaton(args.file_b)
    _require_infinite(A, "diff")
    sample = sample_lassos(A.alphabet, args.samples, args.seed)
    worst, witness = Fraction(0), None
    for w in sample:
        a, b = evaluate_lasso(A, w), evaluate_lasso(B, w)
        worst = max(worst, abs(a - b))
        if witness is None and a > b:
            witness = (w, a, b)
    doc = {"operation": "diff", "samples": args.samples, "seed": args.seed}
    out.number(doc, "max_difference", worst)
    if witness is None:
        doc["witness"] = None
    else:
        w, a, b = witness
        doc["witness"] = {"word": str(w), "value_a": format_rational(a), "value_b": format_rational(b)}
    return doc


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quantlang", description="Exact weighted automata over words.")
    parser.add_argument("--decimal", type=int, metavar="K", help="also print values with K decimals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def out_opt(p):
        p.add_argument("-o", "--output", help="write the resulting automaton here")

    p = add("validate", cmd_validate, "report totality and determinism")
    p.add_argument("file")

    p = add("eval", cmd_eval, "value of one word")
    p.add_argument("file")
    p.add_argument("--word", required=True, help='e.g. "a b" or "a (b a)"')

    p = add("compose", cmd_compose, "max, min or sum of two automata")
    p.add_argument("op", choices=["max", "min", "sum"])
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--nondeterministic", action="store_true", help="treat inputs as nondeterministic")
    out_opt(p)

    p = add("complement", cmd_complement, "automaton for 1 - L")
    p.add_argument("file")
    p.add_argument("--nondeterministic", action="store_true", help="treat the input as nondeterministic")
    out_opt(p)

    for name, func in (("shift", cmd_shift), ("scale", cmd_scale)):
        p = add(name, func, f"{name} the language by a constant")
        p.add_argument("file")
        p.add_argument("-c", type=_rational, required=True)
        out_opt(p)

    p = add("reduce-bool", cmd_reduce_bool, "limavg automaton with weights in {0, 1}")
    p.add_argument("file")
    out_opt(p)

    p = add("cutpoint", cmd_cutpoint, "Büchi automaton for {w : L(w) >= eta}")
    p.add_argument("file")
    p.add_argument("--eta", type=_rational, required=True)
    p.add_argument("--eps", type=_rational)
    out_opt(p)

    p = add("isolate", cmd_isolate, "is eta an isolated cut-point?")
    p.add_argument("file")
    p.add_argument("--eta", type=_rational, required=True)
    p.add_argument("--delta", type=_rational, default=Fraction(1, 100))
    p.add_argument("--max-depth", type=int, default=8)

    p = add("perturb", cmd_perturb, "random eps-approximation")
    p.add_argument("file")
    p.add_argument("--eps", type=_rational, required=True)
    p.add_argument("--seed", type=int, default=0)
    out_opt(p)

    p = add("dsup", cmd_dsup, "sampled distance between two automata")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = add("top", cmd_top, "largest value and a word reaching it")
    p.add_argument("file")

    p = add("diff", cmd_diff, "sampled refinement check of A against B")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    session = Session(args)
    try:
        result = args.func(args, session)
    except ClosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLOSURE
    except NotIsolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLOSURE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (QuantlangError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(dumps(doc))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

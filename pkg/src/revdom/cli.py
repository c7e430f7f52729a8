"""Command-line entry point.

Exit status: 0 success or claim holds, 1 claim fails, 2 usage or domain
error, 3 capacity error (graph too large for exhaustive work).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import action, analysis, oracles
from .catalog import DEFAULT_SEED, random_connected_graph
from .conditions import PERFECT_OPEN, parse_condition
from .dynamics import State, state_from_vertices
from .errors import IndexOutOfRange, RevdomError, UnknownClaim, UnknownName, WidthTooLarge
from .graph import BUILTIN_NAMES, Graph, builtin_graph, parse_edge_list

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def load_graph(source: str, seed: int) -> Graph:
    """Builtin name, ``random:<n>`` (seeded), or a path to an edge-list file."""
    if source in BUILTIN_NAMES:
        return builtin_graph(source)
    if source.startswith("random:"):
        n = source.partition(":")[2]
        if not n.isdigit() or int(n) < 1:
            raise UnknownName("random graph source needs a vertex count, e.g. random:12")
        return random_connected_graph(int(n), np.random.default_rng(seed), name=f"random:{n}:{seed}")
    path = Path(source)
    if not path.is_file():
        raise UnknownName(f"{source!r} is neither a builtin graph ({', '.join(BUILTIN_NAMES)}) nor a file")
    return parse_edge_list(path.read_text(), name=path.name)


def parse_state(g: Graph, text: str) -> State:
    """Accept ``42``, a binary string of length n (v1 first), ``0b...``, or ``{v1,v3}``."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        names = [t.strip() for t in text[1:-1].split(",") if t.strip()]
        return state_from_vertices(g, [g.index_of(name) for name in names])
    if text.startswith("0b"):
        k = int(text[2:], 2)
    elif len(text) == g.n and set(text) <= {"0", "1"}:
        k = int(text, 2)
    else:
        try:
            k = int(text)
        except ValueError:
            raise IndexOutOfRange(f"cannot read a state from {text!r}") from None
    return State(k, g.n)


def _render(g: Graph, k: int) -> dict:
    return State(int(k), g.n).render(g)


def _text_state(g: Graph, k: int) -> str:
    r = _render(g, k)
    return f"s_{r['index']:<8d} {r['binary']}  {{{', '.join(r['vertices'])}}}"


def _system(g: Graph, args) -> action.ActionSystem:
    return action.system_preset(g, args.system, _condition(args))


def _condition(args):
    return parse_condition(args.condition) if args.condition else None


# -- commands -------------------------------------------------------------

def cmd_step(g: Graph, args) -> tuple[int, dict, str]:
    s = parse_state(g, args.state)
    if args.count < 0:
        raise IndexOutOfRange("count must be non-negative")
    f = action.f_generator(g)
    path = [s.index]
    for _ in range(args.count):
        path.append(f(path[-1]))
    doc = {"graph": g.describe(), "map": "F", "trajectory": [_render(g, k) for k in path]}
    return EXIT_OK, doc, "\n".join(_text_state(g, k) for k in path)


def cmd_im_epsilon(g: Graph, args) -> tuple[int, dict, str]:
    sys_ = _system(g, args)
    members = action.im_epsilon_set(sys_, cap=args.max_width)
    constant = [k for k in members if k in (0, g.full_mask)]
    surjective = [k for k in members if k not in (0, g.full_mask)]
    doc = {
        "graph": g.describe(),
        "system": sys_.name,
        "constant": [_render(g, k) for k in constant],
        "surjective": [_render(g, k) for k in surjective],
        "count": len(members),
    }
    lines = [f"system {sys_.name}: {len(members)} states", "constant:"]
    lines += ["  " + _text_state(g, k) for k in constant]
    lines += ["surjective:"] + ["  " + _text_state(g, k) for k in surjective]
    return EXIT_OK, doc, "\n".join(lines)


def cmd_domsets(g: Graph, args) -> tuple[int, dict, str]:
    sets = oracles.enumerate_sets(g, args.predicate, cap=args.max_width)
    named = [[g.labels[v] for v in sorted(d)] for d in sets]
    doc = {"graph": g.describe(), "predicate": args.predicate, "count": len(sets), "sets": named}
    text = "\n".join("{" + ", ".join(s) + "}" for s in named) or "(none)"
    return EXIT_OK, doc, text


def cmd_check(g: Graph, args) -> tuple[int, dict, str]:
    try:
        checker = analysis.CLAIMS[args.claim]
    except KeyError:
        raise UnknownClaim(f"unknown claim {args.claim!r}; choose from {', '.join(analysis.CLAIMS)}") from None
    if args.claim == "prop-cdom":
        c = _condition(args)
        if c is None and args.system.startswith("M-cond:"):
            c = parse_condition(args.system.partition(":")[2])
        report = checker(g, c or PERFECT_OPEN, seed=args.seed)
    elif args.claim == "convergence":
        report = checker(g, seed=args.seed, threads=args.threads)
    else:
        report = checker(g, seed=args.seed)
    verdict = "PASS" if report.passed else "FAIL"
    text = [f"{report.claim}: {verdict} ({report.universe})"]
    text += [f"  {k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(report.stats.items())]
    if report.counterexamples:
        text.append("  counterexamples: " + ", ".join(map(str, report.counterexamples)))
    return (EXIT_OK if report.passed else EXIT_FAIL), report.to_dict(), "\n".join(text)


def cmd_reverse(g: Graph, args) -> tuple[int, dict, str]:
    sys_ = _system(g, args)
    s = parse_state(g, args.state)
    x = action.reverse_lookup(sys_, s, args.word)
    doc = {"graph": g.describe(), "system": sys_.name, "state": _render(g, s.index),
           "word": args.word, "result": _render(g, x)}
    return EXIT_OK, doc, _text_state(g, x)


def cmd_export(g: Graph, args) -> tuple[int, dict | None, str]:
    sys_ = _system(g, args)
    gen = sys_.generator(args.letter) if args.letter else sys_.generators[0]
    if g.n > analysis.DOT_WIDTH_GUARD and not args.force:
        raise WidthTooLarge(f"{g.n} vertices is too many to draw; pass --force to override")
    t = analysis.build_transition_map(g, gen, threads=args.threads, cap=args.max_width)
    highlight = action.im_epsilon_set(sys_, cap=args.max_width)
    dot = analysis.export_dot(t, highlight, name=f"{sys_.name}:{gen.name}", force=args.force)
    if args.output:
        Path(args.output).write_text(dot)
    return EXIT_OK, None, dot


COMMANDS = {
    "step": cmd_step,
    "im-epsilon": cmd_im_epsilon,
    "domsets": cmd_domsets,
    "check": cmd_check,
    "reverse": cmd_reverse,
    "export": cmd_export,
}


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    # subcommands repeat the flags with SUPPRESS so they may appear on either side
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--graph", default=d("g3"), help="builtin name (g3, k2, p3, c4), random:<n>, or edge-list file")
    p.add_argument("--system", default=d("N-F"), help="N-F, M-indep or M-cond:<condition>")
    p.add_argument("--condition", default=d(None), help="perfect-open, odd-open, odd-closed, exact:<k>, at-least:<k>")
    p.add_argument("--format", choices=["json", "dot", "text"], default=d(None))
    p.add_argument("--seed", type=int, default=d(DEFAULT_SEED))
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--max-width", type=int, default=d(action.EXHAUSTIVE_CAP))
    p.add_argument("--force", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revdom", description=__doc__.splitlines()[0])
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("step", help="trajectory s, F(s), ..., F^count(s)")
    p.add_argument("state")
    p.add_argument("count", type=int)
    p = sub.add_parser("im-epsilon", help="states on which the system acts by bijections")
    p = sub.add_parser("domsets", help="enumerate vertex sets satisfying a predicate")
    p.add_argument("predicate", help=", ".join(oracles.PREDICATES))
    p = sub.add_parser("check", help="run a claim checker; exit 1 if it fails")
    p.add_argument("claim", help=", ".join(analysis.CLAIMS))
    p = sub.add_parser("reverse", help="value of the reverse trajectory at a word")
    p.add_argument("state")
    p.add_argument("word", nargs="?", default="")
    p = sub.add_parser("export", help="DOT transition diagram with reversible states shaded")
    p.add_argument("--letter", default=None, help="generator to draw (default: first)")
    p.add_argument("-o", "--output", default=None)

    for choice in sub.choices.values():
        _add_common(choice, top=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("dot" if args.command == "export" else ("text" if sys.stdout.isatty() else "json"))
    try:
        g = load_graph(args.graph, args.seed)
        code, doc, text = COMMANDS[args.command](g, args)
    except WidthTooLarge as exc:
        print(f"revdom: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except RevdomError as exc:
        print(f"revdom: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "export" and args.output:
        return code
    if fmt == "json" and doc is not None:
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif fmt == "json":
        print(json.dumps({"graph": g.describe(), "dot": text}, indent=2, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

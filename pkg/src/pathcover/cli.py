"""Command-line interface: ``pathcover <command> ...``.

Machine-readable output goes to stdout (JSON, JSON lines, graph6 or DOT);
diagnostics go to stderr.  Exit codes: 0 on success, 1 when the input lies
outside an operation's domain or a campaign finds a counterexample, 2 for
usage, parse and parameter errors.  Commands that take one graph read it
from the positional argument, or from stdin (one graph6 record per line,
answered with one output line each) when the argument is absent or ``-``.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator, Sequence

from .campaigns import CAMPAIGNS, Bounds, run_campaign
from .enumeration import build_catalog, canonical_key, enumerate_up_to, parse_filter
from .errors import ArgumentError, DomainError, ParseError, PathCoverError, SizeError
from .families import (
    FIGURE_NAMES,
    GeneralizedWhirligigSpec,
    WhirligigSpec,
    expected_generalized,
    expected_skupien,
    expected_whirligig,
    expected_zelinka_type1,
    figure_labels,
    generalized_whirligig,
    named,
    skupien,
    whirligig,
    zelinka_type1,
)
from .graph import Graph, from_graph6, read_graph6_lines, to_dot, to_graph6
from .invariants import report
from .maximality import classify, compose, decompose

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _warn(text: str) -> None:
    print(f"pathcover: {text}", file=sys.stderr)


def _json(obj: object) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _inputs(arg: str | None) -> Iterator[Graph]:
    if arg is None or arg == "-":
        yield from read_graph6_lines(sys.stdin)
    else:
        yield from_graph6(arg)


def _stream(path: str | None) -> tuple[Graph, ...] | None:
    if path is None:
        return None
    if path == "-":
        return tuple(read_graph6_lines(sys.stdin))
    with open(path, encoding="ascii") as fh:
        return tuple(read_graph6_lines(fh))


def _sizes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise _Usage(f"--sizes expects comma-separated integers, got {text!r}") from None


def _render(g: Graph, fmt: str, extra: dict | None = None, labels: dict | None = None) -> str:
    if fmt == "dot":
        return to_dot(g, labels)
    if fmt == "json":
        return _json({"graph6": to_graph6(g), "n": g.n, "edges": [list(e) for e in g.edges()],
                      **(extra or {})})
    return to_graph6(g)


# -- commands ---------------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> int:
    for g in _inputs(args.graph):
        rep = report(g)
        if args.format == "dot":
            labels = {v: f"{v}*" if v in rep.terminal_feasible else str(v) for v in range(g.n)}
            _emit(to_dot(g, labels))
        else:
            _emit(_json(rep.to_json()))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    for g in _inputs(args.graph):
        _emit(_json(classify(g).to_json()))
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for g in _inputs(args.graph):
        try:
            dec = decompose(g)
        except DomainError as exc:
            _warn(f"{to_graph6(g)}: {exc}")
            code = EXIT_DOMAIN
            continue
        _emit(_json(dec.to_json()))
    return code


def cmd_compose(args: argparse.Namespace) -> int:
    parts = [from_graph6(p) for p in args.parts]
    _emit(_render(compose(args.s, parts), args.format))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    fam = args.family
    labels = None
    if fam == "whirligig":
        _need(args, "t", "m")
        spec = WhirligigSpec(args.t, args.m)
        g, exp = whirligig(spec), expected_whirligig(spec)
    elif fam == "generalized":
        _need(args, "t", "groups")
        try:
            groups = json.loads(args.groups)
        except json.JSONDecodeError as exc:
            raise _Usage(f"--groups is not valid JSON: {exc}") from None
        spec = GeneralizedWhirligigSpec.from_json(args.t, args.u0, groups)
        g, exp = generalized_whirligig(spec), expected_generalized(spec)
    elif fam == "skupien":
        _need(args, "r", "sizes")
        g, exp = skupien(args.r, _sizes(args.sizes)), expected_skupien()
    elif fam == "zelinka1":
        _need(args, "r", "sizes")
        g, exp = zelinka_type1(args.r, _sizes(args.sizes)), expected_zelinka_type1()
    else:
        _need(args, "name")
        g, exp, labels = named(args.name), None, figure_labels(args.name)
    fmt = "dot" if args.dot else args.format
    extra = {"family": fam}
    if exp is not None:
        extra["expected"] = {"family": exp.family, "t": exp.t}
    _emit(_render(g, fmt, extra, labels))
    return EXIT_OK


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"generate {args.family} requires {', '.join(missing)}")


def cmd_enumerate(args: argparse.Namespace) -> int:
    for g in enumerate_up_to(args.max_n, args.connected, args.min_n):
        _emit(to_graph6(g))
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    want, t = parse_filter(args.filter)
    source = _stream(args.input)
    if source is None:
        source = enumerate_up_to(args.max_n, args.connected, args.min_n)
    for entry in build_catalog(source, want, t):
        _emit(_json(entry.to_json()))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = Bounds(
        max_n=args.max_n,
        connected_only=True if args.connected else None,
        seed=args.seed,
        samples=args.samples,
        max_s=args.max_s,
        graphs=_stream(args.input),
    )
    rep = run_campaign(args.campaign, bounds)
    _emit(json.dumps(rep.to_json(), indent=2))
    if not rep.success:
        _warn(f"{rep.campaign_id}: {len(rep.counterexamples)} counterexample(s) in {rep.checked} checks")
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_canon(args: argparse.Namespace) -> int:
    for g in _inputs(args.graph):
        _emit(canonical_key(g))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathcover", description="Path-cover invariants of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("graph", nargs="?", help="graph6 string; omit or '-' to read lines from stdin")

    sp = sub.add_parser("invariants", help="mu, mu_check, i_H, terminal vertices and a witness cover")
    graph_arg(sp)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("classify", help="membership in M_t and N_t")
    graph_arg(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("decompose", help="K_s * (G_1 + ... + G_r) decomposition of a maximal graph")
    graph_arg(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("compose", help="build K_s * (G_1 + ... + G_r)")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("parts", nargs="*", help="graph6 strings of the parts")
    sp.add_argument("--format", choices=("graph6", "json", "dot"), default="graph6")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("canon", help="canonical graph6 string")
    graph_arg(sp)
    sp.set_defaults(func=cmd_canon)

    sp = sub.add_parser("generate", help="emit a member of a graph family")
    sp.add_argument("family", choices=("whirligig", "generalized", "skupien", "zelinka1", "named"))
    sp.add_argument("--t", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--sizes", help="comma-separated clique sizes, e.g. 1,2,3")
    sp.add_argument("--u0", type=int, default=0, help="size of U_0 (generalized)")
    sp.add_argument("--groups", help='JSON list of [|U_i|, [|V_i1|, ...]], e.g. [[1,[1]],[1,[1]],[2,[1,1]]]')
    sp.add_argument("--name", choices=FIGURE_NAMES)
    sp.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    sp.add_argument("--format", choices=("graph6", "json", "dot"), default="graph6")
    sp.set_defaults(func=cmd_generate)

    def corpus_args(sp: argparse.ArgumentParser, default_max: int | None) -> None:
        sp.add_argument("--max-n", type=int, default=default_max)
        sp.add_argument("--connected", action="store_true", help="connected graphs only")

    sp = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    corpus_args(sp, None)
    sp.add_argument("--min-n", type=int, default=1)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("catalog", help="classified graphs as JSON lines")
    corpus_args(sp, None)
    sp.add_argument("--min-n", type=int, default=1)
    sp.add_argument("--filter", default="all", help="all, M, N, M<t> or N<t>")
    sp.add_argument("--input", help="graph6 file ('-' for stdin) instead of the built-in enumeration")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="run a verification campaign")
    sp.add_argument("campaign", help=", ".join(CAMPAIGNS))
    corpus_args(sp, None)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--max-s", type=int)
    sp.add_argument("--input", help="graph6 file ('-' for stdin) as the corpus")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("enumerate", "catalog") and args.max_n is None and getattr(args, "input", None) is None:
        parser.error(f"{args.command} requires --max-n")
    try:
        return args.func(args)
    except (_Usage, ParseError, ArgumentError, SizeError) as exc:
        _warn(str(exc))
        return EXIT_USAGE
    except PathCoverError as exc:
        _warn(str(exc))
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

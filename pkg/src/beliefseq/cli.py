"""Command-line front end: repl, run, check-claims, equiv, serve.

All surfaces share one command processor, so a script replayed through
`run`, the same lines typed into the repl, and the HTTP service agree
answer-for-answer.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .equivalence import equivalent_sequences, strongly_equivalent_bounded
from .formulas import ParseError, parse, render, syntactic_language
from .relevance import INFINITY, relevance_profile
from .semantics import smallest_language
from .sequences import (
    LIBERAL,
    STRICT,
    Answer,
    BeliefSequence,
    QueryContext,
    answer_query,
    build_gamma,
    saturation_level,
    sequence_from_text,
    sequence_to_text,
)
from .wire import query_payload

HELP_TEXT = """commands:
  revise F          append formula F to the sequence
  query F [k]       answer F from the relevant consistent set (yes/no/no information)
  gamma F [k]       show the full decision trace for F
  rel F             relevance level of each element to F
  lang F            minimal and syntactic vocabulary of F
  show              print the sequence and current defaults
  set k N           default relevance level
  set mode M        liberal or strict
  save FILE         write the sequence, one formula per line
  load FILE         replace the sequence from a file
  pop               drop the newest element
  reset             clear the sequence
  help              this text
  quit              leave"""


class CommandError(Exception):
    pass


@dataclass
class ReplState:
    seq: BeliefSequence
    k: int = 0
    mode: str = LIBERAL


@dataclass
class Outcome:
    state: ReplState
    lines: list[str]
    payload: dict | None = None
    quit: bool = False


def _parse_formula(text: str):
    if not text.strip():
        raise CommandError("missing formula")
    try:
        return parse(text)
    except ParseError as error:
        raise CommandError(str(error)) from error


def _split_level(rest: str) -> tuple[str, int | None]:
    # an optional trailing integer is a level override; atoms never look like one
    parts = rest.rsplit(None, 1)
    if len(parts) == 2 and parts[1].isdigit():
        return parts[0], int(parts[1])
    return rest, None


def _level_text(level) -> str:
    return "infinity" if level == INFINITY else str(int(level))


def execute(state: ReplState, line: str) -> Outcome:
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return Outcome(state, [])
    command, _, rest = stripped.partition(" ")
    rest = rest.strip()

    if command == "quit" or command == "exit":
        return Outcome(state, [], quit=True)
    if command == "help":
        return Outcome(state, HELP_TEXT.splitlines())
    if command == "revise":
        formula = _parse_formula(rest)
        seq = state.seq.revise(formula)
        index = seq.entries[-1][0]
        return Outcome(replace(state, seq=seq), [f"revised [{index}]: {render(formula)}"])
    if command == "query":
        text, level = _split_level(rest)
        ctx = QueryContext(_parse_formula(text), k=state.k if level is None else level, mode=state.mode)
        payload = query_payload(state.seq, ctx)
        answer = answer_query(state.seq, ctx)
        word = "no information" if answer == Answer.NO_INFORMATION else answer.value
        return Outcome(state, [word], payload=payload)
    if command == "gamma":
        text, level = _split_level(rest)
        ctx = QueryContext(_parse_formula(text), k=state.k if level is None else level, mode=state.mode)
        result = build_gamma(state.seq, ctx)
        lines = [f"{'idx':>4} {'rel':>8}  {'decision':<22} formula"]
        for entry in result.trace:
            lines.append(
                f"{entry.index:>4} {_level_text(entry.level):>8}  {entry.decision:<22} {render(entry.formula)}"
            )
        lines.append("gamma: " + (", ".join(render(f) for f in result.accepted_formulas) or "(empty)"))
        return Outcome(state, lines)
    if command == "rel":
        formula = _parse_formula(rest)
        profile = relevance_profile(formula, state.seq)
        lines = [
            f"{index:>4} {_level_text(level):>8}  {render(element)}"
            for (index, element), (_, level) in zip(state.seq, profile)
        ]
        lines.append(f"saturation: {saturation_level(state.seq, formula)}")
        return Outcome(state, lines)
    if command == "lang":
        formula = _parse_formula(rest)
        minimal = ", ".join(sorted(smallest_language(formula))) or "(none)"
        syntactic = ", ".join(sorted(syntactic_language(formula))) or "(none)"
        return Outcome(state, [f"minimal: {minimal}", f"syntactic: {syntactic}"])
    if command == "show":
        lines = [f"[{index}] {render(formula)}" for index, formula in state.seq] or ["(empty)"]
        lines.append(f"k={state.k} mode={state.mode}")
        return Outcome(state, lines)
    if command == "set":
        name, _, value = rest.partition(" ")
        value = value.strip()
        if name == "k":
            if not value.lstrip("-").isdigit() or int(value) < 0:
                raise CommandError("k must be a natural number")
            return Outcome(replace(state, k=int(value)), [f"k = {value}"])
        if name == "mode":
            if value not in (LIBERAL, STRICT):
                raise CommandError(f"mode must be {LIBERAL} or {STRICT}")
            return Outcome(replace(state, mode=value), [f"mode = {value}"])
        raise CommandError("set k N | set mode liberal|strict")
    if command == "save":
        if not rest:
            raise CommandError("save needs a file path")
        try:
            Path(rest).write_text(sequence_to_text(state.seq))
        except OSError as error:
            raise CommandError(str(error)) from error
        return Outcome(state, [f"saved {rest} ({len(state.seq)} formulas)"])
    if command == "load":
        if not rest:
            raise CommandError("load needs a file path")
        try:
            text = Path(rest).read_text()
        except OSError as error:
            raise CommandError(str(error)) from error
        try:
            seq = sequence_from_text(text)
        except ParseError as error:
            raise CommandError(f"{rest}: {error}") from error
        return Outcome(replace(state, seq=seq), [f"loaded {rest} ({len(seq)} formulas)"])
    if command == "pop":
        if not state.seq.entries:
            raise CommandError("empty sequence")
        index, formula = state.seq.entries[-1]
        return Outcome(
            replace(state, seq=state.seq.pop()), [f"popped [{index}]: {render(formula)}"]
        )
    if command == "reset":
        return Outcome(replace(state, seq=BeliefSequence()), ["reset"])
    raise CommandError(f"unknown command {command!r} (try help)")


def _emit(outcome: Outcome, json_mode: bool) -> None:
    if json_mode:
        if outcome.payload is not None:
            print(json.dumps(outcome.payload))
        return
    for line in outcome.lines:
        print(line)


def cmd_repl(args: argparse.Namespace) -> int:
    state = ReplState(BeliefSequence(), k=args.k, mode=args.mode)
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            print("> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            break
        try:
            outcome = execute(state, line)
        except CommandError as error:
            print(f"error: {error}")
            continue
        _emit(outcome, args.json)
        state = outcome.state
        if outcome.quit:
            break
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    try:
        text = Path(args.script).read_text()
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    state = ReplState(BeliefSequence(), k=args.k, mode=args.mode)
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            outcome = execute(state, line)
        except CommandError as error:
            print(f"error: line {number}: {error}", file=sys.stderr)
            return 2
        _emit(outcome, args.json)
        state = outcome.state
        if outcome.quit:
            break
    return 0


def cmd_check_claims(args: argparse.Namespace) -> int:
    from .testkit.claims import conformance_failures, render_table, run_all_reports

    pool = ("p", "q", "r", "s")[: args.vars]
    reports = run_all_reports(args.samples, args.seed, pool)
    if args.json:
        print(json.dumps([report.to_dict() for report in reports], indent=2))
    else:
        print(render_table(reports))
    problems = conformance_failures(reports)
    if problems:
        for problem in problems:
            print(f"MISMATCH {problem}", file=sys.stderr)
        return 1
    if not args.json:
        print(f"\nall {len(reports)} claims match the expected scorecard")
    return 0


def cmd_equiv(args: argparse.Namespace) -> int:
    sequences = []
    for path in (args.file_a, args.file_b):
        try:
            sequences.append(sequence_from_text(Path(path).read_text()))
        except OSError as error:
            print(f"error: {error}", file=sys.stderr)
            return 2
        except ParseError as error:
            print(f"error: {path}: {error}", file=sys.stderr)
            return 2
    a, b = sequences
    try:
        if args.strong:
            verdict = strongly_equivalent_bounded(a, b, depth=args.depth, var_cap=args.vars)
        else:
            verdict = equivalent_sequences(a, b, var_cap=args.vars)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    if args.strong:
        if verdict.result:
            print(f"strongly equivalent (searched revision chains to depth {verdict.searched_depth})")
            return 0
        print(f"not strongly equivalent; witness: {verdict.witness.describe()}")
        return 1
    if verdict.result:
        print("equivalent")
        return 0
    print(f"not equivalent; witness: {verdict.witness.describe()}")
    return 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import SessionStore, create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
    except OSError as error:
        print(f"error: cannot bind {args.host}:{args.port}: {error}", file=sys.stderr)
        return 2
    finally:
        probe.close()
    try:
        store = SessionStore(args.store) if args.store else SessionStore()
    except (OSError, ValueError) as error:
        print(f"error: store: {error}", file=sys.stderr)
        return 2
    app = create_app(store)
    if args.ui:
        from fastapi.staticfiles import StaticFiles

        if not Path(args.ui).is_dir():
            print(f"error: ui directory not found: {args.ui}", file=sys.stderr)
            return 2
        app.mount("/ui", StaticFiles(directory=args.ui, html=True), name="ui")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beliefseq",
        description="Relevance-sensitive inference over belief sequences.",
    )
    parser.add_argument("--k", type=int, default=0, help="default relevance level")
    parser.add_argument("--mode", choices=(LIBERAL, STRICT), default=LIBERAL)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("repl", help="interactive session")

    run = sub.add_parser("run", help="execute a command script")
    run.add_argument("script")

    claims = sub.add_parser("check-claims", help="run the conformance suites")
    claims.add_argument("--samples", type=int, default=250)
    claims.add_argument("--seed", type=int, default=0)
    claims.add_argument("--vars", type=int, default=3, choices=(1, 2, 3, 4))

    equiv = sub.add_parser("equiv", help="compare two sequence files")
    equiv.add_argument("file_a")
    equiv.add_argument("file_b")
    equiv.add_argument("--strong", action="store_true")
    equiv.add_argument("--depth", type=int, default=1)
    equiv.add_argument("--vars", type=int, default=4)

    serve = sub.add_parser("serve", help="host the HTTP session service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--store", default=None, help="directory for session logs")
    serve.add_argument("--ui", default=None, help="static directory to serve at /ui")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.k < 0:
        print("error: --k must be >= 0", file=sys.stderr)
        return 2
    handlers = {
        "repl": cmd_repl,
        "run": cmd_run,
        "check-claims": cmd_check_claims,
        "equiv": cmd_equiv,
        "serve": cmd_serve,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

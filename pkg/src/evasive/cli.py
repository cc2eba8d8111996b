"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (non-member point, subspace of
too high dimension, failed verification), 2 on usage errors.

Points and messages are comma-separated decimals; a value of the form
``@path`` is read from that file instead.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import EvasiveError, ParameterError
from .evasive import EvasiveSet
from .intersect import SolverKind, intersect_set
from .linalg import AffineSubspace
from .listdec import SimConfig, simulate, summary_line
from .params import EvasiveParams, gen_params
from .verify import format_report, run_verify


class UsageError(Exception):
    pass


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    return value


def parse_vector(value: str) -> tuple[int, ...]:
    text = _read_arg(value).replace("\n", ",")
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"not a comma-separated list of integers: {value!r}") from None


def format_vector(x: Sequence[int]) -> str:
    return ",".join(str(v) for v in x)


def _load_params(args) -> EvasiveParams:
    if args.params:
        return EvasiveParams.loads(Path(args.params).read_text())
    if None not in (args.k, args.m, args.n):
        return gen_params(args.k, args.m, args.n)
    raise UsageError("give --params FILE (or --k, --m and --n)")


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for this command")
    return value


def cmd_gen_params(args, out):
    params = gen_params(_need(args, "k"), _need(args, "m"), _need(args, "n"))
    text = params.dumps()
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)


def cmd_encode(args, out):
    s = EvasiveSet(_load_params(args))
    out.write(format_vector(s.encode(parse_vector(_need(args, "message")))) + "\n")


def cmd_decode(args, out):
    s = EvasiveSet(_load_params(args))
    out.write(format_vector(s.decode(parse_vector(_need(args, "point")))) + "\n")


def cmd_member(args, out):
    s = EvasiveSet(_load_params(args))
    out.write(("true" if s.member_set(parse_vector(_need(args, "point"))) else "false") + "\n")


def cmd_intersect(args, out):
    params = _load_params(args)
    h = AffineSubspace.loads(Path(_need(args, "subspace")).read_text())
    if h.field.p != params.p:
        raise UsageError(f"subspace is over F_{h.field.p} but params use F_{params.p}")
    for x in intersect_set(EvasiveSet(params), h, args.solver):
        out.write(format_vector(x) + "\n")


def cmd_verify(args, out):
    params = _load_params(args)
    results = run_verify(params, args.trials, args.seed)
    out.write(format_report(params, results, args.trials, args.seed))
    return 0 if all(r.passed for r in results) else 1


def cmd_simulate(args, out):
    cfg = SimConfig(_load_params(args), trials=args.trials, seed=args.seed, solver=args.solver)
    results = []
    for i, res in enumerate(simulate(cfg)):
        results.append(res)
        out.write(f"trial={i} seed={res.seed} list_size={res.list_size} "
                  f"contained={'true' if res.contained else 'false'}\n")
    out.write(summary_line(results) + "\n")
    return 0 if all(r.contained for r in results) else 1


COMMANDS = {
    "gen-params": cmd_gen_params,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "member": cmd_member,
    "intersect": cmd_intersect,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evasive", description="Explicit subspace-evasive sets over prime fields.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--params", help="params JSON file")
        sp.add_argument("--k", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--point", help="comma-separated point, or @file")
        sp.add_argument("--message", help="comma-separated message, or @file")
        sp.add_argument("--subspace", help="subspace JSON file")
        sp.add_argument("--trials", type=int, default=100)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--solver", choices=[s.value for s in SolverKind], default=SolverKind.EXHAUSTIVE.value)
        sp.add_argument("--out", help="write output here instead of stdout (gen-params)")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        status = COMMANDS[args.command](args, out)
    except (UsageError, ParameterError, OSError) as e:
        err.write(f"evasive {args.command}: error: {e}\n")
        return 2
    except EvasiveError as e:
        err.write(f"evasive {args.command}: {e}\n")
        return 1
    except ValueError as e:  # malformed JSON and the like
        err.write(f"evasive {args.command}: error: {e}\n")
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())

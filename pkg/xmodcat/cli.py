"""
Command line surface: ``xmodcat COMMAND FILE``.

``FILE`` is a path to a crossed-module document, the name of a bundled document, or the name of a corpus member.
Exit codes: 0 success, 1 invalid input, 2 invariant failure, 3 numerical degeneracy.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
import typing

from xmodcat import document
from xmodcat.crossed_module import CrossedModule, quotient_xbar, transport_to_double
from xmodcat.exceptions import (
    XModError,
    GroupError,
    AxiomViolation,
    DocumentError,
    CorpusError,
    NumericalDegeneracy,
    NumericalError,
    IllDefined,
    InvalidSettingError,
)
from xmodcat.modularization import match_modular_data
from xmodcat.report import data_report, gx_report, invariant_suite, match_report, to_json
from xmodcat.rep_theory import simple_objects, s_matrix, transparent_simples, is_modular
from xmodcat.settings import Settings, with_flag

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INVARIANT_FAILURE = 2
EXIT_NUMERICAL_DEGENERACY = 3


def _format_complex(value: complex) -> str:
    value = complex(value)
    real, imag = round(value.real, 6) + 0.0, round(value.imag, 6) + 0.0
    return f"{real:g}" if imag == 0 else f"{real:g}{imag:+g}i"


def _check(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    sub = x.sub
    lines = [
        f"name: {x.name or '<unnamed>'}",
        "equivariance: ok",
        "Peiffer: ok",
        f"|X1| = {x.x1.order}, |X2| = {x.x2.order}",
        f"|ker ∂| = {len(sub.K)}, |Im ∂| = {len(sub.I)}, |coker ∂| = {sub.C.order}",
        f"boundary bijective: {'yes' if x.is_boundary_bijective() else 'no'}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _simples(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    table = simple_objects(x, seed)
    lines = [f"{'index':>5}  {'label':<10}  {'dim':>3}  twist"]
    for index, (label, dim, twist) in enumerate(zip(table.labels, table.dims, table.twists)):
        lines.append(f"{index:>5}  {str(label):<10}  {dim:>3}  {_format_complex(twist)}")
    lines.append(f"Σd² = {sum(d * d for d in table.dims)}")
    return "\n".join(lines) + "\n", EXIT_OK


def _modular_data(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    return to_json(data_report(x, text, seed)), EXIT_OK


def _transparent(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    table = simple_objects(x, seed)
    transparent = transparent_simples(s_matrix(table))
    lines = [f"{p:>5}  {str(table.labels[p]):<10}  {table.dims[p]:>3}" for p in transparent]
    lines.append(f"|T| = {len(transparent)}, Σd² = {sum(table.dims[p] ** 2 for p in transparent)}")
    return "\n".join(lines) + "\n", EXIT_OK


def _gx(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    return to_json(gx_report(x, seed)), EXIT_OK


def _modularize(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    xbar, _ = quotient_xbar(x)
    xbar_text = document.dump_document(xbar)
    double, _ = transport_to_double(xbar)
    match = match_modular_data(s_matrix(simple_objects(xbar, seed)), s_matrix(simple_objects(double, seed)))
    payload = {
        "xbar": document.from_crossed_module(xbar).to_dict(),
        "report": data_report(xbar, xbar_text, seed),
        "match": match_report(match),
    }
    return to_json(payload), EXIT_OK if match.matched else EXIT_INVARIANT_FAILURE


def _verify(x: CrossedModule, text: str, seed: int) -> tuple[str, int]:
    results = invariant_suite(x, seed)
    modular = is_modular(s_matrix(simple_objects(x, seed)))
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.residual:.3g}) {r.detail}".rstrip() for r in results]
    lines.append(f"modular: {'yes' if modular else 'no'}")
    passed = all(result.passed for result in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", EXIT_OK if passed else EXIT_INVARIANT_FAILURE


_COMMANDS: dict[str, tuple[typing.Callable, str]] = {
    "check": (_check, "Validate the crossed-module axioms."),
    "simples": (_simples, "List the simple objects of M(X)."),
    "modular-data": (_modular_data, "Emit the full data report as JSON."),
    "transparent": (_transparent, "List the transparent simples."),
    "gx": (_gx, "Emit the group G(X) as JSON."),
    "modularize": (_modularize, "Emit the quotient crossed module, its report and the Drinfeld-double match."),
    "verify": (_verify, "Run the full invariant suite."),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xmodcat", description="Premodular categories of finite crossed modules")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("file", metavar="FILE", help="Document path, bundled document or corpus name.")
        sub.add_argument("--out", metavar="PATH", help="Write the output to PATH instead of stdout.")
        sub.add_argument("--seed", type=int, help="RNG seed (default: $XMODCAT_SEED or 0).")
        sub.add_argument("--tol", type=float, help="Comparison tolerance (default: $XMODCAT_TOLERANCE or 1e-8).")
        sub.add_argument("-v", "--verbose", action="count", default=0, help="Increase log verbosity.")
    return parser


def _configure_logging(verbosity: int):
    level = Settings()["log_level"]
    if verbosity == 1:
        level = "INFO"
    elif verbosity > 1:
        level = "DEBUG"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _exit_code(err: Exception) -> int:
    if isinstance(err, NumericalDegeneracy):
        return EXIT_NUMERICAL_DEGENERACY
    if isinstance(err, (NumericalError, IllDefined)):
        return EXIT_INVARIANT_FAILURE
    return EXIT_INVALID_INPUT


def _run(args: argparse.Namespace) -> tuple[str, int]:
    command, _ = _COMMANDS[args.command]
    try:
        x, text = document.load(args.file)
    except AxiomViolation as err:
        if args.command != "check":
            raise
        witness = ", ".join(f"{key}={value}" for key, value in err.witness.items())
        return f"{err.axiom}: FAILED ({witness})\n", EXIT_INVALID_INPUT
    return command(x, text, Settings(seed=args.seed)["seed"])


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    with contextlib.ExitStack() as stack:
        if args.seed is not None:
            stack.enter_context(with_flag("seed", args.seed))
        if args.tol is not None:
            stack.enter_context(with_flag("tolerance", args.tol))
        try:
            _configure_logging(args.verbose)
            output, code = _run(args)
        except (DocumentError, GroupError, AxiomViolation, CorpusError, InvalidSettingError, OSError) as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        except XModError as err:
            print(f"error: {err}", file=sys.stderr)
            return _exit_code(err)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(output)
    else:
        sys.stdout.write(output)
    return code

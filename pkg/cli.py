#!/usr/bin/env python3
"""
mufgl CLI - formal group law expansions and their verification suites

Exit codes: 0 success, 1 verification failure (or failed computation),
2 usage error. Results go to stdout and are byte-identical between runs;
logs go to stderr.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import fgl
import hurewicz
import symfunc
from config import DEFAULT_CONFIG, MufglConfig, load_config
from errors import MufglError, UsageError
from render import (
    bi_text,
    bi_to_json,
    divided_text,
    divided_to_json,
    dumps,
    format_rational,
    parse_rational,
    poly_text,
    poly_to_json,
    report_text,
    report_to_json,
    series_text,
    series_to_json,
    twist_text,
    twist_to_json,
)
from series import CheckReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VERBS = ("logmu", "expmu", "bmu", "fgl-sum", "hurewicz", "twist", "cumulants", "symfunc", "verify")


def setup_logging(verbose: bool = False, level: str = "info"):
    """Setup logging configuration"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )


@dataclass
class Command:
    """One parsed invocation: the verb and its verb-specific options"""
    verb: str
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "Command":
        options = {k: v for k, v in vars(args).items() if k not in ("verb", "config", "verbose")}
        return cls(args.verb, options)

    def get(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value


@dataclass
class Outcome:
    text: str
    data: Any
    ok: bool = True


# Argument types

def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_rational(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value <= 0:
        raise argparse.ArgumentTypeError(f"t must be positive, got {text}")
    return value


def rational_list(text: str) -> List[Fraction]:
    try:
        return [parse_rational(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mufgl",
        description="mufgl - exact formal group law calculus for complex cobordism",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Miscenko's logarithm to order 3
  python cli.py logmu --order 3

  # Partition expansion of b^MU_3 in the divided-power basis
  python cli.py hurewicz bmu 3

  # Twisted projective space with symbolic t
  python cli.py twist 4

  # Hopf relation at total degree 8, as JSON
  python cli.py verify hopf --order 8 --format json
        """
    )
    parser.add_argument("--version", action="version", version="mufgl 1.0.0")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), help="Output format")
    common.add_argument("--config", "-c", help="Path to a YAML configuration file")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")

    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    for verb, help_text in (("logmu", "Miscenko's logarithm log_MU(z)"),
                            ("expmu", "exp_MU(z), the inverse of log_MU"),
                            ("bmu", "b^MU(z) = exp(b log_MU(z))"),
                            ("fgl-sum", "the formal group sum z0 +_MU z1")):
        sub = verbs.add_parser(verb, parents=[common], help=help_text)
        sub.add_argument("--order", type=positive_int, help="Truncation order")
        sub.add_argument("--image", choices=("hurewicz",),
                         help="Apply the Hurewicz map CP_k -> h(CP_k)")

    sub = verbs.add_parser("hurewicz", parents=[common], help="Characteristic-number classes")
    sub.add_argument("kind", choices=("bmu", "cp"))
    sub.add_argument("n", type=nonnegative_int)

    sub = verbs.add_parser("twist", parents=[common], help="Expansion of CP_n(t omega)")
    sub.add_argument("n", type=positive_int)
    sub.add_argument("--t", type=positive_rational, help="Positive rational twist (symbolic if omitted)")

    sub = verbs.add_parser("cumulants", parents=[common], help="Moments from cumulants")
    sub.add_argument("--kappa", type=rational_list, required=True,
                     help="Comma-separated cumulants kappa_1, kappa_2, ...")
    sub.add_argument("--max-n", type=positive_int, help="Highest moment (default: number of cumulants)")

    sub = verbs.add_parser("symfunc", parents=[common], help="Symmetric-function basis changes")
    sub.add_argument("action", choices=("convert",))
    sub.add_argument("--from", dest="from_basis", choices=symfunc.BASES, required=True)
    sub.add_argument("--to", dest="to_basis", choices=symfunc.BASES, required=True)
    sub.add_argument("--degree", type=positive_int, required=True)

    sub = verbs.add_parser("verify", parents=[common], help="Run a verification suite")
    sub.add_argument("target", choices=tuple(VERIFY_TARGETS) + ("all",))
    sub.add_argument("--order", type=positive_int)
    sub.add_argument("--max-n", type=positive_int)
    sub.add_argument("--max-k", type=positive_int)

    return parser


# Handlers

def _series_command(command: Command, config: MufglConfig) -> Outcome:
    bivariate = command.verb == "fgl-sum"
    order = command.get("order", config.bivariate_order if bivariate else config.univariate_order)
    builders = {"logmu": fgl.miscenko_log, "expmu": fgl.fgl_exp, "bmu": fgl.bmu_series,
                "fgl-sum": fgl.fgl_sum}
    value = builders[command.verb](order)
    if command.get("image") == "hurewicz":
        value = fgl.hurewicz_image(value)
    if bivariate:
        return Outcome(bi_text(value), bi_to_json(value))
    return Outcome(series_text(value), series_to_json(value))


def _hurewicz_command(command: Command, config: MufglConfig) -> Outcome:
    n = command.get("n")
    if command.get("kind") == "bmu":
        if n < 1:
            raise UsageError("hurewicz bmu needs n >= 1")
        value = hurewicz.hurewicz_bmu(n)
        return Outcome(divided_text(value), divided_to_json(value))
    lagrange, oracle = hurewicz.hurewicz_cp(n), hurewicz.chern_oracle_cp(n)
    agree = lagrange == oracle
    text = "\n".join([f"h(CP_{n}) = {poly_text(lagrange)}",
                      f"oracle = {poly_text(oracle)}",
                      f"agree = {'true' if agree else 'false'}"])
    data = {"n": n, "terms": poly_to_json(lagrange), "oracle": poly_to_json(oracle), "agree": agree}
    return Outcome(text, data, agree)


def _twist_command(command: Command, config: MufglConfig) -> Outcome:
    value = hurewicz.twist_expansion(command.get("n"), command.get("t"))
    return Outcome(twist_text(value), twist_to_json(value))


def _cumulants_command(command: Command, config: MufglConfig) -> Outcome:
    kappa = command.get("kappa")
    moments = hurewicz.cumulants_to_moments(kappa, command.get("max_n", len(kappa)))
    text = "\n".join(f"m{n} = {format_rational(m)}" for n, m in enumerate(moments))
    return Outcome(text, {"moments": [format_rational(m) for m in moments]})


def _symfunc_command(command: Command, config: MufglConfig) -> Outcome:
    source, target, n = command.get("from_basis"), command.get("to_basis"), command.get("degree")
    value = symfunc.express(source, n, target)
    data = {"from": source, "to": target, "degree": n, "terms": poly_to_json(value)}
    return Outcome(f"{source}{n} = {poly_text(value)}", data)


VERIFY_FLAGS = ("order", "max_n", "max_k")


@dataclass(frozen=True)
class VerifyTarget:
    """A suite, the flags that bound it, and the config field used when none is given"""
    flags: Tuple[str, ...]
    default: str
    suite: Callable[[int], List[CheckReport]]

    def bound(self, command: Command, config: MufglConfig) -> int:
        for flag in self.flags:
            if command.get(flag) is not None:
                return command.get(flag)
        return getattr(config, self.default)

    def reject_foreign_flags(self, name: str, command: Command) -> None:
        for flag in VERIFY_FLAGS:
            if flag not in self.flags and command.get(flag) is not None:
                raise UsageError(f"verify {name} does not take --{flag.replace('_', '-')}")


VERIFY_TARGETS: Dict[str, VerifyTarget] = {
    "hopf": VerifyTarget(("order",), "bivariate_order", lambda n: [fgl.hopf_check(n)]),
    "additive": VerifyTarget(("order",), "bivariate_order", lambda n: [fgl.additive_image_check(n)]),
    "grouplaw": VerifyTarget(("order",), "bivariate_order", fgl.group_law_checks),
    "integrality": VerifyTarget(("max_n",), "max_n", lambda n: [hurewicz.integrality_check(n)]),
    "divisibility": VerifyTarget(("max_k",), "max_k", lambda k: [hurewicz.divisibility_suite(k)]),
    "symfunc": VerifyTarget(("order", "max_n"), "symfunc_degree", lambda n: [symfunc.verify_symfunc(n)]),
    "roundtrip": VerifyTarget(("order",), "roundtrip_order", fgl.roundtrip_check),
    "oracle": VerifyTarget(("max_n",), "oracle_max_n", lambda n: [hurewicz.oracle_check(n)]),
    "expansion": VerifyTarget(("max_n",), "max_n", lambda n: [hurewicz.expansion_check(n)]),
    "cycle": VerifyTarget(("max_n",), "max_n", lambda n: [hurewicz.cycle_check(n)]),
    "twist": VerifyTarget(("max_n",), "twist_max_n", lambda n: [hurewicz.twist_check(n)]),
    "cumulants": VerifyTarget(("max_n",), "max_n", lambda n: [hurewicz.cumulant_check(n)]),
    "divided": VerifyTarget(("order",), "bivariate_order", lambda n: [hurewicz.divided_hopf_check(n)]),
}


def _verify_command(command: Command, config: MufglConfig) -> Outcome:
    target = command.get("target")
    if target == "all":
        names = list(VERIFY_TARGETS)
    else:
        VERIFY_TARGETS[target].reject_foreign_flags(target, command)
        names = [target]
    reports: List[CheckReport] = []
    for name in names:
        entry = VERIFY_TARGETS[name]
        logger.info("Running verification suite %s", name)
        reports.extend(entry.suite(entry.bound(command, config)))
    ok = all(reports)
    text = "\n".join(report_text(r) for r in reports)
    data = {"target": target, "ok": ok, "reports": [report_to_json(r) for r in reports]}
    return Outcome(text, data, ok)


HANDLERS: Dict[str, Callable[[Command, MufglConfig], Outcome]] = {
    "logmu": _series_command,
    "expmu": _series_command,
    "bmu": _series_command,
    "fgl-sum": _series_command,
    "hurewicz": _hurewicz_command,
    "twist": _twist_command,
    "cumulants": _cumulants_command,
    "symfunc": _symfunc_command,
    "verify": _verify_command,
}


def run(command: Command, out: TextIO, config: MufglConfig = DEFAULT_CONFIG) -> int:
    """Execute one command, writing its result to `out`; returns the exit code"""
    if command.verb not in HANDLERS:
        raise UsageError(f"unknown command {command.verb!r}")
    outcome = HANDLERS[command.verb](command, config)
    fmt = command.get("format", config.output_format)
    out.write((dumps(outcome.data) if fmt == "json" else outcome.text) + "\n")
    return EXIT_OK if outcome.ok else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None) -> int:
    """Main CLI entry point"""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        config = load_config(args.config)
        setup_logging(args.verbose, config.log_level)
        return run(Command.from_namespace(args), out, config)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MufglError as e:
        print(f"error: {e}", file=sys.stderr)
        if args.verbose:
            logging.exception("Full error details:")
        return EXIT_FAILED
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())

"""relcorr Main Entry Point

Command-line interface for relativistic EPR correlations, Bell quantities
and their extrema.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ..common.logging_setup import configure_logging
from ..common.settings import DEFAULT_SETTINGS, SettingsError, load_settings
from ..correlation.errors import ClosedFormUnavailableError, CorrelationError
from ..correlation.verification import CASE_NAMES, VerificationError
from ..inequalities.bell import InequalityError
from ..kinematics.spin_matrices import SpinError
from ..kinematics.vectors import KinematicsError
from ..observables.spin_observables import ObservableError
from ..scan.sweep import ScanError
from ..states.pair_states import StateError
from .commands import COMMANDS, DIRECTION_LABELS, family_choices, spin_choices
from .figures import FIGURES, FigureError
from .manifest import VERSION


EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_UNAVAILABLE = 3

INPUT_ERRORS = (KinematicsError, SpinError, StateError, ObservableError, InequalityError,
                ScanError, SettingsError, FigureError, VerificationError, ValueError)


def _physics_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("physics")
    group.add_argument("--spin", choices=spin_choices(), default=None,
                       help="Particle spin (default: half; one for mermin)")
    group.add_argument("--backend", choices=["closed", "oracle"], default="closed",
                       help="Closed-form expression or brute-force oracle (default: closed)")
    group.add_argument("--momenta", choices=family_choices(), default="cm",
                       help="Pair momenta: eq13 (alias lab) or cm (default: cm)")
    group.add_argument("--n", default="0,0,1",
                       help="c.m. momentum axis x,y,z (default: 0,0,1)")
    group.add_argument("--mass", type=float, default=None,
                       help="Particle mass (default: 1)")
    return parent


def _directions_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("directions")
    for label in DIRECTION_LABELS:
        group.add_argument(f"--{label}", metavar="X,Y,Z", default=None,
                           help=f"Measurement direction {label}")
    return parent


def _output_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("output")
    group.add_argument("--out", type=Path, default=None,
                       help="Output file (default: stdout)")
    group.add_argument("--format", choices=["csv", "json"], default="csv",
                       help="Output format (default: csv)")
    return parent


def _range_arguments(parser: argparse.ArgumentParser, steps: bool = True) -> None:
    parser.add_argument("--x-min", type=float, default=0.0, help="Lower end of x (default: 0)")
    parser.add_argument("--x-max", type=float, default=None,
                        help=f"Upper end of x (default: {DEFAULT_SETTINGS.figure_x_max:g})")
    if steps:
        parser.add_argument("--steps", type=int, default=None,
                            help=f"Grid points (default: {DEFAULT_SETTINGS.figure_steps})")


def _point_arguments(parser: argparse.ArgumentParser) -> None:
    point = parser.add_mutually_exclusive_group()
    point.add_argument("--x", type=float, default=None, help="Kinematic parameter x >= 0")
    point.add_argument("--velocity", type=float, default=None,
                       help="c.m. particle speed v/c in [0, 1), converted to x")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relcorr",
        description="relcorr - relativistic EPR correlations and Bell inequalities",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  relcorr correlate --spin half --operator nw --momenta cm --x 0.7 --a 0,0,1 --b 0,0,1
  relcorr extrema --spin half --operator nw --momenta eq13 --a 0,0,1 --b 0.8660254,0,-0.5
  relcorr chsh --momenta eq13 --operator nw --a 0,0,1 --b 0,0,1 \\
               --c 0.8660254,0,0.5 --d 0.8660254,0,0.5 --x-max 10 --steps 401
  relcorr verify --samples 1000 --seed 42
  relcorr figure 5 --out figure5.csv
  relcorr figure --all --out figures/

Components starting with a minus sign need the = form: --b=-0.8660254,0,0.5
"""
    )
    parser.add_argument("--config", type=Path, default=None,
                        help="JSON file overriding numeric settings")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging on stderr")
    parser.add_argument("--version", action="version", version=f"relcorr v{VERSION}")

    physics = _physics_parent()
    directions = _directions_parent()
    output = _output_parent()
    operators = ["nw", "cz"]

    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    p = sub.add_parser("correlate", parents=[physics, directions],
                       help="Print one correlation value C(a, b)")
    p.add_argument("--operator", choices=operators, default="nw")
    _point_arguments(p)
    p.add_argument("--out", type=Path, default=None, help="Output file (default: stdout)")

    p = sub.add_parser("sweep", parents=[physics, directions, output],
                       help="Correlation over a uniform x grid")
    p.add_argument("--operator", choices=operators + ["both"], default="both")
    _range_arguments(p)

    p = sub.add_parser("extrema", parents=[physics, directions, output],
                       help="Interior local extrema over x")
    p.add_argument("--operator", choices=operators, default="nw")
    p.add_argument("--quantity", choices=["correlation", "chsh", "mermin"], default="correlation")
    p.add_argument("--coarse-steps", type=int, default=None,
                   help=f"Bracketing grid (default: {DEFAULT_SETTINGS.coarse_steps})")
    p.add_argument("--x-tol", type=float, default=None,
                   help=f"Refinement width (default: {DEFAULT_SETTINGS.x_tol:g})")
    _range_arguments(p, steps=False)

    for name, text in (("chsh", "CHSH quantity at x or over an x grid"),
                       ("mermin", "Bell-Mermin quantity at x or over an x grid")):
        p = sub.add_parser(name, parents=[physics, directions, output], help=text)
        p.add_argument("--operator", choices=operators, default="nw")
        _point_arguments(p)
        _range_arguments(p)

    p = sub.add_parser("optimize", parents=[physics, directions, output],
                       help="Maximise an inequality over directions (and x)")
    p.add_argument("--inequality", choices=["chsh", "mermin"], required=True)
    p.add_argument("--operator", choices=operators, default="nw")
    p.add_argument("--restarts", type=int, default=None,
                   help=f"Random restarts (default: {DEFAULT_SETTINGS.restarts})")
    p.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    p.add_argument("--hold-directions", action="store_true",
                   help="Keep the given directions fixed and search x only")
    _point_arguments(p)
    _range_arguments(p, steps=False)

    p = sub.add_parser("verify", parents=[output],
                       help="Cross-check closed forms against the oracle")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--x-max", type=float, default=10.0)
    p.add_argument("--tolerance", type=float, default=None,
                   help=f"Pass threshold (default: {DEFAULT_SETTINGS.verification_tolerance:g})")
    p.add_argument("--case", action="append", choices=CASE_NAMES, default=None,
                   help="Restrict to one case (repeatable)")

    p = sub.add_parser("figure", parents=[output], help="Dataset of one of the five reference figures")
    p.add_argument("number", type=int, nargs="?", choices=sorted(FIGURES), default=None)
    p.add_argument("--all", action="store_true", help="Write figure1..5 into the --out directory")
    p.add_argument("--backend", choices=["closed", "oracle"], default="closed")
    p.add_argument("--mass", type=float, default=None)
    p.add_argument("--x-max", type=float, default=None,
                   help=f"Upper end of x (default: {DEFAULT_SETTINGS.figure_x_max:g})")
    p.add_argument("--steps", type=int, default=None,
                   help=f"Grid points (default: {DEFAULT_SETTINGS.figure_steps})")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the relcorr command line."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    configure_logging(args.verbose)

    try:
        settings = load_settings(args.config) if args.config else DEFAULT_SETTINGS
        return COMMANDS[args.command](args, settings)

    except ClosedFormUnavailableError as e:
        print(f"Unavailable: {e}", file=sys.stderr)
        return EXIT_UNAVAILABLE

    except INPUT_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID

    except CorrelationError as e:
        print(f"Correlation Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

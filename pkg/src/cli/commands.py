"""relcorr CLI Commands

One function per subcommand. Each takes the parsed arguments and the
active settings, writes its data to stdout or --out, and returns the exit
code. Errors propagate to :func:`src.cli.main.main`, which maps them to
exit codes.
"""

import argparse
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from ..common.settings import Settings
from ..correlation.engine import Backend
from ..correlation.verification import verify_equivalence
from ..inequalities.bell import InequalityKind
from ..kinematics.momenta import LAB_ALIASES, MomentaFamily, x_from_velocity
from ..kinematics.spin_matrices import Spin
from ..kinematics.vectors import Direction
from ..observables.spin_observables import SpinOperator
from ..scan.extrema import find_local_extrema
from ..scan.optimize import optimize_directions, optimize_joint
from ..scan.quantities import (QuantityConfig, correlation_quantity, inequality_quantity,
                               inequality_result)
from ..scan.sweep import ScanError, operator_gap, sweep_x, violation_intervals
from .figures import FIGURES, figure_definition, generate_figure
from .manifest import RunManifest, build_manifest
from .output import csv_text, format_flag, format_number, json_text, show_table, write_output


logger = logging.getLogger(__name__)

DIRECTION_LABELS = ("a", "b", "c", "d")


# ----------------------------------------------------------------------------
# Argument helpers
# ----------------------------------------------------------------------------

def parse_direction(text: Optional[str], settings: Settings, label: str) -> Direction:
    if text is None:
        raise ScanError(f"direction --{label} is required")
    return Direction.parse(text, settings.direction_parse_tolerance)


def directions_from_args(args: argparse.Namespace, settings: Settings,
                         labels: Sequence[str]) -> List[Direction]:
    return [parse_direction(getattr(args, label), settings, label) for label in labels]


def optional_directions(args: argparse.Namespace, settings: Settings,
                        labels: Sequence[str]) -> Optional[List[Direction]]:
    given = [getattr(args, label) for label in labels]
    if all(text is None for text in given):
        return None
    return directions_from_args(args, settings, labels)


def resolve_x(args: argparse.Namespace) -> Optional[float]:
    """--x, or --velocity converted to x; None when neither is given."""
    if getattr(args, "x", None) is not None:
        return float(args.x)
    if getattr(args, "velocity", None) is not None:
        return x_from_velocity(float(args.velocity))
    return None


def quantity_config(args: argparse.Namespace, settings: Settings,
                    operator: Optional[str] = None, default_spin: str = "half") -> QuantityConfig:
    n = Direction.parse(args.n, settings.direction_parse_tolerance)
    mass = settings.default_mass if args.mass is None else args.mass
    return QuantityConfig.create(args.spin or default_spin, operator or args.operator,
                                 args.backend, args.momenta, n, mass)


def x_range(args: argparse.Namespace, settings: Settings):
    x_max = settings.figure_x_max if args.x_max is None else args.x_max
    steps = settings.figure_steps if args.steps is None else args.steps
    return args.x_min, x_max, steps


def emit(args: argparse.Namespace, manifest: RunManifest, header: Sequence[str],
         rows: List[Sequence[str]], results) -> None:
    if args.format == "json":
        write_output(json_text(manifest, results), args.out)
    else:
        write_output(csv_text(header, rows), args.out)


def physics_parameters(config: QuantityConfig) -> Dict[str, object]:
    return {"spin": config.spin, "operator": config.operator, "backend": config.backend,
            "momenta": config.family, "n": config.n, "mass": config.mass}


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------

def cmd_correlate(args: argparse.Namespace, settings: Settings) -> int:
    config = quantity_config(args, settings)
    x = resolve_x(args)
    if x is None:
        raise ScanError("correlate needs --x or --velocity")
    a, b = directions_from_args(args, settings, ("a", "b"))
    value = config.correlation_at(x)(a, b)
    logger.info("C(a, b) at x=%g: %.15g", x, value)
    write_output(format_number(value, ".12f") + "\n", args.out)
    return 0


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    a, b = directions_from_args(args, settings, ("a", "b"))
    x_min, x_max, steps = x_range(args, settings)
    wanted = ([SpinOperator.NEWTON_WIGNER, SpinOperator.CZACHOR] if args.operator == "both"
              else [SpinOperator(args.operator)])

    sweeps = {}
    for operator in wanted:
        config = quantity_config(args, settings, operator.value)
        sweeps[operator] = sweep_x(correlation_quantity(config, a, b), x_min, x_max, steps,
                                   label=f"correlation-{operator.value}")
    xs = next(iter(sweeps.values())).xs
    columns = {op: sweeps[op].values if op in sweeps else None
               for op in (SpinOperator.NEWTON_WIGNER, SpinOperator.CZACHOR)}

    rows = []
    for i, x in enumerate(xs):
        rows.append([format_number(x)] + [
            format_number(values[i]) if values is not None else ""
            for values in columns.values()])

    gap = None
    if len(sweeps) == 2:
        gap = operator_gap(sweeps[SpinOperator.NEWTON_WIGNER], sweeps[SpinOperator.CZACHOR])
        show_table("Operator gap", ["x", "|C_NW - C_Cz|", "C_NW", "C_Cz"],
                   [[format_number(gap.x, ".6g"), format_number(gap.gap, ".6g"),
                     format_number(gap.value_nw, ".9g"), format_number(gap.value_cz, ".9g")]])

    config = quantity_config(args, settings, wanted[0].value)
    manifest = build_manifest("sweep", **dict(physics_parameters(config), operator=args.operator),
                              a=a, b=b, x_min=x_min, x_max=x_max, steps=steps)
    results = {"x": xs,
               "value_nw": columns[SpinOperator.NEWTON_WIGNER],
               "value_cz": columns[SpinOperator.CZACHOR]}
    if gap is not None:
        results["gap"] = gap.to_dict()
    emit(args, manifest, ["x", "value_nw", "value_cz"], rows, results)
    return 0


def _quantity_labels(quantity: str) -> Sequence[str]:
    if quantity == "correlation":
        return ("a", "b")
    return InequalityKind(quantity).labels


def cmd_extrema(args: argparse.Namespace, settings: Settings) -> int:
    default_spin = "one" if args.quantity == InequalityKind.BELL_MERMIN.value else "half"
    config = quantity_config(args, settings, default_spin=default_spin)
    directions = directions_from_args(args, settings, _quantity_labels(args.quantity))
    if args.quantity == "correlation":
        f = correlation_quantity(config, *directions)
    else:
        f = inequality_quantity(InequalityKind(args.quantity), config, directions)

    x_max = settings.figure_x_max if args.x_max is None else args.x_max
    coarse = settings.coarse_steps if args.coarse_steps is None else args.coarse_steps
    x_tol = settings.x_tol if args.x_tol is None else args.x_tol
    extrema = find_local_extrema(f, args.x_min, x_max, coarse, x_tol)

    rows = [[format_number(e.x_star, ".6f"), format_number(e.value, ".9f"), e.kind]
            for e in extrema]
    show_table(f"Local extrema of {args.quantity}", ["x*", "value", "kind"], rows)
    manifest = build_manifest("extrema", quantity=args.quantity, **physics_parameters(config),
                              directions=dict(zip(_quantity_labels(args.quantity), directions)),
                              x_min=args.x_min, x_max=x_max, coarse_steps=coarse, x_tol=x_tol)
    emit(args, manifest, ["x_star", "value", "kind"], rows, [e.to_dict() for e in extrema])
    return 0


def cmd_inequality(args: argparse.Namespace, settings: Settings, kind: InequalityKind) -> int:
    default_spin = "one" if kind is InequalityKind.BELL_MERMIN else "half"
    config = quantity_config(args, settings, default_spin=default_spin)
    directions = directions_from_args(args, settings, kind.labels)

    x = resolve_x(args)
    if x is not None:
        xs = [x]
        parameters = {"x": x}
    else:
        x_min, x_max, steps = x_range(args, settings)
        sweep = sweep_x(inequality_quantity(kind, config, directions), x_min, x_max, steps,
                        label=kind.value)
        xs = sweep.xs
        parameters = {"x_min": x_min, "x_max": x_max, "steps": steps}
        intervals = violation_intervals(sweep, kind.bound, settings.violation_tolerance)
        show_table(f"{kind.value} violation intervals (bound {kind.bound:g})", ["from", "to"],
                   [[format_number(lo, ".6g"), format_number(hi, ".6g")] for lo, hi in intervals])

    results = [inequality_result(kind, config, xi, directions, settings.violation_tolerance)
               for xi in xs]
    rows = [[format_number(xi), format_number(r.value), format_number(r.bound),
             format_flag(r.violated)] for xi, r in zip(xs, results)]
    manifest = build_manifest(kind.value, **physics_parameters(config),
                              directions=dict(zip(kind.labels, directions)), **parameters)
    emit(args, manifest, ["x", "value", "bound", "violated"], rows,
         [r.to_dict() for r in results])
    return 0


def cmd_chsh(args: argparse.Namespace, settings: Settings) -> int:
    return cmd_inequality(args, settings, InequalityKind.CHSH)


def cmd_mermin(args: argparse.Namespace, settings: Settings) -> int:
    return cmd_inequality(args, settings, InequalityKind.BELL_MERMIN)


def cmd_optimize(args: argparse.Namespace, settings: Settings) -> int:
    kind = InequalityKind(args.inequality)
    default_spin = "one" if kind is InequalityKind.BELL_MERMIN else "half"
    config = quantity_config(args, settings, default_spin=default_spin)
    initial = optional_directions(args, settings, kind.labels)
    restarts = settings.restarts if args.restarts is None else args.restarts

    x = resolve_x(args)
    if x is not None:
        optimum = optimize_directions(kind, config, x, restarts, args.seed, initial,
                                      settings.simplex_xatol, settings.simplex_fatol,
                                      settings.simplex_maxiter)
        x_star, value, named = optimum.x, optimum.value, optimum.directions
        results = optimum.to_dict()
        parameters = {"x": x}
    else:
        x_max = settings.figure_x_max if args.x_max is None else args.x_max
        joint = optimize_joint(kind, config, (args.x_min, x_max), restarts, args.seed,
                               initial, args.hold_directions, settings.joint_improvement,
                               settings.joint_max_rounds, settings.coarse_steps, settings.x_tol)
        x_star, value, named = joint.x_star, joint.value, joint.directions
        results = joint.to_dict()
        parameters = {"x_min": args.x_min, "x_max": x_max, "hold_directions": args.hold_directions}

    rows = [[format_number(x_star), format_number(value), label] + [format_number(c) for c in vec]
            for label, vec in named.items()]
    show_table(f"Optimised {kind.value} = {value:.12f} at x = {x_star:.9g}",
               ["label", "dx", "dy", "dz"], [[r[2]] + r[3:] for r in rows])
    manifest = build_manifest("optimize", inequality=kind, **physics_parameters(config),
                              restarts=restarts, seed=args.seed,
                              initial=(dict(zip(kind.labels, initial)) if initial else None),
                              **parameters)
    emit(args, manifest, ["x_star", "value", "label", "dx", "dy", "dz"], rows, results)
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    tolerance = settings.verification_tolerance if args.tolerance is None else args.tolerance
    report = verify_equivalence(args.samples, (args.x_min, args.x_max), args.seed, tolerance,
                                args.case, settings.default_mass)
    rows = [[c.case, str(c.samples), format_number(c.max_discrepancy, ".6e"), c.status]
            for c in report.cases]
    show_table(f"Closed form vs oracle ({report.sample_count} samples, seed {report.seed})",
               ["case", "samples", "max |closed - oracle|", "status"], rows)
    manifest = build_manifest("verify", samples=args.samples, seed=args.seed,
                              x_min=args.x_min, x_max=args.x_max, tolerance=tolerance,
                              cases=args.case)
    emit(args, manifest, ["case", "samples", "max_discrepancy", "status"], rows, report.to_dict())
    if not report.passed:
        logger.error("verification failed: %s differs by %.3e (tolerance %.1e)",
                     report.worst_case, report.max_discrepancy, tolerance)
        return 1
    return 0


def _figure_document(number: int, args: argparse.Namespace,
                     x_max: float, steps: int, mass: float) -> str:
    definition = figure_definition(number)
    backend = Backend(args.backend)
    nw, cz = generate_figure(number, x_max, steps, backend, mass)
    rows = [[format_number(x), format_number(v_nw), format_number(v_cz)]
            for x, v_nw, v_cz in zip(nw.xs, nw.values, cz.values)]
    if args.format == "json":
        manifest = build_manifest("figure", figure=number, x_max=x_max, steps=steps,
                                  backend=backend, mass=mass, definition=definition.describe())
        return json_text(manifest, {"x": nw.xs, "value_nw": nw.values, "value_cz": cz.values})
    return csv_text(["x", "value_nw", "value_cz"], rows)


def cmd_figure(args: argparse.Namespace, settings: Settings) -> int:
    x_max = settings.figure_x_max if args.x_max is None else args.x_max
    steps = settings.figure_steps if args.steps is None else args.steps
    mass = settings.default_mass if args.mass is None else args.mass

    if args.all:
        if args.out is None:
            raise ScanError("figure --all needs --out <directory>")
        suffix = "json" if args.format == "json" else "csv"
        for number in sorted(FIGURES):
            path = Path(args.out) / f"figure{number}.{suffix}"
            write_output(_figure_document(number, args, x_max, steps, mass), path)
            logger.info("wrote %s", path)
        return 0

    if args.number is None:
        raise ScanError("give a figure number (1-5) or --all")
    write_output(_figure_document(args.number, args, x_max, steps, mass), args.out)
    return 0


COMMANDS = {
    "correlate": cmd_correlate,
    "sweep": cmd_sweep,
    "extrema": cmd_extrema,
    "chsh": cmd_chsh,
    "mermin": cmd_mermin,
    "optimize": cmd_optimize,
    "verify": cmd_verify,
    "figure": cmd_figure,
}


def family_choices() -> List[str]:
    return [f.value for f in MomentaFamily] + list(LAB_ALIASES)


def spin_choices() -> List[str]:
    return [s.value for s in Spin]

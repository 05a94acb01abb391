"""relcorr Settings

Numeric tolerances and defaults shared by every module, with dict and JSON
loaders for the command-line front end.
"""

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from dataclasses_json import Undefined, dataclass_json
from dataclasses_json.undefined import UndefinedParameterError


class SettingsError(Exception):
    """Raised when a configuration file or dict cannot be turned into settings."""

    def __init__(self, message: str, source: Optional[str] = None):
        loc = f"{source}: " if source else ""
        super().__init__(f"Settings error: {loc}{message}")
        self.source = source


@dataclass_json(undefined=Undefined.RAISE)
@dataclass(frozen=True)
class Settings:
    """Tolerances and defaults.

    Tolerances are absolute unless the name says otherwise.
    """

    # Kinematics
    on_shell_rtol: float = 1e-12       # relative to (k0)^2
    unit_tolerance: float = 1e-12
    direction_parse_tolerance: float = 1e-6
    default_mass: float = 1.0

    # Correlations
    imaginary_tolerance: float = 1e-12
    verification_tolerance: float = 1e-10
    cm_tolerance: float = 1e-12        # relative, for recognising p = k^pi

    # Inequalities
    violation_tolerance: float = 1e-12

    # Scans
    coarse_steps: int = 512
    x_tol: float = 1e-8

    # Direction optimisation (Nelder-Mead)
    restarts: int = 8
    simplex_xatol: float = 1e-10
    simplex_fatol: float = 1e-13
    simplex_maxiter: int = 20000
    joint_improvement: float = 1e-9
    joint_max_rounds: int = 10

    # Figures
    figure_x_max: float = 10.0
    figure_steps: int = 400


DEFAULT_SETTINGS = Settings()


def create_settings(config: Optional[Dict[str, Any]] = None) -> Settings:
    """Create settings from an optional configuration dictionary.

    Unknown keys are rejected so that typos do not silently fall back to
    defaults.
    """
    try:
        parsed = Settings.from_dict(dict(config or {}))
    except UndefinedParameterError as e:
        raise SettingsError(f"unknown setting(s): {e}")
    except (TypeError, ValueError) as e:
        raise SettingsError(f"bad value ({e})")

    # JSON gives ints for whole floats; coerce to the declared types
    values = {}
    for f in fields(Settings):
        default = getattr(DEFAULT_SETTINGS, f.name)
        raw = getattr(parsed, f.name)
        try:
            values[f.name] = type(default)(raw)
        except (TypeError, ValueError) as e:
            raise SettingsError(f"bad value for '{f.name}': {raw!r} ({e})")
    return Settings(**values)


def load_settings(path: Path) -> Settings:
    """Load settings from a JSON object file; missing keys keep their defaults."""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise SettingsError(str(e), str(path))

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SettingsError(f"invalid JSON ({e})", str(path))

    if not isinstance(data, dict):
        raise SettingsError("top-level JSON value must be an object", str(path))

    return create_settings(data)

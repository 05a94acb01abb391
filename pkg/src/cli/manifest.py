"""relcorr Run Manifest

Everything needed to reproduce a CLI run: the command, every resolved
parameter and the tool version. JSON outputs embed it verbatim.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from dataclasses_json import dataclass_json

from ..kinematics.vectors import Direction


TOOL_NAME = "relcorr"
VERSION = "0.1.0"


@dataclass_json
@dataclass
class RunManifest:
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    tool: str = TOOL_NAME
    version: str = VERSION


def plain(value: Any) -> Any:
    """Convert parameter values into JSON-ready builtins."""
    if isinstance(value, Direction):
        return [value.x, value.y, value.z]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    return value


def build_manifest(command: str, **parameters: Any) -> RunManifest:
    return RunManifest(command, {name: plain(v) for name, v in parameters.items() if v is not None})

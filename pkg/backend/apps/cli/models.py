from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class RunConfig:
    """Options of one fdel invocation after parsing"""

    command: str
    graph_path: Path | None = None
    family_path: Path | None = None
    containment: str = "minor"
    ell: int | None = None
    engine: str = "auto"
    caps: dict[str, int | None] = field(default_factory=dict)
    outputs: dict[str, Path | None] = field(default_factory=dict)
    threads: int | None = None
    verbosity: int = 1

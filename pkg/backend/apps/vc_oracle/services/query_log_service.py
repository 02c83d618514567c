"""
Query Log Service - Append-only log of oracle queries
"""
import json
import logging
import threading
from pathlib import Path

from ..models import QueryRecord
from apps.graphs.models import Graph
from apps.graphs.services import DimacsService

logger = logging.getLogger(__name__)


class QueryLog:
    """
    Thread-safe list of QueryRecords. With an emit directory every reduced
    query is also written as a graph file carrying its budget in a comment.
    """

    def __init__(self, emit_dir: str | Path | None = None):
        self._records: list[QueryRecord] = []
        self._lock = threading.Lock()
        self.emit_dir = Path(emit_dir) if emit_dir else None
        if self.emit_dir:
            self.emit_dir.mkdir(parents=True, exist_ok=True)

    def append(self, record: QueryRecord, reduced: Graph | None = None) -> None:
        with self._lock:
            index = len(self._records)
            self._records.append(record)
        if self.emit_dir and reduced is not None:
            DimacsService.write_graph(
                self.emit_dir / f"query_{index:05d}.gr",
                reduced,
                comments=[f"budget {record.reduced_budget}", f"original_n {record.original_n}"],
            )

    @property
    def records(self) -> tuple[QueryRecord, ...]:
        with self._lock:
            return tuple(self._records)

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)

    def write_jsonl(self, path: str | Path) -> int:
        records = self.records
        with Path(path).open("w") as handle:
            for record in records:
                handle.write(json.dumps(record.to_dict()) + "\n")
        logger.info(f"Wrote {len(records)} query records to {path}")
        return len(records)

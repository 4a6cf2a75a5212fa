from __future__ import annotations

"""
I/O helpers for pair documents, spec lists and JSON reports.

A pair document is a JSON object
``{"dim": n, "A": [[...]], "Astar": [[...]], "provenance": "..."}`` whose
entries are exact rationals written as ``"p/q"`` strings (plain integers are
accepted as well).
"""

from dataclasses import dataclass
import json
from pathlib import Path
import sys
from typing import Any, List, Optional

from sympy.polys.matrices import DomainMatrix

from .errors import DocumentError
from .linalg import format_matrix, matrix
from .logging import get_logger

log = get_logger(__name__)


@dataclass
class PairDocument:
    A: DomainMatrix
    Astar: DomainMatrix
    provenance: Optional[str] = None

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "A": format_matrix(self.A),
            "Astar": format_matrix(self.Astar),
            "provenance": self.provenance,
        }


def _parse_matrix(payload: Any, name: str, dim: int) -> DomainMatrix:
    if not isinstance(payload, list) or len(payload) != dim:
        raise DocumentError(f"{name} must be a list of {dim} rows.")
    for row in payload:
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"Every row of {name} must have {dim} entries.")
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                raise DocumentError(f"{name} entry {entry!r} is not a rational string.")
    try:
        return matrix(payload)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{name}: {exc}") from exc


def parse_pair_document(payload: Any) -> PairDocument:
    if not isinstance(payload, dict):
        raise DocumentError("Pair document must be a JSON object.")
    dim = payload.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DocumentError("Field 'dim' must be a positive integer.")
    for key in ("A", "Astar"):
        if key not in payload:
            raise DocumentError(f"Missing field {key!r}.")
    provenance = payload.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise DocumentError("Field 'provenance' must be a string.")
    return PairDocument(
        A=_parse_matrix(payload["A"], "A", dim),
        Astar=_parse_matrix(payload["Astar"], "Astar", dim),
        provenance=provenance,
    )


def read_pair_document(path: Path) -> PairDocument:
    """Load and validate a pair document; malformed input raises DocumentError."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise DocumentError(f"Cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from exc
    return parse_pair_document(payload)


def write_json(payload: Any, path: Optional[Path]) -> None:
    """Write a JSON document to ``path``, or to stdout when path is None."""
    text = json.dumps(payload, indent=2, ensure_ascii=False)
    if path is None:
        sys.stdout.write(text + "\n")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
        handle.write("\n")
    log.debug("Wrote %s", path)


def write_pair_document(doc: PairDocument, path: Optional[Path]) -> None:
    write_json(doc.to_dict(), path)


def write_report(report: Any, path: Optional[Path]) -> None:
    write_json(report, path)


def read_spec_list(path: Path) -> List[str]:
    """One construction spec per line; blank lines and ``#`` comments are skipped."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise DocumentError(f"Cannot read {path}: {exc}") from exc
    specs = []
    for line in lines:
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            specs.append(stripped)
    if not specs:
        raise DocumentError(f"{path} lists no construction specs.")
    return specs


def render_text(payload: Any, indent: int = 0) -> str:
    """Indented ``key: value`` rendering of a report for terminal output."""
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(payload)}")
    return "\n".join(lines)


def _is_flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(item, dict) for item in value) and all(
            not isinstance(item, list) or all(not isinstance(x, (list, dict)) for x in item)
            for item in value
        )
    return False


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_inline(item) for item in value) + "]"
    if value is None:
        return "-"
    return str(value)


__all__ = [
    "PairDocument",
    "parse_pair_document",
    "read_pair_document",
    "write_json",
    "write_pair_document",
    "write_report",
    "read_spec_list",
    "render_text",
]

"""Input document parsing: JSON and CSV matrix files, known-value files.

JSON document format (one file carries everything):

    {"labels": ["a", "b", "c"],
     "matrix": [[1, 0.5, 2], [2, 1, 4], [0.5, 0.25, 1]],
     "known": {"c": 1.0}}

Labels present in "known" form the reference set; all others are unknowns,
in label order.  CSV carries labels in the first row and the matrix in the
body; known values then come from a separate file (JSON map or CSV
"label,value" lines).
"""

import csv
import io as _io
import json
from pathlib import Path

from .errors import InputError
from .pcmatrix import (
    DEFAULT_RECIPROCITY_TOLERANCE,
    ConceptPartition,
    PCMatrix,
    validate_pc_matrix,
)


def partition_from_known(labels, known: dict[str, float]) -> ConceptPartition:
    """Build the partition from label order and the known-value map."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise InputError("duplicate concept labels")
    unknown_labels = set(known)
    for lab in unknown_labels:
        if lab not in labels:
            raise InputError(f"known value for unlisted label '{lab}'")
    index = {lab: i for i, lab in enumerate(labels)}
    unknown = tuple(i for i, lab in enumerate(labels) if lab not in known)
    known_values = {index[lab]: float(v) for lab, v in known.items()}
    return ConceptPartition(
        concept_labels=tuple(labels),
        unknown_indices=unknown,
        known_values=known_values,
    )


def parse_document(doc: dict, reciprocity_tolerance=DEFAULT_RECIPROCITY_TOLERANCE):
    """Parse an in-memory JSON document into (PCMatrix, ConceptPartition)."""
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    try:
        labels = doc["labels"]
        known = doc.get("known", {})
    except (TypeError, KeyError) as exc:
        raise InputError(f"missing field: {exc}") from exc
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise InputError('"labels" must be a list of strings')
    if not isinstance(known, dict):
        raise InputError('"known" must be an object mapping label to value')
    if "matrix" in doc:
        matrix = doc["matrix"]
    elif "judgments" in doc:
        matrix = matrix_from_judgments(labels, doc["judgments"])
    else:
        raise InputError('document needs a "matrix" or a "judgments" field')
    if not isinstance(matrix, list) or len(matrix) != len(labels):
        raise InputError('"matrix" must be a square array matching "labels"')
    M = validate_pc_matrix(matrix, reciprocity_tolerance)
    p = partition_from_known(labels, known)
    return M, p


def matrix_from_judgments(labels, judgments) -> list[list[float]]:
    """Complete a full matrix from upper-triangular judgments.

    Each judgment is {"i": label, "j": label, "value": v}; the mirror entry
    is derived as 1/v and the diagonal is 1.  Every unordered pair must be
    judged exactly once.
    """
    n = len(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    matrix = [[1.0 if i == j else None for j in range(n)] for i in range(n)]
    for entry in judgments:
        try:
            i, j, v = index[entry["i"]], index[entry["j"]], float(entry["value"])
        except (TypeError, KeyError, ValueError) as exc:
            raise InputError(f"malformed judgment {entry!r}") from exc
        if i == j:
            raise InputError(f"self-judgment for '{entry['i']}'")
        if not v > 0:
            raise InputError(f"judgment {entry['i']} vs {entry['j']} must be > 0")
        if matrix[i][j] is not None:
            raise InputError(f"duplicate judgment {entry['i']} vs {entry['j']}")
        matrix[i][j] = v
        matrix[j][i] = 1.0 / v
    for i in range(n):
        for j in range(n):
            if matrix[i][j] is None:
                raise InputError(
                    f"missing judgment {labels[i]} vs {labels[j]}"
                )
    return matrix


def _parse_csv_matrix(text: str):
    rows = [row for row in csv.reader(_io.StringIO(text)) if row]
    if len(rows) < 2:
        raise InputError("CSV matrix needs a label row and a matrix body")
    labels = [cell.strip() for cell in rows[0]]
    try:
        matrix = [[float(cell) for cell in row] for row in rows[1:]]
    except ValueError as exc:
        raise InputError(f"non-numeric matrix cell: {exc}") from exc
    return labels, matrix


def load_known_file(path) -> dict[str, float]:
    """Known values from a JSON map or a CSV of label,value lines."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        try:
            known = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
        if not isinstance(known, dict):
            raise InputError(f"{path}: expected a JSON object of label: value")
        return {str(k): float(v) for k, v in known.items()}
    known = {}
    for row in csv.reader(_io.StringIO(text)):
        if not row:
            continue
        if len(row) != 2:
            raise InputError(f"{path}: expected 'label,value' rows")
        try:
            known[row[0].strip()] = float(row[1])
        except ValueError as exc:
            raise InputError(f"{path}: bad value for '{row[0]}'") from exc
    return known


def load_matrix_file(path, known_path=None,
                     reciprocity_tolerance=DEFAULT_RECIPROCITY_TOLERANCE):
    """Load a matrix document from disk; --known overrides the embedded map."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".csv":
        labels, matrix = _parse_csv_matrix(text)
        doc = {"labels": labels, "matrix": matrix, "known": {}}
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if known_path is not None:
        doc = dict(doc)
        doc["known"] = load_known_file(known_path)
    if not doc.get("known"):
        raise InputError(
            "no known values: supply a 'known' map in the document or --known"
        )
    return parse_document(doc, reciprocity_tolerance)

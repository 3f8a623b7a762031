"""Text format for dense complex matrices.

A matrix file is a JSON document ``{"dim": N, "entries": [[re, im], ...]}``
with exactly ``N*N`` row-major entries.  ``NaN``/``Infinity`` literals and
non-numeric components are rejected, and errors name the offending entry.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError


def _reject_constant(name):
    raise MatrixFormatError(f"non-finite literal {name} is not allowed")


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def parse_matrix(text: str) -> np.ndarray:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dim" not in doc or "entries" not in doc:
        raise MatrixFormatError('expected an object with "dim" and "entries"')
    dim, entries = doc["dim"], doc["entries"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise MatrixFormatError(f'"dim" must be a positive integer, got {dim!r}')
    if not isinstance(entries, list):
        raise MatrixFormatError('"entries" must be an array')
    if len(entries) != dim * dim:
        raise MatrixFormatError(f"expected {dim * dim} entries for dim {dim}, got {len(entries)}")
    out = np.empty(dim * dim, dtype=np.complex128)
    for i, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 2 and all(map(_is_number, entry))):
            raise MatrixFormatError(f"entry {i} must be a [re, im] pair of numbers, got {entry!r}")
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise MatrixFormatError(f"entry {i} is not finite: {entry!r}")
        out[i] = complex(re, im)
    return out.reshape(dim, dim)


def load_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def format_matrix(a) -> str:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise MatrixFormatError("cannot write non-finite entries")
    entries = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return json.dumps({"dim": a.shape[0], "entries": entries})


def save_matrix(a, path) -> None:
    Path(path).write_text(format_matrix(a) + "\n")

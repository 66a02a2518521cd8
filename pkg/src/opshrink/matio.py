"""Matrix file formats shared between the library, CLI, and service.

Two on-disk layouts are supported, both storing rows as features:

* CSV — comma-separated, one row per feature, optional single header line.
* Raw binary — a 16-byte header (magic ``OPSK``, u32 rows, u32 cols,
  little-endian, 4 reserved zero bytes) followed by row-major float64.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError

__all__ = [
    "MAGIC",
    "HEADER_SIZE",
    "read_matrix_csv",
    "write_matrix_csv",
    "read_matrix_binary",
    "write_matrix_binary",
    "read_matrix",
    "write_matrix",
]

MAGIC = b"OPSK"
HEADER_SIZE = 16
_HEADER_STRUCT = struct.Struct("<4sII4x")


def _as_matrix(values) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim != 2:
        raise MatrixFormatError(f"expected a 2-d matrix, got shape {values.shape}")
    return values


def write_matrix_csv(values, path, header: bool = False) -> None:
    values = _as_matrix(values)
    lines = []
    if header:
        lines.append(",".join(f"col{j}" for j in range(values.shape[1])))
    for row in values:
        lines.append(",".join(format(x, ".17g") for x in row))
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_csv(path, header: bool = False) -> np.ndarray:
    try:
        values = np.loadtxt(path, delimiter=",", skiprows=1 if header else 0, ndmin=2)
    except ValueError as exc:
        raise MatrixFormatError(f"{path}: not a numeric CSV matrix: {exc}") from exc
    if values.size == 0:
        raise MatrixFormatError(f"{path}: empty matrix")
    return values


def write_matrix_binary(values, path) -> None:
    values = _as_matrix(values)
    rows, cols = values.shape
    with open(path, "wb") as fh:
        fh.write(_HEADER_STRUCT.pack(MAGIC, rows, cols))
        fh.write(np.ascontiguousarray(values, dtype="<f8").tobytes())


def read_matrix_binary(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if len(data) < HEADER_SIZE:
        raise MatrixFormatError(f"{path}: truncated header ({len(data)} bytes)")
    magic, rows, cols = _HEADER_STRUCT.unpack_from(data)
    if magic != MAGIC:
        raise MatrixFormatError(f"{path}: bad magic {magic!r}, expected {MAGIC!r}")
    expected = HEADER_SIZE + 8 * rows * cols
    if len(data) != expected:
        raise MatrixFormatError(
            f"{path}: payload is {len(data) - HEADER_SIZE} bytes, "
            f"expected {8 * rows * cols} for a {rows}x{cols} matrix"
        )
    flat = np.frombuffer(data, dtype="<f8", offset=HEADER_SIZE)
    return flat.reshape(rows, cols).astype(float)


def write_matrix(values, path, fmt: str = "csv", header: bool = False) -> None:
    """Write in the named format ('csv' or 'bin')."""
    if fmt == "csv":
        write_matrix_csv(values, path, header=header)
    elif fmt == "bin":
        write_matrix_binary(values, path)
    else:
        raise MatrixFormatError(f"unknown matrix format {fmt!r}")


def read_matrix(path, fmt: str = "csv", header: bool = False) -> np.ndarray:
    """Read in the named format ('csv' or 'bin')."""
    if fmt == "csv":
        return read_matrix_csv(path, header=header)
    if fmt == "bin":
        return read_matrix_binary(path)
    raise MatrixFormatError(f"unknown matrix format {fmt!r}")

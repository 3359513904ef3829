"""On-disk formats for the two views.

Matrix views (pearson, mi): plain CSV, C rows x C columns, 17
significant digits (lossless float64 round-trip), no header, plus a
sidecar JSON with the run parameters.

Tensor view (oinfo): little-endian binary. Header = 4 magic bytes
"HOI1", uint32 format version (=1), three uint32 dims (C, C, C);
payload = C^3 float64 values in row-major order (first index outermost,
last innermost). A C=116 tensor is ~12.5 MB; text would be impractical.
"""

import json
import struct

import numpy as np

from .errors import FormatError

MAGIC = b"HOI1"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIIII")


def write_tensor(path, tensor):
    """Serialize a C x C x C float64 tensor to the HOI1 binary format."""
    arr = np.ascontiguousarray(np.asarray(tensor, dtype=np.float64))
    if arr.ndim != 3 or len(set(arr.shape)) != 1:
        raise FormatError(f"tensor must be C x C x C, got shape {arr.shape}")
    C = arr.shape[0]
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, FORMAT_VERSION, C, C, C))
        fh.write(arr.astype("<f8", copy=False).tobytes(order="C"))


def read_tensor(path):
    """Read an HOI1 tensor file; validates magic, version, and dims."""
    with open(path, "rb") as fh:
        head = fh.read(_HEADER.size)
        if len(head) < _HEADER.size:
            raise FormatError(f"{path}: truncated header")
        magic, version, d0, d1, d2 = _HEADER.unpack(head)
        if magic != MAGIC:
            raise FormatError(f"{path}: bad magic {magic!r}, expected {MAGIC!r}")
        if version != FORMAT_VERSION:
            raise FormatError(f"{path}: unsupported format version {version}")
        if not (d0 == d1 == d2) or d0 == 0:
            raise FormatError(f"{path}: bad dims ({d0},{d1},{d2})")
        payload = fh.read()
    expected = d0 * d1 * d2 * 8
    if len(payload) != expected:
        raise FormatError(
            f"{path}: payload is {len(payload)} bytes, expected {expected}"
        )
    arr = np.frombuffer(payload, dtype="<f8").reshape(d0, d1, d2)
    return arr.astype(np.float64, copy=True)


def write_matrix_csv(path, matrix):
    """Write a square matrix as headerless CSV at full float precision."""
    arr = np.asarray(matrix, dtype=np.float64)
    if arr.ndim != 2:
        raise FormatError(f"matrix must be 2-D, got shape {arr.shape}")
    with open(path, "w", encoding="utf-8") as fh:
        for row in arr:
            fh.write(",".join(f"{v:.17g}" for v in row))
            fh.write("\n")


def read_matrix_csv(path):
    """Read a headerless numeric CSV matrix."""
    arr = np.loadtxt(path, delimiter=",", dtype=np.float64, ndmin=2)
    return arr


def write_sidecar(path, subject_id, view, sigma, alpha, tool_version):
    """Record the provenance of a view file next to it."""
    doc = {
        "subject_id": subject_id,
        "view": view,
        "sigma": sigma,
        "alpha": alpha,
        "tool_version": tool_version,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_sidecar(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)

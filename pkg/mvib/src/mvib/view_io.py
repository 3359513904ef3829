"""Readers for the serialized connectivity views this trainer consumes.

The upstream view engine writes a C x C mutual-information matrix as
headerless full-precision CSV and a C x C x C O-information tensor as
"HOI1" little-endian binary (4 magic bytes, uint32 version = 1, three
uint32 dims, then C^3 row-major float64). These readers are this
package's own implementation of those formats; anything with a wrong
magic or version is rejected.
"""

import json
import struct
from dataclasses import dataclass

import numpy as np

from .errors import FormatError

MAGIC = b"HOI1"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIIII")

_SYMMETRY_TOL = 1e-9


def read_view_matrix(path):
    """Read a headerless CSV matrix (view 1)."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh):
            if not line.strip():
                continue
            try:
                rows.append([float(cell) for cell in line.split(",")])
            except ValueError as exc:
                raise FormatError(f"{path}: bad cell in row {line_no}: {exc}") from exc
    if not rows:
        raise FormatError(f"{path}: empty matrix file")
    width = len(rows[0])
    if any(len(r) != width for r in rows) or len(rows) != width:
        raise FormatError(f"{path}: expected a square matrix")
    return np.asarray(rows, dtype=np.float64)


def read_view_tensor(path):
    """Read an HOI1 binary tensor (view 2); validate magic/version/dims."""
    with open(path, "rb") as fh:
        head = fh.read(_HEADER.size)
        if len(head) < _HEADER.size:
            raise FormatError(f"{path}: truncated header")
        magic, version, d0, d1, d2 = _HEADER.unpack(head)
        if magic != MAGIC:
            raise FormatError(f"{path}: bad magic {magic!r}")
        if version != FORMAT_VERSION:
            raise FormatError(f"{path}: unsupported version {version}")
        if not (d0 == d1 == d2) or d0 == 0:
            raise FormatError(f"{path}: bad dims ({d0},{d1},{d2})")
        payload = fh.read()
    if len(payload) != d0 * d1 * d2 * 8:
        raise FormatError(f"{path}: truncated payload")
    return np.frombuffer(payload, dtype="<f8").reshape(d0, d1, d2).astype(np.float64)


@dataclass(frozen=True)
class ViewPair:
    """One training example: both views of a recording plus its label.

    x1 is the C x C pairwise matrix, x2 the C x C x C interaction
    tensor (permutation-symmetric within 1e-9), label the integer class.
    """

    x1: np.ndarray
    x2: np.ndarray
    label: int

    def __post_init__(self):
        x1 = np.asarray(self.x1, dtype=np.float64)
        x2 = np.asarray(self.x2, dtype=np.float64)
        if x1.ndim != 2 or x1.shape[0] != x1.shape[1]:
            raise FormatError(f"x1 must be square, got shape {x1.shape}")
        if x2.shape != (x1.shape[0],) * 3:
            raise FormatError(
                f"x2 shape {x2.shape} inconsistent with x1 shape {x1.shape}"
            )
        for axes in ((0, 2, 1), (1, 0, 2)):
            if np.max(np.abs(x2 - x2.transpose(axes))) > _SYMMETRY_TOL:
                raise FormatError("x2 is not permutation-symmetric within 1e-9")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    @property
    def channels(self):
        return self.x1.shape[0]


def load_view_pairs(views_dir, manifest_path):
    """Load every manifest entry's mi/oinfo views from a directory.

    The manifest is the upstream engine's JSON format; labels come from
    it, the view files are ``<subject>.mi.csv`` and
    ``<subject>.oinfo.hoi1`` under ``views_dir``.
    """
    with open(manifest_path, encoding="utf-8") as fh:
        doc = json.load(fh)
    pairs = []
    for entry in doc["entries"]:
        subject = entry["subject_id"]
        x1 = read_view_matrix(f"{views_dir}/{subject}.mi.csv")
        x2 = read_view_tensor(f"{views_dir}/{subject}.oinfo.hoi1")
        pairs.append(ViewPair(x1=x1, x2=x2, label=int(entry["label"])))
    return pairs

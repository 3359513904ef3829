"""Loading and standardization of multichannel time-series recordings.

A recording is a C x T matrix: one row per channel, one column per
timepoint. CSV is the only ingestion format; orientation of the file is
declared by the caller and normalized to channels-by-timepoints here.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateChannel, EmptyInput, ParseError

ROWS_ARE_CHANNELS = "rows-are-channels"
ROWS_ARE_TIMEPOINTS = "rows-are-timepoints"
ORIENTATIONS = (ROWS_ARE_CHANNELS, ROWS_ARE_TIMEPOINTS)


@dataclass(frozen=True)
class Recording:
    """Immutable C x T multichannel recording.

    ``data`` is float64, finite everywhere, and marked read-only so a
    Recording can be shared across threads.
    """

    data: np.ndarray
    subject_id: str = ""

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.data, dtype=np.float64))
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ParseError(f"recording data must be 2-D C x T, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            bad = np.argwhere(~np.isfinite(arr))[0]
            raise ParseError(
                f"non-finite sample at channel {bad[0]}, timepoint {bad[1]}",
                row=int(bad[0]), col=int(bad[1]),
            )
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def channels(self):
        return self.data.shape[0]

    @property
    def timepoints(self):
        return self.data.shape[1]


def _parse_cell(text, row, col):
    try:
        value = float(text)
    except ValueError:
        raise ParseError(
            f"cell ({row},{col}) is not numeric: {text.strip()!r}", row=row, col=col
        ) from None
    if not math.isfinite(value):
        raise ParseError(
            f"cell ({row},{col}) is not finite: {text.strip()!r}", row=row, col=col
        )
    return value


def _looks_like_header(cells):
    # header row: no cell parses as a number
    for c in cells:
        try:
            float(c)
            return False
        except ValueError:
            pass
    return True


def load_csv(path, orientation=ROWS_ARE_CHANNELS, subject_id=None):
    """Read a CSV file into a Recording in canonical C x T layout.

    Parameters
    ----------
    path : str or Path
        UTF-8, comma-separated file of decimal floats. One optional
        header row is auto-detected (a first row where no cell parses
        as a number) and skipped.
    orientation : str
        ``"rows-are-channels"`` or ``"rows-are-timepoints"``. In the
        latter case the parsed table is transposed.
    subject_id : str, optional
        Defaults to the file stem.

    No standardization is applied; see :func:`standardize`.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    # utf-8-sig: a BOM would otherwise poison the first cell and silently
    # misclassify a numeric first row as a header
    with open(path, encoding="utf-8-sig") as fh:
        lines = fh.read().splitlines()
    rows = [line.split(",") for line in lines if line.strip() != ""]
    if not rows:
        raise EmptyInput(f"{path}: no rows")
    start = 1 if _looks_like_header(rows[0]) else 0
    if start == len(rows):
        raise EmptyInput(f"{path}: header only, no data rows")
    width = len(rows[start])
    table = np.empty((len(rows) - start, width), dtype=np.float64)
    for r in range(start, len(rows)):
        cells = rows[r]
        if len(cells) != width:
            raise ParseError(
                f"row {r} has {len(cells)} cells, expected {width}", row=r
            )
        for c, cell in enumerate(cells):
            table[r - start, c] = _parse_cell(cell, r, c)
    if orientation == ROWS_ARE_TIMEPOINTS:
        table = np.ascontiguousarray(table.T)
    if subject_id is None:
        name = str(path).rsplit("/", 1)[-1]
        subject_id = name.rsplit(".", 1)[0] if "." in name else name
    return Recording(data=table, subject_id=subject_id)


def standardize(rec):
    """Z-score every channel independently (population convention).

    Each channel is shifted to mean 0 and scaled to standard deviation 1,
    dividing by sqrt(mean of squared deviations) -- the population sd,
    not the n-1 sample sd. This fixes the scale against which the kernel
    width sigma is interpreted. Idempotent to within 1e-12 per element.

    Raises
    ------
    DegenerateChannel
        If a channel is constant. Channels are never silently dropped;
        dropping would desynchronize indices against downstream labels.
    """
    data = rec.data
    out = np.empty_like(data)
    for i in range(data.shape[0]):
        x = data[i]
        mean = x.mean()
        dev = x - mean
        sd = np.sqrt(np.mean(dev * dev))
        if sd == 0.0 or not np.isfinite(sd):
            raise DegenerateChannel(i)
        out[i] = dev / sd
    return Recording(data=out, subject_id=rec.subject_id)


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    subject_id: str
    label: int


@dataclass(frozen=True)
class DatasetManifest:
    """A labelled list of recording files.

    Subject ids must be unique and labels must form a contiguous set
    {0..K-1}.
    """

    entries: tuple = field(default_factory=tuple)
    schema_version: str = "1"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        ids = [e.subject_id for e in self.entries]
        if len(set(ids)) != len(ids):
            dupes = sorted({s for s in ids if ids.count(s) > 1})
            raise ParseError(f"duplicate subject_ids in manifest: {dupes}")
        if self.entries:
            labels = sorted({e.label for e in self.entries})
            if labels != list(range(len(labels))):
                raise ParseError(
                    f"labels must be contiguous 0..K-1, got {labels}"
                )


def load_manifest(path):
    """Parse a JSON manifest: {"schema_version": "1", "entries": [...]}."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError(f"{path}: manifest must be an object with an 'entries' list")
    entries = []
    for idx, item in enumerate(doc["entries"]):
        try:
            entries.append(
                ManifestEntry(
                    path=str(item["path"]),
                    subject_id=str(item["subject_id"]),
                    label=int(item["label"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: bad manifest entry {idx}: {exc}", row=idx) from exc
    return DatasetManifest(entries=tuple(entries), schema_version=str(doc.get("schema_version", "1")))

"""Synthetic planted-task cohort, computed through the view engine.

Generates recordings with class-dependent triple coupling -- class 0
plants a synergistic (xor-style) triple, class 1 a redundant
(shared-source) triple on the same channel slots -- writes them as
recording CSVs plus a manifest, invokes the ``hoiview`` command line to
produce the mi/oinfo view files, and loads them back as ViewPairs. The
trainer itself only ever touches the serialized views.
"""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np

from .view_io import load_view_pairs

PLANTED_TRIPLE = (1, 4, 6)


def _class0_recording(rng, C, T):
    # synergy-planted: two coin channels and their product, plus noise
    data = rng.standard_normal((C, T))
    b1 = rng.choice([-1.0, 1.0], T)
    b2 = rng.choice([-1.0, 1.0], T)
    i, j, k = PLANTED_TRIPLE
    noise = 0.15
    data[i] = b1 + noise * rng.standard_normal(T)
    data[j] = b2 + noise * rng.standard_normal(T)
    data[k] = b1 * b2 + noise * rng.standard_normal(T)
    return data


def _class1_recording(rng, C, T):
    # redundancy-planted: three noisy copies of one source
    data = rng.standard_normal((C, T))
    src = rng.standard_normal(T)
    for ch in PLANTED_TRIPLE:
        data[ch] = src + 0.4 * rng.standard_normal(T)
    return data


def make_planted_cohort(work_dir, n_per_class=24, C=8, T=200, seed=0):
    """Build the cohort and return its ViewPairs.

    Requires the view engine's CLI (invoked as ``python -m hoiview.cli``)
    to be installed; everything is seeded, so the same arguments
    reproduce the same view files bit-for-bit.
    """
    work = Path(work_dir)
    rec_dir = work / "recordings"
    views_dir = work / "views"
    rec_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for idx in range(2 * n_per_class):
        label = idx % 2
        rng = np.random.default_rng(seed * 100_003 + idx)
        data = _class1_recording(rng, C, T) if label else _class0_recording(rng, C, T)
        path = rec_dir / f"s{idx:03d}.csv"
        with open(path, "w", encoding="utf-8") as fh:
            for row in data:
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
        entries.append({"path": f"recordings/{path.name}",
                        "subject_id": f"s{idx:03d}", "label": label})
    manifest = work / "manifest.json"
    manifest.write_text(json.dumps({"schema_version": "1", "entries": entries}))
    proc = subprocess.run(
        [sys.executable, "-m", "hoiview.cli", "views",
         "--manifest", str(manifest), "--views", "mi,oinfo",
         "--out", str(views_dir)],
        capture_output=True, text=True,
    )
    if proc.returncode != 0:
        raise RuntimeError(
            f"view engine failed (exit {proc.returncode}):\n{proc.stderr}"
        )
    return load_view_pairs(views_dir, manifest)

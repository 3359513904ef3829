import json
import struct

import numpy as np
import pytest

from mvib import FormatError, ViewPair, load_view_pairs, read_view_matrix, read_view_tensor

HEADER = struct.Struct("<4sIIII")


def write_tensor_file(path, tensor, magic=b"HOI1", version=1, dims=None):
    arr = np.ascontiguousarray(tensor, dtype="<f8")
    C = arr.shape[0]
    d = dims if dims is not None else (C, C, C)
    with open(path, "wb") as fh:
        fh.write(HEADER.pack(magic, version, *d))
        fh.write(arr.tobytes(order="C"))


def symmetric_tensor(rng, C):
    t = np.zeros((C, C, C))
    from itertools import combinations, permutations
    for i, j, k in combinations(range(C), 3):
        v = rng.standard_normal()
        for order in permutations((i, j, k)):
            t[order] = v
    return t


def test_read_matrix(tmp_path):
    m = np.random.default_rng(0).standard_normal((4, 4))
    path = tmp_path / "m.csv"
    with open(path, "w") as fh:
        for row in m:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    back = read_view_matrix(path)
    assert np.array_equal(back, m)


def test_read_matrix_rejects_nonsquare(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("1,2,3\n4,5,6\n")
    with pytest.raises(FormatError):
        read_view_matrix(path)


def test_read_tensor_roundtrip(tmp_path):
    t = symmetric_tensor(np.random.default_rng(1), 5)
    path = tmp_path / "t.hoi1"
    write_tensor_file(path, t)
    back = read_view_tensor(path)
    assert back.tobytes() == t.tobytes()


def test_read_tensor_rejects_bad_magic(tmp_path):
    t = np.zeros((2, 2, 2))
    path = tmp_path / "t.hoi1"
    write_tensor_file(path, t, magic=b"NOPE")
    with pytest.raises(FormatError):
        read_view_tensor(path)


def test_read_tensor_rejects_bad_version(tmp_path):
    t = np.zeros((2, 2, 2))
    path = tmp_path / "t.hoi1"
    write_tensor_file(path, t, version=7)
    with pytest.raises(FormatError):
        read_view_tensor(path)


def test_read_tensor_rejects_bad_dims(tmp_path):
    t = np.zeros((2, 2, 2))
    path = tmp_path / "t.hoi1"
    write_tensor_file(path, t, dims=(2, 3, 2))
    with pytest.raises(FormatError):
        read_view_tensor(path)


def test_read_tensor_rejects_truncation(tmp_path):
    path = tmp_path / "t.hoi1"
    path.write_bytes(b"HOI1" + struct.pack("<IIII", 1, 3, 3, 3) + b"\x00" * 8)
    with pytest.raises(FormatError):
        read_view_tensor(path)


def test_view_pair_validates_symmetry():
    rng = np.random.default_rng(2)
    x1 = rng.standard_normal((4, 4))
    x1 = (x1 + x1.T) / 2
    good = symmetric_tensor(rng, 4)
    ViewPair(x1=x1, x2=good, label=0)
    bad = good.copy()
    bad[0, 1, 2] += 1e-6
    with pytest.raises(FormatError):
        ViewPair(x1=x1, x2=bad, label=0)


def test_view_pair_validates_shapes():
    rng = np.random.default_rng(3)
    x1 = rng.standard_normal((4, 4))
    with pytest.raises(FormatError):
        ViewPair(x1=x1, x2=np.zeros((5, 5, 5)), label=0)


def test_load_view_pairs(tmp_path):
    rng = np.random.default_rng(4)
    C = 3
    entries = []
    for s in range(2):
        m = rng.standard_normal((C, C))
        m = (m + m.T) / 2
        with open(tmp_path / f"s{s}.mi.csv", "w") as fh:
            for row in m:
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
        write_tensor_file(tmp_path / f"s{s}.oinfo.hoi1", symmetric_tensor(rng, C))
        entries.append({"path": f"s{s}.csv", "subject_id": f"s{s}", "label": s})
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps({"schema_version": "1", "entries": entries}))
    pairs = load_view_pairs(tmp_path, manifest)
    assert len(pairs) == 2
    assert pairs[0].channels == C
    assert [p.label for p in pairs] == [0, 1]

import struct

import numpy as np
import pytest

from hoiview import (
    FormatError,
    read_matrix_csv,
    read_sidecar,
    read_tensor,
    write_matrix_csv,
    write_sidecar,
    write_tensor,
)


def test_tensor_roundtrip_bit_exact(tmp_path):
    rng = np.random.default_rng(0)
    t = rng.standard_normal((7, 7, 7))
    path = tmp_path / "t.hoi1"
    write_tensor(path, t)
    back = read_tensor(path)
    assert back.tobytes() == t.tobytes()
    assert back.shape == (7, 7, 7)


def test_tensor_header_layout(tmp_path):
    t = np.zeros((3, 3, 3))
    path = tmp_path / "t.hoi1"
    write_tensor(path, t)
    raw = path.read_bytes()
    assert raw[:4] == b"HOI1"
    version, d0, d1, d2 = struct.unpack("<IIII", raw[4:20])
    assert (version, d0, d1, d2) == (1, 3, 3, 3)
    assert len(raw) == 20 + 27 * 8


def test_tensor_bad_magic(tmp_path):
    path = tmp_path / "bad.hoi1"
    path.write_bytes(b"NOPE" + struct.pack("<IIII", 1, 2, 2, 2) + b"\x00" * 64)
    with pytest.raises(FormatError):
        read_tensor(path)


def test_tensor_bad_version(tmp_path):
    path = tmp_path / "bad.hoi1"
    path.write_bytes(b"HOI1" + struct.pack("<IIII", 9, 2, 2, 2) + b"\x00" * 64)
    with pytest.raises(FormatError):
        read_tensor(path)


def test_tensor_mismatched_dims(tmp_path):
    path = tmp_path / "bad.hoi1"
    path.write_bytes(b"HOI1" + struct.pack("<IIII", 1, 2, 3, 2) + b"\x00" * 96)
    with pytest.raises(FormatError):
        read_tensor(path)


def test_tensor_truncated_payload(tmp_path):
    path = tmp_path / "bad.hoi1"
    path.write_bytes(b"HOI1" + struct.pack("<IIII", 1, 2, 2, 2) + b"\x00" * 8)
    with pytest.raises(FormatError):
        read_tensor(path)


def test_tensor_truncated_header(tmp_path):
    path = tmp_path / "bad.hoi1"
    path.write_bytes(b"HO")
    with pytest.raises(FormatError):
        read_tensor(path)


def test_tensor_rejects_non_cubic():
    with pytest.raises(FormatError):
        write_tensor("/tmp/never-written.hoi1", np.zeros((2, 3, 2)))


def test_matrix_csv_roundtrip_exact(tmp_path):
    rng = np.random.default_rng(1)
    m = rng.standard_normal((9, 9)) * 10.0 ** rng.integers(-8, 8, size=(9, 9))
    path = tmp_path / "m.csv"
    write_matrix_csv(path, m)
    back = read_matrix_csv(path)
    # 17 significant digits round-trips float64 exactly
    assert np.array_equal(back, m)


def test_matrix_csv_no_header(tmp_path):
    path = tmp_path / "m.csv"
    write_matrix_csv(path, np.eye(2))
    first = path.read_text().splitlines()[0]
    assert first == "1,0"


def test_sidecar_roundtrip(tmp_path):
    path = tmp_path / "m.json"
    write_sidecar(path, "subj7", "mi", 5.0, 1.01, "0.1.0")
    doc = read_sidecar(path)
    assert doc == {
        "subject_id": "subj7",
        "view": "mi",
        "sigma": 5.0,
        "alpha": 1.01,
        "tool_version": "0.1.0",
    }

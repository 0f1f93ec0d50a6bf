import json

import jsonschema
import numpy as np
import pytest

from quasiprob.numerics import Grid1D, PreconditionError, SampledFunction1D
from quasiprob.serial import (
    load_schema,
    read_sampled_csv,
    schema_path,
    write_json,
    write_marginal_csv,
    write_matrix_txt,
    write_sampled_csv,
    write_wigner_csv,
)
from quasiprob.states import gaussian_state


def test_schema_ships_with_package():
    p = schema_path()
    assert p.exists()
    schema = load_schema()
    assert "$defs" in schema


def test_sampled_csv_roundtrip(tmp_path):
    g = Grid1D(-5.0, 5.0, 64)
    psi = gaussian_state(0.5, -1.0, 1.0)
    f = SampledFunction1D(g, psi(g.points))
    path = tmp_path / "state.csv"
    write_sampled_csv(path, f)
    back = read_sampled_csv(path)
    # repr-based float formatting makes the roundtrip exact
    assert np.array_equal(back.values, f.values)
    assert back.grid.min == g.min
    assert back.grid.n == g.n


def test_sampled_csv_roundtrip_without_sidecar(tmp_path):
    g = Grid1D(-3.0, 3.0, 32)
    f = SampledFunction1D(g, np.exp(-g.points**2))
    path = tmp_path / "state.csv"
    write_sampled_csv(path, f)
    path.with_suffix(".csv.json").unlink()
    back = read_sampled_csv(path)
    assert np.max(np.abs(back.values - f.values)) == 0.0
    assert back.grid.spacing == pytest.approx(g.spacing, rel=1e-15)


def test_read_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(PreconditionError):
        read_sampled_csv(path)


def test_read_rejects_missing_file(tmp_path):
    with pytest.raises(PreconditionError):
        read_sampled_csv(tmp_path / "absent.csv")


def test_write_json_is_deterministic(tmp_path):
    doc = {"b": np.float64(2.0), "a": [np.int64(1), 2.5], "nested": {"x": np.array([1.0, 2.0])}}
    p1, p2 = tmp_path / "1.json", tmp_path / "2.json"
    write_json(p1, doc)
    write_json(p2, doc)
    assert p1.read_bytes() == p2.read_bytes()
    loaded = json.loads(p1.read_text())
    assert loaded["b"] == 2.0
    assert loaded["nested"]["x"] == [1.0, 2.0]


def test_wigner_csv_layout(tmp_path, ground, mid_grid):
    from quasiprob.wigner import wigner_transform

    f = wigner_transform(ground, mid_grid)
    path = tmp_path / "w.csv"
    write_wigner_csv(path, f)
    lines = path.read_text().splitlines()
    assert lines[0] == "x,p,f"
    assert len(lines) == 1 + 128 * 128


def test_matrix_txt_plotter_format(tmp_path):
    path = tmp_path / "m.txt"
    write_matrix_txt(path, np.array([[1.0, 2.0], [3.0, 4.0]]))
    rows = path.read_text().splitlines()
    assert len(rows) == 2
    assert [float(v) for v in rows[0].split()] == [1.0, 2.0]


def test_marginal_csv_header(tmp_path):
    path = tmp_path / "g.csv"
    write_marginal_csv(path, np.array([0.0, 1.0]), np.array([0.5, 0.25]))
    lines = path.read_text().splitlines()
    assert lines[0] == "z,g"


def test_schema_rejects_malformed_report():
    schema = load_schema()
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"kind": "spin-report"}, schema)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"kind": "nonsense"}, schema)

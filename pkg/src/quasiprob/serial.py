"""On-disk formats: CSV tables, whitespace matrix dumps, and JSON reports.

Every CSV starts with a header row.  Floats are written with repr, the
shortest digit string that round-trips, so identical inputs produce
byte-identical files.  JSON reports carry a "kind" tag and validate against
schemas/outputs.schema.json; write_json sorts keys and appends a newline for
the same reproducibility reason.
"""

from __future__ import annotations

import csv
import json
from importlib import resources
from pathlib import Path

import numpy as np

from .numerics import Grid1D, PreconditionError, SampledFunction1D

SCHEMA_NAME = "outputs.schema.json"


def schema_path() -> Path:
    """Filesystem path of the shipped JSON schema."""
    return Path(str(resources.files("quasiprob") / "schemas" / SCHEMA_NAME))


def load_schema() -> dict:
    with open(schema_path(), encoding="utf-8") as fh:
        return json.load(fh)


def _fmt(v) -> str:
    return repr(float(v))


def _plain(obj):
    """Recursively coerce numpy scalars/arrays so json.dump accepts them."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def write_json(path: str | Path, obj: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(_plain(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def write_sampled_csv(
    path: str | Path, sf: SampledFunction1D, kind: str = "wavefunction", sidecar: dict | None = None
) -> None:
    """Complex samples as (index, coordinate, re, im) plus a JSON sidecar.

    The sidecar (same name with .json appended) records the grid and kind so
    a reader does not have to re-infer the lattice from the coordinates.
    """
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = _writer(fh)
        w.writerow(["index", "coordinate", "re", "im"])
        vals = np.asarray(sf.values, dtype=complex)
        for i, (x, v) in enumerate(zip(sf.grid.points, vals)):
            w.writerow([i, _fmt(x), _fmt(v.real), _fmt(v.imag)])
    meta = {
        "kind": kind,
        "grid": {"min": sf.grid.min, "max": sf.grid.max, "n": sf.grid.n},
    }
    if sidecar:
        meta.update(sidecar)
    write_json(path.with_suffix(path.suffix + ".json"), meta)


def read_sampled_csv(path: str | Path) -> SampledFunction1D:
    """Read samples written by write_sampled_csv; the sidecar is optional
    (without it the grid is inferred from the coordinate column)."""
    path = Path(path)
    coords: list[float] = []
    vals: list[complex] = []
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            rows = csv.reader(fh)
            header = next(rows, None)
            if header is None or [h.strip() for h in header[:4]] != ["index", "coordinate", "re", "im"]:
                raise PreconditionError(f"{path}: expected header index,coordinate,re,im")
            for row in rows:
                if not row:
                    continue
                coords.append(float(row[1]))
                vals.append(complex(float(row[2]), float(row[3])))
    except OSError as e:
        raise PreconditionError(f"cannot read {path}: {e}") from e
    except ValueError as e:
        raise PreconditionError(f"{path}: malformed sample row: {e}") from e
    if len(coords) < 2:
        raise PreconditionError(f"{path}: need at least 2 samples, got {len(coords)}")

    sidecar = path.with_suffix(path.suffix + ".json")
    if sidecar.exists():
        with open(sidecar, encoding="utf-8") as fh:
            meta = json.load(fh)
        g = meta.get("grid", {})
        grid = Grid1D(float(g["min"]), float(g["max"]), int(g["n"]))
    else:
        dx = coords[1] - coords[0]
        grid = Grid1D(coords[0], coords[0] + dx * len(coords), len(coords))
    if grid.n != len(coords):
        raise PreconditionError(f"{path}: sidecar grid n={grid.n} but file has {len(coords)} rows")
    if abs(grid.points[0] - coords[0]) > 1e-9 or abs(grid.points[-1] - coords[-1]) > 1e-9:
        raise PreconditionError(f"{path}: coordinates disagree with the sidecar grid")
    return SampledFunction1D(grid, np.array(vals))


def write_wigner_csv(path: str | Path, f) -> None:
    """Long-form (x, p, f) rows, x-major; f is anything with .grid and real .values."""
    x = f.grid.gx.points
    p = f.grid.gp.points
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = _writer(fh)
        w.writerow(["x", "p", "f"])
        for i in range(f.grid.gx.n):
            for j in range(f.grid.gp.n):
                w.writerow([_fmt(x[i]), _fmt(p[j]), _fmt(f.values[i, j])])


def write_matrix_txt(path: str | Path, values: np.ndarray) -> None:
    """Whitespace-separated matrix, one row per line, for plotters."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in np.atleast_2d(values):
            fh.write(" ".join(_fmt(v) for v in row))
            fh.write("\n")


def write_marginal_csv(path: str | Path, z: np.ndarray, g: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = _writer(fh)
        w.writerow(["z", "g"])
        for zi, gi in zip(z, g):
            w.writerow([_fmt(zi), _fmt(gi)])


def write_complex_grid_csv(
    path: str | Path, names: tuple[str, str], X: np.ndarray, Y: np.ndarray, vals: np.ndarray
) -> None:
    """Complex samples over a 2-D lattice as (x, y, re, im) rows, x-major."""
    vals = np.asarray(vals, dtype=complex)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = _writer(fh)
        w.writerow([names[0], names[1], "re", "im"])
        for i in range(vals.shape[0]):
            for j in range(vals.shape[1]):
                w.writerow([_fmt(X[i, j]), _fmt(Y[i, j]), _fmt(vals[i, j].real), _fmt(vals[i, j].imag)])


def write_matrix_csv(path: str | Path, M: np.ndarray) -> None:
    """Complex matrix as (i, j, re, im) rows."""
    M = np.asarray(M, dtype=complex)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = _writer(fh)
        w.writerow(["i", "j", "re", "im"])
        for i in range(M.shape[0]):
            for j in range(M.shape[1]):
                w.writerow([i, j, _fmt(M[i, j].real), _fmt(M[i, j].imag)])

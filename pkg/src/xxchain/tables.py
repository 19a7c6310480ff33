"""CSV serialisation of sweep results.

Header: ``scenario,n,J1,...,Jn,temperature,pair_i,pair_j,concurrence``.
Floats are written as ``%.16e`` so a file read back reproduces the rows
bit for bit, independent of locale.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import TextIO

from .errors import InputError
from .experiments import SweepResult, SweepRow, named_scenario


def fmt_float(x: float) -> str:
    return format(float(x), ".16e")


def header(n: int) -> list[str]:
    return ["scenario", "n", *(f"J{k}" for k in range(1, n + 1)), "temperature",
            "pair_i", "pair_j", "concurrence"]


def write_sweep(result: SweepResult, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header(result.n))
    for row in result.rows:
        writer.writerow([
            result.scenario,
            result.n,
            *(fmt_float(j) for j in row.site_factors),
            fmt_float(row.temperature),
            row.pair[0],
            row.pair[1],
            fmt_float(row.concurrence),
        ])


def sweep_to_string(result: SweepResult) -> str:
    buf = io.StringIO()
    write_sweep(result, buf)
    return buf.getvalue()


def save_sweep(result: SweepResult, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        write_sweep(result, fh)


def read_sweep(source: TextIO, impurity_site: int | None = None) -> SweepResult:
    """Parse a sweep CSV back into a SweepResult.

    The scan value J of each row is recovered from the scenario's scan site,
    so the scenario name must be one :func:`named_scenario` understands
    (pass ``impurity_site`` for fig1/fig2 files made with a non-default site).
    """
    reader = csv.reader(source)
    try:
        head = next(reader)
    except StopIteration:
        raise InputError("csv: empty file") from None
    if len(head) < 6 or head[:2] != ["scenario", "n"]:
        raise InputError("csv: unrecognised header")
    n = len(head) - 6
    if head != header(n):
        raise InputError("csv: header does not match the sweep schema")

    rows = []
    name = None
    for line_no, rec in enumerate(reader, start=2):
        if len(rec) != len(head):
            raise InputError(f"csv: line {line_no} has {len(rec)} fields, expected {len(head)}")
        if name is None:
            name = rec[0]
        elif rec[0] != name:
            raise InputError(f"csv: line {line_no} mixes scenarios {name!r} and {rec[0]!r}")
        try:
            row_n = int(rec[1])
            factors = tuple(float(x) for x in rec[2:2 + n])
            T = float(rec[2 + n])
            pair = (int(rec[3 + n]), int(rec[4 + n]))
            value = float(rec[5 + n])
        except ValueError:
            raise InputError(f"csv: line {line_no} has a non-numeric field") from None
        if row_n != n:
            raise InputError(f"csv: line {line_no} has n={rec[1]}, header implies {n}")
        rows.append((factors, T, pair, value))
    if name is None:
        raise InputError("csv: no data rows")

    scan_site = named_scenario(name, n=n, impurity_site=impurity_site).scan_site
    sweep_rows = [SweepRow(f[scan_site - 1], T, pair, c, f) for f, T, pair, c in rows]
    j_grid = tuple(dict.fromkeys(r.J for r in sweep_rows))
    t_grid = tuple(dict.fromkeys(r.temperature for r in sweep_rows))
    pairs = tuple(dict.fromkeys(r.pair for r in sweep_rows))
    return SweepResult(name, n, j_grid, t_grid, pairs, sweep_rows)


def load_sweep(path: str | Path, impurity_site: int | None = None) -> SweepResult:
    with open(path, newline="", encoding="ascii") as fh:
        return read_sweep(fh, impurity_site)

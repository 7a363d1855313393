"""JSON state files and detection reports.

State file::

    {"dims": [3, 1, 3], "matrix": [[[re, im], ...], ...]}

Complex entries are explicit ``[re, im]`` pairs; rows are listed in order.
Floats are written with ``repr`` precision, so loading returns the exact
values that were saved.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .detection import DetectionReport, SearchStrategy, StrategyKind, Verdict
from .gamma import TransformPair
from .linalg import DensityMatrix


def state_to_dict(rho: DensityMatrix) -> dict:
    m = rho.matrix
    return {
        "dims": list(rho.dims),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def state_from_dict(d: dict) -> DensityMatrix:
    try:
        dims = [int(x) for x in d["dims"]]
        arr = np.asarray(d["matrix"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state file: {exc}") from None
    size = int(np.prod(dims)) if dims else 0
    if arr.shape != (size, size, 2):
        raise ValueError(f"state matrix has shape {arr.shape[:-1] if arr.ndim else ()}, expected ({size}, {size}) of [re, im] pairs")
    return DensityMatrix(tuple(dims), arr[..., 0] + 1j * arr[..., 1])


def save_state(rho: DensityMatrix, path) -> None:
    Path(path).write_text(json.dumps(state_to_dict(rho)))


def load_state(path) -> DensityMatrix:
    text = Path(path).read_text()
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from None
    return state_from_dict(d)


def report_to_dict(report: DetectionReport, wall_time: float | None = None, version: str | None = None) -> dict:
    from . import __version__

    return {
        "verdict": report.verdict.value,
        "min_eigenvalue": report.min_eigenvalue,
        "witness": None if report.witness is None else report.witness.to_dict(),
        "strategy": report.strategy.kind.value,
        "samples": report.strategy.samples,
        "seed": report.seed,
        "candidates_tested": report.candidates_tested,
        "version": version or __version__,
        "wall_time": wall_time,
    }


def report_from_dict(d: dict) -> DetectionReport:
    strategy = SearchStrategy(StrategyKind(d["strategy"]), d["samples"], d["seed"])
    witness = None if d.get("witness") is None else TransformPair.from_dict(d["witness"])
    return DetectionReport(
        verdict=Verdict(d["verdict"]),
        witness=witness,
        min_eigenvalue=float(d["min_eigenvalue"]),
        strategy=strategy,
        candidates_tested=int(d["candidates_tested"]),
        seed=d["seed"],
    )


def dumps_report(report: DetectionReport, **meta) -> str:
    return json.dumps(report_to_dict(report, **meta), indent=2)


def loads_report(text: str) -> DetectionReport:
    return report_from_dict(json.loads(text))

"""Central finite-difference verification of analytic gradients.

The checker perturbs every scalar parameter independently, so it is the
slow-but-trustworthy side of each gradient's dual-route test: the analytic
backward pass is never used to produce the numbers it is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

LossFn = Callable[[dict[str, np.ndarray]], float]


@dataclass
class GradCheckReport:
    passed: bool
    max_relative_error: float
    worst_parameter: str  # "path[flat_index]" of the worst entry, "" if no parameters
    tolerance: float
    failures: list[str] = field(default_factory=list)  # entries exceeding tolerance

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"gradcheck {status}: max relative error {self.max_relative_error:.3e} "
            f"at {self.worst_parameter or '<none>'} (tol {self.tolerance:.1e}, "
            f"{len(self.failures)} failing entries)"
        )


def numeric_gradient(
    loss_fn: LossFn, params: dict[str, np.ndarray], h: float = 1e-5
) -> dict[str, np.ndarray]:
    """Central-difference gradient of `loss_fn` at `params`."""
    grads: dict[str, np.ndarray] = {}
    for path, value in params.items():
        g = np.zeros_like(value)
        flat = value.ravel()
        g_flat = g.ravel()
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + h
            up = loss_fn(params)
            flat[i] = original - h
            down = loss_fn(params)
            flat[i] = original
            g_flat[i] = (up - down) / (2.0 * h)
        grads[path] = g
    return grads


def finite_diff_check(
    loss_fn: LossFn,
    params: dict[str, np.ndarray],
    analytic_grads: dict[str, np.ndarray],
    h: float = 1e-5,
    tol: float = 1e-4,
) -> GradCheckReport:
    """Compare `analytic_grads` against central differences of `loss_fn`.

    Relative error per entry is |a - n| / max(|a|, |n|, 1e-8); the report
    lists the worst entry and every entry above `tol`.
    """
    if h <= 0.0:
        raise ValueError("h must be positive")
    numeric = numeric_gradient(loss_fn, params, h=h)
    worst = ""
    worst_err = 0.0
    failures: list[str] = []
    for path in params:
        a = analytic_grads[path].ravel()
        n = numeric[path].ravel()
        denom = np.maximum(np.maximum(np.abs(a), np.abs(n)), 1e-8)
        rel = np.abs(a - n) / denom
        if rel.size == 0:
            continue
        idx = int(np.argmax(rel))
        if rel[idx] > worst_err:
            worst_err = float(rel[idx])
            worst = f"{path}[{idx}]"
        for bad in np.nonzero(rel > tol)[0]:
            failures.append(f"{path}[{int(bad)}]")
    return GradCheckReport(
        passed=not failures,
        max_relative_error=worst_err,
        worst_parameter=worst,
        tolerance=tol,
        failures=failures,
    )

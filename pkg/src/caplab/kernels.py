"""Interaction kernels: log(1/r) and Riesz r^(-p), their radial derivatives,
and the growth/comparability conditions they satisfy on dyadic scale windows."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Kernel:
    """Interaction law. kind='log' is log(1/r); kind='riesz' is r**(-p), 0 < p.

    The attribute `beta` is the constant multiplying the first-variation
    formula: 1 for the log kernel, p for the Riesz kernel.
    """

    kind: str
    p: float = 0.0
    beta: float = field(init=False)

    def __post_init__(self):
        if self.kind not in ("log", "riesz"):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "log":
            if self.p != 0.0:
                raise ValueError("log kernel takes p=0")
            object.__setattr__(self, "beta", 1.0)
        else:
            if not self.p > 0:
                raise ValueError("riesz kernel requires p > 0")
            object.__setattr__(self, "beta", float(self.p))

    def validate_for_dim(self, dim: int) -> None:
        """Riesz exponent must satisfy 0 < p < n for the ambient dimension."""
        if self.kind == "riesz" and not self.p < dim:
            raise ValueError(f"riesz p={self.p} requires p < ambient dim {dim}")

    @property
    def growth_constant(self) -> float:
        """Comparability constant C for the scale window a in [1/2, 2]."""
        if self.kind == "log":
            return 4.0
        p = self.p
        return 2.0 ** (p + 2) * (1.0 + p + p * p)


LOG = Kernel("log")


def riesz(p: float) -> Kernel:
    return Kernel("riesz", p=float(p))


def kernel_eval(k: Kernel, r, order: int = 0):
    """Evaluate the kernel or its radial derivatives at r > 0.

    order 0: phi(r); order 1: phi'(r); order 2: phi''(r).
    Accepts scalars or arrays; r <= 0 raises (phi(0) is infinite and is
    signalled, never returned as a float).
    """
    r = np.asarray(r, dtype=float)
    if not np.all(r > 0):
        raise ValueError("kernel_eval requires r > 0")
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order}")
    if k.kind == "log":
        if order == 0:
            out = -np.log(r)
        elif order == 1:
            out = -1.0 / r
        else:
            out = 1.0 / r**2
    else:
        p = k.p
        if order == 0:
            out = r**-p
        elif order == 1:
            out = -p * r ** (-p - 1)
        else:
            out = p * (p + 1) * r ** (-p - 2)
    return out if out.ndim else float(out)


def convexity_margin(k: Kernel, r):
    """phi''(r) - phi'(r)/r, strictly positive for both kernel families."""
    return kernel_eval(k, r, 2) - kernel_eval(k, r, 1) / np.asarray(r, float)


def verify_growth_conditions(k: Kernel, r_grid, a_grid) -> dict:
    """Check |phi^(m)(a r)| <= C r^(-m) (1 + |phi(r)|) for m = 0, 1, 2 on grids.

    a_grid must lie in [1/2, 2].  Returns the max observed left/right ratio per
    condition and pass = True iff every ratio <= 1 (tiny rounding slack).
    """
    r = np.asarray(r_grid, dtype=float)
    a = np.asarray(a_grid, dtype=float)
    if not np.all(r > 0):
        raise ValueError("r_grid must be positive")
    if not (np.all(a >= 0.5) and np.all(a <= 2.0)):
        raise ValueError("a_grid must lie in [1/2, 2]")
    C = k.growth_constant
    base = 1.0 + np.abs(kernel_eval(k, r, 0))
    ar = np.outer(a, r)
    ratios = []
    for order in range(3):
        lhs = np.abs(kernel_eval(k, ar, order))
        rhs = C * r ** (-float(order)) * base
        ratios.append(float(np.max(lhs / rhs)))
    slack = 1.0 + 1e-12
    return {
        "max_ratio_0": ratios[0],
        "max_ratio_1": ratios[1],
        "max_ratio_2": ratios[2],
        "constant_used": C,
        "pass": all(rr <= slack for rr in ratios),
    }

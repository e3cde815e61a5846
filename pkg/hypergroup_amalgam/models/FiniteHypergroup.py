#FiniteHypergroup.py
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

TABLE_TOLERANCE = 1e-10


class HypergroupTableError(ValueError):
    """Raised when a structure tensor violates a hypergroup invariant."""

    def __init__(self, invariant: str, indices: Tuple[int, ...], message: str):
        super().__init__(message)
        self.invariant = invariant
        self.indices = tuple(int(i) for i in indices)


@dataclass(frozen=True, eq=False)
class FiniteHypergroup:
    """
    Commutative hypergroup on {0, ..., n-1} with identity 0.

    structure[i, j, k] is the mass that eps_i * eps_j puts on k. The tensor is
    validated on construction and rows are renormalized to sum to exactly 1.
    """

    structure: np.ndarray
    involution: Tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        inv = tuple(int(i) for i in self.involution)
        _validate(c, inv)
        c = np.clip(c, 0.0, None)
        c = c / c.sum(axis=2, keepdims=True)
        c.setflags(write=False)
        object.__setattr__(self, "structure", c)
        object.__setattr__(self, "involution", inv)

    @property
    def size(self) -> int:
        return self.structure.shape[0]

    def __repr__(self) -> str:
        return f"FiniteHypergroup(label={self.label!r}, size={self.size})"


def _validate(c: np.ndarray, inv: Tuple[int, ...]) -> None:
    tol = TABLE_TOLERANCE
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] < 1:
        raise HypergroupTableError("shape", (), f"structure tensor must be n x n x n, got shape {c.shape}")
    n = c.shape[0]
    if not np.all(np.isfinite(c)):
        i, j, k = np.argwhere(~np.isfinite(c))[0]
        raise HypergroupTableError("finite", (i, j, k), f"entry ({i},{j},{k}) is not finite")

    if len(inv) != n or sorted(inv) != list(range(n)):
        raise HypergroupTableError("involution", (), f"involution {list(inv)} is not a permutation of 0..{n - 1}")
    for i in range(n):
        if inv[inv[i]] != i:
            raise HypergroupTableError("involution", (i,), f"involution is not self-inverse at {i}")
    if inv[0] != 0:
        raise HypergroupTableError("involution", (0,), "identity 0 must be its own involution")

    neg = np.argwhere(c < -tol)
    if neg.size:
        i, j, k = neg[0]
        raise HypergroupTableError("nonnegative", (i, j, k), f"entry ({i},{j},{k}) = {c[i, j, k]:g} is negative")

    sums = c.sum(axis=2)
    bad = np.argwhere(np.abs(sums - 1.0) > tol)
    if bad.size:
        i, j = bad[0]
        raise HypergroupTableError("row-sum", (i, j), f"row ({i},{j}) sums to {sums[i, j]:.12g}")

    eye = np.eye(n)
    bad = np.argwhere(np.abs(c[0] - eye) > tol)
    if bad.size:
        j, k = bad[0]
        raise HypergroupTableError("identity", (0, j, k), f"identity row (0,{j}) has mass {c[0, j, k]:g} at {k}")

    bad = np.argwhere(np.abs(c - c.transpose(1, 0, 2)) > tol)
    if bad.size:
        i, j, k = bad[0]
        raise HypergroupTableError("commutative", (i, j, k), f"c[{i}][{j}][{k}] != c[{j}][{i}][{k}]")

    for i in range(n):
        for j in range(n):
            at_zero = c[i, j, 0]
            if j == inv[i] and at_zero <= tol:
                raise HypergroupTableError("support", (i, j), f"({i},{j}) puts no mass on the identity")
            if j != inv[i] and at_zero > tol:
                raise HypergroupTableError("support", (i, j), f"({i},{j}) puts mass {at_zero:g} on the identity but {j} != {inv[i]}")


class HypergroupFile(BaseModel):
    """On-disk form of a finite hypergroup: row-major tensor of length size**3."""

    size: int = Field(ge=1)
    involution: List[int]
    tensor: List[float]
    label: Optional[str] = None

    @model_validator(mode="after")
    def _check_lengths(self):
        if len(self.involution) != self.size:
            raise ValueError(f"involution has {len(self.involution)} entries, expected {self.size}")
        if len(self.tensor) != self.size ** 3:
            raise ValueError(f"tensor has {len(self.tensor)} entries, expected {self.size ** 3}")
        return self

    def to_hypergroup(self) -> FiniteHypergroup:
        c = np.asarray(self.tensor, dtype=float).reshape(self.size, self.size, self.size)
        return FiniteHypergroup(structure=c, involution=tuple(self.involution), label=self.label or "")

    @classmethod
    def from_hypergroup(cls, H: FiniteHypergroup) -> HypergroupFile:
        return cls(
            size=H.size,
            involution=list(H.involution),
            tensor=[float(v) for v in H.structure.ravel()],
            label=H.label or None,
        )

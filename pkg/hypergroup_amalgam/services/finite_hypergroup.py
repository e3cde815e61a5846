# finite_hypergroup.py
"""
Finite commutative hypergroups given by structure tables: Haar weights,
translation, and the two window norms that coincide with sup|f| and ||f||_p.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from hypergroup_amalgam.models.FiniteHypergroup import (
    FiniteHypergroup,
    HypergroupFile,
    HypergroupTableError,
)
from hypergroup_amalgam.services.file_manager import FileManager

PathLike = Union[str, Path]


class WindowNorms(NamedTuple):
    cont_discrete_window: float
    sup_norm: float
    cont_compact_window: float
    lp_norm: float


def haar_weights(H: FiniteHypergroup) -> List[float]:
    """omega_k = 1 / c[k^-][k][0]."""
    weights = []
    for k in range(H.size):
        mass = H.structure[H.involution[k], k, 0]
        if mass <= 0.0:
            raise HypergroupTableError("degenerate", (H.involution[k], k), f"c[{H.involution[k]}][{k}][0] is zero")
        weights.append(1.0 / float(mass))
    return weights


def discrete_translate(H: FiniteHypergroup, y_index: int, f: Sequence[float]) -> np.ndarray:
    """(tau_y f)(k) = sum_m c[y][k][m] f(m)."""
    if not 0 <= y_index < H.size:
        raise IndexError(f"y_index {y_index} out of range for a hypergroup of size {H.size}")
    vec = np.asarray(f, dtype=float)
    if vec.shape != (H.size,):
        raise ValueError(f"f must have length {H.size}, got shape {vec.shape}")
    return H.structure[y_index] @ vec


def norm_equalities(H: FiniteHypergroup, f: Sequence[float], p: float) -> WindowNorms:
    if not 1.0 <= p < np.inf:
        raise ValueError(f"p must be in [1, inf), got {p}")
    vec = np.abs(np.asarray(f, dtype=float))
    if vec.shape != (H.size,):
        raise ValueError(f"f must have length {H.size}, got shape {vec.shape}")
    weights = np.asarray(haar_weights(H))
    weighted = vec ** p * weights

    # tau_n 1_{0}(k) = c[n][k][0]; tau_n 1_K(k) = sum_m c[n][k][m] = 1
    discrete_window = H.structure[:, :, 0] @ weighted
    compact_window = H.structure.sum(axis=2) @ weighted
    return WindowNorms(
        cont_discrete_window=float(discrete_window.max() ** (1.0 / p)),
        sup_norm=float(vec.max()),
        cont_compact_window=float(compact_window.max() ** (1.0 / p)),
        lp_norm=float(weighted.sum() ** (1.0 / p)),
    )


def cyclic_group(n: int) -> FiniteHypergroup:
    """Z_n as a hypergroup: eps_i * eps_j = eps_{i+j mod n}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            c[i, j, (i + j) % n] = 1.0
    return FiniteHypergroup(structure=c, involution=tuple((-i) % n for i in range(n)), label=f"Z{n}")


def two_point(a: float) -> FiniteHypergroup:
    """{0, 1} with eps_1 * eps_1 = a eps_0 + (1 - a) eps_1, 0 < a <= 1."""
    if not 0.0 < a <= 1.0:
        raise ValueError(f"a must be in (0, 1], got {a}")
    c = np.zeros((2, 2, 2))
    c[0, 0, 0] = 1.0
    c[0, 1, 1] = 1.0
    c[1, 0, 1] = 1.0
    c[1, 1, 0] = a
    c[1, 1, 1] = 1.0 - a
    return FiniteHypergroup(structure=c, involution=(0, 1), label=f"two-point(a={a:g})")


def builtin_catalog() -> List[FiniteHypergroup]:
    return [cyclic_group(2), cyclic_group(3), two_point(0.25), two_point(0.5), two_point(0.75)]


def load_hypergroup(path: PathLike) -> FiniteHypergroup:
    """Parse and validate a hypergroup file (JSON with size, involution, tensor)."""
    with open(path, "r", encoding="utf-8") as f:
        payload = json.load(f)
    doc = HypergroupFile.model_validate(payload)
    H = doc.to_hypergroup()
    if not H.label:
        H = FiniteHypergroup(structure=H.structure, involution=H.involution, label=Path(path).stem)
    return H


def dump_hypergroup(H: FiniteHypergroup, path: PathLike) -> Path:
    target = Path(path)
    doc = HypergroupFile.from_hypergroup(H)
    return FileManager(target.parent).write_text(target.name, doc.model_dump_json(indent=2) + "\n")

# src/quasigroup/latin_square.py
"""Finite quasigroups given by Cayley tables.

Elements are zero-based indices. A table is stored as a read-only numpy array
together with its two division tables, so every operation is a lookup.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]

IDENTITY_SIGMA: Permutation = (1, 2, 3)


class LatinSquare:
    """An order-n quasigroup ``(Q, ·)`` with ``Q = {0, …, n-1}``."""

    __slots__ = ("_table", "_left", "_right", "name")

    def __init__(self, table: Iterable[Iterable[int]], name: Optional[str] = None):
        arr = np.array([list(row) for row in table], dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"Cayley table must be a non-empty square, got {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"Table entries must lie in 0..{n - 1}")
        expected = np.arange(n)
        if not (np.sort(arr, axis=1) == expected).all():
            raise ValueError("Every row of a Latin square must be a permutation")
        if not (np.sort(arr, axis=0) == expected[:, None]).all():
            raise ValueError("Every column of a Latin square must be a permutation")
        arr.setflags(write=False)
        self._table = arr
        # _left[x, z] = x \ z and _right[z, y] = z / y
        self._left = np.argsort(arr, axis=1)
        self._right = np.argsort(arr, axis=0)
        self.name = name

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        return self._table

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self._table)

    def _check(self, *elements: int) -> None:
        for e in elements:
            if not 0 <= e < self.order:
                raise IndexError(f"Element {e} out of range for order {self.order}")

    def multiply(self, x: int, y: int) -> int:
        self._check(x, y)
        return int(self._table[x, y])

    def left_divide(self, x: int, z: int) -> int:
        """The unique ``y`` with ``x·y = z``."""
        self._check(x, z)
        return int(self._left[x, z])

    def right_divide(self, z: int, y: int) -> int:
        """The unique ``x`` with ``x·y = z``."""
        self._check(z, y)
        return int(self._right[z, y])

    def renamed(self, name: Optional[str]) -> "LatinSquare":
        return LatinSquare(self._table, name=name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self._table.shape == other._table.shape and bool(
            (self._table == other._table).all()
        )

    def __hash__(self) -> int:
        return hash(self._table.tobytes())

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LatinSquare{label} order={self.order}>"


@dataclass(frozen=True)
class Isostrophism:
    """``(σ, γ1, γ2, γ3)``: permute operand roles by σ, then relabel each role."""

    sigma: Permutation
    gamma1: Permutation
    gamma2: Permutation
    gamma3: Permutation

    def __post_init__(self) -> None:
        if sorted(self.sigma) != [1, 2, 3]:
            raise ValueError(f"sigma must permute (1, 2, 3), got {self.sigma}")
        n = len(self.gamma1)
        for gamma in (self.gamma1, self.gamma2, self.gamma3):
            if sorted(gamma) != list(range(n)):
                raise ValueError(f"{gamma} is not a permutation of 0..{n - 1}")


def compose_sigma(tau: Permutation, sigma: Permutation) -> Permutation:
    """``τσ``: apply σ first."""
    return tuple(tau[sigma[i] - 1] for i in range(3))


def invert_sigma(sigma: Permutation) -> Permutation:
    inverse = [0, 0, 0]
    for i, s in enumerate(sigma):
        inverse[s - 1] = i + 1
    return tuple(inverse)


def multiply(q: LatinSquare, x: int, y: int) -> int:
    return q.multiply(x, y)


def left_divide(q: LatinSquare, x: int, z: int) -> int:
    return q.left_divide(x, z)


def right_divide(q: LatinSquare, z: int, y: int) -> int:
    return q.right_divide(z, y)


def conjugate(q: LatinSquare, sigma: Sequence[int]) -> LatinSquare:
    """σ-conjugate: the role at position ``i`` of a triple moves to ``σ(i)``.

    With this action ``conjugate(conjugate(q, σ), τ) == conjugate(q, τσ)`` and
    ``σ = (2, 1, 3)`` transposes the table.
    """
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3]:
        raise ValueError(f"sigma must permute (1, 2, 3), got {sigma}")
    if sigma == IDENTITY_SIGMA:
        return q
    n = q.order
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    roles = [xs.ravel(), ys.ravel(), q.table.ravel()]
    moved = [None, None, None]
    for i in range(3):
        moved[sigma[i] - 1] = roles[i]
    table = np.empty((n, n), dtype=np.int64)
    table[moved[0], moved[1]] = moved[2]
    return LatinSquare(table)


def isotope(
    q: LatinSquare, gamma1: Sequence[int], gamma2: Sequence[int], gamma3: Sequence[int]
) -> LatinSquare:
    """The operation ``∘`` with ``γ1(x) ∘ γ2(y) = γ3(x·y)``."""
    g1, g2, g3 = (np.asarray(g, dtype=np.int64) for g in (gamma1, gamma2, gamma3))
    table = np.empty_like(q.table)
    table[np.ix_(g1, g2)] = g3[q.table]
    return LatinSquare(table)


def apply_isostrophism(q: LatinSquare, iso: Isostrophism) -> LatinSquare:
    return isotope(conjugate(q, iso.sigma), iso.gamma1, iso.gamma2, iso.gamma3)


def principal_isotope(q: LatinSquare, u: int, v: int) -> LatinSquare:
    """The loop ``x∘y = (x/u)·(v\\y)``; its unit is ``v·u``."""
    q._check(u, v)
    x_over_u = q._right[:, u]
    v_under_y = q._left[v, :]
    return LatinSquare(q.table[np.ix_(x_over_u, v_under_y)])


def identity_element(q: LatinSquare) -> Optional[int]:
    n = q.order
    ident = np.arange(n)
    for e in range(n):
        if (q.table[e, :] == ident).all() and (q.table[:, e] == ident).all():
            return e
    return None


def is_loop(q: LatinSquare) -> bool:
    return identity_element(q) is not None


def is_associative(q: LatinSquare) -> bool:
    t = q.table
    return bool((t[t, :] == t[:, t]).all())


def is_group(q: LatinSquare) -> bool:
    return is_associative(q)

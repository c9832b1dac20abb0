"""Unitary irreducible representations of S(m) in Young's orthogonal form.

The basis is indexed by standard tableaux in last-letter order (tableaux
compared by the row of m, then of m-1, ...).  In this order the image of an
adjacent transposition (k, k+1) is the classical real orthogonal matrix
built from inverse axial distances, and the restriction to S(m-1) is block
diagonal.  Images of arbitrary permutations are obtained by factoring into
adjacent transpositions.
"""

from __future__ import annotations

from functools import cache
from math import factorial, sqrt

import numpy as np

from .partitions import Partition
from .permutations import Permutation


def standard_tableaux(shape: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard tableaux of the given shape, in last-letter order."""
    if shape.weight == 0:
        return [()]

    rows = shape.height
    out: list[tuple[tuple[int, ...], ...]] = []

    def fill(tab: list[list[int]], value: int):
        if value > shape.weight:
            out.append(tuple(tuple(row) for row in tab))
            return
        for i in range(rows):
            j = len(tab[i])
            if j < shape[i] and (i == 0 or len(tab[i - 1]) > j):
                tab[i].append(value)
                fill(tab, value + 1)
                tab[i].pop()

    fill([[] for _ in range(rows)], 1)
    out.sort(key=lambda tab: tuple(_row_of(tab, v) for v in range(shape.weight, 0, -1)))
    return out


def _row_of(tab, value: int) -> int:
    for i, row in enumerate(tab):
        if value in row:
            return i
    raise ValueError(f"{value} not in tableau")


def _position(tab, value: int) -> tuple[int, int]:
    for i, row in enumerate(tab):
        for j, v in enumerate(row):
            if v == value:
                return i, j
    raise ValueError(f"{value} not in tableau")


class SymmetricGroupIrrep:
    """The irrep of S(m) labelled by a partition of m, with cached images."""

    def __init__(self, label: Partition):
        self.label = label
        self.m = label.weight
        self.tableaux = standard_tableaux(label)
        self.dim = len(self.tableaux)
        assert self.dim == label.hook_dimension()
        self._adjacent = [self._adjacent_image(k) for k in range(1, self.m)]
        self._images: dict[Permutation, np.ndarray] = {}
        self._characters: dict[tuple[int, ...], float] = {}

    def _adjacent_image(self, k: int) -> np.ndarray:
        """Image of (k, k+1): diagonal 1/axial distance, off-diagonal sqrt."""
        index = {tab: t for t, tab in enumerate(self.tableaux)}
        mat = np.zeros((self.dim, self.dim))
        for t, tab in enumerate(self.tableaux):
            i1, j1 = _position(tab, k)
            i2, j2 = _position(tab, k + 1)
            dist = (j2 - i2) - (j1 - i1)
            mat[t, t] = 1.0 / dist
            swapped = tuple(
                tuple(k + 1 if v == k else k if v == k + 1 else v for v in row)
                for row in tab
            )
            if swapped in index:
                mat[index[swapped], t] = sqrt(1.0 - 1.0 / dist**2)
        return mat

    def image(self, p: Permutation) -> np.ndarray:
        """Matrix of p; multiplicative for composition (right factor first)."""
        if p.degree != self.m:
            raise ValueError(f"degree {p.degree} != weight {self.m}")
        cached = self._images.get(p)
        if cached is None:
            cached = self._compute_image(p)
            self._images[p] = cached
        return cached

    def _compute_image(self, p: Permutation) -> np.ndarray:
        # Sorting the one-line form by adjacent position swaps w1..wl means
        # p = s_{wl} ∘ ... ∘ s_{w1}, so the images multiply left to right.
        mat = np.eye(self.dim)
        for k_swap in _bubble_word(list(p.images)):
            mat = self._adjacent[k_swap - 1] @ mat
        return mat

    def character(self, p: Permutation) -> float:
        key = p.cycle_type()
        if key not in self._characters:
            self._characters[key] = float(np.trace(self.image(p)))
        return self._characters[key]


def _bubble_word(line: list[int]) -> list[int]:
    """Adjacent swaps (as positions k, in applied order) sorting ``line``."""
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(line) - 1):
            if line[k] > line[k + 1]:
                line[k], line[k + 1] = line[k + 1], line[k]
                word.append(k + 1)
                changed = True
    return word


@cache
def irrep(label: Partition) -> SymmetricGroupIrrep:
    return SymmetricGroupIrrep(label)


def image(table: SymmetricGroupIrrep, p: Permutation) -> np.ndarray:
    return table.image(p)


def character(alpha: Partition, p: Permutation) -> float:
    if alpha.weight != p.degree:
        raise ValueError(f"weight {alpha.weight} != degree {p.degree}")
    return irrep(alpha).character(p)


def transposition_character_frobenius(alpha: Partition) -> float:
    """Character value on the class of transpositions, from the Frobenius
    coordinates: (dim / m(m-1)) * sum_i (b_i(b_i+1) - a_i(a_i+1))."""
    m = alpha.weight
    if m < 2:
        raise ValueError("needs weight >= 2")
    legs, arms = alpha.characteristic
    total = sum(b * (b + 1) - a * (a + 1) for a, b in zip(legs, arms))
    return alpha.hook_dimension() * total / (m * (m - 1))


def class_sum_scalar(alpha: Partition, class_rep: Permutation, class_size: int) -> float:
    """The scalar by which a conjugacy-class sum acts in the irrep alpha."""
    return class_size * character(alpha, class_rep) / alpha.hook_dimension()


def multiplicity_in_V(alpha: Partition, d: int) -> int:
    """Multiplicity of alpha inside the permutation action on (C^d)^{tensor m}.

    Computed as the exact character inner product (1/m!) sum over S(m) of
    chi(sigma^{-1}) d^{cycles(sigma)}; zero exactly when d < height(alpha).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    m = alpha.weight
    if m == 0:
        return 1
    rep = irrep(alpha)
    total = 0.0
    for p in Permutation.all(m):
        total += rep.character(p.inverse()) * d ** p.cycle_count()
    value = total / factorial(m)
    rounded = round(value)
    if abs(value - rounded) > 1e-6:
        raise ArithmeticError(f"non-integer multiplicity {value}")
    return int(rounded)

"""Permutations of {1..m} in one-line notation.

Composition is function composition: ``(p * q)(x) = p(q(x))``, the right
factor acting first.  Every permutation carries the classification
``(a, b)`` with ``p(a) = m`` and ``b = p(m)``; ``a = m`` exactly when ``p``
fixes the last point, in which case ``p`` lies in the natural copy of
S(m-1) inside S(m).
"""

from __future__ import annotations

import itertools
from functools import total_ordering
from typing import Iterable, Iterator, Sequence


@total_ordering
class Permutation:
    """Immutable permutation of {1..m}; ``images[i-1]`` is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of {{1..{len(images)}}}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __hash__(self) -> int:
        return hash(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return self.cycle_string()

    # -- construction -------------------------------------------------

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(range(1, m + 1))

    @staticmethod
    def transposition(m: int, x: int, y: int) -> "Permutation":
        """The transposition (x y) in S(m); (x x) denotes the identity."""
        if not (1 <= x <= m and 1 <= y <= m):
            raise ValueError(f"points {x},{y} outside {{1..{m}}}")
        images = list(range(1, m + 1))
        images[x - 1], images[y - 1] = y, x
        return Permutation(images)

    @staticmethod
    def from_cycles(m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, m + 1))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        return Permutation(images)

    @staticmethod
    def parse(text: str, m: int | None = None) -> "Permutation":
        """Parse one-line form ``"2,3,1"`` or cycle form ``"(1 3 2)"``."""
        text = text.strip()
        if text.startswith("("):
            cycles = []
            for chunk in text.replace(")(", ")|(").split("|"):
                body = chunk.strip().lstrip("(").rstrip(")").replace(",", " ")
                if body and " " not in body:
                    # compact form like (132): one digit per point
                    points = [int(ch) for ch in body]
                else:
                    points = [int(tok) for tok in body.split()]
                if points:
                    cycles.append(points)
            top = max((p for c in cycles for p in c), default=1)
            return Permutation.from_cycles(m if m is not None else top, cycles)
        images = [int(tok) for tok in text.replace(",", " ").split()]
        return Permutation(images)

    @staticmethod
    def all(m: int) -> Iterator["Permutation"]:
        """All m! permutations of degree m, in lexicographic image order."""
        for images in itertools.permutations(range(1, m + 1)):
            yield Permutation(images)

    # -- group operations ----------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition self∘other (other acts first)."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(images)

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    # -- structure -----------------------------------------------------

    def cycles(self, keep_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = []
            point = start
            while not seen[point - 1]:
                seen[point - 1] = True
                cycle.append(point)
                point = self(point)
            if len(cycle) > 1 or keep_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return len(self.cycles(keep_fixed=True))

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(keep_fixed=True)), reverse=True))

    def sign(self) -> int:
        return -1 if (self.degree - self.cycle_count()) % 2 else 1

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        sep = "" if self.degree < 10 else " "
        return "".join("(" + sep.join(str(p) for p in c) + ")" for c in cycles)

    def one_line_string(self) -> str:
        return ",".join(str(j) for j in self.images)

    # -- classification and embeddings ----------------------------------

    def classify(self) -> tuple[int, int]:
        """The labels (a, b) with self(a) = m and b = self(m)."""
        m = self.degree
        return self.inverse()(m), self(m)

    def fixes_last(self) -> bool:
        return self(self.degree) == self.degree

    def embed(self, m: int) -> "Permutation":
        """The same permutation viewed in S(m), fixing the new points."""
        if m < self.degree:
            raise ValueError("cannot embed into a smaller degree")
        return Permutation(self.images + tuple(range(self.degree + 1, m + 1)))

    def restrict(self, m: int) -> "Permutation":
        """Restriction to S(m); requires all points above m to be fixed."""
        if any(self(i) != i for i in range(m + 1, self.degree + 1)):
            raise ValueError(f"{self!r} moves a point above {m}")
        return Permutation(self.images[:m])


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p∘q with the right factor applied first."""
    return p * q

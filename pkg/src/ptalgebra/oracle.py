"""Dense/sparse ground truth on (C^d)^{tensor n}.

Everything the abstract layer claims is re-checkable here: permutation
operators move tensor factors, the partial transpose swaps the last index
pair, and spans are measured by Gram-matrix rank.  Operators are stored as
scipy CSR matrices; permutation-generated operators have d^n nonzeros, so
the default size cap d^n <= 4096 stays cheap.

Basis vectors are flattened big-endian: factor 1 is the most significant
digit, so the partial transpose acts on the least significant one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .algebra import AlgebraElement
from .partitions import Partition
from .permutations import Permutation
from .yor import SymmetricGroupIrrep

DEFAULT_CAP = 4096
CAP_ENV_VAR = "PTALGEBRA_CAP"


def size_cap() -> int:
    return int(os.environ.get(CAP_ENV_VAR, DEFAULT_CAP))


@dataclass(frozen=True)
class TensorOp:
    """An operator on (C^d)^{tensor n}."""

    n: int
    d: int
    matrix: sp.csr_matrix = field(compare=False)

    @property
    def dim(self) -> int:
        return self.d**self.n

    def __add__(self, other: "TensorOp") -> "TensorOp":
        self._check(other)
        return TensorOp(self.n, self.d, (self.matrix + other.matrix).tocsr())

    def __radd__(self, other) -> "TensorOp":
        if other == 0:  # lets sum() work
            return self
        return NotImplemented

    def __sub__(self, other: "TensorOp") -> "TensorOp":
        self._check(other)
        return TensorOp(self.n, self.d, (self.matrix - other.matrix).tocsr())

    def __rmul__(self, scalar) -> "TensorOp":
        return TensorOp(self.n, self.d, (scalar * self.matrix).tocsr())

    def __matmul__(self, other: "TensorOp") -> "TensorOp":
        self._check(other)
        return TensorOp(self.n, self.d, (self.matrix @ other.matrix).tocsr())

    def adjoint(self) -> "TensorOp":
        return TensorOp(self.n, self.d, self.matrix.conj().T.tocsr())

    def trace(self) -> float:
        return float(self.matrix.trace())

    def max_abs(self) -> float:
        m = self.matrix.tocoo()
        return float(np.abs(m.data).max()) if m.nnz else 0.0

    def distance(self, other: "TensorOp") -> float:
        return (self - other).max_abs()

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def _check(self, other: "TensorOp"):
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError("operator shape mismatch")


def perm_operator(sigma: Permutation, d: int, n: int | None = None,
                  cap: int | None = None) -> TensorOp:
    """The operator sending e_{i_1}..e_{i_n} to e_{i_{s^{-1}(1)}}..e_{i_{s^{-1}(n)}}."""
    if d < 1:
        raise ValueError("d must be >= 1")
    n = sigma.degree if n is None else n
    if sigma.degree != n:
        raise ValueError("degree mismatch")
    dim = d**n
    if dim > (size_cap() if cap is None else cap):
        raise ValueError(f"d^n = {dim} exceeds the size cap; raise cap to override")
    cols = np.arange(dim)
    digits = np.empty((n, dim), dtype=np.int64)
    rest = cols
    for k in range(n - 1, -1, -1):
        digits[k] = rest % d
        rest = rest // d
    inv = sigma.inverse()
    rows = np.zeros(dim, dtype=np.int64)
    for k in range(1, n + 1):
        rows = rows * d + digits[inv(k) - 1]
    matrix = sp.csr_matrix((np.ones(dim), (rows, cols)), shape=(dim, dim))
    return TensorOp(n, d, matrix)


def partial_transpose_last(op: TensorOp) -> TensorOp:
    """Transpose the last tensor index pair; an involution."""
    coo = op.matrix.tocoo()
    d = op.d
    r_low, c_low = coo.row % d, coo.col % d
    rows = coo.row - r_low + c_low
    cols = coo.col - c_low + r_low
    matrix = sp.csr_matrix((coo.data, (rows, cols)), shape=coo.shape)
    return TensorOp(op.n, op.d, matrix)


def transposed_perm_operator(sigma: Permutation, d: int, n: int | None = None,
                             cap: int | None = None) -> TensorOp:
    return partial_transpose_last(perm_operator(sigma, d, n, cap))


def element_operator(elem: AlgebraElement, cap: int | None = None) -> TensorOp:
    """Oracle image of a formal combination of transposed generators."""
    ctx = elem.ctx
    if ctx.symbolic:
        raise ValueError("symbolic elements have no tensor image; fix d first")
    total = zero_operator(ctx.n, ctx.d, cap)
    for perm, coeff in elem.terms.items():
        total = total + coeff * transposed_perm_operator(perm, ctx.d, ctx.n, cap)
    return total


def zero_operator(n: int, d: int, cap: int | None = None) -> TensorOp:
    dim = d**n
    if dim > (size_cap() if cap is None else cap):
        raise ValueError(f"d^n = {dim} exceeds the size cap; raise cap to override")
    return TensorOp(n, d, sp.csr_matrix((dim, dim)))


def identity_operator(n: int, d: int, cap: int | None = None) -> TensorOp:
    dim = d**n
    if dim > (size_cap() if cap is None else cap):
        raise ValueError(f"d^n = {dim} exceeds the size cap; raise cap to override")
    return TensorOp(n, d, sp.identity(dim, format="csr"))


RANK_RTOL = 1e-8


def gram_matrix(ops: list[TensorOp]) -> np.ndarray:
    """Hilbert-Schmidt Gram matrix <A,B> = tr(A^dagger B)."""
    if not ops:
        return np.zeros((0, 0))
    dim = ops[0].dim
    stacked = sp.vstack([op.matrix.conj().reshape(1, dim * dim) for op in ops]).tocsr()
    return np.asarray((stacked @ stacked.conj().T).todense()).real


def span_dimension(ops: list[TensorOp]) -> int:
    """Numerical rank of the Gram matrix, relative threshold 1e-8."""
    gram = gram_matrix(ops)
    if gram.size == 0:
        return 0
    eigs = np.linalg.eigvalsh(gram)
    top = eigs.max(initial=0.0)
    if top <= 0:
        return 0
    return int((eigs > RANK_RTOL * top).sum())


def matrix_operators_E(
    rep_images: dict[Permutation, TensorOp | np.ndarray],
    alpha: Partition,
) -> dict[tuple[int, int], TensorOp | np.ndarray]:
    """Group-averaged matrix operators of an irrep inside a representation D.

    E_{ij} = (w/|G|) sum_g phi_{ji}(g^{-1}) D(g).  The zero family is the
    legitimate outcome when alpha does not occur in D.
    """
    group = list(rep_images)
    phi = SymmetricGroupIrrep(alpha)
    w = phi.dim
    scale = w / len(group)
    out = {}
    for i in range(1, w + 1):
        for j in range(1, w + 1):
            acc = None
            for g in group:
                coeff = scale * phi.image(g.inverse())[j - 1, i - 1]
                term = coeff * rep_images[g]
                acc = term if acc is None else acc + term
            out[(i, j)] = acc
    return out

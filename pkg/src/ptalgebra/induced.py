"""Induced representations of S(n-1) and the spectral data of Q(alpha).

For alpha a partition of n-2, the block matrix

    Q(alpha) = ( d^{delta_ab} phi_{ij}[(a n-1)(ab)(b n-1)] ),  a,b = 1..n-1

encodes the structure constants of the group-averaged generators of the
main ideal.  Its eigenvalues are d plus the content of the box added to
alpha (one eigenvalue per way of adding a box, with the dimension of the
grown label as multiplicity), and the reducing matrix Z is d-independent:
its columns are read off rank-one projectors of the induced representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, sqrt

import numpy as np

from .dpoly import DPoly
from .partitions import Partition, add_box
from .permutations import Permutation
from .yor import SymmetricGroupIrrep, irrep, transposition_character_frobenius

PROJECTOR_DIAG_TOL = 1e-9
NULL_EIGENVALUE_TOL = 1e-7


class InducedRep:
    """Matrix form of the representation of S(n-1) induced from S(n-2).

    Coset representatives are the transpositions (a, n-1), a = 1..n-1,
    with (n-1, n-1) meaning the identity.  Blocks are (a, b) with inner
    indices from the inducing irrep.
    """

    def __init__(self, alpha: Partition, n: int):
        if alpha.weight != n - 2:
            raise ValueError(f"alpha must have weight {n - 2}")
        self.alpha = alpha
        self.n = n
        self.phi = irrep(alpha)
        self.w = self.phi.dim
        self.block_dim = (n - 1) * self.w
        self.decomposition = add_box(alpha)
        self._images: dict[Permutation, np.ndarray] = {}

    def coset_rep(self, a: int) -> Permutation:
        return Permutation.transposition(self.n - 1, a, self.n - 1)

    def matrix(self, sigma: Permutation) -> np.ndarray:
        """Block matrix with (a,b) block delta_{a,sigma(b)} phi[(sigma(b) n-1) sigma (b n-1)]."""
        if sigma.degree != self.n - 1:
            raise ValueError(f"need a permutation of degree {self.n - 1}")
        cached = self._images.get(sigma)
        if cached is not None:
            return cached
        m = self.n - 1
        out = np.zeros((self.block_dim, self.block_dim))
        for b in range(1, m + 1):
            a = sigma(b)
            tau = self.coset_rep(a) * sigma * self.coset_rep(b)
            block = self.phi.image(tau.restrict(self.n - 2))
            out[(a - 1) * self.w:a * self.w, (b - 1) * self.w:b * self.w] = block
        self._images[sigma] = out
        return out


def _q_entry_perm(alpha_rep: SymmetricGroupIrrep, n: int, a: int, b: int):
    """The S(n-2) element (a n-1)(ab)(b n-1) appearing in Q's (a,b) block."""
    m = n - 1
    tau = (
        Permutation.transposition(m, a, m)
        * Permutation.transposition(m, a, b)
        * Permutation.transposition(m, b, m)
    )
    return alpha_rep.image(tau.restrict(n - 2))


def q_matrix(alpha: Partition, d: float, n: int) -> np.ndarray:
    """Q(alpha) at numeric d."""
    phi = irrep(alpha)
    w = phi.dim
    out = np.zeros(((n - 1) * w, (n - 1) * w))
    for a in range(1, n):
        for b in range(1, n):
            block = _q_entry_perm(phi, n, a, b)
            if a == b:
                block = d * block
            out[(a - 1) * w:a * w, (b - 1) * w:b * w] = block
    return out


def q_matrix_poly(alpha: Partition, n: int) -> np.ndarray:
    """Q(alpha) as a matrix of polynomials in d (object dtype)."""
    phi = irrep(alpha)
    w = phi.dim
    size = (n - 1) * w
    out = np.empty((size, size), dtype=object)
    for a in range(1, n):
        for b in range(1, n):
            block = _q_entry_perm(phi, n, a, b)
            for i in range(w):
                for j in range(w):
                    value = block[i, j]
                    value = int(round(value)) if abs(value - round(value)) < 1e-12 else value
                    poly = DPoly((0, value)) if a == b else DPoly((value,))
                    out[(a - 1) * w + i, (b - 1) * w + j] = poly
    return out


def q_via_induced(alpha: Partition, d: float, n: int) -> np.ndarray:
    """Independent construction: transposition class sum of the induced rep
    plus (d - F) times the identity, F = ((n-2)(n-3)/2) chi(12)/dim."""
    rep = InducedRep(alpha, n)
    m = n - 1
    total = np.zeros((rep.block_dim, rep.block_dim))
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            total += rep.matrix(Permutation.transposition(m, a, b))
    pair_count = (n - 2) * (n - 3) // 2
    f_shift = 0.0
    if pair_count:
        f_shift = pair_count * transposition_character_frobenius(alpha) / rep.w
    return total + (d - f_shift) * np.eye(rep.block_dim)


def eigenvalues_closed_form(
    alpha: Partition, d: float, n: int
) -> list[tuple[Partition, float, int]]:
    """(nu, lambda, multiplicity) per added box: lambda = d + column - row."""
    if alpha.weight != n - 2:
        raise ValueError(f"alpha must have weight {n - 2}")
    out = []
    for nu, row, _extends in add_box(alpha):
        col = nu.parts[row - 1]
        out.append((nu, d + col - row, nu.hook_dimension()))
    return out


def zero_condition(alpha: Partition, d: int) -> Partition | None:
    """The unique grown label with vanishing eigenvalue, if d = row - col."""
    hits = [nu for nu, row, _e in add_box(alpha) if d == row - nu.parts[row - 1]]
    if len(hits) > 1:
        raise AssertionError("more than one vanishing eigenvalue is impossible")
    return hits[0] if hits else None


def z_matrix(alpha: Partition, n: int) -> tuple[np.ndarray, list[tuple[Partition, int]]]:
    """Orthogonal matrix reducing the induced representation.

    Columns are grouped by grown label nu (in added-box order) and indexed
    (nu, j) with j = 1..dim(nu).  Within a block the columns are read from
    the group-averaged operators E_{j1} of nu inside the induced rep, all
    from one reference column of the rank-one projector E_{11} (the first
    diagonal entry above 1e-9, scanned row-major); this keeps the block
    phases coherent so the reduction reproduces the irrep matrices exactly,
    not just up to signs.  The block sign is fixed by making the first
    nonzero entry of the leading column positive.

    Returns (Z, column labels).  Z does not depend on d.
    """
    rep = InducedRep(alpha, n)
    m = n - 1
    group = list(Permutation.all(m))
    images = {g: rep.matrix(g) for g in group}
    columns: list[np.ndarray] = []
    labels: list[tuple[Partition, int]] = []
    for nu, _row, _extends in rep.decomposition:
        psi = irrep(nu)
        scale = psi.dim / factorial(m)
        projector = sum(
            scale * psi.image(g.inverse())[0, 0] * images[g] for g in group
        )
        ref = _reference_index(projector)
        norm = sqrt(projector[ref, ref])
        block = []
        for j in range(1, psi.dim + 1):
            averaged = sum(
                scale * psi.image(g.inverse())[0, j - 1] * images[g] for g in group
            )
            block.append(averaged[:, ref] / norm)
        lead = block[0]
        first = np.flatnonzero(np.abs(lead) > PROJECTOR_DIAG_TOL)[0]
        if lead[first] < 0:
            block = [-col for col in block]
        columns.extend(block)
        labels.extend((nu, j) for j in range(1, psi.dim + 1))
    return np.column_stack(columns), labels


def _reference_index(projector: np.ndarray) -> int:
    for t in range(projector.shape[0]):
        if projector[t, t] > PROJECTOR_DIAG_TOL:
            return t
    raise ArithmeticError(
        "rank-one projector with no positive diagonal entry; "
        "the projector construction is broken"
    )


@dataclass
class SpectralQ:
    """Q(alpha) with its closed-form spectrum and reducing matrix."""

    alpha: Partition
    d: int
    n: int
    matrix: np.ndarray
    eigenpairs: list[tuple[Partition, float, int]]
    z: np.ndarray
    z_labels: list[tuple[Partition, int]]
    theta: Partition | None
    rank: int

    @property
    def block_dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalue_of(self, nu: Partition) -> float:
        for label, lam, _mult in self.eigenpairs:
            if label == nu:
                return lam
        raise KeyError(f"{nu} does not label an eigenvalue")

    def to_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "d": self.d,
            "n": self.n,
            "matrix": [float(x) for x in self.matrix.ravel()],
            "eigenpairs": [
                {"nu": str(nu), "lambda": float(lam), "multiplicity": mult}
                for nu, lam, mult in self.eigenpairs
            ],
            "rank": self.rank,
            "theta": None if self.theta is None else str(self.theta),
        }

    @staticmethod
    def from_dict(data: dict) -> "SpectralQ":
        alpha = Partition.parse(data["alpha"])
        n, d = data["n"], data["d"]
        size = (n - 1) * alpha.hook_dimension()
        z, labels = z_matrix(alpha, n)
        return SpectralQ(
            alpha=alpha,
            d=d,
            n=n,
            matrix=np.array(data["matrix"]).reshape(size, size),
            eigenpairs=[
                (Partition.parse(e["nu"]), e["lambda"], e["multiplicity"])
                for e in data["eigenpairs"]
            ],
            z=z,
            z_labels=labels,
            theta=None if data["theta"] is None else Partition.parse(data["theta"]),
            rank=data["rank"],
        )


def spectral_q(alpha: Partition, d: int, n: int) -> SpectralQ:
    """Assemble Q, its closed-form spectrum, Z and the rank in one record.

    The numerical spectrum is cross-checked against the closed form: any
    eigenvalue flagged zero numerically must be predicted by the exact
    zero condition, and disagreement is a hard error.
    """
    matrix = q_matrix(alpha, d, n)
    pairs = eigenvalues_closed_form(alpha, d, n)
    theta = zero_condition(alpha, d)
    z, labels = z_matrix(alpha, n)
    rank = sum(mult for nu, lam, mult in pairs if theta is None or nu != theta)

    numeric = np.linalg.eigvalsh(matrix)
    numeric_nulls = int((np.abs(numeric) < NULL_EIGENVALUE_TOL * (1 + abs(d))).sum())
    predicted_nulls = 0 if theta is None else theta.hook_dimension()
    if numeric_nulls != predicted_nulls:
        raise ArithmeticError(
            f"null-space mismatch for alpha={alpha}, d={d}: numeric rank "
            f"deficiency {numeric_nulls}, closed form predicts {predicted_nulls}"
        )
    return SpectralQ(alpha, d, n, matrix, pairs, z, labels, theta, rank)

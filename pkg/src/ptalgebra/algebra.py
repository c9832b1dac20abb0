"""The abstract algebra spanned by the transposed generators.

An element is a formal combination sum_sigma c_sigma * W(sigma) over
sigma in S(n), where W(sigma) denotes the permutation operator on n
tensor factors transposed on the last one.  The product of two
generators is again d^0 or d^1 times a generator:

  * both factors fix n: plain composition, untransposed;
  * exactly one factor fixes n: plain composition, transposed;
  * neither fixes n, with labels (a,b) = classify(sigma) and
    (p,q) = classify(rho):
        W(sigma) W(rho) = d^{delta_aq} W((sigma(q) n) sigma rho (p n)),
    where a transposition (x n) with x = n denotes the identity.

The formal span is kept purely syntactic: for d < n the generators are
linearly dependent as operators, and only the tensor oracle may decide
linear (in)dependence.  Coefficients are floats at fixed d or DPoly in
symbolic mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .dpoly import DPoly
from .partitions import Partition
from .permutations import Permutation
from .yor import irrep

PRUNE_TOL = 1e-12


@dataclass(frozen=True)
class AlgebraContext:
    """n tensor factors of local dimension d; d = None means symbolic."""

    n: int
    d: int | None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.d is not None and self.d < 1:
            raise ValueError("fixed d must be >= 1")

    @property
    def symbolic(self) -> bool:
        return self.d is None

    def one(self):
        return DPoly((1,)) if self.symbolic else 1.0

    def d_power(self, power: int):
        if self.symbolic:
            return DPoly.d(1) ** power
        return float(self.d**power)


def mul_generators(sigma: Permutation, rho: Permutation) -> tuple[int, Permutation]:
    """Product of two generators as (power of d, resulting permutation)."""
    if sigma.degree != rho.degree:
        raise ValueError(f"degree mismatch: {sigma.degree} != {rho.degree}")
    n = sigma.degree
    if sigma.fixes_last() or rho.fixes_last():
        return 0, sigma * rho
    a, _b = sigma.classify()
    p, q = rho.classify()
    left = Permutation.transposition(n, sigma(q), n)
    right = Permutation.transposition(n, p, n)
    return (1 if a == q else 0), left * sigma * rho * right


class AlgebraElement:
    """Formal combination of generators with nonzero coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict[Permutation, object]):
        pruned = {}
        for perm, coeff in terms.items():
            if perm.degree != ctx.n:
                raise ValueError(f"term degree {perm.degree} != n = {ctx.n}")
            if ctx.symbolic:
                if not isinstance(coeff, DPoly):
                    coeff = DPoly(coeff)
                if coeff:
                    pruned[perm] = coeff
            else:
                coeff = float(coeff)
                if abs(coeff) > PRUNE_TOL:
                    pruned[perm] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", pruned)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def generator(ctx: AlgebraContext, sigma: Permutation) -> "AlgebraElement":
        return AlgebraElement(ctx, {sigma: ctx.one()})

    @staticmethod
    def one(ctx: AlgebraContext) -> "AlgebraElement":
        return AlgebraElement.generator(ctx, Permutation.identity(ctx.n))

    @staticmethod
    def zero(ctx: AlgebraContext) -> "AlgebraElement":
        return AlgebraElement(ctx, {})

    # -- linear structure -------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} != {other.ctx}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for perm, coeff in other.terms.items():
            terms[perm] = terms.get(perm, 0) + coeff
        return AlgebraElement(self.ctx, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {p: -c for p, c in self.terms.items()})

    def scale(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.ctx, {p: scalar * c for p, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, float, DPoly)):
            return self.scale(scalar)
        return NotImplemented

    # -- ring structure ----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, float, DPoly)):
            return self.scale(other)
        self._check(other)
        terms: dict[Permutation, object] = {}
        for sigma, c1 in self.terms.items():
            for rho, c2 in other.terms.items():
                power, result = mul_generators(sigma, rho)
                coeff = c1 * c2 * self.ctx.d_power(power)
                terms[result] = terms.get(result, 0) + coeff
        return AlgebraElement(self.ctx, terms)

    def adjoint(self) -> "AlgebraElement":
        """Term-wise inverse of the permutations; coefficients are real."""
        return AlgebraElement(self.ctx, {p.inverse(): c for p, c in self.terms.items()})

    # -- comparisons and rendering -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement) or self.ctx != other.ctx:
            return False
        if self.ctx.symbolic:
            return self.terms == other.terms
        keys = set(self.terms) | set(other.terms)
        return all(
            abs(self.terms.get(k, 0.0) - other.terms.get(k, 0.0)) <= PRUNE_TOL
            for k in keys
        )

    def __hash__(self):
        raise TypeError("AlgebraElement is not hashable")

    def __repr__(self) -> str:
        return f"AlgebraElement({self.ctx}, {self.format()})"

    def __str__(self) -> str:
        return self.format()

    def format(self, notation: str = "cycle") -> str:
        """Text form ``c1*perm1 + c2*perm2`` with ^t marking transposed terms."""
        if not self.terms:
            return "0"
        chunks = []
        for perm in sorted(self.terms):
            coeff = self.terms[perm]
            name = perm.one_line_string() if notation == "one-line" else perm.cycle_string()
            if not perm.fixes_last():
                name += "^t"
            if isinstance(coeff, DPoly):
                coeff_str = str(coeff)
                if coeff_str.lstrip("-").count("d") + coeff_str.count("+") > 1:
                    coeff_str = f"({coeff_str})"
            else:
                coeff_str = f"{coeff:g}"
            chunks.append(f"{coeff_str}*{name}")
        return " + ".join(chunks)


def u_element(
    alpha: Partition, a: int, b: int, i: int, j: int, ctx: AlgebraContext
) -> AlgebraElement:
    """Group-averaged generator of the main ideal.

    u_{ij}^{ab}(alpha) = (w/(n-2)!) W(an) sum_{sigma in S(n-2)}
    phi_{ji}(sigma^{-1}) V[(a n-1) sigma (b n-1)], a formal combination of
    (n-2)! generators.  Nonzero as a tensor operator exactly when alpha
    fits in d rows.
    """
    n = ctx.n
    if n < 3:
        raise ValueError("u elements need n >= 3; n = 2 has its own treatment")
    if alpha.weight != n - 2:
        raise ValueError(f"alpha must have weight {n - 2}")
    if not (1 <= a <= n - 1 and 1 <= b <= n - 1):
        raise ValueError("labels a, b must lie in 1..n-1")
    phi = irrep(alpha)
    if not (1 <= i <= phi.dim and 1 <= j <= phi.dim):
        raise ValueError("matrix indices outside the representation")
    an = Permutation.transposition(n, a, n)
    left = Permutation.transposition(n, a, n - 1)
    right = Permutation.transposition(n, b, n - 1)
    scale = phi.dim / factorial(n - 2)
    terms: dict[Permutation, object] = {}
    for sigma in Permutation.all(n - 2):
        coeff = scale * phi.image(sigma.inverse())[j - 1, i - 1]
        key = an * left * sigma.embed(n) * right
        terms[key] = terms.get(key, 0.0) + coeff
    return AlgebraElement(ctx, terms)

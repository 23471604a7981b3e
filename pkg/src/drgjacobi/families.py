"""Intersection-sequence generators for unbounded-diameter families.

A FamilyGenerator supplies (a_k, b_k) for every k >= 1, here as an
eventually periodic list of pairs. Corner truncations of the associated
infinite tridiagonal matrix give finite Jacobi operators; the (0, 0)
entry of the k-th matrix power, an exact integer, is the k-th moment of
the spectral measure seen from any vertex. For the n-regular tree that
measure is the Kesten-McKay distribution, which gives an independent
quadrature route to the same moments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .intersection import SequenceError
from .jacobi import JacobiOperator


class QuadratureNotConvergedError(Exception):
    def __init__(self, estimate: float, error: float, tol: float):
        self.estimate = estimate
        self.error = error
        super().__init__(
            f"quadrature error estimate {error:.3e} exceeds tolerance {tol:.3e}"
        )


@dataclass(frozen=True)
class FamilyGenerator:
    """Eventually periodic pair sequence: the last `period` pairs repeat."""

    prefix: tuple[tuple[int, int], ...]
    period: int
    description: str

    def __post_init__(self):
        if not self.prefix:
            raise SequenceError("family needs at least one (a, b) pair")
        if not 1 <= self.period <= len(self.prefix):
            raise SequenceError("period must be between 1 and the number of pairs")
        for a, b in self.prefix:
            if not (isinstance(a, int) and isinstance(b, int) and a >= 1 and b >= 1):
                raise SequenceError("pairs must be positive integers")
        if self.prefix[0][0] != 1:
            raise SequenceError("a_1 must equal 1")

    @property
    def degree(self) -> int:
        return self.prefix[0][1]

    def pair(self, k: int) -> tuple[int, int]:
        """(a_k, b_k) for k >= 1."""
        if k < 1:
            raise SequenceError("pair index starts at 1")
        size = len(self.prefix)
        if k <= size:
            return self.prefix[k - 1]
        return self.prefix[size - self.period + (k - size - 1) % self.period]

    def alpha(self, k: int) -> int:
        """Diagonal value degree - (a_k + b_{k+1}); alpha_0 = 0 by convention."""
        if k == 0:
            return 0
        a_k = self.pair(k)[0]
        b_next = self.pair(k + 1)[1]
        value = self.degree - (a_k + b_next)
        if value < 0:
            raise SequenceError(f"alpha_{k} = {value} is negative")
        return value


def tree_sequence(n: int) -> FamilyGenerator:
    """The n-regular tree: pairs (1, n), (1, n-1), (1, n-1), ..."""
    if n < 2:
        raise SequenceError("tree degree must be at least 2")
    return FamilyGenerator(((1, n), (1, n - 1)), 1, f"tree:{n}")


def family_from_name(text: str) -> FamilyGenerator:
    """Parse "tree:n" or "custom:a1,b1;a2,b2;...;period=p".

    For custom families the last p pairs repeat forever; period defaults
    to 1 when omitted.
    """
    base, sep, rest = text.partition(":")
    if not sep:
        raise SequenceError(f"bad family {text!r}; expected tree:n or custom:...")
    if base == "tree":
        try:
            n = int(rest)
        except ValueError:
            raise SequenceError(f"bad tree degree in {text!r}") from None
        return tree_sequence(n)
    if base != "custom":
        raise SequenceError(f"unknown family kind {base!r}")
    period = 1
    pairs = []
    for chunk in rest.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("period="):
            try:
                period = int(chunk[len("period="):])
            except ValueError:
                raise SequenceError(f"bad period in {text!r}") from None
            continue
        fields = chunk.split(",")
        if len(fields) != 2:
            raise SequenceError(f"bad pair {chunk!r} in {text!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise SequenceError(f"bad pair {chunk!r} in {text!r}") from None
    return FamilyGenerator(tuple(pairs), period, text)


def truncated_jacobi(gen: FamilyGenerator, m: int) -> JacobiOperator:
    """Top-left m x m corner of the family's infinite tridiagonal matrix.

    There is no boundary parameter: the last diagonal entry is simply
    alpha_{m-1}.
    """
    if m < 1:
        raise SequenceError("truncation size must be at least 1")
    diag = tuple(float(gen.alpha(k)) for k in range(m))
    off = tuple(math.sqrt(a * b) for a, b in (gen.pair(k) for k in range(1, m)))
    return JacobiOperator(diag, off, tau=None)


def moment(gen: FamilyGenerator, k: int, truncation: int | None = None) -> int:
    """Exact k-th moment (J^k)_{0,0} of the family's Jacobi matrix.

    Computed on the size ceil(k/2)+1 corner, which a longer truncation
    cannot change (pass a larger ``truncation`` to double-check), by an
    integer walk recursion: stepping up from level j-1 to j carries
    weight a_j b_j, stepping down weight 1, staying at level j weight
    alpha_j (a diagonal rescaling of the matrix that leaves the (0, 0)
    corner of every power unchanged).
    """
    if k < 0:
        raise SequenceError("moment order must be nonnegative")
    size = (k + 1) // 2 + 1
    if truncation is not None:
        if truncation < size:
            raise SequenceError(f"truncation must be at least {size} for order {k}")
        size = truncation
    alphas = [gen.alpha(j) for j in range(size)]
    down = [0] + [a * b for a, b in (gen.pair(j) for j in range(1, size))]
    vec = [1] + [0] * (size - 1)
    for _ in range(k):
        nxt = [0] * size
        for j in range(size):
            value = alphas[j] * vec[j]
            if j + 1 < size:
                value += vec[j + 1]
            if j > 0:
                value += down[j] * vec[j - 1]
            nxt[j] = value
        vec = nxt
    return vec[0]


def kesten_mckay_density(n: int, x: float) -> float:
    """Spectral density of the n-regular tree at x.

    Supported on |x| <= 2 sqrt(n-1); evaluated in the cancellation-free
    form n sqrt(s) / (2 pi ((n-2)^2 + s)) with s = 4(n-1) - x^2. For
    n = 2 the endpoint singularity is genuine and returns inf.
    """
    if n < 2:
        raise SequenceError("tree degree must be at least 2")
    s = 4.0 * (n - 1) - float(x) * float(x)
    if s < 0.0:
        return 0.0
    shift = (n - 2) ** 2
    if s == 0.0:
        return 0.0 if shift else math.inf
    return n * math.sqrt(s) / (2.0 * math.pi * (shift + s))


def density_moment(n: int, k: int, quad_tol: float = 1e-8) -> float:
    """k-th moment of the Kesten-McKay density by adaptive quadrature.

    The substitution x = 2 sqrt(n-1) sin(theta) removes the square-root
    edge singularity before integrating. Raises
    QuadratureNotConvergedError if the error estimate exceeds quad_tol.
    """
    if quad_tol <= 0:
        raise ValueError("quad_tol must be positive")
    if n < 2:
        raise SequenceError("tree degree must be at least 2")
    radius = 2.0 * math.sqrt(n - 1.0)
    shift = float((n - 2) ** 2)

    def integrand(theta: float) -> float:
        x = radius * math.sin(theta)
        c = radius * math.cos(theta)
        return (x ** k) * n * c * c / (2.0 * math.pi * (shift + c * c))

    value, err = quad(
        integrand, -math.pi / 2, math.pi / 2, epsabs=0.5 * quad_tol, epsrel=1e-12
    )
    if err > quad_tol:
        raise QuadratureNotConvergedError(value, err, quad_tol)
    return value


def spectral_radius_tree(n: int) -> float:
    """Largest spectral value of the n-regular tree, 2 sqrt(n-1)."""
    if n < 2:
        raise SequenceError("tree degree must be at least 2")
    return 2.0 * math.sqrt(n - 1.0)

"""Root systems of the complex simple Lie algebras, with exact arithmetic.

Conventions
-----------
* Simple roots are numbered as in Bourbaki (G2: alpha_1 short, B_n: alpha_n
  short, C_n: alpha_n long, E_n: alpha_2 hangs off alpha_4).
* ``cartan[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``.
  With the symmetrizer ``d_i = (alpha_i, alpha_i)/2`` the products
  ``d_i * cartan[i][j]`` are symmetric, and ``alpha_i = sum_j cartan[j][i] varpi_j``.
* The symmetrizer is scaled so that ``min(d_i) == 1``. Only ratios
  ``<lambda, beta^vee>`` are ever consumed, so the scale is irrelevant.
* Weights are stored in fundamental-weight coordinates, roots in
  simple-root coordinates. Everything is a ``Fraction``; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

from .errors import InadmissibleTypeError, WeightError
from .logger import get_logger

logger = get_logger()

Rational = Fraction
Scalar = Union[int, Fraction]

FAMILIES = "ABCDEFG"

# closed-form |Phi^+| per family, used as a self-check on the closure algorithm
_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", family)
        if family not in tuple(FAMILIES):
            raise InadmissibleTypeError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InadmissibleTypeError(f"rank must be a positive integer, got {self.rank!r}")
        n = self.rank
        allowed = {
            "A": (n >= 1, "A_n needs n >= 1"),
            "B": (n >= 2, "B_n needs n >= 2"),
            "C": (n >= 3, "C_n needs n >= 3"),
            "D": (n >= 4, "D_n needs n >= 4"),
            "E": (n in (6, 7, 8), "E_n needs n in {6, 7, 8}"),
            "F": (n == 4, "F_n needs n = 4"),
            "G": (n == 2, "G_n needs n = 2"),
        }[family]
        if not allowed[0]:
            raise InadmissibleTypeError(f"{family}{n} is not admissible: {allowed[1]}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """``"A2"`` -> ``LieType("A", 2)``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InadmissibleTypeError(f"cannot read Lie type from {text!r}; expected e.g. A2, G2, E8")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root ``sum_i coeffs[i] alpha_i`` in simple-root coordinates."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not any(self.coeffs):
            raise WeightError("the zero vector is not a root")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @classmethod
    def simple(cls, i: int, rank: int) -> "Root":
        return cls(tuple(1 if j == i else 0 for j in range(rank)))

    def __str__(self) -> str:
        terms = []
        for i, m in enumerate(self.coeffs, start=1):
            if m == 1:
                terms.append(f"a{i}")
            elif m:
                terms.append(f"{m}a{i}")
        return "+".join(terms)


@dataclass(frozen=True)
class Weight:
    """A weight ``sum_i coords[i] varpi_i`` in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: Scalar) -> "Weight":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    @classmethod
    def fundamental(cls, i: int, rank: int) -> "Weight":
        return cls(tuple(Fraction(1 if j == i else 0) for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if other.rank != self.rank:
            raise WeightError(f"weights of rank {self.rank} and {other.rank} cannot be combined")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar: Scalar) -> "Weight":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Weight(tuple(a * scalar for a in self.coords))

    __rmul__ = __mul__

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c != 0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(Root.simple(i, self.rank) for i in range(self.rank))

    def half_length_sq(self, beta: Root) -> Fraction:
        """``(beta, beta)/2`` in the normalization fixed by the symmetrizer."""
        m, d, c = beta.coeffs, self.symmetrizer, self.cartan
        n = self.rank
        return sum((m[i] * m[j] * d[i] * c[i][j] for i in range(n) for j in range(n)), Fraction(0)) / 2

    def coroot_row(self, beta: Root) -> tuple[Fraction, ...]:
        """Row ``r`` with ``<lambda, beta^vee> = sum_i lambda_i r_i``."""
        cached = self._positive_coroot_rows.get(beta)
        if cached is not None:
            return cached
        return self._coroot_row(beta)

    def _coroot_row(self, beta: Root) -> tuple[Fraction, ...]:
        if beta.rank != self.rank:
            raise WeightError(f"root {beta} has rank {beta.rank}, root system {self.lie_type} has rank {self.rank}")
        d_beta = self.half_length_sq(beta)
        return tuple(Fraction(m * d) / d_beta for m, d in zip(beta.coeffs, self.symmetrizer))

    @cached_property
    def _positive_coroot_rows(self) -> dict[Root, tuple[Fraction, ...]]:
        return {beta: self._coroot_row(beta) for beta in self.positive_roots}

    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: r.height)


# ---------------------------------------------------------------------------
# Cartan matrices, Bourbaki numbering
# ---------------------------------------------------------------------------

def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _link(c: list[list[int]], i: int, j: int) -> None:
    c[i][j] = c[j][i] = -1


def cartan_matrix(lie_type: LieType) -> tuple[tuple[int, ...], ...]:
    n = lie_type.rank
    family = lie_type.family
    if family == "A":
        c = _chain(n)
    elif family == "B":
        c = _chain(n)
        c[n - 1][n - 2] = -2  # alpha_n short
    elif family == "C":
        c = _chain(n)
        c[n - 2][n - 1] = -2  # alpha_n long
    elif family == "D":
        c = _chain(n)
        # fork: alpha_{n-1} and alpha_n both hang off alpha_{n-2}
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        _link(c, n - 3, n - 1)
    elif family == "E":
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        _link(c, 0, 2)
        _link(c, 1, 3)
        for i in range(2, n - 1):
            _link(c, i, i + 1)
    elif family == "F":
        c = _chain(4)
        c[2][1] = -2  # alpha_3, alpha_4 short
    elif family == "G":
        c = [[2, -3], [-1, 2]]  # alpha_1 short
    else:  # pragma: no cover - LieType already validated the family
        raise InadmissibleTypeError(f"no Cartan matrix for {lie_type}")
    return tuple(tuple(row) for row in c)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Solve ``d_i C_ij = d_j C_ji`` along the Dynkin graph, then scale to ``min d = 1``."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise InadmissibleTypeError("Cartan matrix is not connected (not simple)")
    smallest = min(d)
    return tuple(x / smallest for x in d)


def _generate_positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[tuple[int, ...]] = set(simple)
    ordered: list[tuple[int, ...]] = list(simple)
    layer = list(simple)
    while layer:
        next_layer: list[tuple[int, ...]] = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee>
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                # depth of the alpha_i-string below beta
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in found:
                        break
                    p += 1
                if p - pairing > 0:
                    raised = tuple(m + (1 if j == i else 0) for j, m in enumerate(beta))
                    if raised not in found:
                        found.add(raised)
                        next_layer.append(raised)
        next_layer.sort(reverse=True)
        ordered.extend(next_layer)
        layer = next_layer
    return tuple(Root(c) for c in ordered)


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Cartan matrix, symmetrizer and positive roots for ``lie_type``.

    Positive roots come out ordered by height, lexicographically descending
    inside each height, so for A2 the order is ``a1, a2, a1+a2``.
    """
    cartan = cartan_matrix(lie_type)
    d = symmetrizer(cartan)
    n = lie_type.rank
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise InadmissibleTypeError(f"{lie_type}: Cartan matrix is not symmetrizable at ({i},{j})")
    roots = _generate_positive_roots(cartan)
    expected = _POSITIVE_ROOT_COUNTS[lie_type.family](n)
    if len(roots) != expected:
        raise InadmissibleTypeError(f"{lie_type}: generated {len(roots)} positive roots, expected {expected}")
    logger.debug(f"built {lie_type}: {len(roots)} positive roots, symmetrizer {[str(x) for x in d]}")
    return RootSystem(lie_type=lie_type, cartan=cartan, symmetrizer=d, positive_roots=roots)


# ---------------------------------------------------------------------------
# Pairings
# ---------------------------------------------------------------------------

def pairing(lam: Weight, beta: Root, rs: RootSystem) -> Fraction:
    """``<lambda, beta^vee>``. Linear in ``lambda``; ``<varpi_i, alpha_j^vee> = delta_ij``."""
    if lam.rank != rs.rank:
        raise WeightError(f"weight {lam} has rank {lam.rank}, root system {rs.lie_type} has rank {rs.rank}")
    row = rs.coroot_row(beta)
    return sum((k * r for k, r in zip(lam.coords, row)), Fraction(0))


def root_to_weight(beta: Root, rs: RootSystem) -> Weight:
    if beta.rank != rs.rank:
        raise WeightError(f"root {beta} has rank {beta.rank}, root system {rs.lie_type} has rank {rs.rank}")
    n = rs.rank
    return Weight(tuple(sum(beta.coeffs[i] * rs.cartan[j][i] for i in range(n)) for j in range(n)))


def sum_of_roots(roots: Iterable[Root], rs: RootSystem) -> Weight:
    total = Weight.zero(rs.rank)
    for beta in roots:
        total = total + root_to_weight(beta, rs)
    return total


def rho_plus(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots. Always ``varpi_1 + ... + varpi_n``."""
    rho = sum_of_roots(rs.positive_roots, rs) * Fraction(1, 2)
    if any(c != 1 for c in rho.coords):
        raise InadmissibleTypeError(f"{rs.lie_type}: half-sum of positive roots is {rho}, expected all ones")
    return rho

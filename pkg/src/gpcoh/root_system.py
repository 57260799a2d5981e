"""Simple root systems of types A-G and the weight arithmetic built on them.

Everything downstream (Borel-Weil-Bott, bundle calculus, rigidity audits)
reduces to exact integer computations done here. A weight is stored by its
coefficients over the fundamental weights, so the pairing of a weight with
the i-th simple coroot is a direct coefficient read, and a simple reflection
subtracts an integer multiple of a Cartan-matrix row.

Node numbering follows Bourbaki throughout::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n            (node n short)
    C_n   1 - 2 - ... - (n-1) <= n            (node n long)
    D_n   1 - 2 - ... - (n-2) < {n-1, n}      (fork at node n-2)
    E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]       (node 2 hangs off node 4)
    F_4   1 - 2 => 3 - 4                      (nodes 1, 2 long)
    G_2   1 <<= 2                             (node 1 short)

The Cartan matrix convention is ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so
row i is the i-th simple root written in fundamental-weight coordinates.

All values are immutable after construction and every operation is a pure
function; concurrent reads from multiple threads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal

__all__ = [
    "Weight",
    "RootSystem",
    "DominantizationResult",
    "build_root_system",
    "dominantize",
    "weyl_dimension",
    "dual_weight",
    "homogeneous_dimension",
    "levi_dimension",
    "adjoint_dimension",
]

_RANK_RULES = {
    "A": ("n >= 1", lambda n: n >= 1),
    "B": ("n >= 2", lambda n: n >= 2),
    "C": ("n >= 3", lambda n: n >= 3),
    "D": ("n >= 4", lambda n: n >= 4),
    "E": ("n in {6, 7, 8}", lambda n: n in (6, 7, 8)),
    "F": ("n = 4", lambda n: n == 4),
    "G": ("n = 2", lambda n: n == 2),
}


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates.

    ``coeffs[i]`` is the pairing with the (i+1)-th simple coroot (1-based
    Bourbaki node i+1).
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "Weight":
        return cls(coeffs)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, node: int) -> "Weight":
        """omega_node for 1 <= node <= rank."""
        if not 1 <= node <= rank:
            raise ValueError(f"node {node} out of range 1..{rank}")
        return cls(tuple(1 if i == node - 1 else 0 for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: int) -> "Weight":
        return Weight(tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_strictly_dominant(self) -> bool:
        return all(c > 0 for c in self.coeffs)

    def _check_rank(self, other: "Weight") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError(
                f"rank mismatch: weight of rank {len(self.coeffs)} vs {len(other.coeffs)}"
            )

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of one simple type, with its positive roots precomputed.

    ``positive_roots`` are integer coordinate vectors over the simple roots,
    in graded lexicographic order (so golden outputs are stable).
    ``symmetrizer`` holds the integers d_i with d_i * <alpha_i, alpha_j^vee>
    symmetric; these carry the root-length data used by the Weyl dimension
    formula.
    """

    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: Weight
    symmetrizer: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class DominantizationResult:
    """Outcome of pushing a weight into the dominant chamber.

    ``outcome`` is "singular" when the Weyl orbit meets a wall (some
    coefficient hits zero along the way), otherwise "regular" with the
    strictly dominant representative and the number of simple reflections
    used, which is the length of the unique Weyl element involved.
    """

    outcome: Literal["singular", "regular"]
    length: int | None = None
    dominant_weight: Weight | None = None

    @property
    def is_singular(self) -> bool:
        return self.outcome == "singular"

    @property
    def is_regular(self) -> bool:
        return self.outcome == "regular"


def _cartan_matrix(type_letter: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if type_letter in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if type_letter == "B":
            # row n-1 reads -2 against the short node n
            a[rank - 2][rank - 1] = -2
            a[rank - 1][rank - 2] = -1
        elif type_letter == "C":
            a[rank - 2][rank - 1] = -1
            a[rank - 1][rank - 2] = -2
    elif type_letter == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif type_letter == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            edge(i, j)
        if rank >= 7:
            edge(5, 6)
        if rank == 8:
            edge(6, 7)
    elif type_letter == "F":
        edge(0, 1)
        edge(1, 2, aij=-2, aji=-1)
        edge(2, 3)
    elif type_letter == "G":
        edge(0, 1, aij=-1, aji=-3)
    return a


def _symmetrizer(type_letter: str, rank: int) -> tuple[int, ...]:
    if type_letter == "B":
        return tuple([2] * (rank - 1) + [1])
    if type_letter == "C":
        return tuple([1] * (rank - 1) + [2])
    if type_letter == "F":
        return (2, 2, 1, 1)
    if type_letter == "G":
        return (1, 3)
    return (1,) * rank


def _coroot_pairing(cartan: tuple[tuple[int, ...], ...], coords: Iterable[int], i: int) -> int:
    """<beta, alpha_i^vee> for beta given in simple-root coordinates."""
    return sum(c * row[i] for c, row in zip(coords, cartan))


def _generate_positive_roots(
    cartan: tuple[tuple[int, ...], ...], rank: int
) -> tuple[tuple[int, ...], ...]:
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                p = _coroot_pairing(cartan, beta, i)
                img = list(beta)
                img[i] -= p
                timg = tuple(img)
                if timg not in seen:
                    seen.add(timg)
                    nxt.append(timg)
        frontier = nxt
    positives = []
    for root in seen:
        if all(c >= 0 for c in root):
            positives.append(root)
        elif not all(c <= 0 for c in root):
            raise AssertionError(f"mixed-sign root generated: {root}")
    positives.sort(key=lambda c: (sum(c), c))
    return tuple(positives)


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Construct the simple root system of the given type and rank.

    Positive roots are the reflection closure of the simple roots; the
    ordering is graded lexicographic in simple-root coordinates.
    """
    letter = str(type_letter).strip().upper()
    if letter not in _RANK_RULES:
        valid = ", ".join(f"{t} ({r[0]})" for t, r in _RANK_RULES.items())
        raise ValueError(f"unknown type {type_letter!r}; valid types: {valid}")
    rule_text, rule = _RANK_RULES[letter]
    rank = int(rank)
    if not rule(rank):
        raise ValueError(f"invalid rank {rank} for type {letter}; valid range: {rule_text}")
    cartan = tuple(tuple(row) for row in _cartan_matrix(letter, rank))
    sym = _symmetrizer(letter, rank)
    for i in range(rank):
        for j in range(rank):
            if cartan[i][j] * sym[j] != cartan[j][i] * sym[i]:
                raise AssertionError(f"Cartan matrix of {letter}{rank} fails symmetrizability")
    return RootSystem(
        type_letter=letter,
        rank=rank,
        cartan=cartan,
        positive_roots=_generate_positive_roots(cartan, rank),
        rho=Weight((1,) * rank),
        symmetrizer=sym,
    )


def adjoint_dimension(rs: RootSystem) -> int:
    """Dimension of the simple Lie algebra: root spaces plus the Cartan."""
    return 2 * len(rs.positive_roots) + rs.rank


def _check_weight(rs: RootSystem, w: Weight) -> None:
    if w.rank != rs.rank:
        raise ValueError(f"rank mismatch: weight {w} has rank {w.rank}, root system is {rs.name}")


def dominantize(
    rs: RootSystem,
    w: Weight,
    strategy: Literal["least_index", "greatest_index"] = "least_index",
) -> DominantizationResult:
    """Iterate simple reflections at negative coefficients until dominant.

    Returns "singular" as soon as some coefficient vanishes (the weight is
    then orthogonal to a root), otherwise the strictly dominant representative
    together with the reflection count. The outcome does not depend on the
    choice of reflection order; ``strategy`` exists so tests can compare the
    two extreme orders.
    """
    _check_weight(rs, w)
    coeffs = list(w.coeffs)
    length = 0
    bound = len(rs.positive_roots)
    while True:
        if any(c == 0 for c in coeffs):
            return DominantizationResult(outcome="singular")
        negatives = [i for i, c in enumerate(coeffs) if c < 0]
        if not negatives:
            result = Weight(tuple(coeffs))
            if length > bound:
                raise AssertionError("dominantization exceeded the longest-element bound")
            return DominantizationResult(
                outcome="regular", length=length, dominant_weight=result
            )
        i = negatives[0] if strategy == "least_index" else negatives[-1]
        ci = coeffs[i]
        row = rs.cartan[i]
        for k in range(rs.rank):
            coeffs[k] -= ci * row[k]
        length += 1


def weyl_dimension(rs: RootSystem, dominant: Weight) -> int:
    """Exact dimension of the irreducible representation with this highest weight.

    Product over positive roots of <lambda + rho, alpha^vee> / <rho, alpha^vee>,
    evaluated with exact integers.
    """
    _check_weight(rs, dominant)
    for i, c in enumerate(dominant.coeffs):
        if c < 0:
            raise ValueError(
                f"weight {dominant} is not dominant: coefficient {c} at node {i + 1}"
            )
    d = rs.symmetrizer
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= sum(c * (dominant.coeffs[i] + 1) * d[i] for i, c in enumerate(root) if c)
        den *= sum(c * d[i] for i, c in enumerate(root) if c)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise AssertionError("Weyl dimension product failed to be integral")
    return int(value)


_E6_INVOLUTION = (6, 2, 5, 4, 3, 1)  # node i maps to _E6_INVOLUTION[i-1]


def _diagram_involution(rs: RootSystem) -> tuple[int, ...]:
    """Permutation realizing -w0 on the nodes, as a 1-based lookup tuple."""
    n = rs.rank
    if rs.type_letter == "A":
        return tuple(n - i for i in range(n))
    if rs.type_letter == "D" and n % 2 == 1:
        perm = list(range(1, n + 1))
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        return tuple(perm)
    if rs.type_letter == "E" and n == 6:
        return _E6_INVOLUTION
    return tuple(range(1, n + 1))


def dual_weight(rs: RootSystem, dominant: Weight) -> Weight:
    """Highest weight of the dual representation, -w0 applied via the diagram flip."""
    _check_weight(rs, dominant)
    perm = _diagram_involution(rs)
    out = [0] * rs.rank
    for i, c in enumerate(dominant.coeffs):
        out[perm[i] - 1] = c
    return Weight(tuple(out))


def _check_crossed(rs: RootSystem, crossed_nodes: Iterable[int]) -> frozenset[int]:
    crossed = frozenset(int(i) for i in crossed_nodes)
    if not crossed:
        raise ValueError("crossed node set must be nonempty")
    bad = [i for i in crossed if not 1 <= i <= rs.rank]
    if bad:
        raise ValueError(f"crossed nodes {sorted(bad)} out of range 1..{rs.rank}")
    return crossed


def homogeneous_dimension(rs: RootSystem, crossed_nodes: Iterable[int]) -> int:
    """Dimension of G/P for the parabolic crossing the given nodes.

    Counts the positive roots supported outside the Levi, i.e. those whose
    simple-root support meets the crossed set.
    """
    crossed = _check_crossed(rs, crossed_nodes)
    return sum(
        1
        for root in rs.positive_roots
        if any(root[i - 1] for i in crossed)
    )


def levi_dimension(rs: RootSystem, crossed_nodes: Iterable[int], weight: Weight) -> int:
    """Weyl dimension formula restricted to the Levi on the uncrossed nodes.

    This is the rank of the irreducible equivariant bundle labelled by the
    weight. Crossed-node coefficients are unconstrained; the weight must be
    dominant for the Levi.
    """
    crossed = _check_crossed(rs, crossed_nodes)
    _check_weight(rs, weight)
    for i in range(1, rs.rank + 1):
        if i not in crossed and weight.coeffs[i - 1] < 0:
            raise ValueError(
                f"weight {weight} is negative at uncrossed node {i}"
            )
    d = rs.symmetrizer
    num = 1
    den = 1
    for root in rs.positive_roots:
        if any(root[i - 1] for i in crossed):
            continue
        num *= sum(c * (weight.coeffs[i] + 1) * d[i] for i, c in enumerate(root) if c)
        den *= sum(c * d[i] for i, c in enumerate(root) if c)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise AssertionError("Levi dimension product failed to be integral")
    return int(value)

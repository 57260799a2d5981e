"""Koszul resolutions of zero loci and the cohomology chase along them.

A regular section of a bundle E on G/P resolves the structure sheaf of its
zero locus S by 0 -> Lambda^r E^* -> ... -> E^* -> O -> O_S -> 0. Twisting by
a bundle F and feeding each term through Borel-Weil-Bott gives a grid of
dimensions; the chase peels the resolution into short exact sequences of
image sheaves and propagates dimensions down to H^*(F|_S).

The chase works on dimension tables, never on actual maps. The rank of an
induced map between nonzero cohomology groups is therefore an assumption: a
caller-provided hint when present, otherwise the maximal possible rank,
which is the generic-section default. Every such assumption is recorded, so
a determined answer is auditable. When an assignment contradicts exactness
(left exactness of global sections, or a negative dimension downstream),
the chase refuses to guess and reports the blocking positions instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .bott import (
    CohomologyTable,
    ParabolicSpace,
    bundle_cohomology,
    euler_characteristic,
)
from .schur import BundleSum, dual_sum, exterior_power_sum, sum_to_weights, tensor, trivial_label

__all__ = [
    "KoszulComplex",
    "RankHint",
    "UsedHint",
    "ChasePage",
    "ChaseResult",
    "build_koszul",
    "chase",
    "restriction_sequence",
]


@dataclass(frozen=True)
class KoszulComplex:
    """Terms C_j = Lambda^j(E^*) (x) F for j = rank E down to 0.

    ``terms[0]`` is the top term C_r and ``terms[-1]`` is C_0 = F. The
    expected codimension condition rank E <= dim G/P is enforced.
    """

    ambient: ParabolicSpace
    section_bundle: BundleSum
    twist: BundleSum
    terms: tuple[BundleSum, ...]

    @property
    def section_rank(self) -> int:
        return len(self.terms) - 1

    def term(self, j: int) -> BundleSum:
        """C_j for 0 <= j <= rank E."""
        if not 0 <= j <= self.section_rank:
            raise ValueError(f"term index {j} out of range 0..{self.section_rank}")
        return self.terms[self.section_rank - j]


@dataclass(frozen=True)
class RankHint:
    """Caller-supplied rank for the map H^degree(A) -> H^degree(C_target_term),
    where A is the image sheaf coming from term target_term + 1."""

    target_term: int
    degree: int
    rank: int


@dataclass(frozen=True)
class UsedHint:
    target_term: int
    degree: int
    rank: int
    origin: str  # "provided" | "default_maximal"

    def describe(self) -> str:
        return (
            f"H^{self.degree}(C_{self.target_term + 1}) -> "
            f"H^{self.degree}(C_{self.target_term}) rank {self.rank} [{self.origin}]"
        )


@dataclass(frozen=True)
class ChasePage:
    """First-page data of a chase: per-term tables and the assumptions used."""

    grid: tuple[tuple[tuple[int, int], int], ...]  # ((term j, degree q), dim)
    term_tables: tuple[CohomologyTable, ...]  # index j = 0..r
    hints_used: tuple[UsedHint, ...]

    def grid_dims(self) -> dict[tuple[int, int], int]:
        return dict(self.grid)


@dataclass(frozen=True)
class ChaseResult:
    """Either a determined cohomology table for F|_S or the blocked page."""

    determined: bool
    page: ChasePage
    table: CohomologyTable | None = None
    blocking_positions: tuple[tuple[int, int], ...] = ()


def _normalize_hints(rank_hints: Iterable) -> list[RankHint]:
    out = []
    for h in rank_hints or ():
        if isinstance(h, RankHint):
            out.append(h)
        elif isinstance(h, Mapping):
            out.append(
                RankHint(
                    target_term=int(h["target_term"]),
                    degree=int(h["degree"]),
                    rank=int(h["rank"]),
                )
            )
        else:
            target, degree, rank = h
            out.append(RankHint(int(target), int(degree), int(rank)))
    return out


def build_koszul(ambient: ParabolicSpace, section: BundleSum, twist: BundleSum | None = None) -> KoszulComplex:
    """Assemble the Koszul complex of a section of E, twisted by F."""
    if twist is None:
        twist = BundleSum.of(trivial_label(section.ambient))
    if section.ambient != twist.ambient:
        raise ValueError(
            f"section on Gr{section.ambient} but twist on Gr{twist.ambient}"
        )
    rank = section.rank()
    if rank < 1:
        raise ValueError("section bundle must have positive rank")
    if rank > ambient.dimension:
        raise ValueError(
            f"rank {rank} section bundle on a {ambient.dimension}-dimensional space "
            "violates the expected codimension condition"
        )
    dual = dual_sum(section)
    terms = tuple(
        tensor(exterior_power_sum(dual, j), twist) for j in range(rank, -1, -1)
    )
    return KoszulComplex(ambient=ambient, section_bundle=section, twist=twist, terms=terms)


def chase(complex_: KoszulComplex, rank_hints: Iterable = ()) -> ChaseResult:
    """Propagate the term tables down the resolution to H^*(F|_S).

    Peels the exact complex into short exact sequences
    0 -> A_{j+1} -> C_j -> A_j -> 0 with A_j the image sheaves, A_r = C_r and
    A_0 = F|_S. Within each sequence the rank of H^q(A_{j+1}) -> H^q(C_j) is
    forced only by a zero source or target; otherwise a hint is consulted and
    the maximal rank is the recorded default. Providing the defaults
    explicitly as hints reproduces the same result.
    """
    space = complex_.ambient
    r = complex_.section_rank
    max_degree = space.dimension
    hints = {}
    for h in _normalize_hints(rank_hints):
        if not 0 <= h.target_term < r:
            raise ValueError(
                f"malformed hint position: target_term {h.target_term} not in 0..{r - 1}"
            )
        if h.degree < 0 or h.degree > max_degree:
            raise ValueError(
                f"malformed hint position: degree {h.degree} not in 0..{max_degree}"
            )
        if h.rank < 0:
            raise ValueError(f"hint rank must be nonnegative, got {h.rank}")
        key = (h.target_term, h.degree)
        if key in hints:
            raise ValueError(f"duplicate hint for position {key}")
        hints[key] = h.rank

    tables = [
        bundle_cohomology(space, sum_to_weights(complex_.term(j), space))
        for j in range(r + 1)
    ]  # index j = C_j
    grid = tuple(
        ((j, q), dim) for j in range(r, -1, -1) for q, dim in tables[j].total_dims
    )

    used: list[UsedHint] = []
    blocking: list[tuple[int, int]] = []
    current = tables[r].dims()  # dims of A_r = C_r
    for j in range(r - 1, -1, -1):
        below = tables[j].dims()
        rho: dict[int, int] = {}
        for q in range(max_degree + 2):
            cap = min(current.get(q, 0), below.get(q, 0))
            provided = hints.pop((j, q), None)
            if provided is not None:
                if provided > cap:
                    raise ValueError(
                        f"hint rank {provided} at term {j} degree {q} exceeds the "
                        f"maximal possible rank {cap}"
                    )
                rho[q] = provided
                if cap > 0:
                    used.append(UsedHint(j, q, provided, "provided"))
            elif cap > 0:
                rho[q] = cap
                used.append(UsedHint(j, q, cap, "default_maximal"))
            else:
                rho[q] = 0
        # global sections are left exact: H^0(A_{j+1}) injects into H^0(C_j)
        if rho[0] < current.get(0, 0):
            blocking.append((j, 0))
        nxt: dict[int, int] = {}
        for q in range(max_degree + 1):
            val = (
                below.get(q, 0)
                - rho[q]
                + current.get(q + 1, 0)
                - rho.get(q + 1, 0)
            )
            if val < 0:
                blocking.append((j, q))
            elif val:
                nxt[q] = val
        if blocking:
            page = ChasePage(grid=grid, term_tables=tuple(tables), hints_used=tuple(used))
            return ChaseResult(
                determined=False, page=page, blocking_positions=tuple(sorted(set(blocking)))
            )
        current = nxt

    table = CohomologyTable.from_dimensions(current)
    expected = sum(
        (-1) ** j * euler_characteristic(tables[j]) for j in range(r + 1)
    )
    if euler_characteristic(table) != expected:
        raise AssertionError(
            "Euler characteristic of the chase output disagrees with the "
            "alternating sum over the resolution"
        )
    page = ChasePage(grid=grid, term_tables=tuple(tables), hints_used=tuple(used))
    return ChaseResult(determined=True, page=page, table=table)


def restriction_sequence(
    h0_sub: int, ambient_table: CohomologyTable, normal_table: CohomologyTable
) -> tuple[int, int]:
    """Four-term exact-sequence arithmetic for the tangent bundle of a zero locus.

    From 0 -> T_S -> T_amb|_S -> N|_S -> 0 with the ambient restricted tangent
    cohomology vanishing above degree zero:

        0 -> H^0(T_S) -> H^0(T_amb|_S) -> H^0(N|_S) -> H^1(T_S) -> 0.

    ``h0_sub`` is H^0(T_S), supplied externally; returns (h0, h1).
    """
    if h0_sub < 0:
        raise ValueError("h0_sub must be nonnegative")
    amb = ambient_table.dims()
    nor = normal_table.dims()
    high_amb = {d: v for d, v in amb.items() if d >= 1 and v}
    if high_amb:
        raise ValueError(
            "restriction sequence needs the ambient tangent cohomology to vanish "
            f"in positive degrees, got {high_amb}"
        )
    high_nor = {d: v for d, v in nor.items() if d >= 2 and v}
    if high_nor:
        raise ValueError(
            f"restriction sequence needs the normal cohomology to vanish in degrees >= 2, got {high_nor}"
        )
    amb0 = amb.get(0, 0)
    nor0 = nor.get(0, 0)
    if h0_sub > amb0:
        raise ValueError(
            f"inconsistent inputs: h0 = {h0_sub} cannot inject into an ambient "
            f"H^0 of dimension {amb0}"
        )
    h1 = nor0 - amb0 + h0_sub
    if h1 < 0:
        raise ValueError(
            f"inconsistent inputs: the exact sequence forces h1 = {h1} < 0"
        )
    return (h0_sub, h1)

"""Canonical labels and exact tensor calculus for bundles on Gr(k, n).

An irreducible equivariant bundle on the Grassmannian is written as
``S_mu(U) (x) S_nu(Q) (x) O(t)`` with U the rank-k tautological subbundle, Q
the rank-(n-k) quotient and O(1) = det U^*. The canonical form keeps both
partitions strictly shorter than the rank of their side; a full column on
the U side is det U = O(-1) and moves into the twist (and symmetrically,
det Q = O(+1) on the quotient side). Duals never appear in stored labels:
``S_mu(W^*)`` is rewritten as the reversed-complement partition on W with a
determinant twist before anything else happens.

Tensor products distribute over direct sums and apply the
Littlewood-Richardson rule independently on the two sides, truncated to the
side's rank. The rule is evaluated by direct enumeration of lattice-word
skew tableaux, which doubles as its own certificate at the sizes needed.

Exterior powers are restricted to the closed-form cases a Koszul complex of
a column bundle requires: powers of (possibly dual, possibly twisted) single
columns. General plethysm is out of scope and rejected.

Conversion to fundamental-weight coordinates sends a label to the highest
weight of the dual of its fiber, which is exactly the convention making
``O(1) -> omega_k`` and ``Lambda^j U^* -> omega_j``; with it the tangent
bundle U^* (x) Q of Gr(k, n) carries the weight omega_1 + omega_{n-1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bott import ParabolicSpace
from .root_system import Weight, build_root_system, weyl_dimension

__all__ = [
    "Partition",
    "BundleLabel",
    "BundleSum",
    "canonicalize",
    "lr_coefficients",
    "tensor",
    "exterior_power",
    "exterior_power_sum",
    "label_to_weight",
    "label_rank",
    "gl_dimension",
    "dual_label",
    "schur_label",
    "line_bundle",
    "generator_power",
    "tangent_label",
    "parse_bundle",
    "parse_partition",
    "format_label",
    "format_sum",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p < 0:
                raise ValueError(f"partition parts must be nonnegative: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """0-based row length, zero beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, rows: int) -> tuple[int, ...]:
        if len(self.parts) > rows:
            raise ValueError(f"partition {self.parts} has more than {rows} rows")
        return self.parts + (0,) * (rows - len(self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"


def _reversed_complement(p: Partition, rows: int) -> Partition:
    """Partition of the dual GL(rows)-representation, before the det twist."""
    padded = p.padded(rows)
    first = padded[0] if padded else 0
    return Partition(tuple(first - padded[rows - 1 - i] for i in range(rows)))


@dataclass(frozen=True)
class BundleLabel:
    """One irreducible bundle on Gr(k, n): partitions on U and Q plus a twist."""

    ambient: tuple[int, int]
    u_part: Partition = Partition()
    q_part: Partition = Partition()
    twist: int = 0

    def __post_init__(self) -> None:
        k, n = (int(x) for x in self.ambient)
        if not 1 <= k < n:
            raise ValueError(f"ambient Gr({k},{n}) requires 1 <= k < n")
        object.__setattr__(self, "ambient", (k, n))
        if self.u_part.length > k:
            raise ValueError(f"u-side partition {self.u_part} exceeds rank {k}")
        if self.q_part.length > n - k:
            raise ValueError(f"q-side partition {self.q_part} exceeds rank {n - k}")

    @property
    def k(self) -> int:
        return self.ambient[0]

    @property
    def n(self) -> int:
        return self.ambient[1]

    def sort_key(self) -> tuple:
        return (self.u_part.parts, self.q_part.parts, self.twist)

    def __str__(self) -> str:
        return format_label(self)


@dataclass(frozen=True)
class BundleSum:
    """Formal direct sum of labels with positive multiplicities, canonicalized."""

    ambient: tuple[int, int]
    summands: tuple[tuple[BundleLabel, int], ...] = field(default=())

    @classmethod
    def from_pairs(
        cls, ambient: tuple[int, int], pairs: Iterable[tuple[BundleLabel, int]]
    ) -> "BundleSum":
        acc: dict[BundleLabel, int] = {}
        for label, mult in pairs:
            if label.ambient != tuple(ambient):
                raise ValueError(
                    f"label on Gr{label.ambient} cannot join a sum on Gr{tuple(ambient)}"
                )
            if mult <= 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            canon = canonicalize(label)
            acc[canon] = acc.get(canon, 0) + mult
        ordered = tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))
        return cls(ambient=tuple(ambient), summands=ordered)

    @classmethod
    def of(cls, label: BundleLabel, mult: int = 1) -> "BundleSum":
        return cls.from_pairs(label.ambient, [(label, mult)])

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def rank(self) -> int:
        return sum(m * label_rank(lab) for lab, m in self.summands)

    def labels(self) -> tuple[BundleLabel, ...]:
        return tuple(lab for lab, _ in self.summands)

    def __str__(self) -> str:
        return format_sum(self)


def canonicalize(label: BundleLabel) -> BundleLabel:
    """Extract full columns into the twist so both partitions sit strictly
    inside their side; idempotent and rank-preserving."""
    k, n = label.ambient
    m = n - k
    u, q, t = label.u_part, label.q_part, label.twist
    if u.length == k and k > 0:
        c = u.parts[-1]
        if c > 0:
            u = Partition(tuple(p - c for p in u.parts))
            t -= c  # det U = O(-1)
    if q.length == m and m > 0:
        c = q.parts[-1]
        if c > 0:
            q = Partition(tuple(p - c for p in q.parts))
            t += c  # det Q = O(+1)
    return BundleLabel(ambient=label.ambient, u_part=u, q_part=q, twist=t)


# ---------------------------------------------------------------------------
# Littlewood-Richardson by skew-tableau enumeration


def _candidate_shapes(mu: Partition, nu: Partition, max_rows: int) -> Iterator[Partition]:
    total = mu.size + nu.size
    cap_first = mu.part(0) + nu.part(0)

    def rec(prefix: list[int], remaining: int, row: int) -> Iterator[Partition]:
        if row == max_rows:
            if remaining == 0:
                yield Partition(tuple(prefix))
            return
        hi = min(prefix[-1] if prefix else cap_first, remaining)
        lo = mu.part(row)
        # rows below still need at least mu's parts
        needed_below = sum(mu.part(r) for r in range(row + 1, max_rows))
        for val in range(hi, lo - 1, -1):
            if remaining - val < needed_below:
                continue
            prefix.append(val)
            yield from rec(prefix, remaining - val, row + 1)
            prefix.pop()

    yield from rec([], total, 0)


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """LR skew tableaux of shape lam/mu and content nu.

    Cells are filled in reverse reading order (top row to bottom, right to
    left) so the lattice-word condition is a running check on value counts.
    """
    rows = lam.length
    cells = []
    for r in range(rows):
        for c in range(lam.part(r) - 1, mu.part(r) - 1, -1):
            cells.append((r, c))
    if len(cells) != nu.size:
        return 0
    nvals = nu.length
    counts = [0] * (nvals + 1)
    values: dict[tuple[int, int], int] = {}
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = values.get((r, c + 1))
        above = values.get((r - 1, c))
        for v in range(1, nvals + 1):
            if counts[v] >= nu.part(v - 1):
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word
            if right is not None and v > right:
                continue  # rows weakly increase
            if above is not None and v <= above:
                continue  # columns strictly increase
            counts[v] += 1
            values[(r, c)] = v
            place(idx + 1)
            del values[(r, c)]
            counts[v] -= 1

    place(0)
    return total


def lr_coefficients(
    mu: Partition | Iterable[int], nu: Partition | Iterable[int], max_rows: int
) -> dict[Partition, int]:
    """All Littlewood-Richardson coefficients c^lam_{mu,nu} with at most
    ``max_rows`` rows; shapes needing more rows are discarded (GL truncation)."""
    if max_rows < 1:
        raise ValueError(f"max_rows must be at least 1, got {max_rows}")
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    nu = nu if isinstance(nu, Partition) else Partition(tuple(nu))
    if mu.length > max_rows or nu.length > max_rows:
        return {}
    out: dict[Partition, int] = {}
    for lam in _candidate_shapes(mu, nu, max_rows):
        count = _count_lr_tableaux(lam, mu, nu)
        if count:
            out[lam] = count
    return out


def gl_dimension(p: Partition | Iterable[int], r: int) -> int:
    """Dimension of the Schur functor S_p applied to a rank-r space."""
    p = p if isinstance(p, Partition) else Partition(tuple(p))
    if r < 0:
        raise ValueError("rank must be nonnegative")
    if p.length > r:
        return 0
    if r <= 1 or p.size == 0:
        return 1
    rs = build_root_system("A", r - 1)
    padded = p.padded(r)
    coeffs = tuple(padded[i] - padded[i + 1] for i in range(r - 1))
    return weyl_dimension(rs, Weight(coeffs))


def label_rank(label: BundleLabel) -> int:
    k, n = label.ambient
    return gl_dimension(label.u_part, k) * gl_dimension(label.q_part, n - k)


# ---------------------------------------------------------------------------
# Constructors


def schur_label(
    ambient: tuple[int, int],
    u_part: Iterable[int] = (),
    q_part: Iterable[int] = (),
    twist: int = 0,
) -> BundleLabel:
    return BundleLabel(
        ambient=tuple(ambient),
        u_part=Partition(tuple(u_part)),
        q_part=Partition(tuple(q_part)),
        twist=int(twist),
    )


def line_bundle(ambient: tuple[int, int], twist: int) -> BundleLabel:
    return schur_label(ambient, twist=twist)


def trivial_label(ambient: tuple[int, int]) -> BundleLabel:
    return line_bundle(ambient, 0)


_GENERATORS = ("U", "U*", "Q", "Q*")


def _general_schur(ambient: tuple[int, int], gen: str, p: Partition, twist: int) -> BundleLabel:
    """S_p applied to a generator, duals rewritten to straight partitions."""
    k, n = ambient
    m = n - k
    if gen not in _GENERATORS:
        raise ValueError(f"unknown generator {gen!r}; expected one of {_GENERATORS}")
    if gen == "U":
        return canonicalize(BundleLabel(ambient, u_part=p, twist=twist))
    if gen == "Q":
        return canonicalize(BundleLabel(ambient, q_part=p, twist=twist))
    first = p.part(0)
    if gen == "U*":
        # S_p(U^*) = S_rc(U) (x) (det U)^{-p_1} = S_rc(U) (x) O(+p_1)
        return canonicalize(
            BundleLabel(ambient, u_part=_reversed_complement(p, k), twist=twist + first)
        )
    # S_p(Q^*) = S_rc(Q) (x) (det Q)^{-p_1} = S_rc(Q) (x) O(-p_1)
    return canonicalize(
        BundleLabel(ambient, q_part=_reversed_complement(p, m), twist=twist - first)
    )


def generator_power(
    ambient: tuple[int, int],
    gen: str,
    kind: str,
    degree: int,
    twist: int = 0,
) -> BundleLabel:
    """Lambda^degree or Sym^degree of a tautological generator.

    ``kind`` is "ext" or "sym". Degrees beyond the generator rank give the
    zero functor and are rejected.
    """
    k, n = ambient
    rank = k if gen in ("U", "U*") else n - k
    if kind == "ext":
        if not 0 <= degree <= rank:
            raise ValueError(
                f"Lambda^{degree} of a rank-{rank} generator vanishes or is undefined"
            )
        p = Partition((1,) * degree)
    elif kind == "sym":
        if degree < 0:
            raise ValueError("symmetric power degree must be nonnegative")
        p = Partition((degree,)) if degree else Partition()
    else:
        raise ValueError(f"kind must be 'ext' or 'sym', got {kind!r}")
    return _general_schur(tuple(ambient), gen, p, twist)


def tangent_label(ambient: tuple[int, int]) -> BundleLabel:
    """Tangent bundle U^* (x) Q of Gr(k, n)."""
    k, n = ambient
    return canonicalize(
        BundleLabel(
            tuple(ambient),
            u_part=Partition((1,) * (k - 1)),
            q_part=Partition((1,)),
            twist=1,
        )
    )


def dual_label(label: BundleLabel) -> BundleLabel:
    k, n = label.ambient
    m = n - k
    u1 = label.u_part.part(0)
    q1 = label.q_part.part(0)
    return canonicalize(
        BundleLabel(
            label.ambient,
            u_part=_reversed_complement(label.u_part, k),
            q_part=_reversed_complement(label.q_part, m),
            twist=u1 - q1 - label.twist,
        )
    )


def dual_sum(bsum: BundleSum) -> BundleSum:
    return BundleSum.from_pairs(
        bsum.ambient, [(dual_label(lab), m) for lab, m in bsum.summands]
    )


# ---------------------------------------------------------------------------
# Tensor products and exterior powers


def tensor_labels(a: BundleLabel, b: BundleLabel) -> BundleSum:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: Gr{a.ambient} vs Gr{b.ambient}")
    k, n = a.ambient
    m = n - k
    twist = a.twist + b.twist
    u_products = lr_coefficients(a.u_part, b.u_part, k) if k else {Partition(): 1}
    q_products = lr_coefficients(a.q_part, b.q_part, m) if m else {Partition(): 1}
    pairs = []
    for pu, cu in u_products.items():
        for pq, cq in q_products.items():
            pairs.append(
                (BundleLabel(a.ambient, u_part=pu, q_part=pq, twist=twist), cu * cq)
            )
    return BundleSum.from_pairs(a.ambient, pairs)


def tensor(a: BundleSum, b: BundleSum) -> BundleSum:
    """Exact tensor product of two sums, canonicalized and deduplicated."""
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: Gr{a.ambient} vs Gr{b.ambient}")
    pairs: list[tuple[BundleLabel, int]] = []
    for la, ma in a.summands:
        for lb, mb in b.summands:
            for lab, c in tensor_labels(la, lb).summands:
                pairs.append((lab, ma * mb * c))
    return BundleSum.from_pairs(a.ambient, pairs)


def _column_form(label: BundleLabel) -> tuple[str, int, int]:
    """Decompose a canonical label as Lambda^a(side) (x) O(t), or fail."""
    canon = canonicalize(label)
    u, q, t = canon.u_part, canon.q_part, canon.twist
    if not q.parts and all(p == 1 for p in u.parts):
        return ("U", u.length, t)
    if not u.parts and all(p == 1 for p in q.parts):
        return ("Q", q.length, t)
    raise ValueError(
        f"unsupported plethysm shape: {format_label(canon)} is not a column power "
        "of U or Q up to twist"
    )


def _column_sum(ambient: tuple[int, int], side: str, a: int, twist: int, mult: int = 1) -> BundleSum:
    if side == "U":
        label = BundleLabel(ambient, u_part=Partition((1,) * a), twist=twist)
    else:
        label = BundleLabel(ambient, q_part=Partition((1,) * a), twist=twist)
    return BundleSum.from_pairs(ambient, [(label, mult)])


def exterior_power(label: BundleLabel, j: int) -> BundleSum:
    """Lambda^j of a column bundle, by the closed-form rules.

    Supported after canonicalization: O(t), G (x) O(t) and
    Lambda^(rank-1) G (x) O(t) for a generator G; the last case runs through
    the dual rewrite Lambda^(r-1) G = G^* (x) det G. Anything else is a
    genuine plethysm and is rejected.
    """
    side, a, t = _column_form(label)
    k, n = label.ambient
    gen_rank = k if side == "U" else n - k
    det_twist = -1 if side == "U" else 1
    rank = _binomial(gen_rank, a)
    if not 0 <= j <= rank:
        raise ValueError(f"Lambda^{j} of a rank-{rank} bundle is out of range")
    ambient = label.ambient
    if j == 0:
        return BundleSum.of(trivial_label(ambient))
    # Lambda^j(W (x) L) = Lambda^j(W) (x) L^j for a line bundle L
    line_part = j * t
    if a == 0:
        # pure line bundle, so j = 1 here
        return BundleSum.of(line_bundle(ambient, line_part))
    if a == 1:
        return _column_sum(ambient, side, j, line_part)
    if a == gen_rank - 1:
        # Lambda^(r-1) G = G^* (x) det G, so
        # Lambda^j = Lambda^(r-j) G (x) (det G)^(j-1)
        return _column_sum(ambient, side, gen_rank - j, line_part + det_twist * (j - 1))
    if a == gen_rank:
        # full column is a line bundle; canonicalize made this unreachable
        raise AssertionError("full column survived canonicalization")
    raise ValueError(
        f"unsupported plethysm shape: Lambda^{j} of {format_label(canonicalize(label))}"
    )


def exterior_power_sum(bsum: BundleSum, j: int) -> BundleSum:
    """Lambda^j of a direct sum via Lambda(A + B) = Lambda(A) (x) Lambda(B)."""
    if j < 0:
        raise ValueError("exterior power degree must be nonnegative")
    ambient = bsum.ambient
    flat: list[BundleLabel] = []
    for lab, m in bsum.summands:
        flat.extend([lab] * m)
    # graded[d] = Lambda^d of the labels folded so far
    graded: list[BundleSum] = [BundleSum.of(trivial_label(ambient))]
    for lab in flat:
        rank = label_rank(lab)
        powers = [exterior_power(lab, d) for d in range(0, min(rank, j) + 1)]
        new_len = min(j, len(graded) - 1 + rank) + 1
        new: list[BundleSum] = []
        for d in range(new_len):
            pieces: list[tuple[BundleLabel, int]] = []
            for p in range(0, min(d, rank) + 1):
                if d - p >= len(graded):
                    continue
                prod = tensor(graded[d - p], powers[p])
                pieces.extend(prod.summands)
            new.append(BundleSum.from_pairs(ambient, pieces))
        graded = new
    if j >= len(graded):
        return BundleSum.from_pairs(ambient, [])
    return graded[j]


def _binomial(n: int, k: int) -> int:
    if not 0 <= k <= n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# Conversion to weights


def label_to_weight(label: BundleLabel, space: ParabolicSpace) -> Weight:
    """Fundamental-weight coordinates of a canonical label.

    The label must be canonical and ``space`` must be the A-type space
    Gr(k, n) = SL(n)/P_k matching the label's ambient. The result is
    P-dominant by construction.
    """
    k, n = label.ambient
    if canonicalize(label) != label:
        raise ValueError(f"label {format_label(label)} is not canonical")
    if space.rs.type_letter != "A" or space.rs.rank != n - 1 or space.crossed != {k}:
        raise ValueError(
            f"label on Gr({k},{n}) needs the space A{n - 1}/P{k}, got {space}"
        )
    m = n - k
    mu = label.u_part.padded(k)
    nu = label.q_part.padded(m)
    t = label.twist
    # highest weight of the dual fiber, in the standard torus basis
    lam = [t - mu[k - 1 - i] for i in range(k)] + [-nu[m - 1 - i] for i in range(m)]
    coeffs = tuple(lam[i] - lam[i + 1] for i in range(n - 1))
    return Weight(coeffs)


def sum_to_weights(bsum: BundleSum, space: ParabolicSpace) -> tuple[tuple[Weight, int], ...]:
    return tuple((label_to_weight(lab, space), m) for lab, m in bsum.summands)


# ---------------------------------------------------------------------------
# Compact string syntax, shared by the CLI and scenario files
#
#   bundle := atom ("*" atom)*
#   atom   := base ["(" INT ")"]
#   base   := "O" | "T" | GEN | ("L" INT | "S" INT | "W[" INT {"," INT} "]") GEN
#   GEN    := "U" | "U*" | "Q" | "Q*"
#
# Examples: "O(-3)", "L3 U*", "S2 U (-1)", "W[2,1]U * Q", "T".


_ATOM_RE = re.compile(
    r"""
    \s*
    (?:
        (?P<line>O)
      | (?P<tangent>T)
      | (?: (?: L(?P<ext>\d+) | S(?P<sym>\d+) | W\[(?P<schur>\d+(?:,\d+)*)\] )? \s*
            (?P<gen>U\*|U|Q\*|Q) )
    )
    \s*
    (?: \( \s* (?P<twist>-?\d+) \s* \) )?
    \s*
    """,
    re.VERBOSE,
)


def parse_partition(text: str) -> Partition:
    """Comma list such as "2,1,1"; an empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def _parse_atom(ambient: tuple[int, int], text: str) -> BundleLabel:
    match = _ATOM_RE.fullmatch(text)
    if not match:
        raise ValueError(f"cannot parse bundle atom {text!r}")
    twist = int(match.group("twist") or 0)
    if match.group("line"):
        return line_bundle(ambient, twist)
    if match.group("tangent"):
        lab = tangent_label(ambient)
        return canonicalize(
            BundleLabel(ambient, lab.u_part, lab.q_part, lab.twist + twist)
        )
    gen = match.group("gen")
    if match.group("ext") is not None:
        return generator_power(ambient, gen, "ext", int(match.group("ext")), twist)
    if match.group("sym") is not None:
        return generator_power(ambient, gen, "sym", int(match.group("sym")), twist)
    if match.group("schur") is not None:
        p = parse_partition(match.group("schur"))
        return _general_schur(ambient, gen, p, twist)
    return generator_power(ambient, gen, "ext", 1, twist)


def parse_bundle(ambient: tuple[int, int], text: str) -> BundleSum:
    """Parse the compact bundle syntax into a canonical sum."""
    ambient = tuple(ambient)
    # a star glued to U or Q marks a dual; any other star separates atoms
    protected = text.replace("U*", "U\x00").replace("Q*", "Q\x00")
    atoms = [
        piece.replace("\x00", "*").strip()
        for piece in protected.split("*")
        if piece.strip()
    ]
    if not atoms:
        raise ValueError(f"cannot parse bundle {text!r}")
    out = BundleSum.of(trivial_label(ambient))
    for atom in atoms:
        out = tensor(out, BundleSum.of(_parse_atom(ambient, atom)))
    return out


def _format_side(p: Partition, gen: str) -> str:
    if not p.parts:
        return ""
    if all(x == 1 for x in p.parts):
        return f"L{p.length} {gen}" if p.length > 1 else gen
    if p.length == 1:
        return f"S{p.parts[0]} {gen}"
    return f"W[{','.join(str(x) for x in p.parts)}] {gen}"


def format_label(label: BundleLabel) -> str:
    """Render a label in the compact syntax; parse_bundle round-trips it."""
    pieces = [s for s in (_format_side(label.u_part, "U"), _format_side(label.q_part, "Q")) if s]
    if not pieces:
        return f"O({label.twist})" if label.twist else "O"
    body = " * ".join(pieces)
    return f"{body} ({label.twist})" if label.twist else body


def format_sum(bsum: BundleSum) -> str:
    if bsum.is_zero:
        return "0"
    parts = []
    for lab, m in bsum.summands:
        text = format_label(lab)
        parts.append(text if m == 1 else f"{m}x {text}")
    return " + ".join(parts)

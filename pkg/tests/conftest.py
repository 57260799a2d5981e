"""Shared independent oracles for the test suite.

These deliberately avoid the package's own code paths: dimensions come from
brute-force semistandard tableau enumeration and A-type roots from their
interval description, so the main engines are checked against something
that cannot share their bugs.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def ssyt_count(shape: tuple[int, ...], max_entry: int) -> int:
    """Number of semistandard Young tableaux of the given shape with entries
    in 1..max_entry, counted by direct backtracking."""
    shape = tuple(p for p in shape if p)
    if not shape:
        return 1
    if len(shape) > max_entry:
        return 0
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    values: dict[tuple[int, int], int] = {}
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, values[(r, c - 1)])  # rows weakly increase
        if r > 0:
            lo = max(lo, values[(r - 1, c)] + 1)  # columns strictly increase
        for v in range(lo, max_entry + 1):
            values[(r, c)] = v
            place(idx + 1)
        values.pop((r, c), None)

    place(0)
    return total


def a_type_positive_roots(n: int) -> set[tuple[int, ...]]:
    """Positive roots of A_n in simple-root coordinates: interval indicators."""
    out = set()
    for i in range(n):
        for j in range(i, n):
            out.add(tuple(1 if i <= p <= j else 0 for p in range(n)))
    return out

import random

import pytest
from hypothesis import given, strategies as st

from gpcoh import (
    Weight,
    adjoint_dimension,
    build_root_system,
    dominantize,
    dual_weight,
    homogeneous_dimension,
    levi_dimension,
    weyl_dimension,
)

from conftest import a_type_positive_roots, ssyt_count

ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(3, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def closed_form_count(letter: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[letter]


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_positive_root_counts_match_closed_forms(letter, rank):
    rs = build_root_system(letter, rank)
    assert len(rs.positive_roots) == closed_form_count(letter, rank)


@pytest.mark.parametrize("n", range(1, 8))
def test_a_type_positive_roots_are_interval_vectors(n):
    rs = build_root_system("A", n)
    assert set(rs.positive_roots) == a_type_positive_roots(n)


def test_named_adjoint_dimensions():
    assert adjoint_dimension(build_root_system("A", 6)) == 48
    assert adjoint_dimension(build_root_system("G", 2)) == 14
    assert adjoint_dimension(build_root_system("F", 4)) == 52
    assert adjoint_dimension(build_root_system("E", 6)) == 78
    assert adjoint_dimension(build_root_system("E", 7)) == 133
    assert adjoint_dimension(build_root_system("C", 3)) == 21
    assert adjoint_dimension(build_root_system("A", 5)) == 35


@pytest.mark.parametrize(
    "letter,rank",
    [("Z", 9), ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3)],
)
def test_invalid_type_rank_pairs_rejected(letter, rank):
    with pytest.raises(ValueError, match="valid"):
        build_root_system(letter, rank)


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_cartan_matrix_shape(letter, rank):
    rs = build_root_system(letter, rank)
    for i in range(rank):
        assert rs.cartan[i][i] == 2
        for j in range(rank):
            if i != j:
                assert rs.cartan[i][j] <= 0


def test_cartan_matrices_of_the_small_exceptional_types():
    assert build_root_system("G", 2).cartan == ((2, -1), (-3, 2))
    assert build_root_system("F", 4).cartan == (
        (2, -1, 0, 0),
        (-1, 2, -2, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    )


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_rho_pairs_to_one_with_every_simple_coroot(letter, rank):
    rs = build_root_system(letter, rank)
    assert rs.rho.coeffs == (1,) * rank


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_positive_roots_have_nonnegative_coordinates(letter, rank):
    rs = build_root_system(letter, rank)
    for root in rs.positive_roots:
        assert all(c >= 0 for c in root)
        assert sum(root) >= 1


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_positive_roots_in_graded_lex_order(letter, rank):
    rs = build_root_system(letter, rank)
    keys = [(sum(r), r) for r in rs.positive_roots]
    assert keys == sorted(keys)


# ---------------------------------------------------------------------------
# dominantize


def test_dominantize_zero_weight_on_p1_is_singular():
    rs = build_root_system("A", 1)
    assert dominantize(rs, Weight.of(0)).is_singular


def test_dominantize_shifted_triple_twist_weight_is_singular():
    # (w3 - 3 w4) + rho on A6
    rs = build_root_system("A", 6)
    assert dominantize(rs, Weight.of(1, 1, 2, -2, 1, 1)).is_singular


def test_dominantize_shifted_adjoint_weight_is_regular_of_length_zero():
    rs = build_root_system("A", 6)
    res = dominantize(rs, Weight.of(2, 1, 1, 1, 1, 2))
    assert res.is_regular
    assert res.length == 0
    assert res.dominant_weight == Weight.of(2, 1, 1, 1, 1, 2)


def test_dominantize_rank_mismatch_rejected():
    rs = build_root_system("A", 3)
    with pytest.raises(ValueError, match="rank mismatch"):
        dominantize(rs, Weight.of(1, 1))


def test_dominantize_order_independence_counted_suite():
    rng = random.Random(20240)
    for letter, rank in [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("E", 6), ("F", 4), ("G", 2)]:
        rs = build_root_system(letter, rank)
        for _ in range(1000):
            w = Weight(tuple(rng.randint(-6, 6) for _ in range(rank)))
            lo = dominantize(rs, w, strategy="least_index")
            hi = dominantize(rs, w, strategy="greatest_index")
            assert lo == hi


@given(st.tuples(*[st.integers(-8, 8)] * 4))
def test_dominantize_strategies_agree_on_d4(coeffs):
    rs = build_root_system("D", 4)
    assert dominantize(rs, Weight(coeffs)) == dominantize(
        rs, Weight(coeffs), strategy="greatest_index"
    )


@given(st.tuples(*[st.integers(-6, 6)] * 4))
def test_dominantize_regular_output_is_strictly_dominant_and_stable(coeffs):
    rs = build_root_system("C", 4)
    res = dominantize(rs, Weight(coeffs))
    if res.is_regular:
        assert res.dominant_weight.is_strictly_dominant()
        assert res.length <= len(rs.positive_roots)
        again = dominantize(rs, res.dominant_weight)
        assert again.is_regular
        assert again.length == 0
        assert again.dominant_weight == res.dominant_weight


# ---------------------------------------------------------------------------
# weyl_dimension


def test_weyl_dimension_examples():
    a6 = build_root_system("A", 6)
    assert weyl_dimension(a6, Weight.fundamental(6, 3)) == 35  # binomial(7, 3)
    assert weyl_dimension(a6, Weight.of(1, 0, 0, 0, 0, 1)) == 48  # 7^2 - 1
    c3 = build_root_system("C", 3)
    assert weyl_dimension(c3, Weight.zero(3)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_weyl_dimension_of_the_vector_representation(n):
    rs = build_root_system("A", n)
    assert weyl_dimension(rs, Weight.fundamental(n, 1)) == n + 1


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_weyl_dimension_of_zero_weight_is_one(letter, rank):
    rs = build_root_system(letter, rank)
    assert weyl_dimension(rs, Weight.zero(rank)) == 1


def test_weyl_dimension_matches_tableau_count_on_small_partitions():
    rng = random.Random(5)
    for r in (3, 4):
        rs = build_root_system("A", r - 1)
        for _ in range(25):
            parts = sorted((rng.randint(0, 4) for _ in range(r - 1)), reverse=True)
            shape = tuple(p for p in parts if p)
            coeffs = tuple(
                (shape[i] if i < len(shape) else 0) - (shape[i + 1] if i + 1 < len(shape) else 0)
                for i in range(r - 1)
            )
            assert weyl_dimension(rs, Weight(coeffs)) == ssyt_count(shape, r)


def test_weyl_dimension_rejects_nondominant_weight():
    rs = build_root_system("A", 3)
    with pytest.raises(ValueError, match="node 2"):
        weyl_dimension(rs, Weight.of(1, -1, 0))


def test_exceptional_fundamental_dimensions():
    assert weyl_dimension(build_root_system("E", 6), Weight.fundamental(6, 6)) == 27
    assert weyl_dimension(build_root_system("G", 2), Weight.fundamental(2, 1)) == 7
    assert weyl_dimension(build_root_system("G", 2), Weight.fundamental(2, 2)) == 14


@pytest.mark.parametrize(
    "letter,rank,coeffs,expected",
    [
        # vector, adjoint and spin representations of so(7)
        ("B", 3, (1, 0, 0), 7),
        ("B", 3, (0, 1, 0), 21),
        ("B", 3, (0, 0, 1), 8),
        ("B", 4, (0, 0, 0, 1), 16),
        # sp(6): vector, the two 14-dimensional fundamentals, adjoint
        ("C", 3, (1, 0, 0), 6),
        ("C", 3, (0, 1, 0), 14),
        ("C", 3, (0, 0, 1), 14),
        ("C", 3, (2, 0, 0), 21),
        # so(8) triality triple and adjoint
        ("D", 4, (1, 0, 0, 0), 8),
        ("D", 4, (0, 0, 1, 0), 8),
        ("D", 4, (0, 0, 0, 1), 8),
        ("D", 4, (0, 1, 0, 0), 28),
        ("D", 6, (0, 0, 0, 0, 0, 1), 32),
        ("E", 7, (0, 0, 0, 0, 0, 0, 1), 56),
        ("E", 7, (1, 0, 0, 0, 0, 0, 0), 133),
        ("E", 8, (0, 0, 0, 0, 0, 0, 0, 1), 248),
        ("F", 4, (0, 0, 0, 1), 26),
        ("F", 4, (1, 0, 0, 0), 52),
        ("E", 6, (1, 0, 0, 0, 0, 0), 27),
        ("E", 6, (0, 1, 0, 0, 0, 0), 78),
    ],
)
def test_classical_representation_dimensions(letter, rank, coeffs, expected):
    rs = build_root_system(letter, rank)
    assert weyl_dimension(rs, Weight(coeffs)) == expected


# ---------------------------------------------------------------------------
# dual_weight


def test_dual_weight_examples():
    a6 = build_root_system("A", 6)
    assert dual_weight(a6, Weight.fundamental(6, 3)) == Weight.fundamental(6, 4)
    assert dual_weight(a6, Weight.of(1, 0, 0, 0, 0, 1)) == Weight.of(1, 0, 0, 0, 0, 1)
    f4 = build_root_system("F", 4)
    assert dual_weight(f4, Weight.of(1, 2, 0, 3)) == Weight.of(1, 2, 0, 3)


def test_dual_weight_rank_mismatch_rejected():
    with pytest.raises(ValueError, match="rank mismatch"):
        dual_weight(build_root_system("A", 4), Weight.of(1, 0))


@pytest.mark.parametrize("letter,rank", [("A", 5), ("D", 5), ("D", 6), ("E", 6), ("B", 4)])
@given(data=st.data())
def test_dual_weight_is_a_dimension_preserving_involution(letter, rank, data):
    rs = build_root_system(letter, rank)
    coeffs = data.draw(st.tuples(*[st.integers(0, 3)] * rank))
    w = Weight(coeffs)
    d = dual_weight(rs, w)
    assert dual_weight(rs, d) == w
    assert weyl_dimension(rs, d) == weyl_dimension(rs, w)


def test_e6_dual_exchanges_the_two_minimal_representations():
    e6 = build_root_system("E", 6)
    assert dual_weight(e6, Weight.fundamental(6, 1)) == Weight.fundamental(6, 6)
    assert dual_weight(e6, Weight.fundamental(6, 2)) == Weight.fundamental(6, 2)


# ---------------------------------------------------------------------------
# homogeneous_dimension / levi_dimension


def test_homogeneous_dimension_examples():
    assert homogeneous_dimension(build_root_system("C", 3), {2}) == 7
    assert homogeneous_dimension(build_root_system("F", 4), {4}) == 15
    assert homogeneous_dimension(build_root_system("A", 6), {4}) == 12
    assert homogeneous_dimension(build_root_system("D", 6), {6}) == 15


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_full_flag_dimension_is_the_positive_root_count(letter, rank):
    rs = build_root_system(letter, rank)
    assert homogeneous_dimension(rs, set(range(1, rank + 1))) == len(rs.positive_roots)


def test_homogeneous_dimension_rejects_bad_crossings():
    rs = build_root_system("A", 4)
    with pytest.raises(ValueError, match="nonempty"):
        homogeneous_dimension(rs, set())
    with pytest.raises(ValueError, match="out of range"):
        homogeneous_dimension(rs, {0, 5})


def test_levi_dimension_examples():
    a6 = build_root_system("A", 6)
    assert levi_dimension(a6, {4}, Weight.of(0, 0, 1, -3, 0, 0)) == 4
    assert levi_dimension(a6, {4}, Weight.of(0, 0, 0, -3, 0, 0)) == 1
    assert levi_dimension(a6, {4}, Weight.of(1, 0, 0, 0, 0, 1)) == 12


def test_levi_dimension_rejects_negative_uncrossed_coefficient():
    a6 = build_root_system("A", 6)
    with pytest.raises(ValueError, match="uncrossed node 3"):
        levi_dimension(a6, {4}, Weight.of(0, 0, -1, 0, 0, 0))

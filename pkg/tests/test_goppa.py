"""Tests for code construction: matrices, duality, and exact distance."""

import itertools
import random

import pytest

from edgoppa.curves import EdwardsCurve
from edgoppa.errors import (
    BudgetExceededError,
    InvalidPointError,
    NotEnoughPointsError,
    RankDeficientError,
)
from edgoppa.fields import GF
from edgoppa.goppa import (
    GoppaCode,
    build_code,
    build_generator,
    code_from_json,
    code_to_json,
    designed_distance,
    encode,
    matrix_rank,
    min_distance,
    parity_check,
    select_points,
    standard_form,
    syndrome,
)
from edgoppa.riemann_roch import make_divisor, parse_divisor

GOLDEN_G = [
    [1, 1, 1, 1, 1, 1, 1],
    [16, 5, 5, 4, 1, 11, 4],
    [5, 15, 9, 4, 13, 14, 13],
    [9, 13, 6, 10, 14, 10, 3],
    [8, 4, 13, 16, 16, 9, 16],
]
GOLDEN_H = [
    [7, 3, 1, 13, 9, 1, 0],
    [2, 12, 9, 12, 15, 0, 1],
]
GOLDEN_T = [(5, 8), (5, 9), (6, 3), (6, 14), (8, 5), (8, 12), (9, 5)]


@pytest.fixture
def curve17():
    return EdwardsCurve(GF(17), 10)


@pytest.fixture
def code17(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    T = [curve17.point(x, y) for x, y in GOLDEN_T]
    return build_code(curve17, D, points=T)


def as_ints(M):
    return [[e.to_int() for e in row] for row in M]


# -- point selection ---------------------------------------------------------------


def test_explicit_points_accepted(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    T = [curve17.point(x, y) for x, y in GOLDEN_T]
    assert select_points(curve17, D, points=T) == T


def test_point_in_support_rejected(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    with pytest.raises(InvalidPointError):
        select_points(curve17, D, points=[curve17.point(2, 15)])


def test_indeterminate_point_rejected(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    # (0,16) makes the odd ladder function 1/x blow up
    with pytest.raises(InvalidPointError):
        select_points(curve17, D, points=[curve17.point(0, 16)])


def test_duplicate_point_rejected(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    P = curve17.point(5, 8)
    with pytest.raises(InvalidPointError):
        select_points(curve17, D, points=[P, P])


def test_first_valid_policy_is_deterministic(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    got = select_points(curve17, D, count=7)
    again = select_points(curve17, D, count=7)
    assert got == again
    assert len(set(got)) == 7


def test_not_enough_points(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    with pytest.raises(NotEnoughPointsError):
        select_points(curve17, D, count=100)


def test_select_needs_exactly_one_policy(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    with pytest.raises(ValueError):
        select_points(curve17, D)
    with pytest.raises(ValueError):
        select_points(curve17, D, count=3, points=[curve17.point(5, 8)])


# -- golden matrices -----------------------------------------------------------------


def test_generator_matches_golden(code17):
    assert as_ints(code17.generator) == GOLDEN_G


def test_generator_degree_one_divisor(curve17):
    D = make_divisor(curve17, [(curve17.point(5, 8), 1)])
    T = select_points(curve17, D, count=7)
    G = build_generator(curve17, D, T)
    assert as_ints(G) == [[1] * 7]


def test_standard_form_golden(code17):
    perm, G_std = standard_form(code17.generator)
    assert perm == list(range(7))
    ints = as_ints(G_std)
    for i in range(5):
        for j in range(5):
            assert ints[i][j] == (1 if i == j else 0)
    assert [row[5:] for row in ints] == [[10, 15], [14, 5], [16, 8], [4, 5], [8, 2]]


def test_standard_form_fixed_point(code17):
    perm, G_std = standard_form(code17.generator_std)
    assert perm == list(range(7))
    assert as_ints(G_std) == as_ints(code17.generator_std)


def test_standard_form_rank_deficient(curve17):
    F = curve17.field
    row = [F(1), F(2), F(3)]
    dup = [row, [2 * e for e in row]]
    with pytest.raises(RankDeficientError) as err:
        standard_form(dup)
    assert err.value.rank == 1


def test_standard_form_column_pivoting():
    # leading zero column forces a column swap
    F = GF(17)
    G = [[F(0), F(1), F(2)]]
    perm, G_std = standard_form(G)
    assert perm[0] != 0
    assert G_std[0][0] == F.one


def test_parity_check_golden(code17):
    assert as_ints(code17.parity) == GOLDEN_H


def test_parity_check_annihilates_generator(code17):
    F = code17.field
    for grow in code17.generator_std:
        for hrow in code17.parity:
            acc = sum((a * b for a, b in zip(grow, hrow)), F.zero)
            assert acc.is_zero()


def test_parity_check_of_zero_m():
    F = GF(17)
    G_std = [[F.one, F.zero, F.zero, F.zero]]
    H = parity_check(G_std)
    ints = as_ints(H)
    assert ints == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_matrix_ranks(code17):
    assert matrix_rank(code17.generator) == code17.k
    assert matrix_rank(code17.parity) == code17.n - code17.k


def test_unpermuting_standard_form_preserves_row_space(code17):
    # inverse-permute G_std columns, then its row space equals that of G
    k, n = code17.k, code17.n
    inv = [0] * n
    for j, orig in enumerate(code17.perm):
        inv[orig] = j
    unperm = [[row[inv[j]] for j in range(n)] for row in code17.generator_std]
    stacked = code17.generator + unperm
    assert matrix_rank(stacked) == k


# -- encode / syndrome ---------------------------------------------------------------


def test_encode_zero_and_units(code17):
    assert all(e.is_zero() for e in encode(code17, [0] * 5))
    e1 = encode(code17, [1, 0, 0, 0, 0])
    assert [v.to_int() for v in e1] == GOLDEN_G[0]
    e3 = encode(code17, [0, 0, 1, 0, 0])
    assert [v.to_int() for v in e3] == [5, 15, 9, 4, 13, 14, 13]


def test_encode_length_check(code17):
    with pytest.raises(ValueError):
        encode(code17, [1, 2, 3])


def test_syndrome_of_codewords_is_zero(code17):
    rng = random.Random(3)
    for _ in range(200):
        msg = [rng.randrange(17) for _ in range(5)]
        assert all(s.is_zero() for s in syndrome(code17, encode(code17, msg)))


def test_syndrome_of_unit_error(code17):
    word = encode(code17, [1, 2, 3, 4, 5])
    word[6] = word[6] + 1
    s = syndrome(code17, word)
    # syndrome equals the H column of the flipped position
    assert [v.to_int() for v in s] == [GOLDEN_H[0][6], GOLDEN_H[1][6]]


def test_syndrome_zero_word(code17):
    assert all(s.is_zero() for s in syndrome(code17, [0] * 7))


def test_syndrome_length_check(code17):
    with pytest.raises(ValueError):
        syndrome(code17, [0] * 6)


# -- distance ---------------------------------------------------------------------


def test_designed_distance(code17, curve17):
    assert designed_distance(code17.divisor, 7) == 2
    assert code17.d_designed == 2
    D = parse_divisor("(2,15) + 3O", curve17)
    assert designed_distance(D, 10) == 6
    assert designed_distance(D, 4) == 0


def test_min_distance_golden(code17):
    assert min_distance(code17) == 3


def test_min_distance_matches_naive_enumeration(curve17):
    # oracle: direct product-loop enumeration with element arithmetic
    D = parse_divisor("(2,15) + 2O", curve17)
    code = build_code(curve17, D, count=6)
    F = curve17.field
    best = code.n + 1
    for msg in itertools.product(range(17), repeat=code.k):
        if not any(msg):
            continue
        word = encode(code, list(msg))
        w = sum(1 for e in word if not e.is_zero())
        best = min(best, w)
    assert min_distance(code, early_exit=False) == best
    assert min_distance(code) == best  # the early exit is an optimization only


def test_min_distance_repetition_row(curve17):
    D = make_divisor(curve17, [(curve17.point(5, 8), 1)])
    code = build_code(curve17, D, count=7)
    assert code.k == 1
    assert min_distance(code) == 7


def test_min_distance_budget(code17):
    with pytest.raises(BudgetExceededError):
        min_distance(code17, budget=1000)


def test_min_distance_generic_path_extension_field():
    # GF(9): exercise the non-vectorized route end to end (d = 5 has 12 points)
    F = GF(3, 2)
    curve = EdwardsCurve(F, F(5))
    assert curve.complete
    points = curve.affine_points()
    assert len(points) == 12
    D = make_divisor(curve, [(points[-1], 2)])
    code = build_code(curve, D, count=5)
    got = min_distance(code, early_exit=False)
    # oracle: plain enumeration over all messages
    best = code.n + 1
    elems = list(F.elements())
    for msg in itertools.product(elems, repeat=code.k):
        if all(e.is_zero() for e in msg):
            continue
        w = sum(1 for e in encode(code, list(msg)) if not e.is_zero())
        best = min(best, w)
    assert got == best
    assert got >= code.d_designed


def test_distance_certificate_columns(code17):
    """Pairs of H columns are independent; some triple is dependent (d = 3)."""
    F = code17.field
    cols = [[row[j] for row in code17.parity] for j in range(code17.n)]
    for c1, c2 in itertools.combinations(cols, 2):
        assert matrix_rank([c1, c2]) == 2
    assert any(
        matrix_rank([c1, c2, c3]) < 3
        for c1, c2, c3 in itertools.combinations(cols, 3)
    )


def test_goppa_and_singleton_bounds_random_codes():
    rng = random.Random(99)
    checked = 0
    while checked < 12:
        p = rng.choice([5, 13, 17])
        F = GF(p)
        d = F(rng.randrange(2, p))
        if d.is_square():
            continue
        curve = EdwardsCurve(F, d)
        points = curve.affine_points()
        delta = rng.randint(1, 3)
        base = rng.choice(points)
        D = make_divisor(curve, [(base, delta)])
        hi = min(10, len(points) - 2)
        if hi < delta + 1:
            continue
        n = rng.randint(delta + 1, hi)
        try:
            code = build_code(curve, D, count=n)
        except (NotEnoughPointsError, RankDeficientError):
            continue
        dist = min_distance(code, early_exit=False)
        assert dist >= code.n - delta
        assert dist <= code.n - code.k + 1
        checked += 1


@pytest.mark.parametrize("base_xy", [(0, 16), (1, 0), (16, 0)])
@pytest.mark.parametrize("extra_neutral", [1, 2])
def test_goppa_bound_with_special_first_steps(curve17, base_xy, extra_neutral):
    # divisors anchored at the order-2 and order-4 points exercise the
    # 1/x and axis-pole rows of the generator
    base = curve17.point(*base_xy)
    D = make_divisor(curve17, [(base, 1), (curve17.neutral(), extra_neutral)])
    delta = 1 + extra_neutral
    code = build_code(curve17, D, count=6)
    assert code.k == delta
    dist = min_distance(code, early_exit=False)
    assert code.n - delta <= dist <= code.n - code.k + 1


def test_generator_rows_for_neutral_anchored_divisor(curve17):
    # D = 3O reduces to the neutral point: basis skips the degree-one step
    D = parse_divisor("3O", curve17)
    code = build_code(curve17, D, count=6)
    assert code.k == 3
    assert [e.to_int() for e in code.generator[0]] == [1] * 6
    dist = min_distance(code, early_exit=False)
    assert code.n - 3 <= dist <= code.n - code.k + 1


def test_encode_rejects_foreign_field_elements(code17):
    from edgoppa.errors import FieldMismatchError

    foreign = GF(13)(1)
    with pytest.raises(FieldMismatchError):
        encode(code17, [foreign, 0, 0, 0, 0])


def test_parity_check_square_generator():
    # n = k leaves no parity rows
    F = GF(17)
    G_std = [[F.one, F.zero], [F.zero, F.one]]
    assert parity_check(G_std) == []


# -- artifact serialization -----------------------------------------------------------


def test_code_json_round_trip(code17):
    data = code_to_json(code17)
    again = code_from_json(data)
    assert code_to_json(again) == data
    assert as_ints(again.generator) == GOLDEN_G
    assert again.perm == list(range(7))
    msg = [3, 1, 4, 1, 5]
    assert encode(again, msg) == encode(code17, msg)


def test_code_json_shape(code17):
    data = code_to_json(code17)
    assert data["field"] == {"p": 17, "t": 1, "modulus": [0, 1]}
    assert data["curve"]["d"] == 10
    assert data["points"][0] == "(5,8)"
    assert data["G"] == GOLDEN_G
    assert data["H"] == GOLDEN_H
    assert data["d_designed"] == 2
    assert data["d_exact"] is None


# -- decoding (test utility only) ------------------------------------------------------


def nearest_codeword(code: GoppaCode, word):
    """Brute-force nearest-codeword decode; exponential, test use only."""
    F = code.field
    y = [F.element(v) for v in word]
    best, best_msg = None, None
    for msg in itertools.product(range(F.q), repeat=code.k):
        c = encode(code, list(msg))
        dist = sum(1 for a, b in zip(c, y) if a != b)
        if best is None or dist < best:
            best, best_msg = dist, list(msg)
    return best_msg, best


def test_nearest_codeword_decodes_single_errors(curve17):
    # a short high-distance code: degree 2 divisor, n = 6, d >= 4
    D = parse_divisor("(5,8) + O", curve17)
    code = build_code(curve17, D, count=6)
    assert min_distance(code) >= 4  # corrects 1 error comfortably
    rng = random.Random(17)
    for _ in range(3):
        msg = [rng.randrange(17) for _ in range(code.k)]
        word = encode(code, msg)
        pos = rng.randrange(code.n)
        word[pos] = word[pos] + rng.randrange(1, 17)
        decoded, dist = nearest_codeword(code, word)
        assert decoded == msg
        assert dist == 1

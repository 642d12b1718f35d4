"""Acceptance suite.

One test per numbered criterion; each runs at its stated tolerance,
prints a single pass/fail line (visible with pytest -s, and in the
failure report otherwise), and enforces its runtime limit.
"""

import itertools
import random
import time

import pytest

from edgoppa.birational import canonical_pair, to_edwards, to_weierstrass
from edgoppa.curves import EdwardsCurve
from edgoppa.errors import (
    IndeterminateError,
    NotEnoughPointsError,
    RankDeficientError,
)
from edgoppa.fields import GF
from edgoppa.goppa import (
    build_code,
    designed_distance,
    matrix_rank,
    min_distance,
    parity_check,
    standard_form,
)
from edgoppa.riemann_roch import (
    Ladder,
    evaluate_basis,
    evaluate_function,
    ladder_values,
    make_divisor,
    parse_divisor,
    reduce_divisor,
    riemann_roch_basis,
)

GOLDEN_POINTS = {
    (0, 1), (0, 16), (1, 0), (2, 2), (2, 15), (3, 6), (3, 11), (5, 8),
    (5, 9), (6, 3), (6, 14), (8, 5), (8, 12), (9, 5), (9, 12), (11, 3),
    (11, 14), (12, 8), (12, 9), (14, 6), (14, 11), (15, 2), (15, 15), (16, 0),
}
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


def _finish(num, name, failures, started, limit):
    elapsed = time.perf_counter() - started
    ok = not failures
    print(f"[acceptance] criterion {num} ({name}): "
          f"{'PASS' if ok else 'FAIL'} in {elapsed:.2f}s (limit {limit}s)")
    assert ok, f"criterion {num} failed: {failures[:5]}"
    assert elapsed < limit, f"criterion {num} took {elapsed:.2f}s, limit {limit}s"


@pytest.fixture(scope="module")
def curve17():
    return EdwardsCurve(GF(17), 10)


@pytest.fixture(scope="module")
def code17(curve17):
    D = parse_divisor("(2,15) + 4O", curve17)
    T = [curve17.point(x, y) for x, y in GOLDEN_T]
    return build_code(curve17, D, points=T)


def test_criterion_1_point_census(curve17):
    started = time.perf_counter()
    failures = []
    points = curve17.affine_points()
    got = {(P.x.to_int(), P.y.to_int()) for P in points}
    if len(points) != 24:
        failures.append(f"count {len(points)} != 24")
    if got != GOLDEN_POINTS:
        failures.append(f"set mismatch: {got ^ GOLDEN_POINTS}")
    _finish(1, "point census", failures, started, 1.0)


def test_criterion_2_golden_generator(code17):
    started = time.perf_counter()
    got = [[e.to_int() for e in row] for row in code17.generator]
    failures = []
    for i, (grow, want) in enumerate(zip(got, GOLDEN_G)):
        if grow != want:
            failures.append(f"row {i}: {grow} != {want}")
    if len(got) != 5 or len(got[0]) != 7:
        failures.append(f"shape {len(got)}x{len(got[0])} != 5x7")
    _finish(2, "golden generator matrix", failures, started, 1.0)


def test_criterion_3_golden_parity_check(code17):
    started = time.perf_counter()
    failures = []
    perm, G_std = standard_form(code17.generator)
    H = parity_check(G_std)
    got = [[e.to_int() for e in row] for row in H]
    if got != GOLDEN_H:
        failures.append(f"H mismatch: {got}")
    F = code17.field
    for grow in G_std:
        for hrow in H:
            if not sum((a * b for a, b in zip(grow, hrow)), F.zero).is_zero():
                failures.append("G_std * H^T != 0")
    _finish(3, "golden parity check", failures, started, 1.0)


def test_criterion_4_distance_and_mds(code17):
    started = time.perf_counter()
    failures = []
    d_exact = min_distance(code17)
    if d_exact != 3:
        failures.append(f"d_exact {d_exact} != 3")
    d_low = designed_distance(code17.divisor, code17.n)
    if d_low != 2:
        failures.append(f"designed {d_low} != 2")
    singleton = code17.n - code17.k + 1
    if d_exact != singleton:
        failures.append(f"not MDS: {d_exact} != {singleton}")
    _finish(4, "distance 3 and MDS", failures, started, 30.0)


def test_criterion_5_basis_rank_property():
    started = time.perf_counter()
    rng = random.Random(20250801)
    failures = []
    curves = {}
    done = 0
    while done < 200:
        p = rng.choice([5, 13, 17])
        d = rng.randrange(2, p)
        key = (p, d)
        if key not in curves:
            F = GF(p)
            if F(d).is_square():
                curves[key] = None
            else:
                curve = EdwardsCurve(F, d)
                curves[key] = (curve, curve.affine_points())
        if curves[key] is None:
            continue
        curve, points = curves[key]
        P = rng.choice(points)
        delta = rng.randint(1, 6)
        basis = riemann_roch_basis(curve, P, delta - 1)
        valid = []
        for Q in points:
            try:
                valid.append(evaluate_basis(curve, basis, Q))
            except IndeterminateError:
                continue
        if len(valid) < delta + 2:
            continue
        cols = rng.sample(valid, delta + 2)
        M = [[cols[j][i] for j in range(delta + 2)] for i in range(delta)]
        r = matrix_rank(M)
        if r != delta:
            failures.append(f"p={p} d={d} P={P!r} delta={delta}: rank {r}")
        done += 1
    _finish(5, f"basis rank over {done} instances", failures, started, 30.0)


def test_criterion_6_goppa_bound_property():
    started = time.perf_counter()
    rng = random.Random(6174)
    failures = []
    done = 0
    while done < 50:
        p = rng.choice([5, 13, 17])
        F = GF(p)
        d = F(rng.randrange(2, p))
        if d.is_square():
            continue
        curve = EdwardsCurve(F, d)
        points = curve.affine_points()
        max_delta = 1
        while p ** (max_delta + 1) <= 10**6 and max_delta < 6:
            max_delta += 1
        delta = rng.randint(1, max_delta)
        # one or two support points, multiplicities summing to delta
        if delta > 1 and rng.random() < 0.5:
            split = rng.randint(1, delta - 1)
            terms = [(rng.choice(points), split), (rng.choice(points), delta - split)]
        else:
            terms = [(rng.choice(points), delta)]
        D = make_divisor(curve, terms)
        if D.degree != delta:  # merged terms may cancel differently
            continue
        hi = min(10, len(points) - 2)
        if hi < delta + 1:
            continue
        n = rng.randint(delta + 1, hi)
        try:
            code = build_code(curve, D, count=n)
        except (NotEnoughPointsError, RankDeficientError):
            continue
        dist = min_distance(code, budget=10**6, early_exit=False)
        if dist < n - delta:
            failures.append(f"p={p} delta={delta} n={n}: d={dist} < {n - delta}")
        if dist > n - code.k + 1:
            failures.append(f"p={p} delta={delta} n={n}: d={dist} beyond Singleton")
        done += 1
    _finish(6, f"Goppa bound over {done} codes", failures, started, 300.0)


def test_criterion_7_birational_correctness(curve17):
    started = time.perf_counter()
    failures = []
    pair = canonical_pair(curve17)
    E, W = pair.edwards, pair.weierstrass

    for P in E.affine_points():
        if to_edwards(pair, to_weierstrass(pair, P)) != P:
            failures.append(f"beta(alpha({P!r})) != {P!r}")

    w_points = W.affine_points() + [W.infinity()]
    exceptional = set(pair.omega1_fiber) | set(pair.omega2_fiber)
    for Q in w_points:
        if Q in exceptional:
            continue
        if to_weierstrass(pair, to_edwards(pair, Q)) != Q:
            failures.append(f"alpha(beta({Q!r})) != {Q!r}")

    affine_w = [Q for Q in W.affine_points() if Q not in exceptional]
    for P, Q in itertools.product(affine_w, repeat=2):
        S = W.add(P, Q)
        if S.is_infinity or S in exceptional:
            continue
        if to_edwards(pair, S) != E.add(to_edwards(pair, P), to_edwards(pair, Q)):
            failures.append(f"homomorphism fails at {P!r} + {Q!r}")
    _finish(7, "birational round trips + homomorphism", failures, started, 10.0)


def test_criterion_8_incremental_cost(curve17):
    started = time.perf_counter()
    failures = []
    F = curve17.field
    for k in (4, 8):
        basis = riemann_roch_basis(curve17, curve17.point(2, 15), k)
        tail = [fn for fn in basis if isinstance(fn, Ladder)]
        for Q in curve17.affine_points():
            try:
                direct = [evaluate_function(curve17, fn, Q) for fn in basis]
            except IndeterminateError:
                continue
            if evaluate_basis(curve17, basis, Q) != direct:
                failures.append(f"incremental != direct at {Q!r} (k={k})")
            # budget: after the head values and (y+1)/x are in hand, each
            # remaining basis element costs at most one multiplication
            w = (Q.y + F.one) / Q.x
            F.reset_counters()
            incr = ladder_values(curve17, tail, Q, w=w)
            muls = F.counters().mul
            if muls > len(tail):
                failures.append(f"{muls} muls for {len(tail)} ladder values at {Q!r}")
            if incr != direct[len(basis) - len(tail):]:
                failures.append(f"ladder values mismatch at {Q!r} (k={k})")
    _finish(8, "one multiplication per basis element", failures, started, 30.0)


def test_criterion_9_four_torsion(curve17):
    started = time.perf_counter()
    failures = []
    O = curve17.neutral()
    Op = curve17.point(0, 16)
    H = curve17.point(1, 0)
    Hp = curve17.point(16, 0)
    if curve17.add(H, H) != Op:
        failures.append("2H != O'")
    if curve17.add(Op, Op) != O:
        failures.append("2O' != O")
    if curve17.scalar_mul(4, H) != O:
        failures.append("4H != O")

    def order(P):
        acc = P
        for m in range(1, 25):
            if acc == O:
                return m
            acc = curve17.add(acc, P)
        return None

    if [order(P) for P in (O, Op, H, Hp)] != [1, 2, 4, 4]:
        failures.append(f"orders {[order(P) for P in (O, Op, H, Hp)]} != [1, 2, 4, 4]")
    _finish(9, "cyclic four-torsion structure", failures, started, 1.0)

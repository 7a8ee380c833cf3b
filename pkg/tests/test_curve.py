import pytest

from supersingular.curve import (
    INFINITY,
    AffinePoint,
    CurveParams,
    FieldTooLarge,
    SingularCurve,
    add_points,
    base_change,
    count_points,
    is_nonsingular,
    is_on_curve,
    is_supersingular_by_trace,
    j_invariant,
    negate,
    points,
    scalar_mul,
    trace_of_frobenius,
)
from supersingular.ring import find_irreducible


def brute_count(E):
    """#E by trying every (x, y) pair."""
    F = E.field
    elems = list(F.elements())
    return 1 + sum(1 for x in elems for y in elems if y * y == E.rhs(x))


def all_curves(F):
    for A in F.elements():
        for B in F.elements():
            if is_nonsingular(A, B):
                yield CurveParams(F, A, B)


def test_nonsingular_examples(F5):
    assert not is_nonsingular(F5(0), F5(0))
    assert is_nonsingular(F5(1), F5(0))
    assert not is_nonsingular(F5(2), F5(2))  # 4*8 + 27*4 = 140
    with pytest.raises(SingularCurve):
        CurveParams(F5, F5(0), F5(0))


def test_add_points_examples(F5):
    E = CurveParams(F5, F5(1), F5(0))
    O = INFINITY
    P = AffinePoint(F5(0), F5(0))
    assert add_points(P, P, E) is O
    assert add_points(AffinePoint(F5(2), F5(0)), AffinePoint(F5(3), F5(0)), E) == P
    assert add_points(O, P, E) == P
    assert scalar_mul(2, P, E) is O
    assert scalar_mul(0, P, E) is O


@pytest.mark.parametrize("A,B,n", [(0, 1, 6), (1, 0, 4)])
def test_count_points_examples(F5, A, B, n):
    E = CurveParams(F5, F5(A), F5(B))
    assert count_points(E) == n == brute_count(E)
    assert trace_of_frobenius(E) == 6 - n


def test_count_points_f7(F7):
    E = CurveParams(F7, F7(1), F7(0))
    assert count_points(E) == 8 == brute_count(E)


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)])
def test_count_points_matches_brute_force(p, k, rng):
    F = find_irreducible(p, k)
    curves = list(all_curves(F))
    for E in rng.sample(curves, min(40, len(curves))):
        n = count_points(E)
        assert n == brute_count(E) == len(list(points(E)))
        assert (F.order + 1 - n) ** 2 <= 4 * F.order


def test_count_limit():
    F = find_irreducible(1009, 2)
    with pytest.raises(FieldTooLarge):
        count_points(CurveParams(F, F(1), F(1)))


@pytest.mark.parametrize("p,k", [(5, 1), (7, 1), (5, 2), (11, 1)])
def test_group_laws(p, k, rng):
    F = find_irreducible(p, k)
    curves = list(all_curves(F))
    for E in rng.sample(curves, 10):
        pts = list(points(E))
        n = len(pts)
        assert all(is_on_curve(P, E) for P in pts)
        for _ in range(10):
            P, Q, S = (rng.choice(pts) for _ in range(3))
            assert add_points(P, Q, E) == add_points(Q, P, E)
            assert add_points(add_points(P, Q, E), S, E) == add_points(P, add_points(Q, S, E), E)
            assert add_points(P, negate(P), E) is INFINITY
            assert scalar_mul(n, P, E) is INFINITY
            assert scalar_mul(-3, P, E) == negate(scalar_mul(3, P, E))


@pytest.mark.parametrize("p", [3, 5])
def test_order_p_points_over_quadratic_extension(p):
    F = find_irreducible(p, 2)
    for E in all_curves(F):
        n = count_points(E)
        has = any(P is not INFINITY and scalar_mul(p, P, E) is INFINITY for P in points(E))
        ss = is_supersingular_by_trace(E)
        assert has == (n % p == 0)
        if has:
            assert not ss
        if ss:
            assert not has


def test_ordinary_curve_without_rational_p_torsion(F25):
    # ordinary, yet no point of order 5 over F_25: 5 does not divide #E
    E = CurveParams(F25, F25(1), F25(0))
    assert count_points(E) == 32
    assert not is_supersingular_by_trace(E)


def test_supersingular_examples(F5):
    assert is_supersingular_by_trace(CurveParams(F5, F5(0), F5(1)))
    assert not is_supersingular_by_trace(CurveParams(F5, F5(1), F5(0)))


def test_supersingularity_is_stable_under_base_change():
    for p in (5, 7, 11):
        Fp, Fq = find_irreducible(p, 1), find_irreducible(p, 2)
        for E in all_curves(Fp):
            assert is_supersingular_by_trace(E) == is_supersingular_by_trace(base_change(E, Fq))


def test_supersingular_locus_depends_only_on_j():
    F = find_irreducible(7, 1)
    by_j = {}
    for E in all_curves(F):
        by_j.setdefault(j_invariant(E), set()).add(is_supersingular_by_trace(E))
    assert all(len(v) == 1 for v in by_j.values())


def test_points_order(F5):
    E = CurveParams(F5, F5(1), F5(0))
    pts = list(points(E))
    assert pts[0] is INFINITY
    xs = [P.x.index for P in pts[1:]]
    assert xs == sorted(xs)

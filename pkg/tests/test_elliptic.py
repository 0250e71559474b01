import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isofib.elliptic import (CurveAutomorphism, WeierstrassCurve, aut_group, aut_order, curve_with_j,
                             frobenius_kernel, grid_curve, j_regime, parse_curve, solve_automorphisms,
                             torsion_structure, verify_automorphism)
from isofib.errors import InvalidInput, SingularCurve
from isofib.ffpoly import field
from isofib.groupscheme import Alpha, Etale, GroupSchemeSpec, Mu, SSKernel


def naive_count(p, a):
    """#E(F_p) by looping over all (x, y) with plain integer arithmetic."""
    a1, a2, a3, a4, a6 = a
    n = 1
    for x, y in itertools.product(range(p), repeat=2):
        if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
            n += 1
    return n


def prime_field_curves(p, limit=None):
    ctx = field(p)
    out = []
    for a in itertools.product(range(p), repeat=5):
        try:
            out.append((a, WeierstrassCurve(ctx, *a)))
        except SingularCurve:
            continue
        if limit and len(out) >= limit:
            break
    return out


@pytest.mark.parametrize("p", [2, 3, 5])
def test_point_count_matches_naive_loop(p):
    for a, E in prime_field_curves(p, limit=400):
        assert E.point_count() == naive_count(p, a)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_point_count_matches_enumeration_over_extensions(p, k):
    ctx = field(p, k)
    for j in range(0, ctx.q, max(1, ctx.q // 6)):
        E = curve_with_j(ctx, ctx.from_code(j))
        assert E.point_count() == sum(1 for _ in E.points())


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
def test_supersingular_iff_trace_divisible_by_p(p, k):
    ctx = field(p, k)
    for j in ctx.elements():
        E = curve_with_j(ctx, j)
        assert E.is_supersingular() == (E.trace_of_frobenius() % p == 0)


def test_known_supersingular_models():
    assert parse_curve("y^2+y=x^3; p=2").is_supersingular()
    assert parse_curve("p=3; a=[0,0,0,-1,0]").is_supersingular()
    assert parse_curve("p=3; a=[0,0,0,1,0]").is_supersingular()  # y^2 = x^3 + x over F_3
    assert parse_curve("p=5; a=[0,0,0,0,1]").is_supersingular()
    assert not parse_curve("p=5; a=[0,0,0,1,1]").is_supersingular()


def test_hasse_invariant_needs_odd_p():
    with pytest.raises(InvalidInput):
        parse_curve("y^2+y=x^3; p=2").hasse_invariant()


def test_singular_curve_is_rejected():
    with pytest.raises(SingularCurve):
        parse_curve("p=5; a=[0,0,0,0,0]")


@pytest.mark.parametrize("text", ["p=5; a=[0,0,0,1,1]", "p=2; a=[1,0,0,0,1]", "p=3; k=2; a=[0,1,0,0,[1,1]]"])
def test_curve_text_round_trip(text):
    E = parse_curve(text)
    assert parse_curve(E.to_text()) == E


# -- group law ---------------------------------------------------------------------

CURVES = ["p=5; a=[0,0,0,1,1]", "p=7; a=[0,0,0,0,6]", "p=2; a=[1,0,0,0,1]", "p=3; k=2; a=[0,1,0,0,1]",
          "y^2+y=x^3; p=2"]


@settings(max_examples=60)
@given(st.sampled_from(CURVES), st.data())
def test_group_law_is_associative_and_has_inverses(text, data):
    E = parse_curve(text)
    pts = list(E.points())
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert E.contains(E.add(P, Q))
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(P, E.neg(P)) is None


@pytest.mark.parametrize("text", CURVES)
def test_group_order_kills_every_point(text):
    E = parse_curve(text)
    n = E.point_count()
    assert all(E.mul(n, P) is None for P in E.points())


@settings(max_examples=40)
@given(st.sampled_from([5, 7, 11]), st.data())
def test_coordinate_change_preserves_j(p, data):
    ctx = field(p)
    a = data.draw(st.lists(st.integers(0, p - 1), min_size=5, max_size=5))
    try:
        E = WeierstrassCurve(ctx, *a)
    except SingularCurve:
        return
    u = data.draw(st.integers(1, p - 1))
    r, s, t = (data.draw(st.integers(0, p - 1)) for _ in range(3))
    E2 = E.transform(u, r, s, t)
    assert E2.j_invariant() == E.j_invariant()
    assert E2.discriminant() * ctx(u) ** 12 == E.discriminant()
    assert E2.point_count() == E.point_count()
    short, _ = E.short_form()
    assert short.a1.is_zero() and short.a2.is_zero() and short.a3.is_zero()


# -- automorphisms -----------------------------------------------------------------

ORDER_TABLE = {
    (2, "0"): 24, (2, "1728"): 24, (2, "generic"): 2,
    (3, "0"): 12, (3, "1728"): 12, (3, "generic"): 2,
    (5, "0"): 6, (5, "1728"): 4, (5, "generic"): 2,
    (7, "0"): 6, (7, "1728"): 4, (7, "generic"): 2,
    (13, "0"): 6, (13, "1728"): 4, (13, "generic"): 2,
}


@pytest.mark.parametrize("p,j", sorted(ORDER_TABLE))
def test_aut_group_orders_and_generators(p, j):
    desc = aut_group(grid_curve(p, j))
    assert desc.order == ORDER_TABLE[p, j]
    for g in desc.generators:
        ok, n = verify_automorphism(desc.curve, g)
        assert ok and n == g.order()
    assert max(g.order() for g in desc.generators) == max(desc.maximal_abelian_orders)


@pytest.mark.parametrize("p,j,k", [(5, "0", 2), (5, "1728", 1), (7, "0", 1), (7, "1728", 2),
                                   (3, "0", 2), (2, "0", 2), (11, "generic", 1)])
def test_solver_finds_the_whole_group_over_a_splitting_field(p, j, k):
    E = grid_curve(p, j).base_change(field(p, k))
    sols = solve_automorphisms(E)
    assert len(sols) == aut_order(p, j_regime(E))
    for g in sols:
        assert verify_automorphism(E, g)[0]


def test_non_automorphism_is_rejected():
    E = parse_curve("p=5; a=[0,0,0,1,1]")
    ok, n = verify_automorphism(E, CurveAutomorphism(E, 2))
    assert not ok and n == 0


def test_composition_and_inverse():
    E = grid_curve(3, "0").base_change(field(3, 2))
    sols = solve_automorphisms(E)
    for g, h in itertools.product(sols[:6], repeat=2):
        assert g.compose(h) in sols
        assert g.compose(g.inverse()).is_identity()


# -- fixed points of group automorphisms ---------------------------------------------

# deg(1 - gamma) = |1 - zeta_n|^2 is the order of the fixed subgroup scheme
KERNEL_ORDER = {2: 4, 3: 3, 4: 2, 6: 1}


def _with_order(sols, n):
    return next(g for g in sols if g.order() == n)


@pytest.mark.parametrize("p,j,k", [(5, "generic", 2), (2, "generic", 4), (5, "1728", 2), (7, "0", 2),
                                   (3, "0", 4), (2, "0", 6)])
def test_fixed_subgroup_matches_fixed_point_count(p, j, k):
    from isofib.groupscheme import fixed_subgroup

    E = grid_curve(p, j).base_change(field(p, k))
    points = list(E.points())
    sols = solve_automorphisms(E)
    for n in sorted({g.order() for g in sols} - {1}):
        g = _with_order(sols, n)
        fixed = sum(1 for P in points if g(P) == P)
        spec = fixed_subgroup(E, n)
        assert spec.order() == KERNEL_ORDER[n]
        assert spec.etale_part().order() == fixed


# -- torsion -----------------------------------------------------------------------

def test_torsion_structures():
    ordinary = parse_curve("p=5; a=[0,0,0,1,1]")
    ss = parse_curve("p=5; a=[0,0,0,0,1]")
    assert torsion_structure(ordinary, 2) == GroupSchemeSpec(5, Etale(2) + Etale(2))
    assert torsion_structure(ordinary, 5) == GroupSchemeSpec(5, Etale(5) + [Mu(5)])
    assert torsion_structure(ss, 5) == GroupSchemeSpec(5, [SSKernel(5, 2)])
    assert torsion_structure(ss, 10).order() == 100
    assert frobenius_kernel(ordinary, 1) == GroupSchemeSpec(5, [Mu(5)])
    assert frobenius_kernel(ss, 1) == GroupSchemeSpec(5, [Alpha(5)])
    assert frobenius_kernel(ss, 0).is_trivial()
    with pytest.raises(InvalidInput):
        torsion_structure(ss, 0)


@pytest.mark.parametrize("text,k", [("p=5; a=[0,0,0,1,1]", 4), ("p=5; a=[0,0,0,0,1]", 2),
                                    ("p=3; a=[0,1,0,0,1]", 4)])
def test_reduced_p_torsion_points_bound(text, k):
    # the F_q-rational p-torsion never exceeds the etale part of E[p]
    E = parse_curve(text)
    p = E.p
    Ek = E.base_change(field(p, k))
    fixed = sum(1 for P in Ek.points() if Ek.mul(p, P) is None)
    assert fixed <= torsion_structure(E, p).etale_part().order()
    if E.is_supersingular():
        assert fixed == 1

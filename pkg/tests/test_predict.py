import pytest

from bentkit.cli import DEFAULT_INSTANCES, RULE_BY_FLAG
from bentkit.constructions import NotApplicable, restrict_poly
from bentkit.constructions.predict import RULES, compare_with_oracle, predict, prepare
from bentkit.constructions.restrict import affine_parts, quadratic_parts
from bentkit.func import PFunc, ReducedPoly, parse_function
from bentkit.gf import build_field, parse_elem, parse_field_spec


def instance(thm):
    field, g, F, pts = DEFAULT_INSTANCES[thm]
    ctx = parse_field_spec(field)
    points = tuple(parse_elem(ctx, t) for t in pts.split(","))
    return parse_function(g, ctx), ReducedPoly.parse(F, ctx.p, len(points)), points


def test_restrict_fixed_and_substituted():
    F = ReducedPoly.parse("x1*x2 + x2*x3^2 + x3", 3, 3)
    R = restrict_poly(F, fixed={2: 2})
    assert R == ReducedPoly.parse("x1*x2 + x2*4 + 2", 3, 3)
    S = restrict_poly(F, subs={1: (0, 2, 1)}, fixed={2: 0})
    # x2 = 2 x1 + 1: x1 (2 x1 + 1) = 2 x1^2 + x1
    assert S == ReducedPoly.parse("2*x1^2 + x1", 3, 3)
    with pytest.raises(ValueError):
        restrict_poly(F, fixed={0: 1}, subs={0: (1, 1, 0)})
    with pytest.raises(ValueError):
        restrict_poly(F, fixed={5: 1})


def test_affine_and_quadratic_parts():
    R = ReducedPoly.parse("2*x1 + x3 + 1", 3, 3)
    assert affine_parts(R, [0, 2]) == ({0: 2, 2: 1}, 1)
    with pytest.raises(NotApplicable):
        affine_parts(ReducedPoly.parse("x1*x3", 3, 3), [0, 2])
    Q = ReducedPoly.parse("2*x1^2 + x1*x2 + x2 + 1", 3, 2)
    assert quadratic_parts(Q, 0, 1) == {"a11": 2, "a22": 0, "a12": 1, "F1": 0, "F2": 1, "F0": 1}
    with pytest.raises(NotApplicable):
        quadratic_parts(ReducedPoly.parse("x1^2*x2", 3, 2), 0, 1)


@pytest.mark.parametrize("thm", list(RULE_BY_FLAG))
def test_default_instances_match_oracle(thm):
    g, F, pts = instance(thm)
    cmp = compare_with_oracle(RULE_BY_FLAG[thm], g, F, pts)
    assert cmp.applicable and cmp.equal, cmp.to_json()


def test_every_rule_is_registered():
    assert set(RULE_BY_FLAG.values()) == set(RULES)


def test_statement_sign_disagrees_with_oracle():
    g, F, pts = instance("4.4")
    cmp = compare_with_oracle("quad-pair", g, F, pts, statement_sign=True)
    assert cmp.applicable and not cmp.equal and cmp.first_mismatch == 0


def test_binary_rules_reject_odd_p():
    g, F, pts = instance("4.1")
    for rule in ("disjoint-pairs", "star"):
        cmp = compare_with_oracle(rule, g, F, pts)
        assert not cmp.applicable and cmp.reason


def test_wrong_pattern_is_not_applicable():
    # quad-none needs all A_ij = 0; the 4.4 instance has a coupled pair
    g, F, pts = instance("4.4")
    cmp = compare_with_oracle("quad-none", g, F, pts)
    assert not cmp.applicable
    assert cmp.to_json()["predicted_vs_oracle"] == "mismatch"


def test_non_bent_g_not_applicable(f34):
    with pytest.raises(NotApplicable):
        prepare(PFunc.zero(f34), ReducedPoly.product(3, 2), (1, f34.xi(1)))


def test_product_pair_discriminant_zero_predicts_not_bent():
    ctx = build_field(5, 2)
    g = PFunc.monomial_trace(ctx, 1, 2)
    F = ReducedPoly.product(5, 2)
    found = {True: 0, False: 0}
    for v in range(1, ctx.q):
        cmp = compare_with_oracle("product-pair", g, F, (1, v))
        assert cmp.equal
        found[cmp.predicted_bent] += 1
    assert found[True] and found[False]


def test_unknown_rule():
    g, F, pts = instance("4.1")
    with pytest.raises(KeyError):
        predict("nope", prepare(g, F, pts))


def test_binary_diag_override_does_not_change_verdict():
    g, F, pts = instance("2")
    base = compare_with_oracle("disjoint-pairs", g, F, pts)
    alt = compare_with_oracle("disjoint-pairs", g, F, pts, diag_override=[1, 0, 1, 1])
    assert base.equal and alt.equal

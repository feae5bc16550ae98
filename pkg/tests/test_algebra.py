import pytest

from xnerve import fixtures
from xnerve.algebra import (
    CrossedMonoid,
    FiniteCategory,
    FiniteMonoid,
    XMorphism,
    classify_structure,
    identity_xmorphism,
    validate_crossed_monoid,
    validate_xmorphism,
)
from xnerve.errors import NotComposableError, StructureError


def test_monoid_shape_errors():
    with pytest.raises(StructureError):
        FiniteMonoid(2, 0, ((0,), (1, 0)))  # ragged row
    with pytest.raises(StructureError):
        FiniteMonoid(2, 2, ((0, 1), (1, 0)))  # unit out of range
    with pytest.raises(StructureError):
        FiniteMonoid(2, 0, ((0, 1), (1, 9)))  # entry out of range


def test_category_rejects_partiality_mismatch():
    # compose defined although the endpoints differ
    with pytest.raises(StructureError):
        FiniteCategory(2, (0, 1), (0, 1), (0, 1), ((0, 0), (None, 1)))
    # compose missing although the endpoints match
    with pytest.raises(StructureError):
        FiniteCategory(1, (0,), (0,), (0,), ((None,),))


def test_validate_passes_on_good_fixtures(xm_z2_z3, xm_trivial, xm_z2_z3_twisted, xm_idempotent):
    for xm in (xm_z2_z3, xm_trivial, xm_z2_z3_twisted, xm_idempotent):
        report = validate_crossed_monoid(xm)
        assert report.passed, report.violations


def test_validate_is_deterministic(xm_z2_z3):
    a = validate_crossed_monoid(xm_z2_z3)
    b = validate_crossed_monoid(xm_z2_z3)
    assert a == b


def test_broken_exchange_fails_cr3_only():
    report = validate_crossed_monoid(fixtures.broken_exchange())
    assert not report.passed
    assert report.axioms() == ("cr3",)
    v = report.find("cr3")
    # first witness in (object, a, b) scan order: a=1, b=1 (1+1=2 but 1+(-1)=0)
    assert v.witness == (0, 1, 1)


def _sym3_monoid():
    """S3 as a composition table under 'apply right, then left'."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(a[b[i]] for i in range(3))] for b in perms)
        for a in perms
    )
    return FiniteMonoid(6, 0, table)


def test_noncentral_boundary_fails_cr2_only():
    # boundary lands in the 3-cycles of S3, action is trivial, so
    # equivariance demands a central image and fails; nothing else does.
    xm = fixtures.one_object_crossed_monoid(
        _sym3_monoid(),
        fixtures.cyclic_monoid(3),
        boundary=(0, 1, 2),
    )
    report = validate_crossed_monoid(xm)
    assert report.axioms() == ("cr2",)


def test_boundary_endpoint_mismatch_is_cr1():
    base = fixtures.pair_groupoid_z3()
    xm = CrossedMonoid(
        cat=base.cat,
        fibers=base.fibers,
        action=base.action,
        boundary=((0, 0, 1), base.boundary[1]),  # morphism 1 is not an endo of object 0
    )
    report = validate_crossed_monoid(xm)
    assert report.find("cr1") is not None
    assert report.find("cr1").witness == (0, 2)


def test_nonassociative_mul_is_axiom_violation_not_structural():
    weird = FiniteMonoid(3, 0, ((0, 1, 2), (1, 2, 2), (2, 2, 1)))
    xm = fixtures.one_object_crossed_monoid(fixtures.trivial_monoid(), weird)
    report = validate_crossed_monoid(xm)
    assert not report.passed
    assert "mon.assoc" in report.axioms()


def test_classify_crossed_module_fixtures(xm_z2_z3, xm_trivial):
    cls = classify_structure(xm_z2_z3)
    assert cls.is_crossed_module
    assert cls.fibers_cancellative
    assert cls.action_injective
    trivial = classify_structure(xm_trivial)
    assert trivial.is_crossed_module and trivial.fibers_cancellative and trivial.action_injective


def test_classify_idempotent_fiber(xm_idempotent):
    cls = classify_structure(xm_idempotent)
    assert not cls.is_crossed_module
    assert not cls.fibers_are_groups
    assert not cls.fibers_cancellative
    witnesses = dict(cls.witnesses)
    # a*e == a*a with e != a, scanned in (object, c, a, b) order
    assert witnesses["fibers_cancellative"] == (0, 1, 0, 1)
    assert cls.failed_module_hypothesis()[0] == "fibers_are_groups"


def test_classify_all_module_fixtures():
    for build in (fixtures.group_z2, fixtures.z3_fiber_only, fixtures.z2_with_z3_fiber,
                  fixtures.z2_with_z3_fiber_twisted, fixtures.pair_groupoid_z3):
        assert classify_structure(build()).is_crossed_module, build.__name__


def test_compose_convention(xm_z2, xm_z2_z3):
    cat = xm_z2.cat
    assert cat.compose(1, 1) == 0  # g*g = 1
    assert cat.compose(1, 0) == 1  # g*1 = g
    # boundary of any element is the identity in the untwisted fixture
    xm = xm_z2_z3
    d2 = xm.boundary[0][2]
    assert xm.cat.compose(d2, 1) == 1


def test_compose_rejects_mismatched_endpoints():
    cat = fixtures.pair_groupoid_z3().cat
    with pytest.raises(NotComposableError):
        cat.compose(2, 2)  # 0->1 after 0->1 does not compose


def test_identity_xmorphism_validates(xm_z2_z3):
    m = identity_xmorphism(xm_z2_z3)
    report = validate_xmorphism(xm_z2_z3, xm_z2_z3, m)
    assert report.passed


def test_inclusion_morphism_validates(xm_z3_fiber, xm_z2_z3):
    # trivial category includes into Z/2, identity on the Z/3 fiber
    m = XMorphism(obj_map=(0,), mor_map=(0,), fiber_maps=((0, 1, 2),))
    assert validate_xmorphism(xm_z3_fiber, xm_z2_z3, m).passed


def test_broken_fiber_map_reports_witness(xm_z3_fiber, xm_z2_z3):
    m = XMorphism(obj_map=(0,), mor_map=(0,), fiber_maps=((0, 2, 2),))
    report = validate_xmorphism(xm_z3_fiber, xm_z2_z3, m)
    assert not report.passed
    assert "mor.hom" in report.axioms()


def test_xmorphism_out_of_range_is_structural(xm_z3_fiber, xm_z2_z3):
    with pytest.raises(StructureError):
        validate_xmorphism(xm_z3_fiber, xm_z2_z3, XMorphism((5,), (0,), ((0, 1, 2),)))
    with pytest.raises(StructureError):
        validate_xmorphism(xm_z3_fiber, xm_z2_z3, XMorphism((0,), (9,), ((0, 1, 2),)))


def test_cr3_restated_for_every_module_fixture():
    for build in (fixtures.group_z2, fixtures.z2_with_z3_fiber, fixtures.z2_with_z3_fiber_twisted,
                  fixtures.z3_identity_boundary, fixtures.pair_groupoid_z3):
        xm = build()
        for x in xm.cat.objects():
            mon = xm.fibers[x]
            for a in mon.elements():
                for b in mon.elements():
                    assert mon.mul(a, b) == mon.mul(b, xm.act(xm.boundary[x][b], a))


def test_crossed_monoid_shape_errors():
    cat = fixtures.one_object_category(fixtures.cyclic_monoid(2))
    z3 = fixtures.cyclic_monoid(3)
    with pytest.raises(StructureError):
        CrossedMonoid(cat=cat, fibers=(z3,), action=((0, 1, 2),), boundary=((0, 0, 0),))  # one action row missing
    with pytest.raises(StructureError):
        CrossedMonoid(cat=cat, fibers=(z3,), action=((0, 1, 2), (0, 1)), boundary=((0, 0, 0),))  # action row short
    with pytest.raises(StructureError):
        CrossedMonoid(cat=cat, fibers=(z3,), action=((0, 1, 2), (0, 1, 2)), boundary=((0, 0, 7),))  # dangling morphism

from fractions import Fraction

import pytest

from skeinkit.braid import BraidWord
from skeinkit.diagram import LinkDiagram, from_braid_closure
from skeinkit.errors import DiagramError
from skeinkit.satellite import (
    PUSHOFF_LINKING_SIGN,
    TwistSite,
    blackboard_double,
    build_K_A,
    canonical_double,
    canonical_whitehead,
    quasitoric_closure,
    replace_crossing_with_half_twists,
)

TREFOIL = quasitoric_closure(1, 1)
FIG8 = from_braid_closure(BraidWord(3, (1, -2, 1, -2)))


def test_blackboard_double_counts():
    d = blackboard_double(TREFOIL)
    st = d.stats()
    assert st.crossings == 12
    assert st.components == 2
    assert st.writhe == 0

    loops = blackboard_double(LinkDiagram((), 1))
    assert loops.crossing_count() == 0
    assert loops.free_loops == 2

    d2 = blackboard_double(quasitoric_closure(2, 1))
    st2 = d2.stats()
    assert st2.crossings == 24
    assert st2.components == 6
    assert st2.seifert_circles == 14
    assert st2.morton_bound == 11


def test_blackboard_double_general_properties():
    for base in (TREFOIL, FIG8, quasitoric_closure(2, -1)):
        d = blackboard_double(base)
        assert d.crossing_count() == 4 * base.crossing_count()
        assert d.component_count() == 2 * base.component_count()
        assert d.writhe() == 0


def test_doubled_quasitoric_morton_bound_series():
    for r in range(1, 7):
        d = blackboard_double(quasitoric_closure(r, 1))
        st = d.stats()
        assert st.crossings == 12 * r
        assert st.seifert_circles == 6 * r + 2
        assert st.morton_bound == 6 * r - 1


def test_canonical_double_twists_and_linking():
    w = TREFOIL.writhe()
    for m in range(-2, 7):
        d = canonical_double(TREFOIL, m)
        assert d.crossing_count() == 4 * 3 + 2 * abs(m - w)
        assert d.component_count() == 2
        assert d.linking_number(0, 1) == PUSHOFF_LINKING_SIGN * m


def test_canonical_double_standard_diagram_is_blackboard():
    assert canonical_double(TREFOIL, TREFOIL.writhe()) == blackboard_double(TREFOIL)
    assert canonical_double(TREFOIL, 0).crossing_count() == 18


def test_canonical_double_rejects_links():
    with pytest.raises(DiagramError):
        canonical_double(quasitoric_closure(2, 1), 0)
    with pytest.raises(DiagramError):
        canonical_whitehead(from_braid_closure(BraidWord(2, (1, 1))), 0, 1)


def test_canonical_double_of_round_unknot():
    assert canonical_double(LinkDiagram((), 1), 0) == LinkDiagram((), 2)
    d = canonical_double(LinkDiagram((), 1), 3)
    assert d.crossing_count() == 6
    assert d.component_count() == 2
    assert d.linking_number(0, 1) == PUSHOFF_LINKING_SIGN * 3


def test_canonical_whitehead_counts_and_genus():
    w = TREFOIL.writhe()
    for m in (0, 3, 5):
        for s in (1, -1):
            k = canonical_whitehead(TREFOIL, m, s)
            assert k.crossing_count() == 12 + 2 * abs(m - w) + 2
            assert k.component_count() == 1
            assert k.stats().canonical_genus == 3


def test_whitehead_genus_independent_of_m():
    for base in (TREFOIL, FIG8):
        want = base.crossing_count()
        for m in range(-5, 9):
            for s in (1, -1):
                g = canonical_whitehead(base, m, s).stats().canonical_genus
                assert g == want
                assert isinstance(g, Fraction)


def test_whitehead_writhe():
    # doubled part has writhe 0; twists contribute -2(m - w); clasp +-2
    w = TREFOIL.writhe()
    for m in (1, 3, 6):
        for s in (1, -1):
            k = canonical_whitehead(TREFOIL, m, s)
            assert k.writhe() == -2 * (m - w) + 2 * s


def test_whitehead_of_round_unknot():
    k = canonical_whitehead(LinkDiagram((), 1), 0, 1)
    assert k.crossing_count() == 2
    assert k.component_count() == 1
    core, removed = k.simplify()
    assert core.is_empty() and removed == 1  # the clasped band is an unknot


def test_half_twist_replacement():
    assert replace_crossing_with_half_twists(TREFOIL, TwistSite(0, 1)) == TREFOIL
    t25 = replace_crossing_with_half_twists(TREFOIL, TwistSite(0, 3))
    assert t25.crossing_count() == 5
    assert t25.component_count() == 1
    assert t25.writhe() == 5

    with pytest.raises(DiagramError):
        replace_crossing_with_half_twists(TREFOIL, TwistSite(0, -3))
    with pytest.raises(DiagramError):
        replace_crossing_with_half_twists(TREFOIL, TwistSite(9, 3))
    with pytest.raises(DiagramError):
        replace_crossing_with_half_twists(TREFOIL, TwistSite(0, 0))


def test_full_twist_replacement_changes_components():
    d = quasitoric_closure(2, 1)
    assert d.component_count() == 3
    d2 = replace_crossing_with_half_twists(d, TwistSite(0, 2))
    assert d2.crossing_count() == 7
    assert d2.component_count() == 2


def test_build_K_A():
    assert build_K_A([[1, 1, 1]]).canonical_code() == TREFOIL.canonical_code()
    ka = build_K_A([[1, 1, 1], [-1, -1, -1]])
    assert ka.crossing_count() == 6
    assert ka.canonical_code() == quasitoric_closure(2, 1).canonical_code()

    big = build_K_A([[2, 3, 1], [-1, -2, -2]])
    assert big.crossing_count() == 2 + 3 + 1 + 1 + 2 + 2

    with pytest.raises(DiagramError):
        build_K_A([[1, 1, 0]])
    with pytest.raises(DiagramError):
        build_K_A([[1, -1, 1]])
    with pytest.raises(DiagramError):
        build_K_A([[1, 1, 1], [1, 1, 1]])
    with pytest.raises(DiagramError):
        build_K_A([])

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from xnerve import fixtures
from xnerve.algebra import XMorphism, identity_xmorphism
from xnerve.errors import CapacityError, CellError, CompatibilityError
from xnerve.nerve import CornerTriple, Nerve, NerveCell, induced_cell


def brute_cells(nv, n):
    """Independent enumeration: raw products filtered by the validator."""
    xm = nv.xm
    cat = xm.cat
    if n == 0:
        return [nv.point(x) for x in cat.objects()]
    out = []
    for seq in itertools.product(cat.objects(), repeat=n + 1):
        spots = []
        for i in range(1, n + 1):
            spots.append(list(cat.morphisms()))
            spots.extend([list(range(xm.fibers[seq[i]].size))] * (n - i))
        for flat in itertools.product(*spots):
            rows, pos = [], 0
            for i in range(1, n + 1):
                ln = n - i + 1
                rows.append(tuple(flat[pos:pos + ln]))
                pos += ln
            try:
                out.append(nv.cell(seq, rows))
            except CellError:
                pass
    return out


def test_cell_new_examples(nv_z2, nv_z2_z3):
    # diagonal (g, g) with unit corner
    c = nv_z2.cell((0, 0, 0), ((1, 0), (1,)))
    assert c.dim == 2 and c.entry(1, 2) == 0
    # one-cells are morphisms
    e = nv_z2_z3.morphism_cell(1)
    assert e.rows == ((1,),)
    assert nv_z2_z3.cell((0, 0), ((1,),)) == e


def test_cell_new_rejects_wrong_fiber(nv_z2_z3):
    with pytest.raises(CellError) as err:
        nv_z2_z3.cell((0, 0, 0), ((1, 3), (1,)))
    assert "(1,2)" in str(err.value)


def test_cell_new_rejects_wrong_endpoints(nv_pair):
    # morphism 2 runs 0 -> 1; claiming it as an endo of 0 must fail at (1,1)
    with pytest.raises(CellError) as err:
        nv_pair.cell((0, 0), ((2,),))
    assert "(1,1)" in str(err.value)


def test_eta_examples(nv_z2_z3_twisted, nv_z2_z3):
    # row 2 diagonal g: empty product gives the bare diagonal
    m = nv_z2_z3_twisted.cell((0, 0, 0, 0), ((0, 0, 0), (1, 1), (0,)))
    assert nv_z2_z3_twisted.eta(m, 1, 2) == 1
    # trivial boundary: appending entries never changes the twist
    assert nv_z2_z3_twisted.eta(m, 1, 3) == 1
    # with a trivial boundary eta always equals the row diagonal
    for cell in nv_z2_z3.cells(3):
        for j in range(3):
            for k in range(j + 1, 4):
                assert nv_z2_z3.eta(cell, j, k) == cell.rows[j][0]


def test_face_examples(nv_z2, nv_z2_z3, nv_z2_z3_twisted):
    m = nv_z2.cell((0, 0, 0), ((1, 0), (1,)))
    assert nv_z2.face(m, 1) == nv_z2.morphism_cell(0)  # g * g = 1
    m = nv_z2_z3.cell((0, 0, 0), ((1, 2), (1,)))
    assert nv_z2_z3.face(m, 0) == nv_z2_z3.morphism_cell(1)
    # twisted fixture: entry (1,2) of d_1 is 1^(g) + 1 = (-1) + 1 = 0
    m = nv_z2_z3_twisted.cell((0, 0, 0, 0), ((0, 0, 1), (1, 1), (0,)))
    d = nv_z2_z3_twisted.face(m, 1)
    assert d.entry(1, 2) == 0
    assert d.rows[0][0] == 1  # merged diagonal 1 * d(0) * g = g


def test_face_merged_row_matches_eta_definition(nv_z2_z3_twisted):
    nv = nv_z2_z3_twisted
    xm = nv.xm
    for cell in nv.cells(4):
        for j in range(1, 4):
            d = nv.face(cell, j)
            for c in range(j + 1, 4):
                tw = xm.action[nv.eta(cell, j, c)][cell.entry(j, c + 1)]
                expected = xm.fibers[cell.objects[j + 1]].mul(tw, cell.entry(j + 1, c + 1))
                assert d.entry(j, c) == expected


def test_degeneracy_examples(nv_trivial, nv_z2_z3):
    p = nv_trivial.point(0)
    assert nv_trivial.degeneracy(p, 0) == nv_trivial.morphism_cell(0)
    g = nv_z2_z3.morphism_cell(1)
    s0 = nv_z2_z3.degeneracy(g, 0)
    assert s0.rows == ((0, 0), (1,))  # [[1, e], [., g]]
    s1 = nv_z2_z3.degeneracy(g, 1)
    assert s1.rows == ((1, 0), (0,))  # [[g, e], [., 1]]


def test_object_sequence_tracking(nv_pair):
    for cell in nv_pair.cells(3):
        for j in range(4):
            d = nv_pair.face(cell, j)
            assert d.objects == cell.objects[:j] + cell.objects[j + 1:]
        for j in range(4):
            s = nv_pair.degeneracy(cell, j)
            assert s.objects == cell.objects[:j + 1] + (cell.objects[j],) + cell.objects[j + 1:]


def test_enumeration_counts(nv_z2, nv_z2_z3, nv_trivial):
    assert sum(1 for _ in nv_z2.cells(3)) == 8
    assert sum(1 for _ in nv_z2_z3.cells(2)) == 12
    for n in range(5):
        assert sum(1 for _ in nv_trivial.cells(n)) == 1


def test_enumeration_against_brute_force(nv_z2, nv_z3_fiber, nv_pair):
    for nv, dims in ((nv_z2, (0, 1, 2, 3)), (nv_z3_fiber, (0, 1, 2)), (nv_pair, (0, 1, 2))):
        for n in dims:
            fast = list(nv.cells(n))
            slow = brute_cells(nv, n)
            assert fast == slow  # same cells, same order
            assert nv.count_cells(n) == len(fast)


def test_enumeration_capacity_error(nv_z2_z3):
    with pytest.raises(CapacityError):
        list(nv_z2_z3.cells(4, cap=100))


def test_cell_at_matches_enumeration(nv_z2_z3, nv_pair):
    for nv, n in ((nv_z2_z3, 3), (nv_pair, 2)):
        cells = list(nv.cells(n))
        for idx in range(len(cells)):
            assert nv.cell_at(n, idx) == cells[idx]
        with pytest.raises(IndexError):
            nv.cell_at(n, len(cells))


def test_corner_split_examples(nv_z2_z3, nv_trivial):
    m = nv_z2_z3.cell((0, 0, 0), ((1, 1), (1,)))
    t = nv_z2_z3.corner_split(m)
    assert t.first == nv_z2_z3.morphism_cell(1)
    assert t.last == nv_z2_z3.morphism_cell(1)
    assert t.corner == 1
    only = next(iter(nv_trivial.cells(2)))
    tt = nv_trivial.corner_split(only)
    assert tt.first == tt.last == nv_trivial.morphism_cell(0)


def test_corner_assemble_example(nv_z2):
    t = CornerTriple(nv_z2.morphism_cell(1), nv_z2.morphism_cell(1), 0)
    assert nv_z2.corner_assemble(t) == nv_z2.cell((0, 0, 0), ((1, 0), (1,)))


def test_corner_bijection_roundtrips(nv_z2, nv_z2_z3, nv_z2_z3_twisted, nv_pair):
    for nv in (nv_z2, nv_z2_z3, nv_z2_z3_twisted, nv_pair):
        for n in (2, 3):
            for cell in nv.cells(n):
                assert nv.corner_assemble(nv.corner_split(cell)) == cell
            for t in nv.corner_triples(n):
                assert nv.corner_split(nv.corner_assemble(t)) == t


def test_corner_split_needs_dim_two(nv_z2_z3):
    with pytest.raises(CompatibilityError):
        nv_z2_z3.corner_split(nv_z2_z3.morphism_cell(0))


def test_corner_assemble_rejects_incompatible(nv_z2_z3):
    first = nv_z2_z3.cell((0, 0, 0), ((1, 0), (1,)))  # d_2 = [g]
    last = nv_z2_z3.cell((0, 0, 0), ((1, 0), (0,)))  # d_0 = [1]
    with pytest.raises(CompatibilityError):
        nv_z2_z3.corner_assemble(CornerTriple(first, last, 0))
    good = nv_z2_z3.cell((0, 0, 0), ((0, 0), (1,)))
    with pytest.raises(CompatibilityError):
        nv_z2_z3.corner_assemble(CornerTriple(first, good, 9))  # corner outside the fiber


def test_corner_face_against_composed_path(nv_z2_z3, nv_z2_z3_twisted, nv_pair):
    for nv in (nv_z2_z3, nv_z2_z3_twisted, nv_pair):
        for n in (3, 4):
            for t in nv.corner_triples(n):
                cell = nv.corner_assemble(t)
                for j in range(1, n):
                    assert nv.corner_face(t, j) == nv.corner_split(nv.face(cell, j))


def test_corner_face_units_stay_units(nv_z2_z3):
    nv = nv_z2_z3
    deg = nv.degeneracy(nv.degeneracy(nv.morphism_cell(0), 0), 0)
    t = nv.corner_split(deg)
    for j in range(1, 3):
        assert nv.corner_face(t, j).corner == 0


def test_induced_map_identity_and_inclusion(nv_z3_fiber, nv_z2_z3, xm_z3_fiber, xm_z2_z3):
    ident = identity_xmorphism(xm_z2_z3)
    for cell in nv_z2_z3.cells(2):
        assert induced_cell(ident, cell) == cell
    incl = XMorphism(obj_map=(0,), mor_map=(0,), fiber_maps=((0, 1, 2),))
    src_cell = nv_z3_fiber.cell((0, 0, 0), ((0, 2), (0,)))
    image = induced_cell(incl, src_cell)
    assert image.rows == ((0, 2), (0,))
    nv_z2_z3.validate_cell(image)


def test_induced_map_naturality(nv_z3_fiber, nv_z2_z3):
    incl = XMorphism(obj_map=(0,), mor_map=(0,), fiber_maps=((0, 1, 2),))
    for cell in nv_z3_fiber.cells(2):
        for j in range(3):
            assert induced_cell(incl, nv_z3_fiber.face(cell, j)) == nv_z2_z3.face(induced_cell(incl, cell), j)
        for j in range(3):
            assert induced_cell(incl, nv_z3_fiber.degeneracy(cell, j)) == nv_z2_z3.degeneracy(
                induced_cell(incl, cell), j
            )


def test_cell_text_roundtrip_format(nv_z2_z3):
    c = nv_z2_z3.cell((0, 0, 0), ((1, 2), (0,)))
    assert c.text() == "2|0,0,0|1,2;0"
    assert nv_z2_z3.point(0).text() == "0|0|"


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.data())
def test_identities_spot_checked_above_the_exhaustive_range(data):
    nv = Nerve(fixtures.z2_with_z3_fiber_twisted(), validate_outputs=True)
    n = data.draw(st.integers(min_value=5, max_value=6), label="dim")
    cell = nv.cell_at(n, data.draw(st.integers(min_value=0, max_value=nv.count_cells(n) - 1), label="idx"))
    k = data.draw(st.integers(min_value=1, max_value=n), label="k")
    j = data.draw(st.integers(min_value=0, max_value=k - 1), label="j")
    assert nv.face(nv.face(cell, k), j) == nv.face(nv.face(cell, j), k - 1)
    assert nv.face(nv.degeneracy(cell, k), j) == nv.degeneracy(nv.face(cell, j), k - 1)
    assert nv.face(nv.degeneracy(cell, j), j) == cell
    assert nv.face(nv.degeneracy(cell, j), j + 1) == cell

"""Constructive horn fillers for crossed-module nerves.

Dimension 2 fills by groupoid inverses with a unit corner, dimension 3 by
reconstructing the missing face (its diagonal is forced by the given faces,
its corner is solved out of the boundary-image equation), dimensions 4 and
up by collapsing the horn one level, rebuilding the missing face from that
boundary, and reassembling through the corner bijection.

The boundary-image equation for a compatible 4-tuple (M0, M1, M2, M3) of
2-cells reads, with g the lower diagonal of M3 and c_j the corner of M_j:

    c3^g * c1 == c2^g * c0                                   (rule "eq:image")

It is necessary for the tuple to be a boundary over any crossed monoid and
also sufficient over a crossed module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Classification, CrossedMonoid, classify_structure
from .errors import CompatibilityError, NotCrossedModuleError
from .nerve import CornerTriple, Nerve, NerveCell
from .simplicial import BoundaryTuple, HornTuple, beta, is_compatible_horn


def image_b3(xm: CrossedMonoid, t: BoundaryTuple) -> bool:
    """Does a compatible 4-tuple of 2-cells bound a 3-cell? (rule eq:image)

    Necessary over any crossed monoid; necessary and sufficient over a
    crossed module.
    """
    m0, m1, m2, m3 = t.faces
    g = m3.rows[1][0]
    act = xm.action[g]
    mul = xm.fibers[xm.cat.src[g]].table
    lhs = mul[act[m3.rows[0][1]]][m1.rows[0][1]]
    rhs = mul[act[m2.rows[0][1]]][m0.rows[0][1]]
    return lhs == rhs


@dataclass(frozen=True)
class FaceCheck:
    slot: int
    expected: NerveCell
    actual: NerveCell

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class FillResult:
    filler: NerveCell
    checks: tuple[FaceCheck, ...]

    @property
    def verified(self) -> bool:
        return all(c.ok for c in self.checks)


class HornFiller:
    """Fillers for the nerve of one crossed module.

    Refuses at construction, naming the first failed hypothesis, when the
    input is not a crossed module.  Inverse lookups (morphisms, fiber
    elements, action maps) are precomputed here so the fill paths never
    search.
    """

    def __init__(self, xm: CrossedMonoid, classification: Classification | None = None):
        cls = classification if classification is not None else classify_structure(xm)
        failed = cls.failed_module_hypothesis()
        if failed is not None:
            raise NotCrossedModuleError(failed[0], failed[1])
        self.xm = xm
        self.classification = cls
        self.nerve = Nerve(xm)
        self.mor_inv = tuple(xm.cat.morphism_inverse)
        self.fiber_inv = tuple(f.inverse for f in xm.fibers)

    # -- small helpers -------------------------------------------------

    def _act(self, g: int, a: int) -> int:
        return self.xm.action[g][a]

    def _act_inv(self, g: int, a: int) -> int:
        return self.xm.action[self.mor_inv[g]][a]

    def _mul(self, obj: int, *items: int) -> int:
        return self.xm.fibers[obj].product(items)

    def _inv(self, obj: int, a: int) -> int:
        v = self.fiber_inv[obj][a]
        if v is None:
            raise NotCrossedModuleError("fibers_are_groups", (obj, a))
        return v

    def _edge_mor(self, c: NerveCell) -> int:
        return c.rows[0][0]

    def _result(self, h: HornTuple, filler: NerveCell) -> FillResult:
        checks = tuple(
            FaceCheck(slot, face, self.nerve.face(filler, slot))
            for slot, face in zip(h.slots(), h.faces)
        )
        result = FillResult(filler, checks)
        if not result.verified:
            bad = next(c for c in result.checks if not c.ok)
            raise RuntimeError(
                f"filler face mismatch at slot {bad.slot}: "
                f"expected {bad.expected.text()}, got {bad.actual.text()}"
            )
        return result

    # -- dimension dispatch ----------------------------------------------

    def fill(self, h: HornTuple) -> FillResult:
        if not is_compatible_horn(self.nerve, h):
            raise CompatibilityError("tuple is not a horn: faces do not match up")
        if h.dim == 2:
            return self.fill_dim2(h)
        if h.dim == 3:
            return self.fill_dim3(h)
        if h.dim == 4:
            return self.fill_dim4(h)
        if h.dim >= 5:
            return self.fill_high(h)
        raise CompatibilityError(f"no constructive filler in dimension {h.dim}")

    def fill_dim2(self, h: HornTuple) -> FillResult:
        cat = self.xm.cat
        l = h.omitted
        mors = [self._edge_mor(c) for c in h.faces]
        if l == 1:
            lower, upper = mors[0], mors[1]
        elif l == 2:
            f0, f1 = mors
            upper = cat.compose(f1, self._mor_inverse(f0))
            lower = f0
        else:
            f1, f2 = mors
            upper = f2
            lower = cat.compose(self._mor_inverse(f2), f1)
        x1 = cat.src[upper]
        filler = NerveCell(
            2,
            (cat.tgt[upper], x1, cat.src[lower]),
            ((upper, self.xm.fibers[x1].unit), (lower,)),
        )
        return self._result(h, filler)

    def _mor_inverse(self, m: int) -> int:
        v = self.mor_inv[m]
        if v is None:
            raise NotCrossedModuleError("category_is_groupoid", (m,))
        return v

    def fill_dim3(self, h: HornTuple) -> FillResult:
        missing = self._missing_2face(h)
        faces = list(h.faces)
        faces.insert(h.omitted, missing)
        filler = self._cell_from_boundary3(tuple(faces))
        return self._result(h, filler)

    def _missing_2face(self, h: HornTuple) -> NerveCell:
        """Reconstruct the omitted 2-cell of a dimension-3 horn.

        Both diagonal entries are forced by matching faces; the corner is the
        unique solution of rule eq:image, using fiber inverses and the
        inverse action.
        """
        l = h.omitted
        nv = self.nerve
        cat = self.xm.cat

        def diag1(c: NerveCell) -> int:
            return c.rows[0][0]

        def diag2(c: NerveCell) -> int:
            return c.rows[1][0]

        def corner(c: NerveCell) -> int:
            return c.rows[0][1]

        def d1_mor(c: NerveCell) -> int:
            return nv.face(c, 1).rows[0][0]

        if l == 0:
            m1, m2, m3 = h.face_at(1), h.face_at(2), h.face_at(3)
            upper, lower = diag2(m3), diag2(m1)
            g = diag2(m3)
            x1 = cat.tgt[g]
            x2 = cat.src[g]
            twisted = self._act(g, self._mul(x1, self._inv(x1, corner(m2)), corner(m3)))
            cval = self._mul(x2, twisted, corner(m1))
        elif l == 1:
            m0, m2, m3 = h.face_at(0), h.face_at(2), h.face_at(3)
            upper, lower = d1_mor(m3), diag2(m0)
            g = diag2(m3)
            x1 = cat.tgt[g]
            x2 = cat.src[g]
            twisted = self._act(g, self._mul(x1, self._inv(x1, corner(m3)), corner(m2)))
            cval = self._mul(x2, twisted, corner(m0))
        elif l == 2:
            m0, m1, m3 = h.face_at(0), h.face_at(1), h.face_at(3)
            upper, lower = diag1(m3), d1_mor(m0)
            g = diag2(m3)
            x2 = cat.src[g]
            rhs = self._mul(x2, self._act(g, corner(m3)), corner(m1), self._inv(x2, corner(m0)))
            cval = self._act_inv(g, rhs)
        else:
            m0, m1, m2 = h.face_at(0), h.face_at(1), h.face_at(2)
            upper, lower = diag1(m2), diag1(m0)
            g = diag1(m0)
            x2 = cat.src[g]
            rhs = self._mul(x2, self._act(g, corner(m2)), corner(m0), self._inv(x2, corner(m1)))
            cval = self._act_inv(g, rhs)
        x_mid = cat.src[upper]
        return NerveCell(
            2,
            (cat.tgt[upper], x_mid, cat.src[lower]),
            ((upper, cval), (lower,)),
        )

    def _cell_from_boundary3(self, faces: tuple[NerveCell, ...]) -> NerveCell:
        """Unique 3-cell with the given boundary; the tuple must satisfy
        rule eq:image (asserted: callers guarantee it)."""
        assert image_b3(self.xm, BoundaryTuple(faces)), "boundary tuple fails eq:image"
        m0, m3 = faces[0], faces[3]
        x1 = m3.objects[1]
        corner = self._mul(x1, self._inv(x1, faces[3].rows[0][1]), faces[2].rows[0][1])
        cell = self.nerve.corner_assemble(CornerTriple(m0, m3, corner))
        for j, face in enumerate(faces):
            got = self.nerve.face(cell, j)
            if got != face:
                raise CompatibilityError(f"boundary reconstruction failed at face {j}")
        return cell

    def _cell_from_boundary(self, faces: tuple[NerveCell, ...]) -> NerveCell:
        """Cell with the given boundary in dimensions >= 4, via the corner
        bijection; faces are re-verified."""
        n = len(faces) - 1
        if n == 3:
            return self._cell_from_boundary3(faces)
        cell = self.nerve.corner_assemble(self.nerve.corner_project(faces))
        for j, face in enumerate(faces):
            if self.nerve.face(cell, j) != face:
                raise CompatibilityError(f"boundary reconstruction failed at face {j}")
        return cell

    def fill_dim4(self, h: HornTuple) -> FillResult:
        collapsed = beta(self.nerve, h)
        assert image_b3(self.xm, collapsed), "collapsed dimension-4 horn fails eq:image"
        missing = self._cell_from_boundary3(collapsed.faces)
        faces = list(h.faces)
        faces.insert(h.omitted, missing)
        filler = self._cell_from_boundary(tuple(faces))
        return self._result(h, filler)

    def fill_high(self, h: HornTuple) -> FillResult:
        if h.dim < 5:
            raise CompatibilityError("fill_high starts at dimension 5")
        collapsed = beta(self.nerve, h)
        missing = self._cell_from_boundary(collapsed.faces)
        faces = list(h.faces)
        faces.insert(h.omitted, missing)
        filler = self._cell_from_boundary(tuple(faces))
        return self._result(h, filler)

"""Nerve cells of a crossed monoid and their face/degeneracy calculus.

A cell of dimension n >= 1 is an upper-triangular n x n matrix stored row by
row: ``rows[i-1] = (m[i][i], m[i][i+1], ..., m[i][n])`` for matrix row i.
The first entry of each row is a morphism id, everything to its right is an
element id of the fiber over ``objects[i]``.  The object sequence
``objects = (x0, ..., xn)`` is pinned by the diagonal: m[j][j] runs from
``x_j`` to ``x_{j-1}``.  Dimension-0 cells are bare objects (no rows);
dimension-1 cells are 1 x 1 matrices, one per morphism.

Index conventions used throughout:

* matrix positions (i, j) are 1-based, 1 <= i <= j <= n;
* entry (i, j) sits at ``rows[i-1][j-i]``;
* the row twist ``eta(M, j, k) = m[j+1][j+1] * d(m[j+1][j+2] ... m[j+1][k])``
  is a morphism from ``x_{j+1}`` to ``x_j`` (empty fiber product for
  k == j+1).

The inner face d_j (1 <= j <= n-1) multiplies columns j and j+1 in every row
above row j, then merges rows j and j+1 into the single row

    ( m[j][j] d(m[j][j+1]) m[j+1][j+1],
      m[j][j+2]^eta(M,j,j+1) m[j+1][j+2], ...,
      m[j][n]^eta(M,j,n-1) m[j+1][n] ).

d_0 deletes the first row, d_n the last column.  The degeneracy s_j inserts a
unit column at j+1 above row j+1, a fresh row (1_{x_j}, e, ..., e) at j+1,
and shifts the lower rows one step south-east (the insertion is skipped for
j = 0, the shift for j = n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import CrossedMonoid, XMorphism
from .errors import CapacityError, CellError, CompatibilityError, DEFAULT_CAPACITY


@dataclass(frozen=True)
class NerveCell:
    dim: int
    objects: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """Matrix entry at 1-based position (i, j), i <= j."""
        return self.rows[i - 1][j - i]

    @property
    def corner(self) -> int:
        """The fiber element at position (1, n); needs dim >= 2."""
        return self.rows[0][self.dim - 1]

    def sort_key(self):
        return (self.dim, self.objects, self.rows)

    def text(self) -> str:
        """Canonical serialization: dim | object ids | row-major entries."""
        objs = ",".join(str(x) for x in self.objects)
        rows = ";".join(",".join(str(v) for v in row) for row in self.rows)
        return f"{self.dim}|{objs}|{rows}"


@dataclass(frozen=True)
class CornerTriple:
    """A cell split as (first face, last face, upper-right corner element)."""

    first: NerveCell
    last: NerveCell
    corner: int


class Nerve:
    """Level provider for the nerve of one crossed monoid.

    With ``validate_outputs=True`` every cell produced by face/degeneracy is
    re-checked against the typing invariants; tests run in that mode, normal
    use skips it for speed.
    """

    def __init__(self, xm: CrossedMonoid, validate_outputs: bool = False):
        self.xm = xm
        self.validate_outputs = validate_outputs

    # -- construction -------------------------------------------------

    def point(self, obj: int) -> NerveCell:
        if not 0 <= obj < self.xm.cat.num_objects:
            raise CellError(f"object {obj} out of range")
        return NerveCell(0, (obj,), ())

    def morphism_cell(self, m: int) -> NerveCell:
        """The dimension-1 cell identified with morphism ``m``."""
        cat = self.xm.cat
        if not 0 <= m < cat.num_morphisms:
            raise CellError(f"morphism {m} out of range")
        return NerveCell(1, (cat.tgt[m], cat.src[m]), ((m,),))

    def cell(self, objects: Sequence[int], rows: Sequence[Sequence[int]]) -> NerveCell:
        """Validated constructor; raises CellError naming the bad entry."""
        c = NerveCell(len(objects) - 1, tuple(objects), tuple(tuple(r) for r in rows))
        self.validate_cell(c)
        return c

    def validate_cell(self, c: NerveCell) -> None:
        xm = self.xm
        cat = xm.cat
        n = c.dim
        if n < 0 or len(c.objects) != n + 1:
            raise CellError(f"object sequence has {len(c.objects)} entries for dimension {n}")
        for x in c.objects:
            if not 0 <= x < cat.num_objects:
                raise CellError(f"object {x} out of range")
        if len(c.rows) != n:
            raise CellError(f"cell of dimension {n} needs {n} rows, found {len(c.rows)}")
        for i in range(1, n + 1):
            row = c.rows[i - 1]
            if len(row) != n - i + 1:
                raise CellError(f"row {i} has {len(row)} entries, expected {n - i + 1}")
            d = row[0]
            if not 0 <= d < cat.num_morphisms:
                raise CellError(f"entry ({i},{i}) = {d} is not a morphism id")
            if cat.src[d] != c.objects[i] or cat.tgt[d] != c.objects[i - 1]:
                raise CellError(
                    f"entry ({i},{i}) runs {cat.src[d]}->{cat.tgt[d]}, "
                    f"expected {c.objects[i]}->{c.objects[i - 1]}"
                )
            size = xm.fibers[c.objects[i]].size
            for k, v in enumerate(row[1:], start=i + 1):
                if not 0 <= v < size:
                    raise CellError(f"entry ({i},{k}) = {v} outside the fiber over object {c.objects[i]}")

    def _out(self, c: NerveCell) -> NerveCell:
        if self.validate_outputs:
            self.validate_cell(c)
        return c

    # -- structure maps ------------------------------------------------

    def eta(self, M: NerveCell, j: int, k: int) -> int:
        """Row twist: ``m[j+1][j+1] * d(m[j+1][j+2] ... m[j+1][k])``.

        Runs from ``x_{j+1}`` to ``x_j``; ``k == j+1`` gives the bare
        diagonal entry.
        """
        n = M.dim
        if not (0 <= j and j + 1 <= k <= n):
            raise CellError(f"eta indices ({j},{k}) out of range for dimension {n}")
        xm = self.xm
        row = M.rows[j]
        drow = xm.boundary[M.objects[j + 1]]
        compose = xm.cat.compose_table
        mor = row[0]
        for col in range(j + 2, k + 1):
            mor = compose[mor][drow[row[col - j - 1]]]
        return mor

    def face(self, M: NerveCell, j: int) -> NerveCell:
        n = M.dim
        if n < 1:
            raise CellError("0-cells have no faces")
        if not 0 <= j <= n:
            raise CellError(f"face index {j} out of range for dimension {n}")
        xm = self.xm
        if n == 1:
            mor = M.rows[0][0]
            obj = xm.cat.src[mor] if j == 0 else xm.cat.tgt[mor]
            return NerveCell(0, (obj,), ())
        objs = M.objects
        rows = M.rows
        if j == 0:
            return self._out(NerveCell(n - 1, objs[1:], rows[1:]))
        if j == n:
            return self._out(NerveCell(n - 1, objs[:-1], tuple(r[:-1] for r in rows[:-1])))

        new_rows: list[tuple[int, ...]] = []
        for i in range(1, j):
            t = rows[i - 1]
            p = j - i
            mul = xm.fibers[objs[i]].table
            new_rows.append(t[:p] + (mul[t[p]][t[p + 1]],) + t[p + 2:])

        upper = rows[j - 1]
        lower = rows[j]
        compose = xm.cat.compose_table
        d_upper = xm.boundary[objs[j]]
        d_lower = xm.boundary[objs[j + 1]]
        mul_low = xm.fibers[objs[j + 1]].table
        action = xm.action
        diag = compose[compose[upper[0]][d_upper[upper[1]]]][lower[0]]
        merged = [diag]
        eta = lower[0]
        for c in range(j + 1, n):
            if c > j + 1:
                eta = compose[eta][d_lower[lower[c - j - 1]]]
            twisted = action[eta][upper[c + 1 - j]]
            merged.append(mul_low[twisted][lower[c - j]])
        new_rows.append(tuple(merged))
        new_rows.extend(rows[j + 1:])
        return self._out(NerveCell(n - 1, objs[:j] + objs[j + 1:], tuple(new_rows)))

    def degeneracy(self, M: NerveCell, j: int) -> NerveCell:
        n = M.dim
        if not 0 <= j <= n:
            raise CellError(f"degeneracy index {j} out of range for dimension {n}")
        xm = self.xm
        if n == 0:
            p = M.objects[0]
            return NerveCell(1, (p, p), ((xm.cat.identity[p],),))
        objs = M.objects
        rows = M.rows
        new_rows: list[tuple[int, ...]] = []
        for i in range(1, j + 1):
            t = rows[i - 1]
            p = j + 1 - i
            unit = xm.fibers[objs[i]].unit
            new_rows.append(t[:p] + (unit,) + t[p:])
        unit = xm.fibers[objs[j]].unit
        new_rows.append((xm.cat.identity[objs[j]],) + (unit,) * (n - j))
        new_rows.extend(rows[j:])
        new_objs = objs[: j + 1] + (objs[j],) + objs[j + 1:]
        return self._out(NerveCell(n + 1, new_objs, tuple(new_rows)))

    # -- corner bijection ----------------------------------------------

    def corner_split(self, M: NerveCell) -> CornerTriple:
        """Split M as (first face, last face, corner); needs dim >= 2."""
        n = M.dim
        if n < 2:
            raise CompatibilityError("corner splitting needs dimension >= 2")
        return CornerTriple(self.face(M, 0), self.face(M, n), M.rows[0][n - 1])

    def corner_fiber(self, t: CornerTriple) -> int:
        """Object whose fiber hosts the corner: x1 of the assembled cell."""
        return t.first.objects[0]

    def corner_assemble(self, t: CornerTriple) -> NerveCell:
        """Inverse of corner_split: glue the two faces around the corner."""
        m0, mn = t.first, t.last
        if m0.dim != mn.dim or m0.dim < 1:
            raise CompatibilityError("corner faces must share a dimension >= 1")
        n = m0.dim + 1
        if self.face(m0, n - 1) != self.face(mn, 0):
            raise CompatibilityError("faces do not overlap: d_{n-1}(first) != d_0(last)")
        fiber = self.xm.fibers[m0.objects[0]]
        if not 0 <= t.corner < fiber.size:
            raise CompatibilityError(f"corner {t.corner} outside the fiber over object {m0.objects[0]}")
        objs = mn.objects + (m0.objects[-1],)
        rows = (mn.rows[0] + (t.corner,),) + m0.rows
        return self._out(NerveCell(n, objs, rows))

    def corner_face(self, t: CornerTriple, j: int) -> CornerTriple:
        """Split of d_j(assemble(t)) computed by closed corner formulas.

        The corner is unchanged for 2 <= j <= n-2, twisted by the first row
        of the first face for j = 1, and multiplied by the last face's
        corner for j = n-1.
        """
        m0, mn = t.first, t.last
        n = m0.dim + 1
        if n < 3:
            raise CompatibilityError("corner_face needs dimension >= 3")
        if not 1 <= j <= n - 1:
            raise CompatibilityError(f"corner_face index {j} out of range")
        d_first = self.face(m0, j - 1)
        d_last = self.face(mn, j)
        if j == 1:
            g = self.eta(m0, 0, n - 2)
            fiber = self.xm.fibers[m0.objects[1]]
            corner = fiber.mul(self.xm.action[g][t.corner], m0.rows[0][n - 2])
        elif j == n - 1:
            fiber = self.xm.fibers[m0.objects[0]]
            corner = fiber.mul(mn.rows[0][n - 2], t.corner)
        else:
            corner = t.corner
        return CornerTriple(d_first, d_last, corner)

    def corner_project(self, faces: Sequence[NerveCell]) -> CornerTriple:
        """Triple (first, last, corner of the third face) of a face tuple."""
        third = faces[2]
        if third.dim < 2:
            raise CompatibilityError("corner projection needs faces of dimension >= 2")
        return CornerTriple(faces[0], faces[-1], third.rows[0][third.dim - 1])

    def corner_triples(self, n: int, cap: int = DEFAULT_CAPACITY) -> Iterator[CornerTriple]:
        """All valid (first, last, corner) triples in dimension n >= 2."""
        if n < 2:
            raise CompatibilityError("corner triples exist from dimension 2 up")
        lower = list(self.cells(n - 1, cap=cap))
        by_first_face: dict[NerveCell, list[NerveCell]] = {}
        for c in lower:
            by_first_face.setdefault(self.face(c, 0), []).append(c)
        for first in lower:
            key = self.face(first, n - 1)
            fiber = self.xm.fibers[first.objects[0]]
            for last in by_first_face.get(key, ()):
                for m in fiber.elements():
                    yield CornerTriple(first, last, m)

    # -- enumeration -----------------------------------------------------

    def _object_sequences(self, n: int) -> Iterator[tuple[int, ...]]:
        cat = self.xm.cat
        for seq in itertools.product(cat.objects(), repeat=n + 1):
            if all(cat.hom(seq[i], seq[i - 1]) for i in range(1, n + 1)):
                yield seq

    def _position_domains(self, seq: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Row-major candidate lists for every matrix position."""
        cat = self.xm.cat
        n = len(seq) - 1
        domains: list[tuple[int, ...]] = []
        for i in range(1, n + 1):
            domains.append(cat.hom(seq[i], seq[i - 1]))
            fiber = tuple(self.xm.fibers[seq[i]].elements())
            domains.extend([fiber] * (n - i))
        return domains

    def count_cells(self, n: int) -> int:
        if n < 0:
            return 0
        if n == 0:
            return self.xm.cat.num_objects
        total = 0
        for seq in self._object_sequences(n):
            block = 1
            for dom in self._position_domains(seq):
                block *= len(dom)
            total += block
        return total

    def cells(self, n: int, cap: int = DEFAULT_CAPACITY) -> Iterator[NerveCell]:
        """All cells of dimension n, object sequences lexicographic, then
        entries row-major lexicographic."""
        predicted = self.count_cells(n)
        if cap is not None and predicted > cap:
            raise CapacityError(
                f"{predicted} cells of dimension {n} exceed the budget {cap}",
                predicted=predicted,
                cap=cap,
            )
        if n == 0:
            for x in self.xm.cat.objects():
                yield NerveCell(0, (x,), ())
            return
        for seq in self._object_sequences(n):
            domains = self._position_domains(seq)
            lengths = [n - i + 1 for i in range(1, n + 1)]
            for flat in itertools.product(*domains):
                rows = []
                pos = 0
                for ln in lengths:
                    rows.append(flat[pos:pos + ln])
                    pos += ln
                yield NerveCell(n, seq, tuple(rows))

    def cell_at(self, n: int, index: int) -> NerveCell:
        """The index-th cell in enumeration order, without materializing."""
        if index < 0:
            raise IndexError(index)
        if n == 0:
            if index >= self.xm.cat.num_objects:
                raise IndexError(index)
            return NerveCell(0, (index,), ())
        for seq in self._object_sequences(n):
            domains = self._position_domains(seq)
            block = 1
            for dom in domains:
                block *= len(dom)
            if index >= block:
                index -= block
                continue
            flat = []
            rem = index
            for dom in reversed(domains):
                rem, digit = divmod(rem, len(dom))
                flat.append(dom[digit])
            flat.reverse()
            rows = []
            pos = 0
            for i in range(1, n + 1):
                ln = n - i + 1
                rows.append(tuple(flat[pos:pos + ln]))
                pos += ln
            return NerveCell(n, seq, tuple(rows))
        raise IndexError(index)


def induced_cell(m: XMorphism, M: NerveCell) -> NerveCell:
    """Push a cell along a structure map: objects and diagonal through the
    functor, fiber entries through the matching fiber map."""
    objs = tuple(m.obj_map[x] for x in M.objects)
    rows = []
    for i, row in enumerate(M.rows, start=1):
        fiber_map = m.fiber_maps[M.objects[i]]
        rows.append((m.mor_map[row[0]],) + tuple(fiber_map[v] for v in row[1:]))
    return NerveCell(M.dim, objs, tuple(rows))

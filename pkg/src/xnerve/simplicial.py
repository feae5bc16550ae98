"""Generic machinery over any finite simplicial level provider.

A *level provider* is anything with ``cells(n)``, ``face(cell, j)`` and
``degeneracy(cell, j)`` whose cells are hashable values; ``Nerve`` is the
main instance.  On top of that this module builds boundary tuples, the
compatibility kernel of each dimension, horns, the horn-to-boundary map,
coskeletality and Kan checks, and brute-force homotopy groups.

Kernels and horns are assembled by a hash join on shared faces: position k
is added by indexing candidate cells on their first k faces, never by
filtering the full product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Protocol

from .algebra import ValidationReport, Violation
from .errors import CapacityError, CompatibilityError, DEFAULT_CAPACITY, NotKanError
from .groups import GroupPresentation


class LevelProvider(Protocol):
    def cells(self, n: int, cap: int = ...) -> Iterable[Hashable]: ...

    def face(self, cell, j: int): ...

    def degeneracy(self, cell, j: int): ...


@dataclass(frozen=True)
class BoundaryTuple:
    """Ordered faces (x_0, ..., x_n) pairwise compatible as a boundary."""

    faces: tuple

    @property
    def dim(self) -> int:
        return len(self.faces) - 1


@dataclass(frozen=True)
class HornTuple:
    """A boundary tuple with the face at position ``omitted`` missing.

    ``faces`` lists the present faces in slot order; ``slots()`` recovers
    their positions.
    """

    dim: int
    omitted: int
    faces: tuple

    def slots(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.dim + 1) if k != self.omitted)

    def face_at(self, slot: int):
        if slot == self.omitted:
            raise CompatibilityError(f"slot {slot} is the omitted one")
        return self.faces[slot if slot < self.omitted else slot - 1]


def _cells_list(p: LevelProvider, n: int, cap: int) -> list:
    out = []
    for c in p.cells(n, cap=cap):
        out.append(c)
        if len(out) > cap:
            raise CapacityError(f"more than {cap} cells in dimension {n}", cap=cap)
    return out


def boundary(p: LevelProvider, cell, n: int | None = None) -> BoundaryTuple:
    """The face tuple (d_0 x, ..., d_n x) of a cell of dimension n >= 1."""
    if n is None:
        n = cell.dim
    return BoundaryTuple(tuple(p.face(cell, j) for j in range(n + 1)))


def is_compatible(p: LevelProvider, t: BoundaryTuple) -> bool:
    """Membership test for the dimension-n kernel: d_j x_k == d_{k-1} x_j."""
    n = t.dim
    if n < 2:
        return True
    f = t.faces
    for j in range(n):
        for k in range(j + 1, n + 1):
            if p.face(f[k], j) != p.face(f[j], k - 1):
                return False
    return True


def is_compatible_horn(p: LevelProvider, h: HornTuple) -> bool:
    n = h.dim
    if n < 2:
        return True
    slots = h.slots()
    for a, j in enumerate(slots):
        for b in range(a + 1, len(slots)):
            k = slots[b]
            if p.face(h.faces[b], j) != p.face(h.faces[a], k - 1):
                return False
    return True


def simplicial_kernel(p: LevelProvider, n: int, cap: int = DEFAULT_CAPACITY) -> list[BoundaryTuple]:
    """All compatible face tuples in dimension n, by hash join."""
    if n < 1:
        raise CompatibilityError("kernel needs dimension >= 1")
    lower = _cells_list(p, n - 1, cap)
    if n == 1:
        pairs = [(a, b) for a in lower for b in lower]
        if len(pairs) > cap:
            raise CapacityError(f"kernel of dimension 1 exceeds {cap}", cap=cap)
        return [BoundaryTuple(t) for t in pairs]
    fv = {c: tuple(p.face(c, j) for j in range(n)) for c in lower}
    partial: list[tuple] = [(c,) for c in lower]
    for k in range(1, n + 1):
        index: dict[tuple, list] = {}
        for c in lower:
            index.setdefault(fv[c][:k], []).append(c)
        grown: list[tuple] = []
        for tup in partial:
            key = tuple(fv[tup[j]][k - 1] for j in range(k))
            for c in index.get(key, ()):
                grown.append(tup + (c,))
        if len(grown) > cap:
            raise CapacityError(f"kernel of dimension {n} exceeds {cap} at stage {k}", cap=cap)
        partial = grown
    return [BoundaryTuple(t) for t in partial]


def horns(p: LevelProvider, n: int, l: int, cap: int = DEFAULT_CAPACITY) -> list[HornTuple]:
    """All horns of dimension n with slot l omitted, by hash join."""
    if not 0 <= l <= n:
        raise CompatibilityError(f"horn position {l} out of range for dimension {n}")
    if n < 1:
        raise CompatibilityError("horns need dimension >= 1")
    lower = _cells_list(p, n - 1, cap)
    positions = [k for k in range(n + 1) if k != l]
    if n == 1:
        return [HornTuple(1, l, (c,)) for c in lower]
    fv = {c: tuple(p.face(c, j) for j in range(n)) for c in lower}
    partial: list[tuple] = [()]
    seen: list[int] = []
    for k in positions:
        relevant = [j for j in seen if j < k]
        index: dict[tuple, list] = {}
        for c in lower:
            index.setdefault(tuple(fv[c][j] for j in relevant), []).append(c)
        grown: list[tuple] = []
        for tup in partial:
            key = tuple(fv[tup[seen.index(j)]][k - 1] for j in relevant)
            for c in index.get(key, ()):
                grown.append(tup + (c,))
        if len(grown) > cap:
            raise CapacityError(f"horns of dimension {n} exceed {cap} at slot {k}", cap=cap)
        partial = grown
        seen.append(k)
    return [HornTuple(n, l, t) for t in partial]


def beta(p: LevelProvider, h: HornTuple) -> BoundaryTuple:
    """Collapse a horn one dimension down.

    Sends (x_0, ..., ^x_l, ..., x_n) to
    (d_{l-1} x_0, ..., d_{l-1} x_{l-1}, d_l x_{l+1}, ..., d_l x_n), which is
    always a compatible boundary tuple.
    """
    l = h.omitted
    parts = []
    for slot, x in zip(h.slots(), h.faces):
        parts.append(p.face(x, l - 1) if slot < l else p.face(x, l))
    return BoundaryTuple(tuple(parts))


def horn_of_cell(p: LevelProvider, cell, l: int, n: int | None = None) -> HornTuple:
    """The horn obtained by forgetting face l of a cell's boundary."""
    if n is None:
        n = cell.dim
    faces = tuple(p.face(cell, j) for j in range(n + 1) if j != l)
    return HornTuple(n, l, faces)


# -- identity audit ------------------------------------------------------

_FAMILIES = ("simp1", "simp2", "simp3", "simp4", "simp5", "simp6")


def audit_simplicial(p: LevelProvider, maxdim: int, cap: int = DEFAULT_CAPACITY) -> ValidationReport:
    """Exhaustively check the six face/degeneracy identity families on all
    cells of dimension <= maxdim; first witness per family.

    simp1: d_j d_k = d_{k-1} d_j (j < k)        simp2: d_j s_k = s_{k-1} d_j (j < k)
    simp3: d_j s_j = id                          simp4: d_{j+1} s_j = id
    simp5: d_k s_j = s_j d_{k-1} (j < k-1)       simp6: s_j s_{k-1} = s_k s_j (j < k)
    """
    face, degen = p.face, p.degeneracy
    found: dict[str, Violation] = {}

    def hit(family: str, witness: tuple, detail: str) -> None:
        if family not in found:
            found[family] = Violation(family, witness, detail)

    for n in range(maxdim + 1):
        for cell in p.cells(n, cap=cap):
            if n >= 2 and "simp1" not in found:
                stop = False
                for k in range(1, n + 1):
                    for j in range(k):
                        if face(face(cell, k), j) != face(face(cell, j), k - 1):
                            hit("simp1", (n, j, k, cell), "d_j d_k != d_{k-1} d_j")
                            stop = True
                            break
                    if stop:
                        break
            degs = [degen(cell, j) for j in range(n + 1)]
            if "simp3" not in found:
                for j in range(n + 1):
                    if face(degs[j], j) != cell:
                        hit("simp3", (n, j, cell), "d_j s_j != id")
                        break
            if "simp4" not in found:
                for j in range(n + 1):
                    if face(degs[j], j + 1) != cell:
                        hit("simp4", (n, j, cell), "d_{j+1} s_j != id")
                        break
            if n >= 1 and "simp2" not in found:
                stop = False
                for k in range(1, n + 1):
                    for j in range(k):
                        if face(degs[k], j) != degen(face(cell, j), k - 1):
                            hit("simp2", (n, j, k, cell), "d_j s_k != s_{k-1} d_j")
                            stop = True
                            break
                    if stop:
                        break
            if n >= 1 and "simp5" not in found:
                stop = False
                for k in range(2, n + 2):
                    for j in range(k - 1):
                        if face(degs[j], k) != degen(face(cell, k - 1), j):
                            hit("simp5", (n, j, k, cell), "d_k s_j != s_j d_{k-1}")
                            stop = True
                            break
                    if stop:
                        break
            if "simp6" not in found:
                stop = False
                for k in range(1, n + 2):
                    for j in range(k):
                        if degen(degs[k - 1], j) != degen(degs[j], k):
                            hit("simp6", (n, j, k, cell), "s_j s_{k-1} != s_k s_j")
                            stop = True
                            break
                    if stop:
                        break
        if len(found) == len(_FAMILIES):
            break
    ordered = tuple(found[f] for f in _FAMILIES if f in found)
    return ValidationReport(ordered)


# -- coskeletality ---------------------------------------------------------

@dataclass(frozen=True)
class CoskeletalRecord:
    dim: int
    cell_count: int
    kernel_size: int
    injective: bool
    surjective: bool
    injectivity_witness: tuple | None = None
    surjectivity_witness: BoundaryTuple | None = None

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


def check_coskeletal(p: LevelProvider, n: int, upto: int, cap: int = DEFAULT_CAPACITY) -> list[CoskeletalRecord]:
    """Decide bijectivity of the boundary map in each dimension n < k <= upto."""
    records = []
    for k in range(n + 1, upto + 1):
        kernel = simplicial_kernel(p, k, cap=cap)
        kernel_set = set(kernel)
        image: dict[BoundaryTuple, object] = {}
        injective = True
        inj_witness = None
        count = 0
        for cell in p.cells(k, cap=cap):
            count += 1
            bt = boundary(p, cell, k)
            other = image.get(bt)
            if other is not None and other != cell:
                if injective:
                    injective = False
                    inj_witness = (other, cell)
            else:
                image[bt] = cell
        missing = kernel_set - image.keys()
        surjective = not missing
        surj_witness = min(missing, key=lambda t: tuple(f.sort_key() for f in t.faces)) if missing else None
        extra = image.keys() - kernel_set
        if extra:
            raise CompatibilityError(f"boundary of a {k}-cell escaped the kernel; provider is broken")
        records.append(
            CoskeletalRecord(
                dim=k,
                cell_count=count,
                kernel_size=len(kernel_set),
                injective=injective,
                surjective=surjective,
                injectivity_witness=inj_witness,
                surjectivity_witness=surj_witness,
            )
        )
    return records


# -- Kan -------------------------------------------------------------------

@dataclass(frozen=True)
class KanRecord:
    dim: int
    omitted: int
    horn_count: int
    unfillable: int
    witness: HornTuple | None = None

    @property
    def fillable(self) -> bool:
        return self.unfillable == 0


@dataclass(frozen=True)
class KanReport:
    records: tuple[KanRecord, ...]

    @property
    def is_kan(self) -> bool:
        return all(r.fillable for r in self.records)

    def first_failure(self) -> KanRecord | None:
        for r in self.records:
            if not r.fillable:
                return r
        return None


def check_kan(p: LevelProvider, upto: int, from_dim: int = 1, cap: int = DEFAULT_CAPACITY) -> KanReport:
    """Brute-force fillability of every horn in dimensions from_dim..upto."""
    records = []
    for n in range(from_dim, upto + 1):
        cells_n = _cells_list(p, n, cap)
        fv = [tuple(p.face(c, j) for j in range(n + 1)) for c in cells_n]
        for l in range(n + 1):
            filled = {tuple(v[j] for j in range(n + 1) if j != l) for v in fv}
            all_horns = horns(p, n, l, cap=cap)
            bad = 0
            witness = None
            for h in all_horns:
                if h.faces not in filled:
                    bad += 1
                    if witness is None:
                        witness = h
            records.append(KanRecord(n, l, horn_count=len(all_horns), unfillable=bad, witness=witness))
    return KanReport(tuple(records))


# -- homotopy groups by brute force -----------------------------------------

def _degenerate_tower(p: LevelProvider, basepoint, upto: int) -> list:
    tower = [basepoint]
    for _ in range(upto):
        tower.append(p.degeneracy(tower[-1], 0))
    return tower


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def pi_bruteforce(
    p: LevelProvider,
    n: int,
    basepoint,
    cap: int = DEFAULT_CAPACITY,
    verify_kan: bool = True,
) -> GroupPresentation:
    """Homotopy group in dimension n >= 1 at a 0-cell, by exhaustive search.

    Elements are cells whose whole boundary is the degenerate basepoint,
    identified when some (n+1)-cell has boundary (x, ..., x, y, z); the
    product of two classes is read off a filler of the horn that puts the
    representatives at slots n-1 and n+1.  Requires the provider to be Kan
    through dimension n+2; with ``verify_kan`` the check is run first and a
    failure raises NotKanError with the witness horn.
    """
    if n < 1:
        raise CompatibilityError("brute-force homotopy groups start at dimension 1")
    if verify_kan:
        report = check_kan(p, upto=n + 2, cap=cap)
        failure = report.first_failure()
        if failure is not None:
            raise NotKanError(failure.dim, failure.omitted, failure.witness)

    tower = _degenerate_tower(p, basepoint, n + 1)
    x_below, x_level = tower[n - 1], tower[n]

    members = [
        c
        for c in _cells_list(p, n, cap)
        if all(p.face(c, j) == x_below for j in range(n + 1))
    ]
    if not members:
        raise CompatibilityError("degenerate basepoint cell missing from its own level")

    uf = _UnionFind(members)
    member_set = set(members)
    upper = _cells_list(p, n + 1, cap)
    for w in upper:
        if all(p.face(w, j) == x_level for j in range(n)):
            y = p.face(w, n)
            z = p.face(w, n + 1)
            if y in member_set and z in member_set:
                uf.union(y, z)

    classes: dict = {}
    for c in members:
        root = uf.find(c)
        cur = classes.get(root)
        if cur is None or c.sort_key() < cur.sort_key():
            classes[root] = c
    reps = sorted(classes.values(), key=lambda c: c.sort_key())
    rep_of = {c: classes[uf.find(c)] for c in members}
    index_of = {rep: i for i, rep in enumerate(reps)}

    def fill_product(y, z):
        for w in upper:
            if (
                all(p.face(w, j) == x_level for j in range(n - 1))
                and p.face(w, n - 1) == y
                and p.face(w, n + 1) == z
            ):
                return p.face(w, n)
        return None

    table = []
    for y in reps:
        row = []
        for z in reps:
            d = fill_product(y, z)
            if d is None:
                raise NotKanError(n + 1, n, witness=(y, z))
            if d not in rep_of:
                raise CompatibilityError("product landed outside the based cells; provider is broken")
            row.append(index_of[rep_of[d]])
        table.append(tuple(row))

    unit = index_of[rep_of[x_level]]
    labels = tuple(rep.text() if hasattr(rep, "text") else repr(rep) for rep in reps)
    g = GroupPresentation(labels=labels, unit=unit, table=tuple(table))
    g.verify()
    return g

"""Closed-form homotopy groups of crossed-module nerves, with cross checks.

For a crossed module the fundamental group at an object t is the quotient of
the endomorphism group C(t,t) by the (normal) image of the boundary, and the
second homotopy group is the kernel of the boundary, a commutative group.
``pi_compare`` recomputes both through the generic simplicial brute force
and exhibits an explicit isomorphism between the two answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Classification, CrossedMonoid, classify_structure
from .errors import CompatibilityError, DEFAULT_CAPACITY, NotCrossedModuleError, XNerveError
from .groups import GroupPresentation, find_isomorphism, subgroup_presentation
from .nerve import Nerve
from .simplicial import pi_bruteforce


def pi0(xm: CrossedMonoid) -> tuple[tuple[int, ...], ...]:
    """Zig-zag connected components of the objects, each sorted, in order of
    their smallest member."""
    cat = xm.cat
    parent = list(range(cat.num_objects))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in cat.morphisms():
        a, b = find(cat.src[m]), find(cat.tgt[m])
        if a != b:
            parent[max(a, b)] = min(a, b)
    buckets: dict[int, list[int]] = {}
    for x in cat.objects():
        buckets.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(v)) for _, v in sorted(buckets.items()))


def _require_module(xm: CrossedMonoid, classification: Classification | None) -> Classification:
    cls = classification if classification is not None else classify_structure(xm)
    failed = cls.failed_module_hypothesis()
    if failed is not None:
        raise NotCrossedModuleError(failed[0], failed[1])
    return cls


def pi1(xm: CrossedMonoid, t: int, classification: Classification | None = None) -> GroupPresentation:
    """C(t,t) modulo the image of the boundary, with [g][h] = [g*h].

    Verifies that the image really is normal before forming cosets.
    """
    _require_module(xm, classification)
    cat = xm.cat
    loops = list(cat.hom(t, t))
    image = sorted({xm.boundary[t][a] for a in xm.fibers[t].elements()})
    image_set = set(image)
    inv = cat.morphism_inverse
    for g in loops:
        for h in image:
            conj = cat.compose(cat.compose(inv[g], h), g)
            if conj not in image_set:
                raise XNerveError(
                    f"boundary image not normal in C({t},{t}): {g}^-1 * {h} * {g} escapes"
                )

    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for g in loops:
        if g in coset_of:
            continue
        rep = len(reps)
        members = sorted(cat.compose(g, h) for h in image)
        lead = members[0]
        for m in members:
            coset_of[m] = rep
        reps.append(lead)
    # re-index so class labels follow the smallest representative
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    relabel = {old: new for new, old in enumerate(order)}
    coset_of = {g: relabel[c] for g, c in coset_of.items()}
    reps = [reps[i] for i in order]

    table = tuple(
        tuple(coset_of[cat.compose(a, b)] for b in reps)
        for a in reps
    )
    g = GroupPresentation(
        labels=tuple(f"[{r}]" for r in reps),
        unit=coset_of[cat.identity[t]],
        table=table,
    )
    g.verify()
    return g


def pi2(xm: CrossedMonoid, t: int, classification: Classification | None = None) -> GroupPresentation:
    """Kernel of the boundary at t, as a group; commutativity is asserted."""
    _require_module(xm, classification)
    fiber = xm.fibers[t]
    one = xm.cat.identity[t]
    kernel = [a for a in fiber.elements() if xm.boundary[t][a] == one]
    g = subgroup_presentation(
        labels=[str(a) for a in kernel],
        elements=kernel,
        mul=fiber.mul,
        unit=fiber.unit,
    )
    g.verify()
    if not g.is_abelian:
        raise XNerveError(f"boundary kernel at object {t} is not commutative; structure invalid")
    return g


@dataclass(frozen=True)
class PiComparison:
    n: int
    basepoint: int
    algebraic: GroupPresentation
    bruteforce: GroupPresentation
    isomorphism: tuple[int, ...] | None

    @property
    def isomorphic(self) -> bool:
        return self.isomorphism is not None


def pi_compare(
    xm: CrossedMonoid,
    n: int,
    t: int,
    cap: int = DEFAULT_CAPACITY,
    verify_kan: bool = True,
    classification: Classification | None = None,
) -> PiComparison:
    """Compute the homotopy group both ways and search for an isomorphism."""
    if n not in (1, 2):
        raise CompatibilityError("closed forms exist for dimensions 1 and 2 only")
    cls = _require_module(xm, classification)
    algebraic = pi1(xm, t, cls) if n == 1 else pi2(xm, t, cls)
    nerve = Nerve(xm)
    brute = pi_bruteforce(nerve, n, nerve.point(t), cap=cap, verify_kan=verify_kan)
    iso = find_isomorphism(algebraic, brute)
    return PiComparison(n=n, basepoint=t, algebraic=algebraic, bruteforce=brute, isomorphism=iso)


@dataclass(frozen=True)
class VanishingReport:
    n: int
    basepoint: int
    based_cells: int
    classes: int

    @property
    def trivial(self) -> bool:
        return self.classes == 1


def higher_vanishing(
    xm: CrossedMonoid,
    t: int,
    n: int = 3,
    cap: int = DEFAULT_CAPACITY,
    classification: Classification | None = None,
) -> VanishingReport:
    """Check that the homotopy group above dimension 2 is trivial.

    Counts cells of dimension n whose whole boundary is the degenerate
    basepoint and merges them through (n+1)-cells, exactly as the brute
    force does, but asserts the Kan property instead of re-deriving it:
    crossed-module nerves are Kan, and enumerating every dimension-(n+2)
    horn just to re-prove that would blow the budget on large fibers.
    """
    _require_module(xm, classification)
    nerve = Nerve(xm)
    base = nerve.point(t)
    tower = [base]
    for _ in range(n + 1):
        tower.append(nerve.degeneracy(tower[-1], 0))
    x_below, x_level = tower[n - 1], tower[n]

    members = [
        c for c in nerve.cells(n, cap=cap)
        if all(nerve.face(c, j) == x_below for j in range(n + 1))
    ]
    member_set = set(members)
    parent = {c: c for c in members}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for w in nerve.cells(n + 1, cap=cap):
        if all(nerve.face(w, j) == x_level for j in range(n)):
            y, z = nerve.face(w, n), nerve.face(w, n + 1)
            if y in member_set and z in member_set:
                ry, rz = find(y), find(z)
                if ry != rz:
                    parent[ry] = rz
    classes = len({find(c) for c in members})
    return VanishingReport(n=n, basepoint=t, based_cells=len(members), classes=classes)

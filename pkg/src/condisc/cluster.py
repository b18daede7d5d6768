"""Rooted refinement tree of the valuation matrix, with vertex statistics.

Vertices are in bijection with blow-up generations: one vertex per depth
``d >= 1`` and per equivalence class of indices under ``m[i][j] >= d`` that
still holds two or more roots, plus the root vertex (all indices, depth 0).
A cluster persisting across several depths therefore becomes a chain, one
vertex per depth step; collapsing those chains would change the separation
statistics that every formula downstream is stated in.

Per vertex we track:

* ``wt``       -- number of roots in the vertex's disk,
* ``l_prime``  -- roots that separate here (singleton at the next depth),
* ``r`` / ``s``-- children of odd / even weight,
* ``l``        -- l_prime + r,
* ``f_val``    -- order of vanishing of f along the component (root: 0,
  child: parent + child weight), whose parity drives the double cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation, UltrametricViolationError
from .valuation import INFINITY, ValuationMatrix, _check_count, validate_ultrametric


@dataclass(frozen=True)
class ClusterVertex:
    id: int
    depth: int
    members: frozenset[int]
    parent: int | None
    children: tuple[int, ...]
    wt: int
    l_prime: int
    r: int
    s: int
    l: int
    f_val: int
    sep_roots: tuple[int, ...]

    @property
    def odd(self) -> bool:
        return self.f_val % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class ClusterTree:
    vertices: tuple[ClusterVertex, ...]
    num_roots: int

    @property
    def root(self) -> ClusterVertex:
        return self.vertices[0]

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, vid: int) -> ClusterVertex:
        v = self.vertices[vid]
        assert v.id == vid
        return v

    def parent_odd(self, v: ClusterVertex) -> bool:
        return v.parent is not None and self[v.parent].odd


def build_cluster_tree(m: ValuationMatrix, *, allow_small: bool = False) -> ClusterTree:
    """Build the annotated refinement tree from a valuation matrix.

    The matrix must be ultrametric; violations are rejected up front.  For a
    cluster whose minimum internal valuation exceeds its depth, chain
    vertices are emitted one per intermediate depth before the split.
    """
    n = m.n
    _check_count(n, allow_small)
    verdict = validate_ultrametric(m)
    if not verdict.ok:
        raise UltrametricViolationError(verdict.violations)

    # raw records: (members_sorted_tuple, depth, parent_raw_index)
    raw: list[tuple[tuple[int, ...], int, int | None]] = []

    def grow(members: tuple[int, ...], depth: int, parent: int | None) -> None:
        me = len(raw)
        raw.append((members, depth, parent))
        floor = min(m.at(i, j) for ai, i in enumerate(members) for j in members[ai + 1 :])
        if floor is INFINITY:
            raise InternalInvariantViolation("infinite valuation inside a cluster", vertex=members)
        # chain: the cluster survives unchanged until depth == floor
        while depth < floor:
            depth += 1
            raw.append((members, depth, me))
            me = len(raw) - 1
        # split at depth floor into classes of m >= floor + 1
        classes: list[list[int]] = []
        for i in members:
            for cls in classes:
                if m.at(i, cls[0]) >= floor + 1:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        for cls in sorted(classes):
            if len(cls) >= 2:
                grow(tuple(cls), floor + 1, me)

    grow(tuple(range(n)), 0, None)

    # canonical ids: sort by (depth, smallest member)
    order = sorted(range(len(raw)), key=lambda k: (raw[k][1], raw[k][0][0]))
    newid = {old: new for new, old in enumerate(order)}

    children: dict[int, list[int]] = {i: [] for i in range(len(raw))}
    for old, (_, _, parent) in enumerate(raw):
        if parent is not None:
            children[newid[parent]].append(newid[old])

    vertices: list[ClusterVertex] = []
    f_vals: dict[int, int] = {}
    for new, old in enumerate(order):
        members, depth, parent = raw[old]
        kid_ids = tuple(sorted(children[new]))
        kid_members = set()
        kid_wts = []
        for k in kid_ids:
            km, _, _ = raw[order[k]]
            kid_members.update(km)
            kid_wts.append(len(km))
        sep = tuple(i for i in members if i not in kid_members)
        wt = len(members)
        r = sum(1 for w in kid_wts if w % 2 == 1)
        s = len(kid_wts) - r
        pid = newid[parent] if parent is not None else None
        f_val = (f_vals[pid] + wt) if pid is not None else 0
        f_vals[new] = f_val
        vertices.append(
            ClusterVertex(
                id=new,
                depth=depth,
                members=frozenset(members),
                parent=pid,
                children=kid_ids,
                wt=wt,
                l_prime=len(sep),
                r=r,
                s=s,
                l=len(sep) + r,
                f_val=f_val,
                sep_roots=sep,
            )
        )
    return ClusterTree(tuple(vertices), num_roots=n)


def local_disc(v: ClusterVertex, tree: ClusterTree) -> int:
    """Per-vertex share of the equation discriminant: sum of wt(wt-1) over children."""
    return sum(tree[c].wt * (tree[c].wt - 1) for c in v.children)


def equation_discriminant(m: ValuationMatrix) -> int:
    """Valuation of disc(f) as a degree-(2g+2) polynomial: twice the sum of pairwise valuations."""
    total = 0
    for i in range(m.n):
        for j in range(i + 1, m.n):
            total += m.at(i, j)
    return 2 * total


def check_tree_invariants(tree: ClusterTree) -> None:
    """Structural identities every refinement tree satisfies; bugs raise."""
    root = tree.root
    if root.depth != 0 or root.members != frozenset(range(tree.num_roots)):
        raise InternalInvariantViolation("root must hold all roots at depth 0", vertex=root.id)
    if root.odd:
        raise InternalInvariantViolation("root parity must be even", vertex=root.id)
    if root.l % 2 != 0:
        raise InternalInvariantViolation("root must have even l", vertex=root.id)
    for v in tree:
        if v.wt < 2:
            raise InternalInvariantViolation("vertex weight below 2", vertex=v.id)
        if v.wt != v.l_prime + sum(tree[c].wt for c in v.children):
            raise InternalInvariantViolation("wt != l_prime + sum of child weights", vertex=v.id)
        if v.l != v.l_prime + v.r:
            raise InternalInvariantViolation("l != l_prime + r", vertex=v.id)
        if v.wt < v.l_prime + 3 * v.r + 2 * v.s:
            raise InternalInvariantViolation("wt < l_prime + 3r + 2s", vertex=v.id)
        if v.r == v.s == 0 and v.wt != v.l_prime:
            raise InternalInvariantViolation("leaf with wt != l_prime", vertex=v.id)
        if v.parent is not None:
            p = tree[v.parent]
            if v.f_val - p.f_val != v.wt:
                raise InternalInvariantViolation("f_val(child) != f_val(parent) + wt", vertex=v.id)
            if not v.members <= p.members:
                raise InternalInvariantViolation("child members not inside parent", vertex=v.id)
            if v.depth != p.depth + 1:
                raise InternalInvariantViolation("child depth != parent depth + 1", vertex=v.id)
            # parity table: odd child of even parent <=> odd weight, of odd parent <=> even weight
            expect_odd = (v.wt % 2 == 1) if not p.odd else (v.wt % 2 == 0)
            if v.odd != expect_odd:
                raise InternalInvariantViolation("child parity contradicts weight parity rule", vertex=v.id)
        if not v.odd:
            # an even vertex has odd l exactly when its parent exists and is odd
            if (v.l % 2 == 1) != tree.parent_odd(v):
                raise InternalInvariantViolation("even vertex with l parity contradicting parent parity", vertex=v.id)
        if v.odd and v.f_val % 2 == 0:
            raise InternalInvariantViolation("parity flag disagrees with f_val", vertex=v.id)
        # children of one vertex hold disjoint member sets
        seen: set[int] = set()
        for c in v.children:
            if seen & tree[c].members:
                raise InternalInvariantViolation("overlapping child member sets", vertex=v.id)
            seen |= tree[c].members

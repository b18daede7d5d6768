"""Dual graphs of the intermediate and final regular models.

The cover graph is produced in two steps that mirror the geometry:

* ``build_ty``: start from the refinement tree, subdivide every edge whose
  two endpoints are both odd with an (even) inserted vertex, and hang one
  even leaf per root separating at an odd vertex.  Afterwards no two odd
  vertices are adjacent, which is exactly what makes the double cover of the
  next step regular.
* ``build_tx``: take the double cover branched along the odd vertices and
  the attached root divisors.  An even vertex meeting the branch locus at
  ``beta`` points carries one component of Euler characteristic ``4 - beta``;
  an even vertex disjoint from it splits into two rational sheets; odd and
  inserted vertices carry one component of multiplicity 2.

Sheet pairing across adjacent split vertices is sheet-index-preserving.  The
two sheets of a split region are interchangeable by a graph automorphism, so
every numeric invariant computed here is independent of that choice; we fix
it so output is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cluster import ClusterTree
from .errors import (
    DisconnectedCover,
    GenusMismatch,
    InternalInvariantViolation,
    NonIntegralSelfIntersection,
)

ST = "strict"    # strict transform of a tree vertex
INSERT = "insert"  # subdivision vertex on an odd-odd edge
LEAF = "leaf"    # blow-up of an odd component / root divisor intersection


@dataclass(frozen=True)
class YVertex:
    id: int
    kind: str                      # ST | INSERT | LEAF
    origin: tuple[int, ...]        # ST: (b,)  INSERT: (parent_b, child_b)  LEAF: (b, root_index)
    odd: bool
    attached_roots: tuple[int, ...]


@dataclass(frozen=True)
class YGraph:
    vertices: tuple[YVertex, ...]
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    root: int
    tree: ClusterTree

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, vid: int) -> YVertex:
        return self.vertices[vid]

    def neighbors(self, vid: int):
        out = list(self.children[vid])
        if vid in self.parent:
            out.append(self.parent[vid])
        return out

    def beta(self, vid: int) -> int:
        """Branch-locus intersections: odd neighbors plus attached roots."""
        v = self.vertices[vid]
        return sum(1 for w in self.neighbors(vid) if self.vertices[w].odd) + len(v.attached_roots)

    def base_vertex(self, vid: int) -> int:
        """Tree vertex a cover vertex sits over (inserts map to the parent side)."""
        return self.vertices[vid].origin[0]


def build_ty(tree: ClusterTree) -> YGraph:
    vertices: list[YVertex] = []
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {}

    for v in tree:  # strict transforms reuse tree ids
        attached = v.sep_roots if not v.odd else ()
        vertices.append(YVertex(id=v.id, kind=ST, origin=(v.id,), odd=v.odd, attached_roots=attached))
        children[v.id] = []

    def connect(p: int, c: int) -> None:
        parent[c] = p
        children[p].append(c)

    nxt = len(tree)
    for v in tree:
        for c in v.children:
            if v.odd and tree[c].odd:
                mid = nxt
                nxt += 1
                vertices.append(YVertex(id=mid, kind=INSERT, origin=(v.id, c), odd=False, attached_roots=()))
                children[mid] = []
                connect(v.id, mid)
                connect(mid, c)
            else:
                connect(v.id, c)
    for v in tree:
        if v.odd:
            for i in v.sep_roots:
                leaf = nxt
                nxt += 1
                vertices.append(YVertex(id=leaf, kind=LEAF, origin=(v.id, i), odd=False, attached_roots=(i,)))
                children[leaf] = []
                connect(v.id, leaf)

    g = YGraph(
        vertices=tuple(vertices),
        parent=parent,
        children={k: tuple(v) for k, v in children.items()},
        root=tree.root.id,
        tree=tree,
    )
    check_y_invariants(g)
    return g


def check_y_invariants(y: YGraph) -> None:
    tree = y.tree
    for v in y:
        if v.odd:
            for w in y.neighbors(v.id):
                if y[w].odd:
                    raise InternalInvariantViolation("two odd cover vertices are adjacent", vertex=(v.id, w))
            if v.kind != ST:
                raise InternalInvariantViolation("inserted vertices must be even", vertex=v.id)
        else:
            if y.beta(v.id) % 2 != 0:
                raise InternalInvariantViolation("odd branch degree at an even vertex", vertex=v.id)
        if v.kind == ST and not v.odd:
            b = tree[v.origin[0]]
            if y.beta(v.id) != b.l + (b.l % 2):
                raise InternalInvariantViolation(
                    "branch degree != l + (l mod 2) at an even strict transform", vertex=v.id
                )


@dataclass(frozen=True)
class XComponent:
    id: int
    over: int              # YVertex id
    sheet: int | None      # 0 / 1 when the cover splits over `over`
    m: int                 # multiplicity in the special fiber, 1 or 2
    chi: int               # etale Euler characteristic


@dataclass(frozen=True)
class XGraph:
    components: tuple[XComponent, ...]
    edges: dict[tuple[int, int], int]          # (a, b) with a < b -> intersection number
    children: dict[int, tuple[int, ...]]       # direction inherited from the cover tree
    over: dict[int, tuple[int, ...]]           # YVertex id -> component ids
    genus: int
    ygraph: YGraph

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, cid: int) -> XComponent:
        return self.components[cid]

    @property
    def n_components(self) -> int:
        return len(self.components)

    def weight(self, a: int, b: int) -> int:
        return self.edges.get((min(a, b), max(a, b)), 0)

    def neighbors(self, cid: int):
        for (a, b), w in self.edges.items():
            if a == cid:
                yield b, w
            elif b == cid:
                yield a, w

    def base_vertex(self, cid: int) -> int:
        """Tree vertex under a component (composite of the two projections)."""
        return self.ygraph.base_vertex(self.components[cid].over)

    def total_edge_weight(self) -> int:
        return sum(self.edges.values())


def build_tx(y: YGraph) -> XGraph:
    tree = y.tree
    comps: list[XComponent] = []
    over: dict[int, tuple[int, ...]] = {}

    for v in y:
        if v.odd:
            ids = (len(comps),)
            comps.append(XComponent(id=ids[0], over=v.id, sheet=None, m=2, chi=2))
        else:
            b = y.beta(v.id)
            if b == 0:
                ids = (len(comps), len(comps) + 1)
                comps.append(XComponent(id=ids[0], over=v.id, sheet=0, m=1, chi=2))
                comps.append(XComponent(id=ids[1], over=v.id, sheet=1, m=1, chi=2))
            else:
                ids = (len(comps),)
                mult = 2 if v.kind == INSERT else 1
                comps.append(XComponent(id=ids[0], over=v.id, sheet=None, m=mult, chi=4 - b))
        over[v.id] = ids

    edges: dict[tuple[int, int], int] = {}
    children: dict[int, list[int]] = {c.id: [] for c in comps}

    def add_edge(p: int, c: int, w: int) -> None:
        edges[(min(p, c), max(p, c))] = w
        children[p].append(c)

    for p_id in sorted(y.children):
        for c_id in y.children[p_id]:
            up, dn = over[p_id], over[c_id]
            if len(up) == 1 and len(dn) == 1:
                both_even = not y[p_id].odd and not y[c_id].odd
                add_edge(up[0], dn[0], 2 if both_even else 1)
            elif len(up) == 2 and len(dn) == 1:
                add_edge(up[0], dn[0], 1)
                add_edge(up[1], dn[0], 1)
            elif len(up) == 1 and len(dn) == 2:
                add_edge(up[0], dn[0], 1)
                add_edge(up[0], dn[1], 1)
            else:  # parallel sheets stay parallel
                add_edge(up[0], dn[0], 1)
                add_edge(up[1], dn[1], 1)

    x = XGraph(
        components=tuple(comps),
        edges=edges,
        children={k: tuple(v) for k, v in children.items()},
        over=over,
        genus=(tree.num_roots - 2) // 2,
        ygraph=y,
    )
    _check_connected(x)
    check_x_invariants(x)
    return x


def _check_connected(x: XGraph) -> None:
    if not x.components:
        raise DisconnectedCover("cover graph has no components")
    seen = {0}
    stack = [0]
    adj: dict[int, list[int]] = {c.id: [] for c in x.components}
    for a, b in x.edges:
        adj[a].append(b)
        adj[b].append(a)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != x.n_components:
        raise DisconnectedCover("cover graph is disconnected; construction rule violated")


def check_x_invariants(x: XGraph) -> None:
    y = x.ygraph
    tree = y.tree
    for v in y:
        ids = x.over[v.id]
        if len(ids) not in (1, 2):
            raise InternalInvariantViolation("fiber size must be 1 or 2", vertex=v.id)
        if len(ids) == 2 and (v.odd or y.beta(v.id) != 0):
            raise InternalInvariantViolation("split fiber over a branched vertex", vertex=v.id)
    for c in x:
        base_odd = tree[x.base_vertex(c.id)].odd
        expect_m2 = base_odd and y[c.over].kind != LEAF
        if (c.m == 2) != expect_m2:
            raise InternalInvariantViolation("multiplicity contradicts the cover rule", vertex=c.id)
        if c.m == 2 and c.chi != 2:
            raise InternalInvariantViolation("multiplicity-2 component must be rational", vertex=c.id)
    for (a, b), w in x.edges.items():
        if w not in (1, 2):
            raise InternalInvariantViolation("intersection number outside {1, 2}", vertex=(a, b))
        if w == 2:
            va, vb = x[a].over, x[b].over
            ok = (
                not y[va].odd
                and not y[vb].odd
                and y.beta(va) > 0
                and y.beta(vb) > 0
                and x[a].m == 1
                and x[b].m == 1
            )
            if not ok:
                raise InternalInvariantViolation("weight-2 intersection in a forbidden position", vertex=(a, b))
    # over an odd tree vertex the fiber splits as 1 + s + l' components
    for bv in tree:
        if not bv.odd:
            continue
        fiber = [c for c in x if x.base_vertex(c.id) == bv.id]
        strict = [c for c in fiber if y[c.over].kind == ST]
        inserts = [c for c in fiber if y[c.over].kind == INSERT]
        leaves = [c for c in fiber if y[c.over].kind == LEAF]
        if len(strict) != 1 or len(inserts) != bv.s or len(leaves) != bv.l_prime:
            raise InternalInvariantViolation("odd fiber does not split as 1 + s + l'", vertex=bv.id)
        if any(c.m != 2 for c in strict + inserts) or any(c.m != 1 for c in leaves):
            raise InternalInvariantViolation("odd fiber multiplicities are wrong", vertex=bv.id)


def component_term(x: XGraph, cid: int) -> int:
    """One component's share of the conductor sum."""
    c = x[cid]
    term = (1 - c.m) * c.chi
    for w, wt in x.neighbors(cid):
        term += (x[w].m - 1) * wt
    for w in x.children[cid]:
        term += x.weight(cid, w)
    return term


def artin_conductor(x: XGraph) -> int:
    """Degeneracy of the model: -(chi of generic fiber) + chi of special fiber."""
    return sum(component_term(x, c.id) for c in x)


def self_intersections(x: XGraph) -> dict[int, int]:
    """Self-intersection of each component, from (whole fiber) . (component) = 0."""
    out: dict[int, int] = {}
    for c in x:
        s = sum(x[w].m * wt for w, wt in x.neighbors(c.id))
        q, rem = divmod(-s, c.m)
        if rem:
            raise NonIntegralSelfIntersection(
                f"self-intersection -{s}/{c.m} is not an integer", vertex=c.id
            )
        out[c.id] = q
    return out


def genus_check(x: XGraph, selfint: dict[int, int] | None = None) -> int:
    """Recompute 2g - 2 from the graph via adjunction; raises on mismatch."""
    if selfint is None:
        selfint = self_intersections(x)
    total = sum(c.m * (-c.chi - selfint[c.id]) for c in x)
    if total != 2 * x.genus - 2:
        raise GenusMismatch(f"adjunction total {total} != 2g - 2 = {2 * x.genus - 2}")
    return total


def detect_nonminimal(tree: ClusterTree) -> list[int]:
    """Vertices whose component chain contracts: odd, no separating roots,
    even parent, and a single even child.  Empty list means the model built
    here is already the minimal regular model."""
    found = []
    for v in tree:
        if (
            v.odd
            and v.l_prime == 0
            and v.parent is not None
            and not tree[v.parent].odd
            and len(v.children) == 1
            and not tree[v.children[0]].odd
        ):
            found.append(v.id)
    return found

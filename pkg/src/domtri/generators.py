"""Seeded generators for triangulation families.

Every generator emits a validated PlaneGraph (construction re-checks the
embedding), and the incremental families also return a BuildTrace that
replays to an identical graph.  All randomness flows through explicit
integer seeds; identical arguments give identical graphs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .plane_graph import (
    EmbeddingError,
    PlaneGraph,
    build_from_rotation,
    deleted_vertex_region_dart,
    delete_vertices,
    flip_edge,
)

_MASK64 = (1 << 64) - 1


def split_seed(seed: int, *indices: int) -> int:
    """Derive an independent child seed from a master seed and indices."""
    x = seed & _MASK64
    for i in indices:
        x = (x + 0x9E3779B97F4A7C15 + (i & _MASK64)) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        x = z ^ (z >> 31)
    return x


# -- traces -------------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    kind: str  # "stack" or "triangle"
    face: tuple[int, int, int]  # inner face walk the step subdivided
    new: tuple[int, ...]  # 1 id for stack, 3 ids (a, b, c) for triangle

    def __post_init__(self):
        if self.kind not in ("stack", "triangle"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if len(self.new) != (1 if self.kind == "stack" else 3):
            raise ValueError(f"step {self.kind!r} got new={self.new}")


@dataclass(frozen=True)
class BuildTrace:
    """Replayable construction recipe starting from the base triangle.

    For "triangle" steps the non-adjacency pairing is positional:
    new[0] is paired with face[0], new[1] with face[1], new[2] with
    face[2]; each new vertex is adjacent to the two face vertices it is
    not paired with.
    """

    family: str
    steps: tuple[TraceStep, ...]

    def to_json(self) -> str:
        doc = {
            "family": self.family,
            "steps": [
                {"kind": s.kind, "face": list(s.face), "new": list(s.new)}
                for s in self.steps
            ],
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "BuildTrace":
        doc = json.loads(text)
        steps = tuple(
            TraceStep(s["kind"], tuple(s["face"]), tuple(s["new"]))
            for s in doc["steps"]
        )
        return BuildTrace(doc["family"], steps)


# -- rotation surgery helpers -------------------------------------------------

_TRIANGLE_ROT = [[1, 2], [2, 0], [0, 1]]  # outer walk (0, 1, 2)
_TRIANGLE_OUTER = (0, 1, 2)


def _insert_span(rot, v, after, new_list):
    i = rot[v].index(after)
    rot[v][i + 1 : i + 1] = new_list


def _stack(rot, walk, w):
    """Stack vertex w into the inner face with walk (x, y, z)."""
    x, y, z = walk
    while len(rot) <= w:
        rot.append([])
    _insert_span(rot, x, z, [w])
    _insert_span(rot, y, x, [w])
    _insert_span(rot, z, y, [w])
    rot[w] = [x, z, y]


def _triangle_insert(rot, walk, a, b, c):
    """Insert triangle (a, b, c) into inner face (x, y, z) so that the six
    vertices induce an octahedron; a is the non-neighbor of x, b of y,
    c of z."""
    x, y, z = walk
    for w in (a, b, c):
        while len(rot) <= w:
            rot.append([])
    _insert_span(rot, x, z, [b, c])
    _insert_span(rot, y, x, [c, a])
    _insert_span(rot, z, y, [a, b])
    rot[a] = [c, b, z, y]
    rot[b] = [c, x, z, a]
    rot[c] = [x, b, a, y]


def _inner_faces(g: PlaneGraph):
    return [f for f in g.faces if f.id != g.outer_face_id]


# -- fixed small graphs -------------------------------------------------------


def k4() -> PlaneGraph:
    """Tetrahedron: outer triangle (0, 1, 2) with 3 inside."""
    return build_from_rotation(
        4, [(1, 3, 2), (2, 3, 0), (0, 3, 1), (2, 0, 1)], outer=(0, 1, 2)
    )


def octahedron() -> PlaneGraph:
    """Octahedron: outer triangle (0, 1, 2), inner triangle (3, 4, 5),
    antipodal (non-adjacent) pairs (0,3), (1,4), (2,5)."""
    return build_from_rotation(
        6,
        [
            (1, 5, 4, 2),
            (2, 3, 5, 0),
            (0, 4, 3, 1),
            (2, 4, 5, 1),
            (3, 2, 0, 5),
            (3, 4, 0, 1),
        ],
        outer=(0, 1, 2),
    )


def icosahedron() -> PlaneGraph:
    """Icosahedron: the unique 5-regular planar triangulation on 12
    vertices.  Rotations come from a stereographic projection of the
    solid through face (0, 1, 2)."""
    return build_from_rotation(
        12,
        [
            (1, 7, 5, 6, 2),
            (0, 2, 8, 3, 7),
            (0, 6, 4, 8, 1),
            (1, 8, 9, 11, 7),
            (2, 6, 10, 9, 8),
            (0, 7, 11, 10, 6),
            (0, 5, 10, 4, 2),
            (0, 1, 3, 11, 5),
            (1, 2, 4, 9, 3),
            (3, 8, 4, 10, 11),
            (4, 6, 5, 11, 9),
            (3, 9, 10, 5, 7),
        ],
        outer=(0, 1, 2),
    )


# -- incremental families -----------------------------------------------------


def planar_three_tree(n: int, seed: int) -> tuple[PlaneGraph, BuildTrace]:
    """Stacked triangulation: start from a triangle, repeatedly pick a
    uniformly random inner face and stack a degree-3 vertex into it.

    n = 3 is the bare triangle and n = 4 is K4 regardless of seed.
    """
    if n < 3:
        raise ValueError(f"a stacked triangulation needs n >= 3, got {n}")
    rng = random.Random(seed)
    rot = [list(r) for r in _TRIANGLE_ROT]
    steps = []
    g = build_from_rotation(3, rot, outer=_TRIANGLE_OUTER)
    for w in range(3, n):
        faces = _inner_faces(g)
        walk = faces[rng.randrange(len(faces))].boundary
        _stack(rot, walk, w)
        steps.append(TraceStep("stack", walk, (w,)))
        g = PlaneGraph(rot, outer=_TRIANGLE_OUTER)
    return g, BuildTrace("three_tree", tuple(steps))


def recursive_eulerian(t: int, seed: int) -> tuple[PlaneGraph, BuildTrace]:
    """All-even-degree triangulation grown by t octahedron-pattern steps.

    Each step picks an inner face (x, y, z) uniformly at random and
    inserts a triangle (a, b, c) inside it with a paired to x, b to y,
    c to z, so the six vertices induce an octahedron.  t = 0 is the
    triangle, t = 1 the octahedron; n = 3 + 3t and every degree stays
    even.

    Once the graph has 6 vertices, only faces whose corners all have
    degree >= 6 or all have degree exactly 4 are eligible.  Picking a
    face with a lone degree-4 corner would strand that corner's two
    triangle mates, and downstream size accounting needs the degree-4
    vertices to always induce vertex-disjoint triangles.
    """
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    rng = random.Random(seed)
    rot = [list(r) for r in _TRIANGLE_ROT]
    steps = []
    g = build_from_rotation(3, rot, outer=_TRIANGLE_OUTER)
    for i in range(t):
        faces = _inner_faces(g)
        if g.n >= 6:
            faces = [
                f
                for f in faces
                if all(len(rot[v]) >= 6 for v in f.boundary)
                or all(len(rot[v]) == 4 for v in f.boundary)
            ]
        walk = faces[rng.randrange(len(faces))].boundary
        a, b, c = 3 + 3 * i, 4 + 3 * i, 5 + 3 * i
        _triangle_insert(rot, walk, a, b, c)
        steps.append(TraceStep("triangle", walk, (a, b, c)))
        g = PlaneGraph(rot, outer=_TRIANGLE_OUTER)
    return g, BuildTrace("recursive_eulerian", tuple(steps))


def replay(trace: BuildTrace) -> PlaneGraph:
    """Rebuild the plane graph a BuildTrace describes."""
    rot = [list(r) for r in _TRIANGLE_ROT]
    for s in trace.steps:
        if s.kind == "stack":
            _stack(rot, s.face, s.new[0])
        else:
            _triangle_insert(rot, s.face, *s.new)
    return PlaneGraph(rot, outer=_TRIANGLE_OUTER)


# -- diamond chain ------------------------------------------------------------
#
# One gadget: diamond a-b-d-c (edges ab, ac, bc, bd, cd), a small triangle
# t1-t2-t3 inside face a-b-c (t1 joined to a and b, t2 to a and c, t3 to
# b and c) and a lone vertex v4 inside face b-c-d joined to b, c, d.  The
# apex a of gadget i is vertex d of gadget i-1; k gadgets close into a
# ring, so the graph has 7k vertices.  The two leftover 2k-gon faces
# (apexes alternating with b's, apexes alternating with c's) are
# triangulated by a fixed fan rule.
#
# Per-gadget CCW rotations, local names, derived from the drawing with
# a=(0,0), b=(2,1), c=(2,-0.62), d=(4,0), t1/t2/t3 on a small circle
# around the centroid of a,b,c and v4 at the centroid of b,c,d:

_GADGET_ROT = {
    "b": ("a", "t1", "t3", "c", "v4", "d"),
    "c": ("d", "v4", "b", "t3", "t2", "a"),
    "t1": ("b", "a", "t2", "t3"),
    "t2": ("t3", "t1", "a", "c"),
    "t3": ("b", "t1", "t2", "c"),
    "v4": ("b", "c", "d"),
}
_APEX_ARC_AS_A = ("c", "t2", "t1", "b")  # CCW arc at an apex, own gadget
_APEX_ARC_AS_D = ("b", "v4", "c")  # CCW arc at an apex, previous gadget


def diamond_chain(k: int) -> PlaneGraph:
    """Ring of k diamond gadgets on 7k vertices; a planar triangulation
    whose minimum independent dominating set has exactly 2 vertices per
    gadget.  k = 1 is rejected (it would need parallel edges)."""
    if k < 2:
        raise ValueError(f"diamond chain needs k >= 2, got {k}")

    def vid(i: int, name: str) -> int:
        i %= k
        if name == "a":
            return 7 * i
        if name == "d":
            return 7 * ((i + 1) % k)
        return 7 * i + 1 + ("b", "c", "t1", "t2", "t3", "v4").index(name)

    n = 7 * k
    rot: list[list[int]] = [[] for _ in range(n)]
    for i in range(k):
        for name, arc in _GADGET_ROT.items():
            rot[vid(i, name)] = [vid(i, nb) for nb in arc]
        # apex i: previous gadget's d-side arc then own a-side arc
        rot[vid(i, "a")] = [vid(i - 1, nb) for nb in _APEX_ARC_AS_D] + [
            vid(i, nb) for nb in _APEX_ARC_AS_A
        ]
    g = PlaneGraph(rot)

    big = [f for f in g.faces if f.degree == 2 * k and f.degree > 3]
    if len(big) != 2:
        raise EmbeddingError(f"diamond chain ring left {len(big)} big faces")
    b_face = next(f for f in big if vid(0, "b") in f.boundary)
    c_face = next(f for f in big if vid(0, "c") in f.boundary)
    outer_dart = (b_face.boundary[0], b_face.boundary[1])
    _fan_face(rot, b_face.boundary, vid(0, "a"))
    _fan_face(rot, c_face.boundary, vid(0, "c"))
    return PlaneGraph(rot, outer_dart=outer_dart)


def diamond_chain_witness(k: int) -> frozenset[int]:
    """The documented independent dominating set: t3 and v4 per gadget."""
    return frozenset(x for i in range(k) for x in (7 * i + 5, 7 * i + 6))


def _fan_face(rot, walk, apex):
    """Triangulate a face by chords from `apex` (a walk member) to every
    non-consecutive walk vertex."""
    m = len(walk)
    p = walk.index(apex)
    prev_v = walk[(p - 1) % m]
    succ_v = walk[(p + 1) % m]
    targets = [walk[(p + j) % m] for j in range(2, m - 1)]
    # At the apex the chords fill the wedge from prev to succ in reverse
    # walk order; each target splices the apex between its walk neighbors.
    _insert_span(rot, apex, prev_v, list(reversed(targets)))
    for j in range(2, m - 1):
        w = walk[(p + j) % m]
        _insert_span(rot, w, walk[(p + j - 1) % m], [apex])


# -- k4 chain -----------------------------------------------------------------


def k4_chain(k: int) -> tuple[PlaneGraph, frozenset[int]]:
    """Stacked triangulation on 4k vertices holding k vertex-disjoint K4
    copies, each with a private degree-3 vertex, so the domination
    number is exactly k.  Returns the graph and the k private vertices
    (one per copy; together they dominate everything)."""
    if k < 2:
        raise ValueError(f"k4 chain needs k >= 2, got {k}")
    rot = [list(r) for r in _TRIANGLE_ROT]
    _stack(rot, (0, 2, 1), 3)
    protected = [0]  # vertex 0 keeps N[0] = {0,1,2,3}
    attach = (1, 3, 2)  # face avoiding vertex 0, walk order (p, q, r)
    nxt = 4
    for _ in range(k - 1):
        p, q, r = attach
        a, b, c, u = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        _stack(rot, (p, q, r), a)  # faces (p,q,a), (p,a,r), (r,a,q)
        _stack(rot, (p, q, a), b)  # faces (p,q,b), (p,b,a), (a,b,q)
        _stack(rot, (a, b, q), c)  # faces (a,b,c), (a,c,q), (q,c,b)
        _stack(rot, (a, b, c), u)  # the new K4 {a,b,c,u}
        protected.append(u)
        attach = (a, c, q)
    g = PlaneGraph(rot, outer=_TRIANGLE_OUTER)
    return g, frozenset(protected)


# -- randomized families ------------------------------------------------------


def random_triangulation(n: int, seed: int, flips: int | None = None) -> PlaneGraph:
    """Random stacked triangulation mixed by a seeded walk of random edge
    flips (illegal flips are skipped).  flips defaults to 3n."""
    g, _ = planar_three_tree(n, split_seed(seed, 0))
    if flips is None:
        flips = 3 * n
    rng = random.Random(split_seed(seed, 1))
    for _ in range(flips):
        edges = g.edges()
        u, v = edges[rng.randrange(len(edges))]
        try:
            g = flip_edge(g, u, v)
        except EmbeddingError:
            continue
    return g


def random_connected_plane(n: int, seed: int) -> PlaneGraph:
    """Random connected plane graph: a random triangulation thinned by a
    seeded pass of edge deletions that keep the graph connected."""
    g = random_triangulation(n, split_seed(seed, 4))
    rng = random.Random(split_seed(seed, 5))
    rot = [list(g.rotation(v)) for v in g.vertices()]
    edges = list(g.edges())
    rng.shuffle(edges)
    drop_target = rng.randrange(0, len(edges) - (n - 1) + 1)
    dropped = 0
    for u, v in edges:
        if dropped == drop_target:
            break
        rot[u].remove(v)
        rot[v].remove(u)
        if _connected(rot):
            dropped += 1
        else:
            _reinsert(rot, g, u, v)
    return PlaneGraph(rot)


def _connected(rot) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rot)


def _reinsert(rot, g: PlaneGraph, u: int, v: int):
    """Put edge uv back preserving the original cyclic order at both ends."""
    for a, b in ((u, v), (v, u)):
        if not rot[a]:
            rot[a].append(b)
            continue
        orig = g.rotation(a)
        after = orig[(orig.index(b) - 1) % len(orig)]
        while after not in rot[a]:
            after = orig[(orig.index(after) - 1) % len(orig)]
        _insert_span(rot, a, after, [b])


def near_triangulation_from(g: PlaneGraph, v: int) -> tuple[PlaneGraph, dict[int, int]]:
    """Delete one vertex of a triangulation and re-root so the hole it
    leaves (the cycle formerly N(v)) becomes the outer face."""
    if any(f.degree != 3 for f in g.faces):
        raise ValueError("near_triangulation_from expects a triangulation")
    a, b = deleted_vertex_region_dart(g, v)
    h, relabel = delete_vertices(g, {v})
    hole = h.face_of_dart(relabel[a], relabel[b])
    if hole != h.outer_face_id:
        h = PlaneGraph(h.rotations, outer_dart=(relabel[a], relabel[b]))
    return h, relabel


def min_degree5_sample(
    n: int, seed: int, budget: int = 50
) -> PlaneGraph | None:
    """Try to find a triangulation on n vertices with minimum degree 5 by
    seeded flip walks; None when the budget runs out.  Absence is a
    value: no such triangulation exists below n = 12, and the n = 12
    instance is the icosahedron itself."""
    if n == 12:
        return icosahedron()
    if n < 12:
        return None
    for attempt in range(budget):
        g = random_triangulation(n, split_seed(seed, 2, attempt), flips=6 * n)
        if min(g.degrees()) >= 5:
            return g
    return None

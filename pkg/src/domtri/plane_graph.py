"""Plane graphs as combinatorial rotation systems.

A simple graph plus a counter-clockwise cyclic neighbor order at every
vertex determines an embedding on an orientable surface.  Construction
accepts only genus-zero systems (checked through Euler's formula), so a
PlaneGraph is always an honest plane graph with explicit faces.

Faces are orbits of darts (directed edges): the walk continues from
(u, v) with (v, w) where w follows u in the rotation at v.  Under this
convention every bounded face is traced clockwise and the unbounded
face counter-clockwise.  The outer face is explicit state, never
re-inferred behind the caller's back.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Raised when input data does not describe a valid plane embedding."""


class InvariantBreach(RuntimeError):
    """A structural property that should be a theorem failed on an instance.

    This is deliberately not a ValueError: seeing it means either the
    library has a bug or the instance violates a documented guarantee,
    and the failure should be preserved for replay, not swallowed.
    """


class Category(str, Enum):
    PLANAR_TRIANGULATION = "planar_triangulation"
    NEAR_TRIANGULATION = "near_triangulation"
    CONNECTED_PLANE = "connected_plane"
    INVALID = "invalid"


@dataclass(frozen=True)
class GraphClass:
    category: Category
    min_degree: int
    is_two_connected: bool
    all_degrees_even: bool
    all_degrees_odd: bool


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]  # vertex walk, one entry per dart on the face
    degree: int


@dataclass(frozen=True)
class NeighborhoodStructure:
    kind: str  # "cycle" or "path"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class FacesInequalityReport:
    """f_4 + 2*sum(f_i, i>=6) against |V|-2, plus the strengthened form."""

    lhs: int
    rhs: int
    strengthened_rhs: Fraction
    holds: bool
    strengthened_holds: bool


def _cyclic_canon(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of a cyclic sequence."""
    t = tuple(seq)
    if not t:
        return t
    return min(tuple(t[i:] + t[:i]) for i in range(len(t)))


def _face_orbits(rotations: Mapping[int, Sequence[int]]) -> list[list[Dart]]:
    """Dart orbits of a rotation system, in order of their smallest dart."""
    index = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotations.items()}
    darts = sorted((u, v) for u, rot in rotations.items() for v in rot)
    seen: set[Dart] = set()
    orbits: list[list[Dart]] = []
    for start in darts:
        if start in seen:
            continue
        orbit = []
        d = start
        while True:
            orbit.append(d)
            seen.add(d)
            u, v = d
            rot = rotations[v]
            d = (v, rot[(index[v][u] + 1) % len(rot)])
            if d == start:
                break
        orbits.append(orbit)
    return orbits


class PlaneGraph:
    """Immutable plane graph: canonical rotations, faces, explicit outer face.

    Vertices are 0..n-1.  Do not mutate the returned tuples; all derived
    structure is computed once at construction.
    """

    __slots__ = (
        "n",
        "rotations",
        "edge_count",
        "faces",
        "outer_face_id",
        "component_count",
        "_adj",
        "_dart_face",
    )

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        outer: Sequence[int] | None = None,
        outer_dart: Dart | None = None,
    ):
        n = len(rotations)
        if n == 0:
            raise EmbeddingError("a plane graph needs at least one vertex")
        for v, rot in enumerate(rotations):
            for u in rot:
                if not (0 <= u < n):
                    raise EmbeddingError(f"vertex {v} lists unknown neighbor {u}")
            if v in rot:
                raise EmbeddingError(f"loop at vertex {v}")
            if len(set(rot)) != len(rot):
                raise EmbeddingError(f"parallel edge in rotation of vertex {v}")
        adj = [frozenset(rot) for rot in rotations]
        for v in range(n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise EmbeddingError(f"asymmetric adjacency between {v} and {u}")

        # Canonical form: every rotation starts at its smallest neighbor id.
        canon = []
        for rot in rotations:
            t = tuple(rot)
            if t:
                i = t.index(min(t))
                t = t[i:] + t[:i]
            canon.append(t)
        self.n = n
        self.rotations: tuple[tuple[int, ...], ...] = tuple(canon)
        self._adj = tuple(adj)
        self.edge_count = sum(len(rot) for rot in canon) // 2

        rot_map = {v: rot for v, rot in enumerate(self.rotations)}
        orbits = _face_orbits(rot_map)
        self.component_count = self._count_components()
        isolated = sum(1 for rot in self.rotations if not rot)
        # One face per single-vertex component is implicit (no darts).
        euler = self.n - self.edge_count + len(orbits) + isolated
        if self.n == 1:
            orbits = [[]]
            euler = 2
        if euler != 2 * self.component_count:
            raise EmbeddingError(
                "rotation system is not planar: V-E+F = "
                f"{self.n}-{self.edge_count}+{len(orbits)} with "
                f"{self.component_count} component(s)"
            )

        faces = []
        dart_face: dict[Dart, int] = {}
        for i, orbit in enumerate(orbits):
            walk = tuple(u for u, _ in orbit)
            faces.append(Face(id=i, boundary=walk, degree=len(walk)))
            for d in orbit:
                dart_face[d] = i
        self.faces: tuple[Face, ...] = tuple(faces)
        self._dart_face = dart_face
        self.outer_face_id = self._resolve_outer(outer, outer_dart)

    def _count_components(self) -> int:
        seen = [False] * self.n
        count = 0
        for s in range(self.n):
            if seen[s]:
                continue
            count += 1
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
        return count

    def _resolve_outer(self, outer, outer_dart) -> int:
        if outer is not None and outer_dart is not None:
            raise ValueError("give either an outer walk or an outer dart, not both")
        if outer_dart is not None:
            if outer_dart not in self._dart_face:
                raise EmbeddingError(f"dart {outer_dart} not present")
            return self._dart_face[outer_dart]
        if outer is not None:
            want = _cyclic_canon(outer)
            for f in self.faces:
                if _cyclic_canon(f.boundary) == want:
                    return f.id
            raise EmbeddingError(f"outer hint {tuple(outer)} matches no face walk")
        # No hint: the unique face of maximum degree, with a deterministic
        # tie-break so triangulations built from raw rotations still load.
        best = max(f.degree for f in self.faces)
        cands = [f for f in self.faces if f.degree == best]
        return min(cands, key=lambda f: _cyclic_canon(f.boundary)).id

    # -- accessors ---------------------------------------------------------

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    @property
    def outer_face(self) -> Face:
        return self.faces[self.outer_face_id]

    def vertices(self) -> range:
        return range(self.n)

    def rotation(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.rotations[v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def face_of_dart(self, u: int, v: int) -> int:
        if (u, v) not in self._dart_face:
            raise ValueError(f"no dart ({u}, {v}) in this graph")
        return self._dart_face[(u, v)]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: self._adj[v] for v in range(self.n)}

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex {v}")

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.rotations == other.rotations
            and _cyclic_canon(self.outer_face.boundary)
            == _cyclic_canon(other.outer_face.boundary)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rotations, _cyclic_canon(self.outer_face.boundary)))

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.edge_count}, outer={self.outer_face.boundary})"


def build_from_rotation(
    n: int,
    rotations: Sequence[Sequence[int]],
    outer: Sequence[int] | None = None,
) -> PlaneGraph:
    """Validated constructor from per-vertex CCW neighbor orders.

    `outer`, when given, must match some face walk up to cyclic rotation
    (direction matters: the reversed walk is a different face).  Without
    a hint the unique maximum-degree face is chosen, smallest canonical
    walk breaking ties.
    """
    if n != len(rotations):
        raise EmbeddingError(f"n={n} but {len(rotations)} rotations given")
    return PlaneGraph(rotations, outer=outer)


def closed_neighborhood(g: PlaneGraph, s: Iterable[int]) -> frozenset[int]:
    """N[S]: S together with everything adjacent to it.  N[{}] = {}."""
    out = set()
    for v in s:
        out.add(v)
        out |= g.neighbors(v)
    return frozenset(out)


def face_degree_histogram(g: PlaneGraph) -> dict[int, int]:
    hist: dict[int, int] = {}
    for f in g.faces:
        hist[f.degree] = hist.get(f.degree, 0) + 1
    return hist


def classify(g: PlaneGraph) -> GraphClass:
    """Strongest applicable class plus degree/connectivity flags."""
    degs = g.degrees()
    min_deg = min(degs)
    two_conn = _is_two_connected(g)
    all_even = all(d % 2 == 0 for d in degs)
    all_odd = all(d % 2 == 1 for d in degs)
    if not g.is_connected:
        cat = Category.INVALID
    elif all(f.degree == 3 for f in g.faces):
        cat = Category.PLANAR_TRIANGULATION
    elif two_conn and all(
        f.degree == 3 for f in g.faces if f.id != g.outer_face_id
    ):
        cat = Category.NEAR_TRIANGULATION
    else:
        cat = Category.CONNECTED_PLANE
    return GraphClass(cat, min_deg, two_conn, all_even, all_odd)


def _is_two_connected(g: PlaneGraph) -> bool:
    """No articulation vertex, connected, at least 3 vertices."""
    if g.n < 3 or not g.is_connected:
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    # Iterative lowpoint DFS from vertex 0.
    stack: list[tuple[int, Iterable[int]]] = [(0, iter(g.neighbors(0)))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                parent[u] = v
                disc[u] = low[u] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((u, iter(g.neighbors(u))))
                advanced = True
                break
            elif u != parent[v]:
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return False
    if root_children > 1:
        return False
    return all(d != -1 for d in disc)


# -- deletion ---------------------------------------------------------------


def delete_vertices(
    g: PlaneGraph, s: Iterable[int]
) -> tuple[PlaneGraph, dict[int, int]]:
    """Induced sub-embedding after removing `s`, plus old-id -> new-id map.

    Rotations of survivors are filtered in place and faces recomputed, so
    face identity is not preserved.  The outer face of the result is the
    face whose region absorbed the old outer region (tracked through one
    deletion at a time).  A disconnected result is permitted; callers
    should consult `.is_connected`.
    """
    s = frozenset(s)
    for v in s:
        g._check_vertex(v)
    if not s:
        return g, {v: v for v in range(g.n)}
    if len(s) == g.n:
        raise ValueError("cannot delete every vertex")

    rot = {v: list(g.rotations[v]) for v in range(g.n)}
    ob = g.outer_face.boundary
    outer_dart: Dart | None = None
    if len(ob) >= 2:
        outer_dart = (ob[0], ob[1])
    elif g.n >= 2:
        outer_dart = None  # single-vertex outer; resolved at rebuild

    for v in sorted(s):
        if outer_dart is not None and v in outer_dart:
            outer_dart = _replacement_outer_dart(rot, outer_dart, v)
        del rot[v]
        for u in rot:
            rot[u] = [w for w in rot[u] if w != v]

    survivors = sorted(rot)
    relabel = {old: new for new, old in enumerate(survivors)}
    new_rot = [[relabel[w] for w in rot[old]] for old in survivors]
    if outer_dart is not None:
        a, b = outer_dart
        h = PlaneGraph(new_rot, outer_dart=(relabel[a], relabel[b]))
    else:
        h = PlaneGraph(new_rot)
    return h, relabel


def _replacement_outer_dart(
    rot: Mapping[int, Sequence[int]], outer_dart: Dart, v: int
) -> Dart | None:
    """A dart avoiding v that stays on the region absorbing the outer face.

    When v sits on the current outer walk, the outer region merges with
    every face incident to v, so any dart of those faces that misses v
    still bounds the merged region afterwards.
    """
    orbits = _face_orbits(rot)
    by_dart = {}
    for orbit in orbits:
        for d in orbit:
            by_dart[d] = orbit
    for a, b in by_dart[outer_dart]:
        if v not in (a, b):
            return (a, b)
    # Outer walk entirely on v: fall back to darts of any face at v.
    for orbit in orbits:
        if any(v in d for d in orbit):
            for a, b in orbit:
                if v not in (a, b):
                    return (a, b)
    return None


def deleted_vertex_region_dart(g: PlaneGraph, v: int) -> Dart:
    """A dart of g that bounds the region where v used to be after v
    (or any independent set containing it) is deleted.

    Uses an inner triangular face at v, so both endpoints are neighbors
    of v and survive the deletion of an independent set.  For v of
    degree >= 2 on a near triangulation such a face always exists.
    """
    for i, u in enumerate(g.rotation(v)):
        fid = g.face_of_dart(v, u)
        if fid == g.outer_face_id:
            continue
        face = g.faces[fid]
        walk = face.boundary
        k = len(walk)
        for j in range(k):
            a, b = walk[j], walk[(j + 1) % k]
            if v not in (a, b):
                return (a, b)
    raise InvariantBreach(f"vertex {v} has no inner face with a dart avoiding it")


@dataclass(frozen=True)
class DeletionPlacement:
    """Where each deleted vertex's region ended up in H = G - S.

    `x_faces_even_degree` is informational and not part of `holds`: hole
    boundaries are even when the deleted vertices came from color-class
    machinery (two-colored links), but an arbitrary independent set can
    leave odd holes, e.g. any vertex of the icosahedron.
    """

    x_vertices: tuple[int, ...]  # deleted, not on outer face of G
    y_vertices: tuple[int, ...]  # deleted, on outer face of G
    x_region_faces: dict[int, int]  # old id -> face id of H
    x_faces_inner: bool
    x_faces_distinct: bool
    x_faces_even_degree: bool
    y_on_outer: bool

    @property
    def holds(self) -> bool:
        return self.x_faces_inner and self.x_faces_distinct and self.y_on_outer


def deletion_placement(
    g: PlaneGraph,
    s: Iterable[int],
    h: PlaneGraph | None = None,
    relabel: dict[int, int] | None = None,
) -> DeletionPlacement:
    """Locate every deleted vertex's containing face of H = G - S.

    S must be independent (callers guarantee it); then every neighbor of
    a deleted vertex survives and the witness dart from
    `deleted_vertex_region_dart` identifies the absorbing face of H.
    Checks the placement facts used by the counting arguments: interior
    deletions land in pairwise-distinct inner faces of even degree, and
    outer-boundary deletions land on the outer face of H.
    """
    s = frozenset(s)
    if h is None or relabel is None:
        h, relabel = delete_vertices(g, s)
    outer_set = set(g.outer_face.boundary)
    xs = tuple(sorted(v for v in s if v not in outer_set))
    ys = tuple(sorted(v for v in s if v in outer_set))

    x_faces: dict[int, int] = {}
    x_inner = x_even = True
    for v in xs:
        a, b = deleted_vertex_region_dart(g, v)
        fid = h.face_of_dart(relabel[a], relabel[b])
        x_faces[v] = fid
        if fid == h.outer_face_id:
            x_inner = False
        if h.faces[fid].degree % 2 != 0:
            x_even = False
    x_distinct = len(set(x_faces.values())) == len(x_faces)

    y_ok = True
    for v in ys:
        a, b = deleted_vertex_region_dart(g, v)
        if h.face_of_dart(relabel[a], relabel[b]) != h.outer_face_id:
            y_ok = False
    return DeletionPlacement(
        x_vertices=xs,
        y_vertices=ys,
        x_region_faces=x_faces,
        x_faces_inner=x_inner,
        x_faces_distinct=x_distinct,
        x_faces_even_degree=x_even,
        y_on_outer=y_ok,
    )


# -- neighborhood structure --------------------------------------------------


def neighborhood_structure(g: PlaneGraph, v: int) -> NeighborhoodStructure:
    """Spanning cycle or spanning path of G[N(v)], for near triangulations.

    Returns a cycle whenever G[N(v)] has a Hamiltonian cycle (the link
    around v, or found by search), otherwise a spanning path.  Asserts
    the dichotomy: the path case may only occur for v on a non-triangle
    outer face.
    """
    nbrs = g.rotation(v)
    d = len(nbrs)
    on_outer = v in g.outer_face.boundary
    outer_triangle = g.outer_face.degree == 3

    if d >= 3:
        link_closed = all(g.has_edge(nbrs[i], nbrs[(i + 1) % d]) for i in range(d))
        if link_closed:
            return NeighborhoodStructure("cycle", tuple(nbrs))

    sub = {u: g.neighbors(u) & set(nbrs) for u in nbrs}
    cycle = _hamiltonian_cycle(sub)
    if cycle is not None:
        return NeighborhoodStructure("cycle", cycle)

    if not (on_outer and not outer_triangle):
        raise InvariantBreach(
            f"vertex {v}: no spanning cycle in its neighborhood although it is "
            "interior or the outer face is a triangle"
        )
    path = _link_path(g, v) or _hamiltonian_path(sub)
    if path is None:
        raise InvariantBreach(f"vertex {v}: neighborhood has no spanning path")
    return NeighborhoodStructure("path", path)


def _link_path(g: PlaneGraph, v: int) -> tuple[int, ...] | None:
    """Rotation of v realigned so the outer-face gap sits at the ends."""
    nbrs = g.rotation(v)
    d = len(nbrs)
    if d == 1:
        return (nbrs[0],)
    for i in range(d):
        if not g.has_edge(nbrs[i], nbrs[(i + 1) % d]):
            order = tuple(nbrs[(i + 1 + j) % d] for j in range(d))
            if all(g.has_edge(order[j], order[j + 1]) for j in range(d - 1)):
                return order
            return None
    return None


def _hamiltonian_cycle(adj: Mapping[int, set | frozenset]) -> tuple[int, ...] | None:
    verts = sorted(adj)
    k = len(verts)
    if k < 3:
        return None
    start = verts[0]
    path = [start]
    used = {start}

    def extend() -> tuple[int, ...] | None:
        if len(path) == k:
            return tuple(path) if start in adj[path[-1]] else None
        for u in sorted(adj[path[-1]]):
            if u not in used:
                path.append(u)
                used.add(u)
                got = extend()
                if got is not None:
                    return got
                used.discard(u)
                path.pop()
        return None

    return extend()


def _hamiltonian_path(adj: Mapping[int, set | frozenset]) -> tuple[int, ...] | None:
    verts = sorted(adj)
    k = len(verts)
    if k == 1:
        return (verts[0],)

    def extend(path: list[int], used: set[int]) -> tuple[int, ...] | None:
        if len(path) == k:
            return tuple(path)
        for u in sorted(adj[path[-1]]):
            if u not in used:
                path.append(u)
                used.add(u)
                got = extend(path, used)
                if got is not None:
                    return got
                used.discard(u)
                path.pop()
        return None

    for s in verts:
        got = extend([s], {s})
        if got is not None:
            return got
    return None


# -- faces inequality ---------------------------------------------------------


def check_faces_inequality(h: PlaneGraph) -> FacesInequalityReport:
    """f_4 + 2*sum(f_i for i >= 6) <= |V| - 2 on a connected plane graph,
    and the strengthened right side |V| - 2 - (f_3 + 3*f_5)/2.
    """
    if not h.is_connected:
        raise ValueError("faces inequality is stated for connected plane graphs")
    hist = face_degree_histogram(h)
    lhs = hist.get(4, 0) + 2 * sum(c for d, c in hist.items() if d >= 6)
    rhs = h.n - 2
    strengthened = Fraction(rhs) - Fraction(hist.get(3, 0) + 3 * hist.get(5, 0), 2)
    return FacesInequalityReport(
        lhs=lhs,
        rhs=rhs,
        strengthened_rhs=strengthened,
        holds=lhs <= rhs,
        strengthened_holds=Fraction(lhs) <= strengthened,
    )


# -- edge flip ---------------------------------------------------------------


def flip_edge(g: PlaneGraph, u: int, v: int) -> PlaneGraph:
    """Replace inner edge uv of a triangulation by the other diagonal.

    The two triangles uvx / uvy become xy-triangles.  Refuses edges on
    the outer face, flips that would create a parallel edge, and the
    degenerate x == y case.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"no edge ({u}, {v})")
    if any(f.degree != 3 for f in g.faces):
        raise EmbeddingError("flip_edge expects a triangulation (all faces triangles)")
    f_uv = g.face_of_dart(u, v)
    f_vu = g.face_of_dart(v, u)
    if g.outer_face_id in (f_uv, f_vu):
        raise EmbeddingError(f"edge ({u}, {v}) lies on the outer face")
    x = next(w for w in g.faces[f_uv].boundary if w not in (u, v))
    y = next(w for w in g.faces[f_vu].boundary if w not in (u, v))
    if x == y:
        raise EmbeddingError(f"flip of ({u}, {v}) is degenerate (same apex twice)")
    if g.has_edge(x, y):
        raise EmbeddingError(f"flip of ({u}, {v}) would create parallel edge ({x}, {y})")

    rot = [list(r) for r in g.rotations]
    rot[u].remove(v)
    rot[v].remove(u)
    # In the face walk of f_uv = (u, v, x) the dart into x comes from v,
    # so at x the edge to y is inserted right after v in rotation order;
    # symmetrically at y it goes right after u.
    _insert_after(rot, x, v, y)
    _insert_after(rot, y, u, x)

    ob = g.outer_face.boundary
    return PlaneGraph(rot, outer_dart=(ob[0], ob[1]))


def _insert_after(rot: list[list[int]], v: int, after: int, new: int) -> None:
    i = rot[v].index(after)
    rot[v].insert(i + 1, new)


# -- PGR v1 text format -------------------------------------------------------
#
#   pgr 1 <n> <outer-face-vertex-list>
#   <vertex-id>: <ccw neighbor list>      (one line per vertex, 0-based)
#
# '#' starts a comment line.  Serialization is canonical (rotations start
# at the smallest neighbor, outer walk at its lexicographically smallest
# rotation), so parse(serialize(g)) == g and serialize is a fixed point.


def to_pgr(g: PlaneGraph) -> str:
    outer = _cyclic_canon(g.outer_face.boundary)
    lines = ["pgr 1 {} {}".format(g.n, " ".join(map(str, outer)))]
    for v in range(g.n):
        lines.append("{}: {}".format(v, " ".join(map(str, g.rotations[v]))))
    return "\n".join(lines) + "\n"


def parse_pgr(text: str) -> PlaneGraph:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise EmbeddingError("empty pgr document")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "pgr":
        raise EmbeddingError(f"bad pgr header: {lines[0]!r}")
    if head[1] != "1":
        raise EmbeddingError(f"unsupported pgr version {head[1]!r}")
    try:
        n = int(head[2])
        outer = [int(t) for t in head[3:]]
    except ValueError as e:
        raise EmbeddingError(f"bad pgr header: {lines[0]!r}") from e
    if len(lines) - 1 != n:
        raise EmbeddingError(f"expected {n} vertex lines, found {len(lines) - 1}")
    rotations: list[list[int]] = [[] for _ in range(n)]
    seen = [False] * n
    for ln in lines[1:]:
        if ":" not in ln:
            raise EmbeddingError(f"bad vertex line: {ln!r}")
        head_v, _, tail = ln.partition(":")
        try:
            v = int(head_v)
            rot = [int(t) for t in tail.split()]
        except ValueError as e:
            raise EmbeddingError(f"bad vertex line: {ln!r}") from e
        if not (0 <= v < n):
            raise EmbeddingError(f"vertex id {v} out of range")
        if seen[v]:
            raise EmbeddingError(f"duplicate vertex line for {v}")
        seen[v] = True
        rotations[v] = rot
    return PlaneGraph(rotations, outer=outer if outer else None)


def load_pgr(path) -> PlaneGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pgr(fh.read())


def save_pgr(g: PlaneGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_pgr(g))

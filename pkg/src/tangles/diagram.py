"""Core data model: tangle diagrams as rotation-system planar maps.

A diagram is stored combinatorially.  Edges are numbered 0..num_edges-1 and
each edge has two ends, addressed as integer *darts*: dart 2*e is end 0 of
edge e, dart 2*e+1 is end 1, and ``dart ^ 1`` is the opposite end.  Every
dart is attached either to one of the four slots of a crossing or to one of
the 2n boundary slots of the disk.

Conventions:

* Crossing slots are listed in counterclockwise rotation order.  The strand
  through slots 0 and 2 passes *under* the strand through slots 1 and 3.
* The boundary cycle lists the 2n boundary darts counterclockwise.  For face
  tracing the disk boundary acts as a single vertex whose rotation is the
  reversed boundary cycle, which caps the disk into a sphere.
* Crossing-free loop components carry no darts at all; they are stored as a
  count (``free_loops``).

Faces are the orbits of ``phi(d) = sigma[d ^ 1]``; traversing each dart's
edge away from the dart's vertex keeps its face on the right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import EmptyResult, ValidationFailure

BOUNDARY = -1


# ---------------------------------------------------------------------------
# Diagram value type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    """One string (boundary-to-boundary walk) or loop of the 1-submanifold."""

    kind: str                       # "string" | "loop"
    edges: tuple[int, ...]          # edge walk; empty for a crossing-free loop
    endpoints: tuple[int, ...]      # 2 boundary slot indices for strings, else ()


@dataclass(frozen=True)
class Violation:
    kind: str
    element: object
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def summary(self) -> str:
        if self.ok:
            return "ok"
        v = self.violations[0]
        return f"{v.kind} at {v.element}: {v.message}"


@dataclass(frozen=True)
class TangleDiagram:
    """Immutable combinatorial tangle diagram in a disk.

    ``boundary`` holds the 2n boundary darts counterclockwise, ``crossings``
    the per-crossing dart 4-tuples (ccw, under strand on slots 0 and 2).
    With an empty boundary the diagram is a link diagram in the sphere.
    """

    boundary: tuple[int, ...]
    crossings: tuple[tuple[int, ...], ...]
    num_edges: int
    free_loops: int = 0

    # -- derived tables -----------------------------------------------------

    @cached_property
    def _attachment(self) -> tuple[tuple[int, int], ...]:
        """dart -> (crossing index | BOUNDARY, slot index)."""
        att: list[tuple[int, int]] = [(-2, -2)] * (2 * self.num_edges)
        for ci, cr in enumerate(self.crossings):
            for s, d in enumerate(cr):
                att[d] = (ci, s)
        for j, d in enumerate(self.boundary):
            att[d] = (BOUNDARY, j)
        return tuple(att)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Next dart counterclockwise around the attachment vertex."""
        nxt = [-1] * (2 * self.num_edges)
        for cr in self.crossings:
            m = len(cr)
            for s, d in enumerate(cr):
                nxt[d] = cr[(s + 1) % m]
        b = self.boundary
        for j, d in enumerate(b):
            nxt[d] = b[j - 1]
        return tuple(nxt)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of phi(d) = sigma[d ^ 1]."""
        sigma = self.sigma
        seen = [False] * (2 * self.num_edges)
        out = []
        for d0 in range(2 * self.num_edges):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = sigma[d ^ 1]
            out.append(tuple(orbit))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        idx = [-1] * (2 * self.num_edges)
        for fi, orbit in enumerate(self.faces):
            for d in orbit:
                idx[d] = fi
        return tuple(idx)

    # -- basic accessors ----------------------------------------------------

    def attachment(self, dart: int) -> tuple[int, int]:
        return self._attachment[dart]

    def continuation(self, dart: int) -> int:
        """The dart where the strand entering a crossing at ``dart`` leaves."""
        ci, s = self._attachment[dart]
        if ci == BOUNDARY:
            raise ValueError("strand ends at the boundary")
        cr = self.crossings[ci]
        return cr[(s + 2) % 4]

    def is_under_slot(self, dart: int) -> bool:
        ci, s = self._attachment[dart]
        return ci != BOUNDARY and s % 2 == 0

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_boundary(self) -> int:
        return len(self.boundary)

    # -- components ---------------------------------------------------------

    @cached_property
    def components(self) -> tuple[Component, ...]:
        """All strings and loops; free loops come last with empty walks."""
        used = [False] * self.num_edges
        comps: list[Component] = []
        # strings, from each boundary slot in order
        for j, d in enumerate(self.boundary):
            e = d // 2
            if used[e]:
                continue
            walk = []
            cur = d
            while True:
                walk.append(cur // 2)
                used[cur // 2] = True
                far = cur ^ 1
                ci, s = self._attachment[far]
                if ci == BOUNDARY:
                    comps.append(Component("string", tuple(walk), (j, s)))
                    break
                cur = self.crossings[ci][(s + 2) % 4]
        # loops through crossings
        for d0 in range(2 * self.num_edges):
            if used[d0 // 2]:
                continue
            walk = []
            cur = d0
            while True:
                walk.append(cur // 2)
                used[cur // 2] = True
                far = cur ^ 1
                ci, s = self._attachment[far]
                cur = self.crossings[ci][(s + 2) % 4]
                if cur == d0:
                    break
            comps.append(Component("loop", tuple(walk), ()))
        for _ in range(self.free_loops):
            comps.append(Component("loop", (), ()))
        return tuple(comps)

    @property
    def n(self) -> int:
        return len(self.boundary) // 2

    @property
    def k(self) -> int:
        return sum(1 for c in self.components if c.kind == "loop")

    @cached_property
    def component_of_edge(self) -> tuple[int, ...]:
        idx = [-1] * self.num_edges
        for ci, comp in enumerate(self.components):
            for e in comp.edges:
                idx[e] = ci
        return tuple(idx)

    # -- connectivity of the capped map --------------------------------------

    @cached_property
    def pieces(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the capped map, as tuples of edge ids.

        All boundary-attached edges belong to one piece (the cap vertex joins
        them); the remaining pieces are floating loop clusters.
        """
        parent = list(range(self.num_edges))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for cr in self.crossings:
            for d in cr[1:]:
                union(cr[0] // 2, d // 2)
        bd = [d // 2 for d in self.boundary]
        for e in bd[1:]:
            union(bd[0], e)
        groups: dict[int, list[int]] = {}
        for e in range(self.num_edges):
            groups.setdefault(find(e), []).append(e)
        return tuple(tuple(g) for g in groups.values())

    def floating_pieces(self) -> tuple[tuple[int, ...], ...]:
        """Pieces with no boundary attachment (placeable in any face)."""
        bset = {d // 2 for d in self.boundary}
        return tuple(p for p in self.pieces if not (set(p) & bset))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(d: TangleDiagram) -> ValidationReport:
    """Check all diagram invariants; report the first failure per category."""
    bad: list[Violation] = []
    for ci, cr in enumerate(d.crossings):
        if len(cr) != 4:
            bad.append(Violation("NonQuadrivalentCrossing", ci,
                                 f"crossing lists {len(cr)} slots"))
    if len(d.boundary) % 2 != 0:
        bad.append(Violation("BoundaryOrderMismatch", None,
                             f"odd boundary length {len(d.boundary)}"))
    if d.free_loops < 0:
        bad.append(Violation("BoundaryOrderMismatch", None, "negative free_loops"))

    counts = [0] * (2 * d.num_edges)
    out_of_range = False
    for where, darts in (("crossing", [x for cr in d.crossings for x in cr]),
                         ("boundary", list(d.boundary))):
        for dart in darts:
            if 0 <= dart < 2 * d.num_edges:
                counts[dart] += 1
            else:
                out_of_range = True
                bad.append(Violation("DanglingEdgeEnd", dart,
                                     f"{where} dart out of range"))
    for dart, c in enumerate(counts):
        if c != 1:
            bad.append(Violation("DanglingEdgeEnd", dart,
                                 f"edge end attached {c} times"))
            break
    if bad:
        return ValidationReport(False, tuple(bad))
    if out_of_range:  # pragma: no cover - already reported
        return ValidationReport(False, tuple(bad))

    # planarity: each connected piece of the capped map is a sphere map
    piece_of_edge = {}
    for pi, piece in enumerate(d.pieces):
        for e in piece:
            piece_of_edge[e] = pi
    # vertices per piece: crossings, plus the cap vertex for the boundary piece
    verts = [0] * len(d.pieces)
    for cr in d.crossings:
        verts[piece_of_edge[cr[0] // 2]] += 1
    if d.boundary:
        verts[piece_of_edge[d.boundary[0] // 2]] += 1
    nedges = [0] * len(d.pieces)
    for e in range(d.num_edges):
        nedges[piece_of_edge[e]] += 1
    nfaces = [0] * len(d.pieces)
    for orbit in d.faces:
        nfaces[piece_of_edge[orbit[0] // 2]] += 1
    for pi in range(len(d.pieces)):
        if verts[pi] - nedges[pi] + nfaces[pi] != 2:
            bad.append(Violation(
                "NonPlanarRotationSystem", pi,
                f"Euler characteristic {verts[pi] - nedges[pi] + nfaces[pi]} != 2"))
            return ValidationReport(False, tuple(bad))
    return ValidationReport(True)


def require_valid(d: TangleDiagram) -> TangleDiagram:
    report = validate(d)
    if not report.ok:
        raise ValidationFailure(report)
    return d


def components(d: TangleDiagram) -> tuple[tuple[Component, ...], int, int]:
    """(components, n, k) with n = #strings and k = #loops incl. free loops."""
    comps = d.components
    return comps, d.n, d.k


# ---------------------------------------------------------------------------
# Structural transforms
# ---------------------------------------------------------------------------

def mirrored(d: TangleDiagram) -> TangleDiagram:
    """Mirror image: the over/under designation swaps at every crossing."""
    return TangleDiagram(
        boundary=d.boundary,
        crossings=tuple((c[1], c[2], c[3], c[0]) for c in d.crossings),
        num_edges=d.num_edges,
        free_loops=d.free_loops,
    )


def rotated(d: TangleDiagram, r: int) -> TangleDiagram:
    """Relabel boundary slots so old slot r becomes slot 0."""
    if not d.boundary:
        return d
    m = len(d.boundary)
    r %= m
    return TangleDiagram(
        boundary=d.boundary[r:] + d.boundary[:r],
        crossings=d.crossings,
        num_edges=d.num_edges,
        free_loops=d.free_loops,
    )


def reflected(d: TangleDiagram) -> TangleDiagram:
    """In-plane reflection: all rotation orders reverse, over/under kept."""
    b = d.boundary
    new_b = (b[0],) + tuple(reversed(b[1:])) if b else b
    return TangleDiagram(
        boundary=new_b,
        crossings=tuple((c[0], c[3], c[2], c[1]) for c in d.crossings),
        num_edges=d.num_edges,
        free_loops=d.free_loops,
    )


# ---------------------------------------------------------------------------
# Assembler: the one place new diagrams are stitched together
# ---------------------------------------------------------------------------

@dataclass
class Assembler:
    """Builds a diagram from strand links between attachment points.

    Points are ``("b", slot)`` for boundary slots, ``("x", cid, slot)`` for
    crossing slots, or any other hashable token for 2-valent pass-through
    connectors (spliced-out crossings, boundary gluings).  Every boundary or
    crossing point must receive exactly one link, connectors exactly two.
    Connector-only cycles become free loops.
    """

    num_slots: int = 0
    free_loops: int = 0
    _crossings: list[tuple[bool]] = field(default_factory=list)
    _links: dict = field(default_factory=dict)

    def add_crossing(self) -> int:
        self._crossings.append((True,))
        return len(self._crossings) - 1

    def link(self, a, b) -> None:
        self._links.setdefault(a, []).append(b)
        self._links.setdefault(b, []).append(a)

    @staticmethod
    def _is_terminal(p) -> bool:
        return isinstance(p, tuple) and len(p) > 0 and p[0] in ("b", "x")

    def build(self) -> TangleDiagram:
        terminals = [("b", j) for j in range(self.num_slots)]
        for ci in range(len(self._crossings)):
            terminals.extend(("x", ci, s) for s in range(4))
        for t in terminals:
            if len(self._links.get(t, [])) != 1:
                raise ValueError(f"attachment point {t} has degree "
                                 f"{len(self._links.get(t, []))}")
        for p, nb in self._links.items():
            if not self._is_terminal(p) and len(nb) != 2:
                raise ValueError(f"connector {p} has degree {len(nb)}")

        dart_at: dict = {}
        edges = 0
        visited = set()

        def walk(start):
            nonlocal edges
            # follow connectors from a terminal to the far terminal
            prev, cur = start, self._links[start][0]
            while not self._is_terminal(cur):
                nbrs = self._links[cur]
                nxt = nbrs[1] if nbrs[0] == prev else nbrs[0]
                prev, cur = cur, nxt
            e = edges
            edges += 1
            dart_at[start] = 2 * e
            dart_at[cur] = 2 * e + 1
            visited.add(start)
            visited.add(cur)

        for t in terminals:
            if t not in visited:
                walk(t)

        # connector-only cycles are crossing-free loops
        extra = 0
        seen = set(visited)
        for p in self._links:
            if p in seen or self._is_terminal(p):
                continue
            extra += 1
            cur, prev = p, None
            while cur not in seen:
                seen.add(cur)
                nbrs = self._links[cur]
                nxt = nbrs[1] if nbrs[0] == prev else nbrs[0]
                prev, cur = cur, nxt

        boundary = tuple(dart_at[("b", j)] for j in range(self.num_slots))
        crossings = tuple(
            tuple(dart_at[("x", ci, s)] for s in range(4))
            for ci in range(len(self._crossings))
        )
        return TangleDiagram(boundary=boundary, crossings=crossings,
                             num_edges=edges,
                             free_loops=self.free_loops + extra)


# ---------------------------------------------------------------------------
# Component deletion
# ---------------------------------------------------------------------------

def delete_components(d: TangleDiagram, delete: set[int]) -> TangleDiagram:
    """Remove the chosen components (indices into ``d.components``).

    Crossings between a surviving strand and a deleted one are erased with
    the survivor spliced straight through.
    """
    comps = d.components
    if not delete:
        return d
    if set(delete) >= set(range(len(comps))):
        raise EmptyResult("all components deleted")

    dead_edges = set()
    for ci in delete:
        dead_edges.update(comps[ci].edges)
    n_free_deleted = sum(1 for ci in delete if not comps[ci].edges)

    asm = Assembler()
    asm.free_loops = d.free_loops - n_free_deleted

    # surviving boundary slots keep their cyclic order
    slot_map = {}
    for comp_i, comp in enumerate(comps):
        if comp.kind != "string":
            continue
        alive = comp_i not in delete
        for j in comp.endpoints:
            slot_map[j] = alive
    new_slots = [j for j in range(len(d.boundary)) if slot_map[j]]
    asm.num_slots = len(new_slots)
    renum = {j: i for i, j in enumerate(new_slots)}

    # classify crossings
    cross_map: dict[int, object] = {}
    for ci, cr in enumerate(d.crossings):
        under_dead = cr[0] // 2 in dead_edges
        over_dead = cr[1] // 2 in dead_edges
        if under_dead and over_dead:
            cross_map[ci] = None
        elif under_dead or over_dead:
            cross_map[ci] = ("splice", 1 if under_dead else 0)
        else:
            cross_map[ci] = asm.add_crossing()

    def port(dart):
        ci, s = d.attachment(dart)
        if ci == BOUNDARY:
            return ("b", renum[s])
        m = cross_map[ci]
        if isinstance(m, int):
            return ("x", m, s)
        # spliced crossing: pass through along the surviving axis
        return ("conn", ci, s % 2, min(s, (s + 2) % 4))

    for e in range(d.num_edges):
        if e in dead_edges:
            continue
        asm.link(port(2 * e), port(2 * e + 1))
    return asm.build()

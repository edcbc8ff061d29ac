"""Canonical codes for diagram deduplication and symmetry quotienting.

The exact code is a deterministic breadth-first encoding rooted at the
boundary: crossings are numbered in discovery order and each crossing's
rotation is read starting from its first-entered slot, so the code depends
only on the structure, never on edge or crossing labels.  Floating pieces
(no boundary attachment) are encoded minimally over all their rootings and
appended in sorted order.

The symmetry modes quotient further:

* ``dihedral``         -- also minimize over boundary rotations and the
                          in-plane reflection,
* ``dihedral+mirror``  -- additionally over the global over/under swap.

Equal codes in a mode hold exactly for diagrams related by relabeling plus
that mode's symmetries.
"""

from __future__ import annotations

from .diagram import BOUNDARY, TangleDiagram, mirrored, reflected, rotated

MODES = ("exact", "dihedral", "dihedral+mirror")

# token tags
_TO_BOUNDARY = 0
_TO_CROSSING = 1
_AXIS = 2


def _encode_piece(d: TangleDiagram, roots, ids: dict[int, int],
                  with_axis: bool) -> tuple:
    """BFS encoding of everything reachable from the given root darts.

    ``ids`` maps crossing index -> discovery id and is extended in place.
    With ``with_axis`` false the over/under data is left out (shadow code);
    crossings are then treated as fully cyclically symmetric.
    """
    entry: dict[int, int] = {}
    order: list[int] = []
    tokens: list[tuple[int, ...]] = []
    base_id = len(ids)

    def target_token(dart: int) -> tuple[int, ...]:
        far = dart ^ 1
        ci, s = d.attachment(far)
        if ci == BOUNDARY:
            return (_TO_BOUNDARY, s)
        if ci not in ids:
            ids[ci] = len(ids)
            entry[ci] = s
            order.append(ci)
        return (_TO_CROSSING, ids[ci] - base_id, (s - entry[ci]) % 4)

    for root in roots:
        tokens.append(target_token(root))
    qi = 0
    while qi < len(order):
        ci = order[qi]
        qi += 1
        base = entry[ci]
        if with_axis:
            tokens.append((_AXIS, base % 2))
        cr = d.crossings[ci]
        for t in range(4):
            tokens.append(target_token(cr[(base + t) % 4]))
    return tuple(tokens)


def _encode(d: TangleDiagram, with_axis: bool = True) -> tuple:
    head = (d.n, d.free_loops, len(d.crossings))
    ids: dict[int, int] = {}
    body = _encode_piece(d, d.boundary, ids, with_axis)

    float_codes = []
    while len(ids) < len(d.crossings):
        ci0 = min(ci for ci in range(len(d.crossings)) if ci not in ids)
        probe: dict[int, int] = {}
        _encode_piece(d, (d.crossings[ci0][0] ^ 1,), probe, with_axis)
        piece = [ci for ci in probe if ci not in ids]
        best = None
        for ci in piece:
            for s in range(4):
                trial: dict[int, int] = {}
                code = _encode_piece(d, (d.crossings[ci][s] ^ 1,), trial,
                                     with_axis)
                if best is None or code < best:
                    best = code
        float_codes.append(best)
        for ci in piece:
            ids[ci] = len(ids)
    float_codes.sort()
    return (head, body, tuple(float_codes))


def _variants(d: TangleDiagram, mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact":
        return [d]
    m = len(d.boundary)
    rots = [rotated(d, r) for r in range(m)] if m else [d]
    base = rots + [reflected(x) for x in rots]
    if mode == "dihedral+mirror":
        base = base + [mirrored(x) for x in base]
    return base


def canonical_form(d: TangleDiagram, mode: str = "exact") -> tuple:
    """Minimum encoding over the mode's symmetry variants (a nested tuple)."""
    return min(_encode(v) for v in _variants(d, mode))


def canonical_code(d: TangleDiagram, mode: str = "exact") -> bytes:
    """Canonical code as a byte string (stable across runs)."""
    return repr(canonical_form(d, mode)).encode("ascii")


def shadow_form(d: TangleDiagram, mode: str = "exact") -> tuple:
    """Canonical form of the underlying projection (over/under forgotten)."""
    variants = [d] if mode == "exact" else _variants(d, "dihedral")
    return min(_encode(v, with_axis=False) for v in variants)

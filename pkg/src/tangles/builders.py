"""Builders for the minimal essential tangle families and trivial tangles.

The three families are hard-coded rotation-system literals:

* ``fig1_tangle(n)``  -- one string knotted as a trefoil-closing arc that
  loops around n-1 parallel unknotted strands; 2n+1 crossings.
* ``fig2_tangle(n,v)`` -- all strings unknotted, two strings carrying the
  two inner crossings plus n-2 parallel strands; 2n+2 crossings; variants
  a, b, c (c is b with the right-hand twist box switched).
* ``fig3_tangle(n)``  -- one loop crossed twice by each of n strands;
  2n crossings.

Crossing tuples are written counterclockwise with the under strand on
slots 0 and 2 (compass comments record the transcription geometry).
"""

from __future__ import annotations

from .diagram import Assembler, TangleDiagram
from .errors import BadParameter


def crossing_free_tangle(pairs: list[tuple[int, int]],
                         free_loops: int = 0) -> TangleDiagram:
    """Crossing-free tangle joining the given boundary slot pairs."""
    asm = Assembler(num_slots=2 * len(pairs), free_loops=free_loops)
    for i, j in pairs:
        asm.link(("b", i), ("b", j))
    return asm.build()


def arc(free_loops: int = 0) -> TangleDiagram:
    """A single crossing-free arc, optionally with free loops."""
    return crossing_free_tangle([(0, 1)], free_loops)


def fig1_tangle(n: int) -> TangleDiagram:
    """The n-string essential tangle with 2n+1 crossings."""
    if n < 1:
        raise BadParameter("fig1_tangle needs n >= 1")
    asm = Assembler(num_slots=2 * n)
    # special string S: descends past its own loop (crossings CA, CB), runs
    # around the oval (under the verticals at the bottom, over at the top)
    # and exits under the oval's bottom run (CC)
    ca = asm.add_crossing()  # (run E, descend N, run W, descend S), run under
    cb = asm.add_crossing()  # (descend NE, leftrun NW, descend SW, leftrun SE)
    cc = asm.add_crossing()  # (exit N, run W, exit S, run E), exit under
    ts = [asm.add_crossing() for _ in range(n - 1)]  # (vert N, run W, vert S, run E)
    bs = [asm.add_crossing() for _ in range(n - 1)]  # (run E, vert N, run W, vert S)

    slot_s_top = n - 1
    slot_s_bot = n
    asm.link(("b", slot_s_top), ("x", ca, 1))
    asm.link(("x", ca, 3), ("x", cb, 0))
    asm.link(("x", ca, 2), ("x", cb, 1))
    asm.link(("x", cb, 2), ("x", cc, 1))
    asm.link(("x", cb, 3), ("x", cc, 0))
    asm.link(("x", cc, 2), ("b", slot_s_bot))
    # bottom run east, up the right side, top run west back into CA
    if n == 1:
        asm.link(("x", cc, 3), ("x", ca, 0))
    else:
        asm.link(("x", cc, 3), ("x", bs[0], 2))
        for i in range(n - 2):
            asm.link(("x", bs[i], 0), ("x", bs[i + 1], 2))
        asm.link(("x", bs[n - 2], 0), ("x", ts[n - 2], 3))
        for i in range(n - 2, 0, -1):
            asm.link(("x", ts[i], 1), ("x", ts[i - 1], 3))
        asm.link(("x", ts[0], 1), ("x", ca, 0))
    # verticals: V_i runs from top slot under the oval top, over its bottom
    for i in range(n - 1):
        asm.link(("b", n - 2 - i), ("x", ts[i], 0))
        asm.link(("x", ts[i], 2), ("x", bs[i], 1))
        asm.link(("x", bs[i], 3), ("b", n + 1 + i))
    return asm.build()


def fig3_tangle(n: int) -> TangleDiagram:
    """The n-string 1-loop essential tangle with 2n crossings."""
    if n < 1:
        raise BadParameter("fig3_tangle needs n >= 1")
    asm = Assembler(num_slots=2 * n)
    ts = [asm.add_crossing() for _ in range(n)]  # loop top: (vert N, run W, vert S, run E)
    bs = [asm.add_crossing() for _ in range(n)]  # loop bottom: (run E, vert N, run W, vert S)
    for i in range(n):
        asm.link(("b", n - 1 - i), ("x", ts[i], 0))
        asm.link(("x", ts[i], 2), ("x", bs[i], 1))
        asm.link(("x", bs[i], 3), ("b", n + i))
    for i in range(n - 1):
        asm.link(("x", ts[i], 3), ("x", ts[i + 1], 1))
        asm.link(("x", bs[i], 0), ("x", bs[i + 1], 2))
    asm.link(("x", ts[0], 1), ("x", bs[0], 2))      # left closure of the loop
    asm.link(("x", ts[n - 1], 3), ("x", bs[n - 1], 0))  # right closure
    return asm.build()


def _fig2_a(n: int) -> TangleDiagram:
    asm = Assembler(num_slots=2 * n)
    # s1 runs: head slot -> P(over) -> W(under) -> top run -> sweep ->
    # bottom run -> R(under) -> C-loop over s2 twice, under itself at P ->
    # tail descends under the top run at Q -> tail slot
    w = asm.add_crossing()   # (s1 E, s2 N, s1 W, s2 S), s1 under
    p = asm.add_crossing()   # (C N, line W, C S, line E), C under
    cu = asm.add_crossing()  # (s2 N, C W, s2 S, C E), s2 under
    cl = asm.add_crossing()  # (s2 N, C NW, s2 S, C SE), s2 under
    q = asm.add_crossing()   # (tail N, run W, tail S, run E), tail under
    r = asm.add_crossing()   # (run E, tail N, run W, tail S), run under
    ts = [asm.add_crossing() for _ in range(n - 2)]  # top run over verticals
    bs = [asm.add_crossing() for _ in range(n - 2)]  # bottom run under verticals

    slot_s2_top = n - 2
    slot_head = n - 1
    slot_s2_bot = n
    slot_tail = n + 1
    asm.link(("b", slot_head), ("x", p, 1))
    asm.link(("x", p, 3), ("x", w, 2))
    asm.link(("x", w, 0), ("x", q, 1))
    # top run east of Q, sweep, bottom run back west into R
    if n == 2:
        asm.link(("x", q, 3), ("x", r, 0))
    else:
        asm.link(("x", q, 3), ("x", ts[0], 1))
        for m in range(n - 3):
            asm.link(("x", ts[m], 3), ("x", ts[m + 1], 1))
        asm.link(("x", ts[n - 3], 3), ("x", bs[n - 3], 0))
        for m in range(n - 3, 0, -1):
            asm.link(("x", bs[m], 2), ("x", bs[m - 1], 0))
        asm.link(("x", bs[0], 2), ("x", r, 0))
    asm.link(("x", r, 2), ("x", cl, 3))
    asm.link(("x", cl, 1), ("x", p, 2))
    asm.link(("x", p, 0), ("x", cu, 1))
    asm.link(("x", cu, 3), ("x", q, 0))
    asm.link(("x", q, 2), ("x", r, 1))
    asm.link(("x", r, 3), ("b", slot_tail))
    # s2: straight strand passing under the C-loop twice, over s1 once
    asm.link(("b", slot_s2_top), ("x", cu, 0))
    asm.link(("x", cu, 2), ("x", w, 1))
    asm.link(("x", w, 3), ("x", cl, 0))
    asm.link(("x", cl, 2), ("b", slot_s2_bot))
    # verticals
    for m in range(n - 2):
        asm.link(("b", n - 3 - m), ("x", ts[m], 0))
        asm.link(("x", ts[m], 2), ("x", bs[m], 1))
        asm.link(("x", bs[m], 3), ("b", n + 2 + m))
    return asm.build()


def _fig2_b(n: int) -> TangleDiagram:
    asm = Assembler(num_slots=2 * n)
    # s_A: bottom-right slot, up over s_B (YR), under it (XR), across the
    # top arc (ZR, verticals, ZL), under s_B (XL), over it (YL), bottom-left
    # s_B: top-right slot, under the arc (ZR), over s_A (XR), under s_A (YR),
    # westward bottom sweep under the verticals, YL, XL, ZL, top-left slot
    yr = asm.add_crossing()  # (sB E, sA N, sB W, sA S), sB under
    xr = asm.add_crossing()  # (sA up, sB up, sA down, sB down), sA under
    zr = asm.add_crossing()  # (sB N, arc W, sB S, arc E), sB under
    yl = asm.add_crossing()  # (sB E, sA N, sB W, sA S), sB under
    xl = asm.add_crossing()  # (sA up, sB down, sA down, sB up), sA under
    zl = asm.add_crossing()  # (sB N, arc W, sB S, arc E), sB under
    ts = [asm.add_crossing() for _ in range(n - 2)]  # arc over verticals
    us = [asm.add_crossing() for _ in range(n - 2)]  # sweep under verticals

    slot_sb_tr = 0
    slot_sb_tl = n - 1
    slot_sa_bl = n
    slot_sa_br = 2 * n - 1
    asm.link(("b", slot_sa_br), ("x", yr, 3))
    asm.link(("x", yr, 1), ("x", xr, 2))
    asm.link(("x", yr, 0), ("x", xr, 3))
    asm.link(("x", xr, 0), ("x", zr, 3))
    asm.link(("x", xr, 1), ("x", zr, 2))
    asm.link(("b", slot_sb_tr), ("x", zr, 0))
    # arc westward
    if n == 2:
        asm.link(("x", zr, 1), ("x", zl, 3))
    else:
        asm.link(("x", zr, 1), ("x", ts[n - 3], 3))
        for m in range(n - 3, 0, -1):
            asm.link(("x", ts[m], 1), ("x", ts[m - 1], 3))
        asm.link(("x", ts[0], 1), ("x", zl, 3))
    asm.link(("x", zl, 1), ("x", xl, 0))
    asm.link(("x", zl, 2), ("x", xl, 3))
    asm.link(("x", xl, 2), ("x", yl, 1))
    asm.link(("x", xl, 1), ("x", yl, 2))
    asm.link(("x", yl, 3), ("b", slot_sa_bl))
    asm.link(("b", slot_sb_tl), ("x", zl, 0))
    # bottom sweep westward from YR to YL
    if n == 2:
        asm.link(("x", yr, 2), ("x", yl, 0))
    else:
        asm.link(("x", yr, 2), ("x", us[n - 3], 0))
        for m in range(n - 3, 0, -1):
            asm.link(("x", us[m], 2), ("x", us[m - 1], 0))
        asm.link(("x", us[0], 2), ("x", yl, 0))
    # verticals
    for m in range(n - 2):
        asm.link(("b", n - 2 - m), ("x", ts[m], 0))
        asm.link(("x", ts[m], 2), ("x", us[m], 1))
        asm.link(("x", us[m], 3), ("b", n + 1 + m))
    return asm.build()


def fig2_tangle(n: int, variant: str) -> TangleDiagram:
    """All-strings-unknotted essential tangle with 2n+2 crossings."""
    if n < 2:
        raise BadParameter("fig2_tangle needs n >= 2")
    if variant not in ("a", "b", "c"):
        raise BadParameter(f"unknown fig2 variant {variant!r}")
    if variant == "a":
        return _fig2_a(n)
    d = _fig2_b(n)
    if variant == "b":
        return d
    # variant c: switch the crossings of the right-hand twist box (YR XR ZR)
    switched = list(d.crossings)
    for ci in (0, 1, 2):
        c = switched[ci]
        switched[ci] = (c[1], c[2], c[3], c[0])
    return TangleDiagram(boundary=d.boundary, crossings=tuple(switched),
                         num_edges=d.num_edges, free_loops=d.free_loops)

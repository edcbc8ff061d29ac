"""Crossing and segment taxonomy: outermost/inner, external/internal/lateral.

A crossing is *outermost* when it is the first crossing along some string
walked from one of its endpoints, and *inner* otherwise.  Relative to an
outermost crossing, the segment carrying the string end is *external*, the
opposite segment *internal*, and the remaining two *lateral*.  Segments are
the edges of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import BOUNDARY, TangleDiagram
from .errors import NotOutermost

EXTERNAL = "external"
INTERNAL = "internal"
LATERAL = "lateral"


@dataclass(frozen=True)
class CrossingLabel:
    kind: str                      # "outermost" | "inner"
    owners: tuple[int, ...]        # boundary slots whose first crossing this is

    @property
    def is_outermost(self) -> bool:
        return self.kind == "outermost"


def first_crossing_from(d: TangleDiagram, slot: int) -> tuple[int, int] | None:
    """(crossing index, entry slot) first met walking in from a boundary slot."""
    far = d.boundary[slot] ^ 1
    ci, s = d.attachment(far)
    if ci == BOUNDARY:
        return None
    return ci, s


def classify_crossings(d: TangleDiagram) -> dict[int, CrossingLabel]:
    """Label every crossing outermost or inner."""
    owners: dict[int, list[int]] = {ci: [] for ci in range(len(d.crossings))}
    for slot in range(len(d.boundary)):
        hit = first_crossing_from(d, slot)
        if hit is not None:
            owners[hit[0]].append(slot)
    return {
        ci: CrossingLabel("outermost" if own else "inner", tuple(own))
        for ci, own in owners.items()
    }


def classify_segments(d: TangleDiagram, ci: int,
                      owner_slot: int | None = None) -> dict[int, str]:
    """Label the four slots of an outermost crossing.

    Returns slot index -> label; the segment at a slot is the edge attached
    there.  ``owner_slot`` picks the string end when the crossing is first
    from several ends (possible in non-minimal diagrams); default is the
    smallest owning boundary slot.
    """
    labels = classify_crossings(d)
    lab = labels.get(ci)
    if lab is None or not lab.is_outermost:
        raise NotOutermost(f"crossing {ci} is not outermost")
    if owner_slot is None:
        owner_slot = lab.owners[0]
    elif owner_slot not in lab.owners:
        raise NotOutermost(f"crossing {ci} is not first from slot {owner_slot}")
    entry = first_crossing_from(d, owner_slot)[1]
    return {
        entry: EXTERNAL,
        (entry + 2) % 4: INTERNAL,
        (entry + 1) % 4: LATERAL,
        (entry + 3) % 4: LATERAL,
    }


def segment_labels_by_edge(d: TangleDiagram) -> dict[int, set[str]]:
    """Labels each edge collects across all outermost crossings of ``d``."""
    out: dict[int, set[str]] = {}
    for ci, lab in classify_crossings(d).items():
        if not lab.is_outermost:
            continue
        for slot_owner in lab.owners:
            slot_labels = classify_segments(d, ci, slot_owner)
            cr = d.crossings[ci]
            for s, name in slot_labels.items():
                out.setdefault(cr[s] // 2, set()).add(name)
    return out

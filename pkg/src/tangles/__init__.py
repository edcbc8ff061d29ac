"""Tangle diagrams in a disk: enumeration, moves, and essentiality."""

from .diagram import (
    Assembler,
    Component,
    TangleDiagram,
    ValidationReport,
    components,
    delete_components,
    mirrored,
    reflected,
    rotated,
    require_valid,
    validate,
)
from .codes import canonical_code, canonical_form, shadow_form
from .builders import arc, crossing_free_tangle, fig1_tangle, fig2_tangle, fig3_tangle

__all__ = [
    "Assembler",
    "Component",
    "TangleDiagram",
    "ValidationReport",
    "arc",
    "canonical_code",
    "canonical_form",
    "components",
    "crossing_free_tangle",
    "delete_components",
    "fig1_tangle",
    "fig2_tangle",
    "fig3_tangle",
    "mirrored",
    "reflected",
    "rotated",
    "require_valid",
    "shadow_form",
    "validate",
]

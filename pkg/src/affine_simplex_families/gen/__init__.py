"""
Subsystem closure and the "generates W" test.
"""

from .closure import RootSet, generates_full, subsystem_closure, subsystem_type

__all__ = ["RootSet", "generates_full", "subsystem_closure", "subsystem_type"]

"""Desk-scale resource bounds, collected in one place.

Every potentially explosive computation checks one of these limits and fails
with a clean ScaleError instead of silently truncating.  The CLI exposes
overrides for all three.
"""

from __future__ import annotations

from dataclasses import dataclass


class ScaleError(RuntimeError):
    """A requested computation exceeds the configured desk-scale bounds."""


@dataclass(frozen=True)
class Bounds:
    # The tabloid expansion of a hook polytabloid has n! terms.
    polytabloid_max_n: int = 7
    # Largest sublattice index accepted by the exhaustive census.
    index_enumeration_max: int = 500
    # Largest residue module size p**n accepted by subspace spinning.
    spinning_max_order: int = 1_000_000


DEFAULT_BOUNDS = Bounds()

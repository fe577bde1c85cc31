"""Named desk-scale matroids shared by the verification suites.

The collection covers the structural variety the identities quantify over:
Boolean and uniform matroids (where closed forms exist), field-plane
geometries (size-perfect but far from uniform), and sparse paving matroids
with one or two relaxed circuit-hyperplanes (not size-perfect at all).
"""

from __future__ import annotations

from .matroid import (
    Matroid,
    build_boolean,
    build_projective_geometry,
    build_sparse_paving,
    build_uniform,
)

__all__ = ["build_fano", "named_catalog"]


def build_fano() -> Matroid:
    """The seven-point plane over the two-element field."""
    return build_projective_geometry(2, 2)


def named_catalog() -> dict:
    """Name -> Matroid for the standard verification collection."""
    out = {}
    for k in range(1, 7):
        out[f"b{k}"] = build_boolean(k)
    for rank, size in [
        (2, 4),
        (2, 5),
        (2, 7),
        (3, 5),
        (3, 6),
        (4, 6),
        (4, 7),
        (5, 8),
    ]:
        out[f"u{rank}{size}"] = build_uniform(rank, size)
    out["fano"] = build_fano()
    out["pg23"] = build_projective_geometry(2, 3)
    out["pg32"] = build_projective_geometry(3, 2)
    out["sp361"] = build_sparse_paving(3, 6, [(0, 1, 2)])
    out["sp362"] = build_sparse_paving(3, 6, [(0, 1, 2), (3, 4, 5)])
    return out

"""Weighted binary-tree expansion of products of hypersimplex classes.

A product gamma_{v_1}...gamma_{v_k} expands over flat-filled increasing
binary trees: vertices carry distinct proper flats forming a chain along the
binary search order, the labeling records insertion time, and each vertex b
must fit its class index strictly between the sizes of its search-order
neighbors among earlier-inserted vertices (boundaries: empty set and ground
set). Each tree contributes the product of its per-vertex insertion weights,
in either the oi or mult convention, to the monomial of its image flag.

Enumeration runs the flag expansion itself while recording where each flat
lands in the chain; the insertion positions determine the tree uniquely
(new vertex hangs off the more recently inserted of its two neighbors).
Weights are recomputed from the finished tree, not carried along, so the
aggregation tests genuinely cross-check the expansion engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import VOutOfRange
from .matroid import Matroid, largest_elements_mask
from .expansion import CONVENTIONS, mult_weight

__all__ = ["PostnikovTree", "tree_weight", "enumerate_trees", "aggregate_by_flag"]


@dataclass(frozen=True)
class PostnikovTree:
    """An increasing binary tree whose vertices carry a chain of flats.

    Vertices are identified by search position 0..k-1 (leftmost first).
    labels[i] is the insertion time (1-based) of the vertex at position i;
    flats[i] its flat, so flats is the image flag in chain order. parent[t-1]
    is the label of the parent of the vertex labeled t (0 for the root) and
    side[t-1] is "left" or "right" ("root" for the root).
    """

    labels: tuple
    flats: tuple
    parent: tuple
    side: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    def position_of_label(self, t: int) -> int:
        return self.labels.index(t)

    def neighbors_at_insertion(self, t: int):
        """Search positions of the chain neighbors of label t when it arrived.

        Returns (left, right) as final search positions, None at a boundary.
        """
        pos = self.position_of_label(t)
        left = right = None
        for i in range(pos - 1, -1, -1):
            if self.labels[i] < t:
                left = i
                break
        for i in range(pos + 1, self.size):
            if self.labels[i] < t:
                right = i
                break
        return left, right

    def is_increasing(self) -> bool:
        for t in range(2, self.size + 1):
            if not 1 <= self.parent[t - 1] < t:
                return False
        return self.size == 0 or self.parent[0] == 0

    def is_compatible(self, matroid: Matroid, v) -> bool:
        """Check the gap condition at every vertex against v."""
        if len(v) != self.size:
            return False
        for pos in range(self.size):
            t = self.labels[pos]
            left, right = self.neighbors_at_insertion(t)
            lo = 0 if left is None else self.flats[left].bit_count()
            hi = matroid.m if right is None else self.flats[right].bit_count()
            if not lo < v[t - 1] < hi:
                return False
        return True


def tree_weight(matroid: Matroid, tree: PostnikovTree, v, convention: str = "oi"):
    """Product of per-vertex insertion weights, from the tree data alone."""
    if convention not in CONVENTIONS:
        raise VOutOfRange(f"unknown weight convention {convention!r}")
    total = 1 if convention == "oi" else Fraction(1)
    for pos in range(tree.size):
        t = tree.labels[pos]
        val = v[t - 1]
        left, right = tree.neighbors_at_insertion(t)
        lo = 0 if left is None else tree.flats[left]
        hi = matroid.full_mask if right is None else tree.flats[right]
        g = tree.flats[pos]
        lo_size = lo.bit_count()
        hi_size = hi.bit_count()
        if not lo_size < val < hi_size:
            return 0
        if convention == "oi":
            t_mask = largest_elements_mask(hi & ~lo, hi_size - val)
            total *= ((g & ~lo) & t_mask).bit_count() - max(0, g.bit_count() - val)
        else:
            total *= mult_weight((g & ~lo).bit_count(), val - lo_size, hi_size - lo_size)
        if not total:
            return total
    return total


def enumerate_trees(matroid: Matroid, v, convention: str = "oi"):
    """All compatible flat-filled trees for v with their nonzero weights.

    Aggregating the result by image flag reproduces expand_gamma_product.
    """
    if convention not in CONVENTIONS:
        raise VOutOfRange(f"unknown weight convention {convention!r}")
    vs = tuple(v)
    if len(vs) > matroid.r:
        raise VOutOfRange(f"product of {len(vs)} classes exceeds top degree {matroid.r}")
    for val in vs:
        if not 1 <= val <= matroid.n:
            raise VOutOfRange(f"index {val} outside 1..{matroid.n}")
    full = matroid.full_mask
    out = []

    # state: chain of masks, labels in search order, parent/side per label
    def step(chain, order, parent, side, depth):
        if depth == len(vs):
            tree = PostnikovTree(order, chain, parent, side)
            w = tree_weight(matroid, tree, vs, convention)
            if w:
                out.append((tree, w))
            return
        val = vs[depth]
        idx = 0
        for i, f in enumerate(chain):
            fs = f.bit_count()
            if fs == val:
                return
            if fs < val:
                idx = i + 1
            else:
                break
        lo = chain[idx - 1] if idx else 0
        hi = chain[idx] if idx < len(chain) else full
        label = depth + 1
        # the new vertex hangs off the more recently inserted neighbor
        left_lab = order[idx - 1] if idx else 0
        right_lab = order[idx] if idx < len(order) else 0
        if left_lab == 0 and right_lab == 0:
            p, s = 0, "root"
        elif left_lab > right_lab:
            p, s = left_lab, "right"
        else:
            p, s = right_lab, "left"
        for g in matroid.flats_strictly_between(lo, hi):
            step(
                chain[:idx] + (g,) + chain[idx:],
                order[:idx] + (label,) + order[idx:],
                parent + (p,),
                side + (s,),
                depth + 1,
            )

    step((), (), (), (), 0)
    return out


def aggregate_by_flag(terms):
    """Sum tree weights by image flag, dropping zero totals."""
    agg = {}
    for tree, w in terms.items() if isinstance(terms, dict) else terms:
        prev = agg.get(tree.flats)
        agg[tree.flats] = w if prev is None else prev + w
    return {flag: w for flag, w in agg.items() if w}

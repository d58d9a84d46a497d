"""Generators for the explicit saturated-family constructions.

Each generator assembles its family as a raw union of the defining pieces
and canonicalizes at the end, so accidental overlap between pieces would
surface as a size mismatch in tests rather than hide silently.  Parameter
bounds are the smallest values for which every interval in a definition is
nonempty; out-of-range parameters raise rather than clamp.
"""

from __future__ import annotations

from itertools import combinations

from .posetspec import DROP_EMPTY, DROP_EMPTY_AND_FULL, DROP_NONE
from .setfam import Family, canonicalize_family, full_mask, interval_mask, mask_of


def _k_subsets(element_mask: int, size: int) -> list[int]:
    """All size-subsets of the elements of element_mask, as masks."""
    bits = []
    m = element_mask
    while m:
        low = m & -m
        bits.append(low)
        m ^= low
    if size > len(bits):
        return []
    return [sum(combo) for combo in combinations(bits, size)]


def construct_mck(n: int, m: int, k: int) -> Family:
    """Family over [n] that is free of m incomparable k-chains and leaves
    only a bounded set of non-completing additions.

    Built from m-1 long chains C_s anchored at single elements s < m, the
    low layers F_z of z-sets meeting [m+k-3] in at least z-1 elements, the
    co-layers F^z of complements of (m+k-3-z)-subsets of [m+k-3], plus the
    empty and full set.  k = 2 uses the degenerate variant where the layer
    collapses to all pairs leaving [m, n] and the single co-layer set
    [m, n].
    """
    if m < 2:
        raise ValueError(f"need m >= 2 chains, got {m}")
    if k < 2:
        raise ValueError(f"need chain length k >= 2, got {k}")
    if n < 2 * (m + k) - 2:
        raise ValueError(f"need n >= 2(m+k)-2 = {2 * (m + k) - 2}, got {n}")
    sets = [0, full_mask(n)]
    if k >= 3:
        for s in range(1, m):
            anchor = 1 << (s - 1)
            sets.append(anchor)
            for t in range(m + k - 1, n + 1):
                sets.append(anchor | interval_mask(m, t))
        head = interval_mask(1, m + k - 3)
        for z in range(2, k + 1):
            for f in _k_subsets(full_mask(n), z):
                if (f & head).bit_count() >= z - 1:
                    sets.append(f)
        for z in range(0, k - 1):
            for f in _k_subsets(head, m + k - 3 - z):
                sets.append(full_mask(n) ^ f)
    else:
        for s in range(1, m):
            anchor = 1 << (s - 1)
            sets.append(anchor)
            for t in range(m + 1, n + 1):
                sets.append(anchor | interval_mask(m, t))
        tail = interval_mask(m, n)
        sets.append(tail)
        for f in _k_subsets(full_mask(n), 2):
            if f & tail != f:
                sets.append(f)
    return canonicalize_family(sets, n)


def construct_mc2_binom(n: int, t: int) -> Family:
    """Complement-closed family over [n] free of binom(2t,t)+1 incomparable
    2-chains.

    The lower half holds the empty set, all t-subsets of [2t+1], the
    (t+1)-subsets of [2t+1] through the element 2t+1, and all (t+2)-subsets
    of [2t]; the upper half is its complement family.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if n < 2 * t + 3:
        raise ValueError(f"need n >= 2t+3 = {2 * t + 3}, got {n}")
    window = interval_mask(1, 2 * t + 1)
    pivot = 1 << (2 * t)
    lower = [0]
    lower += _k_subsets(window, t)
    lower += [f for f in _k_subsets(window, t + 1) if f & pivot]
    lower += _k_subsets(interval_mask(1, 2 * t), t + 2)
    half = canonicalize_family(lower, n)
    full = full_mask(n)
    return canonicalize_family(list(half.sets) + [full ^ f for f in half.sets], n)


def construct_2ck_c1(n: int, k: int) -> Family:
    """Complement-closed family over [n], of size exactly 2^(k+2) - 4, free
    of two incomparable k-chains plus an extra incomparable element.

    Uses the nonempty subsets of [k], the nonempty subsets of [k+1, 2k-1],
    the latter lifted by the block [k], their complements, and the empty
    and full set.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < 2 * k:
        raise ValueError(f"need n >= 2k = {2 * k}, got {n}")
    block = interval_mask(1, k)
    side = interval_mask(k + 1, 2 * k - 1)
    a_side = [m for m in _all_subsets(side) if m]
    lower = [m for m in _all_subsets(block) if m]
    lower += a_side
    lower += [block | m for m in a_side]
    full = full_mask(n)
    sets = [0, full] + lower + [full ^ m for m in lower]
    return canonicalize_family(sets, n)


def construct_b3(n: int) -> Family:
    """Family of size 3n-2 over [n] saturated for the 3-dimensional Boolean
    lattice: empty set, full set, all singletons, and the edges of the
    complete bipartite graph between {1, 2} and [3, n]."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    sets = [0, full_mask(n)]
    sets += [1 << i for i in range(n)]
    for u in (1, 2):
        for v in range(3, n + 1):
            sets.append(mask_of((u, v), n))
    return canonicalize_family(sets, n)


def boolean_family(k: int, drop: str = DROP_NONE) -> Family:
    """The power set over ground size k, with the indicated extremes removed."""
    if not 1 <= k <= 16:
        raise ValueError(f"need 1 <= k <= 16, got {k}")
    full = full_mask(k)
    sets = list(range(full + 1))
    if drop == DROP_EMPTY:
        sets.remove(0)
    elif drop == DROP_EMPTY_AND_FULL:
        sets.remove(0)
        sets.remove(full)
    elif drop != DROP_NONE:
        raise ValueError(f"unknown drop mode {drop!r}")
    return canonicalize_family(sets, k)


def _all_subsets(element_mask: int) -> list[int]:
    """All submasks of element_mask, including 0 and itself."""
    subs = [0]
    m = element_mask
    while m:
        low = m & -m
        subs += [s | low for s in subs]
        m ^= low
    return subs

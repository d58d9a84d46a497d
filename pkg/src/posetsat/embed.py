"""Induced-copy search: embed a target poset into a set family.

An induced copy of a target P inside a family F is an injective assignment
b of poset elements to members of F with p <= q in P if and only if
b(p) is a subset of b(q); incomparable elements must map to incomparable
sets.  Two engines implement the search behind one interface:

* The generic engine backtracks over poset elements in a linear extension
  (longest chains first), keeping candidate images as bitsets over family
  indices so that the exact-match pruning — a candidate survives only if
  its containment relations to every previously placed image equal the
  target relation — is a handful of integer ANDs per node.  It handles any
  target, including the Boolean-lattice ones.

* The chain engine serves pure chain-union targets.  Two chains are fully
  cross-incomparable exactly when each bottom escapes the other's top, so
  a chain is summarized by its (bottom, top) pair; the engine enumerates
  realizable interval nodes via a longest-chain table and picks one node
  per target chain, shrinking a compatibility bitset as it goes.  This is
  what makes exhaustive negative verdicts (freeness proofs, exception
  sweeps) fast on families full of long chains.

Chains of equal length are interchangeable, so both engines may order them
canonically; this removes a factorial blowup without changing whether a
copy exists.  Every search carries a node budget and raises
:class:`BudgetExceededError` when it runs out, which callers must keep
distinct from "no copy".
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .posetspec import ComparabilityMatrix, render_poset_spec
from .setfam import Family, elements_of, is_subset

DEFAULT_NODE_BUDGET = 50_000_000

_LT, _GT, _INC = 0, 1, 2


class BudgetExceededError(RuntimeError):
    """Search ran out of nodes before reaching a verdict.

    Sweeps that abort midway attach what they had: ``partial`` holds the
    results gathered so far, ``partial_count`` their number.
    """

    def __init__(
        self,
        message: str = "node budget exceeded",
        partial: object = None,
        partial_count: int | None = None,
    ):
        super().__init__(message)
        self.partial = partial
        self.partial_count = partial_count


@dataclass(frozen=True)
class Embedding:
    """Images of poset elements, indexed like the comparability matrix."""

    poset: ComparabilityMatrix
    assignment: tuple[int, ...]


@dataclass(frozen=True)
class WitnessMatrix:
    """Incomparability witnesses for a chain-union embedding.

    ``entries[i][j]`` (i != j) is the smallest element of B_i \\ T_j, where
    B_i is the image of chain i's minimum and T_j the image of chain j's
    maximum; the diagonal is None.
    """

    chain_count: int
    entries: tuple[tuple[int | None, ...], ...]


class _FamilyIndex:
    """Pairwise containment structure of a mask tuple, as index bitsets.

    ``up[i]`` holds j iff masks[i] is a proper subset of masks[j]; ``down``
    and ``inc`` are the mirror and the incomparable set; ``gt[i]`` holds j
    iff masks[j] > masks[i] numerically (used for symmetry breaking).
    """

    __slots__ = ("masks", "up", "down", "inc", "gt", "all_bits")

    def __init__(self, masks: tuple[int, ...], _rows=None):
        self.masks = masks
        nf = len(masks)
        if _rows is not None:
            self.up, self.down, self.inc, self.gt = _rows
        else:
            up = [0] * nf
            down = [0] * nf
            inc = [0] * nf
            gt = [0] * nf
            for i in range(nf):
                a = masks[i]
                for j in range(i + 1, nf):
                    b = masks[j]
                    bit_i, bit_j = 1 << i, 1 << j
                    if a & b == a:
                        up[i] |= bit_j
                        down[j] |= bit_i
                    elif a & b == b:
                        down[i] |= bit_j
                        up[j] |= bit_i
                    else:
                        inc[i] |= bit_j
                        inc[j] |= bit_i
                    if b > a:
                        gt[i] |= bit_j
                    else:
                        gt[j] |= bit_i
            self.up, self.down, self.inc, self.gt = up, down, inc, gt
        self.all_bits = (1 << nf) - 1

    def extended(self, g: int) -> "_FamilyIndex":
        """Index for masks + (g,); g must not already be a member."""
        nf = len(self.masks)
        bit = 1 << nf
        up, down, inc, gt = [], [], [], []
        g_up = g_down = g_inc = g_gt = 0
        for i, a in enumerate(self.masks):
            u, d, c, t = self.up[i], self.down[i], self.inc[i], self.gt[i]
            if a & g == a:
                u |= bit
                g_down |= 1 << i
            elif a & g == g:
                d |= bit
                g_up |= 1 << i
            else:
                c |= bit
                g_inc |= 1 << i
            if g > a:
                t |= bit
            else:
                g_gt |= 1 << i
            up.append(u)
            down.append(d)
            inc.append(c)
            gt.append(t)
        up.append(g_up)
        down.append(g_down)
        inc.append(g_inc)
        gt.append(g_gt)
        return _FamilyIndex(self.masks + (g,), _rows=(up, down, inc, gt))


class _SearchPlan:
    """Per-target data: pairwise relations and symmetry-break bottom links."""

    __slots__ = ("size", "rel", "bottom_prev", "bottom_next")

    def __init__(self, poset: ComparabilityMatrix, symmetry_break: bool = True):
        p = poset.size
        rows = poset.leq_rows
        rel = [[_INC] * p for _ in range(p)]
        for i in range(p):
            for j in range(p):
                if i == j:
                    continue
                if rows[i] >> j & 1:
                    rel[i][j] = _LT
                elif rows[j] >> i & 1:
                    rel[i][j] = _GT
        self.size = p
        self.rel = rel
        bottom_prev: dict[int, int] = {}
        bottom_next: dict[int, int] = {}
        if symmetry_break and poset.chains is not None:
            prev = None
            for chain in poset.chains:
                if prev is not None and len(prev) == len(chain):
                    bottom_prev[chain[0]] = prev[0]
                    bottom_next[prev[0]] = chain[0]
                prev = chain
        self.bottom_prev = bottom_prev
        self.bottom_next = bottom_next


def _run(
    index: _FamilyIndex,
    plan: _SearchPlan,
    budget: list[int],
    pin_pos: int | None = None,
    pin_idx: int | None = None,
) -> list[int] | None:
    """One backtracking pass; returns position -> family index, or None.

    ``budget`` is a one-element list decremented per candidate attempt,
    shared across passes.
    """
    p = plan.size
    nf = len(index.masks)
    if nf < p:
        return None
    rel = plan.rel
    up, down, inc = index.up, index.down, index.inc
    gt, all_bits = index.gt, index.all_bits
    masks = index.masks

    assigned = [-1] * p
    used = 0
    order = []
    for pos in range(p):
        if pos == pin_pos:
            assigned[pos] = pin_idx
            used = 1 << pin_idx
        else:
            order.append(pos)
    if not order:
        return assigned

    # Constraint sources per depth: pinned position first, then the prefix.
    sources: list[list[tuple[int, int]]] = []
    for d, pos in enumerate(order):
        srcs = []
        if pin_pos is not None:
            srcs.append((pin_pos, rel[pin_pos][pos]))
        srcs.extend((q, rel[q][pos]) for q in order[:d])
        sources.append(srcs)
    bprev = [plan.bottom_prev.get(pos) for pos in order]
    bnext = [plan.bottom_next.get(pos) for pos in order]

    def candidates(d: int) -> int:
        cand = all_bits & ~used
        for q, r in sources[d]:
            iq = assigned[q]
            if r == _LT:
                cand &= up[iq]
            elif r == _GT:
                cand &= down[iq]
            else:
                cand &= inc[iq]
            if not cand:
                return 0
        q = bprev[d]
        if q is not None and assigned[q] >= 0:
            cand &= gt[assigned[q]]
        q = bnext[d]
        if q is not None and assigned[q] >= 0:
            j = assigned[q]
            cand &= all_bits & ~gt[j] & ~(1 << j)
        return cand

    m = len(order)
    stack = [0] * m
    stack[0] = candidates(0)
    depth = 0
    left = budget[0]
    while depth >= 0:
        pos = order[depth]
        prev = assigned[pos]
        if prev >= 0:
            used &= ~(1 << prev)
            assigned[pos] = -1
        cand = stack[depth]
        if not cand:
            depth -= 1
            continue
        left -= 1
        if left < 0:
            budget[0] = 0
            raise BudgetExceededError()
        low = cand & -cand
        stack[depth] = cand ^ low
        idx = low.bit_length() - 1
        assigned[pos] = idx
        used |= 1 << idx
        if depth + 1 == m:
            budget[0] = left
            return assigned
        depth += 1
        stack[depth] = candidates(depth)
    budget[0] = left
    return None


def _search(
    index: _FamilyIndex,
    plan: _SearchPlan,
    budget: list[int],
    require_idx: int | None = None,
) -> list[int] | None:
    """Find an assignment, optionally forced to use one family index.

    With a required index, each poset position is tried as its host in
    turn; the first complete assignment wins.
    """
    if require_idx is None:
        return _run(index, plan, budget)
    for pin_pos in range(plan.size):
        res = _run(index, plan, budget, pin_pos, require_idx)
        if res is not None:
            return res
    return None


class _ChainEngine:
    """Interval-node search for pure chain-union targets.

    A k-chain inside the family is represented by its (bottom, top) pair of
    family indices; the longest-chain table ``ml[t][b]`` (number of family
    sets on the longest chain from b to t inclusive) tells which pairs can
    host which lengths.  Cross-incomparability of two chains reduces to
    their extremes: bottom of each must escape the top of the other, so
    compatibility of a node against everything chosen is two bitset ANDs.
    """

    __slots__ = (
        "masks",
        "sym",
        "groups",
        "slots",
        "slot_group",
        "up_bits",
        "down_bits",
        "ml",
        "nodes",
        "node_count",
        "all_nodes",
        "len_ok",
        "nb",
        "nt",
        "by_bottom",
        "by_top",
        "adj",
    )

    # Above this many interval nodes the generic engine takes over.
    MAX_NODES = 50_000
    # Adjacency rows are materialized only below this node count.
    ADJ_CACHE_NODES = 8_000

    def __init__(self, masks: tuple[int, ...], poset: ComparabilityMatrix, symmetry_break: bool):
        self.masks = masks
        self.sym = symmetry_break
        # Chains grouped by length, longest first; remember original ids.
        lengths: dict[int, list[int]] = {}
        for cid, chain in enumerate(poset.chains):
            lengths.setdefault(len(chain), []).append(cid)
        self.groups = sorted(lengths.items(), key=lambda kv: -kv[0])
        self.slots = []
        self.slot_group = []
        for gi, (length, chain_ids) in enumerate(self.groups):
            for _ in chain_ids:
                self.slots.append(length)
                self.slot_group.append(gi)

        nf = len(masks)
        up = [0] * nf
        down = [0] * nf
        for i in range(nf):
            a = masks[i]
            for j in range(i + 1, nf):
                b = masks[j]
                if a & b == a:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
                elif a & b == b:
                    down[i] |= 1 << j
                    up[j] |= 1 << i
        self.up_bits = up
        self.down_bits = down

        # Longest-chain table, computed per top along a linear extension.
        order = sorted(range(nf), key=lambda i: (masks[i].bit_count(), masks[i]))
        rank = [0] * nf
        for r, i in enumerate(order):
            rank[i] = r
        ml: list[dict[int, int]] = [dict() for _ in range(nf)]
        need_pairs = any(length >= 2 for length, _ in self.groups)
        min_len = min(
            (length for length, _ in self.groups if length >= 2), default=None
        )
        for t in range(nf):
            row = ml[t]
            row[t] = 1
            below = down[t]
            inside = sorted(
                _bits(below), key=lambda i: rank[i], reverse=True
            )
            span = below | (1 << t)
            for b in inside:
                best = 0
                sup = up[b] & span
                while sup:
                    low = sup & -sup
                    sup ^= low
                    best_c = row[low.bit_length() - 1]
                    if best_c > best:
                        best = best_c
                row[b] = 1 + best
        self.ml = ml

        # Interval nodes, ordered by (bottom index, top index).
        want_single = any(length == 1 for length, _ in self.groups)
        nodes: list[tuple[int, int]] = []
        for b in range(nf):
            if want_single:
                nodes.append((b, b))
            if need_pairs:
                sup = up[b]
                while sup:
                    low = sup & -sup
                    sup ^= low
                    t = low.bit_length() - 1
                    if ml[t][b] >= min_len:
                        nodes.append((b, t))
        self.nodes = nodes
        self.node_count = len(nodes)
        self.all_nodes = (1 << len(nodes)) - 1

        self.len_ok = {}
        for length, _ in self.groups:
            ok = 0
            for c, (b, t) in enumerate(nodes):
                if length == 1:
                    if b == t:
                        ok |= 1 << c
                elif b != t and ml[t][b] >= length:
                    ok |= 1 << c
            self.len_ok[length] = ok

        # nb[x]: nodes whose bottom fits inside member x;
        # nt[x]: nodes whose top contains member x.
        nb = [0] * nf
        nt = [0] * nf
        by_bottom = [0] * nf
        by_top = [0] * nf
        for c, (bi, ti) in enumerate(nodes):
            bm, tm = masks[bi], masks[ti]
            bit = 1 << c
            by_bottom[bi] |= bit
            by_top[ti] |= bit
            for x in range(nf):
                mx = masks[x]
                if bm & mx == bm:
                    nb[x] |= bit
                if mx & tm == mx:
                    nt[x] |= bit
        self.nb = nb
        self.nt = nt
        self.by_bottom = by_bottom
        self.by_top = by_top
        # Cached compatibility rows keep the inner search at one AND per node.
        if self.node_count <= self.ADJ_CACHE_NODES:
            self.adj = [self._compat(c) for c in range(self.node_count)]
        else:
            self.adj = None

    def _compat(self, c: int) -> int:
        b, t = self.nodes[c]
        return self.all_nodes & ~self.nb[t] & ~self.nt[b]

    def _solve(self, slots: list[int], slot_group: list[int], cand: int, budget: list[int]):
        """Pick one compatible node per slot; returns chosen node ids or None."""
        total = len(slots)
        if total == 0:
            return []
        adj = self.adj
        compat = self._compat
        sym = self.sym
        chosen = [0] * total
        avail = [0] * total
        cand_stack = [0] * total
        cand_stack[0] = cand
        avail[0] = cand & self.len_ok[slots[0]]
        depth = 0
        left = budget[0]
        while depth >= 0:
            a = avail[depth]
            if not a:
                depth -= 1
                continue
            left -= 1
            if left < 0:
                budget[0] = 0
                raise BudgetExceededError()
            low = a & -a
            avail[depth] = a ^ low
            v = low.bit_length() - 1
            chosen[depth] = v
            if depth + 1 == total:
                budget[0] = left
                return chosen
            nxt = cand_stack[depth] & (adj[v] if adj is not None else compat(v))
            a = nxt & self.len_ok[slots[depth + 1]]
            if sym and slot_group[depth + 1] == slot_group[depth]:
                a &= -1 << (v + 1)  # equal chains in ascending node order
            depth += 1
            cand_stack[depth] = nxt
            avail[depth] = a
        budget[0] = left
        return None

    def _realize(self, bi: int, ti: int, length: int) -> list[int]:
        """A chain of exactly ``length`` masks from bottom bi to top ti."""
        if length == 1:
            return [self.masks[bi]]
        path = [self.masks[bi]]
        cur = bi
        row = self.ml[ti]
        for step in range(length - 2):
            need = length - 1 - step
            inner = self.up_bits[cur] & self.down_bits[ti]
            while inner:
                low = inner & -inner
                inner ^= low
                c = low.bit_length() - 1
                if row[c] >= need:
                    path.append(self.masks[c])
                    cur = c
                    break
            else:
                raise AssertionError("longest-chain table broke its promise")
        path.append(self.masks[ti])
        return path

    def _assemble(self, chosen: list[int], slots: list[int], extra=None):
        """Masks per slot; ``extra`` = (g_path, g_slot_length) when pinned."""
        paths = []
        for v, length in zip(chosen, slots):
            b, t = self.nodes[v]
            paths.append(self._realize(b, t, length))
        if extra is not None:
            g_path, g_len = extra
            paths.append(g_path)
            slots = slots + [g_len]
        # Hand paths back to the original chains, matching lengths.
        by_len: dict[int, list[list[int]]] = {}
        for path, length in zip(paths, slots):
            by_len.setdefault(length, []).append(path)
        return by_len

    def find(self, budget: list[int]):
        chosen = self._solve(self.slots, self.slot_group, self.all_nodes, budget)
        if chosen is None:
            return None
        return self._assemble(chosen, self.slots)

    def find_containing(self, g: int, budget: list[int]):
        """A copy inside masks + {g} whose image uses g; g is not a member."""
        masks = self.masks
        down_set = 0
        up_set = 0
        nb_g = 0
        nt_g = 0
        for i, a in enumerate(masks):
            if a & g == a:
                down_set |= 1 << i
                nb_g |= self.by_bottom[i]
            elif a & g == g:
                up_set |= 1 << i
                nt_g |= self.by_top[i]

        down_len = self._reach_lengths(down_set)
        up_len = self._reach_lengths_up(up_set)

        seen_lengths = set()
        for gi, (length, _) in enumerate(self.groups):
            if length in seen_lengths:
                continue
            seen_lengths.add(length)
            rest_slots = []
            rest_group = []
            dropped = False
            for s, sg in zip(self.slots, self.slot_group):
                if not dropped and s == length:
                    dropped = True
                    continue
                rest_slots.append(s)
                rest_group.append(sg)
            scored = []
            for b, t in self._g_classes(length, down_set, up_set, down_len, up_len):
                cand = self.all_nodes
                cand &= ~(nb_g if t is None else self.nb[t])
                cand &= ~(nt_g if b is None else self.nt[b])
                scored.append((-cand.bit_count(), len(scored), b, t, cand))
            scored.sort()  # widest candidate pool first: succeeds soonest
            for _, _, b, t, cand in scored:
                budget[0] -= 1
                if budget[0] < 0:
                    budget[0] = 0
                    raise BudgetExceededError()
                chosen = self._solve(rest_slots, rest_group, cand, budget)
                if chosen is None:
                    continue
                g_path = self._g_path(g, b, t, length, down_len, up_len)
                return self._assemble(chosen, rest_slots, extra=(g_path, length))
        return None

    def _reach_lengths(self, down_set: int) -> dict[int, int]:
        """down_len[i]: longest chain from member i up to g, inclusive."""
        masks = self.masks
        members = sorted(
            _bits(down_set),
            key=lambda i: (masks[i].bit_count(), masks[i]),
            reverse=True,
        )
        out: dict[int, int] = {}
        for i in members:
            best = 1
            sup = self.up_bits[i] & down_set
            while sup:
                low = sup & -sup
                sup ^= low
                cand = out[low.bit_length() - 1]
                if cand > best:
                    best = cand
            out[i] = 1 + best
        return out

    def _reach_lengths_up(self, up_set: int) -> dict[int, int]:
        """up_len[i]: longest chain from g up to member i, inclusive."""
        masks = self.masks
        members = sorted(
            _bits(up_set), key=lambda i: (masks[i].bit_count(), masks[i])
        )
        out: dict[int, int] = {}
        for i in members:
            best = 1
            sub = self.down_bits[i] & up_set
            while sub:
                low = sub & -sub
                sub ^= low
                cand = out[low.bit_length() - 1]
                if cand > best:
                    best = cand
            out[i] = 1 + best
        return out

    def _g_classes(self, length, down_set, up_set, down_len, up_len):
        """(bottom, top) endpoint classes for g's own chain; None means g."""
        if length == 1:
            yield (None, None)
            return
        bottoms = [None] + list(_bits(down_set))
        tops = [None] + list(_bits(up_set))
        for b in bottoms:
            d_lo, d_hi = (1, 1) if b is None else (2, down_len[b])
            for t in tops:
                if b is None and t is None:
                    continue
                u_lo, u_hi = (1, 1) if t is None else (2, up_len[t])
                if d_lo + u_lo - 1 <= length <= d_hi + u_hi - 1:
                    yield (b, t)

    def _g_path(self, g, b, t, length, down_len, up_len):
        """Realize g's chain of exactly ``length`` from class (b, t)."""
        d_lo = 1 if b is None else 2
        d_hi = 1 if b is None else down_len[b]
        u_lo = 1 if t is None else 2
        u_hi = 1 if t is None else up_len[t]
        d = min(d_hi, length + 1 - u_lo)
        assert d >= max(d_lo, length + 1 - u_hi)
        u = length + 1 - d
        down_part = [g] if b is None else self._realize_to_g(g, b, d, down_len)
        up_part = [] if t is None else self._realize_from_g(g, t, u, up_len)[1:]
        return down_part + up_part

    def _realize_to_g(self, g, b, d, down_len):
        masks = self.masks
        path = [masks[b]]
        cur = b
        down_set = 0
        for i in down_len:
            down_set |= 1 << i
        for step in range(d - 2):
            need = d - 1 - step
            inner = self.up_bits[cur] & down_set
            while inner:
                low = inner & -inner
                inner ^= low
                c = low.bit_length() - 1
                if down_len[c] >= need:
                    path.append(masks[c])
                    cur = c
                    break
            else:
                raise AssertionError("down-length table broke its promise")
        path.append(g)
        return path

    def _realize_from_g(self, g, t, u, up_len):
        masks = self.masks
        rev = [masks[t]]
        cur = t
        up_set = 0
        for i in up_len:
            up_set |= 1 << i
        for step in range(u - 2):
            need = u - 1 - step
            inner = self.down_bits[cur] & up_set
            while inner:
                low = inner & -inner
                inner ^= low
                c = low.bit_length() - 1
                if up_len[c] >= need:
                    rev.append(masks[c])
                    cur = c
                    break
            else:
                raise AssertionError("up-length table broke its promise")
        rev.append(g)
        rev.reverse()
        return rev


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CopySearch:
    """Reusable induced-copy searcher bound to one family and one target.

    Picks the chain engine for pure chain-union targets (unless it would
    generate an absurd number of interval nodes) and the generic
    backtracker otherwise; ``engine`` forces the choice for cross-checks.
    """

    def __init__(
        self,
        masks: tuple[int, ...],
        poset: ComparabilityMatrix,
        symmetry_break: bool = True,
        engine: str = "auto",
    ):
        if engine not in ("auto", "chains", "generic"):
            raise ValueError(f"unknown engine {engine!r}")
        self.masks = masks
        self.poset = poset
        self.symmetry_break = symmetry_break
        self.engine_name = engine
        self._chain: _ChainEngine | None = None
        self._index: _FamilyIndex | None = None
        self._plan: _SearchPlan | None = None
        if engine == "chains" and poset.chains is None:
            raise ValueError("chain engine needs a pure chain-union target")
        use_chains = engine in ("auto", "chains") and poset.chains is not None
        if use_chains:
            chain = _ChainEngine(masks, poset, symmetry_break)
            if engine == "chains" or chain.node_count <= _ChainEngine.MAX_NODES:
                self._chain = chain
        if self._chain is None:
            self._index = _FamilyIndex(masks)
            self._plan = _SearchPlan(poset, symmetry_break)

    def _to_embedding(self, by_len: dict[int, list[list[int]]]) -> Embedding:
        assignment = [0] * self.poset.size
        for chain in self.poset.chains:
            path = by_len[len(chain)].pop()
            for element, mask in zip(chain, path):
                assignment[element] = mask
        return Embedding(self.poset, tuple(assignment))

    def find(self, node_budget: int = DEFAULT_NODE_BUDGET) -> Embedding | None:
        """Some induced copy in the family, or None."""
        budget = [node_budget]
        if self._chain is not None:
            by_len = self._chain.find(budget)
            return None if by_len is None else self._to_embedding(by_len)
        res = _run(self._index, self._plan, budget)
        if res is None:
            return None
        return Embedding(self.poset, tuple(self.masks[i] for i in res))

    def find_containing(
        self, g: int, node_budget: int = DEFAULT_NODE_BUDGET
    ) -> Embedding | None:
        """Some induced copy in family + {g} that uses g; g not a member."""
        if self._chain is not None:
            by_len = self._chain.find_containing(g, [node_budget])
            return None if by_len is None else self._to_embedding(by_len)
        ext = self._index.extended(g)
        budget = [node_budget]
        res = _search(ext, self._plan, budget, require_idx=len(self.masks))
        if res is None:
            return None
        ext_masks = self.masks + (g,)
        return Embedding(self.poset, tuple(ext_masks[i] for i in res))

    def with_member(self, g: int) -> "CopySearch":
        """Searcher for the family extended by g."""
        return CopySearch(
            self.masks + (g,), self.poset, self.symmetry_break, self.engine_name
        )


def find_induced_copy(
    family: Family,
    poset: ComparabilityMatrix,
    *,
    require: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    order_seed: int = 0,
    symmetry_break: bool = True,
    engine: str = "auto",
) -> Embedding | None:
    """Search the family for an induced copy of the target poset.

    Returns an Embedding or None; deterministic for fixed inputs.  With
    ``require`` set to a member mask, only copies whose image contains that
    member are reported.  ``order_seed`` > 0 shuffles the candidate order
    (seed 0 keeps the canonical order); this samples different copies but
    never changes whether one exists.  Raises BudgetExceededError when the
    node budget runs out before the search is decided.
    """
    masks = family.sets
    if order_seed:
        shuffled = list(masks)
        random.Random(order_seed).shuffle(shuffled)
        masks = tuple(shuffled)
    if require is not None:
        if require not in masks:
            raise ValueError("required mask is not a member of the family")
        rest = tuple(m for m in masks if m != require)
        searcher = CopySearch(rest, poset, symmetry_break, engine)
        return searcher.find_containing(require, node_budget)
    searcher = CopySearch(masks, poset, symmetry_break, engine)
    return searcher.find(node_budget)


def verify_embedding(
    family: Family, poset: ComparabilityMatrix, embedding: Embedding
) -> bool:
    """True iff the assignment is injective, inside F, and induced w.r.t. P."""
    images = embedding.assignment
    if len(images) != poset.size:
        raise ValueError(
            f"assignment length {len(images)} does not match poset size {poset.size}"
        )
    members = set(family.sets)
    if any(img not in members for img in images):
        return False
    if len(set(images)) != len(images):
        return False
    for i in range(poset.size):
        for j in range(poset.size):
            if i == j:
                continue
            if poset.leq(i, j) != is_subset(images[i], images[j]):
                return False
    return True


def witness_matrix(embedding: Embedding) -> WitnessMatrix:
    """Extract all pairwise incomparability witnesses from a chain-union copy.

    Entry (i, j) is the smallest element of B_i \\ T_j.  Raises ValueError
    if the target is not a pure chain union, or with a diagnostic if some
    B_i lies inside T_j (the embedding was not induced).
    """
    chains = embedding.poset.chains
    if chains is None:
        raise ValueError("witnesses are defined only for chain-union targets")
    bottoms = [embedding.assignment[c[0]] for c in chains]
    tops = [embedding.assignment[c[-1]] for c in chains]
    m = len(chains)
    entries = []
    for i in range(m):
        row: list[int | None] = []
        for j in range(m):
            if i == j:
                row.append(None)
                continue
            diff = bottoms[i] & ~tops[j]
            if diff == 0:
                raise ValueError(
                    f"chain {i} bottom is contained in chain {j} top: "
                    "no witness exists, embedding is not induced"
                )
            row.append((diff & -diff).bit_length())
        entries.append(tuple(row))
    return WitnessMatrix(m, tuple(entries))


def embedding_to_json(embedding: Embedding) -> dict:
    """Embedding as ``{"poset": spec, "images": [[elements], ...]}``."""
    if embedding.poset.spec is None:
        raise ValueError("embedding's poset carries no spec to name it by")
    return {
        "poset": render_poset_spec(embedding.poset.spec),
        "images": [elements_of(m) for m in embedding.assignment],
    }

"""Exhaustive decomposition searches over subsets of F_p.

Product and sum factorization share one additive engine: products are moved to
exponent space through a discrete-log table, where scaling by a fixed element
becomes a cyclic shift of the membership mask, exactly as translation does for
sumsets.  Representation searches (A/A = T, A-A = T) are clique enumerations
on a compatibility graph, and the difference-clique maximum is a plain exact
branch-and-bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import MissingZeroError, ZeroInTargetError
from .field import FieldContext, MultSubgroup
from .sets import ElementSet, SetOp, compose_sets


class DecompKind(Enum):
    PRODUCT = "product"
    SUM = "sum"
    RATIO_REP = "ratio-rep"
    DIFF_REP = "diff-rep"


_PAIR_OPS = {DecompKind.PRODUCT: SetOp.PRODUCT, DecompKind.SUM: SetOp.SUM}
_REP_OPS = {DecompKind.RATIO_REP: SetOp.RATIO, DecompKind.DIFF_REP: SetOp.DIFFERENCE}


@dataclass(frozen=True)
class DecompWitness:
    """A verified (A, B) factorization or a single representing set A."""

    p: int
    kind: DecompKind
    a: tuple[int, ...]
    b: tuple[int, ...] | None = None
    canonical: bool = True

    def verify(self, target: ElementSet) -> bool:
        """Recompute the composition from scratch and compare with the target."""
        first = ElementSet.from_elements(self.p, self.a)
        if self.kind in _PAIR_OPS:
            second = ElementSet.from_elements(self.p, self.b or ())
            return compose_sets(first, second, _PAIR_OPS[self.kind]) == target
        return compose_sets(first, first, _REP_OPS[self.kind]) == target


@dataclass(frozen=True)
class SearchReport:
    p: int
    kind: DecompKind
    target: tuple[int, ...]
    witnesses: tuple[DecompWitness, ...]
    exhaustive: bool
    nodes: int
    elapsed_ms: float


def _rotate(mask: int, shift: int, modulus: int, full: int) -> int:
    # cyclic left shift: bit i moves to bit (i + shift) mod modulus
    if shift == 0:
        return mask
    return ((mask << shift) | (mask >> (modulus - shift))) & full


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def canonical_product_pair(
    ctx: FieldContext, a_elems: Iterable[int], b_elems: Iterable[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Scaling-normal form of a product pair: 1 in B, lexicographically least.

    Every solution (A, B) is equivalent to (cA, c^-1 B) for nonzero c; choosing
    c in B puts 1 into the rescaled B, and the least resulting (A, B) tuple
    pair is the canonical representative.
    """
    p = ctx.p
    a = tuple(x % p for x in a_elems)
    b = tuple(x % p for x in b_elems)
    best = None
    for c in b:
        ci = ctx.inv_table[c]
        pair = (
            tuple(sorted(x * c % p for x in a)),
            tuple(sorted(x * ci % p for x in b)),
        )
        if best is None or pair < best:
            best = pair
    if best is None:
        raise ValueError("cannot normalize an empty factor")
    return best


def canonical_product_witness(
    ctx: FieldContext, a_elems: Iterable[int], b_elems: Iterable[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Normal form of an unordered factorization {A, B}.

    Products commute, so (A, B) and (B, A) are the same factorization; the
    witness form is the lexicographically smaller of the two scaling-normal
    orderings.
    """
    a = tuple(a_elems)
    b = tuple(b_elems)
    return min(
        canonical_product_pair(ctx, a, b),
        canonical_product_pair(ctx, b, a),
    )


def _additive_engine(
    *,
    modulus: int,
    target: int,
    size: int,
    universe: Sequence[int],
    allowed: Sequence[int | None],
    seed: int | None,
    min_size: int,
    check_every: int = 4,
) -> tuple[list[tuple[int, tuple[int, ...]]], int]:
    """Enumerate every (maximal A, B) pair with A composed B = target.

    Works on membership masks over Z_modulus; ``allowed[s]`` is the mask of
    elements compatible with shift s, and the covered set of a pair is the
    union of cyclic shifts of the A mask.  B grows along ``universe`` order;
    at each node A is the intersection of the allowed masks of the chosen
    shifts, which is the unique maximal A for that B.
    """
    full = (1 << modulus) - 1
    results: list[tuple[int, tuple[int, ...]]] = []
    node_count = 0

    def union_shifts(a_mask: int, shifts: Sequence[int]) -> int:
        got = 0
        for s in shifts:
            got |= _rotate(a_mask, s, modulus, full)
        return got

    def recurse(a_mask: int, b_shifts: list[int], pool: Sequence[int], start: int, depth: int) -> None:
        nonlocal node_count
        node_count += 1
        na = a_mask.bit_count()
        nb = len(b_shifts)
        if nb >= min_size and na * nb >= size:
            if union_shifts(a_mask, b_shifts) == target:
                results.append((a_mask, tuple(b_shifts)))
        if nb >= size:
            # every element of B maps A into the target injectively, so
            # |B| > |target| can never cover
            return
        if depth % check_every == 0:
            # refresh the pool against the current A and prune subtrees whose
            # best-possible coverage already misses part of the target; each
            # candidate's contribution is capped by allowed[s] so the union
            # stays inside the target and equality means full coverage
            fresh = []
            potential = union_shifts(a_mask, b_shifts)
            for i in range(start, len(pool)):
                s = pool[i]
                trimmed = a_mask & allowed[s]
                if trimmed.bit_count() >= min_size:
                    fresh.append(s)
                    potential |= _rotate(trimmed, s, modulus, full)
            if potential != target:
                return
            pool, start = fresh, 0
        # between refreshes the stale pool length still upper-bounds the
        # number of usable extensions, so this cheap cut stays sound
        if na * (nb + len(pool) - start) < size:
            return
        for i in range(start, len(pool)):
            s = pool[i]
            cand = a_mask & allowed[s]
            if cand.bit_count() >= min_size:
                b_shifts.append(s)
                recurse(cand, b_shifts, pool, i + 1, depth + 1)
                b_shifts.pop()

    if seed is None:
        recurse(full, [], list(universe), 0, 1)
    else:
        recurse(allowed[seed], [seed], list(universe), 0, 1)
    return results, node_count


def _dlog_table(ctx: FieldContext) -> list[int]:
    p = ctx.p
    table = [0] * p
    x = 1
    for i in range(p - 1):
        table[x] = i
        x = x * ctx.primitive_root % p
    return table


def _product_search(
    ctx: FieldContext, target: ElementSet, min_size: int
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], int]:
    p = ctx.p
    m = p - 1
    dlog = _dlog_table(ctx)
    pow_table = [0] * m
    x = 1
    for e in range(m):
        pow_table[e] = x
        x = x * ctx.primitive_root % p
    full = (1 << m) - 1
    texp = 0
    for s in target:
        texp |= 1 << dlog[s]
    size = len(target)
    allowed: list[int | None] = [None] * m
    allowed[0] = texp  # seed b = 1
    universe = []
    for b in range(2, p):
        s = dlog[b]
        cand = _rotate(texp, (m - s) % m, m, full)
        # b can only join B alongside the seed if >= min_size elements work
        # for both, i.e. |target & b^-1 target| >= min_size
        if (cand & texp).bit_count() >= min_size:
            allowed[s] = cand
            universe.append(s)
    raw, nodes = _additive_engine(
        modulus=m,
        target=texp,
        size=size,
        universe=universe,
        allowed=allowed,
        seed=0,
        min_size=min_size,
    )
    canon = set()
    for a_mask, b_shifts in raw:
        a_res = [pow_table[i] for i in _mask_to_tuple(a_mask)]
        b_res = [pow_table[s] for s in b_shifts]
        canon.add(canonical_product_witness(ctx, a_res, b_res))
    return sorted(canon), nodes


def _sum_search(
    ctx: FieldContext, target: ElementSet, min_size: int
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], int]:
    p = ctx.p
    full = (1 << p) - 1
    tmask = target.mask
    size = len(target)
    allowed = [_rotate(tmask, (p - b) % p, p, full) for b in range(p)]
    raw, nodes = _additive_engine(
        modulus=p,
        target=tmask,
        size=size,
        universe=list(range(p)),
        allowed=allowed,
        seed=None,
        min_size=min_size,
    )
    canon = set()
    for a_mask, b_list in raw:
        a = _mask_to_tuple(a_mask)
        b = tuple(sorted(b_list))
        # sumsets have no scaling symmetry; break the A/B swap symmetry only
        canon.add(tuple(sorted((a, b))))
    return sorted(canon), nodes


def find_exact_factorizations(
    ctx: FieldContext, target: ElementSet, kind: DecompKind, min_size: int = 2
) -> SearchReport:
    """Complete canonical list of (A, B) with A op B = target and |A|,|B| >= min_size."""
    start = time.perf_counter()
    size = len(target)
    if size == 0:
        raise ValueError("factorization search needs a nonempty target")
    if kind is DecompKind.PRODUCT:
        if 0 in target:
            raise ZeroInTargetError("product factorization target must avoid 0")
        pairs, nodes = _product_search(ctx, target, min_size)
    elif kind is DecompKind.SUM:
        pairs, nodes = _sum_search(ctx, target, min_size)
    else:
        raise ValueError(f"unsupported factorization kind: {kind!r}")
    witnesses = tuple(DecompWitness(ctx.p, kind, a, b) for a, b in pairs)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchReport(
        p=ctx.p,
        kind=kind,
        target=target.elements(),
        witnesses=witnesses,
        exhaustive=True,
        nodes=nodes,
        elapsed_ms=elapsed,
    )


def factorization_oracle(
    ctx: FieldContext, target: ElementSet, kind: DecompKind, min_size: int = 2
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Naive reference enumeration of the same canonical witnesses.

    Flat subset enumeration with direct arithmetic and no search pruning
    beyond the definition itself; intended for p <= 23 (PRODUCT) and small p
    (SUM) cross-checks of the recursive engine.
    """
    p = ctx.p
    size = len(target)
    if size == 0:
        raise ValueError("factorization oracle needs a nonempty target")
    tset = set(target)
    found = set()
    if kind is DecompKind.PRODUCT:
        if 0 in target:
            raise ZeroInTargetError("product factorization target must avoid 0")
        smask = target.mask
        inv_masks = {}
        for b in range(2, p):
            binv = ctx.inv_table[b]
            m = 0
            for s in target:
                m |= 1 << (s * binv % p)
            inv_masks[b] = m
        universe = [b for b in range(2, p) if (inv_masks[b] & smask).bit_count() >= min_size]
        top = min(size - 1, len(universe))
        for k in range(min_size - 1, top + 1):
            for combo in combinations(universe, k):
                amask = smask
                for b in combo:
                    amask &= inv_masks[b]
                    if amask.bit_count() < min_size:
                        break
                else:
                    a_elems = _mask_to_tuple(amask)
                    b_elems = (1,) + combo
                    covered = {a * b % p for b in b_elems for a in a_elems}
                    if covered == tset:
                        found.add(canonical_product_witness(ctx, a_elems, b_elems))
    elif kind is DecompKind.SUM:
        full = (1 << p) - 1
        shifted = [_rotate(target.mask, (p - b) % p, p, full) for b in range(p)]
        for k in range(min_size, min(size, p) + 1):
            for combo in combinations(range(p), k):
                amask = full
                for b in combo:
                    amask &= shifted[b]
                    if amask.bit_count() < min_size:
                        break
                else:
                    a_elems = _mask_to_tuple(amask)
                    covered = {(a + b) % p for b in combo for a in a_elems}
                    if covered == tset:
                        found.add(tuple(sorted((a_elems, combo))))
    else:
        raise ValueError(f"unsupported factorization kind: {kind!r}")
    return sorted(found)


def _maximal_cliques(vertices: Sequence[int], adj: dict[int, int]) -> tuple[list[int], int]:
    """All maximal cliques (as masks) via Bron-Kerbosch with pivoting."""
    results: list[int] = []
    node_count = 0
    full = 0
    for v in vertices:
        full |= 1 << v

    def bk(r_mask: int, p_mask: int, x_mask: int) -> None:
        nonlocal node_count
        node_count += 1
        if p_mask == 0 and x_mask == 0:
            results.append(r_mask)
            return
        cand = p_mask | x_mask
        best_u = -1
        best_cnt = -1
        m = cand
        while m:
            low = m & -m
            u = low.bit_length() - 1
            cnt = (p_mask & adj[u]).bit_count()
            if cnt > best_cnt:
                best_cnt, best_u = cnt, u
            m ^= low
        ext = p_mask & ~adj[best_u]
        while ext:
            low = ext & -ext
            v = low.bit_length() - 1
            bk(r_mask | low, p_mask & adj[v], x_mask & adj[v])
            p_mask ^= low
            x_mask |= low
            ext ^= low

    if full:
        bk(0, full, 0)
    return results, node_count


def find_ratio_representations(ctx: FieldContext, target: ElementSet) -> SearchReport:
    """All maximal A (1 in A) with A/A = target; complete via clique enumeration."""
    start = time.perf_counter()
    p = ctx.p
    if 0 in target:
        raise ZeroInTargetError("ratio representation target must avoid 0")
    witnesses: list[tuple[int, ...]] = []
    nodes = 0
    if 1 in target:
        verts = [x for x in target if ctx.inv_table[x] in target]
        adj: dict[int, int] = {}
        for x in verts:
            xi = ctx.inv_table[x]
            m = 0
            for y in verts:
                if y != x and (x * ctx.inv_table[y] % p) in target and (y * xi % p) in target:
                    m |= 1 << y
            adj[x] = m
        cliques, nodes = _maximal_cliques(verts, adj)
        tmask = target.mask
        for cm in cliques:
            elems = _mask_to_tuple(cm)
            got = 0
            for y in elems:
                yi = ctx.inv_table[y]
                for x in elems:
                    got |= 1 << (x * yi % p)
            if got == tmask:
                witnesses.append(elems)
    witnesses.sort()
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchReport(
        p=p,
        kind=DecompKind.RATIO_REP,
        target=target.elements(),
        witnesses=tuple(DecompWitness(p, DecompKind.RATIO_REP, w) for w in witnesses),
        exhaustive=True,
        nodes=nodes,
        elapsed_ms=elapsed,
    )


def find_difference_representations(ctx: FieldContext, target: ElementSet) -> SearchReport:
    """All maximal A (0 in A) with A-A = target; complete via clique enumeration."""
    start = time.perf_counter()
    p = ctx.p
    if 0 not in target:
        raise MissingZeroError("difference representation target must contain 0")
    verts = [x for x in target if (p - x) % p in target]
    adj: dict[int, int] = {}
    for x in verts:
        m = 0
        for y in verts:
            if y != x and ((x - y) % p) in target and ((y - x) % p) in target:
                m |= 1 << y
        adj[x] = m
    cliques, nodes = _maximal_cliques(verts, adj)
    tmask = target.mask
    witnesses: list[tuple[int, ...]] = []
    for cm in cliques:
        elems = _mask_to_tuple(cm)
        got = 0
        for y in elems:
            for x in elems:
                got |= 1 << ((x - y) % p)
        if got == tmask:
            witnesses.append(elems)
    witnesses.sort()
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchReport(
        p=p,
        kind=DecompKind.DIFF_REP,
        target=target.elements(),
        witnesses=tuple(DecompWitness(p, DecompKind.DIFF_REP, w) for w in witnesses),
        exhaustive=True,
        nodes=nodes,
        elapsed_ms=elapsed,
    )


def _max_clique_size(vertices: Sequence[int], adj: dict[int, int]) -> int:
    """Exact maximum clique size by branch-and-bound with greedy colouring."""
    best = 0

    def expand(r_size: int, cand: list[int]) -> None:
        nonlocal best
        if not cand:
            if r_size > best:
                best = r_size
            return
        colors: dict[int, int] = {}
        classes: list[int] = []
        for v in cand:
            for ci in range(len(classes)):
                if not (classes[ci] & adj[v]):
                    classes[ci] |= 1 << v
                    colors[v] = ci + 1
                    break
            else:
                classes.append(1 << v)
                colors[v] = len(classes)
        ordered = sorted(cand, key=colors.__getitem__)
        for i in range(len(ordered) - 1, -1, -1):
            v = ordered[i]
            if r_size + colors[v] <= best:
                return
            expand(r_size + 1, [w for w in ordered[:i] if (adj[v] >> w) & 1])

    expand(0, list(vertices))
    return best


def max_difference_clique(ctx: FieldContext, subgroup: MultSubgroup) -> int:
    """Largest |A| with A - A inside G union {0} (ordered differences)."""
    p = ctx.p
    g = subgroup.elements
    if (p - 1) not in g:
        # -1 outside G: x and -x can never both be differences, so |A| = 1
        return 1
    t = g.with_element(0)
    verts = list(g)
    adj: dict[int, int] = {}
    for x in verts:
        m = 0
        for y in verts:
            if y != x and ((x - y) % p) in t:
                m |= 1 << y
        adj[x] = m
    # translate A to contain 0; the other elements form a clique inside G
    return 1 + _max_clique_size(verts, adj)

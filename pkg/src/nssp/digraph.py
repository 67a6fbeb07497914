"""Directed graphs with loops on vertices 1..n: constructors, structural
predicates, and brute-force canonicalization.

Vertices are 1-indexed everywhere.  Everything here is an immutable value;
operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import FrozenSet, Iterable, Optional, Tuple

Arc = Tuple[int, int]

CANONICAL_MAX_N = 8


@dataclass(frozen=True)
class Digraph:
    """A directed graph with loops; ``arcs`` is a set of ordered pairs."""

    n: int
    arcs: FrozenSet[Arc] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for (u, v) in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) out of range for n={self.n}")

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arc_count(self) -> int:
        return len(self.arcs)

    def loops(self) -> FrozenSet[int]:
        return frozenset(v for (u, v) in self.arcs if u == v)

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(w for (u, w) in self.arcs if u == v)

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(u for (u, w) in self.arcs if w == v)

    def double_arcs(self) -> FrozenSet[Arc]:
        """Unordered double arcs, reported as (u, v) with u < v."""
        return frozenset(
            (u, v) for (u, v) in self.arcs if u < v and (v, u) in self.arcs
        )

    def has_double_arc(self) -> bool:
        return any(u != v and (v, u) in self.arcs for (u, v) in self.arcs)

    def sorted_arcs(self) -> Tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs


# -- family constructors ----------------------------------------------------


def make_double_path(n: int, loops: Iterable[int]) -> Digraph:
    """Path on [n] with both directions on every edge plus loops at ``loops``."""
    if n < 1:
        raise ValueError(f"double path needs n >= 1, got {n}")
    loop_set = _check_loops(n, loops)
    arcs = set()
    for i in range(1, n):
        arcs.add((i, i + 1))
        arcs.add((i + 1, i))
    arcs.update((v, v) for v in loop_set)
    return Digraph(n, frozenset(arcs))


def make_lollipop(p: int, k: int, loops: Iterable[int]) -> Digraph:
    """Double path on 1..p+1 glued to an all-double-arc clique on p+1..p+k."""
    if p < 1:
        raise ValueError(f"lollipop needs p >= 1, got {p}")
    if k < 1:
        raise ValueError(f"lollipop needs k >= 1, got {k}")
    n = p + k
    loop_set = _check_loops(n, loops)
    arcs = set()
    for i in range(1, p + 1):
        arcs.add((i, i + 1))
        arcs.add((i + 1, i))
    for i in range(p + 1, n + 1):
        for j in range(i + 1, n + 1):
            arcs.add((i, j))
            arcs.add((j, i))
    arcs.update((v, v) for v in loop_set)
    return Digraph(n, frozenset(arcs))


def make_cycle(n: int, loops: Iterable[int]) -> Digraph:
    """Directed cycle 1 -> 2 -> ... -> n -> 1 plus loops."""
    if n < 2:
        raise ValueError(f"directed cycle needs n >= 2, got {n}")
    loop_set = _check_loops(n, loops)
    arcs = {(i, i % n + 1) for i in range(1, n + 1)}
    arcs.update((v, v) for v in loop_set)
    return Digraph(n, frozenset(arcs))


def _check_loops(n: int, loops: Iterable[int]) -> FrozenSet[int]:
    loop_set = frozenset(loops)
    bad = [v for v in loop_set if not (1 <= v <= n)]
    if bad:
        raise ValueError(f"loop vertices {sorted(bad)} out of range for n={n}")
    return loop_set


# -- operations --------------------------------------------------------------


def complement(g: Digraph) -> Digraph:
    universe = {(u, v) for u in g.vertices for v in g.vertices}
    return Digraph(g.n, frozenset(universe - g.arcs))


def add_arcs(g: Digraph, extra: Iterable[Arc]) -> Digraph:
    extra = list(extra)
    for (u, v) in extra:
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            raise ValueError(f"arc ({u},{v}) out of range for n={g.n}")
    return Digraph(g.n, g.arcs | frozenset(extra))


def permute(g: Digraph, perm: dict[int, int]) -> Digraph:
    """Relabel vertices; ``perm`` must be a bijection of [n]."""
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        raise ValueError("perm is not a bijection of the vertex set")
    return Digraph(g.n, frozenset((perm[u], perm[v]) for (u, v) in g.arcs))


def reflection(n: int) -> dict[int, int]:
    return {i: n + 1 - i for i in range(1, n + 1)}


def induced_subgraph(g: Digraph, vertices: Iterable[int]) -> Tuple[Digraph, dict[int, int]]:
    """Induced subgraph relabeled onto 1..k; returns it with old->new map."""
    vs = sorted(set(vertices))
    if any(not (1 <= v <= g.n) for v in vs):
        raise ValueError("induced vertex out of range")
    relabel = {v: i + 1 for i, v in enumerate(vs)}
    arcs = frozenset(
        (relabel[u], relabel[v]) for (u, v) in g.arcs if u in relabel and v in relabel
    )
    return Digraph(len(vs), arcs), relabel


def strongly_connected_components(g: Digraph) -> list[FrozenSet[int]]:
    """SCCs in condensation topological order (arcs go earlier -> later)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0

    out = {v: sorted(g.out_neighbors(v)) for v in g.vertices}

    for root in g.vertices:
        if root in index:
            continue
        # iterative Tarjan
        work = [(root, iter(out[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(out[w])))
                    advanced = True
                    break
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))

    # topological order of the condensation, ties broken by smallest vertex
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    succ = [set() for _ in comps]
    indeg = [0] * len(comps)
    for (u, v) in g.arcs:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv and cv not in succ[cu]:
            succ[cu].add(cv)
            indeg[cv] += 1
    ready = sorted((i for i in range(len(comps)) if indeg[i] == 0),
                   key=lambda i: min(comps[i]))
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        freed = []
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                freed.append(j)
        ready = sorted(ready + freed, key=lambda i: min(comps[i]))
    return [comps[i] for i in order]


def is_strongly_connected(g: Digraph) -> bool:
    return len(strongly_connected_components(g)) == 1


def is_weakly_connected(g: Digraph) -> bool:
    if g.n == 0:
        return True
    adj = {v: set() for v in g.vertices}
    for (u, v) in g.arcs:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def underlying_is_tree(g: Digraph) -> bool:
    """True iff forgetting directions and loops leaves a tree on [n]."""
    edges = {frozenset((u, v)) for (u, v) in g.arcs if u != v}
    return len(edges) == g.n - 1 and is_weakly_connected(g)


def simple_cycle_lengths(g: Digraph) -> FrozenSet[int]:
    """Lengths k >= 2 of simple directed cycles; loops are not counted."""
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"cycle search limited to n <= {CANONICAL_MAX_N}")
    out = {v: sorted(w for w in g.out_neighbors(v) if w != v) for v in g.vertices}
    lengths: set[int] = set()

    def extend(start: int, v: int, visited: set[int], depth: int) -> None:
        for w in out[v]:
            if w == start and depth >= 2:
                lengths.add(depth)
            elif w > start and w not in visited:
                visited.add(w)
                extend(start, w, visited, depth + 1)
                visited.discard(w)

    for start in g.vertices:
        extend(start, start, {start}, 1)
    return frozenset(lengths)


def is_hessenberg_family(g: Digraph) -> bool:
    """Superdiagonal path, arcs confined below the superdiagonal, and a
    directed k-cycle for every k in 2..n."""
    path = {(i, i + 1) for i in range(1, g.n)}
    if not path <= g.arcs:
        return False
    if any(i < j - 1 for (i, j) in g.arcs):
        return False
    return simple_cycle_lengths(g) >= set(range(2, g.n + 1))


def as_double_path_loops(g: Digraph) -> Optional[FrozenSet[int]]:
    """If g is literally a double path on its labeling, return its loop set."""
    if g.n < 1:
        return None
    loops = g.loops()
    if g.arcs == make_double_path(g.n, loops).arcs:
        return loops
    return None


def as_lollipop(g: Digraph) -> Optional[Tuple[int, int, FrozenSet[int]]]:
    """If g is literally a lollipop on its labeling, return (p, k, loops)."""
    loops = g.loops()
    for p in range(1, g.n):
        k = g.n - p
        if k < 1:
            continue
        if g.arcs == make_lollipop(p, k, loops).arcs:
            return (p, k, loops)
    return None


# -- canonicalization --------------------------------------------------------


def encode(g: Digraph) -> int:
    """Row-major bit encoding: position (u,v) occupies bit n*n-1-((u-1)*n+(v-1))."""
    total = g.n * g.n
    code = 0
    for (u, v) in g.arcs:
        code |= 1 << (total - 1 - ((u - 1) * g.n + (v - 1)))
    return code


def decode(n: int, code: int) -> Digraph:
    total = n * n
    arcs = []
    for idx in range(total):
        if code & (1 << (total - 1 - idx)):
            arcs.append((idx // n + 1, idx % n + 1))
    return Digraph(n, frozenset(arcs))


def canonical_form(g: Digraph) -> int:
    """Minimum row-major encoding over all vertex permutations.

    Equal outputs iff the digraphs are isomorphic; brute force, n <= 8.
    """
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form limited to n <= {CANONICAL_MAX_N}")
    total = g.n * g.n
    arc_list = list(g.arcs)
    best = None
    for sigma in permutations(range(1, g.n + 1)):
        code = 0
        for (u, v) in arc_list:
            su, sv = sigma[u - 1], sigma[v - 1]
            code |= 1 << (total - 1 - ((su - 1) * g.n + (sv - 1)))
        if best is None or code < best:
            best = code
    return best if best is not None else 0


def canonical_digraph(g: Digraph) -> Digraph:
    return decode(g.n, canonical_form(g))


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)

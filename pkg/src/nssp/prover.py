"""Certificate-producing fixpoint engine for "every matrix with this pattern
has the property".

The engine grows a supergraph ``known`` of positions proven zero in X.  Two
sound rules drive it:

* R1: an equation whose residue (after dropping known-zero variables and
  cancelling identical opposite-sign coefficient entries) contains exactly
  one live variable whose coefficient is a nonzero multiple of a single
  pattern entry forces that variable to vanish.
* R2: an equation with exactly two live variables, both with single-entry
  coefficients, links them: each vanishes iff the other does.  When any
  member of a linked class is proven zero the whole class is zeroed.

Reaching the all-looped complete digraph proves the pattern requires the
property; stalling proves nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .digraph import Arc, Digraph
from .commutator import PatternSystem, Term, build_system

REACHED = "reached"
STALLED = "stalled"


@dataclass(frozen=True)
class CertStep:
    kind: str  # "R1" | "R2" | "CLASS0"
    eq: Optional[Arc] = None
    var: Optional[Arc] = None
    coeff: Optional[Arc] = None
    vars: Optional[Tuple[Arc, Arc]] = None
    coeffs: Optional[Tuple[Arc, Arc]] = None
    anchor: Optional[Arc] = None
    zeroed: Optional[Tuple[Arc, ...]] = None


@dataclass(frozen=True)
class Certificate:
    graph: Digraph
    steps: Tuple[CertStep, ...]
    verdict: str  # REACHED | STALLED
    budget_exhausted: bool = False

    def final_known(self) -> Digraph:
        known = set(self.graph.arcs)
        for s in self.steps:
            if s.kind == "R1":
                known.add(s.var)
            elif s.kind == "CLASS0":
                known.update(s.zeroed)
        return Digraph(self.graph.n, frozenset(known))


@dataclass
class DerivationState:
    base: Digraph
    system: PatternSystem
    known: set[Arc]
    parent: Dict[Arc, Arc] = field(default_factory=dict)

    def find(self, v: Arc) -> Arc:
        while self.parent.get(v, v) != v:
            self.parent[v] = self.parent.get(self.parent[v], self.parent[v])
            v = self.parent[v]
        return v

    def union(self, a: Arc, b: Arc) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # root by smallest position for determinism
            lo, hi = (ra, rb) if ra < rb else (rb, ra)
            self.parent[hi] = lo

    def class_members(self, v: Arc) -> list[Arc]:
        root = self.find(v)
        return sorted(
            w for w in self.system.variables
            if self.find(w) == root
        )


Residue = Dict[Arc, Dict[Arc, int]]  # variable -> {coefficient arc -> weight}


def _residue(terms: Tuple[Term, ...], known: set[Arc]) -> Residue:
    res: Residue = {}
    for t in terms:
        if t.x_pos in known:
            continue
        coeff = res.setdefault(t.x_pos, {})
        coeff[t.a_pos] = coeff.get(t.a_pos, 0) + t.sign
    for var in list(res):
        coeff = {a: w for a, w in res[var].items() if w != 0}
        if coeff:
            res[var] = coeff
        else:
            del res[var]
    return res


def _single_entry(coeff: Dict[Arc, int]) -> Optional[Arc]:
    """The coefficient arc when the residue is a nonzero multiple of one entry."""
    if len(coeff) == 1:
        return next(iter(coeff))
    return None


def default_max_steps(n: int) -> int:
    return 10 * n ** 4


def rule1_triples(g: Digraph, known: Digraph
                  ) -> List[Tuple[str, int, int, int, Arc]]:
    """All monomial-rule triples at the supergraph ``known``.

    Rule A (i,j,k): out-set of i meets the complement of known's out-set of j
    exactly in {k} while the mirrored in-set intersection is empty; concludes
    arc (j,k).  Rule B (i,j,m) is the mirror image and concludes (m,i).
    Sorted lexicographically.
    """
    if not g.arcs <= known.arcs or g.n != known.n:
        raise ValueError("known must be a supergraph of g on the same vertices")
    out_g = {v: g.out_neighbors(v) for v in g.vertices}
    in_g = {v: g.in_neighbors(v) for v in g.vertices}
    out_k = {v: known.out_neighbors(v) for v in g.vertices}
    in_k = {v: known.in_neighbors(v) for v in g.vertices}
    found = []
    for i in g.vertices:
        for j in g.vertices:
            fwd = {k for k in out_g[i] if k not in out_k[j]}
            bwd = {m for m in in_g[j] if m not in in_k[i]}
            if len(fwd) == 1 and not bwd:
                k = next(iter(fwd))
                found.append(("A", i, j, k, (j, k)))
            if not fwd and len(bwd) == 1:
                m = next(iter(bwd))
                found.append(("B", i, j, m, (m, i)))
    return sorted(found)


def close(g: Digraph, max_steps: Optional[int] = None) -> Certificate:
    """Run R1/R2 to fixpoint with a deterministic scan order."""
    if max_steps is None:
        max_steps = default_max_steps(g.n)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    system = build_system(g)
    state = DerivationState(g, system, set(g.arcs))
    steps: List[CertStep] = []
    exhausted = False

    def conclude(eq: Arc, var: Arc, coeff: Arc) -> None:
        steps.append(CertStep(kind="R1", eq=eq, var=var, coeff=coeff))
        others = [w for w in state.class_members(var)
                  if w != var and w not in state.known]
        state.known.add(var)
        if others:
            steps.append(CertStep(kind="CLASS0", anchor=var,
                                  zeroed=tuple(others)))
            state.known.update(others)

    while True:
        if len(steps) >= max_steps:
            exhausted = True
            break
        progressed = False
        # R1 sweep
        for (eq, terms) in system.equations:
            if len(steps) >= max_steps:
                break
            res = _residue(terms, state.known)
            if len(res) != 1:
                continue
            var, coeff = next(iter(res.items()))
            arc = _single_entry(coeff)
            if arc is not None:
                conclude(eq, var, arc)
                progressed = True
        # R2 sweep
        for (eq, terms) in system.equations:
            if len(steps) >= max_steps:
                break
            res = _residue(terms, state.known)
            if len(res) != 2:
                continue
            (v1, c1), (v2, c2) = sorted(res.items())
            a1, a2 = _single_entry(c1), _single_entry(c2)
            if a1 is None or a2 is None:
                continue
            if state.find(v1) != state.find(v2):
                state.union(v1, v2)
                steps.append(CertStep(kind="R2", eq=eq, vars=(v1, v2),
                                      coeffs=(a1, a2)))
                progressed = True
        if not progressed:
            break

    full = len(state.known) == g.n * g.n
    return Certificate(g, tuple(steps), REACHED if full else STALLED,
                       budget_exhausted=exhausted)


def replay_detail(cert: Certificate) -> Tuple[bool, Optional[int]]:
    """Re-derive every step from scratch; (ok, first failing step index)."""
    g = cert.graph
    system = build_system(g)
    state = DerivationState(g, system, set(g.arcs))
    eq_index = {eq: terms for (eq, terms) in system.equations}

    for i, s in enumerate(cert.steps):
        if s.kind == "R1":
            if s.eq not in eq_index or s.var is None or s.coeff is None:
                return False, i
            res = _residue(eq_index[s.eq], state.known)
            if len(res) != 1:
                return False, i
            var, coeff = next(iter(res.items()))
            if var != s.var or _single_entry(coeff) != s.coeff:
                return False, i
            state.known.add(var)
        elif s.kind == "CLASS0":
            if s.anchor is None or not s.zeroed:
                return False, i
            if s.anchor not in state.known:
                return False, i
            root = state.find(s.anchor)
            live = [w for w in state.class_members(s.anchor)
                    if w not in state.known]
            if state.find(s.zeroed[0]) != root or list(s.zeroed) != live:
                return False, i
            state.known.update(s.zeroed)
        elif s.kind == "R2":
            if s.eq not in eq_index or s.vars is None or s.coeffs is None:
                return False, i
            res = _residue(eq_index[s.eq], state.known)
            if len(res) != 2:
                return False, i
            got = sorted(res.items())
            vars_got = tuple(v for v, _ in got)
            coeffs_got = tuple(_single_entry(c) for _, c in got)
            if vars_got != s.vars or coeffs_got != s.coeffs:
                return False, i
            if None in coeffs_got:
                return False, i
            if state.find(s.vars[0]) == state.find(s.vars[1]):
                return False, i
            state.union(*s.vars)
        else:
            return False, i

    full = len(state.known) == g.n * g.n
    claimed_full = cert.verdict == REACHED
    if full != claimed_full:
        return False, len(cert.steps)
    return True, None


def replay(cert: Certificate) -> bool:
    ok, _ = replay_detail(cert)
    return ok

"""Decision pipeline: structural rules, prover certificates, witnesses, and
subpattern inference combined into a verdict with re-verifiable evidence.

Verdict semantics: ``requires`` (every matrix with the pattern's support has
the property), ``allows_not_requires`` (some do, some do not),
``not_allow`` (none do), ``allows_require_open`` (a witness exists but the
require side is unresolved within budget), ``unknown`` otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from .digraph import (
    Digraph,
    as_double_path_loops,
    as_lollipop,
    induced_subgraph,
    is_hessenberg_family,
    is_strongly_connected,
    make_double_path,
    permute,
    reflection,
    strongly_connected_components,
    underlying_is_tree,
)
from .exact import RatMatrix, matsub
from .commutator import (
    SYMBOLIC_MAX_N,
    SYMBOLIC_MAX_VARS,
    adjacency_matrix,
    find_violation,
    generic_rank_symbolic,
    has_nssp,
)
from .prover import Certificate, REACHED, close, default_max_steps, replay
from .witnesses import (
    AllowWitness,
    WitnessPair,
    random_nssp_search,
    random_violation_search,
    verify_witness,
    w_bipartite_family,
    w_endpoint_loops_path,
    w_even_loops_path,
    w_middle_loop_path,
    w_no_double_arcs,
)
from . import fixtures

REQUIRES = "requires"
ALLOWS_NOT_REQUIRES = "allows_not_requires"
NOT_ALLOW = "not_allow"
ALLOWS_REQUIRE_OPEN = "allows_require_open"
UNKNOWN = "unknown"

RULE_NO_LOOPS = "rule:no-loops"
RULE_SINGLE_LOOP_NO_DOUBLE = "rule:single-loop-no-double-arc"
RULE_SPARSE_TREE = "rule:sparse-tree"
RULE_REDUCIBLE = "rule:reducible-component"
RULE_HESSENBERG = "rule:hessenberg-cycles"
RULE_LOLLIPOP = "rule:lollipop-initial-loops"
RULE_PATH_INITIAL = "rule:path-initial-loops"
RULE_PATH_MAJORITY = "rule:path-loop-majority"
RULE_PATH_SECOND_EVEN = "rule:path-second-loop-even"
RULE_PATH_ENDPOINTS = "rule:path-endpoint-loops"
RULE_PATH_ENDPOINTS_C = "rule:path-endpoint-loops-complement"
RULE_PATH_MIDDLE = "rule:path-middle-loop"
RULE_PATH_ALL_BUT_MIDDLE = "rule:path-all-but-middle"
RULE_PATH_EVEN_LOOPS = "rule:path-even-loops"
RULE_NOT_STRONG = "rule:not-strongly-connected"
RULE_NO_DOUBLE_ARCS = "rule:no-double-arcs"
RULE_HALF_LOOPED_CYCLE = "rule:half-looped-cycle-family"
RULE_SUPERPATTERN = "rule:superpattern"
RULE_RANK_DEFICIENT = "rule:generic-rank-deficient"
RULE_RANK_FULL = "rule:generic-rank-full"


@dataclass(frozen=True)
class Budget:
    prover_steps: Optional[int] = None  # None -> 10 * n**4
    violation_trials: int = 50
    allow_trials: int = 50
    symbolic: bool = True
    seed: int = 0

    def prover_budget(self, n: int) -> int:
        return self.prover_steps if self.prover_steps is not None \
            else default_max_steps(n)


@dataclass(frozen=True)
class Evidence:
    kind: str  # predicate | certificate | witness-pair | allow-witness | subpattern | generic-rank
    rule: str = ""
    detail: Tuple[Tuple[str, object], ...] = ()
    certificate: Optional[Certificate] = None
    pair: Optional[WitnessPair] = None
    allow: Optional[AllowWitness] = None
    subgraph: Optional[Digraph] = None
    sub_evidence: Tuple["Evidence", ...] = ()


@dataclass(frozen=True)
class ClassificationReport:
    graph: Digraph
    verdict: str
    evidence: Tuple[Evidence, ...]
    budget_used: Tuple[Tuple[str, object], ...] = ()


def _predicate(rule: str, **detail: object) -> Evidence:
    return Evidence(kind="predicate", rule=rule,
                    detail=tuple(sorted(detail.items())))


def _pair_evidence(pair: WitnessPair) -> Evidence:
    return Evidence(kind="witness-pair", rule=pair.source, pair=pair)


def _allow_evidence(w: AllowWitness) -> Evidence:
    return Evidence(kind="allow-witness", rule=w.source, allow=w)


# -- not-allow rules (Hadamard-forced failure for every matrix) ---------------


def not_allow_evidence(g: Digraph) -> Optional[Evidence]:
    """A structural proof that no matrix with this support has the property."""
    if not g.loops():
        return _predicate(RULE_NO_LOOPS)
    if g.n >= 2 and not g.has_double_arc() and len(g.loops()) == 1:
        return _predicate(RULE_SINGLE_LOOP_NO_DOUBLE,
                          loop=min(g.loops()))
    if g.n >= 1 and g.arc_count() <= 2 * g.n - 2 and underlying_is_tree(g):
        return _predicate(RULE_SPARSE_TREE)
    loops = as_double_path_loops(g)
    if loops is not None:
        ev = _double_path_not_allow(g.n, loops)
        if ev is not None:
            return ev
    return _reducible_not_allow(g)


def _double_path_not_allow(n: int, loops: frozenset) -> Optional[Evidence]:
    if n % 2 == 1 and loops and all(v % 2 == 0 for v in loops):
        return _predicate(RULE_PATH_EVEN_LOOPS, loops=tuple(sorted(loops)))
    return None


def _reducible_not_allow(g: Digraph) -> Optional[Evidence]:
    """Split off a neighborhood-closed part whose complement already fails."""
    comps = strongly_connected_components(g)
    if len(comps) < 2:
        return None
    if len(comps) <= 6:
        candidates = range(1, 2 ** len(comps) - 1)
        subsets = [
            frozenset().union(*(comps[i] for i in range(len(comps))
                                if mask & (1 << i)))
            for mask in candidates
        ]
    else:
        subsets = [comps[0], comps[-1],
                   frozenset().union(*comps[1:]),
                   frozenset().union(*comps[:-1])]
    seen = set()
    for part in subsets:
        if not part or len(part) == g.n or part in seen:
            continue
        seen.add(part)
        rest = frozenset(g.vertices) - part
        closed_out = all(v in rest for (u, v) in g.arcs if u in rest)
        closed_in = all(u in rest for (u, v) in g.arcs if v in rest)
        if not (closed_out or closed_in):
            continue
        sub, _ = induced_subgraph(g, part)
        ev = not_allow_evidence(sub)
        if ev is not None:
            side = "successors" if closed_out else "predecessors"
            return Evidence(
                kind="predicate", rule=RULE_REDUCIBLE,
                detail=(("closed", side), ("part", tuple(sorted(part)))),
                subgraph=sub, sub_evidence=(ev,),
            )
    return None


# -- requires rules ------------------------------------------------------------


def requires_predicates(g: Digraph) -> List[Evidence]:
    found = []
    if g.loops() and is_hessenberg_family(g):
        found.append(_predicate(RULE_HESSENBERG,
                                loops=tuple(sorted(g.loops()))))
    lolli = as_lollipop(g)
    if lolli is not None:
        p, k, loops = lolli
        if set(range(1, p + 3)) <= loops:
            found.append(_predicate(RULE_LOLLIPOP, p=p, k=k,
                                    loops=tuple(sorted(loops))))
    loops = as_double_path_loops(g)
    if loops is not None:
        found.extend(_double_path_requires(g.n, loops))
    return found


def _double_path_requires(n: int, loops: frozenset) -> List[Evidence]:
    found = []
    for cand, via in ((loops, False), (_reflect_loops(n, loops), True)):
        m = _initial_segment(cand)
        if cand == frozenset(range(1, len(cand) + 1)) and cand:
            found.append(_predicate(RULE_PATH_INITIAL, loops=tuple(sorted(cand)),
                                    via_reflection=via))
        elif 2 * m > n - 1 and m > 0:
            found.append(_predicate(RULE_PATH_MAJORITY, loops=tuple(sorted(cand)),
                                    via_reflection=via, prefix=m))
        if n % 2 == 0 and cand == frozenset({2}):
            found.append(_predicate(RULE_PATH_SECOND_EVEN, via_reflection=via))
        if via and cand == loops:
            break
    return found


def _initial_segment(loops: frozenset) -> int:
    m = 0
    while m + 1 in loops:
        m += 1
    return m


def _reflect_loops(n: int, loops: frozenset) -> frozenset:
    return frozenset(n + 1 - v for v in loops)


# -- does-not-require rules ------------------------------------------------------


def not_require_predicates(g: Digraph, collect_pairs: bool = True
                           ) -> List[Evidence]:
    found = []
    if not is_strongly_connected(g):
        found.append(_predicate(RULE_NOT_STRONG))
    if not g.has_double_arc():
        found.append(_predicate(RULE_NO_DOUBLE_ARCS))
        if collect_pairs:
            try:
                found.append(_pair_evidence(w_no_double_arcs(g)))
            except ValueError:
                pass
    try:
        pair = w_bipartite_family(g)
    except ValueError:
        pair = None
    if pair is not None:
        found.append(_predicate(RULE_HALF_LOOPED_CYCLE, m=g.n // 2))
        if collect_pairs:
            found.append(_pair_evidence(pair))
    loops = as_double_path_loops(g)
    if loops is not None:
        found.extend(_double_path_not_require(g.n, loops, collect_pairs))
    return found


def _double_path_not_require(n: int, loops: frozenset, collect_pairs: bool
                             ) -> List[Evidence]:
    found = []
    if n >= 3 and loops == frozenset({1, n}):
        found.append(_predicate(RULE_PATH_ENDPOINTS))
        if collect_pairs:
            found.append(_pair_evidence(w_endpoint_loops_path(n, False)))
    if n >= 3 and loops == frozenset(range(2, n)):
        found.append(_predicate(RULE_PATH_ENDPOINTS_C))
        if collect_pairs:
            found.append(_pair_evidence(w_endpoint_loops_path(n, True)))
    if n >= 3 and n % 2 == 1:
        mid = (n + 1) // 2
        if loops == frozenset({mid}):
            found.append(_predicate(RULE_PATH_MIDDLE))
            if collect_pairs:
                found.append(_pair_evidence(w_middle_loop_path(n)))
        if loops == frozenset(range(1, n + 1)) - {mid}:
            found.append(_predicate(RULE_PATH_ALL_BUT_MIDDLE))
            if collect_pairs:
                # shift the middle-loop pair: B = I - A commutes with
                # Y = -I - X, and both supports land where they must
                base = w_middle_loop_path(n)
                ident = RatMatrix.identity(n)
                b = matsub(ident, base.a)
                y = matsub(matsub(RatMatrix.zeros(n, n), ident), base.x)
                found.append(_pair_evidence(WitnessPair(
                    make_double_path(n, loops), b, y, exact=True,
                    source="all-but-middle-shift")))
        if loops and all(v % 2 == 0 for v in loops) and collect_pairs:
            g = make_double_path(n, loops)
            found.append(_pair_evidence(
                w_even_loops_path(n, loops, adjacency_matrix(g))))
    return found


# -- allow catalog and subpattern inference ---------------------------------------


def allows_via_subpattern(g: Digraph,
                          catalog: List[Tuple[Digraph, Evidence]]
                          ) -> Optional[Evidence]:
    """Superpattern inference: a same-vertex-set subpattern with verified
    allow evidence propagates 'allows' upward."""
    for (h, ev) in catalog:
        if h.n == g.n and h.arcs <= g.arcs and h.arcs != g.arcs:
            return Evidence(kind="subpattern", rule=RULE_SUPERPATTERN,
                            subgraph=h, sub_evidence=(ev,))
    return None


_BASE_CACHE: Dict[Tuple[int, frozenset], Optional[AllowWitness]] = {}


def _verified_allow(g: Digraph) -> Optional[AllowWitness]:
    key = (g.n, g.arcs)
    if key not in _BASE_CACHE:
        a = adjacency_matrix(g)
        _BASE_CACHE[key] = AllowWitness(g, a, source="adjacency") \
            if has_nssp(g, a) else None
    return _BASE_CACHE[key]


def double_path_allow_catalog(n: int) -> List[Tuple[Digraph, Evidence]]:
    """Known-allow double paths on [n]: initial/final loop segments (their
    adjacency matrices verify), the second-vertex loop for even n, and any
    bundled allow witnesses."""
    catalog: List[Tuple[Digraph, Evidence]] = []
    loop_sets: List[frozenset] = []
    for m in range(1, n + 1):
        loop_sets.append(frozenset(range(1, m + 1)))
        loop_sets.append(frozenset(range(n + 1 - m, n + 1)))
    if n % 2 == 0:
        loop_sets.append(frozenset({2}))
        loop_sets.append(frozenset({n - 1}))
    seen = set()
    for loops in loop_sets:
        if loops in seen:
            continue
        seen.add(loops)
        w = _verified_allow(make_double_path(n, loops))
        if w is not None:
            catalog.append((w.graph, _allow_evidence(w)))
    for w in fixtures.allow_catalog():
        if w.graph.n == n:
            catalog.append((w.graph, _allow_evidence(w)))
    return catalog


def fixture_pair_for(g: Digraph) -> Optional[WitnessPair]:
    """Bundled counterexample pair for g, reflecting a stored one if needed."""
    loops = as_double_path_loops(g)
    if loops is None:
        return None
    cat = fixtures.pair_catalog()
    direct = cat.get((g.n, loops))
    if direct is not None:
        return direct
    mirrored = cat.get((g.n, _reflect_loops(g.n, loops)))
    if mirrored is not None:
        return _reflect_pair(mirrored)
    return None


def _reflect_pair(pair: WitnessPair) -> WitnessPair:
    n = pair.graph.n
    perm = reflection(n)
    g = permute(pair.graph, perm)
    if pair.exact:
        a = _flip_matrix(pair.a)
        x = _flip_matrix(pair.x)
    else:
        a = tuple(tuple(reversed(row)) for row in reversed(pair.a))
        x = tuple(tuple(reversed(row)) for row in reversed(pair.x))
    return replace(pair, graph=g, a=a, x=x,
                   source=pair.source + "+reflected")


def _flip_matrix(m: RatMatrix) -> RatMatrix:
    return RatMatrix.from_rows(
        [list(reversed(row)) for row in reversed(m.data)])


# -- the pipeline ------------------------------------------------------------------


def classify(g: Digraph, budget: Optional[Budget] = None) -> ClassificationReport:
    budget = budget or Budget()
    used: Dict[str, object] = {}

    # 1. not-allow rules
    na = not_allow_evidence(g)
    if na is not None:
        return _report(g, NOT_ALLOW, [na], used)

    # 2. requires rules, 3. prover
    req = requires_predicates(g)
    cert = close(g, budget.prover_budget(g.n))
    used["prover_steps"] = len(cert.steps)
    if cert.verdict == REACHED:
        req.append(Evidence(kind="certificate", rule="prover-closure",
                            certificate=cert))
    if req:
        return _report(g, REQUIRES, req, used)

    # 4. does-not-require rules (with constructed pairs)
    not_req = not_require_predicates(g)

    # 5. witnesses and generic rank
    allows: List[Evidence] = []
    if not any(e.kind == "witness-pair" for e in not_req):
        pair = fixture_pair_for(g)
        if pair is None:
            x = find_violation(g, adjacency_matrix(g))
            if x is not None:
                pair = WitnessPair(g, adjacency_matrix(g), x, exact=True,
                                   source="adjacency-violation")
        if pair is None:
            used["violation_trials"] = budget.violation_trials
            pair = random_violation_search(g, budget.violation_trials,
                                           budget.seed)
        if pair is not None:
            not_req.append(_pair_evidence(pair))

    nvars = g.n * g.n - g.arc_count()
    if budget.symbolic and g.n <= SYMBOLIC_MAX_N and nvars <= SYMBOLIC_MAX_VARS:
        r = generic_rank_symbolic(g)
        used["symbolic_rank"] = r
        if r < nvars:
            return _report(g, NOT_ALLOW, [Evidence(
                kind="generic-rank", rule=RULE_RANK_DEFICIENT,
                detail=(("columns", nvars), ("rank", r)))], used)
        allows.append(Evidence(kind="generic-rank", rule=RULE_RANK_FULL,
                               detail=(("columns", nvars), ("rank", r))))

    used["allow_trials"] = budget.allow_trials
    w = random_nssp_search(g, budget.allow_trials, budget.seed)
    if w is not None:
        allows.append(_allow_evidence(w))

    # 6. subpattern inference
    if not any(e.kind in ("allow-witness", "subpattern") for e in allows):
        loops = as_double_path_loops(g)
        if loops is not None:
            sub = allows_via_subpattern(g, double_path_allow_catalog(g.n))
            if sub is not None:
                allows.append(sub)

    return _assemble(g, not_req, allows, used)


def classify_double_path(n: int, loops, budget: Optional[Budget] = None
                         ) -> ClassificationReport:
    loop_set = frozenset(loops)
    if any(not (1 <= v <= n) for v in loop_set):
        raise ValueError(f"loops {sorted(loop_set)} out of range for n={n}")
    budget = budget or Budget()
    g = make_double_path(n, loop_set)
    used: Dict[str, object] = {}

    na = not_allow_evidence(g)
    if na is not None:
        return _report(g, NOT_ALLOW, [na], used)

    req = _double_path_requires(n, loop_set)
    if req:
        cert = close(g, budget.prover_budget(n))
        used["prover_steps"] = len(cert.steps)
        if cert.verdict == REACHED:
            req.append(Evidence(kind="certificate", rule="prover-closure",
                                certificate=cert))
        return _report(g, REQUIRES, req, used)

    not_req = _double_path_not_require(n, loop_set, collect_pairs=True)
    pair = fixture_pair_for(g)
    if pair is not None and not any(e.kind == "witness-pair" for e in not_req):
        not_req.append(_pair_evidence(pair))

    allows: List[Evidence] = []
    sub = allows_via_subpattern(g, double_path_allow_catalog(n))
    if sub is not None:
        allows.append(sub)
    direct = _verified_allow(g)
    if direct is not None:
        allows.append(_allow_evidence(direct))

    if not_req and allows:
        return _assemble(g, not_req, allows, used)
    # fall back to the full pipeline for anything the rules left open
    return classify(g, budget)


def _assemble(g: Digraph, not_req: List[Evidence], allows: List[Evidence],
              used: Dict[str, object]) -> ClassificationReport:
    has_pair = any(e.kind == "witness-pair" for e in not_req)
    has_pred = any(e.kind == "predicate" for e in not_req)
    has_allow = any(e.kind in ("allow-witness", "subpattern") for e in allows)
    if has_allow and (has_pair or has_pred):
        return _report(g, ALLOWS_NOT_REQUIRES, not_req + allows, used)
    if has_allow:
        return _report(g, ALLOWS_REQUIRE_OPEN, allows, used)
    return _report(g, UNKNOWN, not_req + allows, used)


def _report(g: Digraph, verdict: str, evidence: List[Evidence],
            used: Dict[str, object]) -> ClassificationReport:
    return ClassificationReport(g, verdict, tuple(evidence),
                                tuple(sorted(used.items())))


# -- independent re-verification of reports -----------------------------------


def verify_report(report: ClassificationReport) -> Tuple[bool, str]:
    """Re-derive every evidence item from scratch; reports are self-certifying."""
    g = report.graph
    for ev in report.evidence:
        ok, why = _verify_evidence(g, ev)
        if not ok:
            return False, why
    kinds = {e.kind for e in report.evidence}
    rules = {e.rule for e in report.evidence}
    if report.verdict == REQUIRES:
        if not (kinds & {"certificate", "predicate"}):
            return False, "requires verdict without certificate or rule"
    elif report.verdict == ALLOWS_NOT_REQUIRES:
        if not kinds & {"allow-witness", "subpattern"}:
            return False, "allows side lacks a witness"
        if not any(e.kind == "witness-pair" or
                   (e.kind == "predicate" and e.rule in NOT_REQUIRE_RULES)
                   for e in report.evidence):
            return False, "not-require side lacks a pair or rule"
    elif report.verdict == NOT_ALLOW:
        if not any(e.rule in NOT_ALLOW_RULES or e.rule == RULE_RANK_DEFICIENT
                   for e in report.evidence):
            return False, "not-allow verdict lacks a rule or rank record"
        if kinds & {"allow-witness", "subpattern"}:
            return False, "contradictory evidence: not-allow with allow witness"
    return True, "ok"


NOT_ALLOW_RULES = frozenset({
    RULE_NO_LOOPS, RULE_SINGLE_LOOP_NO_DOUBLE, RULE_SPARSE_TREE,
    RULE_REDUCIBLE, RULE_PATH_EVEN_LOOPS,
})
NOT_REQUIRE_RULES = frozenset({
    RULE_NOT_STRONG, RULE_NO_DOUBLE_ARCS, RULE_HALF_LOOPED_CYCLE,
    RULE_PATH_ENDPOINTS, RULE_PATH_ENDPOINTS_C, RULE_PATH_MIDDLE,
    RULE_PATH_ALL_BUT_MIDDLE,
})
REQUIRE_RULES = frozenset({
    RULE_HESSENBERG, RULE_LOLLIPOP, RULE_PATH_INITIAL, RULE_PATH_MAJORITY,
    RULE_PATH_SECOND_EVEN,
})


def _verify_evidence(g: Digraph, ev: Evidence) -> Tuple[bool, str]:
    if ev.kind == "certificate":
        cert = ev.certificate
        if cert is None or cert.graph.arcs != g.arcs or cert.graph.n != g.n:
            return False, "certificate for a different pattern"
        if cert.verdict != REACHED:
            return False, "stalled certificate carries no claim"
        if not replay(cert):
            return False, "certificate failed replay"
        return True, "ok"
    if ev.kind == "witness-pair":
        if ev.pair is None or ev.pair.graph.arcs != g.arcs:
            return False, "pair missing or for a different pattern"
        if not verify_witness(ev.pair):
            return False, "witness pair failed verification"
        return True, "ok"
    if ev.kind == "allow-witness":
        if ev.allow is None or ev.allow.graph.arcs != g.arcs:
            return False, "allow witness missing or for a different pattern"
        if not verify_witness(ev.allow):
            return False, "allow witness failed verification"
        return True, "ok"
    if ev.kind == "subpattern":
        if ev.subgraph is None or ev.subgraph.n != g.n or \
                not ev.subgraph.arcs <= g.arcs:
            return False, "subpattern is not contained in the pattern"
        if len(ev.sub_evidence) != 1:
            return False, "subpattern inference needs inner evidence"
        return _verify_evidence(ev.subgraph, ev.sub_evidence[0])
    if ev.kind == "generic-rank":
        detail = dict(ev.detail)
        r = generic_rank_symbolic(g)
        if r != detail.get("rank"):
            return False, "generic rank record does not recompute"
        return True, "ok"
    if ev.kind == "predicate":
        return _verify_predicate(g, ev)
    return False, f"unknown evidence kind {ev.kind!r}"


def _verify_predicate(g: Digraph, ev: Evidence) -> Tuple[bool, str]:
    rule = ev.rule
    detail = dict(ev.detail)
    loops = as_double_path_loops(g)

    def path_rule(expect) -> Tuple[bool, str]:
        if loops is None:
            return False, f"{rule} cited off a double path"
        return (True, "ok") if expect else (False, f"{rule} conditions fail")

    if rule == RULE_NO_LOOPS:
        return (True, "ok") if not g.loops() else (False, "graph has loops")
    if rule == RULE_SINGLE_LOOP_NO_DOUBLE:
        ok = g.n >= 2 and not g.has_double_arc() and len(g.loops()) == 1
        return (True, "ok") if ok else (False, "rule conditions fail")
    if rule == RULE_SPARSE_TREE:
        ok = g.arc_count() <= 2 * g.n - 2 and underlying_is_tree(g)
        return (True, "ok") if ok else (False, "rule conditions fail")
    if rule == RULE_REDUCIBLE:
        part = frozenset(detail.get("part", ()))
        rest = frozenset(g.vertices) - part
        if not part or not rest:
            return False, "degenerate split"
        closed_out = all(v in rest for (u, v) in g.arcs if u in rest)
        closed_in = all(u in rest for (u, v) in g.arcs if v in rest)
        if not (closed_out or closed_in):
            return False, "cited part is not neighborhood-closed"
        sub, _ = induced_subgraph(g, part)
        if ev.subgraph is None or ev.subgraph.arcs != sub.arcs:
            return False, "cited component does not match"
        if len(ev.sub_evidence) != 1:
            return False, "missing inner evidence"
        return _verify_evidence(sub, ev.sub_evidence[0])
    if rule == RULE_HESSENBERG:
        ok = bool(g.loops()) and is_hessenberg_family(g)
        return (True, "ok") if ok else (False, "rule conditions fail")
    if rule == RULE_LOLLIPOP:
        lolli = as_lollipop(g)
        if lolli is None:
            return False, "not a lollipop"
        p, _, lp = lolli
        ok = set(range(1, p + 3)) <= lp
        return (True, "ok") if ok else (False, "initial loops missing")
    if rule == RULE_PATH_INITIAL:
        cited = frozenset(detail.get("loops", ()))
        ok = loops is not None and cited and \
            cited == frozenset(range(1, len(cited) + 1)) and \
            cited in (loops, _reflect_loops(g.n, loops))
        return path_rule(ok)
    if rule == RULE_PATH_MAJORITY:
        cited = frozenset(detail.get("loops", ()))
        m = _initial_segment(cited)
        ok = loops is not None and 2 * m > g.n - 1 and \
            cited in (loops, _reflect_loops(g.n, loops))
        return path_rule(ok)
    if rule == RULE_PATH_SECOND_EVEN:
        ok = loops is not None and g.n % 2 == 0 and \
            frozenset({2}) in (loops, _reflect_loops(g.n, loops))
        return path_rule(ok)
    if rule == RULE_PATH_ENDPOINTS:
        return path_rule(loops == frozenset({1, g.n}) and g.n >= 3)
    if rule == RULE_PATH_ENDPOINTS_C:
        return path_rule(loops == frozenset(range(2, g.n)) and g.n >= 3)
    if rule == RULE_PATH_MIDDLE:
        ok = g.n % 2 == 1 and loops == frozenset({(g.n + 1) // 2})
        return path_rule(ok)
    if rule == RULE_PATH_ALL_BUT_MIDDLE:
        ok = g.n % 2 == 1 and \
            loops == frozenset(range(1, g.n + 1)) - {(g.n + 1) // 2}
        return path_rule(ok)
    if rule == RULE_PATH_EVEN_LOOPS:
        ok = g.n % 2 == 1 and loops is not None and loops and \
            all(v % 2 == 0 for v in loops)
        return path_rule(bool(ok))
    if rule == RULE_NOT_STRONG:
        return (True, "ok") if not is_strongly_connected(g) \
            else (False, "graph is strongly connected")
    if rule == RULE_NO_DOUBLE_ARCS:
        return (True, "ok") if not g.has_double_arc() \
            else (False, "graph has a double arc")
    if rule == RULE_HALF_LOOPED_CYCLE:
        try:
            w_bipartite_family(g)
            return True, "ok"
        except ValueError as e:
            return False, str(e)
    return False, f"unknown rule {rule!r}"

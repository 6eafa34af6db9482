"""Exact solvers for vector domination on restricted graph classes.

All of these solve the partial-scope, open-neighbourhood problem (the
cograph solver also handles total scope).  Each returns a
:class:`~vecdom.feasibility.Solution` flagged optimal, and each certifies
its own answer with :func:`~vecdom.feasibility.is_feasible` before
returning.  ``brute_force_minimum`` is the reference oracle the others are
validated against.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import combinations
from typing import Sequence

from .approx import (
    greedy_multiple_domination,
    greedy_total_vector,
    greedy_vector_domination,
)
from .decomposition import (
    CotreeNode,
    build_modified_cotree,
    deep_recursion,
    is_cograph,
    is_threshold,
    threshold_elimination_order,
)
from .errors import (
    InfeasibleError,
    NotATreeError,
    NotCompleteError,
    TooLargeError,
    WrongVariantError,
)
from .feasibility import Solution, is_feasible
from .graph import Graph, induced_subgraph
from .variants import Instance, Neighborhood, Scope

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "brute_force_minimum",
    "solve_complete_vector",
    "solve_complete_total",
    "solve_tree_vector",
    "solve_cograph",
    "solve_threshold_vector",
    "threshold_minimum_size",
    "auto_solve",
]

DEFAULT_ORACLE_CAP = 20

# quadratic-time recognisers are only attempted below this size in auto_solve
_RECOGNITION_CAP = 4096


def _certified(inst: Instance, chosen: frozenset[int], method: str) -> Solution:
    ok = is_feasible(inst, chosen).feasible
    return Solution(
        vertices=chosen,
        status="feasible" if ok else "infeasible",
        quality="optimal",
        method=method,
    )


def brute_force_minimum(inst: Instance, cap: int = DEFAULT_ORACLE_CAP) -> Solution:
    """Exhaustive reference solver.

    Subsets are enumerated by increasing cardinality and, within one
    cardinality, in lexicographic order of the sorted vertex tuple; the
    first feasible subset is returned.  That fixes which optimal set comes
    back when several exist.

    Raises:
        TooLargeError: the graph exceeds the size cap.
        InfeasibleError: no subset works (possible only under total scope).
    """
    g = inst.graph
    n = g.n
    if n > cap:
        raise TooLargeError(f"{n} vertices exceed the exhaustive-search cap {cap}")
    demands = inst.demands
    total = inst.scope is Scope.TOTAL
    closed = inst.neighborhood is Neighborhood.CLOSED
    if total:
        for v in range(n):
            available = g.degree(v) + (1 if closed else 0)
            if demands[v] > available:
                raise InfeasibleError(
                    f"vertex {v} demands {demands[v]} of {available} neighbours"
                )
    masks = []
    for v in range(n):
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << u
        if closed:
            mask |= 1 << v
        masks.append(mask)
    checklist = sorted(
        (v for v in range(n) if demands[v] > 0), key=lambda v: -demands[v]
    )
    if not checklist:
        return _certified(inst, frozenset(), "oracle")
    if total:
        smallest = max(demands)
    else:
        # any feasible set of size s contains every vertex demanding more than s
        smallest = 0
        while sum(1 for v in checklist if demands[v] > smallest) > smallest:
            smallest += 1
    check = [(v, demands[v], masks[v]) for v in checklist]
    for size in range(smallest, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            for v, need, nbrs in check:
                if not total and (mask >> v) & 1:
                    continue
                if (nbrs & mask).bit_count() < need:
                    break
            else:
                return _certified(inst, frozenset(combo), "oracle")
    raise InfeasibleError("no vertex subset satisfies the instance")


def _require_complete(g: Graph) -> None:
    if not g.is_complete():
        raise NotCompleteError(f"graph with n={g.n}, m={g.m} is not complete")


def solve_complete_vector(g: Graph, demands: Sequence[int]) -> Solution:
    """Partial-scope solver for complete graphs.

    With demands sorted in descending order, the answer is the shortest
    prefix that is long enough to serve the next demand after it: everyone
    outside the prefix sees the whole prefix.  All-zero demands need
    nothing at all.
    """
    _require_complete(g)
    inst = Instance(g, Neighborhood.OPEN, Scope.PARTIAL, tuple(demands))
    n = g.n
    k = inst.demands
    if n == 0 or max(k) == 0:
        return _certified(inst, frozenset(), "complete-vector")
    # counting sort, descending demand, ascending id inside a bucket;
    # demands above n all sort before any reachable comparison so they
    # can share one bucket
    buckets: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(n):
        buckets[min(k[v], n)].append(v)
    order = [v for value in range(n, -1, -1) for v in buckets[value]]
    prefix = n
    for i in range(1, n + 1):
        next_demand = k[order[i]] if i < n else 0
        if i >= next_demand:
            prefix = i
            break
    return _certified(inst, frozenset(order[:prefix]), "complete-vector")


def solve_complete_total(g: Graph, demands: Sequence[int]) -> Solution:
    """Total-scope solver for complete graphs.

    Let K be the largest demand and M the set of vertices attaining it.
    K vertices chosen outside M serve everyone; if M is too large to allow
    that, any K+1 vertices do.  Smallest ids are preferred throughout.

    Raises:
        InfeasibleError: some demand exceeds n - 1.
    """
    _require_complete(g)
    inst = Instance(g, Neighborhood.OPEN, Scope.TOTAL, tuple(demands))
    n = g.n
    k = inst.demands
    top = max(k, default=0)
    if top == 0:
        return _certified(inst, frozenset(), "complete-total")
    if top > n - 1:
        raise InfeasibleError(f"demand {top} exceeds the {n - 1} available neighbours")
    below = [v for v in range(n) if k[v] < top]
    if n - len(below) <= n - top:
        chosen = frozenset(below[:top])
    else:
        chosen = frozenset(range(top + 1))
    return _certified(inst, chosen, "complete-total")


def solve_tree_vector(
    g: Graph, demands: Sequence[int], check_invariant: bool = False
) -> Solution:
    """Linear-time partial-scope solver for trees.

    Vertices demanding more than their degree can never be served from
    outside, so they are forced into the answer first and their
    neighbours' demands shrink accordingly; the remaining forest is swept
    leaves-to-root.  A vertex still short two or more units after its
    children are settled joins the set itself; a vertex short exactly one
    unit pulls in its parent.  Per-vertex counters of chosen children keep
    the sweep linear.

    ``check_invariant`` re-verifies, after every step, that each processed
    unchosen vertex already has enough chosen neighbours (for tests).

    Raises:
        NotATreeError: the graph is disconnected or has a cycle.
    """
    if not g.is_tree():
        raise NotATreeError(f"graph with n={g.n}, m={g.m} is not a tree")
    inst = Instance(g, Neighborhood.OPEN, Scope.PARTIAL, tuple(demands))
    n = g.n
    adj = g._adj
    k = list(inst.demands)
    forced = [v for v in range(n) if k[v] > len(adj[v])]
    in_forced = bytearray(n)
    for v in forced:
        in_forced[v] = 1
    if forced:
        for v in forced:
            for u in adj[v]:
                if k[u] > 0:
                    k[u] -= 1
    chosen_list = list(forced)
    in_s = bytearray(n)
    processed = bytearray(n)
    child_chosen = [0] * n
    parent = [0] * n
    visited = bytearray(n)
    for start in range(n):
        if in_forced[start] or visited[start]:
            continue
        order = [start]
        visited[start] = 1
        parent[start] = start
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for u in adj[v]:
                if not visited[u] and not in_forced[u]:
                    visited[u] = 1
                    parent[u] = v
                    order.append(u)
        root = start
        for idx in range(len(order) - 1, -1, -1):
            v = order[idx]
            if processed[v]:
                continue
            processed[v] = 1
            kv = k[v]
            if v == root:
                if child_chosen[v] < kv:
                    in_s[v] = 1
                    chosen_list.append(v)
            else:
                c = child_chosen[v]
                if c <= kv - 2:
                    in_s[v] = 1
                    chosen_list.append(v)
                    child_chosen[parent[v]] += 1
                elif c == kv - 1:
                    pv = parent[v]
                    if not in_s[pv]:
                        in_s[pv] = 1
                        chosen_list.append(pv)
                        if pv != root:
                            child_chosen[parent[pv]] += 1
                    processed[pv] = 1
            if check_invariant:
                _assert_sweep_invariant(adj, k, in_forced, processed, in_s)
    return _certified(inst, frozenset(chosen_list), "tree")


def _assert_sweep_invariant(
    adj: tuple[tuple[int, ...], ...],
    k: list[int],
    in_forced: bytearray,
    processed: bytearray,
    in_s: bytearray,
) -> None:
    # every processed, unchosen vertex must already be fully served
    for v in range(len(adj)):
        if in_forced[v] or not processed[v] or in_s[v]:
            continue
        have = sum(1 for u in adj[v] if in_s[u])
        assert have >= k[v], f"vertex {v} processed with {have} < {k[v]} chosen neighbours"


_INFEASIBLE = None  # table sentinel: the subproblem admits no set at all


def _table_size(entry: frozenset[int] | None) -> float:
    return float("inf") if entry is None else len(entry)


def solve_cograph(inst: Instance) -> Solution:
    """Optimal solver for graphs without induced four-vertex paths.

    Works bottom-up over the binarised cotree.  For every node H and every
    externally supplied discount r (neighbours of H promised from the
    outside), the table holds a minimum set for H with all demands lowered
    by r.  Leaves are immediate; union nodes take per-discount unions; a
    join node combines its two sides by guessing how many vertices each
    side will contribute to the other, padding a side up when the guess
    exceeds what it picked for itself.

    Partial scope forces vertices demanding more than their degree into
    the answer up front.  Total scope instead makes such a vertex, and any
    subproblem that cannot be served, an infeasible table entry that
    absorbs everything it joins.

    Raises:
        NotCographError: the input graph contains an induced P4.
        InfeasibleError: total scope and no set serves every vertex.
        WrongVariantError: closed neighbourhoods are not supported here.
    """
    if inst.neighborhood is not Neighborhood.OPEN:
        raise WrongVariantError("the cograph solver handles open neighbourhoods only")
    g = inst.graph
    n = g.n
    if n == 0:
        return _certified(inst, frozenset(), "cograph")
    total = inst.scope is Scope.TOTAL
    demands = inst.demands
    forced: list[int] = []
    if total:
        for v in range(n):
            if demands[v] > g.degree(v):
                raise InfeasibleError(
                    f"vertex {v} demands {demands[v]} of {g.degree(v)} neighbours"
                )
        work, work_k, lift = g, list(demands), list(range(n))
        tree = build_modified_cotree(work)
    else:
        forced = [v for v in range(n) if demands[v] > g.degree(v)]
        if forced:
            build_modified_cotree(g)  # certify the input graph itself
            forced_set = set(forced)
            keep = [v for v in range(n) if v not in forced_set]
            work, old_of_new = induced_subgraph(g, keep)
            lift = list(old_of_new)
            work_k = []
            for old in old_of_new:
                drop = sum(1 for u in g.neighbors(old) if u in forced_set)
                work_k.append(max(demands[old] - drop, 0))
            if work.n == 0:
                return _certified(inst, frozenset(forced), "cograph")
            tree = build_modified_cotree(work)
        else:
            work, work_k, lift = g, list(demands), list(range(n))
            tree = build_modified_cotree(work)
    delta = work.max_degree()

    def evaluate(node: CotreeNode) -> list[frozenset[int] | None]:
        if node.kind == "leaf":
            v = node.vertex
            kv = work_k[v]
            alone = _INFEASIBLE if total else frozenset((v,))
            return [frozenset() if kv <= r else alone for r in range(delta + 1)]
        if node.kind == "union":
            parts = [evaluate(child) for child in node.children]
            row: list[frozenset[int] | None] = []
            for r in range(delta + 1):
                entries = [part[r] for part in parts]
                if any(e is None for e in entries):
                    row.append(_INFEASIBLE)
                else:
                    row.append(frozenset().union(*entries))
            return row
        left_node, right_node = node.children
        left = evaluate(left_node)
        right = evaluate(right_node)
        n_left = len(left_node.vertices)
        n_right = len(right_node.vertices)
        row = []
        for r in range(delta + 1):
            best: tuple[int, int] | None = None
            best_value = float("inf")
            for i in range(n_right + 1):
                own = left[min(r + i, delta)]
                if own is None:
                    continue
                for j in range(n_left + 1):
                    other = right[min(r + j, delta)]
                    if other is None:
                        continue
                    value = max(len(own), j) + max(len(other), i)
                    if value < best_value:
                        best_value = value
                        best = (i, j)
            if best is None:
                row.append(_INFEASIBLE)
                continue
            i, j = best
            own = left[min(r + i, delta)]
            other = right[min(r + j, delta)]
            assert own is not None and other is not None
            pick = set(own)
            if len(pick) < j:
                pool = [v for v in left_node.vertices if v not in pick]
                pick.update(pool[: j - len(pick)])
            pick.update(other)
            if len(other) < i:
                pool = [v for v in right_node.vertices if v not in other]
                pick.update(pool[: i - len(other)])
            row.append(frozenset(pick))
        for r in range(delta):
            assert _table_size(row[r]) >= _table_size(row[r + 1])
        return row

    with deep_recursion(6 * work.n + 200):
        root_row = evaluate(tree)
    answer = root_row[0]
    if answer is None:
        raise InfeasibleError("no vertex subset satisfies the instance")
    chosen = frozenset(forced) | frozenset(lift[v] for v in answer)
    return _certified(inst, chosen, "cograph")


def _threshold_size_rows(
    count: int,
    position_demand: list[int],
    kinds: tuple[str, ...],
    later_dom: tuple[int, ...],
) -> list[list[int]]:
    """Minimum sizes per (position, discount), discount up to the p-value.

    Position i (0-based) covers the subgraph of the first i+1 ordered
    vertices; a discount j promises j chosen vertices arriving later, all
    adjacent (they are exactly the later dominating vertices, hence the
    p-value cap).  A dominating vertex either stays out, requiring its
    whole subgraph to hold enough chosen vertices, or goes in, raising the
    discount below it by one.
    """
    rows: list[list[int]] = []
    first = [1 if position_demand[0] > j else 0 for j in range(later_dom[0] + 1)]
    rows.append(first)
    for i in range(1, count):
        prev = rows[i - 1]
        ki = position_demand[i]
        pi = later_dom[i]
        if kinds[i] == "isolated":
            assert pi == later_dom[i - 1]
            rows.append([prev[j] + (1 if ki > j else 0) for j in range(pi + 1)])
        else:
            assert later_dom[i - 1] == pi + 1, "discount column missing below"
            row = []
            for j in range(pi + 1):
                need = ki - j
                stay = prev[j] if prev[j] >= need else need
                step = 1 + prev[j + 1]
                # staying out is only realisable when the i vertices below
                # can physically supply the need; on ties the sizes agree
                row.append(stay if need <= i and stay <= step else step)
            rows.append(row)
    return rows


def _threshold_forced_split(
    g: Graph, demands: Sequence[int]
) -> tuple[list[int], Graph, list[int], list[int]]:
    n = g.n
    forced = [v for v in range(n) if demands[v] > g.degree(v)]
    if not forced:
        return [], g, list(demands), list(range(n))
    forced_set = set(forced)
    keep = [v for v in range(n) if v not in forced_set]
    sub, old_of_new = induced_subgraph(g, keep)
    reduced = []
    for old in old_of_new:
        drop = sum(1 for u in g.neighbors(old) if u in forced_set)
        reduced.append(max(demands[old] - drop, 0))
    return forced, sub, reduced, list(old_of_new)


def solve_threshold_vector(g: Graph, demands: Sequence[int]) -> Solution:
    """Partial-scope solver for threshold graphs.

    Demands above the degree force their vertices into the answer, and the
    rest of the graph is solved along its elimination ordering with the
    size table from :func:`_threshold_size_rows`.  The chosen branch at
    every step is then replayed upwards to reconstruct one optimal set;
    when the stay-out branch needs more chosen vertices than the smaller
    side already has, the gap is padded with the smallest-id vertices
    available.

    Raises:
        NotThresholdError: the graph has no elimination ordering.
    """
    threshold_elimination_order(g)  # certify the input graph itself
    inst = Instance(g, Neighborhood.OPEN, Scope.PARTIAL, tuple(demands))
    forced, sub, reduced, lift = _threshold_forced_split(g, inst.demands)
    if sub.n == 0:
        return _certified(inst, frozenset(forced), "threshold")
    ordering = threshold_elimination_order(sub)
    order = ordering.order
    kinds = ordering.kinds
    later = ordering.later_dominating
    count = sub.n
    position_demand = [reduced[order[i]] for i in range(count)]
    rows = _threshold_size_rows(count, position_demand, kinds, later)
    # trace the optimal branch from the top, then replay it bottom-up
    steps: list[tuple[str, int, int]] = []
    j = 0
    for i in range(count - 1, 0, -1):
        ki = position_demand[i]
        if kinds[i] == "isolated":
            if ki > j:
                steps.append(("take", i, j))
        else:
            need = ki - j
            prev = rows[i - 1]
            stay = prev[j] if prev[j] >= need else need
            if need <= i and stay <= 1 + prev[j + 1]:
                steps.append(("pad", i, j))
            else:
                steps.append(("take", i, j))
                j += 1
    chosen_local: set[int] = set()
    if position_demand[0] > j:
        chosen_local.add(order[0])
    for kind, i, jj in reversed(steps):
        if kind == "take":
            chosen_local.add(order[i])
        else:
            need = position_demand[i] - jj - len(chosen_local)
            if need > 0:
                pool = sorted(set(order[:i]) - chosen_local)
                assert len(pool) >= need, "padding exceeded the available vertices"
                chosen_local.update(pool[:need])
    chosen = frozenset(forced) | frozenset(lift[v] for v in chosen_local)
    return _certified(inst, chosen, "threshold")


def threshold_minimum_size(g: Graph, demands: Sequence[int]) -> int:
    """Size-only fast path: the optimum value without reconstructing a set."""
    threshold_elimination_order(g)
    inst = Instance(g, Neighborhood.OPEN, Scope.PARTIAL, tuple(demands))
    forced, sub, reduced, _ = _threshold_forced_split(g, inst.demands)
    if sub.n == 0:
        return len(forced)
    ordering = threshold_elimination_order(sub)
    position_demand = [reduced[v] for v in ordering.order]
    rows = _threshold_size_rows(
        sub.n, position_demand, ordering.kinds, ordering.later_dominating
    )
    return len(forced) + rows[-1][0]


def auto_solve(inst: Instance, cap: int = DEFAULT_ORACLE_CAP) -> Solution:
    """Route an instance to the best applicable solver.

    Exact solvers are preferred whenever the graph class admits one for
    the instance's scope; otherwise the oracle runs when the graph fits
    under the cap, and the bounded greedy takes over beyond it.  Class
    recognition beyond completeness and treeness is quadratic, so it is
    skipped on very large graphs.  Partial-scope instances with closed
    neighbourhoods are solved through their open-neighbourhood equivalent:
    a vertex outside the set covers itself or not identically either way.
    """
    g = inst.graph
    n = g.n
    if n == 0:
        return _certified(inst, frozenset(), "empty-graph")
    if inst.neighborhood is Neighborhood.CLOSED:
        if inst.scope is Scope.PARTIAL:
            open_inst = replace(inst, neighborhood=Neighborhood.OPEN)
            inner = auto_solve(open_inst, cap)
            ok = is_feasible(inst, inner.vertices).feasible
            return replace(inner, status="feasible" if ok else "infeasible")
        if n <= cap:
            return brute_force_minimum(inst, cap)
        return greedy_multiple_domination(inst)
    partial = inst.scope is Scope.PARTIAL
    if g.is_complete():
        if partial:
            return solve_complete_vector(g, inst.demands)
        return solve_complete_total(g, inst.demands)
    if partial and g.is_tree():
        return solve_tree_vector(g, inst.demands)
    if n <= _RECOGNITION_CAP:
        if is_threshold(g):
            if partial:
                return solve_threshold_vector(g, inst.demands)
            return solve_cograph(inst)
        if is_cograph(g):
            return solve_cograph(inst)
    if n <= cap:
        return brute_force_minimum(inst, cap)
    if partial:
        return greedy_vector_domination(inst)
    return greedy_total_vector(inst)

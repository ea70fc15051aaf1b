"""Restless reachability for point temporal graphs with arbitrary positive delays.

With heterogeneous delays an arc scanned now may arrive far in the
future, so a single "latest arrival" per trace no longer suffices.  Each
(node, trace) pair instead keeps the ordered set of all arrival times;
extending over an arc departing at ``tau`` takes the predecessor query
"latest arrival at most ``tau``".  When a clean-up collapses two traces
to the same survivor, the dying entry's time set is merged into the
surviving one, copying only times not already present.
"""

from __future__ import annotations

import bisect
from bisect import bisect_left, bisect_right
from collections import Counter

from .model import (
    ModelMismatchError,
    NodeId,
    PointTemporalGraph,
    TemporalPath,
    sorted_insert,
)
from .solver_unit import (
    ReachResult,
    SolveStats,
    _group_by_time,
    _node_max_list,
    retrieve_path,
)
from .widths import ActivityBounds, activity_bounds


class TimeSet:
    """Ordered set of arrival times with predecessor query, insert,
    iteration, merge, and ordered split.

    Each stored time optionally carries an anchor trace (for path
    retrieval) and, in debug mode, a copy counter with the budget implied
    by the size of the trace it was first inserted under: every copy is
    triggered by that trace losing at least one node, so a time first
    stored under a trace of size b+1 can be copied at most b times.
    """

    __slots__ = ("times", "anchors", "copies", "budgets")

    def __init__(self, *, anchors: bool = False, debug: bool = False):
        self.times: list[int] = []
        self.anchors: list | None = [] if anchors else None
        self.copies: list[int] | None = [] if debug else None
        self.budgets: list[int] | None = [] if debug else None

    def __len__(self) -> int:
        return len(self.times)

    def insert(self, t: int, anchor=None, budget: int = 0):
        """Insert ``t`` if absent; return (stored anchor, inserted flag)."""
        i = bisect_left(self.times, t)
        if i < len(self.times) and self.times[i] == t:
            stored = self.anchors[i] if self.anchors is not None else None
            return stored, False
        self.times.insert(i, t)
        if self.anchors is not None:
            self.anchors.insert(i, anchor)
        if self.copies is not None:
            self.copies.insert(i, 0)
            self.budgets.insert(i, budget)
        return anchor, True

    def predecessor(self, tau: int):
        """Largest stored time at most ``tau`` with its anchor, or None."""
        i = bisect_right(self.times, tau)
        if i == 0:
            return None
        t = self.times[i - 1]
        anchor = self.anchors[i - 1] if self.anchors is not None else None
        return t, anchor

    def merge_from(self, other: "TimeSet", stats: SolveStats | None = None) -> None:
        """Copy every time of ``other`` absent here, keeping its anchor."""
        for i, t in enumerate(other.times):
            j = bisect_left(self.times, t)
            if j < len(self.times) and self.times[j] == t:
                continue
            self.times.insert(j, t)
            if self.anchors is not None:
                self.anchors.insert(j, other.anchors[i] if other.anchors is not None else None)
            if self.copies is not None:
                count = other.copies[i] + 1
                budget = other.budgets[i]
                assert count <= budget, (
                    f"time {t} copied {count} times, budget {budget}"
                )
                self.copies.insert(j, count)
                self.budgets.insert(j, budget)
            if stats is not None:
                stats.merge_copies += 1

    def drop_below(self, cutoff: int) -> None:
        """Ordered split: discard every stored time smaller than ``cutoff``."""
        i = bisect_left(self.times, cutoff)
        if i:
            del self.times[:i]
            if self.anchors is not None:
                del self.anchors[:i]
            if self.copies is not None:
                del self.copies[:i]
                del self.budgets[:i]


def cleanup_delay(
    table: dict[tuple[int, ...], TimeSet],
    tau: int,
    bounds,
    *,
    prune: bool = False,
    delta_max: int = 0,
    stats: SolveStats | None = None,
) -> dict[tuple[int, ...], TimeSet]:
    """Restrict one node's traces to the nodes active at ``tau``.

    Traces that collapse to an existing survivor have their time sets
    merged into it.  With ``prune``, times more than ``delta_max`` before
    ``tau`` are split off, and entries left empty are removed.
    """
    if isinstance(bounds, ActivityBounds):
        node_max = bounds.node_max
        lookup = lambda w: node_max.get(w, -1)
    else:
        lookup = bounds.__getitem__
    for trace, tset in list(table.items()):
        shrunk = tuple(w for w in trace if lookup(w) >= tau)
        if shrunk == trace:
            continue
        del table[trace]
        survivor = table.get(shrunk)
        if survivor is None:
            table[shrunk] = tset
        else:
            survivor.merge_from(tset, stats)
    if prune:
        cutoff = tau - delta_max
        for trace, tset in list(table.items()):
            tset.drop_below(cutoff)
            if not tset.times:
                del table[trace]
    return table


def solve_general(
    g: PointTemporalGraph,
    s: NodeId,
    delta_max: int,
    *,
    record_paths: bool = False,
    prune: bool = False,
    debug: bool = False,
) -> ReachResult:
    """Compute every node reachable from ``s`` by a restless temporal path,
    for arbitrary positive delays.

    Scans arcs by appearance time; the source's time set receives each
    appearance time so a path may start whenever convenient.  The per-node
    tables are cleaned after every scanned arc.  Options as in
    ``solve_unit``; retrieval uses ``retrieve_path_general``.
    """
    if not (0 <= s < g.n):
        raise ValueError(f"source {s} out of range for n={g.n}")
    if any(a.delta < 1 for a in g.arcs):
        raise ModelMismatchError(
            "solve_general requires positive delays; zero-delay graphs "
            "run under solve_unit with non_strict=True"
        )

    node_max = _node_max_list(g)
    groups = _group_by_time(g.arcs)

    n = g.n
    reachable = [False] * n
    reachable[s] = True
    L: list[dict[tuple[int, ...], TimeSet]] = [{} for _ in range(n)]
    arr: dict | None = {} if record_paths else None
    parent: dict | None = {} if record_paths else None
    stats = SolveStats()
    seed = (s,)

    if debug:
        bounds = activity_bounds(g)
        mins_sorted = sorted(bounds.node_min.values())
        maxs_sorted = sorted(bounds.node_max.values())
        in_degree = Counter(a.v for a in g.arcs)
        time_count = len(groups)

        def active_count(t):
            return bisect.bisect_right(mins_sorted, t) - bisect.bisect_left(maxs_sorted, t)

    sizes = [0] * n
    total = 0

    for tau, group in groups:
        seed_set = L[s].get(seed)
        if seed_set is None:
            seed_set = TimeSet(anchors=record_paths, debug=debug)
            L[s][seed] = seed_set
        seed_set.insert(tau, seed if record_paths else None, 0)
        total += len(L[s]) - sizes[s]
        sizes[s] = len(L[s])
        for a in group:
            u, v, delta = a.u, a.v, a.delta
            entries = L[u]
            if entries:
                arrival = tau + delta
                for trace, tset in list(entries.items()):
                    pred = tset.predecessor(tau)
                    if pred is None:
                        continue
                    sigma, sigma_anchor = pred
                    if tau - sigma > delta_max or v in trace:
                        continue
                    shrunk = tuple(w for w in trace if node_max[w] >= tau)
                    new_trace = sorted_insert(shrunk, v)
                    target = L[v].get(new_trace)
                    if target is None:
                        target = TimeSet(anchors=record_paths, debug=debug)
                        L[v][new_trace] = target
                    stored_anchor, inserted = target.insert(
                        arrival,
                        new_trace if record_paths else None,
                        len(new_trace) - 1,
                    )
                    stats.extensions += 1
                    if inserted:
                        stats.time_inserts += 1
                    reachable[v] = True
                    if record_paths:
                        key = (v, arrival, stored_anchor)
                        if key not in parent:
                            parent[key] = (u, sigma, sigma_anchor, a)
                        arr[v] = (arrival, stored_anchor)
            cleanup_delay(
                L[v], tau, node_max,
                prune=prune, delta_max=delta_max, stats=stats,
            )
            total += len(L[v]) - sizes[v]
            sizes[v] = len(L[v])
            if total > stats.peak_entries:
                stats.peak_entries = total
            if debug:
                assert len(L[v]) <= 1 << active_count(tau), (
                    f"table at node {v} has {len(L[v])} entries, "
                    f"more than 2^|F_{tau}|"
                )
                limit = in_degree[v] + (time_count if v == s else 0)
                for tset in L[v].values():
                    assert len(tset) <= limit, (
                        f"time set at node {v} has {len(tset)} times, "
                        f"more than its timed in-degree allows"
                    )

    return ReachResult(
        source=s,
        reachable=reachable,
        arr=arr,
        parent=parent,
        stats=stats,
        tables=None,
    )


def retrieve_path_general(
    result: ReachResult,
    g: PointTemporalGraph,
    s: NodeId,
    v: NodeId,
    delta_max: int,
) -> TemporalPath:
    """Reconstruct one restless path from a ``solve_general`` result; the
    record layout is shared with the unit-delay solver."""
    return retrieve_path(result, g, s, v, delta_max)

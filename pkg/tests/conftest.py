import pytest
from hypothesis import HealthCheck, settings, strategies as st

from restless_reach import point_graph
from restless_reach.widths import active_nodes_at, activity_bounds

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Four nodes s,u,v,t (ids 0..3), five timed arcs; a waiting bound of 2
# separates t-reachability from unreachability.
S, U, V, T = 0, 1, 2, 3


@pytest.fixture
def four_node_graph():
    return point_graph(4, [(S, U, 1, 1), (U, V, 4, 2), (U, T, 5, 2), (V, T, 6, 1), (U, V, 7, 5)])


def brute_force_vertex_width(g):
    """Reference width: evaluate the active-node set at every single time."""
    bounds = activity_bounds(g)
    return max(
        (len(active_nodes_at(bounds, t)) for t in range(g.lifetime + 1)),
        default=0,
    )


def brute_force_arc_width(g):
    bounds = activity_bounds(g)
    best = 0
    for t in range(g.lifetime + 1):
        count = sum(
            1 for key in bounds.arc_min
            if bounds.arc_min[key] <= t <= bounds.arc_max[key]
        )
        best = max(best, count)
    return best


@st.composite
def point_graph_strategy(draw, max_n=6, max_m=10, max_tau=8, delays=(1, 2, 3)):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(0, max_m))
    arcs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = (u + draw(st.integers(1, n - 1))) % n
        tau = draw(st.integers(0, max_tau))
        delta = draw(st.sampled_from(delays))
        arcs.append((u, v, tau, delta))
    return point_graph(n, arcs, non_strict=(delays == (0,)))

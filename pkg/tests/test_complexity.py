import math

import pytest
from hypothesis import given, settings, strategies as st

from korobov import (
    C_tau_q,
    ComplexityQuery,
    DomainError,
    InsufficientBox,
    ResourceLimit,
    ValidationError,
    count_box_oracle,
    eigen_sum_tau,
    enumerate_top,
    info_complexity,
    info_complexity_upper_bound,
)
from korobov.complexity import minimal_box

from conftest import make
from oracles import box_count


def test_examples(half2):
    assert info_complexity(make("const:1"), 1, 0.6).count == 3
    assert info_complexity(half2, 2, 0.45).count == 9
    assert info_complexity(make("const:0.99"), 1, 0.999).count == 1
    assert info_complexity(make("list:0.5", "const:3"), 1, 0.999).count == 1


def test_result_fields(half2):
    res = info_complexity(half2, 2, 0.45, tau=2)
    assert res.threshold == pytest.approx(0.2025)
    assert res.nodes_visited > 0
    assert res.upper_bound == pytest.approx(115.84, abs=0.01)
    assert res.to_dict()["count"] == 9


def test_query_validation():
    p = make("const:1")
    for eps in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(ValidationError):
            ComplexityQuery(p, 2, eps)
    with pytest.raises(ValidationError):
        ComplexityQuery(p, 0, 0.5)


def test_box_oracle_examples(half2):
    assert count_box_oracle(make("const:1"), 1, 0.6, 5) == 3
    assert count_box_oracle(half2, 2, 0.45, 3) == 9
    assert count_box_oracle(make("const:1"), 3, 0.5, 1) == 27
    assert count_box_oracle(make("const:0"), 1, 0.5, 2) == 1


def test_box_oracle_refuses_small_box():
    with pytest.raises(InsufficientBox):
        count_box_oracle(make("const:1"), 2, 0.3, 2)
    with pytest.raises(ResourceLimit):
        count_box_oracle(make("const:1"), 4, 0.3, 60)


def test_box_oracle_matches_naive_oracle():
    gs, als = [1.0, 0.25, 0.25], [0.6, 1.0, 2.0]
    p = make("list:1,0.25", "list:0.6,1,2")
    for eps in (0.9, 0.6, 0.3):
        kmax = max(minimal_box(p, 3, eps))
        assert count_box_oracle(p, 3, eps, kmax) == box_count(gs, als, kmax, eps)


GRID = [
    ("const:1", "const:1"),
    ("const:0.7", "list:0.6,1,2"),
    ("poly:2", "const:1"),
    ("poly:1", "logaffine:0.6,0.5"),
    ("geom:0.5", "const:1"),
    ("geom:0.8", "list:0.6,1,2"),
    ("list:0.5,0.25,0.125", "const:1"),
]


@pytest.mark.parametrize("g,a", GRID)
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_exact_vs_box(g, a, d):
    p = make(g, a)
    for eps in (0.9, 0.6, 0.3, 0.1, 0.03):
        box = minimal_box(p, d, eps)
        if math.prod(2 * m + 1 for m in box) > 3 * 10**6:
            continue
        assert info_complexity(p, d, eps).count == count_box_oracle(p, d, eps, box)


@pytest.mark.parametrize("g,a", GRID)
def test_count_matches_enumeration(g, a):
    p = make(g, a)
    for d, eps in [(2, 0.1), (3, 0.2), (5, 0.3)]:
        count = info_complexity(p, d, eps).count
        if count > 10**5:
            continue
        top = enumerate_top(p, d, count + 1)
        assert sum(e.value > eps * eps for e in top) == count
        assert not top[-1].value > eps * eps


def test_count_matches_enumeration_high_dimension():
    p = make("poly:4")
    for eps in (2.0**-4, 2.0**-7, 2.0**-10):
        count = info_complexity(p, 20, eps).count
        top = enumerate_top(p, 20, count + 1)
        assert top[count - 1].value > eps * eps >= top[count].value


@settings(max_examples=40, deadline=None)
@given(
    g=st.sampled_from([g for g, _ in GRID]),
    a=st.sampled_from(["const:1", "list:0.6,1,2", "const:2"]),
    d=st.integers(1, 5),
    eps=st.floats(0.05, 0.95),
    eps2=st.floats(0.05, 0.95),
)
def test_monotone_in_eps_and_d(g, a, d, eps, eps2):
    p = make(g, a)
    lo, hi = sorted((eps, eps2))
    n_lo, n_hi = info_complexity(p, d, lo).count, info_complexity(p, d, hi).count
    assert n_lo >= n_hi >= 1
    assert info_complexity(p, d + 1, hi).count >= n_hi


@settings(max_examples=40, deadline=None)
@given(
    g=st.sampled_from([g for g, _ in GRID]),
    a=st.sampled_from(["const:1", "list:0.6,1,2", "const:2"]),
    d=st.integers(1, 5),
    eps=st.floats(0.05, 0.95),
    tau=st.floats(0.9, 4.0),
)
def test_upper_bound_holds(g, a, d, eps, tau):
    p = make(g, a)
    assert info_complexity(p, d, eps).count <= info_complexity_upper_bound(p, d, eps, tau)


@pytest.mark.parametrize("d", range(1, 8))
@pytest.mark.parametrize("eps", [0.95, 0.7, 0.5, 0.3])
def test_curse_floor(d, eps):
    if d > 5 and eps < 0.5:
        pytest.skip("count too large for a unit test")
    assert info_complexity(make("const:1", "list:0.6,1,2"), d, eps).count >= 3**d


def test_upper_bound_examples(half2):
    assert info_complexity_upper_bound(make("const:1"), 1, 0.6, 1) == pytest.approx(23.833, abs=1e-3)
    assert info_complexity_upper_bound(half2, 2, 0.45, 2) == pytest.approx(115.84, abs=1e-2)
    with pytest.raises(DomainError):
        info_complexity_upper_bound(make("const:1", "const:1"), 1, 0.5, 0.5)


def test_node_budget():
    with pytest.raises(ResourceLimit):
        info_complexity(make("const:1"), 8, 0.1, node_budget=1000)


def test_c_tau_q_examples():
    c = C_tau_q(make("poly:4"), 1.0, 0.0, 50)
    assert math.isfinite(c.value) and not c.still_increasing
    assert c.value == pytest.approx(eigen_sum_tau(make("poly:4"), 50, 1.0))

    c = C_tau_q(make("const:1"), 1.0, 0.0, 10)
    assert c.still_increasing and c.argmax_d == 10
    assert c.value == pytest.approx((1 + math.pi**2 / 3) ** 10, rel=1e-12)

    p = make("poly:2", "list:0.6,1,2")
    c = C_tau_q(p, 1.5, 0.7, 1)
    assert c.value == pytest.approx(eigen_sum_tau(p, 1, 1.5) ** (1 / 1.5))


def test_c_tau_q_with_q_attains_max():
    # constant weights: the product grows geometrically, d^-q cannot tame it
    assert C_tau_q(make("const:0.5"), 2.0, 3.0, 30).still_increasing
    # fast decaying weights: d^-q wins and the maximum sits at small d
    c = C_tau_q(make("poly:3"), 1.0, 1.0, 30)
    assert c.argmax_d == 1 and not c.still_increasing
    with pytest.raises(DomainError):
        C_tau_q(make("poly:3", "const:0.6"), 0.5, 0.0, 3)

from fractions import Fraction

import pytest

from revlex import oracle
from revlex.errors import CapacityError, OutOfRangeError
from revlex.expansion import (
    AUDIT_CAP,
    FlowAssignment,
    FlowAuditError,
    audit_pair_flows,
    build_mcf,
    certify_expansion,
    half_embedding_is_isomorphism,
    pair_flows,
    partial_prism_map_ok,
    phi_max_recursive,
)
from revlex.graph import build_graph
from revlex.polytope import make_polytope


def test_base_cases():
    f = build_mcf(2)
    assert f.arc_flow == {(0, 1): 1, (1, 0): 1}
    assert f.phi_max == 1
    assert build_mcf(4).phi_max == 2
    assert build_mcf(3).phi_max == Fraction(3, 2)


def test_certificates():
    assert certify_expansion(2).lower_bound == 1
    c = certify_expansion(3, audit=True)
    assert c.audited and c.lower_bound == 1 and c.phi_max == Fraction(3, 2)
    assert oracle.brute_expansion(build_graph(make_polytope(3)))[0] == 2


def test_errors():
    with pytest.raises(OutOfRangeError):
        build_mcf(1)
    with pytest.raises(OutOfRangeError):
        certify_expansion(1)
    with pytest.raises(CapacityError):
        certify_expansion(AUDIT_CAP + 1, audit=True)


@pytest.mark.parametrize("n", range(2, 130))
def test_flow_bounds(n):
    flow = build_mcf(n)
    assert not flow.support_violations(build_graph(make_polytope(n)))
    assert flow.phi_max <= Fraction(n, 2)
    assert flow.phi_max == phi_max_recursive(n)
    assert certify_expansion(n).lower_bound >= 1


@pytest.mark.parametrize("n", range(2, 33))
def test_audit(n):
    audit_pair_flows(n)


def test_audit_detects_tampering():
    flow = build_mcf(6)
    arc = flow.support()[0]
    bad = FlowAssignment(6, dict(flow.arc_flow))
    bad.arc_flow[arc] += 1
    with pytest.raises(FlowAuditError):
        audit_pair_flows(6, bad)


def test_pair_flows_are_unit_flows():
    flows = pair_flows(5)
    assert len(flows) == 20
    for (x, y), f in flows.items():
        assert sum(v for (a, _), v in f.items() if a == x) - sum(v for (_, b), v in f.items() if b == x) == 1


@pytest.mark.parametrize("n", range(2, 15))
def test_cut_lower_bound(n):
    # every unit pair crossing S leaves S at least once
    flow = build_mcf(n)
    for mask in range(1, (1 << n) - 1):
        S = [x for x in range(n) if mask >> x & 1]
        assert flow.leaving(S) >= len(S) * (n - len(S))


@pytest.mark.parametrize("n", range(2, 19))
def test_exact_expansion_dominates_certificate(n):
    exact, _ = oracle.brute_expansion(build_graph(make_polytope(n)))
    assert exact >= certify_expansion(n).lower_bound >= 1


@pytest.mark.parametrize("d", range(1, 5))
def test_cube_expansion_is_one(d):
    assert oracle.brute_expansion(build_graph(make_polytope(1 << d)))[0] == 1


@pytest.mark.parametrize("n", range(2, 100))
def test_structure(n):
    assert half_embedding_is_isomorphism(n)
    assert partial_prism_map_ok(n)

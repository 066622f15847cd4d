import os

import pytest

import topoquandle as tq

DATA = os.environ["TQ_DATA_DIR"]


def data(name):
    return os.path.join(DATA, name)


def test_quandle_from_parts():
    q = tq.Quandle([[1, 3, 2], [3, 2, 1], [2, 1, 3]], name="dihedral3")
    assert q.size == 3
    assert q.op(1, 2) == 3
    assert q.components == [[1], [2], [3]]  # no opens given, so discrete
    assert "dihedral3" in repr(q)
    connected = tq.Quandle([[1, 3, 2], [3, 2, 1], [2, 1, 3]], opens=[])
    assert connected.components == [[1, 2, 3]]


def test_quandle_from_file():
    q = tq.Quandle.from_file(data("m_tau.json"))
    assert q.size == 3
    assert q.name == "M"
    assert q.components == [[1], [2, 3]]


def test_axiom_rejection():
    with pytest.raises(ValueError, match="column-bijectivity"):
        tq.Quandle([[1, 1], [1, 2]])
    with pytest.raises(ValueError):
        tq.Quandle.from_file(data("not_a_quandle.json"))


def test_topology_rejection():
    with pytest.raises(ValueError):
        tq.Quandle([[1, 3, 2], [3, 2, 1], [2, 1, 3]], opens=[[1]])


def test_homology_paper_values():
    q = tq.Quandle.from_file(data("m_tau.json"))
    assert tq.homology(q, degree=0) == "Z^3"
    assert tq.homology(q, degree=1) == "Z^2"
    assert tq.cohomology(q, degree=0) == "Z^3"
    assert tq.cohomology(q, degree=1) == "Z^2"
    assert tq.homology(q, degree=1, modulus=2) == "Z/2 + Z/2"
    r4 = tq.Quandle.from_file(data("r4_tau.json"))
    assert tq.cohomology(r4, degree=1) == "Z^4"


def test_full_h0():
    assert tq.full_h0(tq.Quandle.from_file(data("m_indiscrete.json"))) == "Z^2"
    assert tq.full_h0(tq.Quandle.from_file(data("dihedral3_indiscrete.json"))) == "Z"


def test_chain_ranks():
    q = tq.Quandle.from_file(data("m_tau.json"))
    assert tq.chain_ranks(q, "bar-Q", 3) == [3, 2, 2, 2]
    assert tq.chain_ranks(q, "bar-R", 2) == [3, 5, 9]


def test_cocycles():
    q = tq.Quandle.from_file(data("m_tau.json"))
    basis = tq.cocycles(q)
    assert len(basis) == 2
    assert basis[0]["cochain"] == {(2, 3): 1}
    assert basis[0]["order"] == 0
    assert tq.coboundaries(q) == []
    assert tq.is_cocycle(q, {(2, 3): 1})
    assert not tq.is_cocycle(tq.Quandle.from_file(data("m_indiscrete.json")), {(1, 2): 1})
    chi = tq.characteristic_cochain(q, 2, 3)
    assert chi == {(2, 3): 1}


def test_diagrams():
    hopf = tq.Diagram.from_braid([1, 1], 2)
    assert hopf.arc_count == 2
    assert hopf.crossings == [(1, 2, 2, 1), (2, 1, 1, 1)]
    assert hopf.components == [[1], [2]]
    loaded = tq.Diagram.from_file(data("hopf.json"))
    assert loaded.crossings == hopf.crossings
    with pytest.raises(ValueError):
        tq.Diagram.from_braid([3], 2)


def test_colorings_and_state_sum():
    q = tq.Quandle.from_file(data("m_tau.json"))
    hopf = tq.Diagram.from_braid([1, 1], 2)
    assert tq.coloring_count(hopf, q) == 5
    cols = tq.colorings(hopf, q)
    assert len(cols) == 5
    assert cols[0] == (1, [1, 1])

    s = tq.state_sum(hopf, q, {(2, 3): 1})
    assert s["pretty"] == "3 + 2*t"
    assert s["terms"] == {0: 3, 1: 2}
    assert s["colorings"] == 5

    rev = tq.Diagram.from_file(data("hopf_reversed.json"))
    assert tq.state_sum(rev, q, {(2, 3): 1})["pretty"] == "3 + 2*t^-1"

    r4 = tq.Quandle.from_file(data("r4_tau.json"))
    sig = tq.Diagram.from_file(data("sigma1_6.json"))
    assert tq.coloring_count(sig, r4) == 8
    assert tq.state_sum(sig, r4, {(1, 2): 1})["pretty"] == "6 + 2*t^3"


def test_state_sum_rejects_non_cocycle():
    ind = tq.Quandle.from_file(data("m_indiscrete.json"))
    hopf = tq.Diagram.from_braid([1, 1], 2)
    with pytest.raises(ValueError, match="cocycle"):
        tq.state_sum(hopf, ind, {(1, 2): 1})

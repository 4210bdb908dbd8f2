from fractions import Fraction
from pathlib import Path

import pytest

homcyc = pytest.importorskip("homcyc")

DATA = Path(__file__).resolve().parents[2] / "data" / "algebras"


def example():
    return homcyc.load(DATA / "idempotent_2d.json")


def test_load_and_unit():
    a = example()
    assert a.dim == 2
    assert a.basis == ["e1", "e2"]
    assert a.unit() == ["1", "0"]
    assert a.alpha_is_idempotent()


def test_hochschild_and_cyclic():
    a = example()
    assert homcyc.betti(homcyc.hochschild_homology(a, 1))[1] == 1
    hc = homcyc.cyclic_homology(a, 2)
    assert hc["all_agree"]
    assert hc["lambda"]["betti"][1] == 0
    assert homcyc.betti(homcyc.hochschild_cohomology(a, 3)) == homcyc.betti(homcyc.hochschild_homology(a, 3))


def test_k2_tower():
    k2 = homcyc.algebra("k2", ["e"], [[[1]]], [[0]])
    assert homcyc.betti(homcyc.hochschild_homology(k2, 6)) == [1] * 7


def test_periodic_k():
    r = homcyc.periodic_homology(homcyc.load(DATA / "k.json"), 3)
    assert (r["even"], r["odd"]) == (1, 0)


def test_twist_and_errors():
    kxk = homcyc.load(DATA / "kxk.json")
    t = homcyc.yau_twist(kxk, [[0, 1], [1, 0]], "swap")
    assert homcyc.betti(homcyc.hochschild_homology(t, 3)) == homcyc.betti(homcyc.hochschild_homology(kxk, 3))
    with pytest.raises(homcyc.PreconditionError):
        homcyc.yau_twist(example(), [[1, 0], [0, 1]])
    with pytest.raises(homcyc.ValidationError):
        homcyc.algebra("bad", ["e"], [[[1]]], [[2]])
    with pytest.raises(homcyc.Error):
        homcyc.periodic_homology(kxk, 2, window=1)


def test_validate_reports_violations():
    r = homcyc.validate({"name": "bad", "basis": ["e"], "mul": [[[1]]], "alpha": [[Fraction(1, 2)]]})
    assert not r["valid"]
    assert r["violations"]


def test_cocycles():
    kx3 = homcyc.load(DATA / "kx3.json")
    assert homcyc.trace_space(kx3) == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert homcyc.is_cyclic_cocycle(kx3, 0, [1, 0, 0])
    phi = homcyc.derivation_cocycle(kx3, [[0, 0, 0], [0, 0, 0], [0, 1, 0]], [1, 0, 0])
    assert phi["degree"] == 1
    assert homcyc.a_circ(example())["dim"] == 2


def test_floats_refused():
    with pytest.raises(TypeError):
        homcyc.algebra("k", ["e"], [[[1.0]]], [[1]])

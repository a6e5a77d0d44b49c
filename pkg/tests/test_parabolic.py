import pytest

from morozov.fixtures import (ex1_pgl_pattern, ex1_sl3_subalgebra,
                              ex2_corrected_pattern, ex2_printed_pattern,
                              ex2_subalgebra)
from morozov.liealg import build, standard_borel, standard_parabolic
from morozov.parabolic import (cartan_subalgebra, contains_borel,
                               detect_parabolic, iso_invariants,
                               killing_detector)


def line(g, label):
    return g.subspace([g.element_by_label(label).coords])


@pytest.mark.parametrize("fam,n,dim", [("sl", 2, 1), ("sl", 3, 2), ("gl", 3, 3)])
def test_cartan_subalgebra_rank(fam, n, dim):
    g = build(fam, n, 5)
    c = cartan_subalgebra(g, seed=0)
    assert c.dim == dim
    assert g.is_nilpotent(c)
    assert g.normalizer(c) == c


def test_cartan_seed_reproducible():
    g = build("sl", 3, 5)
    assert cartan_subalgebra(g, seed=5) == cartan_subalgebra(g, seed=5)


def test_detect_full_algebra():
    g = build("sl", 3, 5)
    v = detect_parabolic(g, g.full_space())
    assert v.status == "parabolic"
    assert set(v.root_subset) == set(g.frame.rootdatum.roots)


def test_detect_borel_and_parabolics():
    for fam, n, p in (("sl", 3, 5), ("sl", 4, 7), ("sp", 4, 5), ("sp", 4, 7)):
        g = build(fam, n, p)
        rank = g.frame.rootdatum.rank
        for mask in range(1 << rank):
            chosen = tuple(i for i in range(rank) if mask >> i & 1)
            data = standard_parabolic(g, chosen)
            v = detect_parabolic(g, data["parabolic"])
            assert v.status == "parabolic"
            assert set(v.root_subset) == set(data["roots"])


def test_detect_translated_parabolic():
    # a Weyl-translated Borel is found through the translate frame
    from morozov.liealg import conjugate_subspace, weyl_matrices
    g = build("sl", 3, 5)
    b = standard_borel(g)["parabolic"]
    w = weyl_matrices(g)[3]
    moved = conjugate_subspace(g, w, b)
    if moved != b:
        v = detect_parabolic(g, moved)
        assert v.status == "parabolic"


def test_detect_non_parabolic_line():
    g = build("sl", 3, 5)
    v = detect_parabolic(g, line(g, "e13"))
    assert v.status == "not-parabolic"


def test_counterexample_ex1():
    sl3 = build("sl", 3, 3)
    pgl3 = build("pgl", 3, 3)
    for t in (1, 2):
        q = ex1_sl3_subalgebra(sl3, t)
        assert sl3.is_subalgebra(q)
        assert q.contains(standard_borel(sl3)["parabolic"])
        assert contains_borel(sl3, q) is not None
        v = detect_parabolic(sl3, q)
        assert v.status == "not-parabolic"
        assert v.details["matching_standard_parabolics"] == []
        # the literal quotient-algebra reading does not close under brackets
        assert not pgl3.is_subalgebra(ex1_pgl_pattern(pgl3, t))


def test_counterexample_ex2_normalizer_pattern():
    g = build("pgl", 3, 3)
    u = ex2_subalgebra(g)
    assert u.dim == 2
    assert g.is_nilpotent(u)
    n = g.normalizer(u)
    assert n == ex2_corrected_pattern(g)
    printed = ex2_printed_pattern(g)
    assert printed.contains(n) and printed.dim == n.dim + 1
    v = detect_parabolic(g, n)
    assert v.status == "not-parabolic"


def test_contains_borel_examples():
    g = build("sl", 3, 5)
    b = standard_borel(g)["parabolic"]
    assert contains_borel(g, b) is not None
    assert contains_borel(g, standard_parabolic(g, (0,))["parabolic"]) is not None
    sl2 = build("sl", 2, 5)
    assert contains_borel(sl2, line(sl2, "e12")) is None


def test_iso_invariants_separate():
    # the battery distinguishes a Borel from a maximal parabolic
    g = build("sl", 3, 5)
    b = standard_borel(g)["parabolic"]
    par = standard_parabolic(g, (0,))["parabolic"]
    assert iso_invariants(g, b) != iso_invariants(g, par)


def test_killing_detector_borel_sl2():
    g = build("sl", 2, 5)
    b = standard_borel(g)["parabolic"]
    rep = killing_detector(g, b)
    assert rep["status"] == "ok"
    assert rep["perp_dim"] == 1
    assert rep["normalizer_check"]


def test_killing_detector_full():
    g = build("sl", 2, 5)
    rep = killing_detector(g, g.full_space())
    assert rep["status"] == "ok" and rep["perp_dim"] == 0


def test_killing_detector_torus_precondition():
    g = build("sl", 2, 5)
    rep = killing_detector(g, line(g, "h1"))
    assert rep["status"] == "precondition-failed"
    assert rep["reason"] == "orthogonal is not a subalgebra"


def test_killing_detector_needs_nondegenerate():
    g = build("sl", 3, 3)
    with pytest.raises(ValueError):
        killing_detector(g, g.full_space())


def test_killing_detector_agrees_with_detect():
    for fam, n, p in (("sl", 3, 5), ("sp", 4, 7)):
        g = build(fam, n, p)
        rank = g.frame.rootdatum.rank
        for mask in range(1 << rank):
            chosen = tuple(i for i in range(rank) if mask >> i & 1)
            par = standard_parabolic(g, chosen)["parabolic"]
            rep = killing_detector(g, par)
            assert rep["status"] == "ok"
            assert detect_parabolic(g, par).status == "parabolic"

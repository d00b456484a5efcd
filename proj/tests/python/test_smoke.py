import ptopo


def test_beta():
    assert ptopo.beta([1, 2, 1]) == 5
    assert ptopo.beta([2, 1, 1]) == 3
    assert ptopo.beta([3, 1]) == 3
    assert ptopo.beta([4]) == 1
    assert ptopo.beta([1, 1, 0]) == 0


def test_descent_composition():
    assert ptopo.descent_composition([5, 7, 4, 10, 8, 1, 3, 6, 2, 9]) == [2, 2, 1, 3, 2]
    assert ptopo.descent_composition([1, 2, 3]) == [3]


def test_descent_class_sizes():
    for c in ptopo.compositions(4, positive_last=True):
        assert len(ptopo.descent_class(c)) == ptopo.beta(c)


def test_complement():
    assert ptopo.complement([1, 2, 1]) == [2, 2]
    assert ptopo.complement([4]) == [1, 1, 1, 1]


def test_knapsack():
    assert ptopo.is_knapsack([2, 1])
    assert not ptopo.is_knapsack([2, 1, 1])
    v = {tuple(d) for d in ptopo.v_set([2, 1], 1)}
    assert v == {(1, 2, 1), (2, 1, 1), (3, 1)}
    assert ptopo.kappa([2, 1], 1, 3) == 1
    assert ptopo.kappa([2, 1], 1, 2) == 2


def test_homology():
    hp = ptopo.delta_homology([1, 2, 1])
    assert hp["betti"] == {1: 5}
    assert hp["torsion"] == {}
    lam = ptopo.lambda_homology([2, 1], 1)
    assert lam["betti"] == {1: 11}


def test_critical_cells():
    cells = ptopo.critical_cells([2, 1], 1)
    assert len(cells) == 11
    assert "2-14-3" in cells


def test_mobius():
    assert ptopo.mobius_pi_c([1, 2, 1]) == -5
    assert ptopo.mobius_filter([2, 1], 1) == -11


def test_cycle():
    g = ptopo.cycle([1, 3, 4, 2], [1, 2, 1])
    assert g["1-34-2"] == 1
    assert sum(1 for v in g.values() if v != 0) == 4


def test_run_suite():
    claims = ptopo.run_suite("mobius", 3)
    assert claims
    assert all(c["pass"] for c in claims)

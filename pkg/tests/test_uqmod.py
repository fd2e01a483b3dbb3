"""Highest weight module oracle: raising action, contravariant form,
weight space dimensions."""

from quiverhecke.cartan import Weight, build_cartan
from quiverhecke.laurent import LaurentPoly, qint
from quiverhecke.uqmod import UqModule

A2 = build_cartan(("1", "2"), [[2, -1], [-1, 2]])
A1 = build_cartan(("i",), [[2]])
A1AFF = build_cartan(("0", "1"), [[2, -2], [-2, 2]])


def test_e_action_on_highest_weight():
    V = UqModule(A2, Weight((1, 0)))
    assert V.e_action(0, ()) == {}
    # e_0 f_0 v = [<h_0, Lambda>] v = [1] v
    out = V.e_action(0, (0,))
    assert out == {(): LaurentPoly.one()}
    # e_0 f_1 v = 0
    assert V.e_action(0, (1,)) == {}


def test_e_action_string_coefficients():
    # sl2 level 2: e f f v = [2] f v + f [ <2 - 2> ] v = [2] f v
    V = UqModule(A1, Weight((2,)))
    out = V.e_action(0, (0, 0))
    assert out == {(0,): qint(2)}
    # level 3: coefficient [3] on the inner slot, [1] on the outer slot
    V3 = UqModule(A1, Weight((3,)))
    out3 = V3.e_action(0, (0, 0))
    assert out3 == {(0,): qint(3) + qint(1)}


def test_gram_frozen_fundamental_a2():
    # V(Lambda_1), beta = alpha_1 + alpha_2: f_2 f_1 v is the only
    # nonzero vector, so the Gram matrix has a single unit entry
    V = UqModule(A2, Weight((1, 0)))
    seqs, mat = V.gram_matrix((1, 1))
    assert seqs == ((0, 1), (1, 0))
    vals = [[mat[r][c] for c in range(2)] for r in range(2)]
    assert vals[0][0] == LaurentPoly.zero()
    assert vals[0][1] == LaurentPoly.zero()
    assert vals[1][0] == LaurentPoly.zero()
    assert vals[1][1] == LaurentPoly.one()


def test_gram_symmetry():
    V = UqModule(A2, Weight((1, 1)))
    for beta in [(1, 1), (2, 1)]:
        seqs, mat = V.gram_matrix(beta)
        for r in range(len(seqs)):
            for c in range(len(seqs)):
                assert mat[r][c] == mat[c][r]


def test_weight_dims_adjoint_a2():
    # V(rho) for A2 is the 8-dimensional adjoint representation
    V = UqModule(A2, Weight((1, 1)))
    dims = {
        (0, 0): 1,
        (0, 1): 1,
        (1, 0): 1,
        (1, 1): 2,
        (2, 1): 1,
        (1, 2): 1,
        (2, 2): 1,
    }
    for beta, d in dims.items():
        assert V.weight_dim(beta) == d
    assert sum(dims.values()) == 8
    # outside the weight diagram
    assert V.weight_dim((3, 0)) == 0
    assert V.weight_dim((2, 0)) == 0


def test_weight_dims_sl2_levels():
    for level in (1, 2, 3):
        V = UqModule(A1, Weight((level,)))
        for k in range(level + 3):
            expected = 1 if k <= level else 0
            assert V.weight_dim((k,)) == expected


def test_weight_dims_basic_affine():
    # level 1 module over affine sl2: multiplicities follow partition
    # counts along the null direction
    V = UqModule(A1AFF, Weight((1, 0)))
    assert V.weight_dim((1, 0)) == 1
    assert V.weight_dim((0, 1)) == 0
    assert V.weight_dim((1, 1)) == 1
    assert V.weight_dim((2, 1)) == 1
    assert V.weight_dim((1, 2)) == 1
    assert V.weight_dim((2, 0)) == 0
    assert V.weight_dim((2, 2)) == 2  # p(2) = 2


def test_predicted_dim_shift():
    V = UqModule(A2, Weight((1, 0)))
    beta = (1, 1)
    # c = (Lambda | beta) - (beta | beta)/2 = 1 - 1 = 0; the surviving
    # corner is e((0, 1)) once the sequence reversal is applied
    assert V.predicted_dim(beta, (0, 1), (0, 1)) == LaurentPoly.one()
    assert V.predicted_dim(beta, (1, 0), (1, 0)) == LaurentPoly.zero()
    total = V.predicted_total_dim(beta)
    assert total == LaurentPoly.one()

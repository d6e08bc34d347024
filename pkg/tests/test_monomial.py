"""Tests for monomial inductions and the restricted-weight congruence filter."""

import pytest

from modplab.exceptions import ParameterError, ReducibleInductionWarning
from modplab.matrix_groups.closure import closure, is_irreducible
from modplab.matrix_groups.field import field_of_order, get_field
from modplab.matrix_groups.matrix import diagonal, identity, mat_mul, mat_pow
from modplab.matrix_groups.monomial import (
    build_monomial_induction,
    cyclic_shift,
    is_shift_invariant,
)
from modplab.matrix_groups.weights import (
    admissible_weights,
    passes_congruence,
    restricted_weights,
)

F7 = get_field(7)


def test_cyclic_shift_moves_basis_vectors():
    shift = cyclic_shift(F7, 3)
    assert shift.apply((1, 0, 0)) == (0, 1, 0)
    assert shift.apply((0, 0, 1)) == (1, 0, 0)
    assert mat_pow(shift, 3) == identity(F7, 3)


def test_generators_are_shift_and_conjugates():
    gens = build_monomial_induction(F7, (1, 2, 4))
    shift = gens[0]
    assert shift == cyclic_shift(F7, 3)
    assert gens[1] == diagonal(F7, [3, 2, 4])
    assert len(gens) == 4
    for k in range(3):
        conjugate = mat_mul(mat_mul(mat_pow(shift, k), gens[1]), mat_pow(shift, -k))
        assert conjugate in gens


@pytest.mark.parametrize(
    "q,psi", [(7, (1, 2, 4)), (4, (0, 1, 2)), (13, (1, 2, 4)), (9, (0, 1, 3))]
)
def test_induction_is_irreducible(q, psi):
    F = field_of_order(q)
    gens = build_monomial_induction(F, psi)
    assert is_irreducible(F, gens, 3) == (True, None)
    group = closure(gens)
    assert len(group) % 3 == 0


def test_trivial_character_warns():
    with pytest.warns(ReducibleInductionWarning):
        gens = build_monomial_induction(F7, (0, 0, 0))
    assert gens == [cyclic_shift(F7, 3), identity(F7, 3)]
    irreducible, _ = is_irreducible(F7, gens, 3)
    assert not irreducible


def test_exponents_are_read_mod_q_minus_one():
    reduced = build_monomial_induction(F7, (1, 2, 4))
    assert build_monomial_induction(F7, (7, 8, 10)) == reduced


def test_wrong_length():
    with pytest.raises(ParameterError):
        build_monomial_induction(F7, (1, 2))


def test_shift_invariance():
    assert is_shift_invariant([1, 2, 1, 2], 6)
    assert is_shift_invariant([0, 6, 12], 6)
    assert not is_shift_invariant([1, 2, 4], 6)


class TestWeights:
    @pytest.mark.parametrize("q", [5, 7, 11])
    def test_rank_three(self, q):
        assert admissible_weights(q, 3) == [(1, 0, 0)]

    @pytest.mark.parametrize("q", [5, 7])
    def test_rank_four(self, q):
        assert admissible_weights(q, 4) == [(1, 0, 0, 0)]

    def test_zero_weight_excluded(self):
        assert not passes_congruence((0, 0, 0), 5)
        assert passes_congruence((1, 0, 0), 5)

    def test_restricted_weights(self):
        weights = list(restricted_weights(5, 3))
        assert len(weights) == 25
        assert weights[0] == (0, 0, 0)
        assert all(w[0] >= w[1] >= w[2] == 0 and w[0] - w[1] <= 4 for w in weights)

    @pytest.mark.parametrize("q,n", [(6, 3), (2, 3), (5, 2), (7, 7)])
    def test_parameter_errors(self, q, n):
        with pytest.raises(ParameterError):
            admissible_weights(q, n)

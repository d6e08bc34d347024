"""Tests for the group lemma checks on shipped fixtures and constructed pairs."""

import itertools

import pytest

from modplab.exceptions import CapExceededError, ParameterError, PreconditionError
from modplab.fixtures import load_fixture
from modplab.matrix_groups import poly
from modplab.matrix_groups.closure import RepresentationPair, closure
from modplab.matrix_groups.field import field_of_order, get_field
from modplab.matrix_groups.lemmas import (
    annihilation_holds,
    charpoly_family,
    det_agreement,
    find_annihilation_failure,
    find_hypothesis_violation,
    find_intertwiner,
    find_kernel_violation,
    is_regular_generated,
    kernel_containment,
    regular_determinant_agreement,
    regular_subgroup,
    union_of_kernels,
    verify_regular_lemma,
)
from modplab.matrix_groups.matrix import (
    SquareMatrix,
    det,
    diagonal,
    identity,
    mat_inverse,
    mat_mul,
    scalar,
)
from modplab.matrix_groups.monomial import build_monomial_induction, cyclic_shift

F7 = get_field(7)


def conjugate_by(gens, t):
    t_inv = mat_inverse(t)
    return [mat_mul(mat_mul(t_inv, g), t) for g in gens]


class TestAnnihilation:
    def test_a4_remark(self):
        pair = load_fixture("a4_f7")
        assert len(pair) == 12
        assert pair.m == 1
        assert annihilation_holds(pair)
        assert find_intertwiner(pair.rho_generators, pair.theta_generators) is None

    def test_a4_violates_the_hypothesis(self):
        pair = load_fixture("a4_f7")
        rho, theta = pair.rho_generators, pair.theta_generators
        assert find_hypothesis_violation(rho, [theta]) == 0
        assert find_hypothesis_violation(rho, [rho]) is None

    def test_s3_fails_at_a_three_cycle(self):
        pair = load_fixture("s3_f7")
        bad = find_annihilation_failure(pair)
        assert bad is not None
        assert bad.rho == SquareMatrix.from_rows(F7, [[0, 6], [1, 6]])
        assert not annihilation_holds(pair)
        rho, theta = pair.rho_generators, pair.theta_generators
        assert find_hypothesis_violation(rho, [theta]) is None

    def test_cayley_hamilton_pair(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        assert annihilation_holds(RepresentationPair.build(gens, gens))


def _monomial_pairs():
    for q in (4, 7, 13):
        F = field_of_order(q)
        third = (q - 1) // 3
        for psi in itertools.product((0, third, 2 * third), repeat=3):
            if len(set(psi)) == 1:
                continue
            gens = build_monomial_induction(F, psi)
            yield RepresentationPair.build(gens, gens)


DIAGONAL_EXPONENTS = [(1, 2, 3), (2, 4, 6), (0, 1, 2), (1, 1, 5), (4, 0, 0), (3, 5, 7)]


def _diagonal_pairs():
    for q in (4, 9):
        F = field_of_order(q)
        for exponents in DIAGONAL_EXPONENTS:
            values = [F.generator_power(e) for e in exponents]
            rho = [diagonal(F, values), diagonal(F, values[::-1])]
            theta = [SquareMatrix(F, 1, [values[0]]), SquareMatrix(F, 1, [values[-1]])]
            yield RepresentationPair.build(rho, theta)


def _with_corner(g, corner):
    """Block diagonal diag(g, corner)."""
    n = g.n
    rows = [list(g.rows[i]) + [0] for i in range(n)] + [[0] * n + [corner]]
    return SquareMatrix(g.field, n + 1, [x for row in rows for x in row])


def _central_extension(F, psi):
    """Source gens of G x mu_k with rho the projection onto the monomial group G."""
    zeta = F.root_of_unity(3 if F.q == 4 else 2)
    gens = build_monomial_induction(F, psi)
    source = [_with_corner(g, 1) for g in gens] + [_with_corner(identity(F, 3), zeta)]
    return source, list(gens) + [identity(F, 3)], zeta


def _pairs_through_quotient():
    for q in (4, 7, 13):
        F = field_of_order(q)
        third = (q - 1) // 3
        t = diagonal(F, [1, F.generator_power(1), F.generator_power(2)])
        for psi in itertools.product((0, third, 2 * third), repeat=3):
            if len(set(psi)) == 1:
                continue
            source, rho, _ = _central_extension(F, psi)
            theta = conjugate_by(rho, t)
            yield RepresentationPair.build(rho, theta, source_gens=source)


class TestKernels:
    def test_kernel_lemma_on_constructed_pairs(self):
        pairs = list(_monomial_pairs()) + list(_diagonal_pairs())
        assert len(pairs) >= 50
        for pair in pairs:
            assert annihilation_holds(pair)
            assert kernel_containment(pair)

    def test_kernel_lemma_with_nontrivial_kernel(self):
        pairs = list(_pairs_through_quotient())
        assert len(pairs) >= 50
        for pair in pairs:
            assert pair.keyed_by_source
            kernel = [g for g in pair.elements if g.rho == pair.identity.rho]
            assert len(kernel) > 1
            assert annihilation_holds(pair)
            assert kernel_containment(pair)

    def test_determinant_has_a_large_kernel(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        rho = [SquareMatrix(F7, 1, [det(g)]) for g in gens]
        pair = RepresentationPair.build(rho, rho, source_gens=gens)
        kernel = [g for g in pair.elements if g.rho == pair.identity.rho]
        assert 1 < len(kernel) < len(pair)
        assert kernel_containment(pair)

    @pytest.mark.parametrize("q", [4, 7, 13])
    def test_character_nontrivial_on_kernel_fails_annihilation(self, q):
        F = field_of_order(q)
        third = (q - 1) // 3
        source, rho, zeta = _central_extension(F, (0, third, 2 * third))
        corner = SquareMatrix(F, 1, [zeta])
        theta = [SquareMatrix(F, 1, [1])] * (len(rho) - 1) + [corner]
        pair = RepresentationPair.build(rho, theta, source_gens=source)
        violation = find_kernel_violation(pair)
        assert violation is not None
        assert violation.rho == identity(F, 3)
        with pytest.raises(PreconditionError) as info:
            kernel_containment(pair)
        assert "annihilation" in info.value.failed

    def test_a4_kernels(self):
        assert kernel_containment(load_fixture("a4_f7"))

    def test_trivial_rho_forces_annihilation_failure(self):
        pair = RepresentationPair.build([identity(F7, 2)], [SquareMatrix(F7, 1, [6])])
        with pytest.raises(PreconditionError) as info:
            kernel_containment(pair)
        assert "annihilation" in info.value.failed
        assert info.value.witness["theta"] == [[6]]

    def test_reducible_theta(self):
        shift = cyclic_shift(F7, 3)
        pair = RepresentationPair.build([shift], [shift])
        with pytest.raises(PreconditionError) as info:
            kernel_containment(pair)
        assert info.value.failed == ["theta-irreducible"]


class TestCharacters:
    def test_klein_remark(self):
        pair = load_fixture("klein_f7")
        assert annihilation_holds(pair)
        assert union_of_kernels(pair)
        assert all(g.theta == identity(F7, 1) for g in pair.elements)
        for i in range(3):
            assert any(g.rho[i, i] != 1 for g in pair.elements)

    def test_theta_is_a_summand(self):
        rho = [diagonal(F7, [3, 5]), diagonal(F7, [2, 2])]
        theta = [SquareMatrix(F7, 1, [3]), SquareMatrix(F7, 1, [2])]
        assert union_of_kernels(RepresentationPair.build(rho, theta))

    def test_single_character_mismatch(self):
        pair = RepresentationPair.build([diagonal(F7, [2])], [SquareMatrix(F7, 1, [3])])
        with pytest.raises(PreconditionError) as info:
            union_of_kernels(pair)
        assert info.value.failed == ["annihilation"]

    def test_shape_preconditions(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        with pytest.raises(PreconditionError) as info:
            union_of_kernels(RepresentationPair.build(gens, gens))
        assert info.value.failed == ["theta-character", "rho-diagonal"]


class TestIntertwiner:
    def test_self_intertwiner_is_scalar(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        found = find_intertwiner(gens, gens)
        assert found is not None
        assert found == scalar(F7, 3, found[0, 0])

    def test_conjugate_by_shift(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        shift = cyclic_shift(F7, 3)
        conjugated = conjugate_by(gens, shift)
        found = find_intertwiner(gens, conjugated)
        assert found is not None
        for r, t in zip(gens, conjugated):
            assert mat_mul(r, found) == mat_mul(found, t)

    def test_non_isomorphic(self):
        a = [build_monomial_induction(F7, (1, 2, 4))[1]]
        b = [diagonal(F7, [3, 3, 3])]
        assert find_intertwiner(a, b) is None

    def test_search_cap(self):
        one = identity(F7, 3)
        with pytest.raises(CapExceededError):
            find_intertwiner([one], [one], cap=1000)

    def test_length_mismatch(self):
        with pytest.raises(ParameterError):
            find_intertwiner([identity(F7, 2)], [])


class TestDeterminants:
    def test_own_family(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        pair = RepresentationPair.build(gens, gens)
        assert det_agreement(pair)

    def test_family_from_conjugate_rho(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        pair = RepresentationPair.build(gens, conjugate_by(gens, cyclic_shift(F7, 3)))
        assert regular_determinant_agreement(pair)
        assert det_agreement(pair, charpoly_family(pair))

    def test_non_multiplicative_family(self):
        gens = build_monomial_induction(F7, (1, 2, 4))
        pair = RepresentationPair.build(gens, gens)
        family = {g.key: (2, 0, 0, 1) for g in pair.elements}
        with pytest.raises(PreconditionError) as info:
            det_agreement(pair, family)
        assert "multiplicative" in info.value.failed

    def test_family_degree(self):
        with pytest.raises(PreconditionError) as info:
            det_agreement(load_fixture("klein_f7"))
        assert "family-degree" in info.value.failed

    def test_needs_equal_dimensions(self):
        with pytest.raises(ParameterError):
            regular_determinant_agreement(load_fixture("klein_f7"))

    def test_constant_term_sign(self):
        f = poly.from_roots(F7, [2, 3, 4])
        assert poly.constant_term_sign(F7, f) == 24 % 7


class TestRegularGeneration:
    def test_identity_only(self):
        assert not is_regular_generated(closure([identity(F7, 3)]))
        assert is_regular_generated(closure([identity(F7, 1)]))

    def test_repeated_eigenvalues(self):
        group = closure([diagonal(F7, [1, 1, 6])])
        assert len(regular_subgroup(group)) == 1
        assert not is_regular_generated(group)

    def test_cyclic_regular(self):
        group = closure([diagonal(F7, [1, 2, 4])])
        assert len(group) == 3
        assert is_regular_generated(group)

    @pytest.mark.parametrize("name", ["monomial_f4", "monomial_f7"])
    def test_induced_mode(self, name):
        group = closure(load_fixture(name))
        report = verify_regular_lemma(group, "induced")
        assert report.passed, report.checks
        assert [c.name for c in report.checks] == [
            "index-3",
            "off-diagonal-charpoly",
            "off-diagonal-regular",
            "off-diagonal-generate",
            "regular-generated",
        ]

    @pytest.mark.slow
    def test_induced_mode_f13(self):
        group = closure(load_fixture("monomial_f13"))
        assert len(group) == 5184
        assert verify_regular_lemma(group, "induced").passed

    def test_unipotent_mode(self):
        group = closure(load_fixture("unipotent_f2"))
        report = verify_regular_lemma(group, "unipotent")
        assert report.passed, report.checks
        assert is_regular_generated(group)

    def test_unipotent_mode_in_odd_characteristic(self):
        # symmetric square of SL2(F_5), a copy of A_5 in SO_3
        group = closure(load_fixture("unipotent_f5"))
        assert len(group) == 60
        report = verify_regular_lemma(group, "unipotent")
        assert report.passed, report.checks
        assert all(c.passed for c in report.checks)
        assert len(regular_subgroup(group)) == 60
        assert is_regular_generated(group)

    def test_unipotent_mode_without_unipotents(self):
        report = verify_regular_lemma(closure(load_fixture("monomial_f7")), "unipotent")
        assert not report.passed
        assert not report.checks[0].passed

    def test_reducible_group(self):
        jordan = SquareMatrix.from_rows(F7, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        with pytest.raises(PreconditionError) as info:
            verify_regular_lemma(closure([jordan]), "unipotent")
        assert info.value.failed == ["irreducible"]

    def test_induced_mode_needs_dimension_three(self):
        gens = [
            SquareMatrix.from_rows(get_field(3), [[1, 1], [0, 1]]),
            SquareMatrix.from_rows(get_field(3), [[1, 0], [1, 1]]),
        ]
        with pytest.raises(PreconditionError) as info:
            verify_regular_lemma(closure(gens), "induced")
        assert info.value.failed == ["dimension"]

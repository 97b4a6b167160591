# ruff: noqa: S101
import itertools

import numpy as np
import pytest

from monocodes.core.config import settings
from monocodes.core.exceptions import InvalidInputError, NotDecreasingError, ResourceCapError, UndefinedQuantityError
from monocodes.domain.code import (
    BooleanPolynomial,
    DualParameters,
    LowerTriangularAffineMap,
    MonomialCode,
    coordinate_permutation,
    dual,
    dual_by_nullspace,
    dual_parameters,
    is_in_code,
    is_lta_invariant,
    lta_action,
    lta_generators,
    lta_group_order,
    min_distance,
    min_weight_count,
    min_weight_enumerate,
    orbit_bruteforce,
    orbit_enumerate,
    orbit_free_entries,
    orbit_size,
    permute_vector,
    r_minus,
    r_plus,
    reed_muller,
    sandwich_degrees,
    weakly_self_dual,
)
from monocodes.domain.gf2 import BitVector, evaluate, generator_matrix, min_weight_bruteforce, min_weight_words_bruteforce, row_space_equal
from monocodes.domain.monomial import Monomial, all_monomials, gaussian_binomial
from monocodes.domain.sampling import random_decreasing_code, random_lta


def mono(m: int, *indices: int) -> Monomial:
    return Monomial.from_indices(m, indices)


def test_code_basics(rm_1_3: MonomialCode) -> None:
    """Test length, dimension and decreasing flags of R(1,3)"""
    assert rm_1_3.m == 3
    assert rm_1_3.length == 8
    assert rm_1_3.dimension == 4
    assert rm_1_3.is_decreasing
    assert rm_1_3.is_weakly_decreasing


def test_dual_of_reed_muller_is_reed_muller() -> None:
    """Test R(r, m)^perp = R(m - r - 1, m)"""
    for m in range(1, 7):
        for r in range(m):
            assert dual(reed_muller(r, m)).monomials == reed_muller(m - r - 1, m).monomials


def test_dual_requires_decreasing(not_decreasing: MonomialCode) -> None:
    """Test that the complement formula refuses non-decreasing sets"""
    with pytest.raises(NotDecreasingError, match="duality formula requires decreasing I"):
        dual(not_decreasing)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_dual_matches_nullspace(m: int) -> None:
    """Test the complement formula against the nullspace of the generator matrix"""
    for seed in range(100):
        # Arrange
        code = random_decreasing_code(m, seed)

        # Act
        by_formula = dual(code).generator_matrix()
        by_nullspace = dual_by_nullspace(code)

        # Assert
        assert row_space_equal(by_formula, by_nullspace), f"seed {seed}: {code}"


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
def test_dual_is_an_involution(m: int) -> None:
    """Test that taking the dual twice gives back the code"""
    for seed in range(20):
        code = random_decreasing_code(m, seed)
        assert dual(dual(code)).monomials == code.monomials, f"seed {seed}"


def test_dual_by_nullspace_cap(rm_1_3: MonomialCode) -> None:
    """Test that the oracle path honours its cap"""
    with pytest.raises(ResourceCapError, match="oracle_max_m"):
        dual_by_nullspace(rm_1_3, max_m=2)


def test_sandwich_degrees_examples(rm_2_4: MonomialCode, small_decreasing: MonomialCode) -> None:
    """Test r_plus and r_minus on Reed-Muller and a mixed code"""
    assert (r_minus(rm_2_4), r_plus(rm_2_4)) == (2, 2)
    assert (r_minus(small_decreasing), r_plus(small_decreasing)) == (1, 2)
    assert sandwich_degrees(small_decreasing) == (1, 2)


def test_r_minus_below_repetition() -> None:
    """Test r_minus = 0 when only the constant row of the top variables is present"""
    # Arrange
    code = MonomialCode.from_bits(3, [0, 1])

    # Assert
    assert r_minus(code) == 0
    assert r_plus(code) == 1


def test_sandwich_degrees_match_formulas() -> None:
    """Test containment-based degrees against the closed form on random decreasing codes"""
    for m in range(2, 6):
        for seed in range(30):
            code = random_decreasing_code(m, seed)
            assert sandwich_degrees(code) == (r_minus(code), r_plus(code))


def test_min_distance_and_count_reed_muller(rm_1_3: MonomialCode, rm_2_4: MonomialCode) -> None:
    """Test the closed forms on R(1,3) and R(2,4)"""
    assert (min_distance(rm_1_3), min_weight_count(rm_1_3)) == (4, 14)
    assert (min_distance(rm_2_4), min_weight_count(rm_2_4)) == (4, 140)


def test_min_distance_of_constant_code() -> None:
    """Test the repetition code {1}"""
    code = MonomialCode.from_bits(3, [0])
    assert min_distance(code) == 8
    assert min_weight_count(code) == 1


@pytest.mark.parametrize("m", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)])
def test_min_weight_formulas_match_enumeration(m: int) -> None:
    """Test distance and minimum-weight count against exhaustive enumeration"""
    for seed in range(25):
        # Arrange
        code = random_decreasing_code(m, seed)
        if code.dimension > settings.enumeration_max_dim:
            continue

        # Act
        observed = min_weight_bruteforce(code.generator_matrix())

        # Assert
        assert observed == (min_distance(code), min_weight_count(code)), f"seed {seed}: {code}"


def reed_muller_with(r: int, m: int, *extra: tuple[int, ...]) -> MonomialCode:
    """R(r,m) with extra monomials given as index tuples."""
    bits = reed_muller(r, m).monomials.bit_sets() + [mono(m, *indices).bits for indices in extra]
    return MonomialCode.from_bits(m, bits)


@pytest.mark.parametrize(
    ("code", "dimension"),
    [
        (reed_muller_with(2, 5, (0, 1, 2)), 17),
        (reed_muller_with(2, 5, (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)), 20),
        (reed_muller(2, 6), 22),
        pytest.param(reed_muller_with(2, 6, (0, 1, 2), (0, 1, 3)), 24, marks=pytest.mark.slow),
    ],
    ids=["rm25-plus-1", "rm25-plus-4", "rm26", "rm26-plus-2"],
)
def test_min_weight_formulas_match_enumeration_large(code: MonomialCode, dimension: int) -> None:
    """Test the closed forms on decreasing codes of dimension 17 to 24"""
    # Arrange
    assert code.dimension == dimension
    assert code.is_decreasing

    # Act
    observed = min_weight_bruteforce(code.generator_matrix())

    # Assert
    assert observed == (min_distance(code), min_weight_count(code))


def test_min_weight_enumerate_matches_bruteforce(rm_2_4: MonomialCode, small_decreasing: MonomialCode) -> None:
    """Test that orbit evaluations are exactly the minimum-weight codewords"""
    for code in (rm_2_4, small_decreasing):
        words = {w.bits for w in min_weight_enumerate(code)}
        assert words == min_weight_words_bruteforce(code.generator_matrix())


@pytest.mark.parametrize("r", range(1, 9))
def test_reed_muller_count_is_gaussian(r: int) -> None:
    """Test |W_min(R(r, m))| = 2^r times the Gaussian binomial"""
    for m in range(r, 9):
        assert min_weight_count(reed_muller(r, m)) == (1 << r) * gaussian_binomial(m, r)


def test_zero_code_is_refused() -> None:
    """Test that distance of the empty code is undefined"""
    with pytest.raises(UndefinedQuantityError):
        min_distance(MonomialCode.from_bits(3, []))


def test_dual_parameters() -> None:
    """Test the dual parameters of {1, x0} over m=2 and of R(1,4)"""
    assert dual_parameters(MonomialCode.from_bits(2, [0, 1])) == DualParameters(0, 1, 2)
    assert dual_parameters(reed_muller(1, 4)) == DualParameters(2, 2, 4)


def test_dual_parameters_match_dual_code() -> None:
    """Test that the dual parameters are those of the dual code"""
    for m in range(2, 6):
        for seed in range(20):
            code = random_decreasing_code(m, seed)
            if code.dimension == code.length:
                continue
            other = dual(code)
            expected = dual_parameters(code)
            assert (r_minus(other), r_plus(other), min_distance(other)) == tuple(expected)


def test_dual_parameters_full_code() -> None:
    """Test that the full space has no dual parameters"""
    with pytest.raises(UndefinedQuantityError, match="zero code"):
        dual_parameters(MonomialCode.from_bits(2, range(4)))


def test_weakly_self_dual() -> None:
    """Test the complement criterion and its rate precondition"""
    assert weakly_self_dual(reed_muller(1, 4))
    assert weakly_self_dual(reed_muller(1, 3))
    assert weakly_self_dual(MonomialCode.from_bits(2, [0, 1]))
    with pytest.raises(InvalidInputError, match="rate <= 1/2"):
        weakly_self_dual(MonomialCode.from_bits(2, [0, 1, 2]))


def test_is_in_code(rm_1_3: MonomialCode) -> None:
    """Test membership by augmented rank"""
    assert is_in_code(evaluate(mono(3, 2)), rm_1_3)
    assert not is_in_code(evaluate(mono(3, 0, 2)), rm_1_3)
    assert not is_in_code(BitVector(4, 1), rm_1_3)


def test_boolean_polynomial_arithmetic() -> None:
    """Test sum, product, degree and evaluation"""
    # Arrange
    x0 = BooleanPolynomial.from_monomial(mono(2, 0))
    x1 = BooleanPolynomial.from_monomial(mono(2, 1))
    one = BooleanPolynomial.constant(2)

    # Act
    product = (x0 + one) * (x1 + one)

    # Assert
    assert product.terms == frozenset({0b11, 0b01, 0b10, 0b00})
    assert product.degree == 2
    assert (x0 + x0) == BooleanPolynomial.zero(2)
    assert x0 * x0 == x0
    assert product.evaluate().bits == 0b0001
    assert str(x0 + one) == "x0 + 1"


def test_lta_map_validation() -> None:
    """Test that entries on or above the diagonal are checked"""
    with pytest.raises(InvalidInputError):
        LowerTriangularAffineMap(2, (0b01, 0b00))
    with pytest.raises(InvalidInputError):
        LowerTriangularAffineMap(2, (0b11, 0b10))


def test_lta_action_matches_permutation() -> None:
    """Test that ev of the substituted monomial is the permuted evaluation vector"""
    rng = np.random.default_rng(11)
    for m in range(1, 6):
        for _ in range(10):
            lta = random_lta(m, rng)
            perm = coordinate_permutation(lta)
            assert sorted(perm) == list(range(1 << m))
            for g in all_monomials(m):
                assert permute_vector(evaluate(g), perm) == lta_action(lta, g).evaluate()


def test_lta_action_examples() -> None:
    """Test x0*x1 under x1 -> x1 + 1 and under x1 -> x1 + x0 + 1"""
    # Arrange
    shift = LowerTriangularAffineMap(2, (0b01, 0b10), translation=0b10)
    shear = LowerTriangularAffineMap(2, (0b01, 0b11), translation=0b10)
    g = mono(2, 0, 1)

    # Act
    shifted = lta_action(shift, g)
    sheared = lta_action(shear, g)

    # Assert
    assert shifted.terms == frozenset({0b11, 0b01})
    assert sheared.terms == frozenset({0b11})


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_lta_action_keeps_the_leading_monomial(m: int) -> None:
    """Test that the image of g always contains g itself"""
    rng = np.random.default_rng(100 + m)
    for _ in range(20):
        lta = random_lta(m, rng)
        for g in all_monomials(m):
            assert g.bits in lta_action(lta, g).terms, f"{g} under {lta}"


def test_lta_from_arrays() -> None:
    """Test building a map from numpy arrays"""
    lta = LowerTriangularAffineMap.from_arrays(np.array([[1, 0], [1, 1]]), np.array([0, 1]))
    assert lta.matrix_rows == (0b01, 0b11)
    assert lta.translation == 0b10
    assert lta.apply(0b01) == 0b01


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_decreasing_codes_are_lta_invariant(m: int) -> None:
    """Test that random lower triangular affine maps preserve decreasing codes"""
    rng = np.random.default_rng(m)
    for seed in range(20):
        code = random_decreasing_code(m, seed)
        for _ in range(50 if m <= 4 else 10):
            assert is_lta_invariant(code, random_lta(m, rng))


def test_non_decreasing_code_is_not_invariant(not_decreasing: MonomialCode) -> None:
    """Test that some transvection moves {1, x1} out of itself"""
    assert not all(is_lta_invariant(not_decreasing, gen) for gen in lta_generators(3))


def test_lta_group_order() -> None:
    """Test |LTA(m,2)| = 2^(m(m-1)/2 + m)"""
    assert lta_group_order(1) == 2
    assert lta_group_order(3) == 1 << 6


def test_orbit_of_x1_x4() -> None:
    """Test the orbit size of x1*x4 for m=5"""
    # Arrange
    g = mono(5, 1, 4)

    # Act
    size = orbit_size(g)

    # Assert
    assert size == 64
    assert len(orbit_free_entries(g)) == 6
    assert len(orbit_enumerate(g)) == 64


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_orbit_size_matches_bruteforce(m: int) -> None:
    """Test the orbit size formula against closure under group generators"""
    for g in all_monomials(m):
        orbit = orbit_bruteforce(g)
        assert len(orbit) == orbit_size(g)
        assert orbit == orbit_enumerate(g)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_orbits_are_disjoint(m: int) -> None:
    """Test that orbits of distinct monomials do not meet"""
    orbits = {g: orbit_enumerate(g) for g in all_monomials(m)}
    for f, g in itertools.combinations(orbits, 2):
        assert not orbits[f] & orbits[g]


def test_orbit_cap() -> None:
    """Test that explicit enumeration honours orbit_max_log2"""
    with pytest.raises(ResourceCapError, match="orbit_max_log2"):
        orbit_enumerate(mono(5, 1, 4), max_log2=5)


def test_generator_matrix_rows_sorted(small_decreasing: MonomialCode) -> None:
    """Test that rows follow the canonical bit-set order"""
    assert small_decreasing.generator_matrix() == generator_matrix(small_decreasing.monomials)
    assert small_decreasing.generator_matrix().nrows == 5

"""
Monomial codes C(I): duality, the Reed-Muller sandwich degrees, minimum
distance, the lower triangular affine group LTA(m,2) acting on Boolean
polynomials, orbits, and the count of minimum-weight codewords.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from monocodes.core.config import settings
from monocodes.core.exceptions import (
    IncompatibleMonomialsError,
    InvalidInputError,
    NotDecreasingError,
    ResourceCapError,
    UndefinedQuantityError,
)
from monocodes.domain.gf2 import (
    BinaryMatrix,
    BitVector,
    evaluate,
    generator_matrix,
    in_row_space,
    nullspace_basis,
    rank_gf2,
    row_space_contains,
    row_space_equal,
)
from monocodes.domain.monomial import (
    Monomial,
    MonomialSet,
    complement_set,
    format_monomial,
    is_decreasing,
    is_weakly_decreasing,
    multiplicative_complement,
    reed_muller_set,
    young_partition,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialCode:
    """The linear code spanned by the evaluations of a set of monomials."""

    monomials: MonomialSet

    @classmethod
    def from_bits(cls, m: int, bit_sets: Iterable[int]) -> "MonomialCode":
        return cls(MonomialSet.from_bits(m, bit_sets))

    @property
    def m(self) -> int:
        return self.monomials.m

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    @cached_property
    def is_decreasing(self) -> bool:
        return is_decreasing(self.monomials)

    @cached_property
    def is_weakly_decreasing(self) -> bool:
        return is_weakly_decreasing(self.monomials)

    def generator_matrix(self, max_m: int | None = None) -> BinaryMatrix:
        return generator_matrix(self.monomials, max_m)

    def __str__(self) -> str:
        return f"C(m={self.m}, I={self.monomials})"


class DualParameters(NamedTuple):
    r_minus_dual: int
    r_plus_dual: int
    dual_distance: int


def reed_muller(r: int, m: int) -> MonomialCode:
    return MonomialCode(reed_muller_set(r, m))


def _require_decreasing(code: MonomialCode, what: str) -> None:
    if not code.is_decreasing:
        raise NotDecreasingError(f"{what} requires decreasing I")


def _require_nonempty(code: MonomialCode, what: str) -> None:
    if code.dimension == 0:
        raise UndefinedQuantityError(f"{what} is undefined for the zero code (empty I)")


# Duality


def dual(code: MonomialCode) -> MonomialCode:
    """C(I)^perp = C(M_m minus the complements of I), for decreasing I."""
    _require_decreasing(code, "duality formula")
    return MonomialCode(complement_set(code.monomials))


def dual_by_nullspace(code: MonomialCode, max_m: int | None = None) -> BinaryMatrix:
    """Dual code as the nullspace of the generator matrix; the oracle path."""
    cap = max_m if max_m is not None else settings.oracle_max_m
    if code.m > cap:
        raise ResourceCapError("variable count", code.m, cap, "oracle_max_m")
    return nullspace_basis(code.generator_matrix())


def r_plus(code: MonomialCode) -> int:
    """Largest r with x_0 ... x_{r-1} in I."""
    _require_decreasing(code, "r_plus")
    _require_nonempty(code, "r_plus")
    r = 0
    while r < code.m and Monomial(code.m, (1 << (r + 1)) - 1) in code.monomials:
        r += 1
    return r


def r_minus(code: MonomialCode) -> int:
    """Largest r with x_{m-r} ... x_{m-1} in I."""
    _require_decreasing(code, "r_minus")
    _require_nonempty(code, "r_minus")
    full = (1 << code.m) - 1
    r = 0
    while r < code.m and Monomial(code.m, full ^ ((1 << (code.m - r - 1)) - 1)) in code.monomials:
        r += 1
    return r


def sandwich_degrees(code: MonomialCode) -> tuple[int, int]:
    """
    (r_minus, r_plus) from their definition as Reed-Muller containments,
    R(r_minus, m) <= C(I) <= R(r_plus, m), decided by row-space rank tests.
    r_minus is -1 when not even the repetition code is contained.
    """
    _require_nonempty(code, "sandwich degrees")
    if code.m > settings.oracle_max_m:
        raise ResourceCapError("variable count", code.m, settings.oracle_max_m, "oracle_max_m")
    gm = code.generator_matrix()
    upper = next(r for r in range(code.m + 1) if row_space_contains(reed_muller(r, code.m).generator_matrix(), gm))
    lower = -1
    for r in range(code.m + 1):
        if not row_space_contains(gm, reed_muller(r, code.m).generator_matrix()):
            break
        lower = r
    return lower, upper


def min_distance(code: MonomialCode) -> int:
    """2^(m - r_plus)."""
    return 1 << (code.m - r_plus(code))


def dual_parameters(code: MonomialCode) -> DualParameters:
    """r_minus and r_plus of the dual and the dual distance 2^(r_minus + 1)."""
    _require_decreasing(code, "dual parameters")
    _require_nonempty(code, "dual parameters")
    if code.dimension == code.length:
        raise UndefinedQuantityError("dual parameters are undefined: the dual is the zero code")
    rp = r_plus(code)
    rm = r_minus(code)
    return DualParameters(code.m - 1 - rp, code.m - 1 - rm, 1 << (rm + 1))


def weakly_self_dual(code: MonomialCode) -> bool:
    """True iff no f in I has its complement in I, i.e. C(I) is inside its dual."""
    _require_decreasing(code, "weak self-duality criterion")
    if 2 * code.dimension > code.length:
        raise InvalidInputError("condition requires rate <= 1/2", "rate_above_half")
    return all(multiplicative_complement(f) not in code.monomials for f in code.monomials.members)


def is_in_code(vector: BitVector, code: MonomialCode) -> bool:
    if vector.length != code.length:
        return False
    return in_row_space(vector.bits, code.generator_matrix())


# Boolean polynomials


@dataclass(frozen=True, slots=True)
class BooleanPolynomial:
    """An element of F_2[x_0..x_{m-1}]/(x_i^2 - x_i), as a set of monomial bit sets."""

    m: int
    terms: frozenset[int]

    @classmethod
    def zero(cls, m: int) -> "BooleanPolynomial":
        return cls(m, frozenset())

    @classmethod
    def constant(cls, m: int, value: int = 1) -> "BooleanPolynomial":
        return cls(m, frozenset({0}) if value & 1 else frozenset())

    @classmethod
    def from_monomial(cls, g: Monomial) -> "BooleanPolynomial":
        return cls(g.m, frozenset({g.bits}))

    @classmethod
    def from_monomials(cls, m: int, monomials: Iterable[Monomial]) -> "BooleanPolynomial":
        terms: set[int] = set()
        for g in monomials:
            terms ^= {g.bits}
        return cls(m, frozenset(terms))

    def _check(self, other: "BooleanPolynomial") -> None:
        if other.m != self.m:
            raise IncompatibleMonomialsError(self.m, other.m)

    def __add__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        self._check(other)
        return BooleanPolynomial(self.m, self.terms ^ other.terms)

    def __mul__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        self._check(other)
        product: set[int] = set()
        for s in self.terms:
            for t in other.terms:
                product ^= {s | t}
        return BooleanPolynomial(self.m, frozenset(product))

    @property
    def degree(self) -> int:
        return max((t.bit_count() for t in self.terms), default=-1)

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.m, t) for t in sorted(self.terms)]

    def evaluate(self, max_m: int | None = None) -> BitVector:
        bits = 0
        for g in self.monomials():
            bits ^= evaluate(g, max_m).bits
        return BitVector(1 << self.m, bits)

    def substitute(self, lta: "LowerTriangularAffineMap") -> "BooleanPolynomial":
        """P(A x + b)."""
        result = BooleanPolynomial.zero(self.m)
        for g in self.monomials():
            result = result + lta_action(lta, g)
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-t.bit_count(), t))
        return " + ".join(format_monomial(Monomial(self.m, t)) for t in ordered)


# The lower triangular affine group


@dataclass(frozen=True, slots=True)
class LowerTriangularAffineMap:
    """
    x -> A x + b with A unit lower triangular over GF(2).

    `matrix_rows[i]` has bit j set iff a_ij = 1; `translation` has bit i set iff b_i = 1.
    """

    m: int
    matrix_rows: tuple[int, ...]
    translation: int = 0

    def __post_init__(self) -> None:
        if len(self.matrix_rows) != self.m:
            raise InvalidInputError(f"expected {self.m} matrix rows, got {len(self.matrix_rows)}")
        for i, row in enumerate(self.matrix_rows):
            if not (row >> i) & 1:
                raise InvalidInputError(f"a_{i}{i} must be 1")
            if row >> (i + 1):
                raise InvalidInputError(f"row {i} has entries above the diagonal")
        if not 0 <= self.translation < (1 << self.m):
            raise InvalidInputError(f"translation {self.translation} has more than {self.m} bits")

    @classmethod
    def identity(cls, m: int) -> "LowerTriangularAffineMap":
        return cls(m, tuple(1 << i for i in range(m)), 0)

    @classmethod
    def from_arrays(cls, matrix: np.ndarray, translation: np.ndarray) -> "LowerTriangularAffineMap":
        a = np.asarray(matrix, dtype=np.uint8) & 1
        b = np.asarray(translation, dtype=np.uint8) & 1
        rows = tuple(int(sum(int(a[i, j]) << j for j in range(a.shape[1]))) for i in range(a.shape[0]))
        return cls(int(a.shape[0]), rows, int(sum(int(bit) << i for i, bit in enumerate(b))))

    def matrix(self) -> np.ndarray:
        return np.array([[(row >> j) & 1 for j in range(self.m)] for row in self.matrix_rows], dtype=np.uint8)

    def apply(self, point: int) -> int:
        """Image of the evaluation point u (an m-bit integer)."""
        image = self.translation
        for i, row in enumerate(self.matrix_rows):
            image ^= ((row & point).bit_count() & 1) << i
        return image

    def substitution(self, i: int) -> BooleanPolynomial:
        """y_i = x_i + sum_{j<i} a_ij x_j + b_i."""
        terms = {1 << j for j in range(i + 1) if (self.matrix_rows[i] >> j) & 1}
        if (self.translation >> i) & 1:
            terms.add(0)
        return BooleanPolynomial(self.m, frozenset(terms))


def lta_action(lta: LowerTriangularAffineMap, g: Monomial) -> BooleanPolynomial:
    """The product of y_i over i in ind(g), reduced with x_i^2 = x_i."""
    if lta.m != g.m:
        raise IncompatibleMonomialsError(lta.m, g.m)
    result = BooleanPolynomial.constant(g.m)
    for i in g.indices:
        result = result * lta.substitution(i)
    return result


def coordinate_permutation(lta: LowerTriangularAffineMap) -> tuple[int, ...]:
    """u -> A u + b as a permutation of [0, 2^m)."""
    return tuple(lta.apply(u) for u in range(1 << lta.m))


def permute_vector(vector: BitVector, permutation: tuple[int, ...]) -> BitVector:
    """The word whose coordinate u is vector[permutation[u]]."""
    bits = 0
    for u, image in enumerate(permutation):
        if (vector.bits >> image) & 1:
            bits |= 1 << u
    return BitVector(vector.length, bits)


def permuted_generator_matrix(code: MonomialCode, lta: LowerTriangularAffineMap) -> BinaryMatrix:
    perm = coordinate_permutation(lta)
    gm = code.generator_matrix()
    return BinaryMatrix(gm.ncols, tuple(permute_vector(gm.row(i), perm).bits for i in range(gm.nrows)))


def is_lta_invariant(code: MonomialCode, lta: LowerTriangularAffineMap) -> bool:
    """The permuted generator matrix spans the same code."""
    return row_space_equal(code.generator_matrix(), permuted_generator_matrix(code, lta))


def lta_generators(m: int) -> list[LowerTriangularAffineMap]:
    """Transvections x_i -> x_i + x_j (j < i) and translations x_i -> x_i + 1."""
    identity = LowerTriangularAffineMap.identity(m)
    generators = []
    for i in range(m):
        for j in range(i):
            rows = list(identity.matrix_rows)
            rows[i] |= 1 << j
            generators.append(LowerTriangularAffineMap(m, tuple(rows), 0))
        generators.append(LowerTriangularAffineMap(m, identity.matrix_rows, 1 << i))
    return generators


def lta_group_order(m: int) -> int:
    return 1 << (m * (m - 1) // 2 + m)


# Orbits


def orbit_log2_size(g: Monomial) -> int:
    return g.degree + young_partition(g).size


def orbit_size(g: Monomial) -> int:
    """|O_g| = 2^(deg g + |lambda_g|)."""
    return 1 << orbit_log2_size(g)


def orbit_free_entries(g: Monomial) -> list[tuple[int, int | None]]:
    """
    Free coordinates of LTA(m,2)_g: (i, j) for a_ij with i in ind(g), j < i,
    j not in ind(g); (i, None) for b_i with i in ind(g).
    """
    entries: list[tuple[int, int | None]] = []
    for i in g.indices:
        entries.extend((i, j) for j in range(i) if not (g.bits >> j) & 1)
        entries.append((i, None))
    return entries


def orbit_maps(g: Monomial) -> Iterator[LowerTriangularAffineMap]:
    """Every element of LTA(m,2)_g."""
    entries = orbit_free_entries(g)
    identity = LowerTriangularAffineMap.identity(g.m)
    for choice in itertools.product((0, 1), repeat=len(entries)):
        rows = list(identity.matrix_rows)
        translation = 0
        for (i, j), bit in zip(entries, choice, strict=True):
            if not bit:
                continue
            if j is None:
                translation |= 1 << i
            else:
                rows[i] |= 1 << j
        yield LowerTriangularAffineMap(g.m, tuple(rows), translation)


def orbit_enumerate(g: Monomial, max_log2: int | None = None) -> set[BooleanPolynomial]:
    """The orbit of g under LTA(m,2), via the free parameters of LTA(m,2)_g."""
    cap = max_log2 if max_log2 is not None else settings.orbit_max_log2
    size_log2 = orbit_log2_size(g)
    if size_log2 > cap:
        raise ResourceCapError("orbit log2 size", size_log2, cap, "orbit_max_log2")
    return {lta_action(lta, g) for lta in orbit_maps(g)}


def orbit_bruteforce(g: Monomial, max_log2: int | None = None) -> set[BooleanPolynomial]:
    """The orbit of g as the closure under the generators of the whole group."""
    cap = max_log2 if max_log2 is not None else settings.orbit_max_log2
    if orbit_log2_size(g) > cap:
        raise ResourceCapError("orbit log2 size", orbit_log2_size(g), cap, "orbit_max_log2")
    generators = lta_generators(g.m)
    start = BooleanPolynomial.from_monomial(g)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for poly in frontier:
            for gen in generators:
                image = poly.substitute(gen)
                if image not in orbit:
                    orbit.add(image)
                    nxt.append(image)
        frontier = nxt
    return orbit


# Minimum-weight codewords


def min_weight_count(code: MonomialCode) -> int:
    """2^r_plus * sum over g in I of degree r_plus of 2^|lambda_g|."""
    rp = r_plus(code)
    return (1 << rp) * sum(1 << young_partition(g).size for g in code.monomials.of_degree(rp).members)


def min_weight_enumerate(code: MonomialCode, max_words: int | None = None) -> set[BitVector]:
    """Evaluations of the orbits of the degree-r_plus monomials of I."""
    cap = max_words if max_words is not None else settings.min_weight_enumerate_max
    count = min_weight_count(code)
    if count > cap:
        raise ResourceCapError("minimum-weight codeword count", count, cap, "min_weight_enumerate_max")
    if code.m > settings.matrix_max_m:
        raise ResourceCapError("variable count", code.m, settings.matrix_max_m, "matrix_max_m")
    words: set[BitVector] = set()
    for f in code.monomials.of_degree(r_plus(code)):
        words.update(poly.evaluate() for poly in orbit_enumerate(f))
    logger.debug(f"Enumerated {len(words)} minimum-weight codewords of {code}")
    return words


def generator_rank(code: MonomialCode) -> int:
    return rank_gf2(code.generator_matrix())

"""Seeded generators of random inputs: affine maps and decreasing monomial sets."""

import numpy as np

from monocodes.domain.code import LowerTriangularAffineMap, MonomialCode
from monocodes.domain.monomial import Monomial, MonomialSet, decreasing_closure

SeedLike = int | np.random.Generator | None


def _rng(seed: SeedLike) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_lta(m: int, seed: SeedLike = None) -> LowerTriangularAffineMap:
    """Uniform element of LTA(m,2): every strictly-lower a_ij and every b_i is a fair bit."""
    rng = _rng(seed)
    rows = []
    for i in range(m):
        below = rng.integers(0, 2, size=i) if i else np.zeros(0, dtype=np.int64)
        rows.append((1 << i) | sum(int(bit) << j for j, bit in enumerate(below)))
    translation = sum(int(bit) << i for i, bit in enumerate(rng.integers(0, 2, size=m)))
    return LowerTriangularAffineMap(m, tuple(rows), translation)


def random_monomial(m: int, seed: SeedLike = None, degree: int | None = None) -> Monomial:
    rng = _rng(seed)
    d = int(rng.integers(0, m + 1)) if degree is None else degree
    return Monomial.from_indices(m, (int(i) for i in rng.choice(m, size=d, replace=False)))


def random_monomial_set(m: int, seed: SeedLike = None) -> MonomialSet:
    """Any subset of M_m, each monomial kept with probability 1/2."""
    rng = _rng(seed)
    keep = rng.integers(0, 2, size=1 << m)
    return MonomialSet.from_bits(m, (b for b in range(1 << m) if keep[b]))


def random_decreasing_set(m: int, seed: SeedLike = None, max_generators: int | None = None) -> MonomialSet:
    """
    Close a few random monomials downward; generator degrees are drawn from Binomial(m, 1/2).
    """
    rng = _rng(seed)
    count = int(rng.integers(1, (max_generators or m + 1) + 1))
    generators = [random_monomial(m, rng, int(rng.binomial(m, 0.5))) for _ in range(count)]
    return decreasing_closure(MonomialSet.of(m, generators))


def random_decreasing_code(m: int, seed: SeedLike = None, max_generators: int | None = None) -> MonomialCode:
    return MonomialCode(random_decreasing_set(m, seed, max_generators))

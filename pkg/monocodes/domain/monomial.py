"""
Square-free monomials over x_0..x_{m-1}, the divisibility order and the
monomial order, decreasing sets, multiplicative complements and the Young
diagram attached to a monomial.

A monomial is stored as a bit set: bit j is set iff x_j divides it. The same
integer is the row index of the monomial in the Kronecker generator matrix.
"""

import itertools
import logging
import re
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import total_ordering

from monocodes.core.config import settings
from monocodes.core.exceptions import IncompatibleMonomialsError, InvalidInputError, ResourceCapError

logger = logging.getLogger(__name__)

_VARIABLE_TOKEN = re.compile(r"x_?(\d+)")
_PRODUCT_SYNTAX = re.compile(r"^x_?\d+(\*?x_?\d+)*$")


def check_variable_count(m: int) -> None:
    if not 1 <= m <= settings.max_variables:
        raise InvalidInputError(f"variable count must lie in [1, {settings.max_variables}], got {m}")


@total_ordering
@dataclass(frozen=True, slots=True)
class Monomial:
    """A square-free monomial in m variables, x_i^2 identified with x_i."""

    m: int
    bits: int

    def __post_init__(self) -> None:
        check_variable_count(self.m)
        if not 0 <= self.bits < (1 << self.m):
            raise InvalidInputError(f"bit set {self.bits} does not describe a monomial in {self.m} variables")

    @classmethod
    def one(cls, m: int) -> "Monomial":
        return cls(m, 0)

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> "Monomial":
        bits = 0
        for i in indices:
            if not 0 <= i < m:
                raise InvalidInputError(f"variable x{i} does not exist when m={m}")
            bits |= 1 << i
        return cls(m, bits)

    @property
    def indices(self) -> tuple[int, ...]:
        """ind(g) in increasing order."""
        return tuple(i for i in range(self.m) if (self.bits >> i) & 1)

    @property
    def degree(self) -> int:
        return self.bits.bit_count()

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_compatible(self, other)
        return Monomial(self.m, self.bits | other.bits)

    def __lt__(self, other: "Monomial") -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.m, self.bits) < (other.m, other.bits)

    def __str__(self) -> str:
        return format_monomial(self)


@dataclass(frozen=True, slots=True)
class MonomialSet:
    """A finite set of monomials sharing the same variable count."""

    m: int
    members: frozenset[Monomial]

    def __post_init__(self) -> None:
        check_variable_count(self.m)
        for g in self.members:
            if g.m != self.m:
                raise IncompatibleMonomialsError(self.m, g.m)

    @classmethod
    def of(cls, m: int, monomials: Iterable[Monomial]) -> "MonomialSet":
        return cls(m, frozenset(monomials))

    @classmethod
    def from_bits(cls, m: int, bit_sets: Iterable[int]) -> "MonomialSet":
        return cls(m, frozenset(Monomial(m, b) for b in bit_sets))

    @classmethod
    def empty(cls, m: int) -> "MonomialSet":
        return cls(m, frozenset())

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def bit_sets(self) -> list[int]:
        """Canonical form: bit-set integers in ascending order."""
        return sorted(g.bits for g in self.members)

    def of_degree(self, d: int) -> "MonomialSet":
        return MonomialSet(self.m, frozenset(g for g in self.members if g.degree == d))

    def max_degree(self) -> int:
        return max((g.degree for g in self.members), default=-1)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self) + "}"


@dataclass(frozen=True, slots=True)
class Partition:
    """A Young diagram with weakly decreasing positive parts inside a rows x width grid."""

    parts: tuple[int, ...]
    rows: int
    width: int

    def __post_init__(self) -> None:
        if self.rows < 0 or self.width < 0:
            raise InvalidInputError("partition grid dimensions must be nonnegative")
        if len(self.parts) > self.rows:
            raise InvalidInputError(f"partition {self.parts} has more than {self.rows} parts")
        if any(p <= 0 or p > self.width for p in self.parts):
            raise InvalidInputError(f"partition {self.parts} does not fit in width {self.width}")
        if any(a < b for a, b in itertools.pairwise(self.parts)):
            raise InvalidInputError(f"partition parts must be weakly decreasing, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple[int, ...]:
        """Parts padded with zeros to exactly `rows` entries."""
        return self.parts + (0,) * (self.rows - len(self.parts))


def _check_compatible(f: Monomial, g: Monomial) -> None:
    if f.m != g.m:
        raise IncompatibleMonomialsError(f.m, g.m)


def _check_exhaustive(m: int, what: str) -> None:
    if m > settings.exhaustive_max_m:
        raise ResourceCapError(f"{what}: variable count", m, settings.exhaustive_max_m, "exhaustive_max_m")


# Text syntax


def format_monomial(g: Monomial) -> str:
    """Render as "1" or "x0*x2*x5" (ascending indices)."""
    if g.bits == 0:
        return "1"
    return "*".join(f"x{i}" for i in g.indices)


def parse_monomial(text: str, m: int) -> Monomial:
    """
    Parse a monomial written as "1", a product such as "x3*x1*x0" / "x3x1x0"
    (any order, repeated variables collapse since x_i^2 = x_i), or a decimal
    bit-set integer. "1" always means the constant monomial.
    """
    compact = "".join(text.split())
    if compact == "1":
        return Monomial.one(m)
    if compact.isdigit():
        return Monomial(m, int(compact))
    if not _PRODUCT_SYNTAX.match(compact):
        raise InvalidInputError(f"cannot parse monomial {text!r}")
    return Monomial.from_indices(m, (int(tok) for tok in _VARIABLE_TOKEN.findall(compact)))


# Basic arithmetic and enumeration


def divides(f: Monomial, g: Monomial) -> bool:
    _check_compatible(f, g)
    return f.bits & ~g.bits == 0


def gcd(f: Monomial, g: Monomial) -> Monomial:
    _check_compatible(f, g)
    return Monomial(f.m, f.bits & g.bits)


def all_monomials(m: int) -> list[Monomial]:
    """M_m in bit-set order."""
    _check_exhaustive(m, "all_monomials")
    return [Monomial(m, b) for b in range(1 << m)]


def monomials_of_degree(m: int, d: int) -> list[Monomial]:
    return [Monomial.from_indices(m, c) for c in itertools.combinations(range(m), d)]


# Orders


def weak_leq(f: Monomial, g: Monomial) -> bool:
    """f divides g."""
    return divides(f, g)


def leq(f: Monomial, g: Monomial) -> bool:
    """
    The monomial order: for equal degrees the sorted index tuples compare
    componentwise; otherwise f must be below some divisor of g of the same
    degree as f, and the best such divisor keeps the largest indices of g.
    """
    _check_compatible(f, g)
    fi, gi = f.indices, g.indices
    if len(fi) > len(gi):
        return False
    top = gi[len(gi) - len(fi):]
    return all(a <= b for a, b in zip(fi, top, strict=True))


def leq_definitional(f: Monomial, g: Monomial) -> bool:
    """The order by its definition: search all divisors of g of degree deg f."""
    _check_compatible(f, g)
    fi, gi = f.indices, g.indices
    if len(fi) > len(gi):
        return False
    return any(all(a <= b for a, b in zip(fi, sub, strict=True)) for sub in itertools.combinations(gi, len(fi)))


def weak_predecessors(g: Monomial) -> Iterator[Monomial]:
    """g with one variable removed."""
    for i in g.indices:
        yield Monomial(g.m, g.bits & ~(1 << i))


def immediate_predecessors(g: Monomial) -> Iterator[Monomial]:
    """
    Generators of the transitive reduction of the monomial order below g:
    drop one variable, or lower one index x_i -> x_{i-1} when x_{i-1} is absent.
    """
    yield from weak_predecessors(g)
    for i in g.indices:
        if i > 0 and not (g.bits >> (i - 1)) & 1:
            yield Monomial(g.m, (g.bits & ~(1 << i)) | (1 << (i - 1)))


def is_decreasing(monomials: MonomialSet) -> bool:
    return all(p in monomials for f in monomials.members for p in immediate_predecessors(f))


def is_weakly_decreasing(monomials: MonomialSet) -> bool:
    return all(p in monomials for f in monomials.members for p in weak_predecessors(f))


def is_decreasing_definitional(monomials: MonomialSet) -> bool:
    """Quadratic check straight from the definition, over all of M_m."""
    universe = all_monomials(monomials.m)
    return all(g in monomials for f in monomials.members for g in universe if leq(g, f))


def decreasing_closure(monomials: MonomialSet) -> MonomialSet:
    """Smallest decreasing set containing the given monomials."""
    _check_exhaustive(monomials.m, "decreasing_closure")
    seen: set[Monomial] = set(monomials.members)
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        for p in immediate_predecessors(f):
            if p not in seen:
                seen.add(p)
                queue.append(p)
    logger.debug(f"Closed {len(monomials)} generators into {len(seen)} monomials (m={monomials.m})")
    return MonomialSet(monomials.m, frozenset(seen))


def maximal_elements(monomials: MonomialSet) -> MonomialSet:
    """Monomials of the set not strictly below another member."""
    members = list(monomials.members)
    return MonomialSet(
        monomials.m,
        frozenset(f for f in members if not any(g != f and leq(f, g) for g in members)),
    )


def interval(f: Monomial, h: Monomial) -> MonomialSet:
    """[f, h] = {g : f <= g <= h}."""
    if not leq(f, h):
        raise InvalidInputError(f"empty interval: {f} is not below {h}")
    below_h = decreasing_closure(MonomialSet.of(h.m, [h]))
    return MonomialSet(h.m, frozenset(g for g in below_h.members if leq(f, g)))


def reed_muller_set(r: int, m: int) -> MonomialSet:
    """All monomials of degree at most r."""
    if not 0 <= r <= m:
        raise InvalidInputError(f"Reed-Muller order must lie in [0, {m}], got {r}")
    return MonomialSet.of(m, (g for d in range(r + 1) for g in monomials_of_degree(m, d)))


# Complements


def multiplicative_complement(g: Monomial) -> Monomial:
    """The product of the variables absent from g."""
    return Monomial(g.m, ((1 << g.m) - 1) ^ g.bits)


def complement_set(monomials: MonomialSet) -> MonomialSet:
    """M_m minus the complements of the members."""
    _check_exhaustive(monomials.m, "complement_set")
    full = (1 << monomials.m) - 1
    excluded = {full ^ g.bits for g in monomials.members}
    return MonomialSet.from_bits(monomials.m, (b for b in range(1 << monomials.m) if b not in excluded))


# Young diagrams


def young_partition(g: Monomial) -> Partition:
    """lambda_g = (i_d - (d-1), ..., i_1 - 0) inside the d x (m-d) grid."""
    idx = g.indices
    d = len(idx)
    parts = tuple(p for p in (idx[k] - k for k in reversed(range(d))) if p > 0)
    return Partition(parts, d, g.m - d)


def monomial_from_partition(partition: Partition, m: int) -> Monomial:
    """Inverse of young_partition for the rows x (m - rows) grid."""
    if partition.rows + partition.width != m:
        raise InvalidInputError(f"partition grid {partition.rows}x{partition.width} does not match m={m}")
    ascending = tuple(reversed(partition.padded()))
    return Monomial.from_indices(m, (part + k for k, part in enumerate(ascending)))


def enumerate_partitions(rows: int, width: int) -> Iterator[Partition]:
    """Every partition fitting in a rows x width grid."""

    def extend(prefix: tuple[int, ...], remaining: int, bound: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(bound, -1, -1):
            yield from extend(prefix + (part,), remaining - 1, part)

    for parts in extend((), rows, width):
        yield Partition(tuple(p for p in parts if p > 0), rows, width)


def gaussian_binomial(m: int, r: int) -> int:
    """Number of r-dimensional subspaces of F_2^m, in exact integer arithmetic."""
    if m < 0 or not 0 <= r <= m:
        raise InvalidInputError(f"gaussian binomial needs 0 <= r <= m, got m={m}, r={r}")
    numerator = 1
    denominator = 1
    for i in range(r):
        numerator *= (1 << m) - (1 << i)
        denominator *= (1 << r) - (1 << i)
    return numerator // denominator

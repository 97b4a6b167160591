"""
GF(2) linear algebra on bit-packed rows.

Vectors of length n = 2^m are Python ints: bit u holds the coordinate at the
evaluation point u = u_0 + 2 u_1 + ... + 2^{m-1} u_{m-1}.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from monocodes.core.config import settings
from monocodes.core.exceptions import InvalidInputError, ResourceCapError, UndefinedQuantityError
from monocodes.domain.monomial import Monomial, MonomialSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BitVector:
    """A binary word of fixed length, packed into an int."""

    length: int
    bits: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, u: int) -> int:
        return (self.bits >> u) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise InvalidInputError(f"length mismatch: {self.length} != {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def __str__(self) -> str:
        return format_row(self.bits, self.length)


@dataclass(frozen=True, slots=True)
class BinaryMatrix:
    """A rectangular binary matrix stored as packed rows."""

    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        limit = 1 << self.ncols
        for r in self.rows:
            if not 0 <= r < limit:
                raise InvalidInputError(f"row {r} is wider than {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def to_numpy(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i] = unpack_row(r, self.ncols)
        return out

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> "BinaryMatrix":
        array = np.asarray(array, dtype=np.uint8) & 1
        return cls(int(array.shape[1]), tuple(pack_row(r) for r in array))


# Packing


def pack_row(bits: np.ndarray) -> int:
    """Pack a 0/1 array (index = column) into an int."""
    return int.from_bytes(np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little").tobytes(), "little")


def unpack_row(value: int, ncols: int) -> np.ndarray:
    raw = np.frombuffer(value.to_bytes((ncols + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:ncols]


def format_row(value: int, ncols: int) -> str:
    return bin(value)[2:].zfill(ncols)[::-1][:ncols] if ncols else ""


def format_matrix(matrix: BinaryMatrix) -> str:
    """One row per line, '0'/'1' characters, column j = evaluation point j."""
    return "\n".join(format_row(r, matrix.ncols) for r in matrix.rows)


def parse_matrix(text: str) -> BinaryMatrix:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        return BinaryMatrix(0, ())
    ncols = len(lines[0])
    rows: list[int] = []
    for number, line in enumerate(lines, start=1):
        if len(line) != ncols or set(line) - {"0", "1"}:
            raise InvalidInputError(f"matrix line {number}: expected {ncols} characters of '0'/'1'")
        rows.append(int(line[::-1], 2))
    return BinaryMatrix(ncols, tuple(rows))


# Evaluation and generator matrices


def _check_matrix_m(m: int, max_m: int | None = None, setting: str = "matrix_max_m") -> None:
    cap = max_m if max_m is not None else getattr(settings, setting)
    if m > cap:
        raise ResourceCapError("variable count", m, cap, setting)


@lru_cache(maxsize=256)
def _variable_mask(m: int, i: int) -> int:
    points = np.arange(1 << m, dtype=np.int64)
    return pack_row(((points >> i) & 1).astype(np.uint8))


def weight(v: int) -> int:
    return v.bit_count()


def evaluate(g: Monomial, max_m: int | None = None) -> BitVector:
    """ev(g): bit u is the product of u_i over i in ind(g)."""
    _check_matrix_m(g.m, max_m)
    n = 1 << g.m
    bits = (1 << n) - 1
    for i in g.indices:
        bits &= _variable_mask(g.m, i)
    return BitVector(n, bits)


def generator_matrix(monomials: MonomialSet, max_m: int | None = None) -> BinaryMatrix:
    """One row ev(g) per monomial, rows sorted by bit-set integer."""
    _check_matrix_m(monomials.m, max_m)
    return BinaryMatrix(1 << monomials.m, tuple(evaluate(g, max_m).bits for g in monomials))


def kronecker_gm(m: int, max_m: int | None = None) -> BinaryMatrix:
    """The m-fold Kronecker power of [[1, 1], [0, 1]], built densely."""
    _check_matrix_m(m, max_m, "dense_matrix_max_m")
    base = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    gm = np.ones((1, 1), dtype=np.uint8)
    for _ in range(m):
        gm = np.kron(base, gm)
    return BinaryMatrix.from_numpy(gm)


def encode(message: int, matrix: BinaryMatrix) -> int:
    """message . matrix, where bit i of message selects row i."""
    word = 0
    for i, r in enumerate(matrix.rows):
        if (message >> i) & 1:
            word ^= r
    return word


# Rank, nullspace, row spaces


def rref(matrix: BinaryMatrix) -> tuple[list[int], list[int]]:
    """
    Reduced row echelon form over GF(2).

    Returns:
        (rref_rows, pivots): nonzero rows in pivot order and their pivot columns
    """
    mat = list(matrix.rows)
    nrows = len(mat)
    pivots: list[int] = []
    r = 0
    for c in range(matrix.ncols):
        if r >= nrows:
            break
        bit = 1 << c
        pivot_row = next((i for i in range(r, nrows) if mat[i] & bit), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivots.append(c)
        pivot_val = mat[r]
        for i in range(nrows):
            if i != r and mat[i] & bit:
                mat[i] ^= pivot_val
        r += 1
    return mat[:r], pivots


def rank_gf2(matrix: BinaryMatrix) -> int:
    return len(rref(matrix)[0])


def nullspace_basis(matrix: BinaryMatrix) -> BinaryMatrix:
    """Basis of {v : M v^T = 0}, one vector per free column."""
    rows, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis: list[int] = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, pcol in zip(rows, pivots, strict=True):
            if (row >> free) & 1:
                v |= 1 << pcol
        basis.append(v)
    return BinaryMatrix(matrix.ncols, tuple(basis))


def stack(*matrices: BinaryMatrix) -> BinaryMatrix:
    ncols = {mat.ncols for mat in matrices if mat.nrows}
    if len(ncols) > 1:
        raise InvalidInputError(f"cannot stack matrices with column counts {sorted(ncols)}")
    width = ncols.pop() if ncols else matrices[0].ncols
    return BinaryMatrix(width, tuple(r for mat in matrices for r in mat.rows))


def row_space_contains(outer: BinaryMatrix, inner: BinaryMatrix) -> bool:
    """True iff every row of `inner` lies in the row space of `outer`."""
    return rank_gf2(stack(outer, inner)) == rank_gf2(outer)


def row_space_equal(first: BinaryMatrix, second: BinaryMatrix) -> bool:
    joint = rank_gf2(stack(first, second))
    return joint == rank_gf2(first) == rank_gf2(second)


def in_row_space(vector: int, matrix: BinaryMatrix) -> bool:
    """Augmented-rank membership test."""
    return rank_gf2(BinaryMatrix(matrix.ncols, matrix.rows + (vector,))) == rank_gf2(matrix)


# Exhaustive enumeration


def _enumeration_basis(matrix: BinaryMatrix, max_dim: int | None) -> list[int]:
    basis, _ = rref(matrix)
    cap = max_dim if max_dim is not None else settings.enumeration_max_dim
    if len(basis) > cap:
        raise ResourceCapError("code dimension", len(basis), cap, "enumeration_max_dim")
    return basis


def gray_code_words(basis: Sequence[int]) -> Iterator[int]:
    """All nonzero combinations of the basis, one XOR per step."""
    word = 0
    prev_gray = 0
    for t in range(1, 1 << len(basis)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev_gray
        word ^= basis[diff.bit_length() - 1]
        prev_gray = gray
        yield word


def min_weight_bruteforce(matrix: BinaryMatrix, max_dim: int | None = None) -> tuple[int, int]:
    """
    Exact minimum nonzero weight of the row space and the number of words attaining it.

    Raises:
        UndefinedQuantityError: if the row space is {0}
        ResourceCapError: if the dimension exceeds enumeration_max_dim
    """
    basis = _enumeration_basis(matrix, max_dim)
    if not basis:
        raise UndefinedQuantityError("no nonzero codeword")
    best = matrix.ncols + 1
    count = 0
    for word in gray_code_words(basis):
        w = word.bit_count()
        if w < best:
            best, count = w, 1
        elif w == best:
            count += 1
    logger.debug(f"Enumerated {(1 << len(basis)) - 1} nonzero words: d={best}, A_d={count}")
    return best, count


def min_weight_words_bruteforce(matrix: BinaryMatrix, max_dim: int | None = None) -> set[int]:
    """The set of minimum-weight words of the row space."""
    basis = _enumeration_basis(matrix, max_dim)
    if not basis:
        raise UndefinedQuantityError("no nonzero codeword")
    best = matrix.ncols + 1
    words: set[int] = set()
    for word in gray_code_words(basis):
        w = word.bit_count()
        if w < best:
            best, words = w, {word}
        elif w == best:
            words.add(word)
    return words


def span(rows: Iterable[int]) -> set[int]:
    """Every word of the row space, zero included (small inputs only)."""
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words

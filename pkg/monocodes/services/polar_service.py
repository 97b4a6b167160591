import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from monocodes.core.config import settings
from monocodes.core.exceptions import InvalidInputError, ResourceCapError
from monocodes.domain.channel import SymmetricChannel, bhattacharyya, transform_minus, transform_plus
from monocodes.domain.code import MonomialCode
from monocodes.domain.monomial import Monomial, MonomialSet

logger = logging.getLogger(__name__)

# Elements per (samples x 2^m) array in one Monte-Carlo batch.
_MC_BATCH_ELEMENTS = 1 << 22


@dataclass(frozen=True, slots=True)
class RankedMonomial:
    monomial: Monomial
    bhattacharyya: float


@dataclass(frozen=True, slots=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int


@dataclass(frozen=True, slots=True)
class _RunningStats:
    count: int
    mean: float
    m2: float

    def merge(self, other: "_RunningStats") -> "_RunningStats":
        if not other.count:
            return self
        if not self.count:
            return other
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / total
        m2 = self.m2 + other.m2 + delta * delta * self.count * other.count / total
        return _RunningStats(total, mean, m2)

    @classmethod
    def of(cls, values: np.ndarray) -> "_RunningStats":
        if not values.size:
            return cls(0, 0.0, 0.0)
        mean = float(values.mean())
        return cls(int(values.size), mean, float(((values - mean) ** 2).sum()))


def tie_break_key(g: Monomial) -> tuple[int, tuple[int, ...]]:
    """Degree, then sorted index tuple; compatible with the monomial order."""
    return g.degree, g.indices


def same_bhattacharyya(a: float, b: float) -> bool:
    """
    Equal up to ranking_tolerance, relative to the values themselves. Subnormal
    values carry too few digits to be ordered and all count as equal.
    """
    return math.isclose(a, b, rel_tol=settings.ranking_tolerance, abs_tol=sys.float_info.min)


class PolarConstructionService:
    """
    Service for polar code construction over one channel
    """

    def __init__(self, channel: SymmetricChannel):
        self.channel = channel

    def synthesize_all(self, m: int) -> dict[Monomial, float]:
        """
        Bhattacharyya value of every bit channel W^g, g in M_m, walking the
        sign tree once so that each prefix of transforms is computed a single time.
        """
        if m > settings.exhaustive_max_m:
            raise ResourceCapError("variable count", m, settings.exhaustive_max_m, "exhaustive_max_m")
        values: dict[Monomial, float] = {}

        def descend(channel: SymmetricChannel, level: int, bits: int) -> None:
            if level < 0:
                values[Monomial(m, bits)] = bhattacharyya(channel)
                return
            descend(transform_plus(channel), level - 1, bits)
            descend(transform_minus(channel), level - 1, bits | (1 << level))

        descend(self.channel, m - 1, 0)
        logger.debug(f"Synthesised {len(values)} bit channels for m={m}")
        return values

    def rank_monomials(self, m: int) -> list[RankedMonomial]:
        """
        All monomials by increasing Bhattacharyya value, ties by degree then index tuple.
        A run of values equal to its first member up to ranking_tolerance counts as
        one tie, so rounding noise cannot override the tie-break; tiny values are
        still told apart since the tolerance is relative.
        """
        values = self.synthesize_all(m)
        by_value = sorted(values, key=lambda g: (values[g], *tie_break_key(g)))
        ordered: list[Monomial] = []
        tied: list[Monomial] = []
        for g in by_value:
            if tied and not same_bhattacharyya(values[tied[0]], values[g]):
                ordered.extend(sorted(tied, key=tie_break_key))
                tied = []
            tied.append(g)
        ordered.extend(sorted(tied, key=tie_break_key))
        return [RankedMonomial(g, values[g]) for g in ordered]

    def construct(self, m: int, k: int) -> MonomialCode:
        """The polar code of length 2^m and dimension k: the k most reliable bit channels."""
        return self.construct_ranked(m, k)[0]

    def construct_ranked(self, m: int, k: int) -> tuple[MonomialCode, list[RankedMonomial]]:
        """The polar code together with the full ranking it was selected from."""
        if not 0 <= k <= 1 << m:
            raise InvalidInputError(f"dimension k must lie in [0, {1 << m}], got {k}")
        if k == 0:
            logger.warning(f"Constructing the zero code (k=0, m={m})")
        ranking = self.rank_monomials(m)
        code = MonomialCode(MonomialSet.of(m, (entry.monomial for entry in ranking[:k])))
        logger.info(
            f"Constructed polar code m={m}, k={k}",
            extra={"worst_bhattacharyya": ranking[k - 1].bhattacharyya if k else None},
        )
        return code, ranking

    def information_set(self, m: int, k: int) -> list[int]:
        """Row indices of G_m carrying information, ascending."""
        return self.construct(m, k).monomials.bit_sets()

    def frozen_set(self, m: int, k: int) -> list[int]:
        info = set(self.information_set(m, k))
        return [i for i in range(1 << m) if i not in info]

    def monte_carlo_bhattacharyya(self, g: Monomial, samples: int, seed: int | None = None) -> MonteCarloEstimate:
        """
        Estimate B(W^g) by simulating the bit channel directly: a uniform word
        indexed by monomials, coordinate g replaced by the input bit, encoded with
        G_m and sent through W; the receiver also learns a_h for every h > g
        (as integers). The estimator is the mean of sqrt(L(wrong bit) / L(sent bit)).
        """
        if g.m > settings.matrix_max_m:
            raise ResourceCapError("variable count", g.m, settings.matrix_max_m, "matrix_max_m")
        if samples < 1:
            raise InvalidInputError(f"sample count must be positive, got {samples}")
        root = np.random.SeedSequence(settings.default_seed if seed is None else seed)
        chunk = settings.mc_chunk_size
        sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]
        streams = root.spawn(len(sizes))

        def run(job: tuple[int, np.random.SeedSequence]) -> _RunningStats:
            size, stream = job
            return self._simulate_chunk(g, size, np.random.default_rng(stream))

        with ThreadPoolExecutor(max_workers=settings.mc_max_workers) as pool:
            parts = list(pool.map(run, zip(sizes, streams, strict=True)))

        stats = _RunningStats(0, 0.0, 0.0)
        for part in parts:
            stats = stats.merge(part)
        variance = stats.m2 / (stats.count - 1) if stats.count > 1 else 0.0
        result = MonteCarloEstimate(stats.mean, math.sqrt(variance / stats.count), stats.count)
        logger.info(f"Monte-Carlo estimate for {g}: {result.estimate:.6g} +/- {result.stderr:.2g} ({samples} samples)")
        return result

    def _simulate_chunk(self, g: Monomial, size: int, rng: np.random.Generator) -> _RunningStats:
        n = 1 << g.m
        batch = max(1, _MC_BATCH_ELEMENTS // n)
        cdf0 = np.cumsum(self.channel.p0) / self.channel.p0.sum()
        cdf1 = np.cumsum(self.channel.p1) / self.channel.p1.sum()
        last = self.channel.alphabet_size - 1
        stats = _RunningStats(0, 0.0, 0.0)
        for start in range(0, size, batch):
            rows = min(batch, size - start)
            words = rng.integers(0, 2, size=(rows, n), dtype=np.uint8)
            sent = rng.integers(0, 2, size=rows, dtype=np.uint8)
            words[:, g.bits] = sent
            codewords = encode_batch(words, g.m)
            draws = rng.random(size=(rows, n))
            outputs = np.where(
                codewords == 0,
                np.minimum(np.searchsorted(cdf0, draws, side="right"), last),
                np.minimum(np.searchsorted(cdf1, draws, side="right"), last),
            )
            lik0, lik1 = bit_channel_likelihoods(self.channel.p0[outputs], self.channel.p1[outputs], words, g.bits, g.m)
            right = np.where(sent == 0, lik0, lik1)
            wrong = np.where(sent == 0, lik1, lik0)
            stats = stats.merge(_RunningStats.of(np.sqrt(wrong / right)))
        return stats


def encode_batch(words: np.ndarray, m: int) -> np.ndarray:
    """Row-wise word . G_m over GF(2): coordinate u is the XOR of word[h] over bit sets h inside u."""
    out = words.copy()
    rows = out.shape[0]
    for i in range(m):
        step = 1 << i
        view = out.reshape(rows, -1, 2, step)
        view[:, :, 1, :] ^= view[:, :, 0, :]
    return out


def bit_channel_likelihoods(
    lik0: np.ndarray, lik1: np.ndarray, words: np.ndarray, target: int, m: int
) -> tuple[np.ndarray, np.ndarray]:
    """
    Likelihoods of the target coordinate being 0 / 1 given channel likelihoods of
    every codeword position and the word entries above `target`. Entries below
    `target` are unknown and uniform. Each step splits on the top variable: if the
    target contains it, the lower half of the word is unknown and the pair of
    halves acts as one W- use; otherwise the upper half is known and it acts as W+.
    """
    lik0 = lik0.astype(np.float64)
    lik1 = lik1.astype(np.float64)
    while m > 0:
        half = 1 << (m - 1)
        low0, high0 = lik0[:, :half], lik0[:, half:]
        low1, high1 = lik1[:, :half], lik1[:, half:]
        if target & half:
            new0 = low0 * high0 + low1 * high1
            new1 = low0 * high1 + low1 * high0
            words = words[:, half:]
            target -= half
        else:
            known = encode_batch(words[:, half:], m - 1).astype(bool)
            new0 = low0 * np.where(known, high1, high0)
            new1 = low1 * np.where(known, high0, high1)
            words = words[:, :half]
        total = new0 + new1
        total[total == 0] = 1.0
        lik0, lik1 = new0 / total, new1 / total
        m -= 1
    return lik0[:, 0], lik1[:, 0]


def rank_monomials(channel: SymmetricChannel, m: int) -> list[RankedMonomial]:
    return PolarConstructionService(channel).rank_monomials(m)


def construct_polar(channel: SymmetricChannel, m: int, k: int) -> MonomialCode:
    return PolarConstructionService(channel).construct(m, k)


def monte_carlo_bhattacharyya(channel: SymmetricChannel, g: Monomial, samples: int, seed: int | None = None) -> MonteCarloEstimate:
    return PolarConstructionService(channel).monte_carlo_bhattacharyya(g, samples, seed)

"""
Binary-input symmetric channels with finite output alphabets, the two
polarisation transforms, output merging and the Bhattacharyya parameter.

A channel is a pair of probability vectors p0[y] = W(y|0), p1[y] = W(y|1)
together with an involution pi of the outputs such that p1[y] = p0[pi[y]].
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from monocodes.core.config import settings
from monocodes.core.exceptions import ChannelError, InvalidInputError, ResourceCapError
from monocodes.domain.enums import Sign
from monocodes.domain.monomial import Monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SymmetricChannel:
    """A binary-input symmetric channel given by its transition table."""

    p0: np.ndarray
    p1: np.ndarray
    involution: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        p0 = np.array(self.p0, dtype=np.float64)
        p1 = np.array(self.p1, dtype=np.float64)
        involution = np.array(self.involution, dtype=np.int64)
        for array in (p0, p1, involution):
            array.setflags(write=False)
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "involution", involution)
        self._validate()

    def _validate(self) -> None:
        size = self.p0.shape[0]
        if self.p0.ndim != 1 or self.p1.shape != self.p0.shape or self.involution.shape != self.p0.shape:
            raise ChannelError("p0, p1 and involution must be vectors of the same length")
        if size == 0:
            raise ChannelError("output alphabet is empty")
        if self.labels is not None and len(self.labels) != size:
            raise ChannelError("labels must name every output symbol")
        if (self.p0 < 0).any() or (self.p1 < 0).any():
            raise ChannelError("transition probabilities must be nonnegative")
        tol = settings.probability_tolerance
        for name, probs in (("W(.|0)", self.p0), ("W(.|1)", self.p1)):
            if abs(float(probs.sum()) - 1.0) > tol:
                raise ChannelError(f"{name} sums to {float(probs.sum())!r}, not 1 within {tol}")
        if not np.array_equal(np.sort(self.involution), np.arange(size)):
            raise ChannelError("involution is not a permutation of the output alphabet")
        if not np.array_equal(self.involution[self.involution], np.arange(size)):
            raise ChannelError("involution composed with itself is not the identity")
        if not np.array_equal(self.p1, self.p0[self.involution]):
            raise ChannelError("W(y|1) must equal W(pi(y)|0) for every output y")

    @property
    def alphabet_size(self) -> int:
        return int(self.p0.shape[0])

    def __repr__(self) -> str:
        return f"SymmetricChannel(alphabet_size={self.alphabet_size}, B={bhattacharyya(self):.6g})"


@dataclass(frozen=True, slots=True)
class SignSequence:
    """signs[i] is u_i: '-' when x_i divides the monomial, '+' otherwise."""

    m: int
    signs: tuple[Sign, ...]

    def application_order(self) -> tuple[Sign, ...]:
        """u_{m-1} first, down to u_0."""
        return tuple(reversed(self.signs))

    def __str__(self) -> str:
        return "".join(s.value for s in self.application_order())


# Construction


def make_bec(p: float) -> SymmetricChannel:
    """Binary erasure channel with erasure probability p over outputs {0, ?, 1}."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"erasure probability must lie in [0, 1], got {p}")
    return SymmetricChannel(
        p0=np.array([1.0 - p, p, 0.0]),
        p1=np.array([0.0, p, 1.0 - p]),
        involution=np.array([2, 1, 0]),
        labels=("0", "?", "1"),
    )


def make_bsc(p: float) -> SymmetricChannel:
    """Binary symmetric channel with crossover probability p."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"crossover probability must lie in [0, 1], got {p}")
    return SymmetricChannel(
        p0=np.array([1.0 - p, p]),
        p1=np.array([p, 1.0 - p]),
        involution=np.array([1, 0]),
        labels=("0", "1"),
    )


def from_table(p0: Sequence[float], p1: Sequence[float], involution: Sequence[int], labels: Sequence[str] | None = None) -> SymmetricChannel:
    """
    Build a channel from a user table. W(y|1) is accepted when it matches
    W(pi(y)|0) within probability_tolerance, and is then stored as exactly p0[pi].
    """
    p0_arr = np.asarray(p0, dtype=np.float64)
    p1_arr = np.asarray(p1, dtype=np.float64)
    pi = np.asarray(involution, dtype=np.int64)
    if p0_arr.shape != p1_arr.shape or pi.shape != p0_arr.shape:
        raise ChannelError("p0, p1 and involution must have the same length")
    if pi.size and (pi.min() < 0 or pi.max() >= pi.size):
        raise ChannelError("involution entries must index the output alphabet")
    if not np.allclose(p1_arr, p0_arr[pi], rtol=0.0, atol=settings.probability_tolerance):
        raise ChannelError("W(y|1) must equal W(pi(y)|0) for every output y")
    return SymmetricChannel(p0_arr, p0_arr[pi], pi, tuple(labels) if labels is not None else None)


# Parameters


def bhattacharyya(channel: SymmetricChannel) -> float:
    """B(W) = sum over y of sqrt(W(y|0) W(y|1))."""
    return float(np.sqrt(channel.p0 * channel.p1).sum())


def bec_bhattacharyya_closed_form(p: float, g: Monomial) -> float:
    """Erasure probability of the bit channel of g over BEC(p): z -> 2z - z^2 on '-', z -> z^2 on '+'."""
    z = p
    for sign in sign_sequence(g).application_order():
        z = 2 * z - z * z if sign is Sign.MINUS else z * z
    return z


# Transforms


def _check_pair_cap(size: int) -> None:
    if size > settings.channel_pair_cap:
        raise ResourceCapError("transform output alphabet", size, settings.channel_pair_cap, "channel_pair_cap")


def transform_minus(channel: SymmetricChannel, merge: bool = True) -> SymmetricChannel:
    """W-(y1, y2 | u2) = 1/2 sum over u1 of W(y1|u1) W(y2|u1 + u2); involution (pi(y1), y2)."""
    n = channel.alphabet_size
    _check_pair_cap(n * n)
    w0, w1 = channel.p0, channel.p1
    p0 = 0.5 * (np.outer(w0, w0) + np.outer(w1, w1))
    p1 = 0.5 * (np.outer(w0, w1) + np.outer(w1, w0))
    involution = channel.involution[:, None] * n + np.arange(n)[None, :]
    result = SymmetricChannel(p0.ravel(), p1.ravel(), involution.ravel())
    return merge_equivalent_outputs(result) if merge else result


def transform_plus(channel: SymmetricChannel, merge: bool = True) -> SymmetricChannel:
    """W+(y1, y2, u2 | u1) = 1/2 W(y1|u1) W(y2|u1 + u2); involution (pi(y1), pi(y2), u2)."""
    n = channel.alphabet_size
    _check_pair_cap(2 * n * n)
    w0, w1 = channel.p0, channel.p1
    p0 = 0.5 * w0[:, None, None] * np.stack([w0, w1], axis=-1)[None, :, :]
    p1 = 0.5 * w1[:, None, None] * np.stack([w1, w0], axis=-1)[None, :, :]
    pi = channel.involution
    involution = (pi[:, None, None] * n + pi[None, :, None]) * 2 + np.arange(2)[None, None, :]
    result = SymmetricChannel(p0.ravel(), p1.ravel(), involution.ravel())
    return merge_equivalent_outputs(result) if merge else result


def merge_equivalent_outputs(channel: SymmetricChannel, tolerance: float | None = None) -> SymmetricChannel:
    """
    Drop zero-probability outputs and merge outputs whose likelihood pairs are
    proportional. Outputs with W(y|1) < W(y|0) are grouped by t = W(y|1) / (W(y|0) + W(y|1))
    within relative tolerance; each group's mirror image under pi becomes the
    swapped pair, so the result satisfies the symmetry exactly.
    """
    tol = settings.merge_tolerance if tolerance is None else tolerance
    p0, p1 = channel.p0, channel.p1
    alive = (p0 + p1) > 0

    low = np.flatnonzero(alive & (p1 < p0))
    mid = np.flatnonzero(alive & (p1 == p0))

    t = p1[low] / (p0[low] + p1[low])
    order = np.argsort(t, kind="stable")
    low, t = low[order], t[order]
    if low.size:
        starts = np.concatenate(([0], np.flatnonzero(np.diff(t) > tol * t[1:]) + 1))
        low_p0 = np.add.reduceat(p0[low], starts)
        low_p1 = np.add.reduceat(p1[low], starts)
    else:
        low_p0 = low_p1 = np.zeros(0)

    groups = low_p0.size
    centre = [float(p0[mid].sum())] if mid.size else []
    new_p0 = np.concatenate((low_p0, centre, low_p1))
    new_p1 = np.concatenate((low_p1, centre, low_p0))
    offset = groups + len(centre)
    involution = np.concatenate((np.arange(groups) + offset, np.arange(groups, offset), np.arange(groups)))

    if new_p0.size > settings.alphabet_cap:
        raise ResourceCapError("merged output alphabet", int(new_p0.size), settings.alphabet_cap, "alphabet_cap")
    logger.debug(f"Merged {channel.alphabet_size} outputs into {new_p0.size}")
    return SymmetricChannel(new_p0, new_p1, involution)


# Degradation by construction


def concatenate(channel: SymmetricChannel, stochastic: np.ndarray, involution: np.ndarray) -> SymmetricChannel:
    """The channel Q o W for a row-stochastic matrix Q from the outputs of W to a new alphabet."""
    q = np.asarray(stochastic, dtype=np.float64)
    if q.ndim != 2 or q.shape[0] != channel.alphabet_size:
        raise ChannelError(f"stochastic matrix must have {channel.alphabet_size} rows")
    if (q < 0).any() or not np.allclose(q.sum(axis=1), 1.0, rtol=0.0, atol=settings.probability_tolerance):
        raise ChannelError("stochastic matrix rows must be probability vectors")
    return from_table(channel.p0 @ q, channel.p1 @ q, involution)


def minus_degradation_witness(channel: SymmetricChannel) -> tuple[np.ndarray, np.ndarray]:
    """
    Q with Q o W = W- (unmerged): on input y1, draw x uniformly, send it through W
    to get y2, output (y1, y2) if x = 0 and (pi(y1), y2) if x = 1.

    Returns:
        (Q, involution of the target alphabet)
    """
    n = channel.alphabet_size
    _check_pair_cap(n * n)
    q = np.zeros((n, n, n))
    for y1 in range(n):
        q[y1, y1, :] += 0.5 * channel.p0
        q[y1, channel.involution[y1], :] += 0.5 * channel.p1
    involution = channel.involution[:, None] * n + np.arange(n)[None, :]
    return q.reshape(n, n * n), involution.ravel()


def plus_degradation_witness(channel: SymmetricChannel) -> tuple[np.ndarray, np.ndarray]:
    """
    Q with Q o W+ = W (W+ unmerged): keep y1, forget y2 and u2.

    Returns:
        (Q, involution of W)
    """
    n = channel.alphabet_size
    _check_pair_cap(2 * n * n)
    q = np.zeros((n, n, 2, n))
    q[np.arange(n), :, :, np.arange(n)] = 1.0
    return q.reshape(2 * n * n, n), channel.involution.copy()


# Bit channels


def sign_sequence(g: Monomial) -> SignSequence:
    return SignSequence(g.m, tuple(Sign.MINUS if (g.bits >> i) & 1 else Sign.PLUS for i in range(g.m)))


def apply_sign(channel: SymmetricChannel, sign: Sign) -> SymmetricChannel:
    return transform_minus(channel) if sign is Sign.MINUS else transform_plus(channel)


def synthesize_bit_channel(channel: SymmetricChannel, g: Monomial) -> SymmetricChannel:
    """W^g: the transforms for u_{m-1}, ..., u_0 applied in that order."""
    result = channel
    for sign in sign_sequence(g).application_order():
        result = apply_sign(result, sign)
    return result

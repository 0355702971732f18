"""Braid words from sampled planar trajectories.

Strands are read through a projection onto the line at ``projection_angle``.
Between consecutive samples the motion is taken to be linear, so every
adjacent exchange of projected order happens at a computable time.  An
exchange is a positive generator when it is counterclockwise: the strand
moving from left to right passes on the side of the smaller orthogonal
coordinate.

A tie (two strands with equal projection at a sample, equal projection at the
same moment, or equal orthogonal coordinate at a crossing) makes the reading
ambiguous.  Ties trigger retries.  The first retry keeps the angle and adds a
small seeded perturbation ``c_s sin(pi t)`` to each strand; later retries also
draw a new angle.  The perturbation vanishes at both ends and is smaller than
half the minimum separation, so it never changes the braid.
"""

from __future__ import annotations

import dataclasses
import io
import math

import numpy as np

from .braid import BraidWord, Permutation, full_twist_word
from .errors import (
    DegenerateProjection,
    FormatError,
    InvalidPaths,
    InvalidRange,
    TooFewSamples,
    UndersampledCrossing,
)

PERTURBATION_SCALE = 0.05


@dataclasses.dataclass(frozen=True)
class StrandPaths:
    """``positions[s, j]`` is strand ``j`` at time ``times[s]``."""

    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        z = np.asarray(self.positions, dtype=complex)
        if z.ndim != 2 or t.ndim != 1 or z.shape[0] != t.shape[0]:
            raise InvalidPaths("positions must be a (samples, strands) array matching times")
        if t.size < 2 or t[0] != 0.0 or t[-1] != 1.0 or np.any(np.diff(t) <= 0):
            raise InvalidPaths("times must increase strictly from 0 to 1")
        if z.shape[1] < 1:
            raise InvalidPaths("need at least one strand")
        if not np.all(np.isfinite(z)):
            raise InvalidPaths("positions must be finite")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "positions", z)
        if self.strand_count > 1 and self.min_separation() <= 0:
            raise InvalidPaths("two strands coincide at some sample")
        self.closing_map()

    @property
    def strand_count(self) -> int:
        return self.positions.shape[1]

    def min_separation(self) -> float:
        z = self.positions
        gaps = np.abs(z[:, :, None] - z[:, None, :])
        k = self.strand_count
        gaps[:, np.arange(k), np.arange(k)] = np.inf
        return float(gaps.min())

    def diameter(self) -> float:
        z = self.positions.ravel()
        return float(max(np.ptp(z.real), np.ptp(z.imag), 1e-300))

    def closing_map(self) -> list[int]:
        """``m[j]``: the strand whose starting point strand ``j`` ends on."""
        start, end = self.positions[0], self.positions[-1]
        tol = 1e-9 * self.diameter()
        d = np.abs(end[:, None] - start[None, :])
        m = [int(i) for i in d.argmin(axis=1)]
        if sorted(m) != list(range(self.strand_count)) or np.any(d.min(axis=1) > tol):
            raise InvalidPaths("final positions are not a rearrangement of the initial ones")
        return m

    def reversed(self) -> StrandPaths:
        """The same motion run backwards, with strands relabelled by their new start."""
        m = self.closing_map()
        z = self.positions[::-1]
        relabel = np.empty(self.strand_count, dtype=int)
        relabel[m] = np.arange(self.strand_count)
        # strand j of the reverse starts where strand relabel[j] ended, i.e. at start point j
        return StrandPaths(1.0 - self.times[::-1], z[:, relabel])

    def to_text(self) -> str:
        buf = io.StringIO()
        buf.write(f"k={self.strand_count}\n")
        cols = [self.times]
        for j in range(self.strand_count):
            cols += [self.positions[:, j].real, self.positions[:, j].imag]
        np.savetxt(buf, np.column_stack(cols), delimiter=", ", fmt="%.17g")
        return buf.getvalue()

    @classmethod
    def from_text(cls, text: str) -> StrandPaths:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].strip().startswith("k="):
            raise FormatError("trajectory file must start with 'k=<int>'")
        try:
            k = int(lines[0].strip()[2:])
            data = np.loadtxt(lines[1:], delimiter=",", ndmin=2)
        except ValueError as exc:
            raise FormatError(f"bad trajectory data: {exc}") from None
        if k < 1 or data.shape[1] != 1 + 2 * k:
            raise FormatError(f"expected {1 + 2 * k} columns for k={k}")
        z = data[:, 1::2] + 1j * data[:, 2::2]
        return cls(data[:, 0], z)


@dataclasses.dataclass(frozen=True)
class ExtractionParams:
    projection_angle: float = 0.0
    tie_tolerance: float = 1e-9
    max_retries: int = 16
    retry_seed: int = 0

    def __post_init__(self):
        if not self.tie_tolerance > 0:
            raise ValueError("tie_tolerance must be positive")
        if self.max_retries < 0:
            raise ValueError("max_retries must be nonnegative")


def sample_rotating_loop(k: int, num_samples: int | None = None) -> StrandPaths:
    """Strand ``j`` at time ``t`` sits at ``j exp(2 pi i t)``."""
    if k < 1:
        raise InvalidPaths(f"need k >= 1, got {k}")
    if num_samples is None:
        num_samples = 64 * k * k
    if num_samples < 8 * k * k:
        raise TooFewSamples(f"need at least {8 * k * k} samples for k={k}")
    t = np.linspace(0.0, 1.0, num_samples)
    z = np.exp(2j * np.pi * t)[:, None] * np.arange(1, k + 1)[None, :]
    z[-1] = z[0]
    return StrandPaths(t, z)


class _Tie(Exception):
    pass


def _read_crossings(t: np.ndarray, z: np.ndarray, angle: float, tol: float) -> tuple[list[int], list[int]]:
    """Letters and the final order (strand ids by position) for one projection."""
    w = z * np.exp(-1j * angle)
    x, y = w.real, w.imag
    k = z.shape[1]
    order = np.argsort(x, axis=1, kind="stable")
    xs = np.take_along_axis(x, order, axis=1)
    if k > 1 and np.min(np.diff(xs, axis=1)) < tol:
        raise _Tie
    cur = [int(s) for s in order[0]]
    letters: list[int] = []
    changed = np.nonzero(np.any(order[1:] != order[:-1], axis=1))[0]
    for s in changed:
        cur = _interval(x[s], x[s + 1], y[s], y[s + 1], cur, tol, letters)
        if cur != [int(v) for v in order[s + 1]]:
            raise UndersampledCrossing(f"order at t={t[s + 1]:.6g} does not follow from crossings")
    return letters, cur


def _interval(x0, x1, y0, y1, cur: list[int], tol: float, letters: list[int]) -> list[int]:
    """Process every exchange of the linear motion from ``x0`` to ``x1``."""
    cur = list(cur)
    k = len(cur)
    events = []
    for a in range(k):
        for b in range(a + 1, k):
            p, q = cur[a], cur[b]
            d0, d1 = x0[q] - x0[p], x1[q] - x1[p]
            if d1 < 0:
                events.append((d0 / (d0 - d1), p, q))
    events.sort()

    def xs(s):
        return x0 + s * (x1 - x0)

    for (s_a, *_), (s_b, *_) in zip(events, events[1:]):
        mid = np.sort(xs(0.5 * (s_a + s_b)))
        if np.min(np.diff(mid)) < tol:
            raise _Tie
    for s, p, q in events:
        a, b = cur.index(p), cur.index(q)
        if b != a + 1:
            raise UndersampledCrossing("non-adjacent strands exchange within one interval")
        yp = y0[p] + s * (y1[p] - y0[p])
        yq = y0[q] + s * (y1[q] - y0[q])
        if abs(yp - yq) < tol:
            raise _Tie
        # p moves left to right; counterclockwise when it passes below q
        letters.append(a + 1 if yp < yq else -(a + 1))
        cur[a], cur[b] = q, p
    return cur


def _perturbation(paths: StrandPaths, rng: np.random.Generator) -> np.ndarray:
    k = paths.strand_count
    if k < 2:
        return np.zeros_like(paths.positions)
    radius = PERTURBATION_SCALE * paths.min_separation()
    c = radius * np.sqrt(rng.random(k)) * np.exp(2j * np.pi * rng.random(k))
    return np.sin(np.pi * paths.times)[:, None] * c[None, :]


def extract_braid(paths: StrandPaths, params: ExtractionParams | None = None) -> BraidWord:
    """Read the braid of ``paths`` on ``paths.strand_count`` strands."""
    params = params or ExtractionParams()
    k = paths.strand_count
    if k == 1:
        return BraidWord(1, ())
    tol = params.tie_tolerance * paths.diameter()
    rng = np.random.default_rng(params.retry_seed)
    angle = params.projection_angle
    z = paths.positions
    for attempt in range(params.max_retries + 1):
        if attempt >= 2:
            angle = float(rng.uniform(0.0, math.pi))
        if attempt >= 1:
            z = paths.positions + _perturbation(paths, rng)
        try:
            letters, _ = _read_crossings(paths.times, z, angle, tol)
        except _Tie:
            continue
        return BraidWord(k, tuple(letters))
    raise DegenerateProjection(f"projection stayed degenerate after {params.max_retries} retries")


def endpoint_permutation(paths: StrandPaths, angle: float = 0.0) -> Permutation:
    """Image ``p`` is the starting rank of the strand that ends at rank ``p``.

    Ranks are positions in projected order at ``angle``; this matches
    :func:`braidforge.braid.permutation_of` of the extracted word.
    """
    x = (paths.positions[0] * np.exp(-1j * angle)).real
    rank = np.empty(paths.strand_count, dtype=int)
    rank[np.argsort(x, kind="stable")] = np.arange(1, paths.strand_count + 1)
    images = [0] * paths.strand_count
    for j, target in enumerate(paths.closing_map()):
        images[rank[target] - 1] = int(rank[j])
    return Permutation(tuple(images))


def verify_loop_full_twist(k: int, num_samples: int | None = None,
                           params: ExtractionParams | None = None) -> bool:
    """Whether the loop of :func:`sample_rotating_loop` reads as the full twist on ``k`` strands."""
    from .garside import braids_equal

    if not 2 <= k <= 6:
        raise InvalidRange(f"k must lie in 2..6, got {k}")
    w = extract_braid(sample_rotating_loop(k, num_samples), params)
    return braids_equal(w, full_twist_word(k, "F"))

"""
Localisation profiles: sliding windows and DNA walks.

Each window and each prefix is analysed as a sequence in its own right, so a
point of either profile equals the whole-sequence PPS of that slice.
"""

import structlog

from periodic_power_spectrum.analysis.schemas import (
    WalkPoint,
    WalkProfile,
    WindowPoint,
    WindowProfile,
)
from periodic_power_spectrum.exceptions import (
    InvalidParameterError,
    PeriodOutOfRangeError,
    WindowTooLargeError,
)
from periodic_power_spectrum.sequence.schemas import ChannelSource
from periodic_power_spectrum.transform.periodic import check_period, pps, snr

logger = structlog.get_logger(__name__)


def sliding_window(
    source: ChannelSource, p: int, w: int, s: int = 1
) -> WindowProfile:
    """
    SNR at periodicity p inside windows of w bp advanced by s bp.

    Args:
        source: Indicator set or real signal
        p: Periodicity (<= w)
        w: Window length
        s: Step between window starts

    Returns:
        WindowProfile: One point per window start 0, s, 2s, ... with start + w <= N

    Raises:
        WindowTooLargeError: If w > N
        PeriodOutOfRangeError: If p < 1 or p > w
        InvalidParameterError: If w < 1 or s < 1
    """
    n = source.length
    if w < 1 or s < 1:
        msg = f"window and step must be >= 1, got window={w} step={s}"
        raise InvalidParameterError(msg)
    if w > n:
        msg = f"window of {w} bp exceeds sequence length {n}"
        raise WindowTooLargeError(msg)
    if p < 1 or p > w:
        msg = f"periodicity {p} outside 1..{w} (window length)"
        raise PeriodOutOfRangeError(msg)
    points: list[WindowPoint] = []
    for start in range(0, n - w + 1, s):
        power = pps(source.window(start, start + w), p)
        points.append(WindowPoint(start=start, power=power, snr=snr(power, w)))
    logger.debug(
        "sliding_window", sequence_id=source.id, p=p, window=w, step=s, points=len(points)
    )
    return WindowProfile(
        sequence_id=source.id, p=p, window=w, step=s, points=tuple(points)
    )


def walk_lengths(n: int, p: int, step: int) -> list[int]:
    """
    Prefix lengths p, p + step*p, p + 2*step*p, ... closed by N.
    """
    lengths = list(range(p, n + 1, step * p))
    if lengths[-1] != n:
        lengths.append(n)
    return lengths


def dna_walk(source: ChannelSource, p: int, step: int = 1) -> WalkProfile:
    """
    PPS at periodicity p of growing prefixes, showing how the signal accumulates.

    Prefixes advance by ``step`` whole motif lengths (step * p bp) and the last
    prefix is the whole sequence.

    Raises:
        PeriodOutOfRangeError: If p < 1 or p > N
        InvalidParameterError: If step < 1
    """
    check_period(p, source.length)
    if step < 1:
        msg = f"walk step must be >= 1, got {step}"
        raise InvalidParameterError(msg)
    points = tuple(
        WalkPoint(prefix_length=length, power=pps(source.window(0, length), p))
        for length in walk_lengths(source.length, p, step)
    )
    logger.debug("dna_walk", sequence_id=source.id, p=p, step=step, points=len(points))
    return WalkProfile(sequence_id=source.id, p=p, step=step, points=points)

"""
Schema Definitions for Spectrum Transforms

Immutable result types of the transform module: congruence derivative
vectors, spectrum transform matrices, periodic transform values and DFT power
spectra.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray


def _read_only(values: NDArray[np.float64]) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class CongruenceVector:
    """
    Per-residue-class sums of a signal at periodicity p.

    Entry q holds the sum of x(n) over all positions n with n mod p == q.

    Attributes:
        p: Periodicity (>= 1)
        values: Read-only vector of length p
    """

    p: int
    values: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _read_only(self.values))

    def tolist(self) -> list[float]:
        return self.values.tolist()


@dataclass(frozen=True, eq=False)
class SpectrumMatrix:
    """
    Lower-triangular real matrix S_p with f_p S_p f_p^T = |XP(p)|^2.

    Unit diagonal, 2cos(2π(k-j)/p) below it, zeros above it.

    Attributes:
        p: Periodicity (>= 1)
        entries: Read-only p x p array
    """

    p: int
    entries: NDArray[np.float64] = field(repr=False)


@dataclass(frozen=True)
class PeriodicTransformValue:
    """
    The periodic transform XP(p) = sum_q f_p(q) exp(-i2πq/p).

    Attributes:
        real: Real part
        imag: Imaginary part
    """

    real: float
    imag: float

    @property
    def power(self) -> float:
        return self.real * self.real + self.imag * self.imag


@dataclass(frozen=True, eq=False)
class DftPowerSpectrum:
    """
    DFT power spectrum PS(k) = |X(k)|^2, k = 0..N-1.

    For DNA inputs this is the sum of the four indicator channel spectra.

    Attributes:
        length: Number of samples N
        power: Read-only vector of length N
    """

    length: int
    power: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "power", _read_only(self.power))

    def at(self, k: int) -> float:
        """Power at bin k; bins wrap modulo N."""
        return float(self.power[k % self.length])

    @property
    def mean(self) -> float:
        return float(self.power.mean())

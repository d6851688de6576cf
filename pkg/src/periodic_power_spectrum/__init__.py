"""
Periodic power spectrum analysis of DNA sequences and real-valued signals.

The periodic power spectrum measures the strength of an exact periodicity p
directly from the congruence derivative vector of a sequence, without the
bin mismatch a Fourier spectrum suffers when p does not divide the length.
"""

from periodic_power_spectrum.analysis import (
    PeakReport,
    PeriodicitySpectrum,
    detect_peaks,
    dna_walk,
    scan,
    sliding_window,
)
from periodic_power_spectrum.sequence import (
    DnaSequence,
    IndicatorSet,
    RealSignal,
    parse_fasta,
    voss_map,
)
from periodic_power_spectrum.transform import dft_power_spectrum, pps, snr

__all__ = [
    "DnaSequence",
    "IndicatorSet",
    "PeakReport",
    "PeriodicitySpectrum",
    "RealSignal",
    "detect_peaks",
    "dft_power_spectrum",
    "dna_walk",
    "parse_fasta",
    "pps",
    "scan",
    "sliding_window",
    "snr",
    "voss_map",
]

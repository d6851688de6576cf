from .profiles import dna_walk, sliding_window, walk_lengths
from .scan import DEFAULT_THRESHOLD, default_p_max, detect_peaks, scan
from .schemas import (
    Edit,
    Peak,
    PeakReport,
    PeriodicitySpectrum,
    SpectrumEntry,
    WalkPoint,
    WalkProfile,
    WindowPoint,
    WindowProfile,
)
from .synth import (
    FIG1_PERIODS,
    random_sequence,
    shuffle_sequence,
    synth_fig1,
    synth_repeat,
)

__all__ = [
    "DEFAULT_THRESHOLD",
    "FIG1_PERIODS",
    "Edit",
    "Peak",
    "PeakReport",
    "PeriodicitySpectrum",
    "SpectrumEntry",
    "WalkPoint",
    "WalkProfile",
    "WindowPoint",
    "WindowProfile",
    "default_p_max",
    "detect_peaks",
    "dna_walk",
    "random_sequence",
    "scan",
    "shuffle_sequence",
    "sliding_window",
    "synth_fig1",
    "synth_repeat",
    "walk_lengths",
]

from .fourier import (
    DftMethod,
    candidate_bins,
    channel_power,
    dft_power_at,
    dft_power_dna,
    dft_power_spectrum,
    nearest_bin,
)
from .periodic import (
    check_period,
    congruence_vector,
    fold,
    periodic_transform,
    pps,
    pps_closed_form,
    pps_dna,
    pps_real,
    quadratic_power,
    snr,
    spectrum_matrix,
    zero_pad_to_multiple,
)
from .schemas import (
    CongruenceVector,
    DftPowerSpectrum,
    PeriodicTransformValue,
    SpectrumMatrix,
)

__all__ = [
    "CongruenceVector",
    "DftMethod",
    "DftPowerSpectrum",
    "PeriodicTransformValue",
    "SpectrumMatrix",
    "candidate_bins",
    "channel_power",
    "check_period",
    "congruence_vector",
    "dft_power_at",
    "dft_power_dna",
    "dft_power_spectrum",
    "fold",
    "nearest_bin",
    "periodic_transform",
    "pps",
    "pps_closed_form",
    "pps_dna",
    "pps_real",
    "quadratic_power",
    "snr",
    "spectrum_matrix",
    "zero_pad_to_multiple",
]

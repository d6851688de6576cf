from .fasta import format_fasta, parse_fasta, parse_signal, read_source
from .mapping import voss_map
from .schemas import (
    ACGT,
    NUCLEOTIDES,
    AmbiguityPolicy,
    ChannelSource,
    DnaSequence,
    IndicatorSet,
    RealSignal,
)

__all__ = [
    "ACGT",
    "NUCLEOTIDES",
    "AmbiguityPolicy",
    "ChannelSource",
    "DnaSequence",
    "IndicatorSet",
    "RealSignal",
    "format_fasta",
    "parse_fasta",
    "parse_signal",
    "read_source",
    "voss_map",
]

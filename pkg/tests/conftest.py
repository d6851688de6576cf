from pathlib import Path

import numpy as np
import pytest

from periodic_power_spectrum.sequence import (
    DnaSequence,
    IndicatorSet,
    parse_fasta,
    voss_map,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

N130P5 = (
    "CCATATCCGATCGGCAGCGCGTGCCTTTTATCGCTATCGATCGAATGGGCTCGAGGACC"
    "GCGGCTGTCTATAGAAAAATTATAAATGATATTGATCCGAGTAGGGTCCCACTCGGTGC"
    "GGGGCACTTCAA"
)


def random_residues(rng: np.random.Generator, n: int) -> str:
    return "".join(rng.choice(list("ACGT"), size=n))


def indicators(residues: str, seq_id: str = "test") -> IndicatorSet:
    return voss_map(DnaSequence(id=seq_id, residues=residues))


def fixture_path(name: str) -> Path:
    return FIXTURES / name


@pytest.fixture
def n130p5() -> IndicatorSet:
    return indicators(N130P5, "N130P5")


@pytest.fixture
def n130p5_d2() -> IndicatorSet:
    return indicators(N130P5[:-2], "N130P5-D2")


@pytest.fixture
def n130p5_fasta() -> Path:
    return fixture_path("N130P5.fa")


@pytest.fixture
def n130p5_d2_fasta() -> Path:
    return fixture_path("N130P5-D2.fa")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def load_genbank(name: str) -> list[IndicatorSet]:
    return [voss_map(seq) for seq in parse_fasta(fixture_path(name).read_bytes())]

import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodic_power_spectrum.exceptions import (
    EmptyInputError,
    EmptyRecordError,
    InvalidParameterError,
    InvalidResidueError,
    InvalidSignalError,
)
from periodic_power_spectrum.sequence import (
    AmbiguityPolicy,
    DnaSequence,
    IndicatorSet,
    RealSignal,
    format_fasta,
    parse_fasta,
    parse_signal,
    voss_map,
)

from tests.conftest import N130P5


def test_parse_fasta_multi_record() -> None:
    text = b">first description here\nACGT\nacgt\n>second\nTTTT\n"
    records = parse_fasta(text)
    assert [seq.id for seq in records] == ["first", "second"]
    assert records[0].residues == "ACGTACGT"
    assert records[1].length == 4


def test_parse_fasta_strips_whitespace_digits_and_crlf() -> None:
    text = b">x\r\n1 ACGTA CGTAC\r\n61 GGG\r\n"
    (seq,) = parse_fasta(text)
    assert seq.residues == "ACGTACGTACGGG"


def test_parse_fasta_headerless_input() -> None:
    (seq,) = parse_fasta("acgtn\n")
    assert seq.id == "seq1"
    assert seq.residues == "ACGTN"


def test_parse_fasta_skips_preamble_before_first_header() -> None:
    records = parse_fasta(b"stray line\n>a\nACGT\n>b\nTT\n")
    assert [(seq.id, seq.residues) for seq in records] == [("a", "ACGT"), ("b", "TT")]


def test_parse_fasta_accepts_stream() -> None:
    (seq,) = parse_fasta(io.BytesIO(b">s\nAC\n"))
    assert seq.residues == "AC"


@pytest.mark.parametrize("text", [b"", b"   \n\n", "\t"])
def test_parse_fasta_empty_input(text: bytes | str) -> None:
    with pytest.raises(EmptyInputError, match="empty input"):
        parse_fasta(text)


def test_parse_fasta_empty_record() -> None:
    with pytest.raises(EmptyRecordError, match="'blank'"):
        parse_fasta(b">blank\n>full\nACGT\n")


def test_parse_fasta_strict_rejects_ambiguity() -> None:
    with pytest.raises(InvalidResidueError, match="'N' at position 2") as info:
        parse_fasta(b">x\nACNGT\n", AmbiguityPolicy.STRICT)
    assert info.value.position == 2
    assert info.value.char == "N"


def test_parse_fasta_lenient_keeps_ambiguity() -> None:
    (seq,) = parse_fasta(b">x\nACNGT\n")
    assert seq.residues == "ACNGT"


def test_dna_sequence_rejects_empty() -> None:
    with pytest.raises(EmptyRecordError):
        DnaSequence(id="x", residues="")


def test_voss_map_channels() -> None:
    ind = voss_map(DnaSequence(id="x", residues="ATCGA"))
    assert ind.length == 5
    np.testing.assert_array_equal(ind.channels["A"], [1, 0, 0, 0, 1])
    np.testing.assert_array_equal(ind.channels["T"], [0, 1, 0, 0, 0])
    np.testing.assert_array_equal(ind.channels["C"], [0, 0, 1, 0, 0])
    np.testing.assert_array_equal(ind.channels["G"], [0, 0, 0, 1, 0])
    assert ind.counts == {"A": 2, "T": 1, "C": 1, "G": 1}


def test_voss_map_lenient_ambiguity_column_is_empty() -> None:
    ind = voss_map(DnaSequence(id="x", residues="ANU"))
    np.testing.assert_array_equal(ind.matrix[:, 1], [0, 0, 0, 0])
    assert ind.channels["T"][2] == 1
    assert ind.decode() == "ANT"


def test_voss_map_strict_rejects_ambiguity() -> None:
    with pytest.raises(InvalidResidueError):
        voss_map(DnaSequence(id="x", residues="ACR"), AmbiguityPolicy.STRICT)


def test_indicator_matrix_is_read_only() -> None:
    ind = voss_map(DnaSequence(id="x", residues="ACGT"))
    with pytest.raises(ValueError, match="read-only"):
        ind.matrix[0, 0] = 5.0


@given(st.text(alphabet="ACGT", min_size=1, max_size=300))
@settings(max_examples=100, deadline=None)
def test_indicator_columns_partition(residues: str) -> None:
    ind = voss_map(DnaSequence(id="x", residues=residues))
    np.testing.assert_array_equal(ind.matrix.sum(axis=0), np.ones(len(residues)))
    assert sum(ind.counts.values()) == len(residues)
    assert ind.decode() == residues


@given(
    st.lists(
        st.text(alphabet="ACGT", min_size=1, max_size=150), min_size=1, max_size=4
    ),
    st.integers(min_value=1, max_value=80),
)
@settings(max_examples=50, deadline=None)
def test_fasta_format_parse_preserves_records(residues: list[str], width: int) -> None:
    records = [DnaSequence(id=f"r{i}", residues=r) for i, r in enumerate(residues)]
    parsed = parse_fasta(format_fasta(records, width))
    assert [(seq.id, seq.residues) for seq in parsed] == [
        (seq.id, seq.residues) for seq in records
    ]


def test_format_fasta_wraps_lines() -> None:
    text = format_fasta([DnaSequence(id="x", residues="ACGTACG")], width=3)
    assert text == ">x\nACG\nTAC\nG\n"


def test_format_fasta_rejects_width() -> None:
    with pytest.raises(InvalidParameterError):
        format_fasta([DnaSequence(id="x", residues="A")], width=0)


def test_parse_signal_single_column() -> None:
    signal = parse_signal(b"1.5\n-2\n3e-1\n")
    np.testing.assert_allclose(signal.samples, [1.5, -2.0, 0.3])
    assert signal.id == "signal"


def test_parse_signal_csv_with_header() -> None:
    signal = parse_signal(b"n,value\n1,0.25\n2,0.5\n", signal_id="fig1")
    np.testing.assert_allclose(signal.samples, [0.25, 0.5])
    assert signal.id == "fig1"


def test_parse_signal_tab_separated() -> None:
    signal = parse_signal("1\t4\n2\t5\n")
    np.testing.assert_allclose(signal.samples, [4.0, 5.0])


def test_parse_signal_empty() -> None:
    with pytest.raises(EmptyInputError):
        parse_signal(b"\n")


def test_parse_signal_rejects_garbage() -> None:
    with pytest.raises(InvalidSignalError):
        parse_signal(b"1\n2\nabc\n")


def test_real_signal_rejects_non_finite() -> None:
    with pytest.raises(InvalidSignalError, match="non-finite"):
        RealSignal(samples=np.array([1.0, np.inf]))


def test_window_and_padding() -> None:
    ind = voss_map(DnaSequence(id="x", residues=N130P5))
    assert ind.window(10, 70).length == 60
    padded = ind.padded(135)
    assert padded.length == 135
    np.testing.assert_array_equal(padded.matrix[:, 130:], np.zeros((4, 5)))
    assert ind.padded(100) is ind


def test_voss_map_mixed_sequence() -> None:
    ind = voss_map(DnaSequence(id="x", residues="TAGCCTGCTGAT"))
    np.testing.assert_array_equal(ind.channels["A"], [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0])
    np.testing.assert_array_equal(ind.channels["T"], [1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1])
    np.testing.assert_array_equal(ind.channels["C"], [0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0])
    np.testing.assert_array_equal(ind.channels["G"], [0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0])


def test_indicator_set_rejects_wrong_shape() -> None:
    with pytest.raises(InvalidParameterError, match=r"shape \(4, N\)"):
        IndicatorSet(id="x", matrix=np.zeros((3, 4)))


def test_format_fasta_writes_bare_id_headers() -> None:
    records = [
        DnaSequence(id="ATCGAx6", residues="ATCGA" * 6),
        DnaSequence(id="b", residues="TT"),
    ]
    assert format_fasta(records) == f">ATCGAx6\n{'ATCGA' * 6}\n>b\nTT\n"


@pytest.mark.parametrize("text", [b"nan\n1\n2\n", b"1..5\n2\n3\n", b"n,nan\n2,3\n"])
def test_parse_signal_bad_first_row_is_not_a_header(text: bytes) -> None:
    with pytest.raises(InvalidSignalError, match="row 0"):
        parse_signal(text)


def test_parse_signal_rejects_ragged_rows() -> None:
    with pytest.raises(InvalidSignalError, match="malformed signal table"):
        parse_signal(b"1\n2,3\n")


def test_parse_signal_comments_only_is_empty() -> None:
    with pytest.raises(EmptyInputError):
        parse_signal(b"# no samples\n")

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periodic_power_spectrum.analysis import synth_fig1
from periodic_power_spectrum.exceptions import (
    EmptyInputError,
    InvalidParameterError,
    PeriodOutOfRangeError,
    UnsupportedClosedFormError,
)
from periodic_power_spectrum.sequence import IndicatorSet, RealSignal
from periodic_power_spectrum.transform import (
    candidate_bins,
    channel_power,
    congruence_vector,
    dft_power_at,
    dft_power_dna,
    dft_power_spectrum,
    fold,
    nearest_bin,
    periodic_transform,
    pps,
    pps_closed_form,
    pps_dna,
    pps_real,
    snr,
    spectrum_matrix,
    zero_pad_to_multiple,
)

from tests.conftest import indicators, random_residues

SQRT5 = math.sqrt(5.0)

# S_p(k, j) for k > j depends only on k - j; index d holds the value at k - j = d
LOWER_DIAGONALS = {
    2: [-2.0],
    3: [-1.0, -1.0],
    4: [0.0, -2.0, 0.0],
    5: [(SQRT5 - 1) / 2, -(SQRT5 + 1) / 2, -(SQRT5 + 1) / 2, (SQRT5 - 1) / 2],
    6: [1.0, -1.0, -2.0, -1.0, 1.0],
}


def _expected_matrix(p: int) -> np.ndarray:
    expected = np.eye(p)
    for k in range(p):
        for j in range(k):
            expected[k, j] = LOWER_DIAGONALS[p][k - j - 1]
    return expected


def test_congruence_vectors_of_worked_example() -> None:
    ind = indicators("AGTTAACGCCTAGCC")
    folded = fold(ind.matrix, 3)
    np.testing.assert_array_equal(folded[0], [1, 1, 2])  # A
    np.testing.assert_array_equal(folded[1], [1, 1, 1])  # T
    np.testing.assert_array_equal(folded[2], [2, 1, 2])  # C
    np.testing.assert_array_equal(folded[3], [1, 2, 0])  # G


def test_congruence_vector_of_real_signal() -> None:
    vector = congruence_vector(RealSignal(samples=np.arange(1.0, 6.0)), 2)
    assert vector.tolist() == [9.0, 6.0]


@pytest.mark.parametrize("p", [2, 3, 4, 5, 6])
def test_spectrum_matrix_entries(p: int) -> None:
    np.testing.assert_allclose(
        spectrum_matrix(p).entries, _expected_matrix(p), rtol=0, atol=1e-12
    )


def test_spectrum_matrix_is_memoised_and_read_only() -> None:
    first = spectrum_matrix(7).entries
    assert spectrum_matrix(7).entries is first
    with pytest.raises(ValueError, match="read-only"):
        first[0, 0] = 2.0


def test_spectrum_matrix_rejects_non_positive() -> None:
    with pytest.raises(PeriodOutOfRangeError):
        spectrum_matrix(0)


def test_pps_of_n130p5(n130p5: IndicatorSet) -> None:
    assert pps_dna(n130p5, 5) == pytest.approx(361.9837, abs=1e-3)
    assert dft_power_dna(n130p5).at(26) == pytest.approx(361.9837, abs=1e-3)


def test_pps_of_deleted_variant(n130p5_d2: IndicatorSet) -> None:
    assert n130p5_d2.length == 128
    assert pps_dna(n130p5_d2, 5) == pytest.approx(335.8034, abs=1e-3)


def test_padded_dft_matches_pps_of_deleted_variant(n130p5_d2: IndicatorSet) -> None:
    padded = zero_pad_to_multiple(n130p5_d2, 5)
    assert padded.length == 130
    assert dft_power_dna(padded).at(26) == pytest.approx(335.8034, abs=1e-3)


def test_unpadded_dft_leaks_at_nearest_bin(n130p5_d2: IndicatorSet) -> None:
    spectrum = dft_power_dna(n130p5_d2)
    assert spectrum.at(26) == pytest.approx(212.0118, abs=1e-3)
    assert spectrum.at(25) == pytest.approx(90.7763, abs=1e-3)
    assert nearest_bin(128, 5) == 26


def test_fractional_bin_recovers_pps(n130p5_d2: IndicatorSet) -> None:
    assert dft_power_at(n130p5_d2, 128 / 5) == pytest.approx(
        pps(n130p5_d2, 5), rel=1e-9
    )


def test_pps_matches_dft_when_period_divides_length() -> None:
    rng = np.random.default_rng(1)
    for _ in range(200):
        p = int(rng.integers(2, 51))
        m = int(rng.integers(math.ceil(10 / p), 600 // p + 1))
        n = p * m
        ind = indicators(random_residues(rng, n))
        expected = dft_power_dna(ind).at(m)
        assert pps_dna(ind, p) == pytest.approx(expected, rel=1e-9, abs=1e-9 * n)


def test_pps_matches_padded_dft_for_any_length() -> None:
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(10, 601))
        p = int(rng.integers(2, min(50, n) + 1))
        ind = indicators(random_residues(rng, n))
        padded = zero_pad_to_multiple(ind, p)
        assert padded.length % p == 0
        assert padded.length - n < p
        expected = dft_power_dna(padded).at(padded.length // p)
        assert pps_dna(ind, p) == pytest.approx(expected, rel=1e-9, abs=1e-9 * n)


def test_closed_forms_match_matrix_form() -> None:
    rng = np.random.default_rng(3)
    for _ in range(100):
        ind = indicators(random_residues(rng, int(rng.integers(4, 400))))
        for p in (2, 3, 4):
            assert pps_closed_form(ind, p) == pytest.approx(
                pps_dna(ind, p), rel=1e-9, abs=1e-9
            )


def test_closed_form_rejects_other_periods(n130p5: IndicatorSet) -> None:
    with pytest.raises(UnsupportedClosedFormError, match="periodicity 5"):
        pps_closed_form(n130p5, 5)


@pytest.mark.parametrize("p", [0, -1, 131])
def test_pps_rejects_out_of_range(n130p5: IndicatorSet, p: int) -> None:
    with pytest.raises(PeriodOutOfRangeError):
        pps(n130p5, p)


def test_pps_at_one_is_squared_total() -> None:
    ind = indicators("AACGTTTG")
    assert pps_dna(ind, 1) == pytest.approx(2**2 + 3**2 + 1**2 + 2**2)
    assert dft_power_dna(ind).at(0) == pytest.approx(pps_dna(ind, 1))


def test_pps_at_length_is_sum_of_squares() -> None:
    signal = RealSignal(samples=np.array([1.0, -2.0, 3.0]))
    assert pps_real(signal, 3) == pytest.approx(
        dft_power_spectrum(signal).at(1), rel=1e-12
    )


def test_periodic_transform_power_equals_pps() -> None:
    rng = np.random.default_rng(4)
    signal = RealSignal(samples=rng.normal(size=97))
    for p in (2, 5, 12, 97):
        assert periodic_transform(signal, p).power == pytest.approx(
            pps_real(signal, p), rel=1e-9
        )


def test_periodic_transform_of_constant_signal_vanishes() -> None:
    value = periodic_transform(RealSignal(samples=np.full(6, 2.5)), 3)
    assert value.real == pytest.approx(0.0, abs=1e-12)
    assert value.imag == pytest.approx(0.0, abs=1e-12)


def test_periodic_transform_of_alternating_indicator() -> None:
    channel = indicators("ATATAT").channels["A"]
    value = periodic_transform(RealSignal(samples=np.asarray(channel, dtype=float)), 2)
    assert value.real == pytest.approx(3.0, abs=1e-12)
    assert value.imag == pytest.approx(0.0, abs=1e-12)
    assert value.power == pytest.approx(9.0, abs=1e-12)


@given(
    st.text(alphabet="ACGT", min_size=1, max_size=200),
    st.integers(min_value=1, max_value=200),
)
@settings(max_examples=200, deadline=None)
def test_pps_is_non_negative(residues: str, p: int) -> None:
    ind = indicators(residues)
    p = min(p, ind.length)
    assert pps_dna(ind, p) >= 0.0


@given(st.text(alphabet="ACGT", min_size=2, max_size=200), st.data())
@settings(max_examples=100, deadline=None)
def test_pps_is_invariant_under_nucleotide_relabelling(
    residues: str, data: st.DataObject
) -> None:
    ind = indicators(residues)
    p = data.draw(st.integers(min_value=1, max_value=ind.length))
    order = data.draw(st.permutations(range(4)))
    relabelled = IndicatorSet(id="r", matrix=ind.matrix[list(order)])
    assert pps_dna(relabelled, p) == pytest.approx(pps_dna(ind, p), rel=1e-9, abs=1e-9)


@given(st.text(alphabet="ACGT", min_size=2, max_size=200), st.data())
@settings(max_examples=100, deadline=None)
def test_pps_is_invariant_under_swaps_within_a_residue_class(
    residues: str, data: st.DataObject
) -> None:
    p = data.draw(st.integers(min_value=1, max_value=len(residues)))
    first = data.draw(st.integers(min_value=0, max_value=len(residues) - 1))
    second = data.draw(
        st.sampled_from(range(first % p, len(residues), p)), label="second"
    )
    swapped = list(residues)
    swapped[first], swapped[second] = swapped[second], swapped[first]
    assert pps_dna(indicators("".join(swapped)), p) == pytest.approx(
        pps_dna(indicators(residues), p), rel=1e-9, abs=1e-9
    )


@given(
    st.integers(min_value=2, max_value=10),
    st.integers(min_value=1, max_value=20),
    st.floats(min_value=-100, max_value=100),
    st.data(),
)
@settings(max_examples=100, deadline=None)
def test_pps_real_is_invariant_under_mean_shift(
    p: int, copies: int, shift: float, data: st.DataObject
) -> None:
    n = p * copies
    samples = np.array(
        data.draw(
            st.lists(
                st.floats(min_value=-100, max_value=100), min_size=n, max_size=n
            )
        )
    )
    shifted = samples + shift
    scale = float(samples @ samples + shifted @ shifted) + 1.0
    assert pps_real(RealSignal(samples=shifted), p) == pytest.approx(
        pps_real(RealSignal(samples=samples), p), rel=0, abs=1e-9 * scale
    )


@given(st.text(alphabet="ACGT", min_size=1, max_size=40), st.data())
@settings(max_examples=100, deadline=None)
def test_folding_conserves_channel_totals(residues: str, data: st.DataObject) -> None:
    ind = indicators(residues)
    p = data.draw(st.integers(min_value=1, max_value=ind.length))
    np.testing.assert_array_equal(fold(ind.matrix, p).sum(axis=1), ind.matrix.sum(axis=1))


@given(
    st.text(alphabet="ACGT", min_size=1, max_size=20),
    st.integers(min_value=1, max_value=12),
)
@settings(max_examples=100, deadline=None)
def test_repeats_scale_quadratically(motif: str, copies: int) -> None:
    single = pps_dna(indicators(motif), len(motif))
    repeated = pps_dna(indicators(motif * copies), len(motif))
    assert repeated == pytest.approx(copies**2 * single, rel=1e-9, abs=1e-9)


def test_zero_padding_leaves_pps_unchanged(n130p5_d2: IndicatorSet) -> None:
    for p in (3, 5, 7, 11):
        padded = zero_pad_to_multiple(n130p5_d2, p)
        assert pps(padded, p) == pytest.approx(pps(n130p5_d2, p), rel=1e-12)


def test_zero_pad_is_noop_when_period_divides(n130p5: IndicatorSet) -> None:
    assert zero_pad_to_multiple(n130p5, 5) is n130p5


def test_zero_pad_rejects_non_positive(n130p5: IndicatorSet) -> None:
    with pytest.raises(PeriodOutOfRangeError):
        zero_pad_to_multiple(n130p5, 0)


@given(st.text(alphabet="ACGT", min_size=2, max_size=300))
@settings(max_examples=100, deadline=None)
def test_dft_power_is_symmetric(residues: str) -> None:
    spectrum = dft_power_dna(indicators(residues))
    n = spectrum.length
    for k in range(1, n):
        assert spectrum.at(k) == pytest.approx(spectrum.at(n - k), rel=1e-9, abs=1e-9)


@given(st.text(alphabet="ACGT", min_size=1, max_size=300))
@settings(max_examples=100, deadline=None)
def test_dft_power_mean_equals_length(residues: str) -> None:
    spectrum = dft_power_dna(indicators(residues))
    assert spectrum.mean == pytest.approx(len(residues), rel=1e-9)


def test_direct_and_fft_backends_agree() -> None:
    rng = np.random.default_rng(5)
    for n in (1, 2, 17, 128, 600, 1031):
        ind = indicators(random_residues(rng, n))
        fast = channel_power(ind, "fft").power
        direct = channel_power(ind, "direct").power
        np.testing.assert_allclose(direct, fast, rtol=1e-6, atol=1e-6 * n)


def test_unknown_backend_rejected(n130p5: IndicatorSet) -> None:
    with pytest.raises(InvalidParameterError, match="unknown DFT method"):
        channel_power(n130p5, "wavelet")  # type: ignore[arg-type]


def test_fig1_signal_periods() -> None:
    signal = synth_fig1(300)
    assert pps_real(signal, 20) == pytest.approx(22500.0, rel=1e-9)
    assert pps_real(signal, 50) == pytest.approx(22500.0, rel=1e-9)
    assert dft_power_spectrum(signal).at(15) == pytest.approx(22500.0, rel=1e-9)


def test_candidate_bins() -> None:
    assert candidate_bins(128, 5) == [25, 26]
    assert candidate_bins(130, 5) == [26]
    assert candidate_bins(10, 1) == [10]
    assert nearest_bin(130, 5) == 26
    with pytest.raises(PeriodOutOfRangeError):
        candidate_bins(4, 5)


def test_snr() -> None:
    assert snr(361.9837, 130) == pytest.approx(2.7845, abs=1e-4)
    with pytest.raises(EmptyInputError):
        snr(1.0, 0)
    with pytest.raises(InvalidParameterError):
        snr(1.0, -3)

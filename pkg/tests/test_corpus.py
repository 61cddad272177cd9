import json
from pathlib import Path

import pytest

from weightbounds.bounds import global_weight_max, griesmer_min_n
from weightbounds.codes import min_distance, read_generator_file, spectrum
from weightbounds.corpus import (
    EXTERNAL_SPECTRA,
    SplitMix64,
    example_11_3_6,
    named_code,
    parse_weights,
    format_weights,
    random_code,
    random_corpus,
    ratio_code,
    reed_muller_1,
    row_from_dict,
    row_to_dict,
    table_rows,
    ternary_hamming_13_10,
)
from weightbounds.errors import ParamRangeError, UnknownNameError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_splitmix64_reference_vector():
    # First outputs for seed 0, per the reference implementation.
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_example_11_3_6_parameters_and_spectrum():
    code = example_11_3_6()
    assert (code.n, code.k, code.q) == (11, 3, 2)
    assert spectrum(code).nonzero() == {0: 1, 6: 6, 8: 1}
    assert min_distance(code) == 6
    assert griesmer_min_n(3, 6, 2) == 11  # the code meets the length bound


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_ratio_code_parameters_and_tightness(q):
    code = ratio_code(q)
    assert (code.n, code.k) == (q + 1, 2)
    spec = spectrum(code)
    d = spec.min_distance
    assert d == q
    assert spec.nonzero() == {0: 1, q: q * q - 1}  # every nonzero word has weight q
    assert (q + 1) * d == q * code.n


def test_reed_muller_1_4():
    code = reed_muller_1(4)
    assert (code.n, code.k) == (16, 5)
    spec = spectrum(code)
    assert spec.min_distance == 8
    assert spec.counts[16] == 1  # the all-ones codeword
    assert spec.max_weight == global_weight_max(16, 8, 2)


def test_ternary_hamming():
    code = ternary_hamming_13_10()
    assert (code.n, code.k, code.q) == (13, 10, 3)
    spec = spectrum(code)
    assert spec.min_distance == 3
    assert spec.total() == 3**10
    assert spec.counts[4] > 0  # weight-4 codewords exist


def test_named_code_dispatch():
    assert named_code("example_11_3_6") == example_11_3_6()
    assert named_code("hamming_13_10_3_ternary") == ternary_hamming_13_10()
    assert named_code("ratio_3") == ratio_code(3)
    assert named_code("rm_1_4") == reed_muller_1(4)
    with pytest.raises(UnknownNameError):
        named_code("golay_23_12_7")
    with pytest.raises(UnknownNameError):
        named_code("ratio_x")


def test_random_code_is_deterministic_and_full_rank():
    a = random_code(421, 3, 10, 4)
    b = random_code(421, 3, 10, 4)
    assert a == b
    assert (a.n, a.k, a.q) == (10, 4, 3)
    square = random_code(7, 2, 5, 5)
    assert square.k == 5  # rank n


def test_random_code_rejects_out_of_range_parameters():
    for q, n, k in [(5, 10, 3), (2, 15, 3), (2, 10, 6), (2, 3, 4)]:
        with pytest.raises(ParamRangeError):
            random_code(0, q, n, k)


def test_random_corpus_is_deterministic_and_in_range():
    first = list(random_corpus(50, 3))
    second = list(random_corpus(50, 3))
    assert first == second
    assert len(first) == 50
    for code in first:
        assert code.q in (2, 3, 4)
        assert 2 <= code.k <= 5
        assert code.k <= code.n <= 14


def test_table_row_counts():
    assert len(table_rows(1)) == 35
    assert len(table_rows(2)) == 24
    assert len(table_rows(3)) == 7
    with pytest.raises(ParamRangeError):
        table_rows(4)


def test_table1_first_row():
    row = table_rows(1)[0]
    assert (row.params.n, row.params.k, row.params.d, row.params.q) == (15, 5, 7, 2)
    assert row.expected_chen_xie == {12, 13}
    assert row.expected_singleton == {11, 12, 13}
    assert row.expected_griesmer is None
    assert row.printed_counts == (2, 3)


def test_table2_first_row():
    row = table_rows(2)[0]
    assert (row.params.n, row.params.k, row.params.d, row.params.q) == (27, 4, 18, 3)
    assert row.expected_singleton == set(range(22, 27))


def test_table3_counts_as_printed():
    rows = table_rows(3)
    assert [row.printed_counts[2] for row in rows] == [32, 33, 71, 34, 79, 83, 143]
    assert len(rows[0].expected_griesmer) == 32
    # Three published annotations disagree with their own printed sets.
    actual_sizes = [len(row.expected_griesmer) for row in rows]
    assert actual_sizes == [32, 33, 71, 34, 74, 75, 114]


def test_table_rows_round_trip_through_serialization():
    for which in (1, 2, 3):
        for row in table_rows(which):
            blob = json.dumps(row_to_dict(row), sort_keys=True)
            assert row_from_dict(json.loads(blob)) == row


def test_parse_and_format_weights():
    assert parse_weights("13, 12") == {12, 13}
    assert parse_weights("145-147, 159") == {145, 146, 147, 159}
    assert parse_weights("-") == frozenset()
    assert format_weights({12, 13}) == "13, 12"
    assert format_weights(set()) == "-"
    assert format_weights({145, 146, 147, 159}, ranges=True) == "159, 145-147"


def test_external_spectra_are_complete_distributions():
    assert sum(EXTERNAL_SPECTRA["ding_27_8_14_ternary"].values()) == 3**8
    assert sum(EXTERNAL_SPECTRA["cyclic_15_10_4_binary"].values()) == 2**10


@pytest.mark.parametrize("name", sorted(EXTERNAL_SPECTRA))
def test_external_fixture_matches_published_spectrum(name):
    path = FIXTURES / f"{name}.gen"
    if not path.exists():
        pytest.skip(f"optional fixture {path.name} not present")
    code = read_generator_file(path)
    assert spectrum(code).nonzero() == EXTERNAL_SPECTRA[name]


def test_shipped_fixture_files_parse_to_the_builtin_codes():
    assert read_generator_file(FIXTURES / "example_11_3_6.gen") == example_11_3_6()
    assert read_generator_file(FIXTURES / "rm_1_4.gen") == reed_muller_1(4)
    assert (
        read_generator_file(FIXTURES / "hamming_13_10_3_ternary.gen")
        == ternary_hamming_13_10()
    )
    assert read_generator_file(FIXTURES / "ratio_4.gen") == ratio_code(4)

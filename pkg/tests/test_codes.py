import itertools

import pytest

from weightbounds.codes import (
    LinearCode,
    ResidualWindowWarning,
    WeightSpectrum,
    code_from_matrix,
    code_params,
    find_codeword_of_weight,
    generator_text,
    hamming_weight,
    in_row_space,
    iter_codewords,
    min_distance,
    parse_generator_text,
    residual,
    row_reduce,
    spectrum,
    _spectrum_generic,
    _spectrum_gf2,
)
from weightbounds.corpus import SplitMix64
from weightbounds.errors import (
    DegenerateResidualError,
    EmptyMatrixError,
    EntryOutOfRangeError,
    EnumerationTooLargeError,
    NotACodewordError,
    ParamRangeError,
    RankDeficientError,
    ZeroCodewordError,
)
from weightbounds.gf import make_field

GF2 = make_field(2)
GF3 = make_field(3)
GF4 = make_field(4)

# The explicit binary [11, 3, 6] generator matrix used across the suite.
G_11_3_6 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0),
    (1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1),
)


def brute_codewords(gf, rows):
    """Independent enumeration oracle: all coefficient combinations, naively.

    Matches the documented message order (digit 0 scales rows[0] and is
    least significant), so product() tuples pair with reversed rows.
    """
    n = len(rows[0])
    out = []
    for coeffs in itertools.product(range(gf.q), repeat=len(rows)):
        cw = [0] * n
        for c, row in zip(coeffs, reversed(rows)):
            for j, x in enumerate(row):
                cw[j] = gf.add(cw[j], gf.mul(c, x))
        out.append(tuple(cw))
    return out


def test_row_reduce_identity():
    basis, rank = row_reduce(GF3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert rank == 3
    assert basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_row_reduce_dependent_rows():
    _, rank = row_reduce(GF3, [(1, 1), (2, 2)])
    assert rank == 1


def test_row_reduce_example_matrix():
    _, rank = row_reduce(GF2, G_11_3_6)
    assert rank == 3


def test_row_reduce_is_idempotent_and_normalized():
    rows = [(2, 1, 0, 2), (1, 2, 2, 0), (0, 1, 1, 1)]
    basis, rank = row_reduce(GF3, rows)
    again, rank2 = row_reduce(GF3, basis)
    assert (basis, rank) == (again, rank2)
    for row in basis:
        lead = next(x for x in row if x)
        assert lead == 1


def test_code_from_matrix_accepts_full_rank():
    code = code_from_matrix(GF2, G_11_3_6)
    assert (code.n, code.k, code.q) == (11, 3, 2)
    assert code.rows == G_11_3_6  # rows kept exactly as supplied
    eye = code_from_matrix(GF2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert (eye.n, eye.k) == (3, 3)


def test_code_from_matrix_rejections():
    with pytest.raises(RankDeficientError):
        code_from_matrix(GF2, [(1, 1, 0), (1, 1, 0)])
    with pytest.raises(EmptyMatrixError):
        code_from_matrix(GF2, [])
    with pytest.raises(EmptyMatrixError):
        code_from_matrix(GF2, [()])
    with pytest.raises(EntryOutOfRangeError):
        code_from_matrix(GF2, [(0, 2, 1)])


def test_code_from_matrix_auto_reduce():
    code = code_from_matrix(GF2, [(1, 1, 0), (1, 1, 0), (0, 1, 1)], auto_reduce=True)
    assert code.k == 2
    with pytest.raises(RankDeficientError):
        code_from_matrix(GF2, [(0, 0, 0)], auto_reduce=True)


def test_iter_codewords_matches_naive_oracle():
    for gf, rows in [
        (GF2, ((1, 0, 1, 1), (0, 1, 1, 0))),
        (GF3, ((1, 2, 0), (0, 1, 1))),
        (GF4, ((1, 2, 3), (0, 1, 2))),
    ]:
        code = LinearCode(gf, rows)
        assert list(iter_codewords(code)) == brute_codewords(gf, rows)


def test_iter_codewords_message_order():
    code = LinearCode(GF3, ((1, 0, 0), (0, 1, 0)))
    words = list(iter_codewords(code))
    # digit 0 scales rows[0]; messages 1, 2 are its multiples.
    assert words[0] == (0, 0, 0)
    assert words[1] == (1, 0, 0)
    assert words[2] == (2, 0, 0)
    assert words[3] == (0, 1, 0)  # message 3 = digit 1 of value 1
    assert words[5] == (2, 1, 0)


def test_spectrum_of_the_11_3_6_code():
    # Oracle: the eight codewords written out explicitly.
    code = LinearCode(GF2, G_11_3_6)
    words = brute_codewords(GF2, G_11_3_6)
    assert len(words) == 8
    expected = [0] * 12
    for w in words:
        expected[hamming_weight(w)] += 1
    assert spectrum(code).counts == tuple(expected)
    assert spectrum(code).nonzero() == {0: 1, 6: 6, 8: 1}


def test_spectrum_repetition_code():
    code = LinearCode(GF2, ((1, 1, 1, 1, 1),))
    assert spectrum(code).nonzero() == {0: 1, 5: 1}


def test_spectrum_limit():
    eye12 = tuple(tuple(int(i == j) for j in range(12)) for i in range(12))
    code = LinearCode(GF2, eye12)
    with pytest.raises(EnumerationTooLargeError) as err:
        spectrum(code, limit=2**11)
    assert "4096" in str(err.value)  # the required limit is stated


def test_spectrum_sum_invariant_small_random_codes():
    rng = SplitMix64(99)
    for _ in range(40):
        q = (2, 3, 4)[rng.below(3)]
        k = 1 + rng.below(3)
        n = k + rng.below(8)
        rows = []
        gf = make_field(q)
        while len(rows) < k:
            row = tuple(rng.below(q) for _ in range(n))
            _, rank = row_reduce(gf, rows + [row])
            if rank == len(rows) + 1:
                rows.append(row)
        spec = spectrum(LinearCode(gf, tuple(rows)))
        assert spec.total() == q**k
        assert spec.counts[0] == 1


def test_bitset_and_generic_spectrum_paths_agree():
    # 200 random binary codes with n <= 20, k <= 10.
    rng = SplitMix64(7)
    for _ in range(200):
        k = 1 + rng.below(10)
        n = k + rng.below(21 - k)
        rows = []
        while len(rows) < k:
            row = tuple(rng.below(2) for _ in range(n))
            _, rank = row_reduce(GF2, rows + [row])
            if rank == len(rows) + 1:
                rows.append(row)
        code = LinearCode(GF2, tuple(rows))
        assert _spectrum_gf2(code) == _spectrum_generic(code)


def test_min_distance_examples():
    assert min_distance(LinearCode(GF2, G_11_3_6)) == 6
    eye = LinearCode(GF2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert min_distance(eye) == 1


def test_code_params():
    from weightbounds.codes import CodeParams

    params = code_params(LinearCode(GF2, G_11_3_6))
    assert (params.n, params.k, params.d, params.q) == (11, 3, 6, 2)
    with pytest.raises(ParamRangeError):
        CodeParams(n=3, k=4, d=1, q=2)
    with pytest.raises(ParamRangeError):
        CodeParams(n=3, k=1, d=0, q=2)
    with pytest.raises(ParamRangeError):
        CodeParams(n=3, k=1, d=1, q=1)


def test_membership():
    code = LinearCode(GF2, G_11_3_6)
    words = brute_codewords(GF2, G_11_3_6)
    for w in words:
        assert in_row_space(code, w)
    assert not in_row_space(code, (1,) + (0,) * 10)


def test_residual_weight6_codeword():
    code = LinearCode(GF2, G_11_3_6)
    c2 = (1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0)
    res = residual(code, c2)
    assert (res.n, res.k) == (5, 2)
    # Oracle: puncture all eight codewords at supp(c2) and enumerate.
    keep = [j for j, x in enumerate(c2) if x == 0]
    punctured = {tuple(w[j] for j in keep) for w in brute_codewords(GF2, G_11_3_6)}
    assert punctured == set(iter_codewords(res))
    d_res = min_distance(res)
    assert d_res == min(hamming_weight(w) for w in punctured if any(w))
    assert d_res >= 6 - 6 + 3  # d - w + ceil(w/q)


def test_residual_weight8_codeword_still_in_window():
    # w = 8 < 12 = q*d, so the dimension guarantee applies here too.
    code = LinearCode(GF2, G_11_3_6)
    c1 = (1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0)
    res = residual(code, c1)
    assert (res.n, res.k) == (3, 2)
    assert min_distance(res) >= 6 - 8 + 4


def test_residual_single_surviving_coordinate():
    code = LinearCode(GF2, ((1, 1, 0), (0, 1, 1)))
    res = residual(code, (1, 1, 0))
    assert (res.n, res.k) == (1, 1)
    assert min_distance(res) == 1


def test_residual_outside_window_warns_and_reports_actual_rank():
    code = LinearCode(GF2, ((1, 0, 0, 0), (0, 1, 1, 1)))
    assert min_distance(code) == 1
    with pytest.warns(ResidualWindowWarning):
        res = residual(code, (0, 1, 1, 1))  # w = 3 >= q*d = 2
    assert (res.n, res.k) == (1, 1)


def test_residual_rejections():
    code = LinearCode(GF2, G_11_3_6)
    with pytest.raises(ZeroCodewordError):
        residual(code, (0,) * 11)
    with pytest.raises(NotACodewordError):
        residual(code, (1,) + (0,) * 10)
    rep = LinearCode(GF2, ((1, 1, 1),))
    with pytest.raises(DegenerateResidualError):
        residual(rep, (1, 1, 1))
    # k = 1: every puncture at a codeword support kills the whole row space.
    short = LinearCode(GF2, ((1, 1, 0),))
    with pytest.raises(DegenerateResidualError):
        residual(short, (1, 1, 0))


def test_residual_lemma_on_small_sample(corpus1000):
    from weightbounds.bounds import ceil_div

    for code in corpus1000[:120]:
        q, n, k = code.q, code.n, code.k
        d = min_distance(code)
        seen = set()
        for cw in iter_codewords(code):
            w = hamming_weight(cw)
            if w == 0 or w * (q - 1) >= q * d:
                continue
            support = tuple(j for j, x in enumerate(cw) if x)
            if support in seen:
                continue
            seen.add(support)
            res = residual(code, cw)
            assert res.n == n - w
            assert res.k == k - 1
            assert min_distance(res) >= d - w + ceil_div(w, q)


def test_find_codeword_of_weight():
    code = LinearCode(GF2, G_11_3_6)
    assert find_codeword_of_weight(code, 8) == (1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0)
    assert find_codeword_of_weight(code, 6) == (1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0)
    third = find_codeword_of_weight(code, 6, index=2)
    assert hamming_weight(third) == 6
    with pytest.raises(ValueError):
        find_codeword_of_weight(code, 7)
    with pytest.raises(ValueError):
        find_codeword_of_weight(code, 6, index=6)


def test_generator_file_round_trip():
    code = LinearCode(GF4, ((1, 2, 3, 0), (0, 1, 1, 2)))
    text = generator_text(code, comment="round trip\nsecond line")
    parsed = parse_generator_text(text)
    assert parsed == code
    assert text.startswith("# round trip\n# second line\n4 4 2\n")


def test_generator_file_errors():
    with pytest.raises(ValueError):
        parse_generator_text("# only comments\n")
    with pytest.raises(ValueError):
        parse_generator_text("2 3\n1 0 1\n")
    with pytest.raises(ValueError):
        parse_generator_text("2 3 2\n1 0 1\n")
    with pytest.raises(ValueError):
        parse_generator_text("2 3 1\n1 0\n")
    with pytest.raises(EntryOutOfRangeError):
        parse_generator_text("2 3 1\n1 0 5\n")


def test_weight_spectrum_properties():
    spec = WeightSpectrum((1, 0, 0, 4, 0, 3))
    assert spec.n == 5
    assert spec.min_distance == 3
    assert spec.max_weight == 5
    assert spec.total() == 8
    assert spec.nonzero() == {0: 1, 3: 4, 5: 3}

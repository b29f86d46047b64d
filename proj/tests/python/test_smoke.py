import pytest

import gencomp


def test_seeds_and_transforms():
    assert gencomp.make_seed("fib", 5) == [1, 1, 0, 0, 0]
    assert gencomp.invert_transform([1, 1, 0, 0, 0]) == [1, 2, 3, 5, 8]
    ones = gencomp.make_seed("ones", 6)
    assert gencomp.iterate_invert(ones, 2) == [3 ** (n - 1) for n in range(1, 7)]
    assert gencomp.f_via_triangle(ones, 2, 4) == 27


def test_triangle_paths_agree_and_return_python_ints():
    f0 = gencomp.make_seed("natural", 12)
    reference = gencomp.triangle(f0, 3, 12)
    for algo in ("conv", "bell", "pascal"):
        assert gencomp.triangle(f0, 3, 12, algo) == reference
    assert reference[2][1] == gencomp.triangle(f0, 3, 12)[2][1]
    assert isinstance(reference[-1][0], int)


def test_big_integers_cross_the_boundary():
    big = 10 ** 40 + 7
    assert gencomp.invert_transform([big]) == [big]
    assert gencomp.triangle([big, 1], 1, 2)[1][1] == big * big


def test_words_and_oracle():
    assert gencomp.count_words(2, 2, "isolated_zeros") == 3
    assert gencomp.count_words(3, 2, "avoid_01", 2, 1) == 4
    assert gencomp.composition_to_word([2, 3]) == [0, 1, 0, 0]
    assert gencomp.word_to_composition([0, 1, 0, 0]) == [2, 3]
    assert gencomp.oracle_c("fib", 2, 4, 2) == 10
    with pytest.raises(gencomp.EnumerationTooLargeError):
        gencomp.count_words(2, 30)


def test_identities():
    assert gencomp.check_id(3, 2)
    assert gencomp.check_cp(2, 3, 2)
    assert gencomp.chebyshev_U(2) == [-1, 0, 4]
    assert gencomp.check_chebyshev(3, 1)
    assert gencomp.check_closed_forms("two_three", 12, 3)
    assert gencomp.bell_invert_identity_check([1] * 6, 6)
    assert gencomp.partial_bell([1, 2, 6], 3, 2) == 6


def test_errors_map_to_python_exceptions():
    with pytest.raises(gencomp.InsufficientSeedError):
        gencomp.triangle([1, 1], 1, 3)
    with pytest.raises(ValueError):
        gencomp.make_seed("nope", 3)

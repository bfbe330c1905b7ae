import pytest

from sc7core.partitions import (
    c_count,
    conjugate,
    distinct_odd_partitions,
    from_diagonal_hooks,
    hook_lengths,
    is_t_core,
    partitions_of,
    sc_count,
    self_conjugate_partitions,
)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]


def test_partitions_of_counts_and_shape():
    for n, expected in enumerate(PARTITION_NUMBERS):
        ps = list(partitions_of(n))
        assert len(ps) == expected
        assert len(set(ps)) == expected
        for p in ps:
            assert sum(p) == n
            assert all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def test_partitions_of_max_part():
    got = sorted(partitions_of(6, 2))
    assert got == [(1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2)]


def test_conjugate_example():
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)
    assert conjugate(()) == ()


def test_conjugate_is_involution():
    for n in range(13):
        for p in partitions_of(n):
            q = conjugate(p)
            assert sum(q) == n
            assert conjugate(q) == p


def test_conjugate_rejects_bad_input():
    with pytest.raises(ValueError):
        conjugate((1, 2))
    with pytest.raises(ValueError):
        conjugate((3, 0))


def test_hook_lengths_example():
    assert hook_lengths((4, 3, 1)) == ((6, 4, 3, 1), (4, 2, 1), (1,))
    assert hook_lengths(()) == ()


def test_is_t_core_matches_hook_definition():
    for n in range(13):
        for p in partitions_of(n):
            hooks = [h for row in hook_lengths(p) for h in row]
            for t in (2, 3, 4, 5, 7):
                assert is_t_core(p, t) == all(h % t for h in hooks)


def test_t_core_invariant_under_conjugation():
    for n in range(13):
        for p in partitions_of(n):
            for t in (2, 3, 5, 7):
                assert is_t_core(p, t) == is_t_core(conjugate(p), t)


def test_distinct_odd_partitions_matches_filter():
    for n in range(26):
        got = list(distinct_odd_partitions(n))
        assert len(set(got)) == len(got)
        brute = [p for p in partitions_of(n)
                 if all(x % 2 for x in p) and len(set(p)) == len(p)]
        assert sorted(got) == sorted(brute)


def test_from_diagonal_hooks_roundtrip():
    # rebuilt partitions are self-conjugate with exactly the requested
    # diagonal hooks
    for n in range(26):
        for d in distinct_odd_partitions(n):
            p = from_diagonal_hooks(d)
            assert sum(p) == n
            assert conjugate(p) == p
            hooks = hook_lengths(p)
            assert tuple(hooks[i][i] for i in range(len(d))) == d


def test_from_diagonal_hooks_examples():
    assert from_diagonal_hooks(()) == ()
    assert from_diagonal_hooks((5,)) == (3, 1, 1)
    assert from_diagonal_hooks((5, 1)) == (3, 2, 1)
    assert from_diagonal_hooks((9, 3)) == (5, 3, 2, 1, 1)


def test_from_diagonal_hooks_rejects():
    with pytest.raises(ValueError):
        from_diagonal_hooks((4,))
    with pytest.raises(ValueError):
        from_diagonal_hooks((3, 5))
    with pytest.raises(ValueError):
        from_diagonal_hooks((5, 5))
    with pytest.raises(ValueError):
        from_diagonal_hooks((5, -1))


def test_self_conjugate_partitions_matches_filter():
    for n in range(21):
        got = self_conjugate_partitions(n)
        assert got == sorted(p for p in partitions_of(n) if conjugate(p) == p)


def test_sc_count_matches_naive_filter():
    # the pruned walker against the definition it is supposed to compute
    for n in range(41):
        scs = [p for p in partitions_of(n) if conjugate(p) == p]
        for t in (2, 3, 5, 7, 11):
            assert sc_count(n, t) == sum(1 for p in scs if is_t_core(p, t))


def test_sc_count_known_values():
    first = [1, 1, 0, 1, 1, 1, 1, 0, 1, 2, 1, 1, 2, 2, 0, 0, 3, 1, 1, 1]
    for n, expected in enumerate(first):
        assert sc_count(n, 7) == expected
    assert sc_count(25, 7) == 4


def test_sc_count_edges():
    assert sc_count(0, 7) == 1
    assert sc_count(0, 1) == 1
    # only the empty partition has no hooks at all
    for n in range(1, 15):
        assert sc_count(n, 1) == 0
    with pytest.raises(ValueError):
        sc_count(-1, 7)
    with pytest.raises(ValueError):
        sc_count(5, 0)


def test_c_count():
    # 30 partitions of 9; exactly 14 of them contain a hook of length 7,
    # so 16 survive.  (A circulating figure of 14 counts the complement.)
    assert c_count(9, 7) == 16
    assert c_count(9, 7) == 30 - 7 * c_count(2, 7)
    # against the raw hook-length definition, not the beta-set shortcut
    for n in range(19):
        for t in (2, 3, 5, 7):
            brute = sum(1 for p in partitions_of(n)
                        if all(h % t for row in hook_lengths(p) for h in row))
            assert c_count(n, t) == brute

from collections import deque

import pytest
from hypothesis import given, strategies as st

from geomitosis import weyl
from geomitosis.errors import DomainError, FormatError


def bfs_lengths(kind, n):
    """Word length of every element by breadth-first search on the Cayley graph."""
    start = weyl.identity(kind, n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, n + 1):
            u = weyl.apply_generator(kind, w, i)
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    return dist


@pytest.mark.parametrize("kind,n", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("C", 1), ("C", 2), ("C", 3)])
def test_length_matches_bfs(kind, n):
    dist = bfs_lengths(kind, n)
    assert set(dist) == set(weyl.elements(kind, n))
    for w, d in dist.items():
        assert weyl.length(kind, w) == d


@pytest.mark.parametrize("kind,n,order", [("A", 3, 24), ("A", 4, 120), ("C", 2, 8), ("C", 3, 48)])
def test_group_orders(kind, n, order):
    assert len(weyl.elements(kind, n)) == order


def test_longest_lengths():
    assert weyl.length("A", weyl.longest("A", 3)) == 6
    assert weyl.length("C", weyl.longest("C", 3)) == 9
    assert weyl.longest("C", 2) == (-1, -2)


def test_w0_bar_is_reduced_word_of_longest():
    for n in (1, 2, 3, 4):
        word = weyl.w0_bar(n)
        assert len(word) == n * n
        assert weyl.is_reduced("C", n, word)
        assert weyl.evaluate("C", n, word) == weyl.longest("C", n)
    assert weyl.w0_bar(2) == (1, 2, 1, 2)


def test_type_c_generators():
    assert weyl.apply_generator("C", (1, 2), 1) == (-1, 2)
    assert weyl.apply_generator("C", (1, 2), 2) == (2, 1)


def test_reduced_words_of_longest_a2():
    assert sorted(weyl.reduced_words("A", 2, weyl.longest("A", 2))) == [(1, 2, 1), (2, 1, 2)]


@pytest.mark.parametrize("n", [2, 3])
def test_reduced_subwords_match_brute_force(n):
    from itertools import combinations

    host = weyl.w0_bar(n)
    for target in weyl.elements("C", n):
        ell = weyl.length("C", target)
        brute = [
            tuple(p + 1 for p in S)
            for S in combinations(range(len(host)), ell)
            if weyl.evaluate("C", n, [host[p] for p in S]) == target
        ]
        assert sorted(weyl.reduced_subwords("C", n, host, target)) == sorted(brute)


def test_descents():
    w = weyl.evaluate("A", 3, (2, 1))
    assert weyl.descents("A", 3, w) == [1]


def test_errors():
    with pytest.raises(DomainError):
        weyl.check_element("A", 2, (1, 1, 2))
    with pytest.raises(DomainError):
        weyl.check_word("A", 2, (3,))
    with pytest.raises(FormatError):
        weyl.parse_word("1,x")
    assert weyl.parse_word("1,2,1") == (1, 2, 1)


def words(kind, n):
    return st.lists(st.integers(1, n), max_size=12)


@given(st.sampled_from([("A", 3), ("A", 4), ("C", 3)]).flatmap(lambda kn: st.tuples(st.just(kn), words(*kn))))
def test_word_properties(arg):
    (kind, n), word = arg
    w = weyl.evaluate(kind, n, word)
    assert weyl.length(kind, w) <= len(word)
    assert weyl.length(kind, w) % 2 == len(word) % 2
    assert weyl.length(kind, weyl.inverse(w)) == weyl.length(kind, w)
    assert weyl.evaluate(kind, n, word[::-1]) == weyl.inverse(w)
    assert weyl.is_reduced(kind, n, word) == (weyl.length(kind, w) == len(word))
    w0 = weyl.longest(kind, n)
    assert weyl.length(kind, weyl.multiply(w0, w)) == weyl.length(kind, w0) - weyl.length(kind, w)


@given(st.sampled_from([("A", 3), ("C", 2), ("C", 3)]).flatmap(lambda kn: st.tuples(st.just(kn), words(*kn), words(*kn))))
def test_evaluate_is_a_homomorphism(arg):
    (kind, n), u, v = arg
    assert weyl.evaluate(kind, n, u + v) == weyl.multiply(weyl.evaluate(kind, n, u), weyl.evaluate(kind, n, v))

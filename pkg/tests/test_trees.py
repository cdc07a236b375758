import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mediant.matrices import Mat2
from mediant.rational import ExtendedRational, is_z_distinct, mediant
from mediant.trees import (
    best_approximation,
    bfs_index,
    cw_locate,
    cw_unrank,
    cw_value,
    index_to_path,
    level_iter,
    sb_locate,
    sb_node,
    sb_row,
)


def er(num, den=1):
    return ExtendedRational(num, den)


# locate paths are as long as the continued-fraction quotient sum, so keep
# the random numerators small; big-integer coverage uses Fibonacci ratios
# whose quotients are all 1
paths = st.text(alphabet="LR", max_size=25)
positive = st.builds(
    ExtendedRational,
    st.integers(min_value=1, max_value=10**4),
    st.integers(min_value=1, max_value=10**4),
)


def test_cw_value_examples():
    assert cw_value("") == er(1, 1)
    assert cw_value("L") == er(1, 2)
    assert cw_value("R") == er(2, 1)
    assert cw_value("LLR") == er(4, 3)


def test_cw_unrank_examples():
    assert cw_unrank(0) == er(1, 1)
    assert cw_unrank(9) == er(3, 5)
    assert cw_unrank(4) == er(3, 2)
    with pytest.raises(ValueError):
        cw_unrank(-1)


def test_bfs_rank_agreement():
    # cw_value at the BFS-index-n path is exactly cw_unrank(n)
    for n in range(2**13):
        assert cw_value(index_to_path(n)) == cw_unrank(n)


def test_bfs_index_round_trip():
    assert bfs_index("") == 0
    assert bfs_index("LLR") == 8
    for n in range(2**12):
        assert bfs_index(index_to_path(n)) == n
    with pytest.raises(ValueError):
        index_to_path(-1)


@given(paths)
def test_bfs_index_inverts_paths(p):
    assert index_to_path(bfs_index(p)) == p


def test_cw_locate_examples():
    assert cw_locate(er(1, 1)) == ""
    assert cw_locate(er(4, 3)) == "LLR"


def test_cw_locate_47_13_against_bfs():
    target = er(47, 13)
    path = cw_locate(target)
    assert len(path) == 8
    assert cw_value(path) == target
    # brute-force BFS finds the same (unique) node
    hits = [
        "".join(w)
        for n in range(9)
        for w in product("LR", repeat=n)
        if cw_value("".join(w)) == target
    ]
    assert hits == [path]


def cf_quotient_sum(num, den):
    total = 0
    while den:
        q, r = divmod(num, den)
        total += q
        num, den = den, r
    return total


@given(positive)
def test_cw_path_length_is_cf_sum_minus_one(q):
    assert len(cw_locate(q)) == cf_quotient_sum(q.num, q.den) - 1


@pytest.mark.parametrize("bad", ["0/1", "-1/2", "1/0"])
def test_locate_rejects_nonpositive(bad):
    value = ExtendedRational.parse(bad)
    with pytest.raises(ValueError):
        cw_locate(value)
    with pytest.raises(ValueError):
        sb_locate(value)


def test_sb_node_examples():
    root = sb_node("")
    assert (root.lo, root.hi, root.value) == (er(0, 1), er(1, 0), er(1, 1))
    assert sb_node("L").value == er(1, 2)
    assert sb_node("R").value == er(2, 1)
    assert sb_node("RL").value == er(3, 2)


@given(paths)
def test_sb_node_invariants(p):
    node = sb_node(p)
    assert node.lo < node.value < node.hi
    assert node.value == mediant(node.lo, node.hi)
    assert is_z_distinct(node.lo, node.hi)
    assert is_z_distinct(node.lo, node.value)
    assert is_z_distinct(node.value, node.hi)


def test_sb_row_examples():
    assert sb_row(0) == [er(1, 1)]
    assert sb_row(1) == [er(1, 2), er(2, 1)]
    assert sb_row(3) == [
        er(1, 4), er(2, 5), er(3, 5), er(3, 4),
        er(4, 3), er(5, 3), er(5, 2), er(4, 1),
    ]
    with pytest.raises(ValueError):
        sb_row(-1)


def test_row_agreement_with_descent():
    # the literal row construction and the bounds descent must agree
    for r in range(13):
        by_descent = [sb_node("".join(w)).value for w in product("LR", repeat=r)]
        assert sb_row(r) == by_descent


def test_rows_strictly_increasing():
    for r in range(12):
        row = sb_row(r)
        assert all(a < b for a, b in zip(row, row[1:]))


def test_in_order_traversal_sorted():
    def in_order(path, depth):
        if len(path) < depth:
            yield from in_order(path + "L", depth)
        yield sb_node(path).value
        if len(path) < depth:
            yield from in_order(path + "R", depth)

    values = list(in_order("", 8))
    assert all(a < b for a, b in zip(values, values[1:]))


def test_brocot_sequence_neighbors_z_distinct():
    values = []
    for r in range(9):
        values.extend(sb_row(r))
        brocot = [er(0, 1)] + sorted(values) + [er(1, 0)]
        assert all(is_z_distinct(a, b) for a, b in zip(brocot, brocot[1:]))


def test_sb_locate_examples():
    assert sb_locate(er(1, 1)) == ""
    assert sb_locate(er(2, 5)) == "LLR"
    assert sb_node(sb_locate(er(355, 113))).value == er(355, 113)


@given(positive)
def test_locate_round_trips(q):
    assert cw_value(cw_locate(q)) == q
    assert sb_node(sb_locate(q)).value == q


def test_locate_small_values_round_trip():
    for p in range(1, 26):
        for q in range(1, 26):
            if math.gcd(p, q) != 1:
                continue
            v = er(p, q)
            assert cw_value(cw_locate(v)) == v
            assert sb_node(sb_locate(v)).value == v


def test_locate_big_integers():
    a, b = 1, 1
    for _ in range(200):
        a, b = a + b, a
    v = er(a, b)
    assert a > 2**130
    path = cw_locate(v)
    assert len(path) == 200
    assert cw_value(path) == v
    assert sb_node(sb_locate(v)).value == v


def test_no_duplicate_values_to_depth_10():
    for kind in ("calkin-wilf", "stern-brocot"):
        values = [node.value for node in level_iter(kind, 10)]
        assert len(set(values)) == len(values)


def test_best_approximation_examples():
    assert best_approximation(1, 2, 10) == er(1, 2)
    assert best_approximation(2, 4, 10) == er(1, 2)
    assert best_approximation(314159, 100000, 10) == er(22, 7)
    # closest denominator <= 112 value to 355/113 (1/11978 away)
    assert best_approximation(355, 113, 112) == er(333, 106)


def test_best_approximation_validation():
    with pytest.raises(ValueError):
        best_approximation(1, 2, 0)
    with pytest.raises(ValueError):
        best_approximation(0, 1, 10)
    with pytest.raises(ValueError):
        best_approximation(-3, 2, 10)
    with pytest.raises(ValueError):
        best_approximation(1, 0, 10)


def brute_best(target_num, target_den, max_den):
    target = Fraction(target_num, target_den)
    best = None
    for q in range(1, max_den + 1):
        floor = target_num * q // target_den
        for p in (floor, floor + 1):
            if p < 0:
                continue
            candidate = Fraction(p, q)
            key = (abs(target - candidate), candidate.denominator, candidate.numerator)
            if best is None or key < best:
                best = key
    return ExtendedRational(best[2], best[1])


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=1, max_value=120),
)
def test_best_approximation_matches_brute_force(num, den, max_den):
    assert best_approximation(num, den, max_den) == brute_best(num, den, max_den)


def test_best_approximation_tie_breaking():
    # 1/2 is exactly between 0/1 and 1/1; smaller numerator wins
    assert best_approximation(1, 2, 1) == er(0, 1)
    assert best_approximation(3, 2, 1) == er(1, 1)


def test_level_iter_calkin_wilf():
    nodes = list(level_iter("calkin-wilf", 2))
    assert [str(n.value) for n in nodes] == ["1/1", "1/2", "2/1", "1/3", "3/2", "2/3", "3/1"]


def test_level_iter_stern_brocot():
    nodes = list(level_iter("stern-brocot", 2))
    assert [str(n.value) for n in nodes] == ["1/1", "1/2", "2/1", "1/3", "2/3", "3/2", "3/1"]


def test_level_iter_matrix():
    nodes = list(level_iter("matrix", 1))
    assert [n.value for n in nodes] == [Mat2(1, 0, 0, 1), Mat2(1, 0, 1, 1), Mat2(1, 1, 0, 1)]


def test_level_iter_node_fields():
    for node in level_iter("calkin-wilf", 6):
        assert node.level == len(node.path)
        assert bfs_index(node.path) == (1 << node.level) - 1 + node.offset


@pytest.mark.parametrize("kind", ["calkin-wilf", "stern-brocot", "matrix"])
def test_level_iter_subtree_prefix(kind):
    whole = {n.path: n for n in level_iter(kind, 6)}
    shard = list(level_iter(kind, 6, "LR"))
    assert [n.path for n in shard] == [p for p in whole if p.startswith("LR")]
    assert all(whole[n.path] == n for n in shard)


def test_level_iter_validates_before_iteration():
    with pytest.raises(ValueError):
        level_iter("bird", 2)
    with pytest.raises(ValueError):
        level_iter("calkin-wilf", -1)
    with pytest.raises(ValueError):
        level_iter("calkin-wilf", 2, "LLL")


def test_level_iter_count():
    assert sum(1 for _ in level_iter("stern-brocot", 9)) == 2**10 - 1

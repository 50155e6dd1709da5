import hashlib
import random
from itertools import islice

import pytest

from hfcodec.hftree import (
    Atom,
    Forest,
    FUN_STYLE,
    ParseError,
    SET_STYLE,
    codec_hff,
    codec_hff1,
    codec_hff2,
    codec_hfp,
    codec_hfs,
    dag_to_dot,
    deserialize,
    enumerate_trees,
    fun_show,
    fun_show1,
    fun_show2,
    hff2nat,
    hfs2nat,
    nat2hff,
    nat2hfs,
    perm_show,
    rank,
    render,
    serialize,
    set_show,
    to_dag,
    to_dot,
    unrank,
)

ALL_CODECS = [codec_hfs, codec_hff, codec_hff1, codec_hff2, codec_hfp]


def F(*ts):
    return Forest(ts)


def atom_values(t):
    # iterative walk so deep trees stay checkable
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.append(node.value)
        else:
            stack.extend(node.children)
    return out


def subtrees(t):
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Forest):
            stack.extend(node.children)


def test_equality_and_hash():
    assert Atom(3) == Atom(3)
    assert Atom(3) != Atom(4)
    assert Atom(0) != F()
    assert F(Atom(1), F()) == F(Atom(1), F())
    assert F(Atom(1), F()) != F(F(), Atom(1))
    assert hash(F(Atom(1), F())) == hash(F(Atom(1), F()))
    assert len({Atom(2), Atom(2), F(Atom(2)), F(Atom(2))}) == 2


def test_deep_chain_is_safe():
    # a unary chain far past the interpreter recursion limit
    a = b = F()
    for _ in range(5000):
        a, b = F(a), F(b)
    assert a == b
    assert hash(a) == hash(b)
    assert deserialize(serialize(a)) == a
    assert a != F(Atom(0))


def test_hfs_golden_trees():
    c = codec_hfs()
    assert unrank(c, 0) == F()
    assert unrank(c, 1) == F(F())
    assert unrank(c, 42) == F(F(F()), F(F(), F(F())), F(F(), F(F(F()))))
    assert rank(c, unrank(c, 42)) == 42


def test_hff_golden_trees():
    c = codec_hff()
    assert unrank(c, 0) == F()
    assert unrank(c, 1) == F(F())
    assert unrank(c, 42) == F(F(F()), F(F()), F(F()))
    assert rank(c, F(F(F()), F(F()), F(F()))) == 42


def test_hfp_golden_tree():
    c = codec_hfp(10)
    assert unrank(c, 42) == F(Atom(3), Atom(2), Atom(0), Atom(1))
    assert rank(c, F(Atom(3), Atom(2), Atom(0), Atom(1))) == 42


def test_ulimit_golden_trees():
    assert unrank(codec_hfs(4), 12345) == F(
        Atom(0), Atom(2), F(), F(Atom(0)), F(Atom(3)), F(Atom(0), Atom(3))
    )
    assert unrank(codec_hff(4), 12345) == F(
        Atom(0), Atom(1), Atom(1), Atom(0), F(Atom(1)), Atom(0)
    )


@pytest.mark.parametrize("make", ALL_CODECS)
@pytest.mark.parametrize("ulimit", [0, 2, 10])
def test_round_trip(make, ulimit):
    c = make(ulimit)
    rng = random.Random(13)
    ns = list(range(2000)) + [rng.getrandbits(256) for _ in range(25)]
    for n in ns:
        t = unrank(c, n)
        assert rank(c, t) == n
        assert all(v < ulimit for v in atom_values(t))


@pytest.mark.parametrize("make", ALL_CODECS)
def test_expand_shrinks(make):
    # termination argument: every child code is strictly below its parent's
    for ulimit in (0, 2, 10):
        c = make(ulimit)
        for n in range(1, 3000):
            assert all(e < n for e in c.expand(n))


def test_enumerate_trees():
    got = list(islice(enumerate_trees(codec_hfs()), 5))
    assert got == [F(), F(F()), F(F(F())), F(F(), F(F())), F(F(F(F())))]
    assert next(enumerate_trees(codec_hfs(), start=5)) == unrank(codec_hfs(), 5)


def test_render_goldens():
    assert set_show(42) == "{{{}},{{},{{}}},{{},{{{}}}}}"
    assert set_show(0) == "{}"
    assert fun_show(0) == "()"
    assert fun_show(1234567890) == (
        "((()) ((())) (()) () (()) (() () ()) () (()) ((())) () ((())) ((())))"
    )
    assert fun_show(1234567890, 10) == "(3 2 0 1 7 0 1 2 0 2 2)"
    assert fun_show1(1234567890, 10) == "(((((0 3)) (((2 0 1))) 1)))"
    assert fun_show2(1234567890, 10) == "(2 0 1 1 0 0 6 1 0 0 1 1 1 0 1 0)"
    assert perm_show(42, 10) == "(3 2 0 1)"
    assert perm_show(1234567890, 10) == "(1 6 (0) 2 0 3 0 7 5 (0 1) 9 4 8)"


def test_render_zero_rule():
    # an empty forest prints as 0 only when that digit cannot be an atom's
    assert fun_show(10, 10) == "0"
    assert fun_show(10) == "((()) (()))"
    assert render(FUN_STYLE, 2, F(F(), Atom(1))) == "(0 1)"
    assert render(FUN_STYLE, 1, F(F())) == "(())"
    assert render(SET_STYLE, 0, F(F(), F(F()))) == "{{},{{}}}"


def test_render_rejects_out_of_range_atoms():
    with pytest.raises(ValueError, match="out of range"):
        render(FUN_STYLE, 2, F(Atom(2)))
    with pytest.raises(ValueError, match="out of range"):
        rank(codec_hfs(3), F(Atom(3)))


def test_serialize_goldens():
    assert serialize(Atom(7)) == "a7"
    assert serialize(F()) == "()"
    assert serialize(F(Atom(2), F())) == "(a2 ())"
    assert serialize(F(F(Atom(0)), Atom(10))) == "((a0) a10)"


def test_deserialize_round_trip():
    rng = random.Random(13)
    for make in ALL_CODECS:
        for ulimit in (0, 2, 10):
            c = make(ulimit)
            for n in list(range(300)) + [rng.getrandbits(128) for _ in range(10)]:
                t = unrank(c, n)
                assert deserialize(serialize(t)) == t


def test_deserialize_is_lenient_about_spacing():
    assert deserialize("( a1  a2 )") == F(Atom(1), Atom(2))
    assert deserialize(" () ") == F()
    assert deserialize("a7") == Atom(7)


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        (")", 0),
        ("(", 1),
        ("a", 0),
        ("(a2 x)", 4),
        ("() ()", 3),
        ("(a2))", 4),
        ("a1 a2", 3),
    ],
)
def test_deserialize_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        deserialize(text)
    assert exc.value.position == pos


def test_unrank_depth_cap():
    c = codec_hfs()
    with pytest.raises(RecursionError):
        unrank(c, 1 << 65536, max_depth=3)
    # same shape fits under a generous cap
    unrank(c, 1 << 600, max_depth=10_000)


def test_deserialize_depth_cap():
    with pytest.raises(ParseError):
        deserialize("((((()))))", max_depth=3)
    assert deserialize("((((()))))", max_depth=10) == F(F(F(F(F()))))


def test_deep_hff1_round_trip():
    c = codec_hff1()
    n = random.Random(13).getrandbits(2000) | (1 << 1999)
    t = unrank(c, n)
    assert rank(c, t) == n
    assert deserialize(serialize(t)) == t


def test_to_dag_shares_repeats():
    d = to_dag(Atom(5))
    assert len(d.nodes) == 1
    assert d.edges == []

    d = to_dag(F(F(), F()))
    assert len(d.nodes) == 2
    assert len(d.edges) == 2

    t = nat2hfs(42)
    d = to_dag(t)
    distinct = {serialize(s) for s in subtrees(t)}
    assert len(d.nodes) == len(distinct) == 6
    # children are interned before their parents
    for node in d.nodes:
        for child in node.children:
            assert child < node.id


def test_dag_edges_keep_child_order():
    t = F(Atom(1), F(Atom(1)), Atom(1))
    d = to_dag(t)
    root = d.nodes[d.root]
    assert [ordinal for p, ordinal, c in d.edges if p == root.id] == [0, 1, 2]
    assert sum(1 for n in d.nodes if n.atom == 1) == 1
    a1 = next(n.id for n in d.nodes if n.atom == 1)
    assert sum(1 for p, o, c in d.edges if c == a1) == 3


def test_dot_output():
    dot = to_dot(F(F(), F()))
    assert dot.startswith("digraph")
    assert dot.rstrip().endswith("}")
    empty_label = hashlib.sha256(b"()").hexdigest()[:8]
    assert empty_label in dot
    assert '[label="0"]' in dot and '[label="1"]' in dot

    dot = dag_to_dot(to_dag(Atom(3)), hash_len=4)
    assert hashlib.sha256(b"a3").hexdigest()[:4] in dot


def test_wrapper_functions_accept_ulimit():
    assert nat2hfs(42) == unrank(codec_hfs(), 42)
    assert nat2hff(12345, 4) == unrank(codec_hff(4), 12345)
    assert hfs2nat(nat2hfs(2008)) == 2008
    assert hff2nat(nat2hff(2008, 10), 10) == 2008


def test_negative_input_rejected():
    with pytest.raises(ValueError):
        unrank(codec_hfs(), -1)
    with pytest.raises(ValueError):
        Atom(-1)

"""Rose trees over nested sets, functions, and permutations, with integer codecs.

A Codec bundles an atom bound (ulimit) with an expand/collapse pair that
maps a natural to the list of its children's codes and back.  unrank
grows a number into a tree: values below ulimit stay atoms, everything
else is shifted down by ulimit, expanded, and decoded recursively.  rank
folds a tree back to its number.  With ulimit 0 no atoms occur and the
trees are pure nestings of empty forests.

Five stock codecs are provided: hfs (hereditarily finite sets via the
Ackermann encoding), hff (finite functions), hff1 (length-tagged
tuples), hff2 (run lengths), and hfp (finite permutations).

All tree walks here use explicit stacks, so trees thousands of levels
deep decode, fold, print, and parse without touching the interpreter's
recursion limit.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Iterable, Iterator, Sequence

from . import pairing, permcodec, setfun


@dataclass(frozen=True, slots=True, eq=False)
class Atom:
    """Leaf carrying an urelement value below the codec's atom bound."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"atom value must be a natural, got {self.value}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Atom):
            return self.value == other.value
        if isinstance(other, Forest):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((Atom, self.value))


@dataclass(frozen=True, slots=True, eq=False)
class Forest:
    """Interior node holding an ordered sequence of subtrees.

    Equality is structural and hashing is cached bottom-up; both walk
    the tree with explicit stacks so that very deep trees compare and
    hash without hitting the interpreter's recursion limit.
    """

    children: tuple["Tree", ...] = ()
    _hash: int | None = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Atom):
            return False
        if not isinstance(other, Forest):
            return NotImplemented
        stack: list[tuple[Tree, Tree]] = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b):
                return False
            if isinstance(a, Atom):
                if a.value != b.value:
                    return False
            elif len(a.children) != len(b.children):
                return False
            else:
                stack.extend(zip(a.children, b.children))
        return True

    def __hash__(self) -> int:
        if self._hash is None:
            stack: list[Forest] = [self]
            while stack:
                node = stack[-1]
                if node._hash is not None:
                    stack.pop()
                    continue
                pending = [c for c in node.children
                           if isinstance(c, Forest) and c._hash is None]
                if pending:
                    stack.extend(pending)
                else:
                    stack.pop()
                    h = hash((Forest, tuple(hash(c) for c in node.children)))
                    object.__setattr__(node, "_hash", h)
        return self._hash


Tree = Atom | Forest


@dataclass(frozen=True)
class Codec:
    """Atom bound plus a bijective expand/collapse pair on naturals.

    Termination contract: every value expand(n) produces must be below
    n + ulimit, so decoding strictly descends; collapse must invert
    expand exactly.
    """

    name: str
    ulimit: int
    expand: Callable[[int], list[int]]
    collapse: Callable[[Sequence[int]], int]


def codec_hfs(ulimit: int = 0) -> Codec:
    """Hereditarily finite sets: children are the bit positions of the code."""
    return Codec("hfs", ulimit, setfun.nat2set, setfun.set2nat)


def codec_hff(ulimit: int = 0) -> Codec:
    """Hereditarily finite functions: children are gap-coded tuple values."""
    return Codec("hff", ulimit, setfun.nat2fun, setfun.fun2nat)


def codec_hff1(ulimit: int = 0) -> Codec:
    """Length-tagged tuple variant; tends to produce deep, narrow trees."""
    return Codec("hff1", ulimit, pairing.nat2ftuple, pairing.ftuple2nat)


def codec_hff2(ulimit: int = 0) -> Codec:
    """Run-length variant: children count the code's alternating bit runs."""
    return Codec("hff2", ulimit, setfun.nat2rle, setfun.rle2nat)


def codec_hfp(ulimit: int = 0) -> Codec:
    """Hereditarily finite permutations: children form a permutation."""
    return Codec("hfp", ulimit, permcodec.nat2perm, permcodec.perm2nat)


def unrank(codec: Codec, n: int, max_depth: int | None = None) -> Tree:
    """Decode n into a tree: Atom(n) below ulimit, else a forest of children.

    max_depth, when given, bounds the nesting depth and raises
    RecursionError beyond it instead of consuming unbounded memory.
    """
    u = codec.ulimit
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n < u:
        return Atom(n)
    stack: list[tuple[list[int], list[Tree]]] = [(codec.expand(n - u), [])]
    while True:
        ranks, built = stack[-1]
        if len(built) == len(ranks):
            stack.pop()
            node = Forest(tuple(built))
            if not stack:
                return node
            stack[-1][1].append(node)
            continue
        m = ranks[len(built)]
        if m < u:
            built.append(Atom(m))
        else:
            if max_depth is not None and len(stack) >= max_depth:
                raise RecursionError(f"tree depth exceeds limit {max_depth}")
            stack.append((codec.expand(m - u), []))


def rank(codec: Codec, t: Tree) -> int:
    """Fold a tree back to its code; exact inverse of unrank."""
    u = codec.ulimit
    if isinstance(t, Atom):
        return _atom_value(t, u)
    stack: list[tuple[tuple[Tree, ...], list[int]]] = [(t.children, [])]
    while True:
        children, ranks = stack[-1]
        if len(ranks) == len(children):
            stack.pop()
            value = u + codec.collapse(ranks)
            if not stack:
                return value
            stack[-1][1].append(value)
            continue
        child = children[len(ranks)]
        if isinstance(child, Atom):
            ranks.append(_atom_value(child, u))
        else:
            stack.append((child.children, []))


def _atom_value(a: Atom, ulimit: int) -> int:
    if a.value >= ulimit:
        raise ValueError(f"atom {a.value} out of range for ulimit {ulimit}")
    return a.value


def enumerate_trees(codec: Codec, start: int = 0) -> Iterator[Tree]:
    """Yield unrank(codec, n) for n = start, start + 1, ... without end."""
    for n in count(start):
        yield unrank(codec, n)


# --- wrappers pairing each stock codec with its inverse -----------------

def nat2hfs(n: int, ulimit: int = 0) -> Tree:
    return unrank(codec_hfs(ulimit), n)


def hfs2nat(t: Tree, ulimit: int = 0) -> int:
    return rank(codec_hfs(ulimit), t)


def nat2hff(n: int, ulimit: int = 0) -> Tree:
    return unrank(codec_hff(ulimit), n)


def hff2nat(t: Tree, ulimit: int = 0) -> int:
    return rank(codec_hff(ulimit), t)


def nat2hff1(n: int, ulimit: int = 0) -> Tree:
    return unrank(codec_hff1(ulimit), n)


def hff2nat1(t: Tree, ulimit: int = 0) -> int:
    return rank(codec_hff1(ulimit), t)


def nat2hff2(n: int, ulimit: int = 0) -> Tree:
    return unrank(codec_hff2(ulimit), n)


def hff2nat2(t: Tree, ulimit: int = 0) -> int:
    return rank(codec_hff2(ulimit), t)


def nat2hfp(n: int, ulimit: int = 0) -> Tree:
    return unrank(codec_hfp(ulimit), n)


def hfp2nat(t: Tree, ulimit: int = 0) -> int:
    return rank(codec_hfp(ulimit), t)


# --- textual rendering --------------------------------------------------

@dataclass(frozen=True)
class RenderStyle:
    """Bracket pair and separator used when printing a forest."""

    open: str
    separator: str
    close: str


SET_STYLE = RenderStyle("{", ",", "}")
FUN_STYLE = RenderStyle("(", " ", ")")


def render(style: RenderStyle, ulimit: int, t: Tree) -> str:
    """Bracketed text form of a tree.

    Atoms print as decimals.  An empty forest prints as "0" when
    ulimit > 1, deliberately conflating it with Atom(0): with atoms in
    play the fully bracketed form is much harder to scan, and both
    objects fold back to small fixed codes anyway.
    """
    out: list[str] = []
    stack: list[Tree | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Atom):
            out.append(str(_atom_value(item, ulimit)))
        elif not item.children:
            out.append("0" if ulimit > 1 else style.open + style.close)
        else:
            pieces: list[Tree | str] = [style.open]
            for i, child in enumerate(item.children):
                if i:
                    pieces.append(style.separator)
                pieces.append(child)
            pieces.append(style.close)
            stack.extend(reversed(pieces))
    return "".join(out)


def set_show(n: int, ulimit: int = 0) -> str:
    """n as a braces-and-commas hereditarily finite set."""
    return render(SET_STYLE, ulimit, nat2hfs(n, ulimit))


def fun_show(n: int, ulimit: int = 0) -> str:
    """n as a parenthesized hereditarily finite function."""
    return render(FUN_STYLE, ulimit, nat2hff(n, ulimit))


def fun_show1(n: int, ulimit: int = 0) -> str:
    """n as a parenthesized tree under the length-tagged tuple codec."""
    return render(FUN_STYLE, ulimit, nat2hff1(n, ulimit))


def fun_show2(n: int, ulimit: int = 0) -> str:
    """n as a parenthesized tree under the run-length codec."""
    return render(FUN_STYLE, ulimit, nat2hff2(n, ulimit))


def perm_show(n: int, ulimit: int = 0) -> str:
    """n as a parenthesized hereditarily finite permutation."""
    return render(FUN_STYLE, ulimit, nat2hfp(n, ulimit))


# --- canonical serialization --------------------------------------------

class ParseError(ValueError):
    """Malformed tree text; position is the index of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def serialize(t: Tree) -> str:
    """Canonical text: atoms as aN, forests as space-separated paren groups.

    Forest[Atom(2), Forest()] serializes to "(a2 ())".
    """
    out: list[str] = []
    stack: list[Tree | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Atom):
            out.append(f"a{item.value}")
        elif not item.children:
            out.append("()")
        else:
            pieces: list[Tree | str] = ["("]
            for i, child in enumerate(item.children):
                if i:
                    pieces.append(" ")
                pieces.append(child)
            pieces.append(")")
            stack.extend(reversed(pieces))
    return "".join(out)


def deserialize(text: str, max_depth: int | None = None) -> Tree:
    """Parse serialize() output back into a tree, reporting error positions."""
    stack: list[list[Tree]] = []
    result: Tree | None = None
    i, end = 0, len(text)
    while i < end:
        c = text[i]
        match c:
            case " ":
                i += 1
            case "(":
                if result is not None:
                    raise ParseError("trailing input after complete tree", i)
                if max_depth is not None and len(stack) >= max_depth:
                    raise ParseError(f"nesting exceeds depth limit {max_depth}", i)
                stack.append([])
                i += 1
            case ")":
                if not stack:
                    raise ParseError("unmatched ')'", i)
                node = Forest(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                else:
                    result = node
                i += 1
            case "a":
                if result is not None:
                    raise ParseError("trailing input after complete tree", i)
                j = i + 1
                while j < end and "0" <= text[j] <= "9":
                    j += 1
                if j == i + 1:
                    raise ParseError("atom tag 'a' without digits", i)
                node = Atom(int(text[i + 1 : j]))
                if stack:
                    stack[-1].append(node)
                else:
                    result = node
                i = j
            case _:
                raise ParseError(f"unexpected character {c!r}", i)
    if stack:
        raise ParseError("unclosed '('", end)
    if result is None:
        raise ParseError("empty input", 0)
    return result


# --- shared-subtree DAG and Graphviz export -----------------------------

@dataclass(frozen=True)
class DagNode:
    """One distinct subtree: an atom value or an ordered list of child ids."""

    id: int
    atom: int | None
    children: tuple[int, ...]


@dataclass(frozen=True)
class Dag:
    """A tree with structurally identical subtrees merged into shared nodes.

    Node ids are assigned bottom-up, so children always precede parents.
    """

    root: int
    nodes: tuple[DagNode, ...]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Every (parent id, child ordinal, child id) triple."""
        return [
            (node.id, i, c)
            for node in self.nodes
            for i, c in enumerate(node.children)
        ]


def to_dag(t: Tree) -> Dag:
    """Merge identical subtrees of t; sharing is exact, keyed on child ids."""
    interned: dict[tuple, int] = {}
    nodes: list[DagNode] = []

    def intern(key: tuple, atom: int | None, children: tuple[int, ...]) -> int:
        nid = interned.get(key)
        if nid is None:
            nid = len(nodes)
            interned[key] = nid
            nodes.append(DagNode(nid, atom, children))
        return nid

    def intern_atom(a: Atom) -> int:
        return intern(("a", a.value), a.value, ())

    if isinstance(t, Atom):
        return Dag(intern_atom(t), tuple(nodes))
    stack: list[tuple[Forest, list[int]]] = [(t, [])]
    while True:
        node, ids = stack[-1]
        if len(ids) == len(node.children):
            stack.pop()
            nid = intern(("f", tuple(ids)), None, tuple(ids))
            if not stack:
                return Dag(nid, tuple(nodes))
            stack[-1][1].append(nid)
            continue
        child = node.children[len(ids)]
        if isinstance(child, Atom):
            ids.append(intern_atom(child))
        else:
            stack.append((child, []))


def dag_to_dot(dag: Dag, hash_len: int = 8) -> str:
    """Graphviz digraph with nodes labeled by a hash prefix of their text form.

    Edges run from container to element and carry the 0-based child ordinal.
    """
    texts: dict[int, str] = {}
    for node in dag.nodes:  # ids are bottom-up, so child texts already exist
        if node.atom is not None:
            texts[node.id] = f"a{node.atom}"
        elif not node.children:
            texts[node.id] = "()"
        else:
            texts[node.id] = "(" + " ".join(texts[c] for c in node.children) + ")"
    lines = ["digraph tree {"]
    for node in dag.nodes:
        digest = hashlib.sha256(texts[node.id].encode("ascii")).hexdigest()
        lines.append(f'  n{node.id} [label="{digest[:hash_len]}"];')
    for parent, ordinal, child in dag.edges:
        lines.append(f'  n{parent} -> n{child} [label="{ordinal}"];')
    lines.append("}")
    return "\n".join(lines)


def to_dot(t: Tree) -> str:
    """Graphviz text for a tree's shared-subtree DAG."""
    return dag_to_dot(to_dag(t))

"""hfcodec command line tool.

Subcommands: decode (number -> structure), encode (structure -> number),
enumerate (stream consecutive decodes), show and dot (rendered forms of
tree decodes), and selfcheck (run every codec law).  Exit codes: 0 on
success, 1 when selfcheck finds a broken law, 2 on usage, parse, or
domain errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import hftree, pairing, permcodec, selfcheck, setfun

FLAT_CODECS = (
    "set", "fun", "ftuple", "rle", "perm", "factoradic-r", "factoradic-l",
    "pair-cantor", "pair-pepis", "pair-bitmerge", "tuple",
)
TREE_CODECS = ("hfs", "hff", "hff1", "hff2", "hfp")
CODEC_NAMES = FLAT_CODECS + TREE_CODECS

_TREE_MAKERS = {
    "hfs": hftree.codec_hfs,
    "hff": hftree.codec_hff,
    "hff1": hftree.codec_hff1,
    "hff2": hftree.codec_hff2,
    "hfp": hftree.codec_hfp,
}

_DEFAULT_DEPTH_LIMIT = 1_000_000


class UsageError(ValueError):
    """Bad flag combination or malformed input; maps to exit code 2."""


def _parse_natural(text: str) -> int:
    s = text.strip()
    if s.lower().startswith("0x"):
        body, base = s[2:], 16
        ok = body != "" and all(c in "0123456789abcdefABCDEF" for c in body)
    else:
        body, base = s, 10
        ok = body.isascii() and body.isdigit()
    if not ok:
        raise UsageError(f"not a natural number: {text!r}")
    return int(body, base)


def _parse_nat_list(text: str) -> list[int]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise UsageError(f"expected a bracketed list like [1,0,2], got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return []
    return [_parse_natural(tok) for tok in inner.split(",")]


def _depth_limit() -> int:
    raw = os.environ.get("HFCODEC_RECURSION_LIMIT")
    if raw is None:
        return _DEFAULT_DEPTH_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise UsageError(f"HFCODEC_RECURSION_LIMIT must be an integer, got {raw!r}")
    if limit < 1:
        raise UsageError(f"HFCODEC_RECURSION_LIMIT must be >= 1, got {limit}")
    return limit


def _format_list(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _check_flags(args: argparse.Namespace) -> None:
    codec = args.codec
    if args.ulimit and codec not in TREE_CODECS:
        raise UsageError(f"--ulimit applies to tree codecs only, not {codec!r}")
    if getattr(args, "arity", None) is not None and codec != "tuple":
        raise UsageError("--arity applies to the tuple codec only")
    if getattr(args, "sized", False) and codec != "perm":
        raise UsageError("--sized applies to the perm codec only")
    if codec == "tuple" and getattr(args, "arity", None) is None and args.command != "encode":
        raise UsageError("the tuple codec needs --arity")


def _resolve_format(codec: str, fmt: str | None, command: str) -> str:
    if fmt is None:
        fmt = "tree" if codec in TREE_CODECS else "list"
    if fmt in ("show", "tree", "dot") and codec not in TREE_CODECS:
        raise UsageError(f"format {fmt!r} needs a tree codec, not {codec!r}")
    if fmt == "list" and codec in TREE_CODECS:
        raise UsageError(f"format 'list' needs a flat codec, not {codec!r}")
    if fmt == "dot" and command == "enumerate":
        raise UsageError("format 'dot' is multi-line and cannot be streamed")
    return fmt


def _tree_style(codec: str) -> hftree.RenderStyle:
    return hftree.SET_STYLE if codec == "hfs" else hftree.FUN_STYLE


def _decode_flat(codec: str, n: int, arity: int | None) -> list[int]:
    if codec == "set":
        return setfun.nat2set(n)
    if codec == "fun":
        return setfun.nat2fun(n)
    if codec == "ftuple":
        return pairing.nat2ftuple(n)
    if codec == "rle":
        return setfun.nat2rle(n)
    if codec == "perm":
        return permcodec.nat2perm(n)
    if codec == "factoradic-r":
        return permcodec.fr(n)
    if codec == "factoradic-l":
        return permcodec.fl(n)
    if codec == "pair-cantor":
        return list(pairing.cantor_unpair(n))
    if codec == "pair-pepis":
        return list(pairing.pepis_unpair(n))
    if codec == "pair-bitmerge":
        return list(pairing.bitmerge_unpair(n))
    if codec == "tuple":
        return pairing.to_tuple(arity, n)
    raise UsageError(f"unknown codec {codec!r}")


def _encode_flat(codec: str, values: list[int], arity: int | None) -> int:
    if codec == "set":
        return setfun.set2nat(values)
    if codec == "fun":
        return setfun.fun2nat(values)
    if codec == "ftuple":
        return pairing.ftuple2nat(values)
    if codec == "rle":
        return setfun.rle2nat(values)
    if codec == "perm":
        return permcodec.perm2nat(values)
    if codec == "factoradic-r":
        return permcodec.rf(values)
    if codec == "factoradic-l":
        return permcodec.lf(values)
    if codec in ("pair-cantor", "pair-pepis", "pair-bitmerge"):
        if len(values) != 2:
            raise UsageError(f"{codec} expects a pair [x,y], got {len(values)} values")
        x, y = values
        if codec == "pair-cantor":
            return pairing.cantor_pair(x, y)
        if codec == "pair-pepis":
            return pairing.pepis_pair(x, y)
        return pairing.bitmerge_pair((x, y))
    if codec == "tuple":
        if arity is not None and arity != len(values):
            raise UsageError(f"--arity {arity} does not match {len(values)} values")
        return pairing.from_tuple(values)
    raise UsageError(f"unknown codec {codec!r}")


def _decode_one(args: argparse.Namespace, n: int, fmt: str) -> str:
    codec = args.codec
    if codec in TREE_CODECS:
        tree = hftree.unrank(_TREE_MAKERS[codec](args.ulimit), n,
                             max_depth=_depth_limit())
        if fmt == "tree":
            return hftree.serialize(tree)
        if fmt == "show":
            return hftree.render(_tree_style(codec), args.ulimit, tree)
        if fmt == "dot":
            return hftree.to_dot(tree)
        return str(n)  # decimal: the tree's own code
    if fmt == "decimal":
        return str(n)
    return _format_list(_decode_flat(codec, n, getattr(args, "arity", None)))


def _cmd_decode(args: argparse.Namespace) -> int:
    _check_flags(args)
    fmt = _resolve_format(args.codec, args.format, args.command)
    if getattr(args, "sized", False):
        parts = args.value.split()
        if len(parts) != 2:
            raise UsageError(f"--sized expects 'SIZE RANK', got {args.value!r}")
        size, rank_ = map(_parse_natural, parts)
        print(_format_list(permcodec.nth2perm((size, rank_))))
        return 0
    print(_decode_one(args, _parse_natural(args.value), fmt))
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    _check_flags(args)
    codec = args.codec
    if codec in TREE_CODECS:
        tree = hftree.deserialize(args.structure, max_depth=_depth_limit())
        print(hftree.rank(_TREE_MAKERS[codec](args.ulimit), tree))
        return 0
    values = _parse_nat_list(args.structure)
    if getattr(args, "sized", False):
        size, rank_ = permcodec.perm2nth(values)
        print(f"{size} {rank_}")
        return 0
    print(_encode_flat(codec, values, getattr(args, "arity", None)))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _check_flags(args)
    fmt = _resolve_format(args.codec, args.format, args.command)
    for n in range(args.start, args.start + args.count):
        print(_decode_one(args, n, fmt))
    return 0


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    return 0 if selfcheck.run_selfcheck(args.max_n, args.seed) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfcodec",
        description="Bijective codecs between naturals and finite "
                    "sets, functions, permutations, and their tree liftings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_codec_flags(p: argparse.ArgumentParser, with_format: bool) -> None:
        p.add_argument("--codec", required=True, choices=CODEC_NAMES,
                       metavar="NAME",
                       help="one of: " + ", ".join(CODEC_NAMES))
        p.add_argument("--ulimit", type=_parse_natural, default=0,
                       help="atom bound for tree codecs (default 0)")
        p.add_argument("--arity", type=_parse_natural, default=None,
                       help="component count for the tuple codec")
        if with_format:
            p.add_argument("--format", default=None,
                           choices=("list", "show", "tree", "dot", "decimal"),
                           help="output form (default: list for flat codecs, "
                                "tree for tree codecs)")

    p = sub.add_parser("decode", help="turn a natural number into a structure")
    add_codec_flags(p, with_format=True)
    p.add_argument("--sized", action="store_true",
                   help="perm only: read 'SIZE RANK' instead of a single code")
    p.add_argument("value", help="natural number (decimal or 0x hex)")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("encode", help="turn a structure into a natural number")
    add_codec_flags(p, with_format=False)
    p.add_argument("--sized", action="store_true",
                   help="perm only: print 'SIZE RANK' instead of a single code")
    p.add_argument("structure",
                   help="bracketed list for flat codecs, tree text for tree codecs")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("enumerate", help="decode a run of consecutive numbers")
    add_codec_flags(p, with_format=True)
    p.add_argument("start", type=_parse_natural, help="first number to decode")
    p.add_argument("count", type=_parse_natural, help="how many lines to print")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("show", help="decode and render readably (tree codecs)")
    add_codec_flags(p, with_format=False)
    p.add_argument("value", help="natural number (decimal or 0x hex)")
    p.set_defaults(func=_cmd_decode, sized=False, format="show")

    p = sub.add_parser("dot", help="decode to a Graphviz shared-subtree graph")
    add_codec_flags(p, with_format=False)
    p.add_argument("value", help="natural number (decimal or 0x hex)")
    p.set_defaults(func=_cmd_decode, sized=False, format="dot")

    p = sub.add_parser("selfcheck", help="run every codec law; exit 1 on failure")
    p.add_argument("max_n", nargs="?", type=_parse_natural, default=1000,
                   help="exhaustive range bound (default 1000)")
    p.add_argument("seed", nargs="?", type=_parse_natural, default=13,
                   help="seed for the random big-value trials (default 13)")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); leave quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (ValueError, OverflowError, RecursionError) as exc:
        print(f"hfcodec: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

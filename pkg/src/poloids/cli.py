"""Command-line front end.

Exit codes: 0 success or a true verdict, 1 a false verdict (the witness
is printed), 2 parse or I/O failure, 3 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration, maps, morphisms, represent, tables
from .classify import VERDICT_NAMES, classify
from .errors import BoundExceeded, ParseError, PreconditionError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_magma(path: str) -> tables.PartialMagma:
    """A Cayley table from either file kind.

    Map-magma files are rendered through their composition table; they
    must be closed for that to make sense.
    """
    text = _read(path)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("set:"):
            magma = maps.parse_map_magma(text)
            closed = maps.is_closed(magma)
            if not closed:
                names = magma.member_names()
                raise ParseError(
                    "map magma is not closed under composition (%s)" % closed.format(names)
                )
            return maps.as_partial_magma(magma)
        return tables.parse_magma(text)
    raise ParseError(f"{path}: empty file")


def cmd_classify(args) -> int:
    report = classify(_load_magma(args.path))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text(), end="")
    return EXIT_OK


def cmd_embed(args) -> int:
    magma = _load_magma(args.path)
    if args.pre:
        embedding = represent.embed_right_poloid(magma)
    else:
        embedding = represent.cayley_embedding(magma)
    text = represent.serialize_embedding(embedding)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.n
    if args.filter:
        found = []
        for m in enumeration.filtered(n, args.filter):
            found.append(m)
        if args.up_to_iso:
            kept = {}
            for m in found:
                kept.setdefault(enumeration.canonical_form(m), m)
            found = [kept[k] for k in sorted(kept)]
        print(f"{args.filter}: {len(found)}")
        if args.emit:
            _emit(found, args.emit)
    else:
        if args.up_to_iso or args.emit:
            found = list(enumeration.all_magmas(n))
            if args.up_to_iso:
                kept = {}
                for m in found:
                    kept.setdefault(enumeration.canonical_form(m), m)
                found = [kept[k] for k in sorted(kept)]
            print(f"partial_magmas: {len(found)}")
            if args.emit:
                _emit(found, args.emit)
        else:
            counts = enumeration.count_by_class(n)
            print(f"partial_magmas: {counts['partial_magmas']}")
            for name in VERDICT_NAMES:
                print(f"{name}: {counts[name]}")
    return EXIT_OK


def _emit(found, directory: str) -> None:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    width = max(6, len(str(len(found))))
    for i, m in enumerate(found):
        (out / f"magma_{i:0{width}d}.magma").write_text(
            tables.serialize_magma(m), encoding="utf-8"
        )


def cmd_compose(args) -> int:
    magma = maps.parse_map_magma(_read(args.path))
    names = magma.member_names()
    try:
        f = magma.members[names.index(args.f)]
        g = magma.members[names.index(args.g)]
    except ValueError:
        missing = args.f if args.f not in names else args.g
        raise ParseError(f"unknown map name {missing!r}") from None
    composite = maps.compose(magma, f, g)
    if composite is None:
        print("undefined")
    else:
        print(maps.default_map_name(composite))
    return EXIT_OK


def cmd_check_hom(args) -> int:
    src = _load_magma(args.src)
    dst = _load_magma(args.dst)
    morphism = morphisms.parse_morphism(src, dst, _read(args.map))
    hom = morphisms.is_homomorphism(morphism)
    refl = morphisms.reflects_definedness(morphism)
    print("homomorphism: %s" % ("yes" if hom else "no"))
    if not hom:
        print("witness: " + hom.format(src.elements))
    print("reflects_definedness: %s" % ("yes" if refl else "no"))
    if not refl:
        print("witness: " + refl.format(src.elements))
    return EXIT_OK if hom else EXIT_FALSE


def cmd_iso(args) -> int:
    a = _load_magma(args.a)
    b = _load_magma(args.b)
    found = morphisms.find_isomorphism(a, b)
    if found is None:
        print("isomorphism: no")
        return EXIT_FALSE
    print("isomorphism: yes")
    for i, v in enumerate(found.mapping):
        print(f"{a.elements[i]} -> {b.elements[v]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poloids",
        description="classify, embed, enumerate and compose finite partial algebraic structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a magma or map-magma file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("embed", help="embed a poloid (or, with --pre, a normal right poloid)")
    p.add_argument("path")
    p.add_argument("--pre", action="store_true",
                   help="embed into a domain pretransformation magma")
    p.add_argument("-o", "--output", help="write the embedding here instead of stdout")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("enumerate", help="count partial magmas by class")
    p.add_argument("-n", type=int, required=True, help="carrier size")
    p.add_argument("--filter", choices=sorted(VERDICT_NAMES), help="count one class only")
    p.add_argument("--up-to-iso", action="store_true", help="count up to isomorphism")
    p.add_argument("--emit", metavar="DIR", help="write the matching structures here")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compose", help="compose two maps from a map-magma file")
    p.add_argument("path")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check-hom", help="check a morphism file between two magmas")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("map")
    p.set_defaults(func=cmd_check_hom)

    p = sub.add_parser("iso", help="search for an isomorphism between two magmas")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, BoundExceeded) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

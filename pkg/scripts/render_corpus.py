#!/usr/bin/env python3
"""Render every corpus document to SVG."""

import argparse
import pathlib
import sys

from lagsurf.dsl import parse_front
from lagsurf.render import render_svg

ROOT = pathlib.Path(__file__).parent.parent


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", type=pathlib.Path, default=ROOT / "corpus")
    parser.add_argument("--out-dir", type=pathlib.Path, default=ROOT / "out" / "svg")
    args = parser.parse_args(argv)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for path in sorted(args.corpus.glob("*.front")):
        doc = parse_front(path.read_text())
        target = args.out_dir / f"{doc.name}.svg"
        target.write_text(render_svg(doc.to_diagram()))
        print(f"{path.name} -> {target}")
        count += 1
    if not count:
        print("no .front files found", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(run())

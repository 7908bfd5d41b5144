#!/usr/bin/env python3
"""Regenerate the browser UI's bundled instance gallery (frontend/src/gallery.ts)."""

from __future__ import annotations

import json
from pathlib import Path

from nemesis.graph import serialize_instance
from nemesis.instances import named_instances
from nemesis.reductions import CnfFormula, grid_instance, sat_to_nemesis

BLURBS = {
    "I1": "Two parallel exits behind one door: the fugitive cannot be stopped.",
    "I2": "A single exit at the end of a path: one deletion shuts it.",
    "I3": "An exit edge with two copies: one deletion is not enough.",
    "I4": "A cycle with one distant exit: the trap closes.",
    "I5": "A chain of winning positions two ranks deep.",
}


def entries():
    for key, inst in named_instances().items():
        yield key, inst.name, BLURBS[key], inst
    grid = grid_instance(5, 5)
    yield "grid5", "5x5 grid", "Boundary exits, two per corner; start at the center.", grid
    sat_inst, _ = sat_to_nemesis(CnfFormula(1, ((1,),)))
    yield (
        "sat1",
        "one-variable formula",
        "A satisfiable one-clause formula as a race to the main exit.",
        sat_inst,
    )


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "frontend" / "src" / "gallery.ts"
    blocks = []
    for key, title, blurb, inst in entries():
        payload = json.loads(serialize_instance(inst))
        blocks.append(
            "  {\n"
            f"    key: {json.dumps(key)},\n"
            f"    title: {json.dumps(title)},\n"
            f"    blurb: {json.dumps(blurb)},\n"
            f"    instance: {json.dumps(payload)},\n"
            "  },"
        )
    body = "\n".join(blocks)
    out.write_text(
        "// Generated by scripts/export_gallery.py; do not edit by hand.\n"
        'import type { GalleryEntry } from "./types.js";\n\n'
        f"export const GALLERY: GalleryEntry[] = [\n{body}\n];\n"
    )
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

// Generated by scripts/export_gallery.py; do not edit by hand.
import type { GalleryEntry } from "./types.js";

export const GALLERY: GalleryEntry[] = [
  {
    key: "I1",
    title: "I1 two-door",
    blurb: "Two parallel exits behind one door: the fugitive cannot be stopped.",
    instance: {"edges": [{"mult": 1, "u": "a", "v": "s"}, {"mult": 1, "u": "a", "v": "t1"}, {"mult": 1, "u": "a", "v": "t2"}], "name": "I1 two-door", "start": "s", "variant": "nemesis", "vertices": [{"id": "a", "kind": "regular"}, {"id": "s", "kind": "regular"}, {"id": "t1", "kind": "exit"}, {"id": "t2", "kind": "exit"}]},
  },
  {
    key: "I2",
    title: "I2 one-door",
    blurb: "A single exit at the end of a path: one deletion shuts it.",
    instance: {"edges": [{"mult": 1, "u": "a", "v": "s"}, {"mult": 1, "u": "a", "v": "t"}], "name": "I2 one-door", "start": "s", "variant": "nemesis", "vertices": [{"id": "a", "kind": "regular"}, {"id": "s", "kind": "regular"}, {"id": "t", "kind": "exit"}]},
  },
  {
    key: "I3",
    title: "I3 double-edge door",
    blurb: "An exit edge with two copies: one deletion is not enough.",
    instance: {"edges": [{"mult": 2, "u": "s", "v": "x"}], "name": "I3 double-edge door", "start": "s", "variant": "nemesis", "vertices": [{"id": "s", "kind": "regular"}, {"id": "x", "kind": "exit"}]},
  },
  {
    key: "I4",
    title: "I4 trap cycle",
    blurb: "A cycle with one distant exit: the trap closes.",
    instance: {"edges": [{"mult": 1, "u": "a", "v": "b"}, {"mult": 1, "u": "a", "v": "d"}, {"mult": 1, "u": "a", "v": "t"}, {"mult": 1, "u": "b", "v": "c"}, {"mult": 1, "u": "c", "v": "d"}], "name": "I4 trap cycle", "start": "c", "variant": "nemesis", "vertices": [{"id": "a", "kind": "regular"}, {"id": "b", "kind": "regular"}, {"id": "c", "kind": "regular"}, {"id": "d", "kind": "regular"}, {"id": "t", "kind": "exit"}]},
  },
  {
    key: "I5",
    title: "I5 rank chain",
    blurb: "A chain of winning positions two ranks deep.",
    instance: {"edges": [{"mult": 1, "u": "c", "v": "s"}, {"mult": 1, "u": "c", "v": "v1"}, {"mult": 1, "u": "c", "v": "v2"}, {"mult": 1, "u": "e1", "v": "v1"}, {"mult": 1, "u": "e2", "v": "v1"}, {"mult": 1, "u": "e3", "v": "v2"}, {"mult": 1, "u": "e4", "v": "v2"}], "name": "I5 rank chain", "start": "s", "variant": "nemesis", "vertices": [{"id": "c", "kind": "regular"}, {"id": "e1", "kind": "exit"}, {"id": "e2", "kind": "exit"}, {"id": "e3", "kind": "exit"}, {"id": "e4", "kind": "exit"}, {"id": "s", "kind": "regular"}, {"id": "v1", "kind": "regular"}, {"id": "v2", "kind": "regular"}]},
  },
  {
    key: "grid5",
    title: "5x5 grid",
    blurb: "Boundary exits, two per corner; start at the center.",
    instance: {"edges": [{"mult": 1, "u": "e00x00a", "v": "g00x00"}, {"mult": 1, "u": "e00x00b", "v": "g00x00"}, {"mult": 1, "u": "e00x01a", "v": "g00x01"}, {"mult": 1, "u": "e00x02a", "v": "g00x02"}, {"mult": 1, "u": "e00x03a", "v": "g00x03"}, {"mult": 1, "u": "e00x04a", "v": "g00x04"}, {"mult": 1, "u": "e00x04b", "v": "g00x04"}, {"mult": 1, "u": "e01x00a", "v": "g01x00"}, {"mult": 1, "u": "e01x04a", "v": "g01x04"}, {"mult": 1, "u": "e02x00a", "v": "g02x00"}, {"mult": 1, "u": "e02x04a", "v": "g02x04"}, {"mult": 1, "u": "e03x00a", "v": "g03x00"}, {"mult": 1, "u": "e03x04a", "v": "g03x04"}, {"mult": 1, "u": "e04x00a", "v": "g04x00"}, {"mult": 1, "u": "e04x00b", "v": "g04x00"}, {"mult": 1, "u": "e04x01a", "v": "g04x01"}, {"mult": 1, "u": "e04x02a", "v": "g04x02"}, {"mult": 1, "u": "e04x03a", "v": "g04x03"}, {"mult": 1, "u": "e04x04a", "v": "g04x04"}, {"mult": 1, "u": "e04x04b", "v": "g04x04"}, {"mult": 1, "u": "g00x00", "v": "g00x01"}, {"mult": 1, "u": "g00x00", "v": "g01x00"}, {"mult": 1, "u": "g00x01", "v": "g00x02"}, {"mult": 1, "u": "g00x01", "v": "g01x01"}, {"mult": 1, "u": "g00x02", "v": "g00x03"}, {"mult": 1, "u": "g00x02", "v": "g01x02"}, {"mult": 1, "u": "g00x03", "v": "g00x04"}, {"mult": 1, "u": "g00x03", "v": "g01x03"}, {"mult": 1, "u": "g00x04", "v": "g01x04"}, {"mult": 1, "u": "g01x00", "v": "g01x01"}, {"mult": 1, "u": "g01x00", "v": "g02x00"}, {"mult": 1, "u": "g01x01", "v": "g01x02"}, {"mult": 1, "u": "g01x01", "v": "g02x01"}, {"mult": 1, "u": "g01x02", "v": "g01x03"}, {"mult": 1, "u": "g01x02", "v": "g02x02"}, {"mult": 1, "u": "g01x03", "v": "g01x04"}, {"mult": 1, "u": "g01x03", "v": "g02x03"}, {"mult": 1, "u": "g01x04", "v": "g02x04"}, {"mult": 1, "u": "g02x00", "v": "g02x01"}, {"mult": 1, "u": "g02x00", "v": "g03x00"}, {"mult": 1, "u": "g02x01", "v": "g02x02"}, {"mult": 1, "u": "g02x01", "v": "g03x01"}, {"mult": 1, "u": "g02x02", "v": "g02x03"}, {"mult": 1, "u": "g02x02", "v": "g03x02"}, {"mult": 1, "u": "g02x03", "v": "g02x04"}, {"mult": 1, "u": "g02x03", "v": "g03x03"}, {"mult": 1, "u": "g02x04", "v": "g03x04"}, {"mult": 1, "u": "g03x00", "v": "g03x01"}, {"mult": 1, "u": "g03x00", "v": "g04x00"}, {"mult": 1, "u": "g03x01", "v": "g03x02"}, {"mult": 1, "u": "g03x01", "v": "g04x01"}, {"mult": 1, "u": "g03x02", "v": "g03x03"}, {"mult": 1, "u": "g03x02", "v": "g04x02"}, {"mult": 1, "u": "g03x03", "v": "g03x04"}, {"mult": 1, "u": "g03x03", "v": "g04x03"}, {"mult": 1, "u": "g03x04", "v": "g04x04"}, {"mult": 1, "u": "g04x00", "v": "g04x01"}, {"mult": 1, "u": "g04x01", "v": "g04x02"}, {"mult": 1, "u": "g04x02", "v": "g04x03"}, {"mult": 1, "u": "g04x03", "v": "g04x04"}], "layout": {"e00x00a": [0.0, -1.0], "e00x00b": [-1.0, 0.0], "e00x01a": [1.0, -1.0], "e00x02a": [2.0, -1.0], "e00x03a": [3.0, -1.0], "e00x04a": [4.0, -1.0], "e00x04b": [5.0, 0.0], "e01x00a": [-1.0, 1.0], "e01x04a": [5.0, 1.0], "e02x00a": [-1.0, 2.0], "e02x04a": [5.0, 2.0], "e03x00a": [-1.0, 3.0], "e03x04a": [5.0, 3.0], "e04x00a": [0.0, 5.0], "e04x00b": [-1.0, 4.0], "e04x01a": [1.0, 5.0], "e04x02a": [2.0, 5.0], "e04x03a": [3.0, 5.0], "e04x04a": [4.0, 5.0], "e04x04b": [5.0, 4.0], "g00x00": [0.0, 0.0], "g00x01": [1.0, 0.0], "g00x02": [2.0, 0.0], "g00x03": [3.0, 0.0], "g00x04": [4.0, 0.0], "g01x00": [0.0, 1.0], "g01x01": [1.0, 1.0], "g01x02": [2.0, 1.0], "g01x03": [3.0, 1.0], "g01x04": [4.0, 1.0], "g02x00": [0.0, 2.0], "g02x01": [1.0, 2.0], "g02x02": [2.0, 2.0], "g02x03": [3.0, 2.0], "g02x04": [4.0, 2.0], "g03x00": [0.0, 3.0], "g03x01": [1.0, 3.0], "g03x02": [2.0, 3.0], "g03x03": [3.0, 3.0], "g03x04": [4.0, 3.0], "g04x00": [0.0, 4.0], "g04x01": [1.0, 4.0], "g04x02": [2.0, 4.0], "g04x03": [3.0, 4.0], "g04x04": [4.0, 4.0]}, "name": "grid 5x5", "start": "g02x02", "variant": "nemesis", "vertices": [{"id": "e00x00a", "kind": "exit"}, {"id": "e00x00b", "kind": "exit"}, {"id": "e00x01a", "kind": "exit"}, {"id": "e00x02a", "kind": "exit"}, {"id": "e00x03a", "kind": "exit"}, {"id": "e00x04a", "kind": "exit"}, {"id": "e00x04b", "kind": "exit"}, {"id": "e01x00a", "kind": "exit"}, {"id": "e01x04a", "kind": "exit"}, {"id": "e02x00a", "kind": "exit"}, {"id": "e02x04a", "kind": "exit"}, {"id": "e03x00a", "kind": "exit"}, {"id": "e03x04a", "kind": "exit"}, {"id": "e04x00a", "kind": "exit"}, {"id": "e04x00b", "kind": "exit"}, {"id": "e04x01a", "kind": "exit"}, {"id": "e04x02a", "kind": "exit"}, {"id": "e04x03a", "kind": "exit"}, {"id": "e04x04a", "kind": "exit"}, {"id": "e04x04b", "kind": "exit"}, {"id": "g00x00", "kind": "regular"}, {"id": "g00x01", "kind": "regular"}, {"id": "g00x02", "kind": "regular"}, {"id": "g00x03", "kind": "regular"}, {"id": "g00x04", "kind": "regular"}, {"id": "g01x00", "kind": "regular"}, {"id": "g01x01", "kind": "regular"}, {"id": "g01x02", "kind": "regular"}, {"id": "g01x03", "kind": "regular"}, {"id": "g01x04", "kind": "regular"}, {"id": "g02x00", "kind": "regular"}, {"id": "g02x01", "kind": "regular"}, {"id": "g02x02", "kind": "regular"}, {"id": "g02x03", "kind": "regular"}, {"id": "g02x04", "kind": "regular"}, {"id": "g03x00", "kind": "regular"}, {"id": "g03x01", "kind": "regular"}, {"id": "g03x02", "kind": "regular"}, {"id": "g03x03", "kind": "regular"}, {"id": "g03x04", "kind": "regular"}, {"id": "g04x00", "kind": "regular"}, {"id": "g04x01", "kind": "regular"}, {"id": "g04x02", "kind": "regular"}, {"id": "g04x03", "kind": "regular"}, {"id": "g04x04", "kind": "regular"}]},
  },
  {
    key: "sat1",
    title: "one-variable formula",
    blurb: "A satisfiable one-clause formula as a race to the main exit.",
    instance: {"edges": [{"mult": 6, "u": "c01", "v": "c01.exit"}, {"mult": 15, "u": "c01", "v": "c01.x01.004"}, {"mult": 15, "u": "c01.x01.001", "v": "c01.x01.002"}, {"mult": 15, "u": "c01.x01.001", "v": "x01.t02"}, {"mult": 15, "u": "c01.x01.002", "v": "c01.x01.003"}, {"mult": 15, "u": "c01.x01.003", "v": "c01.x01.004"}, {"mult": 15, "u": "j00", "v": "x01.f01"}, {"mult": 15, "u": "j00", "v": "x01.t01"}, {"mult": 4, "u": "j01", "v": "j01.exit"}, {"mult": 15, "u": "j01", "v": "x01.f03"}, {"mult": 15, "u": "j01", "v": "x01.t03"}, {"mult": 15, "u": "x01.f01", "v": "x01.f02"}, {"mult": 15, "u": "x01.f02", "v": "x01.f03"}, {"mult": 15, "u": "x01.t01", "v": "x01.t02"}, {"mult": 15, "u": "x01.t02", "v": "x01.t03"}], "name": "sat reduction n=1 m=1", "start": "j00", "variant": "nemesis", "vertices": [{"id": "c01", "kind": "regular"}, {"id": "c01.exit", "kind": "exit"}, {"id": "c01.x01.001", "kind": "regular"}, {"id": "c01.x01.002", "kind": "regular"}, {"id": "c01.x01.003", "kind": "regular"}, {"id": "c01.x01.004", "kind": "regular"}, {"id": "j00", "kind": "regular"}, {"id": "j01", "kind": "regular"}, {"id": "j01.exit", "kind": "exit"}, {"id": "x01.f01", "kind": "regular"}, {"id": "x01.f02", "kind": "regular"}, {"id": "x01.f03", "kind": "regular"}, {"id": "x01.t01", "kind": "regular"}, {"id": "x01.t02", "kind": "regular"}, {"id": "x01.t03", "kind": "regular"}]},
  },
];

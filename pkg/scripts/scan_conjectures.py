#!/usr/bin/env python3
"""Scan certified biclique graphs for conjecture counterexamples.

Reads a catalogue directory (built by reproduce_catalogue.py or the
``biclique-lab catalogue`` command), runs the three scans over every
positive entry under both neighbourhood-containment readings, and writes a
findings JSONL plus a verdict summary.  A counterexample would be the
interesting outcome; none is expected at this scale.
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from pathlib import Path

from biclique_lab.conjectures import scan_certified_graphs
from biclique_lab.recognition import BICLIQUE_GRAPH, load_catalogue


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("catalogue", help="catalogue directory")
    parser.add_argument("--out", default="out/findings.jsonl")
    parser.add_argument("--i-max", type=int, default=None)
    args = parser.parse_args()

    entries = load_catalogue(args.catalogue)
    certified = [
        (e.graph6, e.graph) for e in entries if e.classification == BICLIQUE_GRAPH
    ]
    print(f"{len(certified)} certified biclique graphs")

    findings = []
    for containment in ("exact", "superset"):
        findings.extend(
            scan_certified_graphs(certified, i_max=args.i_max, containment=containment)
        )

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as handle:
        for finding in findings:
            handle.write(json.dumps(finding.to_json(), separators=(",", ":")) + "\n")
    print(f"wrote {out}")

    summary = Counter((f.conjecture, f.verdict) for f in findings)
    for (conjecture, verdict), count in sorted(summary.items()):
        print(f"{conjecture:20s} {verdict:15s} {count}")
    counterexamples = [f for f in findings if f.verdict == "counterexample"]
    for f in counterexamples:
        print(f"COUNTEREXAMPLE {f.conjecture} {f.graph6} witness={f.witness}")
    return 1 if counterexamples else 0


if __name__ == "__main__":
    raise SystemExit(main())

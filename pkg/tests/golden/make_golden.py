"""Regenerate the frozen oracle data.  Run once; the tests compare against the files, not this script."""
from __future__ import annotations

import json
from pathlib import Path

from supervogan.oracle import brute_involution_pairs

HERE = Path(__file__).parent


def main() -> None:
    for m, n in ((2, 1), (1, 2)):
        res = brute_involution_pairs(m, n)
        doc = {
            "m": m,
            "n": n,
            "count": res.count,
            "conjugation": res.conjugation,
            "classes": sorted([list(c.fingerprint), c.size] for c in res.classes),
        }
        (HERE / f"sl{m}{n}_pairs.json").write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

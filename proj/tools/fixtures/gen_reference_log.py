#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes a synthetic message log whose correlation matrix equals the
reference matrix (data/matrix/reference.tsv), plus the fixture itself.

Each homograph w gets N_w messages. Message i carries one keyword of
context c iff i < k(w, c), so cell(w, c) = 100 * k / N exactly."""
import pathlib
import sys

CONTEXTS = ["Music", "Electronic/Computer", "Vehicles", "Sports", "Financial"]

# word -> (messages containing it, hits per context in CONTEXTS order)
ROWS = {
    "bateria": (50, [39, 20, 16, 1, 0]),
    "vela": (100, [0, 2, 63, 92, 0]),
    "banco": (25, [0, 20, 14, 0, 3]),
    "bolsa": (100, [0, 0, 0, 11, 73]),
    "rede": (25, [0, 23, 0, 0, 0]),
}

FILLER = ["olha", "acho", "que", "a", "ficou", "estranha", "hoje", "viu", "sim", "depois"]
SENDERS = ["ana", "bruno"]


def load_keywords(path):
    kws = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, _, words = line.split("\t")
        kws[name] = sorted(w.strip() for w in words.split(","))
    return kws


def main() -> int:
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    kws = load_keywords(root / "data/contexts.tsv")
    lines = ["# Synthetic chat log; regenerate with tools/fixtures/gen_reference_log.py"]
    n = 0
    for word, (total, hits) in ROWS.items():
        for i in range(total):
            words = [FILLER[(n + j) % len(FILLER)] for j in range(2)] + [word]
            for ci, c in enumerate(CONTEXTS):
                if i < hits[ci]:
                    words.append(kws[c][(i + ci) % len(kws[c])])
            words.append(FILLER[(n + 5) % len(FILLER)])
            lines.append(f"{SENDERS[n % 2]}\t{' '.join(words)}")
            n += 1
    (root / "data/logs").mkdir(parents=True, exist_ok=True)
    (root / "data/logs/reference_log.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    matrix = ["word\t" + "\t".join(CONTEXTS)]
    for word, (total, hits) in ROWS.items():
        matrix.append(word + "\t" + "\t".join(f"{100 * k // total}%" for k in hits))
    (root / "data/matrix").mkdir(parents=True, exist_ok=True)
    (root / "data/matrix/reference.tsv").write_text("\n".join(matrix) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Writes a deterministic transcription-network-like digraph with
418 vertices and 519 edges: a few regulator hubs, a layer of minor
regulators, planted feed-forward loops and a handful of mutual pairs."""

import random
import sys

N_VERTICES = 418
N_EDGES = 519
HUBS = range(0, 8)
MINOR = range(8, 40)
TARGETS = range(40, N_VERTICES)


def build(seed):
    rng = random.Random(seed)
    edges = set()

    def add(u, v):
        if u != v and (u, v) not in edges:
            edges.add((u, v))

    # every target gets one regulator, hubs weighted heavier
    regulators = [h for h in HUBS for _ in range(6)] + list(MINOR)
    for t in TARGETS:
        add(rng.choice(regulators), t)
    # hubs regulate minor regulators
    for m in MINOR:
        add(rng.choice(list(HUBS)), m)
    # mutual regulation among a few regulator pairs
    for u, v in [(0, 1), (2, 9), (12, 13)]:
        add(u, v)
        add(v, u)
    # feed-forward loops: hub -> minor -> target and hub -> target
    while len(edges) < N_EDGES:
        m = rng.choice(list(MINOR))
        hubs = [u for (u, v) in edges if v == m and u in HUBS]
        if not hubs:
            continue
        t = rng.choice(list(TARGETS))
        add(m, t)
        if len(edges) < N_EDGES:
            add(hubs[0], t)
    return sorted(edges)


def main():
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2009
    edges = build(seed)
    out = sys.stdout
    out.write("# synthetic transcription-network-scale digraph, seed %d\n" % seed)
    out.write("# %d vertices, %d edges\n" % (N_VERTICES, len(edges)))
    for u, v in edges:
        out.write("%d %d\n" % (u, v))


if __name__ == "__main__":
    main()

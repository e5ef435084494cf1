"""Shared random-instance generators for the test suite."""

from __future__ import annotations

import numpy as np

from eigenrank.matrix import PALETTE, build_matrix
from eigenrank.structure import Hierarchy, Node


def random_palette_matrix(rng: np.random.Generator, labels):
    """Reciprocal matrix with upper triangle drawn from the 1..9 palette."""
    labels = tuple(labels)
    judgments = []
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            value = PALETTE[int(rng.integers(0, len(PALETTE)))]
            judgments.append((labels[i], labels[j], value))
    return build_matrix(labels, judgments)


def random_hierarchy(rng: np.random.Generator, min_depth=3, max_depth=4):
    """A valid random hierarchy plus palette matrices for every parent.

    Level widths are 2..4; each child attaches to a random nonempty
    subset of the level above, then parents left childless adopt a random
    child so the structure validates.
    """
    depth = int(rng.integers(min_depth, max_depth + 1))
    widths = [1] + [int(rng.integers(2, 5)) for _ in range(depth - 1)]
    ids = [[f"n{k}_{i}" for i in range(widths[k - 1])] for k in range(1, depth + 1)]
    nodes = [Node(ids[0][0], "goal", 1)]
    for k in range(2, depth + 1):
        kind = "alternative" if k == depth else "criterion"
        nodes.extend(Node(i, kind, k) for i in ids[k - 1])
    edges = []
    for k in range(1, depth):
        parents, children = ids[k - 1], ids[k]
        for child in children:
            picks = rng.random(len(parents)) < 0.7
            if not picks.any():
                picks[int(rng.integers(0, len(parents)))] = True
            edges.extend((p, child) for p, take in zip(parents, picks) if take)
        for p in parents:
            if not any(e[0] == p for e in edges):
                edges.append((p, children[int(rng.integers(0, len(children)))]))
    h = Hierarchy(tuple(nodes), tuple(edges))
    matrices = {}
    for node in h.nodes:
        kids = h.children_of(node.id)
        if kids:
            matrices[node.id] = random_palette_matrix(rng, kids)
    return h, matrices


def random_column_stochastic(rng: np.random.Generator, n: int) -> np.ndarray:
    """Strictly positive column-stochastic matrix (hence irreducible and
    aperiodic)."""
    m = rng.dirichlet(np.ones(n) * 2.0, size=n).T
    # dirichlet can emit exact zeros in extreme draws; nudge and renormalize
    m = m + 1e-9
    return m / m.sum(axis=0, keepdims=True)

import os
import random
from fractions import Fraction

from hamgraphon import *

__all__ = ('SLOW_TESTS', 'TEN_NODE_BLOCKS', 'TEN_NODE_EDGES',
           'SPLIT_SKELETON_EDGES', 'ten_node_digraph', 'split_skeleton',
           'two_block_graphon', 'random_graphon',
           'random_strong_skeleton', 'random_digraph', 'random_x0_vector',
           'random_cone_vector')

SLOW_TESTS = os.environ.get('HAMGRAPHON_SLOW_TESTS') == '1'

# a 10-node digraph over the four-block skeleton, nodes numbered block by block
TEN_NODE_BLOCKS = (0, 1, 1, 2, 2, 2, 3, 3, 3, 3)
TEN_NODE_EDGES = (
    (6, 7), (7, 6), (6, 8), (8, 6), (6, 9), (9, 8), (8, 9), (4, 1), (1, 4),
    (3, 7), (7, 3), (5, 2), (2, 5), (5, 9), (9, 5), (4, 6), (7, 4), (2, 3),
    (0, 2), (9, 0), (7, 0),
)

# skeleton of case-a after surgery on its self-loop block
SPLIT_SKELETON_EDGES = (
    (0, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (3, 4), (4, 3), (4, 0),
    (4, 2), (2, 4),
)


def ten_node_digraph():
    return SampledDigraph(10, TEN_NODE_BLOCKS, TEN_NODE_EDGES, block_count=4)


def split_skeleton():
    return SkeletonGraph(5, SPLIT_SKELETON_EDGES)


def two_block_graphon(values, split=Fraction(1, 2)):
    return new_step_graphon([0, split, 1], values)


def random_graphon(rng, max_blocks=5, density=0.5, loops=True):
    """A step-graphon with random rational partition and values."""
    m = rng.randint(1, max_blocks)
    cuts = sorted(rng.sample(range(1, 24), m - 1))
    partition = [Fraction(0)] + [Fraction(c, 24) for c in cuts] + [Fraction(1)]
    values = []
    for i in range(m):
        row = []
        for j in range(m):
            if (i == j and not loops) or rng.random() > density:
                row.append(Fraction(0))
            else:
                row.append(Fraction(rng.randint(1, 4), 4))
        values.append(row)
    return new_step_graphon(partition, values)


def random_strong_skeleton(rng, max_nodes=5, density=0.3):
    """A strongly connected loop-free skeleton: a Hamiltonian cycle on a
    shuffled order plus random extra edges.
    """
    m = rng.randint(2, max_nodes)
    order = list(range(m))
    rng.shuffle(order)
    edges = set(zip(order, order[1:] + order[:1]))
    for i in range(m):
        for j in range(m):
            if i != j and rng.random() < density:
                edges.add((i, j))
    return SkeletonGraph(m, edges)


def random_digraph(rng, n, density):
    edges = [(i, j) for i in range(n) for j in range(n)
             if i != j and rng.random() < density]
    return SampledDigraph(n, [0] * n, edges, block_count=1)


def random_x0_vector(rng, skeleton, cycles, extra=4):
    """Sum of every cycle's incidence vector plus a few random cycles."""
    y = [0] * skeleton.node_count
    chosen = list(cycles) + [rng.choice(cycles)
                             for _ in range(rng.randint(0, extra))]
    for cycle in chosen:
        for v in cycle:
            y[v] += 1
    return y


def random_cone_vector(rng, skeleton, cycles, count=5):
    """Sum of a few random cycles' incidence vectors."""
    y = [0] * skeleton.node_count
    for _ in range(rng.randint(1, count)):
        for v in rng.choice(cycles):
            y[v] += 1
    return y

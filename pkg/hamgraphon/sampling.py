"""Seeded samplers for graphs drawn from step-graphons.

Every random number is a raw 64-bit integer ``U`` read as ``U / 2**64``.
Comparisons against partition points and probabilities are made on the
integer side, ``U < ceil(p * 2**64)``, which is exactly ``U / 2**64 < p``.
Node coordinates are reduced to their block labels as soon as they are
drawn.
"""
import logging
import math
from fractions import Fraction

import networkx as nx
import numpy as np
from scipy import sparse

from hamgraphon.document import Document
from hamgraphon.errors import (InconsistentSkeletonError, NotSymmetricError,
                               ValidationError)
from hamgraphon.fields import BooleanField, IntField, RationalField
from hamgraphon.graphon import symmetrize, to_rational
from hamgraphon.settings import get_setting
from hamgraphon.skeleton import skeleton_of

__all__ = ('RngSpec', 'SampledDigraph', 'SampledGraph', 'RegularityRow',
           'splitmix64', 'sample_block_labels', 'sample_directed',
           'sample_undirected', 'orient_symmetric', 'trim_digraph',
           'sample_trimmed', 'sample_symmetrized', 'empirical_concentration',
           'degree_regularity_report', 'write_edge_list')

logger = logging.getLogger(__name__)

_MASK = (1 << 64) - 1
_SCALE = 1 << 64


def splitmix64(value):
    value = (value + 0x9E3779B97F4A7C15) & _MASK
    value = ((value ^ (value >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    value = ((value ^ (value >> 27)) * 0x94D049BB133111EB) & _MASK
    return value ^ (value >> 31)


class RngSpec(object):
    """Identifies one random stream: ``(master_seed, trial_index)``.

    The stream is a PCG64 generator seeded with
    ``splitmix64(splitmix64(master_seed) ^ trial_index)``, so distinct pairs
    give unrelated streams and a pair replays identically on any machine.
    """

    __slots__ = ('master_seed', 'trial_index')

    def __init__(self, master_seed, trial_index=0):
        if not 0 <= master_seed <= _MASK:
            raise ValidationError('master seed must fit in 64 bits')
        if trial_index < 0:
            raise ValidationError('trial index must be nonnegative')
        self.master_seed = int(master_seed)
        self.trial_index = int(trial_index)

    @property
    def seed(self):
        return splitmix64(splitmix64(self.master_seed) ^ (self.trial_index & _MASK))

    def generator(self):
        return np.random.Generator(np.random.PCG64(self.seed))

    def __eq__(self, other):
        if not isinstance(other, RngSpec):
            return NotImplemented
        return (self.master_seed, self.trial_index) == (other.master_seed,
                                                        other.trial_index)

    def __hash__(self):
        return hash((self.master_seed, self.trial_index))

    def __repr__(self):
        return 'RngSpec(%d, %d)' % (self.master_seed, self.trial_index)


def _generator(rng):
    if isinstance(rng, RngSpec):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise ValidationError('expected an RngSpec or a numpy Generator, got %r'
                          % (rng,))


def _raw(generator, size):
    return generator.bit_generator.random_raw(size).astype(np.uint64, copy=False)


def _scaled_ceiling(value):
    return math.ceil(to_rational(value) * _SCALE)


def _probability_thresholds(graphon):
    """``(always, threshold)`` matrices: an edge is drawn when
    ``always`` is set or ``U < threshold``.
    """
    m = graphon.block_count
    always = np.zeros((m, m), dtype=bool)
    threshold = np.zeros((m, m), dtype=np.uint64)
    for i in range(m):
        for j in range(m):
            ceiling = _scaled_ceiling(graphon.values[i][j])
            if ceiling >= _SCALE:
                always[i, j] = True
            else:
                threshold[i, j] = ceiling
    return always, threshold


def _labels(raw, partition):
    ceilings = [_scaled_ceiling(p) for p in partition[1:-1]]
    capped = np.array([min(c, _MASK) for c in ceilings], dtype=np.uint64)
    labels = np.searchsorted(capped, raw, side='right').astype(np.int64)
    if any(c > _MASK for c in ceilings):
        labels[raw == np.uint64(_MASK)] = sum(1 for c in ceilings if c <= _MASK)
    return labels


def sample_block_labels(partition, n, rng):
    """Block of each of ``n`` nodes (step S1): node ``v`` lands in block
    ``i`` iff its uniform draw lies in ``[s_i, s_{i+1})``.
    """
    if n < 0:
        raise ValidationError('n must be nonnegative')
    return _labels(_raw(_generator(rng), n), partition)


class BaseSampledGraph(object):
    """Nodes ``0..n-1`` with block labels and an edge array."""

    directed = True

    def __init__(self, n, block_of, edges, block_count=None):
        n = int(n)
        if n < 0:
            raise ValidationError('n must be nonnegative')
        block_of = np.asarray(block_of, dtype=np.int64).reshape(-1)
        if block_of.shape[0] != n:
            raise ValidationError('block_of has %d entries for %d nodes'
                                  % (block_of.shape[0], n))
        if n and block_of.min() < 0:
            raise ValidationError('block labels must be nonnegative')
        if block_count is None:
            block_count = int(block_of.max()) + 1 if n else 1
        if n and block_of.max() >= block_count:
            raise ValidationError('block label out of range')
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= n:
                raise ValidationError('edge endpoint out of range')
            if np.any(edges[:, 0] == edges[:, 1]):
                raise ValidationError('sampled graphs have no self-loops')
            if not self.directed:
                edges = np.sort(edges, axis=1)
            # one int64 code per edge; sorted codes are row-major order
            codes = np.unique(edges[:, 0] * n + edges[:, 1])
            edges = np.stack(np.divmod(codes, n), axis=1)
        block_of.setflags(write=False)
        edges.setflags(write=False)
        self.n = n
        self.block_of = block_of
        self.block_count = int(block_count)
        self.edges = edges
        self._adjacency = None

    @property
    def edge_count(self):
        return int(self.edges.shape[0])

    def edge_set(self):
        return frozenset((int(i), int(j)) for i, j in self.edges)

    def block_counts(self):
        return np.bincount(self.block_of, minlength=self.block_count)

    @property
    def adjacency(self):
        """Adjacency as a CSR matrix; symmetric for undirected graphs."""
        if self._adjacency is None:
            rows, cols = self.edges[:, 0], self.edges[:, 1]
            if not self.directed:
                rows, cols = np.concatenate([rows, cols]), np.concatenate([cols, rows])
            data = np.ones(rows.shape[0], dtype=np.int8)
            self._adjacency = sparse.csr_matrix((data, (rows, cols)),
                                                shape=(self.n, self.n))
        return self._adjacency

    def successors(self, v):
        adjacency = self.adjacency
        return adjacency.indices[adjacency.indptr[v]:adjacency.indptr[v + 1]]

    def has_edge(self, i, j):
        if not (0 <= i < self.n and 0 <= j < self.n):
            return False
        return bool(self.adjacency[i, j])

    def to_networkx(self):
        graph = nx.DiGraph() if self.directed else nx.Graph()
        graph.add_nodes_from((v, {'block': int(b)})
                             for v, b in enumerate(self.block_of))
        graph.add_edges_from((int(i), int(j)) for i, j in self.edges)
        return graph

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n == other.n and self.block_count == other.block_count
                and np.array_equal(self.block_of, other.block_of)
                and np.array_equal(self.edges, other.edges))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return '%s(n=%d, blocks=%d, edges=%d)' % (
            self.__class__.__name__, self.n, self.block_count, self.edge_count)


class SampledDigraph(BaseSampledGraph):
    """A digraph whose nodes carry their block (the homomorphism onto the
    skeleton).  Edges are ordered pairs of distinct nodes.
    """

    directed = True

    def in_degrees(self):
        return np.bincount(self.edges[:, 1], minlength=self.n)

    def out_degrees(self):
        return np.bincount(self.edges[:, 0], minlength=self.n)


class SampledGraph(BaseSampledGraph):
    """An undirected graph with block labels; edges are pairs ``i < j``."""

    directed = False

    def degrees(self):
        return (np.bincount(self.edges[:, 0], minlength=self.n) +
                np.bincount(self.edges[:, 1], minlength=self.n))


def _directed_edges(generator, labels, always, threshold):
    n = labels.shape[0]
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    rows_per_chunk = max(1, get_setting('sample_chunk') // n)
    found = []
    for start in range(0, n, rows_per_chunk):
        stop = min(n, start + rows_per_chunk)
        raw = _raw(generator, (stop - start) * n).reshape(stop - start, n)
        row_blocks = labels[start:stop, None]
        hits = always[row_blocks, labels[None, :]] | (
            raw < threshold[row_blocks, labels[None, :]])
        hits[np.arange(stop - start), np.arange(start, stop)] = False
        sources, targets = np.nonzero(hits)
        found.append(np.stack([sources + start, targets], axis=1))
    return np.concatenate(found)


def sample_directed(graphon, n, rng):
    """Sample a digraph on ``n`` nodes from ``graphon``.

    Node blocks are drawn first, in node order; then one draw is made for
    every ordered pair ``(i, j)`` in row-major order (the ``n`` diagonal
    draws are consumed and ignored) and ``i -> j`` is an edge with
    probability ``p[block(i)][block(j)]``.

    :param rng: an :class:`RngSpec` or a ``numpy.random.Generator``
    """
    if n < 0:
        raise ValidationError('n must be nonnegative')
    generator = _generator(rng)
    labels = _labels(_raw(generator, n), graphon.partition)
    always, threshold = _probability_thresholds(graphon)
    edges = _directed_edges(generator, labels, always, threshold)
    return SampledDigraph(n, labels, edges, block_count=graphon.block_count)


def sample_undirected(graphon, n, rng):
    """Sample an undirected graph from a symmetric ``graphon``: one draw per
    pair ``i < j`` in lexicographic order.

    :raises NotSymmetricError: ``graphon`` is not symmetric
    """
    if not graphon.is_symmetric():
        raise NotSymmetricError('undirected sampling needs a symmetric graphon')
    if n < 0:
        raise ValidationError('n must be nonnegative')
    generator = _generator(rng)
    labels = _labels(_raw(generator, n), graphon.partition)
    always, threshold = _probability_thresholds(graphon)
    found = []
    for i in range(n - 1):
        others = labels[i + 1:]
        raw = _raw(generator, n - 1 - i)
        hits = always[labels[i], others] | (raw < threshold[labels[i], others])
        targets = np.nonzero(hits)[0] + i + 1
        if targets.size:
            found.append(np.stack([np.full(targets.shape, i), targets], axis=1))
    edges = np.concatenate(found) if found else np.empty((0, 2), dtype=np.int64)
    return SampledGraph(n, labels, edges, block_count=graphon.block_count)


def _skeleton_matrix(skeleton, block_count):
    if skeleton.node_count != block_count:
        raise InconsistentSkeletonError('graph has %d blocks, skeleton has %d '
                                        'nodes' % (block_count,
                                                   skeleton.node_count))
    matrix = np.zeros((block_count, block_count), dtype=bool)
    for i, j in skeleton.edges:
        matrix[i, j] = True
    return matrix


def orient_symmetric(graph, skeleton):
    """Orient an undirected sample along ``skeleton``: an edge becomes both
    directed edges when its block pair is bidirectional in the skeleton,
    otherwise the single allowed direction.

    :raises InconsistentSkeletonError: an edge joins blocks the skeleton
        does not connect
    """
    allowed = _skeleton_matrix(skeleton, graph.block_count)
    if not graph.edge_count:
        return SampledDigraph(graph.n, graph.block_of, [],
                              block_count=graph.block_count)
    a, b = graph.edges[:, 0], graph.edges[:, 1]
    ba, bb = graph.block_of[a], graph.block_of[b]
    forward, backward = allowed[ba, bb], allowed[bb, ba]
    if np.any(~forward & ~backward):
        raise InconsistentSkeletonError('an edge joins blocks that are not '
                                        'adjacent in the skeleton')
    edges = np.concatenate([np.stack([a[forward], b[forward]], axis=1),
                            np.stack([b[backward], a[backward]], axis=1)])
    return SampledDigraph(graph.n, graph.block_of, edges,
                          block_count=graph.block_count)


def trim_digraph(graph, skeleton):
    """Remove every edge ``i -> j`` whose block pair is bidirectional in
    ``skeleton`` while ``j -> i`` is missing from ``graph``.
    """
    allowed = _skeleton_matrix(skeleton, graph.block_count)
    if not graph.edge_count:
        return graph
    i, j = graph.edges[:, 0], graph.edges[:, 1]
    bi, bj = graph.block_of[i], graph.block_of[j]
    bidirectional = allowed[bi, bj] & allowed[bj, bi]
    codes = i * graph.n + j
    reverse_present = np.isin(j * graph.n + i, codes)
    keep = ~bidirectional | reverse_present
    return SampledDigraph(graph.n, graph.block_of, graph.edges[keep],
                          block_count=graph.block_count)


def sample_trimmed(graphon, n, rng):
    """Directed sample followed by trimming of unpaired edges."""
    return trim_digraph(sample_directed(graphon, n, rng), skeleton_of(graphon))


def sample_symmetrized(graphon, n, rng):
    """Undirected sample of the symmetrization, oriented along the skeleton."""
    return orient_symmetric(sample_undirected(symmetrize(graphon), n, rng),
                            skeleton_of(graphon))


def empirical_concentration(graph):
    """Fraction of nodes in each block."""
    if graph.n == 0:
        raise ValidationError('the empirical concentration of an empty graph '
                              'is undefined')
    return tuple(Fraction(int(c), graph.n) for c in graph.block_counts())


class RegularityRow(Document):
    """Smallest cross-degree ratios between two blocks of a sample."""

    block_a = IntField(min_value=0, required=True)
    block_b = IntField(min_value=0, required=True)
    size_a = IntField(min_value=1)
    size_b = IntField(min_value=1)
    min_ratio_ab = RationalField(min_value=0, max_value=1)
    min_ratio_ba = RationalField(min_value=0, max_value=1)
    delta = RationalField(min_value=0)
    passes = BooleanField()


def degree_regularity_report(graph, delta, skeleton=None):
    """Check ``e(a, B) > delta |B|`` for every node ``a`` of block ``A`` and
    symmetrically, for each pair of distinct blocks joined in ``skeleton``.
    Only this degree condition is checked.

    :param skeleton: block pairs to inspect; by default every pair of
        distinct blocks joined by at least one sampled edge
    :raises ValidationError: a block that must be inspected is empty
    """
    delta = to_rational(delta)
    m = graph.block_count
    if skeleton is not None:
        _skeleton_matrix(skeleton, m)
        pairs = sorted(set((min(i, j), max(i, j))
                           for i, j in skeleton.edges if i != j))
    else:
        pairs = sorted(set((min(a, b), max(a, b))
                           for a, b in (graph.block_of[graph.edges].tolist()
                                        if graph.edge_count else [])
                           if a != b))
    sizes = graph.block_counts()
    membership = sparse.csr_matrix(
        (np.ones(graph.n, dtype=np.int64), (np.arange(graph.n), graph.block_of)),
        shape=(graph.n, m))
    adjacency = graph.adjacency
    if graph.directed:
        # a reciprocal pair is one neighbour
        adjacency = (adjacency + adjacency.T) > 0
    counts = np.asarray((adjacency.astype(np.int64) @ membership).todense())

    rows = []
    for a, b in pairs:
        if not sizes[a] or not sizes[b]:
            raise ValidationError('block %d is empty' % (a if not sizes[a] else b))
        nodes_a = graph.block_of == a
        nodes_b = graph.block_of == b
        ratio_ab = Fraction(int(counts[nodes_a, b].min()), int(sizes[b]))
        ratio_ba = Fraction(int(counts[nodes_b, a].min()), int(sizes[a]))
        rows.append(RegularityRow(block_a=a, block_b=b, size_a=int(sizes[a]),
                                  size_b=int(sizes[b]), min_ratio_ab=ratio_ab,
                                  min_ratio_ba=ratio_ba, delta=delta,
                                  passes=ratio_ab > delta and ratio_ba > delta))
    return rows


def write_edge_list(graph, fp):
    """Write ``graph`` as text: a header with ``n`` and the block of every
    node, then one ``i j`` line per edge.
    """
    fp.write('# n %d\n' % graph.n)
    fp.write('# blocks %s\n' % ' '.join(str(int(b)) for b in graph.block_of))
    for i, j in graph.edges:
        fp.write('%d %d\n' % (i, j))

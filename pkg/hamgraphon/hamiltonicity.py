"""Hamiltonian decompositions and cycles of sampled digraphs, and explicit
constructions on complete skeleton-partite graphs.
"""
import collections
import itertools
import logging

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import connected_components, maximum_bipartite_matching

from hamgraphon import signals
from hamgraphon.document import Document
from hamgraphon.errors import (InfeasibleError, NotInX0Error,
                               NotLoopFreeError, NotStronglyConnectedError,
                               UnbalancedFlowError, ValidationError)
from hamgraphon.fields import IntField, ListField, StringField
from hamgraphon.sampling import SampledDigraph
from hamgraphon.settings import get_setting
from hamgraphon.skeleton import (canonical_cycle, cycle_edges,
                                 enumerate_cycles,
                                 strongly_connected_components)

__all__ = ('DECOMPOSITION', 'CYCLE', 'FOUND', 'ABSENT', 'UNKNOWN',
           'FlowMatrix', 'HamWitness', 'EarDecomposition', 'CycleSearch',
           'has_ham_decomposition', 'brute_force_ham_decomposition',
           'find_ham_cycle', 'integer_flow', 'peel_cycles', 'in_x0',
           'x0_decomposition', 'build_complete_partite',
           'build_ham_decomposition_ky', 'ear_decomposition',
           'build_ham_cycle_ky', 'verify_witness', 'flow_of_witness',
           'cycle_images')

logger = logging.getLogger(__name__)

DECOMPOSITION = 'decomposition'
CYCLE = 'cycle'

FOUND = 'found'
ABSENT = 'absent'
UNKNOWN = 'unknown'

BRUTE_FORCE_LIMIT = 10


class FlowMatrix(object):
    """A balanced nonnegative integer ``m x m`` matrix: row sums equal
    column sums.
    """

    __slots__ = ('entries',)

    def __init__(self, entries):
        rows = []
        for row in entries:
            row = tuple(int(v) for v in row)
            if any(v < 0 for v in row):
                raise ValidationError('flow entries must be nonnegative')
            rows.append(row)
        m = len(rows)
        if any(len(row) != m for row in rows):
            raise ValidationError('a flow matrix must be square')
        self.entries = tuple(rows)
        if self.row_sums() != self.col_sums():
            raise UnbalancedFlowError('row sums %s differ from column sums %s'
                                      % (list(self.row_sums()),
                                         list(self.col_sums())))

    @classmethod
    def zeros(cls, m):
        return cls([[0] * m for _ in range(m)])

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def row_sums(self):
        return tuple(sum(row) for row in self.entries)

    def col_sums(self):
        return tuple(sum(column) for column in zip(*self.entries)) \
            if self.entries else ()

    def support(self):
        return frozenset((i, j) for i, row in enumerate(self.entries)
                         for j, v in enumerate(row) if v)

    def to_lists(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        if isinstance(other, FlowMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'FlowMatrix(%s)' % self.to_lists()


class HamWitness(Document):
    """Node-disjoint cycles covering a digraph.  A witness of kind
    ``cycle`` holds exactly one cycle.  ``certificate`` records the cycle
    multiplicities the construction used, when there is one.
    """

    kind = StringField(choices=(DECOMPOSITION, CYCLE), required=True)
    cycles = ListField(ListField(IntField(min_value=0), min_length=1))
    certificate = ListField(IntField(min_value=0), default=None)

    meta = {'emit_nulls': False}

    def clean(self):
        if self.kind == CYCLE and len(self.cycles or ()) != 1:
            raise ValidationError('a Hamiltonian cycle witness holds exactly '
                                  'one cycle')

    @property
    def node_count(self):
        return sum(len(cycle) for cycle in self.cycles)

    def __str__(self):
        return '%s of %d cycles' % (self.kind, len(self.cycles))


class EarDecomposition(object):
    """A base cycle and ears, each a path whose end points are already
    built and whose interior nodes are new.  Gluing them in order gives
    the skeleton back.
    """

    __slots__ = ('base_cycle', 'ears')

    def __init__(self, base_cycle, ears):
        self.base_cycle = tuple(base_cycle)
        self.ears = tuple(tuple(ear) for ear in ears)

    def stages(self):
        """Node and edge sets after the base cycle and after each ear."""
        nodes = set(self.base_cycle)
        edges = set(cycle_edges(self.base_cycle))
        stages = [(frozenset(nodes), frozenset(edges))]
        for ear in self.ears:
            nodes.update(ear)
            edges.update(zip(ear, ear[1:]))
            stages.append((frozenset(nodes), frozenset(edges)))
        return stages

    def nodes(self):
        return self.stages()[-1][0]

    def edges(self):
        return self.stages()[-1][1]

    def __repr__(self):
        return 'EarDecomposition(%s, %s)' % (list(self.base_cycle),
                                             [list(e) for e in self.ears])


CycleSearch = collections.namedtuple('CycleSearch', 'status witness expansions')


def _permutation_cycles(successor):
    seen = np.zeros(len(successor), dtype=bool)
    cycles = []
    for start in range(len(successor)):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = int(successor[v])
        cycles.append(cycle)
    return cycles


def has_ham_decomposition(graph):
    """Find a spanning set of node-disjoint cycles.

    A cover exists iff the bipartite graph joining out-copies to in-copies
    along the edges has a perfect matching; the matching, read as a
    permutation, gives the cycles.

    :returns: a :class:`HamWitness` or ``None``
    """
    if graph.n == 0:
        return HamWitness(kind=DECOMPOSITION, cycles=[])
    if graph.edge_count < graph.n:
        return None
    match = maximum_bipartite_matching(graph.adjacency, perm_type='column')
    if np.any(match < 0):
        return None
    return HamWitness(kind=DECOMPOSITION, cycles=_permutation_cycles(match))


def brute_force_ham_decomposition(graph):
    """Exhaustive search for a successor permutation without fixed points
    that uses only edges of ``graph``.  Limited to ten nodes.
    """
    if graph.n > BRUTE_FORCE_LIMIT:
        raise ValidationError('brute force is limited to %d nodes'
                              % BRUTE_FORCE_LIMIT)
    successors = [[int(w) for w in graph.successors(v)] for v in range(graph.n)]
    used = [False] * graph.n

    def assign(v):
        if v == graph.n:
            return True
        for w in successors[v]:
            if w != v and not used[w]:
                used[w] = True
                if assign(v + 1):
                    return True
                used[w] = False
        return False

    return assign(0)


class _CycleSearcher(object):
    """Backtracking from node 0 with degree, forcing and reachability
    pruning; successors are tried fewest onward options first.
    """

    def __init__(self, graph, budget):
        self.n = graph.n
        self.budget = budget
        self.out = [set(int(w) for w in graph.successors(v)) for v in range(self.n)]
        self.into = [set() for _ in range(self.n)]
        for v, targets in enumerate(self.out):
            for w in targets:
                self.into[w].add(v)
        self.on_path = [False] * self.n
        self.path = []
        self.expansions = 0

    def _feasible(self):
        cur = self.path[-1]
        start = self.path[0]
        free = [w for w in range(self.n) if not self.on_path[w]]
        only_from_cur = only_to_start = 0
        for w in free:
            sources = [u for u in self.into[w] if u == cur or not self.on_path[u]]
            targets = [u for u in self.out[w] if u == start or not self.on_path[u]]
            if not sources or not targets:
                return False
            if sources == [cur]:
                only_from_cur += 1
            if targets == [start]:
                only_to_start += 1
        if only_from_cur > 1 or only_to_start > 1:
            return False
        # every free node reachable from cur through free nodes
        reached = set()
        frontier = [cur]
        while frontier:
            v = frontier.pop()
            for w in self.out[v]:
                if not self.on_path[w] and w not in reached:
                    reached.add(w)
                    frontier.append(w)
        return len(reached) == len(free)

    def _candidates(self, cur):
        start = self.path[0]
        options = [w for w in self.out[cur] if not self.on_path[w]]
        forced = [w for w in options
                  if all(u == cur or self.on_path[u] for u in self.into[w])]
        if forced:
            return forced[:1]

        def onward(w):
            return sum(1 for u in self.out[w] if u == start or not self.on_path[u])
        return sorted(options, key=lambda w: (onward(w), w))

    def _push(self, w):
        self.path.append(w)
        self.on_path[w] = True

    def _pop(self):
        self.on_path[self.path.pop()] = False

    def run(self):
        self._push(0)
        stack = [[self._candidates(0), 0]]
        while stack:
            frame = stack[-1]
            if frame[1] >= len(frame[0]):
                stack.pop()
                self._pop()
                continue
            w = frame[0][frame[1]]
            frame[1] += 1
            self.expansions += 1
            if self.expansions > self.budget:
                return UNKNOWN, None
            self._push(w)
            if len(self.path) == self.n:
                if self.path[0] in self.out[w]:
                    return FOUND, list(self.path)
                self._pop()
                continue
            if not self._feasible():
                self._pop()
                continue
            stack.append([self._candidates(w), 0])
        return ABSENT, None


def find_ham_cycle(graph, budget=None):
    """Exact search for a Hamiltonian cycle.

    :param budget: node expansions allowed, defaults to the
        ``search_budget`` setting
    :returns: a :class:`CycleSearch` whose status is ``found`` (with a
        witness), ``absent`` or ``unknown`` (budget exhausted)
    """
    if budget is None:
        budget = get_setting('search_budget')
    if budget <= 0:
        raise ValidationError('search budget must be positive')
    n = graph.n
    if n < 2:
        return CycleSearch(ABSENT, None, 0)
    if np.any(graph.in_degrees() == 0) or np.any(graph.out_degrees() == 0):
        return CycleSearch(ABSENT, None, 0)
    count, _ = connected_components(graph.adjacency, directed=True,
                                    connection='strong')
    if count > 1:
        return CycleSearch(ABSENT, None, 0)
    searcher = _CycleSearcher(graph, budget)
    status, path = searcher.run()
    witness = HamWitness(kind=CYCLE, cycles=[path]) if status == FOUND else None
    logger.debug('cycle search on %d nodes: %s after %d expansions', n,
                 status, searcher.expansions)
    return CycleSearch(status, witness, searcher.expansions)


def _integer_vector(y, m):
    y = list(y)
    if len(y) != m:
        raise ValidationError('y has %d entries for %d blocks' % (len(y), m))
    result = []
    for v in y:
        if isinstance(v, bool) or int(v) != v:
            raise ValidationError('y must hold integers, got %r' % (v,))
        if v < 0:
            raise ValidationError('y must be nonnegative, got %r' % (v,))
        result.append(int(v))
    return result


def integer_flow(skeleton, y):
    """Integer balanced ``A`` supported on the skeleton with row sums
    ``y``, from a maximum flow: source to out-copies with capacity ``y_i``,
    out-copy ``i`` to in-copy ``j`` for each skeleton edge, in-copies to the
    sink with capacity ``y_j``.

    :returns: a :class:`FlowMatrix`, or ``None`` when ``y`` admits none
    """
    m = skeleton.node_count
    y = _integer_vector(y, m)
    total = sum(y)
    if total == 0:
        return FlowMatrix.zeros(m)
    network = nx.DiGraph()
    for i, amount in enumerate(y):
        if amount:
            network.add_edge('source', ('out', i), capacity=amount)
            network.add_edge(('in', i), 'sink', capacity=amount)
    for i, j in sorted(skeleton.edges):
        if y[i] and y[j]:
            network.add_edge(('out', i), ('in', j))
    if 'sink' not in network or 'source' not in network:
        return None
    value, flows = nx.maximum_flow(network, 'source', 'sink')
    if value < total:
        return None
    entries = [[0] * m for _ in range(m)]
    for i in range(m):
        for node, amount in flows.get(('out', i), {}).items():
            if amount:
                entries[i][node[1]] = int(amount)
    return FlowMatrix(entries)


def peel_cycles(skeleton, flow, cycles=None):
    """Write a flow as a nonnegative integer combination of cycle
    adjacency matrices.

    Repeatedly walks from the smallest node with outgoing flow, always
    along the smallest positive entry, until a node repeats; the cycle
    found is subtracted as many times as its smallest entry allows.

    :param cycles: the skeleton's cycle set, enumerated when omitted
    :returns: multiplicities, one per cycle in ``cycles`` order
    :raises UnbalancedFlowError: ``flow`` is not balanced
    """
    if not isinstance(flow, FlowMatrix):
        flow = FlowMatrix(flow)
    if flow.size != skeleton.node_count:
        raise ValidationError('flow is %d x %d for %d nodes'
                              % (flow.size, flow.size, skeleton.node_count))
    if not flow.support() <= skeleton.edges:
        raise ValidationError('flow uses edges outside the skeleton')
    if cycles is None:
        cycles = enumerate_cycles(skeleton)
    remaining = [list(row) for row in flow.entries]
    counts = [0] * len(cycles)
    m = flow.size
    while True:
        start = next((i for i in range(m) if any(remaining[i])), None)
        if start is None:
            break
        walk = [start]
        position = {start: 0}
        while True:
            cur = walk[-1]
            nxt = next(j for j in range(m) if remaining[cur][j] > 0)
            if nxt in position:
                cycle = walk[position[nxt]:]
                break
            position[nxt] = len(walk)
            walk.append(nxt)
        edges = list(zip(cycle, cycle[1:] + cycle[:1]))
        times = min(remaining[i][j] for i, j in edges)
        for i, j in edges:
            remaining[i][j] -= times
        counts[cycles.index_of(cycle)] += times
    return tuple(counts)


def x0_decomposition(skeleton, y, cycles=None):
    """Multiplicities ``c`` with ``y = sum_j c_j z_j`` and every ``c_j >= 1``.

    Exists iff ``y`` minus the sum of all incidence vectors carries a
    balanced integer flow.

    :returns: a tuple of positive integers, or ``None``
    """
    y = _integer_vector(y, skeleton.node_count)
    if cycles is None:
        cycles = enumerate_cycles(skeleton)
    if not any(y) or not cycles:
        return None
    through = [0] * skeleton.node_count
    for cycle in cycles:
        for v in cycle:
            through[v] += 1
    residual = [a - b for a, b in zip(y, through)]
    if any(v < 0 for v in residual):
        return None
    flow = integer_flow(skeleton, residual)
    if flow is None:
        return None
    return tuple(1 + c for c in peel_cycles(skeleton, flow, cycles))


def in_x0(skeleton, y, cycles=None):
    """Whether ``y`` decomposes over the cycles with every multiplicity
    positive; the domain of :func:`build_ham_cycle_ky`.
    """
    return x0_decomposition(skeleton, y, cycles) is not None


def _block_nodes(y):
    pools = []
    first = 0
    for amount in y:
        pools.append(collections.deque(range(first, first + amount)))
        first += amount
    return pools


def build_complete_partite(skeleton, y):
    """The complete skeleton-partite digraph with ``y_i`` nodes in block
    ``i``; nodes are numbered block by block.
    """
    y = _integer_vector(y, skeleton.node_count)
    block_of = np.repeat(np.arange(skeleton.node_count), y)
    pools = _block_nodes(y)
    parts = []
    for i, j in sorted(skeleton.edges):
        if not y[i] or not y[j]:
            continue
        sources, targets = np.meshgrid(np.array(pools[i]), np.array(pools[j]),
                                       indexing='ij')
        pairs = np.stack([sources.ravel(), targets.ravel()], axis=1)
        parts.append(pairs[pairs[:, 0] != pairs[:, 1]])
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return SampledDigraph(int(sum(y)), block_of, edges,
                          block_count=skeleton.node_count)


def _require_loop_free(skeleton):
    if not skeleton.is_loop_free():
        raise NotLoopFreeError('the skeleton has self-loops at %s; apply '
                               'loop_free_reduction first'
                               % list(skeleton.self_loops()))


def build_ham_decomposition_ky(skeleton, y, cycles=None):
    """A Hamiltonian decomposition of the complete skeleton-partite graph
    with ``y`` nodes per block: ``c_j`` cycles that map onto cycle ``j``,
    each taking the next unused node of every block it visits.

    :raises NotLoopFreeError: the skeleton has self-loops
    :raises InfeasibleError: no balanced integer flow has row sums ``y``
    """
    _require_loop_free(skeleton)
    y = _integer_vector(y, skeleton.node_count)
    flow = integer_flow(skeleton, y)
    if flow is None:
        raise InfeasibleError('y = %s is not in the node-flow cone' % y)
    if cycles is None:
        cycles = enumerate_cycles(skeleton)
    counts = peel_cycles(skeleton, flow, cycles)
    pools = _block_nodes(y)
    built = []
    for cycle, count in zip(cycles, counts):
        for _ in range(count):
            built.append([pools[block].popleft() for block in cycle])
    witness = HamWitness(kind=DECOMPOSITION, cycles=built,
                         certificate=list(counts))
    signals.witness_built.send(skeleton, witness=witness, y=y)
    return witness


def _shortest_path(skeleton, source, targets, blocked):
    """Shortest path from ``source`` to a node of ``targets`` whose interior
    avoids ``blocked``, or ``None``.  Ties go to the smallest target.
    """
    interior = [v for v in skeleton.nodes
                if v == source or (v not in blocked and v not in targets)]
    network = nx.DiGraph(skeleton.to_networkx().subgraph(interior))
    for v in interior:
        for w in skeleton.successors(v):
            if w in targets:
                network.add_edge(v, ('target', w))
    paths = nx.single_source_shortest_path(network, source)
    ends = [node for node in paths if isinstance(node, tuple)]
    if not ends:
        return None
    end = min(ends, key=lambda node: (len(paths[node]), node[1]))
    return paths[end][:-1] + [end[1]]


def ear_decomposition(skeleton):
    """Ear decomposition of a strongly connected loop-free skeleton.

    The base cycle is a shortest cycle through node 0.  Each ear starts
    with the smallest edge leaving the built part and follows a shortest
    path back into it.

    :raises NotStronglyConnectedError: the skeleton is not strongly
        connected or has no cycle
    """
    _require_loop_free(skeleton)
    if (len(strongly_connected_components(skeleton)) != 1
            or not skeleton.edges):
        raise NotStronglyConnectedError('ear decompositions need a strongly '
                                        'connected skeleton with a cycle')
    base = _shortest_path(skeleton, 0, {0}, blocked=set())[:-1]
    nodes = set(base)
    edges = set(cycle_edges(tuple(base)))
    ears = []
    while len(edges) < len(skeleton.edges):
        u, w = min(e for e in skeleton.edges - edges if e[0] in nodes)
        if w in nodes:
            ear = [u, w]
        else:
            ear = [u] + _shortest_path(skeleton, w, nodes, blocked=nodes)
        nodes.update(ear)
        edges.update(zip(ear, ear[1:]))
        ears.append(ear)
    return EarDecomposition(base, ears)


def _concatenate_copies(cycle, count, pools):
    path = []
    for _ in range(count):
        path.extend(pools[block].popleft() for block in cycle)
    return path


def _rotate_to_block(path, block, block_of):
    start = next(k for k, v in enumerate(path) if block_of[v] == block)
    return path[start:] + path[:start]


def build_ham_cycle_ky(skeleton, y, cycles=None):
    """A Hamiltonian cycle of the complete skeleton-partite graph with ``y``
    nodes per block.

    ``y`` is first written as ``sum_j c_j z_j`` with every ``c_j >= 1``.
    The cycle is then built along an ear decomposition: the cycles of the
    base contribute ``c_j`` concatenated copies; at each ear the cycle of
    the part built so far and one concatenated cycle for every new cycle
    through the ear are spliced together at nodes of the ear's first block.

    :raises NotLoopFreeError: the skeleton has self-loops
    :raises NotStronglyConnectedError: the skeleton is not strongly connected
    :raises NotInX0Error: ``y`` has no all-positive decomposition
    """
    _require_loop_free(skeleton)
    if len(strongly_connected_components(skeleton)) != 1 or not skeleton.edges:
        raise NotStronglyConnectedError('the skeleton is not strongly connected')
    y = _integer_vector(y, skeleton.node_count)
    if cycles is None:
        cycles = enumerate_cycles(skeleton)
    counts = x0_decomposition(skeleton, y, cycles)
    if counts is None:
        raise NotInX0Error('y = %s has no decomposition with every cycle '
                           'used' % y)

    ears = ear_decomposition(skeleton)
    stages = ears.stages()
    by_stage = [[] for _ in stages]
    for index, cycle in enumerate(cycles):
        edges = cycle_edges(cycle)
        stage = next(k for k, (_, stage_edges) in enumerate(stages)
                     if edges <= stage_edges)
        by_stage[stage].append(index)

    block_of = np.repeat(np.arange(skeleton.node_count), y)
    pools = _block_nodes(y)
    path = []
    for stage, members in enumerate(by_stage):
        pieces = [_concatenate_copies(cycles[j], counts[j], pools)
                  for j in members]
        if stage == 0:
            path = pieces[0]
            continue
        anchor = ears.ears[stage - 1][0]
        path = list(itertools.chain.from_iterable(
            _rotate_to_block(piece, anchor, block_of)
            for piece in [path] + pieces))
    witness = HamWitness(kind=CYCLE, cycles=[path], certificate=list(counts))
    signals.witness_built.send(skeleton, witness=witness, y=y)
    return witness


def verify_witness(graph, witness):
    """Check that ``witness`` is a set of node-disjoint cycles of ``graph``
    covering every node, and a single cycle when its kind is ``cycle``.
    """
    cycles = witness.cycles or []
    if witness.kind == CYCLE and len(cycles) != 1:
        return False
    seen = set()
    for cycle in cycles:
        if not cycle:
            return False
        for v in cycle:
            if not 0 <= v < graph.n or v in seen:
                return False
            seen.add(v)
    if len(seen) != graph.n:
        return False
    edges = graph.edge_set()
    return all((u, v) in edges
               for cycle in cycles
               for u, v in zip(cycle, cycle[1:] + cycle[:1]))


def flow_of_witness(graph, witness):
    """The balanced block-level matrix counting witness edges between each
    ordered pair of blocks.
    """
    m = graph.block_count
    entries = [[0] * m for _ in range(m)]
    for cycle in witness.cycles:
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            entries[graph.block_of[u]][graph.block_of[v]] += 1
    return FlowMatrix(entries)


def cycle_images(witness, block_of):
    """Multiset of the block sequences of the witness cycles, each in
    canonical rotation.
    """
    return collections.Counter(
        canonical_cycle([int(block_of[v]) for v in cycle])
        for cycle in witness.cycles)

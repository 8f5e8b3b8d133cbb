"""Skeleton graphs of step-graphons and the conditions decided on them.

The skeleton has one node per partition block and a directed edge ``i -> j``
wherever the graphon is nonzero on block ``(i, j)``; self-loops are allowed.
"""
import logging

import networkx as nx

from hamgraphon import signals
from hamgraphon.document import Document
from hamgraphon.errors import (CycleCapExceeded, NotSymmetricError,
                               OperationError, ValidationError)
from hamgraphon.fields import BooleanField, IntField, ListField, RationalField, StringField
from hamgraphon.geometry import (RationalMatrix, cone_membership, rank,
                                 relative_interior_membership)
from hamgraphon.graphon import concentration_vector
from hamgraphon.settings import get_setting

__all__ = ('SkeletonGraph', 'CycleSet', 'IncidenceMatrix', 'ConditionReport',
           'ZERO', 'ONE', 'INDETERMINATE', 'VERDICTS',
           'skeleton_of', 'strongly_connected_components', 'bipartite_double',
           'bipartite_component_counts', 'corank', 'corank_formula',
           'canonical_cycle', 'cycle_edges', 'enumerate_cycles',
           'incidence_matrix', 'check_conditions', 'undirected_collapse',
           'node_edge_incidence')

logger = logging.getLogger(__name__)

ZERO = 'zero'
ONE = 'one'
INDETERMINATE = 'indeterminate'
VERDICTS = (ZERO, ONE, INDETERMINATE)


class SkeletonGraph(object):
    """A digraph on ``node_count`` blocks, self-loops allowed."""

    __slots__ = ('node_count', 'edges', '_successors', '_predecessors')

    def __init__(self, node_count, edges):
        node_count = int(node_count)
        if node_count < 1:
            raise ValidationError('a skeleton needs at least one node')
        checked = set()
        for edge in edges:
            i, j = (int(v) for v in edge)
            if not (0 <= i < node_count and 0 <= j < node_count):
                raise ValidationError('edge (%d, %d) is out of range for %d '
                                      'nodes' % (i, j, node_count))
            checked.add((i, j))
        successors = [[] for _ in range(node_count)]
        predecessors = [[] for _ in range(node_count)]
        for i, j in sorted(checked):
            successors[i].append(j)
            predecessors[j].append(i)
        self.node_count = node_count
        self.edges = frozenset(checked)
        self._successors = tuple(tuple(s) for s in successors)
        self._predecessors = tuple(tuple(sorted(p)) for p in predecessors)

    def __getstate__(self):
        return (self.node_count, self.edges)

    def __setstate__(self, state):
        self.__init__(*state)

    @property
    def nodes(self):
        return range(self.node_count)

    def has_edge(self, i, j):
        return (i, j) in self.edges

    def successors(self, i):
        return self._successors[i]

    def predecessors(self, i):
        return self._predecessors[i]

    def self_loops(self):
        return tuple(i for i in self.nodes if (i, i) in self.edges)

    def is_loop_free(self):
        return not self.self_loops()

    def is_symmetric(self):
        return all((j, i) in self.edges for i, j in self.edges)

    def subgraph(self, nodes):
        """Induced subgraph, relabelled ``0..len(nodes)-1`` in sorted order."""
        nodes = sorted(nodes)
        index = dict((v, k) for k, v in enumerate(nodes))
        return SkeletonGraph(len(nodes), [(index[i], index[j])
                                          for i, j in self.edges
                                          if i in index and j in index])

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(sorted(self.edges))
        return graph

    def __eq__(self, other):
        if not isinstance(other, SkeletonGraph):
            return NotImplemented
        return (self.node_count, self.edges) == (other.node_count, other.edges)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.node_count, self.edges))

    def __len__(self):
        return self.node_count

    def __repr__(self):
        return 'SkeletonGraph(%d, %s)' % (self.node_count, sorted(self.edges))


def canonical_cycle(cycle):
    """Rotate ``cycle`` so that its smallest node comes first."""
    cycle = tuple(int(v) for v in cycle)
    if not cycle:
        raise ValidationError('a cycle needs at least one node')
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def cycle_edges(cycle):
    """Edges traversed by ``cycle``, closing edge included."""
    return frozenset(zip(cycle, cycle[1:] + cycle[:1]))


def _cycle_order(cycle):
    # node sets compared from the highest block down, then the sequence
    return tuple(-v for v in sorted(cycle, reverse=True)), cycle


class CycleSet(tuple):
    """Simple directed cycles in canonical rotation, without duplicates.

    Cycles are ordered by their node sets read from the highest block
    downward, ties broken by the canonical sequence; a self-loop is the
    one-node cycle ``(i,)``.
    """

    def __new__(cls, cycles=()):
        unique = set()
        for cycle in cycles:
            cycle = canonical_cycle(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValidationError('%s is not a simple cycle' % (cycle,))
            unique.add(cycle)
        return super(CycleSet, cls).__new__(cls, sorted(unique, key=_cycle_order))

    def edges_of(self, index):
        return cycle_edges(self[index])

    def index_of(self, cycle):
        return self.index(canonical_cycle(cycle))

    def total_length(self):
        return sum(len(cycle) for cycle in self)

    def __repr__(self):
        return 'CycleSet(%s)' % list(self)


class IncidenceMatrix(RationalMatrix):
    """A 0/1 matrix whose column ``j`` is the incidence vector of the
    ``j``-th cycle (or undirected edge).
    """

    __slots__ = ()

    @classmethod
    def from_supports(cls, supports, row_count):
        columns = []
        for support in supports:
            column = [0] * row_count
            for i in support:
                column[i] = 1
            columns.append(column)
        return cls.from_columns(columns, row_count)

    def support(self, j):
        return frozenset(i for i, v in enumerate(self.column(j)) if v)

    def column_sums(self):
        return tuple(int(sum(column)) for column in self.columns)


def skeleton_of(graphon):
    """Skeleton graph of a step-graphon: edge ``(i, j)`` iff ``p_ij > 0``."""
    return SkeletonGraph(graphon.block_count, graphon.support())


def strongly_connected_components(skeleton):
    """Strongly connected components as frozensets, ordered by their
    smallest node.
    """
    components = nx.strongly_connected_components(skeleton.to_networkx())
    return sorted((frozenset(c) for c in components), key=min)


def bipartite_double(skeleton):
    """Undirected bipartite graph with nodes ``('out', i)`` and
    ``('in', j)`` and an edge for each directed skeleton edge ``i -> j``.
    """
    graph = nx.Graph()
    graph.add_nodes_from((('out', i) for i in skeleton.nodes), bipartite=0)
    graph.add_nodes_from((('in', j) for j in skeleton.nodes), bipartite=1)
    graph.add_edges_from((('out', i), ('in', j)) for i, j in sorted(skeleton.edges))
    return graph


def bipartite_component_counts(skeleton):
    """Number of connected components of the bipartite double of each
    strongly connected component, in component order.
    """
    counts = []
    for component in strongly_connected_components(skeleton):
        double = bipartite_double(skeleton.subgraph(component))
        counts.append(nx.number_connected_components(double))
    return counts


def corank_formula(skeleton):
    return sum(tau - 1 for tau in bipartite_component_counts(skeleton))


def corank(skeleton, matrix):
    """``m - rank(Z)``, cross-checked against the bipartite-double count.

    :raises OperationError: the two computations disagree, which means
        ``matrix`` was not built from the complete cycle set
    """
    if matrix.row_count != skeleton.node_count:
        raise ValidationError('incidence matrix has %d rows for %d nodes'
                              % (matrix.row_count, skeleton.node_count))
    by_rank = skeleton.node_count - rank(matrix)
    by_formula = corank_formula(skeleton)
    if by_rank != by_formula:
        raise OperationError('co-rank by elimination (%d) differs from the '
                             'bipartite-double count (%d)'
                             % (by_rank, by_formula))
    return by_rank


def enumerate_cycles(skeleton, cap=None):
    """Every simple directed cycle of ``skeleton``, self-loops included.

    :param cap: the largest number of cycles accepted; defaults to the
        ``cycle_cap`` setting
    :raises CycleCapExceeded: the skeleton has more than ``cap`` cycles
    """
    if cap is None:
        cap = get_setting('cycle_cap')
    if cap <= 0:
        raise ValidationError('cycle cap must be positive')
    found = []
    for cycle in nx.simple_cycles(skeleton.to_networkx()):
        found.append(cycle)
        if len(found) > cap:
            raise CycleCapExceeded(cap)
    cycles = CycleSet(found)
    logger.debug('enumerated %d cycles on %d nodes', len(cycles),
                 skeleton.node_count)
    return cycles


def incidence_matrix(skeleton, cycles):
    """Node-cycle incidence matrix, one column per cycle in order."""
    for cycle in cycles:
        if not cycle_edges(cycle) <= skeleton.edges:
            raise ValidationError('%s is not a cycle of the skeleton'
                                  % (cycle,))
    return IncidenceMatrix.from_supports(cycles, skeleton.node_count)


def undirected_collapse(skeleton):
    """Undirected edges ``(i, j)``, ``i <= j``, of a symmetric skeleton."""
    if not skeleton.is_symmetric():
        raise NotSymmetricError('the skeleton has an unpaired edge')
    return sorted((i, j) for i, j in skeleton.edges if i <= j)


def node_edge_incidence(skeleton):
    """Node-edge incidence matrix of the undirected collapse; a loop
    contributes a single 1 at its node.
    """
    edges = undirected_collapse(skeleton)
    return IncidenceMatrix.from_supports((set(e) for e in edges),
                                         skeleton.node_count)


class ConditionReport(Document):
    """Exact analysis of a step-graphon: the four skeleton conditions, the
    certificates behind them and the predicted limits.

    ``verdict_h`` is the limit for a Hamiltonian decomposition and
    ``verdict_strong_h`` the limit for a Hamiltonian cycle.
    """

    node_count = IntField(min_value=1, required=True)
    concentration = ListField(RationalField(min_value=0, max_value=1))
    edges = ListField(ListField(IntField(min_value=0)))
    sccs = ListField(ListField(IntField(min_value=0)))
    cycle_count = IntField(min_value=0)
    cycles = ListField(ListField(IntField(min_value=0)))
    bipartite_components = ListField(IntField(min_value=1))
    corank = IntField(min_value=0, required=True)
    cond_a = BooleanField(required=True)
    cond_b = BooleanField(required=True)
    cond_bprime = BooleanField(required=True)
    cond_c = BooleanField(required=True)
    cone_certificate = ListField(RationalField(min_value=0), default=None)
    certificate_strict = BooleanField(default=False)
    degenerate = BooleanField(default=False)
    symmetric_support = BooleanField(default=False)
    edge_corank = IntField(min_value=0)
    verdict_h = StringField(choices=VERDICTS, required=True)
    verdict_strong_h = StringField(choices=VERDICTS, required=True)

    def clean(self):
        if self.cond_b and not self.cond_bprime:
            raise ValidationError('interior membership without cone '
                                  'membership')
        if self.corank is not None and self.cond_a != (self.corank == 0):
            raise ValidationError('condition A disagrees with the co-rank')

    def __str__(self):
        return 'H=%s strongH=%s' % (self.verdict_h, self.verdict_strong_h)


def _verdicts(zero_graphon, cond_a, cond_b, cond_bprime, cond_c):
    if zero_graphon or not cond_a or not cond_bprime:
        return ZERO, ZERO
    if cond_b:
        return ONE, (ONE if cond_c else ZERO)
    return INDETERMINATE, INDETERMINATE


def check_conditions(graphon, cap=None):
    """Decide Conditions A, B, B' and C for ``graphon`` and the limits they
    predict.

    A is ``co-rank(Z) = 0``; B' is membership of the concentration vector
    in the cone spanned by the columns of ``Z``; B is membership in its
    relative interior; C is strong connectivity of the skeleton.  An
    edgeless graphon is flagged ``degenerate`` and gets verdict zero.

    :param cap: cycle enumeration cap, defaults to the ``cycle_cap`` setting
    :rtype: :class:`ConditionReport`
    """
    signals.pre_analyze.send(graphon)
    skeleton = skeleton_of(graphon)
    x = concentration_vector(graphon)
    cycles = enumerate_cycles(skeleton, cap)
    matrix = incidence_matrix(skeleton, cycles)
    co = corank(skeleton, matrix)

    interior = relative_interior_membership(matrix, x)
    certificate = interior if interior is not None else cone_membership(matrix, x)
    components = strongly_connected_components(skeleton)

    cond_a = co == 0
    cond_b = interior is not None
    cond_bprime = certificate is not None
    cond_c = len(components) == 1
    verdict_h, verdict_strong_h = _verdicts(graphon.is_zero, cond_a, cond_b,
                                            cond_bprime, cond_c)

    symmetric = graphon.has_symmetric_support()
    edge_corank = None
    if symmetric:
        edge_matrix = node_edge_incidence(skeleton)
        edge_corank = skeleton.node_count - rank(edge_matrix)

    report = ConditionReport(
        node_count=skeleton.node_count,
        concentration=list(x),
        edges=[list(e) for e in sorted(skeleton.edges)],
        sccs=[sorted(c) for c in components],
        cycle_count=len(cycles),
        cycles=[list(c) for c in cycles],
        bipartite_components=bipartite_component_counts(skeleton),
        corank=co,
        cond_a=cond_a,
        cond_b=cond_b,
        cond_bprime=cond_bprime,
        cond_c=cond_c,
        cone_certificate=(list(certificate.coefficients)
                          if certificate is not None else None),
        certificate_strict=bool(certificate is not None and certificate.strict
                                and cond_b),
        degenerate=graphon.is_zero or skeleton.node_count == 1,
        symmetric_support=symmetric,
        edge_corank=edge_corank,
        verdict_h=verdict_h,
        verdict_strong_h=verdict_strong_h,
    )
    report.validate()
    logger.info('conditions A=%s B=%s B\'=%s C=%s, verdicts %s',
                cond_a, cond_b, cond_bprime, cond_c, report)
    signals.post_analyze.send(graphon, report=report)
    return report

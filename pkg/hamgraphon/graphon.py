"""Step-graphons over exact rational partitions and the transformations
applied to them: refinement, symmetrization, saturation and self-loop
surgery.
"""
import bisect
import logging
import math
import numbers
from fractions import Fraction

from hamgraphon import signals
from hamgraphon.common import _import_class
from hamgraphon.errors import NoSelfLoopError, ValidationError

__all__ = ('to_rational', 'Partition', 'ConcentrationVector', 'StepGraphon',
           'new_step_graphon', 'concentration_vector', 'refine_partition',
           'symmetrize', 'saturate', 'surgery_remove_self_loop',
           'loop_free_reduction', 'block_origin', 'dominated_by')

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rational(value):
    """Read ``value`` as an exact rational.

    Strings may be fractions (``"9/16"``) or decimals (``"0.5625"``,
    ``"0.2"`` is ``1/5``); floats are read through their shortest repr.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError('%r is not a rational number' % (value,))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if not math.isfinite(value):
            raise ValidationError('%r is not a finite number' % (value,))
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError('%r is not a rational number' % (value,))
    raise ValidationError('%r is not a rational number' % (value,))


class Partition(tuple):
    """Increasing rationals ``0 = s_0 < s_1 < ... < s_m = 1``.

    Block ``i`` is ``[s_i, s_{i+1})``; the last block is closed at 1.
    """

    def __new__(cls, points):
        points = tuple(to_rational(p) for p in points)
        if len(points) < 2:
            raise ValidationError('a partition needs at least two points')
        if points[0] != 0 or points[-1] != 1:
            raise ValidationError('a partition must start at 0 and end at 1')
        for left, right in zip(points, points[1:]):
            if not left < right:
                raise ValidationError('partition points must be strictly '
                                      'increasing (%s >= %s)' % (left, right))
        return super(Partition, cls).__new__(cls, points)

    @property
    def block_count(self):
        return len(self) - 1

    def lengths(self):
        return tuple(right - left for left, right in zip(self, self[1:]))

    def interval(self, block):
        return self[block], self[block + 1]

    def midpoint(self, block):
        left, right = self.interval(block)
        return (left + right) / 2

    def block_of(self, u):
        """Index of the block containing ``u`` in ``[0, 1]``."""
        u = to_rational(u)
        if u < 0 or u > 1:
            raise ValidationError('%s lies outside [0, 1]' % u)
        return min(bisect.bisect_right(self, u) - 1, self.block_count - 1)

    def insert(self, point):
        point = to_rational(point)
        if not 0 < point < 1:
            raise ValidationError('refinement point %s must lie in (0, 1)'
                                  % point)
        if point in self:
            raise ValidationError('%s is already a partition point' % point)
        return Partition(sorted(self + (point,)))

    def __repr__(self):
        return 'Partition(%s)' % ', '.join(str(p) for p in self)


class ConcentrationVector(tuple):
    """Block lengths of a partition: positive rationals summing to 1."""

    def __new__(cls, entries):
        entries = tuple(to_rational(e) for e in entries)
        if not entries:
            raise ValidationError('a concentration vector cannot be empty')
        if any(e <= 0 for e in entries):
            raise ValidationError('concentration entries must be positive')
        if sum(entries, _ZERO) != 1:
            raise ValidationError('concentration entries must sum to 1')
        return super(ConcentrationVector, cls).__new__(cls, entries)

    def __repr__(self):
        return 'ConcentrationVector(%s)' % ', '.join(str(e) for e in self)


class StepGraphon(object):
    """A graphon constant on each rectangle ``R_ij`` of a partition grid.

    ``values[i][j]`` is the edge probability from block ``i`` to block ``j``.
    Instances are immutable.
    """

    __slots__ = ('partition', 'values')

    def __init__(self, partition, values):
        if not isinstance(partition, Partition):
            partition = Partition(partition)
        m = partition.block_count
        rows = []
        for i, row in enumerate(values):
            row = tuple(to_rational(v) for v in row)
            if len(row) != m:
                raise ValidationError('row %d has %d values, the partition '
                                      'has %d blocks' % (i, len(row), m))
            for j, v in enumerate(row):
                if not 0 <= v <= 1:
                    raise ValidationError('value %s at (%d, %d) is outside '
                                          '[0, 1]' % (v, i, j))
            rows.append(row)
        if len(rows) != m:
            raise ValidationError('values have %d rows, the partition has %d '
                                  'blocks' % (len(rows), m))
        object.__setattr__(self, 'partition', partition)
        object.__setattr__(self, 'values', tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError('StepGraphon is immutable')

    def __getstate__(self):
        return (self.partition, self.values)

    def __setstate__(self, state):
        object.__setattr__(self, 'partition', state[0])
        object.__setattr__(self, 'values', state[1])

    @property
    def block_count(self):
        return self.partition.block_count

    def value(self, i, j):
        return self.values[i][j]

    def __call__(self, s, t):
        """Evaluate ``W(s, t)``."""
        return self.values[self.partition.block_of(s)][self.partition.block_of(t)]

    evaluate = __call__

    def support(self):
        """Block pairs where the graphon is nonzero."""
        m = self.block_count
        return frozenset((i, j) for i in range(m) for j in range(m)
                         if self.values[i][j] > 0)

    @property
    def is_zero(self):
        return not any(v for row in self.values for v in row)

    def is_symmetric(self):
        m = self.block_count
        return all(self.values[i][j] == self.values[j][i]
                   for i in range(m) for j in range(i + 1, m))

    def has_symmetric_support(self):
        m = self.block_count
        return all((self.values[i][j] > 0) == (self.values[j][i] > 0)
                   for i in range(m) for j in range(i + 1, m))

    def self_loop_blocks(self):
        return tuple(i for i in range(self.block_count) if self.values[i][i] > 0)

    def is_loop_free(self):
        return not self.self_loop_blocks()

    def __eq__(self, other):
        if not isinstance(other, StepGraphon):
            return NotImplemented
        return self.partition == other.partition and self.values == other.values

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.partition, self.values))

    def __repr__(self):
        return 'StepGraphon(%r, %s)' % (
            self.partition,
            [[str(v) for v in row] for row in self.values])


def new_step_graphon(partition, values):
    """Build a validated :class:`StepGraphon`.

    :param partition: points ``0 = s_0 < ... < s_m = 1``
    :param values: ``m x m`` edge probabilities in ``[0, 1]``
    """
    return StepGraphon(Partition(partition), values)


def concentration_vector(graphon):
    return ConcentrationVector(graphon.partition.lengths())


def _expand(graphon, partition, origin, zero_diagonal=()):
    m = len(origin)
    values = [[graphon.values[origin[a]][origin[b]] for b in range(m)]
              for a in range(m)]
    for a in zero_diagonal:
        values[a][a] = _ZERO
    return StepGraphon(partition, values)


def refine_partition(graphon, new_point):
    """Represent ``graphon`` over the partition with ``new_point`` added.

    The block containing the point is split in both axes and its values
    duplicated, so the graphon is unchanged as a function.
    """
    partition = graphon.partition.insert(new_point)
    block = graphon.partition.block_of(new_point)
    origin = list(range(graphon.block_count))
    origin.insert(block + 1, block)
    return _expand(graphon, partition, origin)


def symmetrize(graphon):
    """``q_ij = p_ij p_ji`` when both are positive, else ``max(p_ij, p_ji)``."""
    m = graphon.block_count
    p = graphon.values
    values = []
    for i in range(m):
        row = []
        for j in range(m):
            product = p[i][j] * p[j][i]
            row.append(product if product else max(p[i][j], p[j][i]))
        values.append(row)
    return StepGraphon(graphon.partition, values)


def saturate(graphon):
    values = [[_ONE if v else _ZERO for v in row] for row in graphon.values]
    return StepGraphon(graphon.partition, values)


def surgery_remove_self_loop(graphon, block):
    """Remove the skeleton self-loop at ``block``.

    The block's interval is split at its midpoint and the two diagonal
    sub-blocks are set to zero; the off-diagonal sub-blocks keep the old
    value.  The skeleton gains one node and loses the loop.

    :raises NoSelfLoopError: the diagonal value at ``block`` is zero
    """
    m = graphon.block_count
    if not 0 <= block < m:
        raise ValidationError('block %d is out of range for %d blocks'
                              % (block, m))
    if graphon.values[block][block] == 0:
        raise NoSelfLoopError('block %d has no self-loop' % block)
    midpoint = graphon.partition.midpoint(block)
    partition = graphon.partition.insert(midpoint)
    origin = list(range(m))
    origin.insert(block + 1, block)
    result = _expand(graphon, partition, origin,
                     zero_diagonal=(block, block + 1))
    logger.debug('surgery on block %d split at %s', block, midpoint)
    signals.surgery_applied.send(graphon, block=block, result=result)
    return result


def loop_free_reduction(graphon):
    """Apply surgery to the self-loop blocks in ascending order until the
    skeleton has no self-loop.  A loop whose strongly connected component
    is a single block is refined at the block midpoint first, so that the
    surgery preserves the skeleton conditions.
    """
    skeleton_of = _import_class('skeleton_of')
    strongly_connected_components = _import_class(
        'strongly_connected_components')

    steps = 0
    while True:
        loops = graphon.self_loop_blocks()
        if not loops:
            break
        block = loops[0]
        components = strongly_connected_components(skeleton_of(graphon))
        component = next(c for c in components if block in c)
        if len(component) == 1:
            graphon = refine_partition(graphon,
                                       graphon.partition.midpoint(block))
        graphon = surgery_remove_self_loop(graphon, block)
        steps += 1
    if steps:
        logger.info('loop-free reduction applied %d surgeries, %d blocks',
                    steps, graphon.block_count)
    return graphon


def block_origin(coarse, fine):
    """For a refinement ``fine`` of ``coarse``, the coarse block holding
    each fine block.
    """
    if not set(coarse) <= set(fine):
        raise ValidationError('%r does not refine %r' % (fine, coarse))
    return tuple(coarse.block_of(fine[i]) for i in range(fine.block_count))


def dominated_by(graphon, other):
    """Pointwise ``graphon <= other`` over the common refinement."""
    grid = sorted(set(graphon.partition) | set(other.partition))
    cells = grid[:-1]
    return all(graphon(s, t) <= other(s, t) for s in cells for t in cells)

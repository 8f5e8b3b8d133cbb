"""Exact rational linear algebra and cone membership.

Every quantity is a :class:`fractions.Fraction`; nothing in this module
touches floating point.
"""
import logging
from fractions import Fraction

from hamgraphon.errors import OperationError, ValidationError

__all__ = ('RationalMatrix', 'ConeCertificate', 'rank', 'dot',
           'cone_membership', 'relative_interior_membership')

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


def _fraction(value):
    if isinstance(value, bool):
        raise ValidationError('%r is not a rational number' % (value,))
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


class RationalMatrix(object):
    """A rectangular matrix of exact rationals.

    :param rows: an iterable of rows, each an iterable of numbers
    :param col_count: needed only when the matrix has no rows, or when the
        rows are empty (an ``m x 0`` matrix)
    """

    __slots__ = ('_rows', '_col_count')

    def __init__(self, rows, col_count=None):
        rows = tuple(tuple(_fraction(v) for v in row) for row in rows)
        if rows:
            widths = set(len(row) for row in rows)
            if len(widths) != 1:
                raise ValidationError('matrix rows have different lengths')
            width = widths.pop()
            if col_count is not None and col_count != width:
                raise ValidationError('rows have %d columns, expected %d'
                                      % (width, col_count))
            col_count = width
        self._rows = rows
        self._col_count = col_count or 0

    @classmethod
    def from_columns(cls, columns, row_count):
        columns = [tuple(column) for column in columns]
        for column in columns:
            if len(column) != row_count:
                raise ValidationError('column has %d entries, expected %d'
                                      % (len(column), row_count))
        rows = [[column[i] for column in columns] for i in range(row_count)]
        return cls(rows, col_count=len(columns))

    @property
    def row_count(self):
        return len(self._rows)

    @property
    def col_count(self):
        return self._col_count

    @property
    def shape(self):
        return (self.row_count, self.col_count)

    @property
    def rows(self):
        return self._rows

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    @property
    def columns(self):
        return tuple(self.column(j) for j in range(self._col_count))

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def transpose(self):
        return RationalMatrix(self.columns, col_count=self.row_count)

    def dot(self, vector):
        """Matrix-vector product ``M v``."""
        vector = [_fraction(v) for v in vector]
        if len(vector) != self._col_count:
            raise ValidationError('vector has %d entries, matrix has %d columns'
                                  % (len(vector), self._col_count))
        return tuple(sum((a * b for a, b in zip(row, vector)), _ZERO)
                     for row in self._rows)

    def to_lists(self):
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._rows, self._col_count))

    def __repr__(self):
        body = ', '.join('[%s]' % ', '.join(str(v) for v in row)
                         for row in self._rows)
        return '%s(%d x %d: %s)' % (self.__class__.__name__, self.row_count,
                                    self.col_count, body)


class ConeCertificate(object):
    """Nonnegative coefficients ``c`` with ``Z c = x``.

    ``strict`` is true when every coefficient is positive, which certifies
    membership in the relative interior of the cone.
    """

    __slots__ = ('coefficients', 'strict')

    def __init__(self, coefficients, strict=None):
        coefficients = tuple(_fraction(c) for c in coefficients)
        if any(c < 0 for c in coefficients):
            raise ValidationError('certificate coefficients must be '
                                  'nonnegative')
        positive = all(c > 0 for c in coefficients)
        if strict is None:
            strict = positive
        if strict and not positive:
            raise ValidationError('strict certificate has a zero coefficient')
        self.coefficients = coefficients
        self.strict = bool(strict)

    def reconstructs(self, matrix, point):
        return matrix.dot(self.coefficients) == tuple(_fraction(v) for v in point)

    def to_json(self):
        return [str(c) for c in self.coefficients]

    def __eq__(self, other):
        if not isinstance(other, ConeCertificate):
            return NotImplemented
        return (self.coefficients, self.strict) == (other.coefficients,
                                                    other.strict)

    def __hash__(self):
        return hash((self.coefficients, self.strict))

    def __repr__(self):
        return 'ConeCertificate(%s, strict=%s)' % (
            ', '.join(str(c) for c in self.coefficients), self.strict)


def dot(u, v):
    if len(u) != len(v):
        raise ValidationError('vectors have different lengths')
    return sum((_fraction(a) * _fraction(b) for a, b in zip(u, v)), _ZERO)


def rank(matrix):
    """Rank over the rationals by Gaussian elimination."""
    rows = [list(row) for row in matrix.rows]
    rank_ = 0
    for col in range(matrix.col_count):
        pivot = None
        for r in range(rank_, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        lead = rows[rank_][col]
        for r in range(rank_ + 1, len(rows)):
            factor = rows[r][col]
            if factor:
                factor = factor / lead
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank_])]
        rank_ += 1
        if rank_ == len(rows):
            break
    return rank_


class _Tableau(object):
    """Full simplex tableau for ``max c.v  s.t.  A v = b, v >= 0`` with
    Bland's rule.  Artificial columns follow the structural ones.
    """

    def __init__(self, rows, rhs):
        self.structural = len(rows[0]) if rows else 0
        self.table = []
        self.basis = []
        m = len(rows)
        for i, (row, b) in enumerate(zip(rows, rhs)):
            row = list(row)
            if b < 0:
                row = [-a for a in row]
                b = -b
            artificial = [_ZERO] * m
            artificial[i] = Fraction(1)
            self.table.append(row + artificial + [b])
            self.basis.append(self.structural + i)
        self.width = self.structural + m
        self.allowed = self.width
        self.objective = [_ZERO] * (self.width + 1)
        self.iterations = 0
        self.max_iterations = max(1, (m + 1) * (self.width + 1) * (m + self.width + 1))

    def set_objective(self, costs):
        """``costs`` has one entry per column; the objective row stores the
        reduced costs ``c_B B^-1 A_j - c_j`` and the current value.
        """
        self.costs = list(costs) + [_ZERO] * (self.width - len(costs))
        obj = [-c for c in self.costs] + [_ZERO]
        for row, var in zip(self.table, self.basis):
            cb = self.costs[var]
            if cb:
                obj = [o + cb * a for o, a in zip(obj, row)]
        self.objective = obj

    def pivot(self, r, col):
        row = self.table[r]
        lead = row[col]
        row = [a / lead for a in row]
        self.table[r] = row
        for i, other in enumerate(self.table):
            if i != r and other[col]:
                factor = other[col]
                self.table[i] = [a - factor * b for a, b in zip(other, row)]
        if self.objective[col]:
            factor = self.objective[col]
            self.objective = [a - factor * b for a, b in zip(self.objective, row)]
        self.basis[r] = col

    def run(self):
        while True:
            entering = None
            for j in range(self.allowed):
                if self.objective[j] < 0:
                    entering = j
                    break
            if entering is None:
                return 'optimal'
            best = None
            for i, row in enumerate(self.table):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return 'unbounded'
            self.iterations += 1
            if self.iterations > self.max_iterations:
                raise OperationError('simplex exceeded %d pivots'
                                     % self.max_iterations)
            self.pivot(best[1], entering)

    def drive_out_artificials(self):
        r = 0
        while r < len(self.table):
            if self.basis[r] >= self.structural:
                row = self.table[r]
                col = next((j for j in range(self.structural) if row[j] != 0),
                           None)
                if col is None:
                    # redundant equality
                    del self.table[r]
                    del self.basis[r]
                    continue
                self.pivot(r, col)
            r += 1
        self.allowed = self.structural

    def solution(self):
        values = [_ZERO] * self.structural
        for row, var in zip(self.table, self.basis):
            if var < self.structural:
                values[var] = row[-1]
        return values


def _solve(rows, rhs, costs=None):
    """Return ``(status, values)`` for ``max costs.v s.t. rows v = rhs,
    v >= 0``; with ``costs`` omitted only feasibility is decided.
    """
    tableau = _Tableau(rows, rhs)
    structural = tableau.structural
    tableau.set_objective([_ZERO] * structural +
                          [Fraction(-1)] * (tableau.width - structural))
    tableau.run()
    if tableau.objective[-1] < 0:
        return 'infeasible', None
    tableau.drive_out_artificials()
    if costs is not None:
        tableau.set_objective(costs)
        status = tableau.run()
        if status == 'unbounded':
            return status, None
    logger.debug('simplex finished after %d pivots', tableau.iterations)
    return 'optimal', tableau.solution()


def _check_dimensions(matrix, point):
    point = tuple(_fraction(v) for v in point)
    if len(point) != matrix.row_count:
        raise ValidationError('point has %d entries, matrix has %d rows'
                              % (len(point), matrix.row_count))
    return point


def cone_membership(matrix, point):
    """Decide whether ``point`` lies in the cone generated by the columns
    of ``matrix``.

    :returns: a :class:`ConeCertificate` with ``matrix c = point``, or
        ``None`` when the point is outside the cone
    """
    point = _check_dimensions(matrix, point)
    if matrix.col_count == 0:
        if any(point):
            return None
        return ConeCertificate(())
    status, values = _solve(matrix.rows, point)
    if status != 'optimal':
        return None
    certificate = ConeCertificate(values)
    if not certificate.reconstructs(matrix, point):
        raise OperationError('cone certificate does not reconstruct the point')
    return certificate


def relative_interior_membership(matrix, point):
    """Decide whether ``point`` lies in the relative interior of the cone
    generated by the columns of ``matrix``.

    Solves ``max t  s.t.  matrix (d + t 1) = point, d >= 0, t >= 0``; the
    point is interior exactly when the optimum is positive, and then
    ``c = d + t`` is a certificate with every coefficient positive.

    :returns: a strict :class:`ConeCertificate` or ``None``
    """
    point = _check_dimensions(matrix, point)
    k = matrix.col_count
    if k == 0:
        if any(point):
            return None
        return ConeCertificate((), strict=True)
    row_sums = [sum(row, _ZERO) for row in matrix.rows]
    rows = [list(row) + [s] for row, s in zip(matrix.rows, row_sums)]
    costs = [_ZERO] * k + [Fraction(1)]
    status, values = _solve(rows, point, costs)
    if status == 'infeasible':
        return None
    if status == 'unbounded':
        raise OperationError('relative interior program is unbounded; '
                             'the matrix has a zero column')
    t = values[-1]
    if t <= 0:
        return None
    certificate = ConeCertificate([d + t for d in values[:-1]], strict=True)
    if not certificate.reconstructs(matrix, point):
        raise OperationError('cone certificate does not reconstruct the point')
    return certificate

"""Built-in step-graphons on the four-block skeleton

    0 -> 1, 1 <-> 2, 2 <-> 3, 3 -> 0, 3 -> 3

whose partitions place the concentration vector in the interior of the
node-flow cone (``case-a``), on its boundary (``case-b``), outside it
(``case-c``), or drop the self-loop so the cone loses dimension
(``case-d``).
"""
from fractions import Fraction

from hamgraphon.errors import PresetNotFound
from hamgraphon.graphon import new_step_graphon

__all__ = ('SKELETON_EDGES', 'PRESETS', 'get_preset', 'preset_names')

SKELETON_EDGES = ((0, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (3, 3))


def _graphon(points, denominator, value, edges=SKELETON_EDGES):
    partition = [Fraction(p, denominator) for p in points]
    values = [[Fraction(0)] * 4 for _ in range(4)]
    for i, j in edges:
        values[i][j] = Fraction(value)
    return new_step_graphon(partition, values)


def case_a():
    return _graphon((0, 1, 4, 9, 16), 16, Fraction(1, 5))


def case_b():
    return _graphon((0, 1, 3, 6, 8), 8, 1)


def case_c():
    return _graphon((0, 5, 10, 16, 20), 20, 1)


def case_d():
    return _graphon((0, 1, 3, 6, 8), 8, 1,
                    edges=[e for e in SKELETON_EDGES if e != (3, 3)])


PRESETS = {
    'case-a': case_a,
    'case-b': case_b,
    'case-c': case_c,
    'case-d': case_d,
}


def preset_names():
    return sorted(PRESETS)


def get_preset(name):
    """Build the preset graphon called ``name``.

    :raises PresetNotFound: no preset has that name
    """
    try:
        builder = PRESETS[name]
    except KeyError:
        raise PresetNotFound(name, preset_names())
    return builder()

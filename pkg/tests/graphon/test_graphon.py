# -*- coding: utf-8 -*-
import sys
sys.path[0:0] = [""]

import pickle
import unittest
from fractions import Fraction

from hamgraphon import *
from hamgraphon import signals

from tests.fixtures import two_block_graphon

__all__ = ("PartitionTest", "StepGraphonTest", "TransformationTest")


class PartitionTest(unittest.TestCase):

    def test_valid_partition(self):
        """Ensure partition points are read exactly and blocks measured.
        """
        partition = Partition(['0', '1/16', '0.25', '9/16', 1])
        self.assertEqual(partition.block_count, 4)
        self.assertEqual(partition.lengths(),
                         (Fraction(1, 16), Fraction(3, 16), Fraction(5, 16),
                          Fraction(7, 16)))
        self.assertEqual(partition.midpoint(3), Fraction(25, 32))

    def test_invalid_partitions(self):
        """Ensure malformed partitions are rejected.
        """
        self.assertRaises(ValidationError, Partition, [0])
        self.assertRaises(ValidationError, Partition, [Fraction(1, 8), 1])
        self.assertRaises(ValidationError, Partition, [0, Fraction(1, 2), Fraction(9, 10)])
        self.assertRaises(ValidationError, Partition, [0, Fraction(1, 2), Fraction(1, 2), 1])
        self.assertRaises(ValidationError, Partition, [0, 'half', 1])

    def test_block_of(self):
        """Ensure blocks are half-open with the last one closed at 1.
        """
        partition = Partition([0, Fraction(1, 3), 1])
        self.assertEqual(partition.block_of(0), 0)
        self.assertEqual(partition.block_of(Fraction(1, 3)), 1)
        self.assertEqual(partition.block_of(Fraction(1, 4)), 0)
        self.assertEqual(partition.block_of(1), 1)
        self.assertRaises(ValidationError, partition.block_of, Fraction(3, 2))

    def test_insert(self):
        partition = Partition([0, Fraction(1, 2), 1])
        self.assertEqual(partition.insert(Fraction(1, 4)),
                         Partition([0, Fraction(1, 4), Fraction(1, 2), 1]))
        self.assertRaises(ValidationError, partition.insert, Fraction(1, 2))
        self.assertRaises(ValidationError, partition.insert, 1)

    def test_concentration_vector(self):
        """Ensure concentration vectors are positive and sum to one.
        """
        self.assertEqual(sum(ConcentrationVector(['1/4', '3/4'])), 1)
        self.assertRaises(ValidationError, ConcentrationVector, ['1/4', '1/4'])
        self.assertRaises(ValidationError, ConcentrationVector, [0, 1])
        self.assertRaises(ValidationError, ConcentrationVector, [])
        graphon = two_block_graphon([[0, 1], [1, 0]], split=Fraction(1, 3))
        self.assertEqual(concentration_vector(graphon),
                         ConcentrationVector(['1/3', '2/3']))


class StepGraphonTest(unittest.TestCase):

    def test_decimal_values_are_exact(self):
        """Ensure decimal strings become exact rationals.
        """
        graphon = new_step_graphon([0, 1], [['0.2']])
        self.assertEqual(graphon.value(0, 0), Fraction(1, 5))
        self.assertEqual(to_rational(0.5), Fraction(1, 2))
        self.assertRaises(ValidationError, to_rational, True)
        self.assertRaises(ValidationError, to_rational, float('nan'))

    def test_shape_and_range(self):
        """Ensure the value matrix matches the partition and lies in [0, 1].
        """
        self.assertRaises(ValidationError, new_step_graphon, [0, 1], [[1, 0]])
        self.assertRaises(ValidationError, new_step_graphon,
                          [0, Fraction(1, 2), 1], [[1, 0]])
        self.assertRaises(ValidationError, new_step_graphon, [0, 1], [['3/2']])
        self.assertRaises(ValidationError, new_step_graphon, [0, 1], [[-1]])

    def test_evaluate(self):
        graphon = two_block_graphon([[1, 0], ['1/3', '1/2']])
        self.assertEqual(graphon(Fraction(1, 4), Fraction(3, 4)), 0)
        self.assertEqual(graphon.evaluate(Fraction(3, 4), 0), Fraction(1, 3))
        self.assertEqual(graphon(1, 1), Fraction(1, 2))

    def test_immutable(self):
        graphon = get_preset('case-a')
        self.assertRaises(AttributeError, setattr, graphon, 'values', ())

    def test_pickle(self):
        """Ensure graphons survive pickling for worker processes.
        """
        graphon = get_preset('case-c')
        self.assertEqual(pickle.loads(pickle.dumps(graphon)), graphon)

    def test_predicates(self):
        graphon = get_preset('case-a')
        self.assertEqual(graphon.self_loop_blocks(), (3,))
        self.assertFalse(graphon.is_loop_free())
        self.assertFalse(graphon.has_symmetric_support())
        self.assertTrue(get_preset('case-d').is_loop_free())
        self.assertTrue(two_block_graphon([[0, '1/3'], ['1/2', 0]])
                        .has_symmetric_support())
        self.assertFalse(two_block_graphon([[0, '1/3'], ['1/2', 0]])
                         .is_symmetric())

    def test_support(self):
        self.assertEqual(get_preset('case-d').support(),
                         frozenset([(0, 1), (1, 2), (2, 1), (2, 3), (3, 2),
                                    (3, 0)]))
        self.assertTrue(new_step_graphon([0, 1], [[0]]).is_zero)


class TransformationTest(unittest.TestCase):

    def test_refine_partition(self):
        """Ensure refinement leaves the graphon unchanged as a function.
        """
        graphon = get_preset('case-c')
        refined = refine_partition(graphon, Fraction(3, 5))
        self.assertEqual(refined.block_count, 5)
        points = [Fraction(k, 40) for k in range(41)]
        for s in points:
            for t in points:
                self.assertEqual(graphon(s, t), refined(s, t))
        self.assertTrue(dominated_by(refined, graphon))
        self.assertTrue(dominated_by(graphon, refined))

    def test_symmetrize(self):
        """Ensure symmetrization multiplies paired values and keeps the
        larger of unpaired ones.
        """
        graphon = two_block_graphon([['1/2', '3/4'], ['2/3', 0]])
        symmetric = symmetrize(graphon)
        self.assertEqual(symmetric.values,
                         ((Fraction(1, 4), Fraction(1, 2)),
                          (Fraction(1, 2), Fraction(0))))
        one_way = symmetrize(two_block_graphon([[0, '3/4'], [0, 0]]))
        self.assertEqual(one_way.value(1, 0), Fraction(3, 4))
        self.assertTrue(one_way.is_symmetric())

    def test_saturate(self):
        saturated = saturate(get_preset('case-a'))
        self.assertEqual(set(v for row in saturated.values for v in row),
                         set([0, 1]))
        self.assertEqual(saturated.support(), get_preset('case-a').support())

    def test_surgery(self):
        """Ensure surgery splits the loop block at its midpoint and removes
        the loop.
        """
        graphon = get_preset('case-a')
        result = surgery_remove_self_loop(graphon, 3)
        self.assertEqual(result.partition,
                         Partition([0, Fraction(1, 16), Fraction(1, 4),
                                    Fraction(9, 16), Fraction(25, 32), 1]))
        self.assertTrue(result.is_loop_free())
        self.assertEqual(result.value(3, 4), Fraction(1, 5))
        self.assertEqual(result.value(4, 0), Fraction(1, 5))
        self.assertTrue(dominated_by(result, graphon))
        self.assertFalse(dominated_by(graphon, result))

    def test_surgery_errors(self):
        graphon = get_preset('case-a')
        self.assertRaises(NoSelfLoopError, surgery_remove_self_loop, graphon, 0)
        self.assertRaises(ValidationError, surgery_remove_self_loop, graphon, 4)

    def test_surgery_signal(self):
        """Ensure surgery_applied reports the block.
        """
        seen = []

        def receiver(sender, block, result):
            seen.append((block, result.block_count))

        with signals.surgery_applied.connected_to(receiver):
            surgery_remove_self_loop(get_preset('case-a'), 3)
        self.assertEqual(seen, [(3, 5)])

    def test_loop_free_reduction_singleton_component(self):
        """Ensure a loop alone in its component is refined before surgery.
        """
        result = loop_free_reduction(new_step_graphon([0, 1], [[1]]))
        self.assertEqual(result.block_count, 4)
        self.assertTrue(result.is_loop_free())
        self.assertEqual(result.partition,
                         Partition([0, Fraction(1, 4), Fraction(1, 2),
                                    Fraction(3, 4), 1]))
        self.assertEqual(len(result.support()), 12)

    def test_loop_free_reduction_case_a(self):
        result = loop_free_reduction(get_preset('case-a'))
        self.assertEqual(result, surgery_remove_self_loop(get_preset('case-a'), 3))
        self.assertEqual(loop_free_reduction(get_preset('case-d')),
                         get_preset('case-d'))

    def test_block_origin(self):
        coarse = get_preset('case-a').partition
        fine = loop_free_reduction(get_preset('case-a')).partition
        self.assertEqual(block_origin(coarse, fine), (0, 1, 2, 3, 3))
        self.assertRaises(ValidationError, block_origin, fine,
                          Partition([0, Fraction(1, 3), 1]))


if __name__ == '__main__':
    unittest.main()

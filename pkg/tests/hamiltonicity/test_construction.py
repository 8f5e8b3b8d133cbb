# -*- coding: utf-8 -*-
import sys
sys.path[0:0] = [""]

import collections
import random
import unittest

from hamgraphon import *
from hamgraphon import signals

from tests.fixtures import (random_cone_vector, random_strong_skeleton,
                            random_x0_vector, split_skeleton)

__all__ = ("CompletePartiteTest", "EarDecompositionTest",
           "ConstructionTest", "RandomConstructionTest")


class CompletePartiteTest(unittest.TestCase):

    def test_edge_count(self):
        """Ensure K_y over the case-a skeleton with y = (1, 2, 3, 4) has 54
        edges.
        """
        graph = build_complete_partite(skeleton_of(get_preset('case-a')),
                                       [1, 2, 3, 4])
        self.assertEqual(graph.n, 10)
        self.assertEqual(graph.edge_count, 54)
        self.assertEqual(list(graph.block_of), [0, 1, 1, 2, 2, 2, 3, 3, 3, 3])

    def test_zero_block(self):
        graph = build_complete_partite(skeleton_of(get_preset('case-d')),
                                       [0, 1, 1, 0])
        self.assertEqual(graph.edge_set(), frozenset([(0, 1), (1, 0)]))


class EarDecompositionTest(unittest.TestCase):

    def test_split_skeleton(self):
        """Ensure the 5-node, 11-edge skeleton has |E| - |V| = 6 ears that
        rebuild it.
        """
        skeleton = split_skeleton()
        ears = ear_decomposition(skeleton)
        self.assertEqual(len(ears.ears), 6)
        self.assertEqual(ears.edges(), skeleton.edges)
        self.assertEqual(ears.nodes(), frozenset(range(5)))
        self.assertEqual(ears.base_cycle[0], 0)

    def test_ears_add_new_nodes_only_inside(self):
        skeleton = split_skeleton()
        ears = ear_decomposition(skeleton)
        built = set(ears.base_cycle)
        for ear in ears.ears:
            self.assertTrue(ear[0] in built)
            self.assertTrue(ear[-1] in built)
            for v in ear[1:-1]:
                self.assertFalse(v in built)
            built.update(ear)

    def test_case_d(self):
        ears = ear_decomposition(skeleton_of(get_preset('case-d')))
        self.assertEqual(ears.base_cycle, (0, 1, 2, 3))
        self.assertEqual(ears.ears, ((2, 1), (3, 2)))

    def test_ears_through_new_nodes(self):
        """Ensure ears follow shortest paths through unused nodes back into
        the built part.
        """
        skeleton = SkeletonGraph(5, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0),
                                     (0, 4), (4, 1)])
        ears = ear_decomposition(skeleton)
        self.assertEqual(ears.base_cycle, (0, 1))
        self.assertEqual(ears.ears, ((0, 4, 1), (1, 2, 3, 0)))

    def test_random_strong_skeletons(self):
        rng = random.Random(31)
        for _ in range(100):
            skeleton = random_strong_skeleton(rng, max_nodes=7)
            ears = ear_decomposition(skeleton)
            self.assertEqual(len(ears.ears),
                             len(skeleton.edges) - skeleton.node_count)
            self.assertEqual(ears.edges(), skeleton.edges)
            built = set(ears.base_cycle)
            for ear in ears.ears:
                self.assertTrue(ear[0] in built and ear[-1] in built)
                self.assertFalse(any(v in built for v in ear[1:-1]))
                built.update(ear)

    def test_errors(self):
        self.assertRaises(NotStronglyConnectedError, ear_decomposition,
                          SkeletonGraph(1, []))
        self.assertRaises(NotStronglyConnectedError, ear_decomposition,
                          SkeletonGraph(3, [(0, 1), (1, 0), (1, 2)]))
        self.assertRaises(NotLoopFreeError, ear_decomposition,
                          skeleton_of(get_preset('case-a')))


class ConstructionTest(unittest.TestCase):

    def setUp(self):
        self.skeleton = skeleton_of(get_preset('case-d'))

    def test_decomposition(self):
        y = [1, 2, 3, 2]
        witness = build_ham_decomposition_ky(self.skeleton, y)
        graph = build_complete_partite(self.skeleton, y)
        self.assertTrue(verify_witness(graph, witness))
        self.assertEqual(witness.kind, DECOMPOSITION)

    def test_decomposition_errors(self):
        self.assertRaises(InfeasibleError, build_ham_decomposition_ky,
                          self.skeleton, [1, 0, 0, 0])
        self.assertRaises(NotLoopFreeError, build_ham_decomposition_ky,
                          skeleton_of(get_preset('case-a')), [1, 2, 3, 4])

    def test_cycle(self):
        """Ensure y = (1, 2, 3, 2) gives an 8-node Hamiltonian cycle spliced
        along the ears.
        """
        y = [1, 2, 3, 2]
        witness = build_ham_cycle_ky(self.skeleton, y)
        graph = build_complete_partite(self.skeleton, y)
        self.assertTrue(verify_witness(graph, witness))
        self.assertEqual(witness.cycles, [[6, 0, 1, 4, 2, 3, 7, 5]])
        self.assertEqual(witness.certificate, [1, 1, 1])

    def test_cycle_errors(self):
        self.assertRaises(NotInX0Error, build_ham_cycle_ky, self.skeleton,
                          [1, 1, 1, 1])
        disconnected = SkeletonGraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        self.assertRaises(NotStronglyConnectedError, build_ham_cycle_ky,
                          disconnected, [1, 1, 1, 1])
        self.assertRaises(NotLoopFreeError, build_ham_cycle_ky,
                          skeleton_of(get_preset('case-a')), [1, 2, 3, 4])

    def test_two_cycle(self):
        skeleton = SkeletonGraph(2, [(0, 1), (1, 0)])
        witness = build_ham_cycle_ky(skeleton, [2, 2])
        self.assertEqual(witness.cycles, [[0, 2, 1, 3]])

    def test_witness_signal(self):
        seen = []

        def receiver(sender, witness, y):
            seen.append((witness.kind, list(y)))

        with signals.witness_built.connected_to(receiver):
            build_ham_cycle_ky(self.skeleton, [1, 2, 3, 2])
            build_ham_decomposition_ky(self.skeleton, [1, 2, 3, 2])
        self.assertEqual(seen, [(CYCLE, [1, 2, 3, 2]),
                                (DECOMPOSITION, [1, 2, 3, 2])])


class RandomConstructionTest(unittest.TestCase):

    def test_random_cycles(self):
        """Ensure every y with all cycles used yields a verified Hamiltonian
        cycle.
        """
        rng = random.Random(17)
        tested = 0
        for _ in range(200):
            skeleton = random_strong_skeleton(rng, max_nodes=6)
            cycles = enumerate_cycles(skeleton)
            if len(cycles) > 50:
                continue
            y = random_x0_vector(rng, skeleton, cycles)
            if sum(y) > 60:
                continue
            tested += 1
            self.assertTrue(in_x0(skeleton, y, cycles))
            witness = build_ham_cycle_ky(skeleton, y, cycles)
            graph = build_complete_partite(skeleton, y)
            self.assertTrue(verify_witness(graph, witness))
        self.assertTrue(tested > 20)

    def test_random_decompositions(self):
        """Ensure decompositions verify and map onto the peeled cycle
        multiset.
        """
        rng = random.Random(23)
        for _ in range(200):
            skeleton = random_strong_skeleton(rng, max_nodes=6)
            cycles = enumerate_cycles(skeleton)
            y = random_cone_vector(rng, skeleton, cycles)
            witness = build_ham_decomposition_ky(skeleton, y, cycles)
            graph = build_complete_partite(skeleton, y)
            self.assertTrue(verify_witness(graph, witness))
            expected = collections.Counter(
                dict((cycle, count) for cycle, count
                     in zip(cycles, witness.certificate) if count))
            self.assertEqual(cycle_images(witness, graph.block_of), expected)

    def test_matching_finds_constructed_graphs(self):
        rng = random.Random(29)
        for _ in range(30):
            skeleton = random_strong_skeleton(rng, max_nodes=4)
            cycles = enumerate_cycles(skeleton)
            y = random_cone_vector(rng, skeleton, cycles)
            graph = build_complete_partite(skeleton, y)
            self.assertNotEqual(has_ham_decomposition(graph), None)


if __name__ == '__main__':
    unittest.main()

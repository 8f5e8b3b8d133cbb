import sys
sys.path[0:0] = [""]

import random
import unittest
from timeit import repeat

from hamgraphon import *

from tests.fixtures import SLOW_TESTS, random_digraph, split_skeleton


def timeit(f, n=10000):
    return min(repeat(f, repeat=3, number=n))/float(n)


@unittest.skipUnless(SLOW_TESTS, 'set HAMGRAPHON_SLOW_TESTS=1')
class BenchmarkTestCase(unittest.TestCase):

    def test_documents(self):
        graphon = get_preset('case-c')
        print('Graphon to document: %.3fus' % (timeit(
            lambda: GraphonDocument.from_graphon(graphon), 1000) * 10**6))

        data = GraphonDocument.from_graphon(graphon).to_json_dict()
        print('Document to JSON: %.3fus' % (timeit(
            lambda: GraphonDocument.from_graphon(graphon).to_json(), 1000) * 10**6))

        print('Load graphon from JSON: %.3fus' % (timeit(
            lambda: GraphonDocument.from_json(data).to_graphon(), 1000) * 10**6))

        print('Analyze: %.3fus' % (timeit(
            lambda: check_conditions(graphon), 100) * 10**6))

    def test_trials(self):
        graphon = get_preset('case-b')
        for n in (100, 1000):
            graph = sample_directed(graphon, n, RngSpec(1, 0))
            print('Sample n=%d: %.3fus' % (n, timeit(
                lambda: sample_directed(graphon, n, RngSpec(1, 0)), 10) * 10**6))
            print('Match n=%d: %.3fus' % (n, timeit(
                lambda: has_ham_decomposition(graph), 10) * 10**6))

    def test_construction(self):
        rng = random.Random(3)
        skeleton = split_skeleton()
        cycles = enumerate_cycles(skeleton)
        y = [sum(cycle.count(v) for cycle in cycles) * 20 for v in range(5)]
        print('Decomposition on %d nodes: %.3fus' % (sum(y), timeit(
            lambda: build_ham_decomposition_ky(skeleton, y, cycles), 10) * 10**6))
        print('Cycle on %d nodes: %.3fus' % (sum(y), timeit(
            lambda: build_ham_cycle_ky(skeleton, y, cycles), 10) * 10**6))
        graph = random_digraph(rng, 12, 0.4)
        print('Cycle search n=12: %.3fus' % (timeit(
            lambda: find_ham_cycle(graph), 10) * 10**6))


if __name__ == '__main__':
    unittest.main()

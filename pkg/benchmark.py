#!/usr/bin/env python

import timeit


def cprofile_main():
    from hamgraphon import RngSpec, get_preset, has_ham_decomposition, sample_directed

    graphon = get_preset('case-a')
    for trial in range(20):
        graph = sample_directed(graphon, 1000, RngSpec(2024, trial))
        has_ham_decomposition(graph)


def main():
    """
    Times the pieces of one Monte Carlo trial, then a small estimate.
    Run with ``python benchmark.py``.
    """

    setup = """
from hamgraphon import *
graphon = get_preset('case-a')
"""

    for n in (100, 1000, 5000):
        stmt = """
for trial in range(10):
    sample_directed(graphon, %d, RngSpec(2024, trial))
""" % n

        print("-" * 100)
        print("""Sampling 10 directed graphs - n=%d""" % n)
        t = timeit.Timer(stmt=stmt, setup=setup)
        print(t.timeit(1))

    for n in (100, 1000, 5000):
        setup_graphs = setup + """
graphs = [sample_directed(graphon, %d, RngSpec(2024, trial))
          for trial in range(10)]
""" % n
        stmt = """
for graph in graphs:
    has_ham_decomposition(graph)
"""

        print("-" * 100)
        print("""Matching 10 directed graphs - n=%d""" % n)
        t = timeit.Timer(stmt=stmt, setup=setup_graphs)
        print(t.timeit(1))

    stmt = """
for trial in range(10):
    find_ham_cycle(sample_directed(graphon, 40, RngSpec(2024, trial)))
"""

    print("-" * 100)
    print("""Searching 10 Hamiltonian cycles - n=40""")
    t = timeit.Timer(stmt=stmt, setup=setup)
    print(t.timeit(1))

    stmt = """
check_conditions(graphon)
check_conditions(loop_free_reduction(graphon))
"""

    print("-" * 100)
    print("""Analyzing case-a and its loop-free reduction""")
    t = timeit.Timer(stmt=stmt, setup=setup)
    print(t.timeit(10))

    for workers in (1, 4):
        stmt = """
estimate(EstimateConfig(graphon=graphon, n_values=[10, 100, 500],
                        trials=200, workers=%d))
""" % workers

        print("-" * 100)
        print("""Estimating 3 x 200 trials - workers=%d""" % workers)
        t = timeit.Timer(stmt=stmt, setup=setup)
        print(t.timeit(1))


if __name__ == "__main__":
    main()

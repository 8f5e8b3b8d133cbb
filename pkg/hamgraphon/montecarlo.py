"""Monte Carlo estimation of the probability that a sampled digraph has a
Hamiltonian decomposition (or a Hamiltonian cycle).

Trial ``t`` of the ``k``-th value of ``n`` draws from the stream
``RngSpec(master_seed, k * trials + t)``, so the counts do not depend on
how the trials are spread over worker processes.
"""
import csv
import logging
import math
import multiprocessing

from hamgraphon import signals
from hamgraphon.document import Document
from hamgraphon.errors import ValidationError
from hamgraphon.fields import (BooleanField, FloatField, GraphonField,
                               IntField, ListField, StringField)
from hamgraphon.hamiltonicity import (CYCLE, DECOMPOSITION, FOUND, UNKNOWN,
                                      find_ham_cycle, has_ham_decomposition)
from hamgraphon.sampling import (RngSpec, sample_directed, sample_symmetrized,
                                 sample_trimmed)
from hamgraphon.settings import configure, get_setting, get_settings

__all__ = ('DIRECTED', 'TRIMMED', 'SYMMETRIZED', 'PROCEDURES', 'MODES',
           'CSV_HEADER', 'EstimateConfig', 'EstimateRow', 'estimate',
           'run_trial', 'write_csv')

logger = logging.getLogger(__name__)

DIRECTED = 'directed'
TRIMMED = 'trimmed'
SYMMETRIZED = 'symmetrized'

PROCEDURES = (DIRECTED, TRIMMED, SYMMETRIZED)
MODES = (DECOMPOSITION, CYCLE)

SAMPLERS = {
    DIRECTED: sample_directed,
    TRIMMED: sample_trimmed,
    SYMMETRIZED: sample_symmetrized,
}

CSV_HEADER = ('n', 'successes', 'trials', 'p_hat', 'stderr', 'unknown')


class EstimateConfig(Document):
    """What to estimate: the graphon, the sizes ``n``, and how many trials
    per size.  Unset values come from the settings.
    """

    graphon = GraphonField(required=True)
    n_values = ListField(IntField(min_value=0), min_length=1, required=True)
    trials = IntField(min_value=1, default=lambda: get_setting('trials'))
    master_seed = IntField(min_value=0, max_value=(1 << 64) - 1,
                           default=lambda: get_setting('master_seed'))
    workers = IntField(min_value=1, default=lambda: get_setting('workers'))
    mode = StringField(choices=MODES, default=DECOMPOSITION)
    procedure = StringField(choices=PROCEDURES, default=DIRECTED)
    budget = IntField(min_value=1, default=lambda: get_setting('search_budget'))
    allow_large = BooleanField(default=False)

    def clean(self):
        if self.mode != CYCLE or self.allow_large:
            return
        limit = get_setting('max_cycle_mode_n')
        too_large = [n for n in self.n_values or () if n > limit]
        if too_large:
            raise ValidationError('cycle mode is limited to n <= %d without '
                                  'allow_large (got %s)' % (limit, too_large))


class EstimateRow(Document):
    """Outcome of the trials at one ``n``."""

    n = IntField(min_value=0, required=True)
    successes = IntField(min_value=0, required=True)
    trials = IntField(min_value=1, required=True)
    p_hat = FloatField(min_value=0, max_value=1)
    stderr = FloatField(min_value=0)
    unknown = IntField(min_value=0, default=0)

    @classmethod
    def from_counts(cls, n, successes, trials, unknown=0):
        p_hat = successes / trials
        return cls(n=n, successes=successes, trials=trials, p_hat=p_hat,
                   stderr=math.sqrt(p_hat * (1 - p_hat) / trials),
                   unknown=unknown)

    def clean(self):
        if self.successes + self.unknown > self.trials:
            raise ValidationError('more outcomes than trials')

    def __str__(self):
        return 'n=%d p_hat=%.6f' % (self.n, self.p_hat)


def run_trial(task):
    """Sample one graph and test it.  ``task`` is the tuple
    ``(graphon, n, master_seed, trial_index, mode, procedure, budget,
    settings)``; returns ``(trial_index, success, unknown)``.
    """
    (graphon, n, master_seed, trial_index, mode, procedure, budget,
     settings) = task
    configure(**settings)
    graph = SAMPLERS[procedure](graphon, n, RngSpec(master_seed, trial_index))
    if mode == DECOMPOSITION:
        return trial_index, has_ham_decomposition(graph) is not None, False
    status = find_ham_cycle(graph, budget=budget).status
    return trial_index, status == FOUND, status == UNKNOWN


def _estimate_row(config, position, n, mapper):
    settings = get_settings()
    first = position * config.trials
    tasks = [(config.graphon, n, config.master_seed, first + t, config.mode,
              config.procedure, config.budget, settings)
             for t in range(config.trials)]
    successes = unknown = 0
    for trial_index, success, undecided in mapper(run_trial, tasks):
        successes += success
        unknown += undecided
        signals.trial_finished.send(config, n=n, trial_index=trial_index,
                                    success=success, unknown=undecided)
    row = EstimateRow.from_counts(n, successes, config.trials, unknown)
    logger.info('n=%d: %d/%d successes (%d unknown)', n, successes,
                config.trials, unknown)
    signals.row_estimated.send(config, row=row)
    return row


def estimate(config):
    """Run the trials described by ``config``.

    :returns: one :class:`EstimateRow` per value of ``n``, in order
    :raises ValidationError: ``config`` is invalid
    """
    config.validate()
    signals.pre_estimate.send(config)
    if config.workers > 1:
        with multiprocessing.Pool(processes=config.workers) as pool:
            rows = [_estimate_row(config, position, n, pool.map)
                    for position, n in enumerate(config.n_values)]
    else:
        rows = [_estimate_row(config, position, n, map)
                for position, n in enumerate(config.n_values)]
    signals.post_estimate.send(config, rows=rows)
    return rows


def write_csv(rows, fp):
    """Write rows under the header ``n,successes,trials,p_hat,stderr,unknown``
    with six decimals for the estimates.
    """
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([row.n, row.successes, row.trials,
                         '%.6f' % row.p_hat, '%.6f' % row.stderr, row.unknown])

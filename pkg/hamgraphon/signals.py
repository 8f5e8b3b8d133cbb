# -*- coding: utf-8 -*-

__all__ = ['pre_analyze', 'post_analyze', 'surgery_applied', 'pre_estimate',
           'trial_finished', 'row_estimated', 'post_estimate',
           'witness_built']

signals_available = False
try:
    from blinker import Namespace
    signals_available = True
except ImportError:
    class Namespace(object):
        def signal(self, name, doc=None):
            return _FakeSignal(name, doc)

    class _FakeSignal(object):
        """If blinker is unavailable, create a fake class with the same
        interface that allows sending of signals but will fail with an
        error on anything else.  Instead of doing anything on send, it
        will just ignore the arguments and do nothing instead.
        """

        def __init__(self, name, doc=None):
            self.name = name
            self.__doc__ = doc

        def _fail(self, *args, **kwargs):
            raise RuntimeError('signalling support is unavailable '
                               'because the blinker library is '
                               'not installed.')
        send = lambda *a, **kw: None
        connect = disconnect = has_receivers_for = receivers_for = \
            temporarily_connected_to = _fail
        del _fail

# the namespace for hamgraphon signals.  Applications that want their own
# signals should create their own namespace instead.
_signals = Namespace()

pre_analyze = _signals.signal(
    'pre_analyze', 'Sent by check_conditions with the graphon as sender.')
post_analyze = _signals.signal(
    'post_analyze', 'Sent by check_conditions; kwargs: report.')
surgery_applied = _signals.signal(
    'surgery_applied', 'Sent after a self-loop surgery with the original '
    'graphon as sender; kwargs: block, result.')
pre_estimate = _signals.signal(
    'pre_estimate', 'Sent before the first trial with the EstimateConfig '
    'as sender.')
trial_finished = _signals.signal(
    'trial_finished', 'Sent in the parent process for every trial result; '
    'kwargs: n, trial_index, success, unknown.')
row_estimated = _signals.signal(
    'row_estimated', 'Sent when all trials for one n are in; kwargs: row.')
post_estimate = _signals.signal(
    'post_estimate', 'Sent after the last row; kwargs: rows.')
witness_built = _signals.signal(
    'witness_built', 'Sent by the constructions with the skeleton as '
    'sender; kwargs: witness, y.')

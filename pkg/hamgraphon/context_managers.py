from hamgraphon import signals
from hamgraphon.settings import configure, get_settings


__all__ = ("override_settings", "trial_counter")


class override_settings(object):
    """ override_settings context manager.

    Example ::

        with override_settings(cycle_cap=50):
            check_conditions(graphon)  # gives up after 50 cycles

    """

    def __init__(self, **kwargs):
        """ Construct the override_settings context manager

        :param kwargs: the settings to change inside the block
        """
        self.overrides = kwargs
        self.saved = None

    def __enter__(self):
        """ remember the current settings and apply the overrides """
        self.saved = get_settings()
        configure(**self.overrides)
        return self

    def __exit__(self, t, value, traceback):
        """ Restore the settings seen on entry """
        configure(**self.saved)


class trial_counter(object):
    """ trial_counter context manager to get the number of Monte Carlo
    trials finished inside the block.

    Example ::

        with trial_counter() as trials:
            estimate(config)
        assert trials == len(config.n_values) * config.trials
        trials.successes  # how many trials found a witness

    """

    def __init__(self):
        """ Construct the trial_counter. """
        self.count = 0
        self.successes = 0
        self.unknown = 0

    def _receive(self, sender, **kwargs):
        self.count += 1
        if kwargs.get('success'):
            self.successes += 1
        if kwargs.get('unknown'):
            self.unknown += 1

    def __enter__(self):
        """ Start listening to finished trials. """
        signals.trial_finished.connect(self._receive)
        return self

    def __exit__(self, t, value, traceback):
        """ Stop listening. """
        signals.trial_finished.disconnect(self._receive)

    def __eq__(self, value):
        """ == Compare trial_counter. """
        return value == self.count

    def __ne__(self, value):
        """ != Compare trial_counter. """
        return not self.__eq__(value)

    def __lt__(self, value):
        """ < Compare trial_counter. """
        return self.count < value

    def __le__(self, value):
        """ <= Compare trial_counter. """
        return self.count <= value

    def __gt__(self, value):
        """ > Compare trial_counter. """
        return self.count > value

    def __ge__(self, value):
        """ >= Compare trial_counter. """
        return self.count >= value

    def __int__(self):
        """ int representation. """
        return self.count

    __hash__ = None

    def __repr__(self):
        """ repr trial_counter as the number of trials. """
        return "%s" % self.count

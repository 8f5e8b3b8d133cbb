import os

from hamgraphon.errors import ConfigurationError

__all__ = [
    'DEFAULT_SETTINGS',
    'configure',
    'configure_from_env',
    'get_setting',
    'get_settings',
    'reset_settings',
]


ENV_PREFIX = 'HAMGRAPHON_'

DEFAULT_SETTINGS = {
    'cycle_cap': 100000,
    'search_budget': 10 ** 7,
    'trials': 2000,
    'master_seed': 2024,
    'workers': 1,
    'max_cycle_mode_n': 60,
    'sample_chunk': 1 << 22,
}

_settings = dict(DEFAULT_SETTINGS)


def _coerce(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError('setting "%s" must be an integer, got %r'
                                 % (name, value))
    if name == 'master_seed':
        if not 0 <= value < 1 << 64:
            raise ConfigurationError('master_seed must fit in 64 bits')
    elif value < 1:
        raise ConfigurationError('setting "%s" must be positive' % name)
    return value


def configure(**kwargs):
    """Update the global settings.

    :param cycle_cap: the largest number of skeleton cycles enumerated
        before :class:`~hamgraphon.errors.CycleCapExceeded` is raised
    :param search_budget: node expansions allowed to the Hamiltonian cycle
        search before it answers ``Unknown``
    :param trials: default number of Monte Carlo trials per ``n``
    :param master_seed: default master seed of the trial streams
    :param workers: default number of worker processes
    :param max_cycle_mode_n: the largest ``n`` estimated in cycle mode
        without ``allow_large``
    :param sample_chunk: uniform draws generated per batch while sampling
    """
    global _settings

    unknown = set(kwargs) - set(DEFAULT_SETTINGS)
    if unknown:
        raise ConfigurationError('unknown settings: %s'
                                 % ', '.join(sorted(unknown)))
    for name, value in kwargs.items():
        _settings[name] = _coerce(name, value)


def configure_from_env(environ=None):
    """Read ``HAMGRAPHON_<NAME>`` variables, e.g. ``HAMGRAPHON_CYCLE_CAP``.
    """
    environ = os.environ if environ is None else environ
    overrides = {}
    for name in DEFAULT_SETTINGS:
        key = ENV_PREFIX + name.upper()
        if key in environ:
            overrides[name] = environ[key]
    configure(**overrides)
    return overrides


def get_setting(name):
    if name not in _settings:
        raise ConfigurationError('Setting "%s" has not been defined' % name)
    return _settings[name]


def get_settings():
    return dict(_settings)


def reset_settings():
    global _settings
    _settings = dict(DEFAULT_SETTINGS)

import logging

from . import errors
from .errors import *
from . import signals
from .signals import *
from . import settings
from .settings import *
from . import graphon
from .graphon import *
from . import fields
from .fields import *
from . import document
from .document import *
from . import geometry
from .geometry import *
from . import skeleton
from .skeleton import *
from . import sampling
from .sampling import *
from . import hamiltonicity
from .hamiltonicity import *
from . import montecarlo
from .montecarlo import *
from . import presets
from .presets import *
from . import context_managers
from .context_managers import *

__all__ = (list(errors.__all__) + list(signals.__all__) +
           list(settings.__all__) + list(graphon.__all__) +
           list(fields.__all__) + list(document.__all__) +
           list(geometry.__all__) + list(skeleton.__all__) +
           list(sampling.__all__) + list(hamiltonicity.__all__) +
           list(montecarlo.__all__) + list(presets.__all__) +
           list(context_managers.__all__))

VERSION = (0, 1, 0)


def get_version():
    if isinstance(VERSION[-1], str):
        return '.'.join(map(str, VERSION[:-1])) + VERSION[-1]
    return '.'.join(map(str, VERSION))

__version__ = get_version()

logging.getLogger(__name__).addHandler(logging.NullHandler())

import os
import sys
from setuptools import setup, find_packages

# Hack to silence atexit traceback in newer python versions
try:
    import multiprocessing
except ImportError:
    pass

DESCRIPTION = 'Hamiltonicity of random digraphs sampled from step-graphons: ' + \
'exact skeleton conditions, constructions and Monte Carlo estimates.'
LONG_DESCRIPTION = None
try:
    LONG_DESCRIPTION = open('README.md').read()
except OSError:
    pass


def get_version(version_tuple):
    if not isinstance(version_tuple[-1], int):
        return '.'.join(map(str, version_tuple[:-1])) + version_tuple[-1]
    return '.'.join(map(str, version_tuple))

# Read the version from hamgraphon/__init__.py without importing the
# package, whose dependencies are not installed until this file is read
init = os.path.join(os.path.dirname(__file__), 'hamgraphon', '__init__.py')
version_line = list([l for l in open(init) if l.startswith('VERSION')])[0]

VERSION = get_version(eval(version_line.split('=')[-1]))

CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: Implementation :: CPython",
    'Topic :: Scientific/Engineering :: Mathematics',
]

extra_opts = {"packages": find_packages(exclude=["tests", "tests.*"])}

assert sys.version_info[0] == 3

setup(name='hamgraphon',
      version=VERSION,
      license='MIT',
      include_package_data=True,
      description=DESCRIPTION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type='text/markdown',
      platforms=['any'],
      classifiers=CLASSIFIERS,
      python_requires='>=3.7',
      install_requires=['numpy>=1.17', 'scipy>=1.4', 'networkx>=2.5'],
      extras_require={'signals': ['blinker']},
      entry_points={'console_scripts': ['hamgraphon = hamgraphon.cli:main']},
      **extra_opts
)

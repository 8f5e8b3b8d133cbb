import sys

from hamgraphon.cli import main

sys.exit(main())

from hamgraphon.base.document import *
from hamgraphon.base.fields import *
from hamgraphon.base.metaclasses import *

import json

from hamgraphon.base import BaseDocument, DocumentMetaclass
from hamgraphon.errors import ParseError, ValidationError
from hamgraphon.fields import ListField, RationalField, StringField
from hamgraphon.graphon import StepGraphon

__all__ = ('Document', 'GraphonDocument', 'read_graphon', 'write_graphon')


class Document(BaseDocument, metaclass=DocumentMetaclass):
    """The base class used for defining the structure and properties of
    the JSON documents read and written by hamgraphon.  Inherit from this
    class, and add fields as class attributes to define a document's
    structure.

    By default, keys that are not declared as fields are rejected when a
    document is read back with :meth:`from_json`.  Set ``strict`` to
    ``False`` in :attr:`meta` to ignore them instead::

        class Row(Document):
            n = IntField(min_value=0)
            meta = {'strict': False}
    """

    meta = {'strict': True, 'emit_nulls': True}


class GraphonDocument(Document):
    """The graphon file format: a partition and an ``m x m`` matrix of
    edge probabilities, written as rational strings.
    """

    name = StringField()
    partition = ListField(RationalField(min_value=0, max_value=1),
                          min_length=2, required=True)
    values = ListField(ListField(RationalField(min_value=0, max_value=1)),
                       required=True)

    meta = {'emit_nulls': False}

    @classmethod
    def from_graphon(cls, graphon, name=None):
        return cls(name=name, partition=list(graphon.partition),
                   values=[list(row) for row in graphon.values])

    def to_graphon(self):
        self.validate()
        return StepGraphon(self.partition, self.values)


def read_graphon(path_or_fp):
    """Load a :class:`~hamgraphon.graphon.StepGraphon` from a graphon file.

    :raises ParseError: the file is not valid JSON
    :raises ValidationError: the document does not describe a step-graphon
    """
    try:
        if hasattr(path_or_fp, 'read'):
            data = json.load(path_or_fp)
        else:
            with open(path_or_fp) as fp:
                data = json.load(fp)
    except ValueError as error:
        raise ParseError('graphon file is not valid JSON: %s' % error)
    except OSError as error:
        raise ParseError('cannot read graphon file: %s' % error)
    return GraphonDocument.from_json(data).to_graphon()


def write_graphon(graphon, path_or_fp, name=None):
    text = GraphonDocument.from_graphon(graphon, name=name).to_json(indent=2)
    if hasattr(path_or_fp, 'write'):
        path_or_fp.write(text + '\n')
    else:
        with open(path_or_fp, 'w') as fp:
            fp.write(text + '\n')

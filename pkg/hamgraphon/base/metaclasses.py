from hamgraphon.base.fields import BaseField

__all__ = ('DocumentMetaclass',)


class DocumentMetaclass(type):
    """Collects the fields of a document class and its bases in declaration
    order, and merges the ``meta`` options with the class's own last.
    """

    def __new__(cls, name, bases, attrs):
        meta, fields = {}, {}
        for base in reversed(cls._document_bases(bases)):
            meta.update(getattr(base, '_meta', {}))
            fields.update(getattr(base, '_fields', {}))
        meta.update(attrs.pop('meta', {}))

        for attr_name, attr_value in attrs.items():
            if isinstance(attr_value, BaseField):
                attr_value.name = attr_name
                fields[attr_name] = attr_value

        attrs['_meta'] = meta
        attrs['_fields'] = fields
        attrs['_fields_ordered'] = tuple(
            field.name for field in sorted(fields.values(),
                                           key=lambda f: f.creation_counter))
        attrs['_class_name'] = name
        return super(DocumentMetaclass, cls).__new__(cls, name, bases, attrs)

    @staticmethod
    def _document_bases(bases):
        """Every ancestor in resolution order, ``object`` left out."""
        found = []
        for base in bases:
            for ancestor in base.__mro__:
                if ancestor is not object and ancestor not in found:
                    found.append(ancestor)
        return found

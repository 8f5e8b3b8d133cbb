from fractions import Fraction

from hamgraphon.base import BaseField, ComplexBaseField
from hamgraphon.common import _import_class
from hamgraphon.errors import ValidationError
from hamgraphon.graphon import to_rational

__all__ = ['StringField', 'IntField', 'FloatField', 'BooleanField',
           'RationalField', 'ListField', 'GraphonField']


class StringField(BaseField):
    """A unicode string field.
    """

    def __init__(self, max_length=None, min_length=None, **kwargs):
        self.max_length = max_length
        self.min_length = min_length
        super(StringField, self).__init__(**kwargs)

    def validate(self, value):
        if not isinstance(value, str):
            self.error('StringField only accepts string values')

        if self.max_length is not None and len(value) > self.max_length:
            self.error('String value is too long')

        if self.min_length is not None and len(value) < self.min_length:
            self.error('String value is too short')


class IntField(BaseField):
    """An integer field.
    """

    def __init__(self, min_value=None, max_value=None, **kwargs):
        self.min_value, self.max_value = min_value, max_value
        super(IntField, self).__init__(**kwargs)

    def to_python(self, value):
        if value is None:
            return value
        if isinstance(value, bool):
            raise ValueError('%r is not an integer' % value)
        if isinstance(value, float) and not value.is_integer():
            raise ValueError('%r is not an integer' % value)
        return int(value)

    def from_python(self, value):
        if value is None or isinstance(value, bool):
            return super(IntField, self).from_python(value)
        try:
            return int(value)
        except (TypeError, ValueError):
            return value

    def validate(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            self.error('%s could not be converted to int' % (value,))

        if self.min_value is not None and value < self.min_value:
            self.error('Integer value is too small')

        if self.max_value is not None and value > self.max_value:
            self.error('Integer value is too large')


class FloatField(BaseField):
    """A floating point number field.
    """

    def __init__(self, min_value=None, max_value=None, **kwargs):
        self.min_value, self.max_value = min_value, max_value
        super(FloatField, self).__init__(**kwargs)

    def validate(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if not isinstance(value, float):
            self.error('FloatField only accepts float values')

        if self.min_value is not None and value < self.min_value:
            self.error('Float value is too small')

        if self.max_value is not None and value > self.max_value:
            self.error('Float value is too large')


class BooleanField(BaseField):
    """A boolean field type.
    """

    def validate(self, value):
        if not isinstance(value, bool):
            self.error('BooleanField only accepts boolean values')


class RationalField(BaseField):
    """An exact rational number field.

    Accepts fraction strings (``"9/16"``), decimal strings (``"0.5625"``),
    integers and :class:`~fractions.Fraction` values; decimal strings are
    read exactly, so ``"0.2"`` is ``1/5``.  Values are written back as
    lowest-terms fraction strings.
    """

    def __init__(self, min_value=None, max_value=None, **kwargs):
        self.min_value = None if min_value is None else Fraction(min_value)
        self.max_value = None if max_value is None else Fraction(max_value)
        super(RationalField, self).__init__(**kwargs)

    def to_python(self, value):
        if value is None:
            return value
        return to_rational(value)

    def to_json(self, value):
        if value is None:
            return value
        return str(value)

    def from_python(self, value):
        if value is None:
            return self.get_default()
        try:
            return to_rational(value)
        except ValidationError:
            return value

    def validate(self, value):
        if not isinstance(value, Fraction):
            self.error('%r is not a rational number' % (value,))

        if self.min_value is not None and value < self.min_value:
            self.error('Rational value %s is below %s' % (value, self.min_value))

        if self.max_value is not None and value > self.max_value:
            self.error('Rational value %s is above %s' % (value, self.max_value))


class ListField(ComplexBaseField):
    """A list field that wraps a standard field, allowing multiple instances
    of the field to be used as a list.

    You can add validation to each list item by specifying the `field`
    argument. For example, ListField(IntField()) will ensure that all the
    items are integers.

    .. note::
        Required means it cannot be empty - as the default for ListFields is []
    """

    def __init__(self, field=None, min_length=None, max_length=None, **kwargs):
        self.field = field
        self.min_length = min_length
        self.max_length = max_length
        kwargs.setdefault('default', lambda: [])
        super(ListField, self).__init__(**kwargs)

    def to_python(self, value):
        if value is not None and not isinstance(value, (list, tuple)):
            raise ValueError('expected a list, got %r' % (value,))
        return super(ListField, self).to_python(value)

    def validate(self, value):
        """Make sure that a list of valid fields is being used.
        """
        if not isinstance(value, (list, tuple)):
            self.error('Only lists and tuples may be used in a list field')

        if self.min_length is not None and len(value) < self.min_length:
            self.error('ListField needs at least %d items' % self.min_length)

        if self.max_length is not None and len(value) > self.max_length:
            self.error('ListField max length is exceeded')

        super(ListField, self).validate(value)


class GraphonField(BaseField):
    """Holds a :class:`~hamgraphon.graphon.StepGraphon`, serialised with the
    graphon file format.
    """

    def to_python(self, value):
        if value is None:
            return value
        GraphonDocument = _import_class('GraphonDocument')
        return GraphonDocument.from_json(value).to_graphon()

    def to_json(self, value):
        if value is None:
            return value
        GraphonDocument = _import_class('GraphonDocument')
        return GraphonDocument.from_graphon(value).to_json_dict()

    def validate(self, value):
        StepGraphon = _import_class('StepGraphon')
        if not isinstance(value, StepGraphon):
            self.error('GraphonField only accepts step-graphons')

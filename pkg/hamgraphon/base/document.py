import json

from hamgraphon.errors import ValidationError

__all__ = ('BaseDocument', 'NON_FIELD_ERRORS')

NON_FIELD_ERRORS = '__all__'

_set = object.__setattr__


class BaseDocument(object):

    def __init__(self, **values):
        """
        Initialise a document

        :param values: A dictionary of values for the document
        """
        _set(self, '_data', {})
        for name in self._fields_ordered:
            if name in values:
                setattr(self, name, values[name])

    def __iter__(self):
        return iter(self._fields_ordered)

    def __getitem__(self, name):
        """Dictionary-style field access, return a field's value if present.
        """
        if name in self._fields:
            return getattr(self, name)
        raise KeyError(name)

    def __setitem__(self, name, value):
        """Dictionary-style field access, set a field's value.
        """
        # Ensure that the field exists before settings its value
        if name not in self._fields:
            raise KeyError(name)
        return setattr(self, name, value)

    def __contains__(self, name):
        try:
            val = getattr(self, name)
            return val is not None
        except AttributeError:
            return False

    def __repr__(self):
        return '<%s: %s>' % (self.__class__.__name__, self)

    def __str__(self):
        return '%s object' % self.__class__.__name__

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def clean(self):
        """
        Hook for doing document level data cleaning before validation is run.

        Any ValidationError raised by this method will not be associated with
        a particular field; it will have a special-case association with the
        field defined by NON_FIELD_ERRORS.
        """
        pass

    def to_dict(self):
        return dict((name, getattr(self, name)) for name in self._fields_ordered)

    def to_json_dict(self):
        """Return the document as JSON-compatible python data."""
        data = {}
        for name in self._fields_ordered:
            value = getattr(self, name)
            if value is None and not self._meta.get('emit_nulls', True):
                continue
            data[name] = self._fields[name].to_json(value)
        return data

    def validate(self, clean=True):
        """Ensure that all fields' values are valid and that required fields
        are present.
        """
        # Ensure that each field is matched to a valid value
        errors = {}
        if clean:
            try:
                self.clean()
            except ValidationError as error:
                errors[NON_FIELD_ERRORS] = error

        for name in self._fields_ordered:
            field = self._fields[name]
            value = getattr(self, name)
            if value is not None:
                try:
                    field._validate(value)
                except ValidationError as error:
                    errors[field.name] = error.errors or error
                except (ValueError, AttributeError, AssertionError, TypeError) as error:
                    errors[field.name] = error
            elif field.required:
                errors[field.name] = ValidationError('Field is required',
                                                     field_name=field.name)

        if errors:
            message = "ValidationError (%s) " % self._class_name
            raise ValidationError(message, errors=errors)

    def to_json(self, **kwargs):
        """Converts a document to JSON"""
        return json.dumps(self.to_json_dict(), **kwargs)

    @classmethod
    def from_json(cls, json_data):
        """Converts json data (a string or already decoded data) to a
        document instance.  Unknown keys and values that cannot be converted
        raise :class:`~hamgraphon.errors.ValidationError`.
        """
        if isinstance(json_data, (str, bytes)):
            json_data = json.loads(json_data)
        return cls._from_json_dict(json_data)

    @classmethod
    def _from_json_dict(cls, data):
        if not isinstance(data, dict):
            raise ValidationError('ValidationError (%s) expected a JSON object'
                                  % cls._class_name)
        errors = {}
        unknown = [key for key in data if key not in cls._fields]
        if unknown and cls._meta.get('strict', True):
            for key in unknown:
                errors[key] = ValidationError('Unknown field', field_name=key)

        values = {}
        for name, field in cls._fields.items():
            if name not in data:
                continue
            try:
                values[name] = field.to_python(data[name])
            except ValidationError as error:
                errors[name] = error.errors or error
            except (ValueError, TypeError, ZeroDivisionError) as error:
                errors[name] = error

        if errors:
            message = "ValidationError (%s) " % cls._class_name
            raise ValidationError(message, errors=errors)
        return cls(**values)

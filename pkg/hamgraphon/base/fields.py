from hamgraphon.errors import ValidationError

__all__ = ("BaseField", "ComplexBaseField")


class BaseField(object):
    """A base class for fields in a document. Instances of this class
    may be added to subclasses of `Document` to define a document's schema.
    """

    name = None

    # Tracks each time a Field instance is created. Used to retain order.
    creation_counter = 0

    def __init__(self, required=False, default=None, validation=None,
                 choices=None):
        """
        :param required: If the field is required. Whether it has to have a
            value or not. Defaults to False.
        :param default: (optional) The default value for this field if no value
            has been set (or if the value has been unset).  It Can be a
            callable.
        :param validation: (optional) A callable to validate the value of the
            field.
        :param choices: (optional) The valid choices
        """
        self.name = None  # filled in by document
        self.required = required
        self.default = default
        self.validation = validation
        self.choices = choices

        self.creation_counter = BaseField.creation_counter
        BaseField.creation_counter += 1

    def __get__(self, instance, owner):
        if instance is None:
            # Document class being used rather than a document object
            return self
        data = instance._data
        if self.name not in data:
            data[self.name] = self.get_default()
        return data[self.name]

    def __set__(self, instance, value):
        """Descriptor for assigning a value to a field in a document.
        """
        instance._data[self.name] = self.from_python(value)

    def get_default(self):
        return self.default() if callable(self.default) else self.default

    def error(self, message="", errors=None, field_name=None):
        """Raises a ValidationError.
        """
        field_name = field_name if field_name else self.name
        raise ValidationError(message, errors=errors, field_name=field_name)

    def to_python(self, value):
        """Convert a JSON-compatible value to a Python type.
        """
        return value

    def to_json(self, value):
        """Convert a Python type to a JSON-compatible value.
        """
        return value

    def from_python(self, value):
        """Convert a raw Python value (in an assignment) to the internal
        Python representation.
        """
        if value is None:
            return self.get_default()
        return value

    def validate(self, value):
        """Perform validation on a value.
        """
        pass

    def _validate(self, value):
        # check choices
        if self.choices:
            if isinstance(self.choices[0], (list, tuple)):
                option_keys = [k for k, v in self.choices]
                if value not in option_keys:
                    self.error('Value must be one of %s' % str(option_keys))
            elif value not in self.choices:
                self.error('Value must be one of %s' % str(self.choices))

        # check validation argument
        if self.validation is not None:
            if callable(self.validation):
                if not self.validation(value):
                    self.error('Value does not match custom validation method')
            else:
                raise ValueError('validation argument for "%s" must be a '
                                 'callable.' % self.name)

        self.validate(value)


class ComplexBaseField(BaseField):
    """Handles lists of values, each of which is handled by the wrapped
    ``field``.  Errors are collected per index.
    """

    field = None

    def to_python(self, value):
        if value is None:
            return None
        if self.field is None:
            return list(value)
        return [self.field.to_python(item) for item in value]

    def to_json(self, value):
        if value is None:
            return None
        if self.field is None:
            return list(value)
        return [self.field.to_json(item) for item in value]

    def from_python(self, value):
        if value is None:
            return self.get_default()
        if self.field is None or isinstance(value, str):
            return value
        try:
            items = list(value)
        except TypeError:
            return value
        return [self.field.from_python(item) for item in items]

    def validate(self, value):
        """If field is provided ensure the value is valid.
        """
        errors = {}
        if self.field:
            for index, item in enumerate(value):
                try:
                    self.field._validate(item)
                except ValidationError as error:
                    errors[index] = error.errors or error
                except (ValueError, AssertionError, TypeError) as error:
                    errors[index] = error

            if errors:
                field_class = self.field.__class__.__name__
                self.error('Invalid %s item (%s)' % (field_class, value),
                           errors=errors)
        # Don't allow empty values if required
        if self.required and not value:
            self.error('Field is required and cannot be empty')

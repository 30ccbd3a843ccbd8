import collections
import difflib


def _did_you_mean(name, choices):
    """Closest known key to a misspelled ``name``, if any is close."""
    matches = difflib.get_close_matches(name.lower(), list(choices), n=1)
    return matches[0] if matches else None


class ConfigSchema(collections.OrderedDict):

    """The keys of one config section and the type of each value.

    Keys are added by item assignment, e.g.
    ``schema["iterations"] = types.Integer(minimum=1)``. Keys are kept in
    assignment order, which is also the order :func:`leaguerank.config.format`
    prints them in.
    """

    def __init__(self, name):
        super().__init__()
        self.name = name

    def _unknown(self, key):
        message = "unknown config key."
        suggestion = _did_you_mean(key, self.keys())
        if suggestion:
            message += f" Did you mean {suggestion!r}?"
        return message

    def deserialize(self, values):
        """Validate the raw strings in ``values``.

        Returns ``(result, errors)``. Every schema key appears in ``result``,
        as :class:`None` when it is missing or invalid; ``errors`` maps the
        offending keys to messages.
        """
        result = dict.fromkeys(self.keys())
        errors = {}

        for key, raw in values.items():
            if key not in self:
                errors[key] = self._unknown(key)
                continue
            try:
                result[key] = self[key].deserialize(raw)
            except ValueError as e:
                errors[key] = str(e)

        for key in self.keys():
            if key not in values:
                errors[key] = "config key not found."

        return result, errors

    def serialize(self, values, display=False):
        """Render validated ``values`` as strings, in schema order."""
        return collections.OrderedDict(
            (key, value_type.serialize(values[key], display))
            for key, value_type in self.items()
            if key in values
        )


class MapConfigSchema:

    """Section whose keys are free-form and share one value type.

    Used for ``[loglevels]``, where the keys are logger names.
    """

    def __init__(self, name, value_type):
        self.name = name
        self._value_type = value_type

    def deserialize(self, values):
        result = {}
        errors = {}
        for key, raw in values.items():
            try:
                result[key] = self._value_type.deserialize(raw)
            except ValueError as e:
                result[key] = None
                errors[key] = str(e)
        return result, errors

    def serialize(self, values, display=False):
        return collections.OrderedDict(
            (key, self._value_type.serialize(values[key], display))
            for key in sorted(values)
        )

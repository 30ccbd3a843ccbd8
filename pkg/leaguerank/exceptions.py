class LeaguerankException(Exception):  # noqa: N818
    def __init__(self, message, *args, **kwargs):
        super().__init__(message, *args, **kwargs)
        self._message = message

    @property
    def message(self):
        return self._message

    @message.setter  # noqa
    def message(self, message):
        self._message = message


class ProfileError(LeaguerankException):
    pass


class IngestError(LeaguerankException):
    def __init__(self, message, row=None):
        super().__init__(message, row)
        self.row = row


class SimulationError(LeaguerankException):
    pass


class ReportError(LeaguerankException):
    """Error that ends a report run with a specific process exit status."""

    def __init__(self, message, exit_code=1):
        super().__init__(message, exit_code)
        self.exit_code = exit_code


class ValidationError(ValueError):
    pass

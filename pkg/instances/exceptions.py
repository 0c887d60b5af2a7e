"""Instance generation and parsing errors"""

from django.core.exceptions import ValidationError


class InstanceError(ValidationError):
    default_code = 'invalid_instance'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)


class InvalidInstanceSpec(InstanceError):
    default_code = 'invalid_spec'


class InfeasibleDensity(InvalidInstanceSpec):
    default_code = 'infeasible_density'


class InstanceParseError(InstanceError):
    default_code = 'parse_error'

    def __init__(self, message, line_number):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}", params={'line': line_number})

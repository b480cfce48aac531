class FourierCltError(Exception):
    pass


class DomainError(FourierCltError):
    pass


class ConfigError(FourierCltError):
    pass


class EvaluatorError(FourierCltError):
    pass


class BoundUnavailableError(FourierCltError):
    pass


class UsageError(FourierCltError):
    pass

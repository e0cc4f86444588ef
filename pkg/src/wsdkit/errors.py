"""Exception hierarchy shared by the loaders, models and the CLI."""


class WsdError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(WsdError):
    """Invalid run configuration (unknown keys, bad values, missing paths)."""


class DataError(WsdError):
    """Input data violates one of the file formats or type invariants."""


class ParseError(DataError):
    def __init__(self, path, lineno, message):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{self.path}:{lineno}: {message}")


class TaxonomyCycleError(DataError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("cycle in taxonomy: " + " -> ".join(self.cycle))


class ModelError(WsdError):
    """A trained model is used inconsistently (e.g. extractor-set mismatch)."""

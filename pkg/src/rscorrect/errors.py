"""Exception types shared across the toolkit.

Each carries the process exit code the CLI maps it to.
"""


class ConfigError(Exception):
    """Invalid or inconsistent configuration."""

    exit_code = 2


class ContractViolation(Exception):
    """An operation was invoked outside its documented contract."""

    exit_code = 3


class NumericAbort(Exception):
    """Training produced a non-finite loss."""

    exit_code = 4


class SimulationError(ConfigError):
    """The simulation left its valid domain (canvas margin exceeded or the
    row-landing solve failed to converge). Always traceable to a config that
    allows too-aggressive motion, hence a config error."""

"""Exception hierarchy.

CLI exit codes distinguish configuration problems (ConfigError) from
computation failures (everything else derived from RydcpError).
"""


class RydcpError(Exception):
    """Base class for all package errors."""


class InvalidStateError(RydcpError):
    """A quantum state is inconsistent with the quantum-defect table."""


class IntegrationFailureError(RydcpError):
    """The radial integration diverged before the inner cutoff."""


class GridOverlapError(RydcpError):
    """Two radial wavefunctions share too little grid to integrate over."""


class QuadratureError(RydcpError):
    """An adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message, achieved=None, requested=None):
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class SingularChannelError(RydcpError):
    """A transition channel with zero frequency entered a polarizability sum."""


class ConvergenceError(RydcpError):
    """A truncated summation did not meet its tail threshold."""


class EmptyChannelsError(RydcpError):
    """Channel enumeration produced no transition channels."""


class UndefinedShareError(RydcpError):
    """Relative contributions are undefined because the total shift is zero."""


class ConfigError(RydcpError):
    """A run configuration failed validation."""

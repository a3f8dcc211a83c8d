"""Exception hierarchy shared across the engine.

Every error carries an ``error_class`` used by the service layer and the
CLI to map failures onto stable exit codes / HTTP payloads:

    parse      -> 2   design text could not be parsed or elaborated
    config     -> 3   bad campaign configuration (unknown signal, bad mode, ...)
    simulation -> 4   stimulus or simulation-level failure
    internal   -> 5   anything else
"""

from __future__ import annotations


class FaultsliceError(Exception):
    error_class = "internal"


class DesignError(FaultsliceError):
    """Raised when design text fails to lex, parse, or elaborate.

    Carries the full list of diagnostics; ``str()`` renders them one per line.
    """

    error_class = "parse"

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(d.render() for d in self.diagnostics))


class ConfigError(FaultsliceError):
    error_class = "config"


class SimulationError(FaultsliceError):
    error_class = "simulation"

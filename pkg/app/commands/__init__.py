"""CLI command modules for the Bessel-Struve toolkit."""

from app.commands import kernel, scan, transform, verify, weyl

COMMANDS = (kernel, transform, weyl, verify, scan)

__all__ = ['COMMANDS']

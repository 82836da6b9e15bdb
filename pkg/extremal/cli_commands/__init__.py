"""Typer command groups behind the ``extremal`` entry point."""

"""Command-line entry points for the VQE engine."""

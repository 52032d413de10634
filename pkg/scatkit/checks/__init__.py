"""Check engine."""

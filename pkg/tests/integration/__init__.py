"""CLI tests through src.main.run."""

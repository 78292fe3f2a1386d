"""Unit tests for the fusionkk library modules."""

"""fusionkk test suite."""

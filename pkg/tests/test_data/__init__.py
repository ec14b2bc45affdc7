"""Reference data tests."""

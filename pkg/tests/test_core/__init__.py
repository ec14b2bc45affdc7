"""Numerical core tests."""

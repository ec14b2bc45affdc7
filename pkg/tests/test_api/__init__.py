"""HTTP service tests."""

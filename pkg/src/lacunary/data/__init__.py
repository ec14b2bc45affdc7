"""Published reference tables."""

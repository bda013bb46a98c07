"""Settings module initialization."""

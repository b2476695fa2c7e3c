"""JSON writers."""
